#include "smx/json_io.hpp"

#include <utility>
#include <vector>

#include "smx/errors.hpp"

namespace smx {

nlohmann::json value_to_json(const Value& v) {
  if (v.is_set()) {
    nlohmann::json elems = nlohmann::json::array();
    for (const Value& e : v.elements()) {
      elems.push_back(value_to_json(e));
    }
    return nlohmann::json{{"set", std::move(elems)}};
  }
  nlohmann::json entries = nlohmann::json::array();
  for (const Value& e : v.entries()) {
    entries.push_back(value_to_json(e));
  }
  return nlohmann::json{
      {"matrix",
       {{"rows", v.rows()}, {"cols", v.cols()}, {"entries", std::move(entries)}}}};
}

Value value_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw ConstructionError(
        "json value must be an object with a single 'set' or 'matrix' key");
  }
  if (j.contains("set")) {
    const auto& elems = j.at("set");
    if (!elems.is_array()) {
      throw ConstructionError("json 'set' must hold an array");
    }
    std::vector<Value> items;
    items.reserve(elems.size());
    for (const auto& e : elems) {
      items.push_back(value_from_json(e));
    }
    return mk_set(std::move(items));
  }
  if (j.contains("matrix")) {
    const auto& m = j.at("matrix");
    if (!m.is_object() || !m.contains("rows") || !m.contains("cols") ||
        !m.contains("entries") || !m.at("entries").is_array() ||
        !m.at("rows").is_number_unsigned() ||
        !m.at("cols").is_number_unsigned()) {
      throw ConstructionError(
          "json 'matrix' needs unsigned 'rows'/'cols' and an 'entries' array");
    }
    std::vector<Value> entries;
    entries.reserve(m.at("entries").size());
    for (const auto& e : m.at("entries")) {
      entries.push_back(value_from_json(e));
    }
    return mk_matrix(m.at("rows").get<std::size_t>(),
                     m.at("cols").get<std::size_t>(), std::move(entries));
  }
  throw ConstructionError("json value key must be 'set' or 'matrix'");
}

std::string value_to_json_text(const Value& v) { return value_to_json(v).dump(); }

Value value_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr,
                                           /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw ConstructionError("invalid json");
  }
  return value_from_json(j);
}

namespace {

std::string verdict_slug(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_finitely_checkable: return "not-finitely-checkable";
  }
  return "unknown";
}

}  // namespace

nlohmann::json report_to_json(const AxiomReport& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const AxiomOutcome& r : report.results) {
    nlohmann::json entry{{"axiom", r.axiom},
                         {"verdict", verdict_slug(r.verdict)}};
    if (!r.counterexample.empty()) {
      entry["counterexample"] = r.counterexample;
    }
    results.push_back(std::move(entry));
  }
  return nlohmann::json{
      {"bounds",
       {{"rank", report.bounds.rank_bound},
        {"width", report.bounds.set_width_bound},
        {"dims", report.bounds.matrix_dim_bound},
        {"nest", report.bounds.nest_depth_bound}}},
      {"universe_size", report.universe_size},
      {"results", std::move(results)},
      {"all_pass", report.all_checkable_pass()}};
}

}  // namespace smx
