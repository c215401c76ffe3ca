#include "smx/axioms.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "smx/errors.hpp"
#include "smx/eval.hpp"
#include "smx/syntax.hpp"

namespace smx {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_finitely_checkable: return "not finitely checkable";
  }
  return "unknown";
}

bool AxiomReport::all_checkable_pass() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomOutcome& r) {
    return r.verdict != Verdict::fail;
  });
}

const AxiomOutcome* AxiomReport::find(const std::string& axiom) const {
  for (const AxiomOutcome& r : results) {
    if (r.axiom == axiom) return &r;
  }
  return nullptr;
}

namespace {

// Each check walks the carrier and returns a rendered counterexample for
// the first violation, or nothing when the bounded instance holds.
using Counterexample = std::optional<std::string>;

struct Carrier {
  const UniverseSpec& bounds;
  const std::vector<Value>& values;
  std::vector<Value> sets;      // set-kind values, carrier order
  std::vector<Value> matrices;  // matrix-kind values, carrier order

  Carrier(const UniverseSpec& u, const std::vector<Value>& vs)
      : bounds(u), values(vs) {
    for (const Value& v : vs) {
      (v.is_set() ? sets : matrices).push_back(v);
    }
  }
};

using MatrixBuilder =
    std::function<Value(std::size_t, std::size_t, std::vector<Value>)>;

// For all tuples of the given length over `pool`, until fn asks to stop by
// returning a counterexample.
Counterexample scan_tuples(
    const std::vector<Value>& pool, std::size_t len,
    const std::function<Counterexample(const std::vector<Value>&)>& fn) {
  if (pool.empty()) return std::nullopt;
  std::vector<std::size_t> idx(len, 0);
  std::vector<Value> tuple(len, Value());
  while (true) {
    for (std::size_t i = 0; i < len; ++i) tuple[i] = pool[idx[i]];
    if (auto cx = fn(tuple)) return cx;
    std::size_t k = len;
    while (k > 0 && ++idx[k - 1] == pool.size()) {
      idx[k - 1] = 0;
      --k;
    }
    if (k == 0) return std::nullopt;
  }
}

Counterexample check_set_matrix_scheme(const Carrier& c,
                                       const MatrixBuilder& build) {
  // Every dimension pair within bounds admits a matrix over any carrier
  // sets, and the construction preserves dimensions and entries.
  for (std::size_t m = 1; m <= c.bounds.matrix_dim_bound; ++m) {
    for (std::size_t n = 1; n <= c.bounds.matrix_dim_bound; ++n) {
      if (m * n < 2) continue;
      auto cx = scan_tuples(
          c.sets, m * n, [&](const std::vector<Value>& entries) -> Counterexample {
            Value a = build(m, n, entries);
            if (!a.is_matrix() || a.rows() != m || a.cols() != n) {
              return "no " + std::to_string(m) + "x" + std::to_string(n) +
                     " matrix over given entries";
            }
            for (std::size_t i = 0; i < entries.size(); ++i) {
              if (!values_equal(a.entries()[i], entries[i])) {
                return "entry " + std::to_string(i) + " of " + render(a) +
                       " differs from " + render(entries[i]);
              }
            }
            return std::nullopt;
          });
      if (cx) return cx;
    }
  }
  return std::nullopt;
}

Counterexample check_reduction(const Carrier& c, const MatrixBuilder& build) {
  for (const Value& x : c.sets) {
    Value wrapped = build(1, 1, {x});
    if (!values_equal(wrapped, x)) {
      return render(wrapped) + " != " + render(x);
    }
  }
  return std::nullopt;
}

Counterexample check_omission(const Carrier& c, const MatrixBuilder& build) {
  for (const Value& m : c.matrices) {
    Value wrapped = build(1, 1, {m});
    if (!values_equal(wrapped, m)) {
      return render(wrapped) + " != " + render(m);
    }
  }
  return std::nullopt;
}

Counterexample check_epsilon(const Carrier& c) {
  for (const Value& m : c.matrices) {
    for (const Value& a : c.values) {
      if (member(a, m)) {
        return render(a) + " in " + render(m);
      }
    }
  }
  return std::nullopt;
}

Counterexample check_division(const Carrier& c) {
  for (const Value& a : c.values) {
    for (const Value& b : c.values) {
      if (!(shape_of(a) == shape_of(b)) && values_equal(a, b)) {
        return render(a) + " = " + render(b) + " despite different shapes";
      }
    }
  }
  return std::nullopt;
}

Counterexample check_matrix_extensionality(const Carrier& c) {
  for (const Value& a : c.matrices) {
    for (const Value& b : c.matrices) {
      if (a.rows() != b.rows() || a.cols() != b.cols()) continue;
      bool entrywise = true;
      for (std::size_t i = 0; i < a.entries().size(); ++i) {
        if (!values_equal(a.entries()[i], b.entries()[i])) {
          entrywise = false;
          break;
        }
      }
      if (entrywise != values_equal(a, b)) {
        return render(a) + " vs " + render(b) +
               ": entrywise equality and value equality disagree";
      }
    }
  }
  return std::nullopt;
}

Counterexample check_set_extensionality(const Carrier& c) {
  for (const Value& x : c.sets) {
    for (const Value& y : c.sets) {
      const bool mutual = subset(x, y) && subset(y, x);
      if (mutual != values_equal(x, y)) {
        return render(x) + " vs " + render(y) +
               ": mutual inclusion and equality disagree";
      }
    }
  }
  return std::nullopt;
}

Counterexample check_emptiness(const Carrier& c) {
  // Existence of a set with no members, and its uniqueness among sets;
  // matrices are member-free too, but they are not sets.
  std::size_t empties = 0;
  for (const Value& x : c.sets) {
    bool has_member = false;
    for (const Value& a : c.values) {
      if (member(a, x)) {
        has_member = true;
        break;
      }
    }
    if (!has_member) ++empties;
  }
  if (empties == 1) return std::nullopt;
  return "found " + std::to_string(empties) + " member-free sets, expected 1";
}

Counterexample check_separation_instance(const Carrier& c, const Formula& phi,
                                         const EvalContext& ctx) {
  for (const Value& x : c.sets) {
    Value y = separation(x, phi, "a", {}, ctx);
    if (!subset(y, x)) {
      return render(y) + " is not a subset of " + render(x);
    }
    for (const Value& b : c.values) {
      Env env{{"a", b}};
      const bool selected = member(b, x) && eval_formula(phi, env, ctx);
      if (selected != member(b, y)) {
        return "element " + render(b) + " of " + render(x) +
               " selected inconsistently";
      }
    }
  }
  return std::nullopt;
}

Counterexample check_pair(const Carrier& c) {
  for (const Value& a : c.values) {
    for (const Value& b : c.values) {
      Value p = pair(a, b);
      for (const Value& g : c.values) {
        const bool expect = values_equal(g, a) || values_equal(g, b);
        if (member(g, p) != expect) {
          return "pair(" + render(a) + ", " + render(b) +
                 ") misclassifies " + render(g);
        }
      }
    }
  }
  return std::nullopt;
}

Counterexample check_set_of_matrices(const Carrier& c,
                                     const MatrixBuilder& build,
                                     std::size_t cap) {
  for (const Value& x : c.sets) {
    for (std::size_t m = 1; m <= c.bounds.matrix_dim_bound; ++m) {
      for (std::size_t n = 1; n <= c.bounds.matrix_dim_bound; ++n) {
        if (m * n < 2) continue;
        Value y = set_of_matrices(m, n, x, cap);
        // Everything in y is an m-by-n matrix over x.
        for (const Value& b : y.elements()) {
          if (!b.is_matrix() || b.rows() != m || b.cols() != n) {
            return render(b) + " in matset(" + std::to_string(m) + "," +
                   std::to_string(n) + "," + render(x) + ") has wrong shape";
          }
          for (const Value& e : b.entries()) {
            if (!member(e, x)) {
              return "entry " + render(e) + " of " + render(b) +
                     " is not in " + render(x);
            }
          }
        }
        // Every matrix over x is in y.
        auto cx = scan_tuples(
            x.elements(), m * n,
            [&](const std::vector<Value>& entries) -> Counterexample {
              Value b = build(m, n, entries);
              if (!member(b, y)) {
                return render(b) + " missing from matset over " + render(x);
              }
              return std::nullopt;
            });
        if (cx) return cx;
      }
    }
  }
  return std::nullopt;
}

Counterexample check_sum_set(const Carrier& c) {
  for (const Value& x : c.sets) {
    const bool all_sets =
        std::all_of(x.elements().begin(), x.elements().end(),
                    [](const Value& e) { return e.is_set(); });
    if (!all_sets) {
      // Outside the guard the operation must refuse, not improvise.
      try {
        union_family(x);
        return "union(" + render(x) + ") accepted a matrix element";
      } catch (const GuardError&) {
        continue;
      }
    }
    Value y = union_family(x);
    for (const Value& b : c.values) {
      bool in_some = false;
      for (const Value& z : x.elements()) {
        if (member(b, z)) {
          in_some = true;
          break;
        }
      }
      if (in_some != member(b, y)) {
        return "union(" + render(x) + ") misclassifies " + render(b);
      }
    }
  }
  return std::nullopt;
}

Counterexample check_power_set(const Carrier& c, std::size_t cap) {
  for (const Value& x : c.sets) {
    Value y = power_set(x, cap);
    for (const Value& a : y.elements()) {
      if (!a.is_set() || !subset(a, x)) {
        return render(a) + " in pow(" + render(x) + ") is not a subset";
      }
    }
    for (const Value& z : c.sets) {
      if (subset(z, x) != member(z, y)) {
        return "pow(" + render(x) + ") misclassifies " + render(z);
      }
    }
    if (x.size() < 63 && y.size() != (std::size_t{1} << x.size())) {
      return "pow(" + render(x) + ") has " + std::to_string(y.size()) +
             " members";
    }
  }
  return std::nullopt;
}

Counterexample check_substitution_instance(const Carrier& c,
                                           const Formula& phi,
                                           const EvalContext& ctx) {
  // Bounded instance of the image axiom for the fixed relation
  // phi(a, b). The axiom is conditional on functionality, so sets where
  // some element has no witness inside the carrier are vacuous; several
  // witnesses would contradict functionality of the representative
  // relation and count as a failure.
  for (const Value& x : c.sets) {
    bool vacuous = false;
    for (const Value& a : x.elements()) {
      std::size_t hits = 0;
      for (const Value& b : c.values) {
        Env env{{"a", a}, {"b", b}};
        if (eval_formula(phi, env, ctx)) ++hits;
      }
      if (hits > 1) {
        return "several witnesses for " + render(a);
      }
      if (hits == 0) {
        vacuous = true;
        break;
      }
    }
    if (vacuous) continue;
    Value y = replacement(x, phi, "a", "b", {}, ctx);
    for (const Value& b : c.values) {
      bool expect = false;
      for (const Value& a : x.elements()) {
        Env env{{"a", a}, {"b", b}};
        if (eval_formula(phi, env, ctx)) {
          expect = true;
          break;
        }
      }
      if (expect != member(b, y)) {
        return "image of " + render(x) + " misclassifies " + render(b);
      }
    }
  }
  return std::nullopt;
}

Counterexample check_foundation(const Carrier& c) {
  for (const Value& x : c.sets) {
    if (x.size() == 0) continue;
    const bool all_sets =
        std::all_of(x.elements().begin(), x.elements().end(),
                    [](const Value& e) { return e.is_set(); });
    if (!all_sets) continue;  // witness search is defined over set families
    Value z = foundation_witness(x);
    if (!member(z, x)) {
      return "witness " + render(z) + " is not in " + render(x);
    }
    for (const Value& w : z.elements()) {
      if (member(w, x)) {
        return "witness " + render(z) + " shares " + render(w) + " with " +
               render(x);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

AxiomReport run_axiom_suite(const UniverseSpec& u, std::size_t cap,
                            const AxiomHooks& hooks) {
  AxiomReport report;
  report.bounds = u;
  const std::vector<Value> values = generate_universe(u, cap);
  report.universe_size = values.size();
  const Carrier carrier(u, values);
  const MatrixBuilder build =
      hooks.make_matrix
          ? hooks.make_matrix
          : [](std::size_t m, std::size_t n, std::vector<Value> entries) {
              return mk_matrix(m, n, std::move(entries));
            };
  EvalContext ctx;
  ctx.cap = cap;
  ctx.universe = &values;

  // Representative formula instances for the two axiom schemes.
  const FormulaPtr phi_empty = parse_formula("forall b in a (false)");
  const FormulaPtr phi_no_self = parse_formula("not a in a");
  const FormulaPtr phi_singleton = parse_formula("b = {a}");

  auto add = [&report](const std::string& name, Counterexample cx) {
    AxiomOutcome out;
    out.axiom = name;
    out.verdict = cx ? Verdict::fail : Verdict::pass;
    if (cx) out.counterexample = *cx;
    report.results.push_back(std::move(out));
  };

  add("set-matrix", check_set_matrix_scheme(carrier, build));
  add("reduction", check_reduction(carrier, build));
  add("omission", check_omission(carrier, build));
  add("epsilon", check_epsilon(carrier));
  add("division", check_division(carrier));
  add("extensionality-matrices", check_matrix_extensionality(carrier));
  add("extensionality-sets", check_set_extensionality(carrier));
  add("emptiness", check_emptiness(carrier));
  add("separation[is-empty]",
      check_separation_instance(carrier, *phi_empty, ctx));
  add("separation[no-self-member]",
      check_separation_instance(carrier, *phi_no_self, ctx));
  add("pair", check_pair(carrier));
  add("sum-set", check_sum_set(carrier));
  add("power-set", check_power_set(carrier, cap));
  add("set-of-matrices", check_set_of_matrices(carrier, build, cap));
  report.results.push_back(
      {"infinity", Verdict::not_finitely_checkable, ""});
  add("substitution[singleton-image]",
      check_substitution_instance(carrier, *phi_singleton, ctx));
  add("foundation", check_foundation(carrier));
  return report;
}

std::string format_report(const AxiomReport& report) {
  std::ostringstream out;
  out << "axiom suite: rank<=" << report.bounds.rank_bound << " width<="
      << report.bounds.set_width_bound << " dims<="
      << report.bounds.matrix_dim_bound << " nest<="
      << report.bounds.nest_depth_bound << " (" << report.universe_size
      << " values)\n";
  std::size_t width = 0;
  for (const AxiomOutcome& r : report.results) {
    width = std::max(width, r.axiom.size());
  }
  for (const AxiomOutcome& r : report.results) {
    out << "  " << r.axiom << std::string(width - r.axiom.size() + 2, ' ')
        << verdict_name(r.verdict);
    if (!r.counterexample.empty()) out << "  (" << r.counterexample << ")";
    out << "\n";
  }
  out << (report.all_checkable_pass() ? "result: pass" : "result: fail")
      << "\n";
  return out.str();
}

}  // namespace smx
