#include "smx/session.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "smx/axioms.hpp"
#include "smx/errors.hpp"
#include "smx/json_io.hpp"
#include "smx/syntax.hpp"

namespace smx {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool uses_universe(const Formula& f);

bool uses_universe(const FormulaPtr& f) { return f && uses_universe(*f); }

bool uses_universe(const Formula& f) {
  return std::visit(
      [](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Formula::ForallUniv> ||
                      std::is_same_v<T, Formula::ExistsUniv>) {
          return true;
        } else if constexpr (std::is_same_v<T, Formula::Not>) {
          return uses_universe(node.body);
        } else if constexpr (std::is_same_v<T, Formula::And> ||
                             std::is_same_v<T, Formula::Or> ||
                             std::is_same_v<T, Formula::Implies> ||
                             std::is_same_v<T, Formula::Iff>) {
          return uses_universe(node.lhs) || uses_universe(node.rhs);
        } else if constexpr (std::is_same_v<T, Formula::ForallIn> ||
                             std::is_same_v<T, Formula::ExistsIn>) {
          return uses_universe(node.body);
        } else {
          return false;
        }
      },
      f.node);
}

const char* kHelp =
    "commands:\n"
    "  <term>                evaluate and print a value\n"
    "  :let <name> = <term>  bind a name\n"
    "  :check <formula>      print true or false\n"
    "  :shape <term>         print the shape of a value\n"
    "  :json <term>          print a value as JSON\n"
    "  :axioms [R W D N]     run the axiom suite (rank/width/dims/nest)\n"
    "  :load <file>          run a script\n"
    "  :help                 this text\n"
    "  :quit                 leave\n";

}  // namespace

Session::Session(SessionConfig config) : config_(std::move(config)) {}

const std::vector<Value>& Session::universe() {
  if (!universe_) {
    universe_ = generate_universe(config_.universe, config_.cap);
  }
  return *universe_;
}

EvalContext Session::context() {
  EvalContext ctx;
  ctx.cap = config_.cap;
  return ctx;
}

std::string Session::show(const Value& v) const {
  return config_.json_output ? value_to_json_text(v) : render(v);
}

CommandResult Session::execute(const std::string& line) {
  history_.push_back(line);
  const std::string text = trim(line);
  if (text.empty() || text[0] == '#') return {};
  try {
    if (text[0] == ':') return command(text);
    TermPtr t = parse_term(text);
    Value v = eval_term(t, env_, context());
    return {show(v) + "\n", "", 0, false};
  } catch (const Error& e) {
    return {"", std::string("error: ") + e.what() + "\n", 2, false};
  }
}

CommandResult Session::command(const std::string& text) {
  const std::size_t sp = text.find_first_of(" \t");
  const std::string cmd = text.substr(0, sp);
  const std::string rest =
      sp == std::string::npos ? "" : trim(text.substr(sp + 1));

  if (cmd == ":quit" || cmd == ":q") {
    return {"", "", 0, true};
  }
  if (cmd == ":help") {
    return {kHelp, "", 0, false};
  }
  if (cmd == ":let") {
    const std::size_t eq = rest.find('=');
    if (eq == std::string::npos) {
      return {"", "error: usage: :let <name> = <term>\n", 2, false};
    }
    const std::string name = trim(rest.substr(0, eq));
    if (!valid_name(name)) {
      return {"", "error: invalid name '" + name + "'\n", 2, false};
    }
    TermPtr t = parse_term(rest.substr(eq + 1));
    env_[name] = eval_term(t, env_, context());
    return {};
  }
  if (cmd == ":check") {
    FormulaPtr f = parse_formula(rest);
    EvalContext ctx = context();
    if (uses_universe(f)) ctx.universe = &universe();
    const bool holds = eval_formula(f, env_, ctx);
    return {holds ? "true\n" : "false\n", "", holds ? 0 : 1, false};
  }
  if (cmd == ":shape") {
    TermPtr t = parse_term(rest);
    Value v = eval_term(t, env_, context());
    return {render_shape(shape_of(v)) + "\n", "", 0, false};
  }
  if (cmd == ":json") {
    TermPtr t = parse_term(rest);
    Value v = eval_term(t, env_, context());
    return {value_to_json_text(v) + "\n", "", 0, false};
  }
  if (cmd == ":axioms") {
    UniverseSpec bounds = config_.universe;
    const auto words = split_words(rest);
    if (!words.empty()) {
      if (words.size() != 4) {
        return {"", "error: usage: :axioms [rank width dims nest]\n", 2,
                false};
      }
      try {
        bounds.rank_bound = std::stoul(words[0]);
        bounds.set_width_bound = std::stoul(words[1]);
        bounds.matrix_dim_bound = std::stoul(words[2]);
        bounds.nest_depth_bound = std::stoul(words[3]);
      } catch (const std::exception&) {
        return {"", "error: bounds must be numbers\n", 2, false};
      }
    }
    AxiomReport report = run_axiom_suite(bounds, config_.cap);
    std::string out = config_.json_output ? report_to_json(report).dump() + "\n"
                                          : format_report(report);
    return {std::move(out), "", report.all_checkable_pass() ? 0 : 1, false};
  }
  if (cmd == ":load") {
    std::ifstream in(rest);
    if (!in) {
      return {"", "error: cannot open '" + rest + "'\n", 2, false};
    }
    std::ostringstream content;
    content << in.rdbuf();
    return run_script(content.str());
  }
  return {"", "error: unknown command '" + cmd + "' (try :help)\n", 2, false};
}

CommandResult Session::run_script(const std::string& text) {
  CommandResult all;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    CommandResult r = execute(line);
    all.out += r.out;
    all.err += r.err;
    if (r.status == 2) all.status = 2;
    if (r.quit) {
      all.quit = true;
      break;
    }
  }
  return all;
}

}  // namespace smx
