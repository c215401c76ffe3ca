#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "smx/axioms.hpp"
#include "smx/errors.hpp"
#include "smx/json_io.hpp"
#include "smx/session.hpp"

namespace {

int run_repl(smx::Session& session) {
  const bool interactive = isatty(fileno(stdin));
  std::string line;
  while (true) {
    if (interactive) {
      std::cout << "smx> " << std::flush;
    }
    if (!std::getline(std::cin, line)) break;
    smx::CommandResult r = session.execute(line);
    std::cout << r.out << std::flush;
    std::cerr << r.err << std::flush;
    if (r.quit) break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "smx: a kernel for hereditarily finite sets and set matrices"};
  app.get_formatter()->column_width(26);

  std::string eval_text, check_text, script_path;
  bool axioms = false;
  smx::SessionConfig config;

  auto* eval_opt = app.add_option("--eval", eval_text, "evaluate one term");
  auto* check_opt =
      app.add_option("--check", check_text, "evaluate one formula");
  auto* script_opt =
      app.add_option("--script", script_path, "run a script file");
  auto* axioms_opt =
      app.add_flag("--axioms", axioms, "run the axiom suite and report");
  eval_opt->excludes(check_opt)->excludes(script_opt)->excludes(axioms_opt);
  check_opt->excludes(script_opt)->excludes(axioms_opt);
  script_opt->excludes(axioms_opt);

  app.add_option("--rank-bound", config.universe.rank_bound,
                 "universe rank bound")
      ->capture_default_str();
  app.add_option("--width-bound", config.universe.set_width_bound,
                 "universe set width bound")
      ->capture_default_str();
  app.add_option("--dim-bound", config.universe.matrix_dim_bound,
                 "universe matrix dimension bound")
      ->capture_default_str();
  app.add_option("--nest-bound", config.universe.nest_depth_bound,
                 "universe matrix nesting bound")
      ->capture_default_str();
  app.add_option("--cap", config.cap, "result cardinality cap")
      ->capture_default_str();
  app.add_flag("--json", config.json_output, "machine readable output");

  CLI11_PARSE(app, argc, argv);

  smx::Session session(config);

  try {
    if (*eval_opt) {
      smx::CommandResult r = session.execute(eval_text);
      std::cout << r.out;
      std::cerr << r.err;
      return r.status;
    }
    if (*check_opt) {
      smx::CommandResult r = session.execute(":check " + check_text);
      std::cout << r.out;
      std::cerr << r.err;
      return r.status;
    }
    if (*axioms_opt) {
      smx::CommandResult r = session.execute(":axioms");
      std::cout << r.out;
      std::cerr << r.err;
      return r.status;
    }
    if (*script_opt) {
      std::ifstream in(script_path);
      if (!in) {
        std::cerr << "error: cannot open '" << script_path << "'\n";
        return 2;
      }
      std::ostringstream content;
      content << in.rdbuf();
      smx::CommandResult r = session.run_script(content.str());
      std::cout << r.out;
      std::cerr << r.err;
      return r.status;
    }
  } catch (const smx::Error& e) {
    // Sessions normally catch their own errors; this guards setup paths.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return run_repl(session);
}
