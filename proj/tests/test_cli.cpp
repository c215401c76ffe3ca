#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "doctest.h"
#include "smx/errors.hpp"
#include "smx/json_io.hpp"
#include "smx/kernel.hpp"
#include "smx/session.hpp"
#include "smx/syntax.hpp"
#include "smx/value.hpp"
#include "support/gen.hpp"

using namespace smx;

namespace {

struct RunOutput {
  std::string out;
  int status = -1;
};

// Runs the installed CLI when ctest points at it; returns nullopt otherwise
// so the suite still works when invoked directly.
const char* cli_path() { return std::getenv("SMX_CLI"); }

RunOutput run_cli(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args +
                          " 2>/dev/null";
  RunOutput result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::filesystem::path write_temp_script(const std::string& body) {
  const auto path =
      std::filesystem::temp_directory_path() / "smx_cli_test_script.smx";
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("session evaluates terms and keeps bindings") {
  Session s;

  CommandResult r = s.execute(":let a = pair({}, {{}})");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(r.err.empty());

  r = s.execute("a");
  CHECK(r.out == "{{}, {{}}}\n");
  CHECK(r.status == 0);

  r = s.execute("union({{{}, [{} {}]}, {[{};{}]}})");
  CHECK(r.out == "{{}, [{} {}], [{}; {}]}\n");

  r = s.execute("pow(a)");
  CHECK(r.out == "{{}, {{}}, {{{}}}, {{}, {{}}}}\n");

  SUBCASE("blank lines and comments are silent successes") {
    CHECK(s.execute("").status == 0);
    CHECK(s.execute("   ").out.empty());
    CHECK(s.execute("# a comment").status == 0);
  }
}

TEST_CASE("session checks formulas with three-way status") {
  Session s;

  CommandResult r = s.execute(":check <1,2> = [1 2]");
  CHECK(r.out == "true\n");
  CHECK(r.status == 0);

  r = s.execute(":check [{} {}] = [{}; {}]");
  CHECK(r.out == "false\n");
  CHECK(r.status == 1);

  r = s.execute(":check union({0, [0 0]}) = 0");
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK(r.err.substr(0, 7) == "error: ");

  SUBCASE("universe quantifiers work through the session config") {
    r = s.execute(":check exists x (not x = {} and forall y in x (false))");
    CHECK(r.out == "true\n");
    CHECK(r.status == 0);
  }

  SUBCASE("a failed line does not poison the session") {
    s.execute(":let b = union({0, [0 0]})");
    r = s.execute(":check {} in {{}}");
    CHECK(r.status == 0);
    CHECK(s.bindings().count("b") == 0);
  }
}

TEST_CASE("session inspection commands") {
  Session s;

  CHECK(s.execute(":shape {1, 2}").out == "set\n");
  CHECK(s.execute(":shape [[{} {}] {}]").out == "1x2(1x2(set, set), set)\n");
  CHECK(s.execute(":json [{} {{}}]").out ==
        "{\"matrix\":{\"cols\":2,\"entries\":"
        "[{\"set\":[]},{\"set\":[{\"set\":[]}]}],\"rows\":1}}\n");
  CHECK(s.execute(":help").out.find(":let") != std::string::npos);

  CommandResult r = s.execute(":frobnicate");
  CHECK(r.status == 2);
  CHECK(r.err.find("unknown command") != std::string::npos);

  r = s.execute(":let 9x = {}");
  CHECK(r.status == 2);
  CHECK(r.err.find("invalid name") != std::string::npos);
}

TEST_CASE("session axiom command") {
  Session s;

  CommandResult r = s.execute(":axioms");
  CHECK(r.status == 0);
  CHECK(r.out.find("result: pass") != std::string::npos);
  CHECK(r.out.find("(40 values)") != std::string::npos);

  r = s.execute(":axioms 1 1 2 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("(5 values)") != std::string::npos);

  r = s.execute(":axioms 1 2");
  CHECK(r.status == 2);

  r = s.execute(":axioms a b c d");
  CHECK(r.status == 2);
}

TEST_CASE("scripts run to the end and aggregate status") {
  Session s;
  const CommandResult r = s.run_script(
      ":let a = {0, 1}\n"
      "a\n"
      "union({0, [0 0]})\n"
      "pow(a)\n");
  CHECK(r.status == 2);
  CHECK(r.out ==
        "{{}, {{}}}\n"
        "{{}, {{}}, {{{}}}, {{}, {{}}}}\n");
  CHECK(r.err.substr(0, 7) == "error: ");

  SUBCASE("quit stops the script") {
    Session t;
    const CommandResult q = t.run_script("{}\n:quit\n{{}}\n");
    CHECK(q.quit);
    CHECK(q.out == "{}\n");
  }
}

TEST_CASE("JSON serialization round-trips values") {
  std::mt19937 rng(5151);
  testgen::GenLimits lim;
  for (int i = 0; i < 400; ++i) {
    const Value v = testgen::random_value(rng, lim);
    CHECK(value_from_json(value_to_json(v)) == v);
    CHECK(value_from_json_text(value_to_json_text(v)) == v);
  }

  SUBCASE("deserialization re-canonicalizes") {
    CHECK(value_from_json_text(R"({"set":[{"set":[]},{"set":[]}]})") ==
          mk_set({empty_set()}));
    // A 1x1 matrix collapses on input even though output never emits one.
    CHECK(value_from_json_text(
              R"({"matrix":{"rows":1,"cols":1,"entries":[{"set":[]}]}})") ==
          empty_set());
  }

  SUBCASE("malformed documents are rejected") {
    CHECK_THROWS_AS(value_from_json_text("not json"), ConstructionError);
    CHECK_THROWS_AS(value_from_json_text("{}"), ConstructionError);
    CHECK_THROWS_AS(value_from_json_text(R"({"sets":[]})"), ConstructionError);
    CHECK_THROWS_AS(
        value_from_json_text(R"({"matrix":{"rows":0,"cols":2,"entries":[]}})"),
        ConstructionError);
    CHECK_THROWS_AS(
        value_from_json_text(R"({"set":[], "matrix":[]})"), ConstructionError);
  }
}

TEST_CASE("JSON axiom report") {
  const AxiomReport report = run_axiom_suite(UniverseSpec{});
  const nlohmann::json j = report_to_json(report);
  CHECK(j["bounds"]["rank"] == 2);
  CHECK(j["bounds"]["nest"] == 1);
  CHECK(j["universe_size"] == 40);
  CHECK(j["all_pass"] == true);
  REQUIRE(j["results"].is_array());
  CHECK(j["results"].size() == 17);
  bool saw_infinity = false;
  for (const auto& r : j["results"]) {
    if (r["axiom"] == "infinity") {
      saw_infinity = true;
      CHECK(r["verdict"] == "not-finitely-checkable");
    }
  }
  CHECK(saw_infinity);
}

TEST_CASE("command line batch modes" * doctest::skip(cli_path() == nullptr)) {
  REQUIRE(cli_path() != nullptr);

  SUBCASE("eval prints the value") {
    const RunOutput r = run_cli("--eval 'union({{{}, [{} {}]}, {[{};{}]}})'");
    CHECK(r.out == "{{}, [{} {}], [{}; {}]}\n");
    CHECK(r.status == 0);
  }

  SUBCASE("check distinguishes false from error") {
    CHECK(run_cli("--check '<1,2> = [1 2]'").status == 0);
    const RunOutput f = run_cli("--check '[{} {} {}] = [[{} {}] {}]'");
    CHECK(f.out == "false\n");
    CHECK(f.status == 1);
    CHECK(run_cli("--eval 'union({0, [0 0]})'").status == 2);
    CHECK(run_cli("--eval '{'").status == 2);
  }

  SUBCASE("axioms mode reports and exits clean") {
    const RunOutput r = run_cli("--axioms");
    CHECK(r.status == 0);
    CHECK(r.out.find("result: pass") != std::string::npos);
  }

  SUBCASE("json flag switches the output format") {
    const RunOutput r = run_cli("--json --eval '[{} {}]'");
    CHECK(r.out ==
          "{\"matrix\":{\"cols\":2,\"entries\":"
          "[{\"set\":[]},{\"set\":[]}],\"rows\":1}}\n");
    CHECK(r.status == 0);
  }

  SUBCASE("bounds options reach the universe") {
    const RunOutput r = run_cli(
        "--dim-bound 0 --nest-bound 0 "
        "--check 'exists x (not x = {} and forall y in x (false))'");
    CHECK(r.out == "false\n");
    CHECK(r.status == 1);
  }

  SUBCASE("conflicting modes are a usage error") {
    CHECK(run_cli("--eval '{}' --check 'true'").status != 0);
  }
}

TEST_CASE("scripted runs are reproducible byte for byte" *
          doctest::skip(cli_path() == nullptr)) {
  const auto script = write_temp_script(
      ":let a = {0, 1, 2}\n"
      "pow(a)\n"
      ":shape [[{} {}] {}]\n"
      ":check forall x in a (x sub a)\n"
      "matset(2, 1, a)\n"
      ":json <1, 2>\n"
      ":axioms 1 1 2 1\n");
  const std::string args = "--script " + script.string();
  const RunOutput first = run_cli(args);
  const RunOutput second = run_cli(args);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("result: pass") != std::string::npos);
  std::filesystem::remove(script);
}
