#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smx/eval.hpp"
#include "smx/universe.hpp"

namespace smx {

struct SessionConfig {
  UniverseSpec universe;
  std::size_t cap = kDefaultCap;
  bool json_output = false;  // emit values as JSON instead of renders
};

struct CommandResult {
  std::string out;   // result stream
  std::string err;   // diagnostics stream
  int status = 0;    // 0 ok, 1 false/failed check, 2 error
  bool quit = false;
};

// One interactive or scripted session: named bindings, a config, and a
// lazily generated universe for unbounded quantifiers. Errors are reported
// in the result, never thrown; the session stays usable afterwards.
class Session {
 public:
  explicit Session(SessionConfig config = {});

  // Executes one line: a :command, or a bare term to evaluate. Blank lines
  // and # comments yield an empty success.
  CommandResult execute(const std::string& line);

  // Executes every line; output is concatenated in order, the status is 2
  // if any line errored and 0 otherwise, and execution continues past
  // failing lines.
  CommandResult run_script(const std::string& text);

  const SessionConfig& config() const { return config_; }
  const Env& bindings() const { return env_; }

 private:
  CommandResult command(const std::string& line);
  const std::vector<Value>& universe();
  EvalContext context();
  std::string show(const Value& v) const;

  SessionConfig config_;
  Env env_;
  std::vector<std::string> history_;
  std::optional<std::vector<Value>> universe_;
};

}  // namespace smx
