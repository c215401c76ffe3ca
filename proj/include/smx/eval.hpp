#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smx/kernel.hpp"
#include "smx/syntax.hpp"
#include "smx/universe.hpp"
#include "smx/value.hpp"

namespace smx {

using Env = std::map<std::string, Value>;

// Shared evaluation configuration. `universe` backs the unbounded
// quantifiers and the witness search of replacement; it stays null when
// neither is used. The context does not own the vector.
struct EvalContext {
  std::size_t cap = kDefaultCap;
  const std::vector<Value>* universe = nullptr;
};

Value eval_term(const Term& t, const Env& env, const EvalContext& ctx = {});
Value eval_term(const TermPtr& t, const Env& env, const EvalContext& ctx = {});

bool eval_formula(const Formula& f, const Env& env,
                  const EvalContext& ctx = {});
bool eval_formula(const FormulaPtr& f, const Env& env,
                  const EvalContext& ctx = {});

// { e in x : phi[var := e] }.
Value separation(const Value& x, const Formula& phi, const std::string& var,
                 const Env& env, const EvalContext& ctx = {});

// Image of x under the relation phi(in_var, out_var). Witnesses are sought
// in ctx.universe, which must be set; each element of x must have exactly
// one witness there (FunctionalityError otherwise).
Value replacement(const Value& x, const Formula& phi,
                  const std::string& in_var, const std::string& out_var,
                  const Env& env, const EvalContext& ctx);

// Per-shape variants. The element being tested is decomposed into its leaf
// sets, bound positionally as x1, x2, ... in depth-first row-major order
// (a plain set binds x1 to itself), and the block's formula is evaluated
// under those bindings; bindings shadow `env`. Shapes missing from the
// family fall back to `fallback` when given, otherwise raise CoverageError.
Value separation_per_shape(const Value& x,
                           const std::map<Shape, FormulaPtr>& family,
                           const std::optional<FormulaPtr>& fallback,
                           const Env& env, const EvalContext& ctx = {});

// Entrywise replacement: each leaf of an element is mapped to the unique
// witness in ctx.universe related to it by the block's rule, and the
// element is rebuilt with the same shape. The blockwise images are unioned.
// Every shape in x must be covered by the family.
struct EntrywiseRule {
  FormulaPtr relation;
  std::string input_var = "a";
  std::string output_var = "b";
};

Value substitution_per_shape(const Value& x,
                             const std::map<Shape, EntrywiseRule>& family,
                             const Env& env, const EvalContext& ctx);

}  // namespace smx
