#include "smx/eval.hpp"

#include <utility>

#include "smx/errors.hpp"

namespace smx {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const std::vector<Value>& require_universe(const EvalContext& ctx,
                                           const char* what) {
  if (!ctx.universe) {
    throw EvalError(std::string(what) +
                    ": no universe configured (set bounds first)");
  }
  return *ctx.universe;
}

}  // namespace

Value eval_term(const Term& t, const Env& env, const EvalContext& ctx) {
  return std::visit(
      overloaded{
          [](const Term::Empty&) { return Value(); },
          [&](const Term::Var& v) {
            auto it = env.find(v.name);
            if (it == env.end()) {
              throw EvalError("unbound variable '" + v.name + "'");
            }
            return it->second;
          },
          [&](const Term::SetLit& s) {
            std::vector<Value> items;
            items.reserve(s.items.size());
            for (const TermPtr& item : s.items) {
              items.push_back(eval_term(*item, env, ctx));
            }
            return mk_set(std::move(items));
          },
          [&](const Term::MatrixLit& m) {
            std::vector<Value> entries;
            entries.reserve(m.entries.size());
            for (const TermPtr& e : m.entries) {
              entries.push_back(eval_term(*e, env, ctx));
            }
            return mk_matrix(m.rows, m.cols, std::move(entries));
          },
          [&](const Term::Tuple& tp) {
            std::vector<Value> items;
            items.reserve(tp.items.size());
            for (const TermPtr& item : tp.items) {
              items.push_back(eval_term(*item, env, ctx));
            }
            return tuple_of(std::move(items));
          },
          [](const Term::Numeral& n) { return numeral(n.value); },
          [&](const Term::App& a) {
            std::vector<Value> args;
            args.reserve(a.args.size());
            for (const TermPtr& arg : a.args) {
              args.push_back(eval_term(*arg, env, ctx));
            }
            switch (a.op) {
              case AppOp::pair:
                return pair(args[0], args[1]);
              case AppOp::union_family:
                return union_family(args[0]);
              case AppOp::power:
                return power_set(args[0], ctx.cap);
              case AppOp::matset:
                return set_of_matrices(a.rows, a.cols, args[0], ctx.cap);
              case AppOp::cart:
                return cartesian(args[0], args[1], ctx.cap);
              case AppOp::funspace:
                return function_space(args[0], args[1], ctx.cap);
              case AppOp::succ:
                return successor(args[0]);
            }
            throw EvalError("unknown operation");
          },
      },
      t.node);
}

Value eval_term(const TermPtr& t, const Env& env, const EvalContext& ctx) {
  if (!t) throw EvalError("null term");
  return eval_term(*t, env, ctx);
}

namespace {

// Bounded quantification iterates the members of the domain value. A
// matrix domain has no members, so the loop body never runs; that is the
// same reading of membership the member() predicate uses.
template <typename Quantified>
bool quantify_members(const Value& domain, bool universal, const Env& env,
                      const std::string& var, const Quantified& body,
                      const EvalContext& ctx) {
  if (domain.is_matrix()) return universal;
  Env inner = env;
  for (const Value& e : domain.elements()) {
    inner[var] = e;
    const bool holds = eval_formula(body, inner, ctx);
    if (universal && !holds) return false;
    if (!universal && holds) return true;
  }
  return universal;
}

bool quantify_universe(bool universal, const Env& env, const std::string& var,
                       const Formula& body, const EvalContext& ctx) {
  const auto& carrier = require_universe(ctx, "quantifier");
  Env inner = env;
  for (const Value& v : carrier) {
    inner[var] = v;
    const bool holds = eval_formula(body, inner, ctx);
    if (universal && !holds) return false;
    if (!universal && holds) return true;
  }
  return universal;
}

}  // namespace

bool eval_formula(const Formula& f, const Env& env, const EvalContext& ctx) {
  return std::visit(
      overloaded{
          [](const Formula::BoolLit& b) { return b.value; },
          [&](const Formula::Member& m) {
            return member(eval_term(*m.lhs, env, ctx),
                          eval_term(*m.rhs, env, ctx));
          },
          [&](const Formula::Equal& e) {
            return values_equal(eval_term(*e.lhs, env, ctx),
                                eval_term(*e.rhs, env, ctx));
          },
          [&](const Formula::SubsetOf& s) {
            return subset(eval_term(*s.lhs, env, ctx),
                          eval_term(*s.rhs, env, ctx));
          },
          [&](const Formula::Not& n) { return !eval_formula(*n.body, env, ctx); },
          [&](const Formula::And& a) {
            return eval_formula(*a.lhs, env, ctx) &&
                   eval_formula(*a.rhs, env, ctx);
          },
          [&](const Formula::Or& o) {
            return eval_formula(*o.lhs, env, ctx) ||
                   eval_formula(*o.rhs, env, ctx);
          },
          [&](const Formula::Implies& i) {
            return !eval_formula(*i.lhs, env, ctx) ||
                   eval_formula(*i.rhs, env, ctx);
          },
          [&](const Formula::Iff& i) {
            return eval_formula(*i.lhs, env, ctx) ==
                   eval_formula(*i.rhs, env, ctx);
          },
          [&](const Formula::ForallIn& q) {
            return quantify_members(eval_term(*q.domain, env, ctx), true, env,
                                    q.var, *q.body, ctx);
          },
          [&](const Formula::ExistsIn& q) {
            return quantify_members(eval_term(*q.domain, env, ctx), false, env,
                                    q.var, *q.body, ctx);
          },
          [&](const Formula::ForallUniv& q) {
            return quantify_universe(true, env, q.var, *q.body, ctx);
          },
          [&](const Formula::ExistsUniv& q) {
            return quantify_universe(false, env, q.var, *q.body, ctx);
          },
      },
      f.node);
}

bool eval_formula(const FormulaPtr& f, const Env& env, const EvalContext& ctx) {
  if (!f) throw EvalError("null formula");
  return eval_formula(*f, env, ctx);
}

Value separation(const Value& x, const Formula& phi, const std::string& var,
                 const Env& env, const EvalContext& ctx) {
  Env inner = env;
  return separation_if(x, [&](const Value& e) {
    inner[var] = e;
    return eval_formula(phi, inner, ctx);
  });
}

Value replacement(const Value& x, const Formula& phi,
                  const std::string& in_var, const std::string& out_var,
                  const Env& env, const EvalContext& ctx) {
  const auto& witnesses = require_universe(ctx, "replacement");
  Env inner = env;
  return replacement_with(x, witnesses, [&](const Value& a, const Value& b) {
    inner[in_var] = a;
    inner[out_var] = b;
    return eval_formula(phi, inner, ctx);
  });
}

namespace {

// Binds the leaves of `element` as x1..xk on top of env.
Env bind_leaves(const Value& element, const Env& env) {
  Env inner = env;
  std::size_t i = 0;
  for (const Value& leaf : shape_leaves(element)) {
    inner["x" + std::to_string(++i)] = leaf;
  }
  return inner;
}

}  // namespace

Value separation_per_shape(const Value& x,
                           const std::map<Shape, FormulaPtr>& family,
                           const std::optional<FormulaPtr>& fallback,
                           const Env& env, const EvalContext& ctx) {
  std::vector<Value> kept;
  for (const auto& [shape, block] : partition_by_shape(x)) {
    auto it = family.find(shape);
    const FormulaPtr* phi = it != family.end() ? &it->second : nullptr;
    if (!phi && fallback) phi = &*fallback;
    if (!phi) {
      throw CoverageError("separation: no formula for shape " +
                          render_shape(shape));
    }
    for (const Value& e : block.elements()) {
      if (eval_formula(**phi, bind_leaves(e, env), ctx)) kept.push_back(e);
    }
  }
  return mk_set(std::move(kept));
}

Value substitution_per_shape(const Value& x,
                             const std::map<Shape, EntrywiseRule>& family,
                             const Env& env, const EvalContext& ctx) {
  const auto& witnesses = require_universe(ctx, "substitution");
  std::vector<Value> image;
  for (const auto& [shape, block] : partition_by_shape(x)) {
    auto it = family.find(shape);
    if (it == family.end()) {
      throw CoverageError("substitution: no rule for shape " +
                          render_shape(shape));
    }
    const EntrywiseRule& rule = it->second;
    // Distinct elements of a block share leaf values; remember each leaf's
    // witness instead of rescanning the universe.
    std::map<Value, Value> memo;
    auto map_leaf = [&](const Value& leaf) -> const Value& {
      auto hit = memo.find(leaf);
      if (hit != memo.end()) return hit->second;
      Env inner = env;
      inner[rule.input_var] = leaf;
      const Value* found = nullptr;
      for (const Value& w : witnesses) {
        inner[rule.output_var] = w;
        if (eval_formula(*rule.relation, inner, ctx)) {
          if (found) {
            throw FunctionalityError(
                "substitution: several witnesses for leaf " + render(leaf));
          }
          found = &w;
        }
      }
      if (!found) {
        throw FunctionalityError("substitution: no witness for leaf " +
                                 render(leaf));
      }
      return memo.emplace(leaf, *found).first->second;
    };
    for (const Value& e : block.elements()) {
      std::vector<Value> mapped;
      for (const Value& leaf : shape_leaves(e)) {
        mapped.push_back(map_leaf(leaf));
      }
      image.push_back(rebuild_with_leaves(shape, mapped));
    }
  }
  return mk_set(std::move(image));
}

}  // namespace smx
