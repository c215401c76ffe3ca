#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "smx/axioms.hpp"
#include "smx/errors.hpp"
#include "smx/eval.hpp"
#include "smx/kernel.hpp"
#include "smx/syntax.hpp"
#include "smx/universe.hpp"
#include "smx/value.hpp"
#include "support/gen.hpp"

using namespace smx;

namespace {

Value S(std::vector<Value> elems) { return mk_set(std::move(elems)); }

Value M(std::size_t m, std::size_t n, std::vector<Value> entries) {
  return mk_matrix(m, n, std::move(entries));
}

const Value E = empty_set();

Value ev(const std::string& text, const Env& env = {},
         const EvalContext& ctx = {}) {
  return eval_term(parse_term(text), env, ctx);
}

bool holds(const std::string& text, const Env& env = {},
           const EvalContext& ctx = {}) {
  return eval_formula(parse_formula(text), env, ctx);
}

// Independent universe enumeration: grow to a fixpoint instead of layering
// by rank, with local re-implementations of the bound predicates.
std::size_t oracle_nesting(const Value& v) {
  if (v.is_set()) return 0;
  std::size_t deepest = 0;
  for (const Value& e : v.entries()) {
    deepest = std::max(deepest, oracle_nesting(e));
  }
  return deepest + 1;
}

bool oracle_admits(const Value& v, const UniverseSpec& u) {
  if (v.rank() > u.rank_bound) return false;
  if (v.is_set()) {
    if (v.size() > u.set_width_bound) return false;
    for (const Value& e : v.elements()) {
      if (!oracle_admits(e, u)) return false;
    }
    return true;
  }
  if (v.rows() > u.matrix_dim_bound || v.cols() > u.matrix_dim_bound) {
    return false;
  }
  if (oracle_nesting(v) > u.nest_depth_bound) return false;
  for (const Value& e : v.entries()) {
    if (!oracle_admits(e, u)) return false;
  }
  return true;
}

std::vector<Value> oracle_universe(const UniverseSpec& u) {
  std::set<Value> pool = {empty_set()};
  bool grew = true;
  while (grew) {
    grew = false;
    // Children of any admissible value have rank below the bound, so only
    // those members of the pool can appear inside new candidates.
    std::vector<Value> snapshot;
    for (const Value& v : pool) {
      if (u.rank_bound > 0 && v.rank() <= u.rank_bound - 1) {
        snapshot.push_back(v);
      }
    }
    // All sets of admissible width over the pool.
    std::vector<std::vector<Value>> combos = {{}};
    for (std::size_t w = 1; w <= u.set_width_bound; ++w) {
      std::vector<std::vector<Value>> next;
      for (const auto& c : combos) {
        for (const Value& v : snapshot) {
          auto grown = c;
          grown.push_back(v);
          next.push_back(std::move(grown));
        }
      }
      for (const auto& c : next) {
        const Value s = mk_set(c);
        if (oracle_admits(s, u) && pool.insert(s).second) grew = true;
      }
      combos = std::move(next);
    }
    // All matrices of admissible dimensions over the pool.
    if (snapshot.empty()) continue;
    for (std::size_t m = 1; m <= u.matrix_dim_bound; ++m) {
      for (std::size_t n = 1; n <= u.matrix_dim_bound; ++n) {
        if (m * n < 2) continue;
        std::vector<std::size_t> idx(m * n, 0);
        while (true) {
          std::vector<Value> entries;
          for (std::size_t i : idx) entries.push_back(snapshot[i]);
          const Value mat = mk_matrix(m, n, std::move(entries));
          if (oracle_admits(mat, u) && pool.insert(mat).second) grew = true;
          std::size_t d = 0;
          while (d < idx.size() && ++idx[d] == snapshot.size()) {
            idx[d] = 0;
            ++d;
          }
          if (d == idx.size()) break;
        }
      }
    }
  }
  std::vector<Value> out(pool.begin(), pool.end());
  std::sort(out.begin(), out.end(), [](const Value& a, const Value& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return canonical_compare(a, b) < 0;
  });
  return out;
}

}  // namespace

TEST_CASE("term evaluation handles variables and the cap") {
  Env env;
  env["a"] = S({E});

  CHECK(ev("a", env) == S({E}));
  CHECK(ev("pair(a, {})", env) == S({E, S({E})}));
  CHECK_THROWS_AS(ev("missing", env), EvalError);

  EvalContext tight;
  tight.cap = 10;
  CHECK_THROWS_AS(ev("pow({0, 1, 2, 3})", {}, tight), CapError);
  CHECK_THROWS_AS(ev("matset(2, 2, {0, 1})", {}, tight), CapError);
  CHECK(ev("pow({0, 1, 2, 3})").size() == 16);
}

TEST_CASE("bounded quantifiers over matrices are vacuous") {
  CHECK(holds("forall y in [{} {}] (false)"));
  CHECK_FALSE(holds("exists y in [{} {}] (true)"));
  // Same matrix as a set element behaves normally.
  CHECK(holds("exists y in {[{} {}]} (y = [{} {}])"));
}

TEST_CASE("universe quantifiers need a configured universe") {
  CHECK_THROWS_AS(holds("forall x (x = x)"), EvalError);

  const std::vector<Value> uni = generate_universe(UniverseSpec{});
  EvalContext ctx;
  ctx.universe = &uni;
  CHECK(holds("forall x (x = x)", {}, ctx));
  CHECK(holds("exists x (x = {{}})", {}, ctx));
  CHECK(holds("exists x (x = [{} {}])", {}, ctx));
  CHECK_FALSE(holds("exists x (x = {{{{}}}})", {}, ctx));  // rank 3, out of range
}

TEST_CASE("memberless values besides the empty set exist iff matrices do") {
  const std::string claim = "exists x (not x = {} and forall y in x (false))";

  const std::vector<Value> with_matrices = generate_universe(UniverseSpec{});
  EvalContext ctx1;
  ctx1.universe = &with_matrices;
  CHECK(holds(claim, {}, ctx1));

  UniverseSpec pure;
  pure.matrix_dim_bound = 0;
  pure.nest_depth_bound = 0;
  const std::vector<Value> sets_only = generate_universe(pure);
  EvalContext ctx2;
  ctx2.universe = &sets_only;
  CHECK_FALSE(holds(claim, {}, ctx2));
}

TEST_CASE("quantifier duality on random domains") {
  std::mt19937 rng(3131);
  const FormulaPtr all = parse_formula("forall v in d ({} in v)");
  const FormulaPtr none = parse_formula("not exists v in d (not {} in v)");
  for (int i = 0; i < 200; ++i) {
    Env env;
    env["d"] = testgen::random_pure_set(rng);
    CHECK(eval_formula(all, env) == eval_formula(none, env));
  }
}

TEST_CASE("separation selects by formula") {
  const Value nats = ev("{0, 1, 2, 3}");
  const FormulaPtr odd = parse_formula("v in {1, 3}");
  CHECK(separation(nats, *odd, "v", {}) == ev("{1, 3}"));
  CHECK(separation(nats, *parse_formula("false"), "v", {}) == E);
  CHECK(separation(nats, *parse_formula("v = v"), "v", {}) == nats);

  // The bound variable shadows an outer binding of the same name.
  Env env;
  env["v"] = numeral(2);
  CHECK(separation(nats, *odd, "v", env) == ev("{1, 3}"));
}

TEST_CASE("replacement draws witnesses from the universe") {
  UniverseSpec u;
  u.rank_bound = 4;
  u.set_width_bound = 1;
  u.matrix_dim_bound = 0;
  u.nest_depth_bound = 0;
  const std::vector<Value> chain = generate_universe(u);  // 0,1,2,3,4
  EvalContext ctx;
  ctx.universe = &chain;

  const Value nats = ev("{0, 1, 2}");
  CHECK(replacement(nats, *parse_formula("b = {a}"), "a", "b", {}, ctx) ==
        ev("{1, 2, 3}"));
  CHECK(replacement(nats, *parse_formula("b = a"), "a", "b", {}, ctx) == nats);

  SUBCASE("no witness anywhere is an error") {
    CHECK_THROWS_AS(
        replacement(nats, *parse_formula("b in a and not b in a"), "a", "b",
                    {}, ctx),
        FunctionalityError);
  }
  SUBCASE("ambiguous witnesses are an error") {
    CHECK_THROWS_AS(
        replacement(ev("{0}"), *parse_formula("a sub b"), "a", "b", {}, ctx),
        FunctionalityError);
  }
  SUBCASE("no universe is an error") {
    CHECK_THROWS_AS(
        replacement(nats, *parse_formula("b = a"), "a", "b", {}, {}),
        EvalError);
  }
}

TEST_CASE("per-shape separation") {
  const Value one = S({E});
  const Value row_ee = M(1, 2, {E, E});
  const Value row_oo = M(1, 2, {one, one});
  const Value row_eo = M(1, 2, {E, one});
  const Value x = S({E, one, row_ee, row_oo, row_eo});

  std::map<Shape, FormulaPtr> family;
  family[shape_of(E)] = parse_formula("x1 = {}");
  family[shape_of(row_ee)] = parse_formula("x1 = x2");

  SUBCASE("leaves bind positionally as x1, x2, ...") {
    CHECK(separation_per_shape(x, family, std::nullopt, {}) ==
          S({E, row_ee, row_oo}));
  }

  SUBCASE("missing shapes fall back when a fallback is given") {
    const Value y = union2(x, S({M(2, 1, {E, E})}));
    CHECK(separation_per_shape(y, family,
                               std::optional<FormulaPtr>(
                                   parse_formula("false")),
                               {}) == S({E, row_ee, row_oo}));
    CHECK(separation_per_shape(y, {},
                               std::optional<FormulaPtr>(
                                   parse_formula("true")),
                               {}) == y);
  }

  SUBCASE("missing shapes without fallback are a coverage error") {
    const Value y = union2(x, S({M(2, 1, {E, E})}));
    CHECK_THROWS_AS(separation_per_shape(y, family, std::nullopt, {}),
                    CoverageError);
  }

  SUBCASE("agrees with plain separation on shape-blind formulas") {
    std::mt19937 rng(3232);
    const FormulaPtr phi = parse_formula("{} in x1");
    std::map<Shape, FormulaPtr> leaf_only;
    leaf_only[Shape::leaf()] = phi;
    for (int i = 0; i < 150; ++i) {
      const Value s = testgen::random_pure_set(rng);
      CHECK(separation_per_shape(s, leaf_only, std::nullopt, {}) ==
            separation(s, *phi, "x1", {}));
    }
  }
}

TEST_CASE("per-shape substitution rebuilds entries through a relation") {
  // Doubling on numerals 0..2, spelled out as a finite case list.
  const FormulaPtr doubling = parse_formula(
      "(a = 0 and b = 0) or (a = 1 and b = 2) or (a = 2 and b = 4)");
  std::vector<Value> pool;
  for (std::size_t n = 0; n <= 4; ++n) pool.push_back(numeral(n));
  EvalContext ctx;
  ctx.universe = &pool;

  const Value m01 = ev("[0 1]");
  const Value m22 = ev("[2 2]");
  const Value x = S({m01, m22});

  std::map<Shape, EntrywiseRule> rules;
  rules[shape_of(m01)] = EntrywiseRule{doubling, "a", "b"};

  CHECK(substitution_per_shape(x, rules, {}, ctx) ==
        S({ev("[0 2]"), ev("[4 4]")}));

  SUBCASE("plain sets are their own single leaf") {
    std::map<Shape, EntrywiseRule> leaf_rule;
    leaf_rule[Shape::leaf()] = EntrywiseRule{doubling, "a", "b"};
    CHECK(substitution_per_shape(ev("{0, 1, 2}"), leaf_rule, {}, ctx) ==
          ev("{0, 2, 4}"));
  }

  SUBCASE("identity relation reproduces x") {
    std::map<Shape, EntrywiseRule> id;
    id[shape_of(m01)] = EntrywiseRule{parse_formula("b = a"), "a", "b"};
    id[Shape::leaf()] = EntrywiseRule{parse_formula("b = a"), "a", "b"};
    const Value mixed = S({m01, m22, numeral(1), E});
    CHECK(substitution_per_shape(mixed, id, {}, ctx) == mixed);
  }

  SUBCASE("uncovered shapes are a coverage error") {
    CHECK_THROWS_AS(
        substitution_per_shape(S({ev("[0; 1]")}), rules, {}, ctx),
        CoverageError);
  }

  SUBCASE("an entry with no witness is a functionality error") {
    CHECK_THROWS_AS(
        substitution_per_shape(S({ev("[3 3]")}), rules, {}, ctx),
        FunctionalityError);
  }

  SUBCASE("an entry with two witnesses is a functionality error") {
    std::map<Shape, EntrywiseRule> loose;
    loose[shape_of(m01)] =
        EntrywiseRule{parse_formula("a sub b"), "a", "b"};
    CHECK_THROWS_AS(substitution_per_shape(S({m01}), loose, {}, ctx),
                    FunctionalityError);
  }
}

TEST_CASE("universe generation") {
  SUBCASE("rank zero leaves only the empty set") {
    UniverseSpec u;
    u.rank_bound = 0;
    const std::vector<Value> uni = generate_universe(u);
    REQUIRE(uni.size() == 1);
    CHECK(uni[0] == E);
  }

  SUBCASE("a small configuration, written out") {
    UniverseSpec u;
    u.rank_bound = 1;
    u.set_width_bound = 1;
    u.matrix_dim_bound = 2;
    u.nest_depth_bound = 1;
    const std::vector<Value> uni = generate_universe(u);
    const std::vector<Value> expect = {
        E, S({E}), M(1, 2, {E, E}), M(2, 1, {E, E}), M(2, 2, {E, E, E, E})};
    CHECK(uni == expect);
  }

  SUBCASE("default bounds give 16 sets and 24 matrices") {
    const std::vector<Value> uni = generate_universe(UniverseSpec{});
    CHECK(uni.size() == 40);
    std::size_t sets = 0, matrices = 0;
    for (const Value& v : uni) (v.is_set() ? sets : matrices) += 1;
    CHECK(sets == 16);
    CHECK(matrices == 24);
  }

  SUBCASE("matches an independent fixpoint enumeration") {
    const std::vector<UniverseSpec> cases = {
        UniverseSpec{},
        UniverseSpec{1, 1, 2, 1},
        UniverseSpec{2, 2, 0, 0},
        UniverseSpec{2, 1, 2, 1},
        UniverseSpec{1, 3, 3, 1},
    };
    for (const UniverseSpec& u : cases) {
      CHECK(generate_universe(u) == oracle_universe(u));
    }
  }

  SUBCASE("members are closed under elements and entries") {
    const std::vector<Value> uni = generate_universe(UniverseSpec{});
    std::set<Value> pool(uni.begin(), uni.end());
    for (const Value& v : uni) {
      const auto& parts = v.is_set() ? v.elements() : v.entries();
      for (const Value& p : parts) CHECK(pool.count(p) == 1);
    }
  }

  SUBCASE("ordering is by rank, then canonical, with no duplicates") {
    const std::vector<Value> uni = generate_universe(UniverseSpec{});
    for (std::size_t i = 1; i < uni.size(); ++i) {
      const bool rank_up = uni[i - 1].rank() < uni[i].rank();
      const bool same_rank_ordered =
          uni[i - 1].rank() == uni[i].rank() &&
          canonical_compare(uni[i - 1], uni[i]) < 0;
      CHECK((rank_up || same_rank_ordered));
    }
  }

  SUBCASE("raising bounds only adds values") {
    UniverseSpec small;
    small.rank_bound = 1;
    small.set_width_bound = 1;
    const std::vector<Value> lo = generate_universe(small);
    const std::vector<Value> hi = generate_universe(UniverseSpec{});
    const std::set<Value> pool(hi.begin(), hi.end());
    for (const Value& v : lo) CHECK(pool.count(v) == 1);
  }

  SUBCASE("generation is deterministic") {
    CHECK(generate_universe(UniverseSpec{}) ==
          generate_universe(UniverseSpec{}));
  }

  SUBCASE("the cap aborts oversized carriers") {
    UniverseSpec big;
    big.rank_bound = 3;
    big.set_width_bound = 3;
    big.matrix_dim_bound = 2;
    big.nest_depth_bound = 2;
    CHECK_THROWS_AS(generate_universe(big, 500), CapError);
  }
}

TEST_CASE("axiom suite passes at the default bounds") {
  const AxiomReport report = run_axiom_suite(UniverseSpec{});
  CHECK(report.universe_size == 40);
  CHECK(report.all_checkable_pass());
  REQUIRE(report.results.size() == 17);

  const std::vector<std::string> expected_names = {
      "set-matrix",
      "reduction",
      "omission",
      "epsilon",
      "division",
      "extensionality-matrices",
      "extensionality-sets",
      "emptiness",
      "separation[is-empty]",
      "separation[no-self-member]",
      "pair",
      "sum-set",
      "power-set",
      "set-of-matrices",
      "infinity",
      "substitution[singleton-image]",
      "foundation",
  };
  for (std::size_t i = 0; i < expected_names.size(); ++i) {
    CHECK(report.results[i].axiom == expected_names[i]);
  }

  const AxiomOutcome* infinity = report.find("infinity");
  REQUIRE(infinity != nullptr);
  CHECK(infinity->verdict == Verdict::not_finitely_checkable);
  for (const AxiomOutcome& r : report.results) {
    if (r.axiom == "infinity") continue;
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.counterexample.empty());
  }
}

TEST_CASE("axiom suite still passes without matrices") {
  UniverseSpec pure;
  pure.matrix_dim_bound = 0;
  pure.nest_depth_bound = 0;
  const AxiomReport report = run_axiom_suite(pure);
  CHECK(report.all_checkable_pass());
  // The matrix axioms hold vacuously over an all-set carrier.
  CHECK(report.find("reduction")->verdict == Verdict::pass);
  CHECK(report.find("omission")->verdict == Verdict::pass);
}

TEST_CASE("a broken matrix builder is caught by the suite") {
  AxiomHooks hooks;
  hooks.make_matrix = [](std::size_t m, std::size_t n,
                         std::vector<Value> entries) {
    return detail::make_matrix_unchecked(m, n, std::move(entries));
  };
  const AxiomReport report = run_axiom_suite(UniverseSpec{}, kDefaultCap,
                                             hooks);
  CHECK_FALSE(report.all_checkable_pass());

  const AxiomOutcome* reduction = report.find("reduction");
  REQUIRE(reduction != nullptr);
  CHECK(reduction->verdict == Verdict::fail);
  CHECK(reduction->counterexample == "[{}] != {}");
}

TEST_CASE("report formatting") {
  const AxiomReport report = run_axiom_suite(UniverseSpec{});
  const std::string text = format_report(report);
  CHECK(text.find("axiom suite: rank<=2 width<=2 dims<=2 nest<=1 (40 values)")
        != std::string::npos);
  CHECK(text.find("infinity") != std::string::npos);
  CHECK(text.find("not finitely checkable") != std::string::npos);
  CHECK(text.find("result: pass") != std::string::npos);

  CHECK(verdict_name(Verdict::pass) == "pass");
  CHECK(verdict_name(Verdict::fail) == "fail");
  CHECK(verdict_name(Verdict::not_finitely_checkable) ==
        "not finitely checkable");
}
