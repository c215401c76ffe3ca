#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "smx/kernel.hpp"
#include "smx/universe.hpp"
#include "smx/value.hpp"

namespace smx {

enum class Verdict { pass, fail, not_finitely_checkable };

std::string verdict_name(Verdict v);

struct AxiomOutcome {
  std::string axiom;
  Verdict verdict = Verdict::pass;
  std::string counterexample;  // rendered values; empty unless fail
};

// Seam for fault injection: the suite builds every matrix it tests through
// this hook, so tests can hand in a non-canonicalizing builder and watch
// the corresponding checks fail. Defaults to mk_matrix.
struct AxiomHooks {
  std::function<Value(std::size_t, std::size_t, std::vector<Value>)>
      make_matrix;
};

struct AxiomReport {
  UniverseSpec bounds;
  std::size_t universe_size = 0;
  std::vector<AxiomOutcome> results;

  bool all_checkable_pass() const;
  const AxiomOutcome* find(const std::string& axiom) const;
};

// Checks the bounded instance of every axiom over generate_universe(u):
// quantifiers range over the carrier, schema axioms are instantiated with a
// fixed representative family of formulas, and the infinity axiom is
// reported as not finitely checkable rather than asserted. Exhaustive by
// design; cost grows steeply with the bounds.
AxiomReport run_axiom_suite(const UniverseSpec& u,
                            std::size_t cap = kDefaultCap,
                            const AxiomHooks& hooks = {});

// Fixed-width human-readable rendering, one line per axiom.
std::string format_report(const AxiomReport& report);

}  // namespace smx
