#include "smx/universe.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "smx/errors.hpp"

namespace smx {

namespace {

// Appends to `acc` every set of at most `width` elements drawn from the
// sorted pool. Combinations of a strictly increasing pool are canonical
// already, but mk_set re-checks cheaply and keeps one construction path.
void add_sets(const std::vector<Value>& pool, std::size_t width,
              std::set<Value>& acc, std::size_t cap) {
  std::vector<std::size_t> pick;
  // Depth-first combination walk, sizes 1..width (the empty set is already
  // in every carrier).
  auto step = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t i = start; i < pool.size(); ++i) {
      pick.push_back(i);
      std::vector<Value> items;
      items.reserve(pick.size());
      for (std::size_t k : pick) items.push_back(pool[k]);
      acc.insert(mk_set(std::move(items)));
      if (acc.size() > cap) {
        throw CapError("universe exceeds cap " + std::to_string(cap));
      }
      if (pick.size() < width) self(self, i + 1);
      pick.pop_back();
    }
  };
  if (width > 0) step(step, 0);
}

void add_matrices(const std::vector<Value>& pool, const UniverseSpec& u,
                  std::set<Value>& acc, std::size_t cap) {
  if (u.matrix_dim_bound < 1 || u.nest_depth_bound == 0) return;
  // Entries whose own nesting leaves room for one more grid level.
  std::vector<Value> eligible;
  for (const Value& v : pool) {
    if (v.grid_nesting() < u.nest_depth_bound) eligible.push_back(v);
  }
  if (eligible.empty()) return;
  for (std::size_t m = 1; m <= u.matrix_dim_bound; ++m) {
    for (std::size_t n = 1; n <= u.matrix_dim_bound; ++n) {
      if (m * n < 2) continue;
      std::vector<std::size_t> idx(m * n, 0);
      while (true) {
        std::vector<Value> entries;
        entries.reserve(idx.size());
        for (std::size_t i : idx) entries.push_back(eligible[i]);
        acc.insert(mk_matrix(m, n, std::move(entries)));
        if (acc.size() > cap) {
          throw CapError("universe exceeds cap " + std::to_string(cap));
        }
        std::size_t k = idx.size();
        while (k > 0 && ++idx[k - 1] == eligible.size()) {
          idx[k - 1] = 0;
          --k;
        }
        if (k == 0) break;
      }
    }
  }
}

}  // namespace

std::vector<Value> generate_universe(const UniverseSpec& u, std::size_t cap) {
  if (cap == 0) throw CapError("universe exceeds cap 0");
  std::vector<Value> universe{Value()};  // rank 0
  for (std::size_t r = 1; r <= u.rank_bound; ++r) {
    // Candidates over everything of rank < r; results of rank < r are
    // duplicates of earlier layers and get filtered below, so the in-flight
    // guard uses the whole cap and the precise check happens afterwards.
    std::set<Value> acc;
    add_sets(universe, u.set_width_bound, acc, cap);
    add_matrices(universe, u, acc, cap);
    std::vector<Value> fresh;
    for (const Value& v : acc) {
      if (v.rank() == r) fresh.push_back(v);
    }
    if (fresh.empty()) break;  // bounds saturated early
    if (universe.size() + fresh.size() > cap) {
      throw CapError("universe exceeds cap " + std::to_string(cap));
    }
    // std::set iteration is already canonical; ranks partition the layers.
    universe.insert(universe.end(), fresh.begin(), fresh.end());
  }
  return universe;
}

}  // namespace smx
