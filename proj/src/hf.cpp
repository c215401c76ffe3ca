#include "smx/hf.hpp"

#include <algorithm>
#include <utility>

#include "smx/errors.hpp"

namespace smx::hf {

int hf_compare(const HfSet& a, const HfSet& b) {
  const std::size_t common = std::min(a.elems.size(), b.elems.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (int c = hf_compare(a.elems[i], b.elems[i]); c != 0) return c;
  }
  if (a.elems.size() == b.elems.size()) return 0;
  return a.elems.size() < b.elems.size() ? -1 : 1;
}

bool hf_equal(const HfSet& a, const HfSet& b) { return hf_compare(a, b) == 0; }
bool hf_less(const HfSet& a, const HfSet& b) { return hf_compare(a, b) < 0; }

HfSet hf_make(std::vector<HfSet> elems) {
  std::sort(elems.begin(), elems.end(), hf_less);
  elems.erase(std::unique(elems.begin(), elems.end(), hf_equal), elems.end());
  return HfSet{std::move(elems)};
}

bool hf_member(const HfSet& a, const HfSet& x) {
  for (const HfSet& e : x.elems) {
    if (hf_equal(e, a)) return true;
  }
  return false;
}

bool hf_subset(const HfSet& x, const HfSet& y) {
  for (const HfSet& e : x.elems) {
    if (!hf_member(e, y)) return false;
  }
  return true;
}

HfSet hf_pair(const HfSet& a, const HfSet& b) { return hf_make({a, b}); }

HfSet hf_union_family(const HfSet& x) {
  std::vector<HfSet> all;
  for (const HfSet& e : x.elems) {
    all.insert(all.end(), e.elems.begin(), e.elems.end());
  }
  return hf_make(std::move(all));
}

namespace {

// pow({e1..en}) = pow({e1..e(n-1)}) plus the same subsets with en added.
HfSet power_rec(const std::vector<HfSet>& elems, std::size_t n) {
  if (n == 0) return hf_make({HfSet{}});
  HfSet smaller = power_rec(elems, n - 1);
  std::vector<HfSet> subsets = smaller.elems;
  for (const HfSet& t : smaller.elems) {
    std::vector<HfSet> extended = t.elems;
    extended.push_back(elems[n - 1]);
    subsets.push_back(hf_make(std::move(extended)));
  }
  return hf_make(std::move(subsets));
}

}  // namespace

HfSet hf_power_set(const HfSet& x) { return power_rec(x.elems, x.elems.size()); }

HfSet hf_separation(const HfSet& x,
                    const std::function<bool(const HfSet&)>& pred) {
  std::vector<HfSet> kept;
  for (const HfSet& e : x.elems) {
    if (pred(e)) kept.push_back(e);
  }
  return hf_make(std::move(kept));
}

HfSet hf_replacement(const HfSet& x,
                     const std::function<HfSet(const HfSet&)>& fn) {
  std::vector<HfSet> image;
  image.reserve(x.elems.size());
  for (const HfSet& e : x.elems) {
    image.push_back(fn(e));
  }
  return hf_make(std::move(image));
}

std::size_t hf_rank(const HfSet& x) {
  std::size_t r = 0;
  for (const HfSet& e : x.elems) {
    r = std::max(r, hf_rank(e) + 1);
  }
  return r;
}

HfSet hf_foundation_witness(const HfSet& x) {
  if (x.elems.empty()) {
    throw Error("hf_foundation_witness: set is empty");
  }
  const HfSet* best = nullptr;
  std::size_t best_rank = 0;
  for (const HfSet& e : x.elems) {
    const std::size_t r = hf_rank(e);
    if (!best || r < best_rank) {
      best = &e;
      best_rank = r;
    }
  }
  return *best;
}

std::vector<HfSet> hf_universe(std::size_t rank_bound,
                               std::size_t width_bound) {
  std::vector<HfSet> universe{HfSet{}};
  for (std::size_t r = 1; r <= rank_bound; ++r) {
    // All small subsets of the carrier so far; only fresh ranks survive.
    std::vector<HfSet> next = universe;
    std::vector<std::size_t> pick;
    auto grow = [&](auto&& self, std::size_t start) -> void {
      for (std::size_t i = start; i < universe.size(); ++i) {
        pick.push_back(i);
        std::vector<HfSet> items;
        for (std::size_t k : pick) items.push_back(universe[k]);
        HfSet candidate = hf_make(std::move(items));
        if (hf_rank(candidate) == r) next.push_back(candidate);
        if (pick.size() < width_bound) self(self, i + 1);
        pick.pop_back();
      }
    };
    if (width_bound > 0) grow(grow, 0);
    std::sort(next.begin(), next.end(), hf_less);
    next.erase(std::unique(next.begin(), next.end(), hf_equal), next.end());
    if (next.size() == universe.size()) break;
    universe = std::move(next);
  }
  return universe;
}

HfSet to_hf(const Value& v) {
  if (v.is_matrix()) {
    throw FragmentError("to_hf: matrices are outside the set fragment");
  }
  std::vector<HfSet> elems;
  elems.reserve(v.elements().size());
  for (const Value& e : v.elements()) {
    elems.push_back(to_hf(e));
  }
  return hf_make(std::move(elems));
}

Value from_hf(const HfSet& s) {
  std::vector<Value> elems;
  elems.reserve(s.elems.size());
  for (const HfSet& e : s.elems) {
    elems.push_back(from_hf(e));
  }
  return mk_set(std::move(elems));
}

}  // namespace smx::hf
