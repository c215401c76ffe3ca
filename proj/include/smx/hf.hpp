#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "smx/value.hpp"

namespace smx::hf {

// A second, deliberately independent model of hereditarily finite sets used
// as a differential-testing oracle for the matrix-free fragment. It shares
// no representation or set algorithms with the kernel: plain by-value
// trees, a lexicographic-first canonical order (the kernel orders by size
// first), linear membership scans, and a recursive power set.
struct HfSet {
  std::vector<HfSet> elems;  // strictly increasing under hf_less
};

// Lexicographic comparison of element sequences; a proper prefix is
// smaller. Returns <0, 0 or >0.
int hf_compare(const HfSet& a, const HfSet& b);
bool hf_equal(const HfSet& a, const HfSet& b);
bool hf_less(const HfSet& a, const HfSet& b);

// Canonicalizes: sorts and removes duplicates.
HfSet hf_make(std::vector<HfSet> elems);

bool hf_member(const HfSet& a, const HfSet& x);
bool hf_subset(const HfSet& x, const HfSet& y);
HfSet hf_pair(const HfSet& a, const HfSet& b);
HfSet hf_union_family(const HfSet& x);
HfSet hf_power_set(const HfSet& x);
HfSet hf_separation(const HfSet& x,
                    const std::function<bool(const HfSet&)>& pred);
HfSet hf_replacement(const HfSet& x,
                     const std::function<HfSet(const HfSet&)>& fn);

// First minimal-rank element; its members all have smaller rank than
// anything in x, so it never shares a member with x. Throws on empty input.
HfSet hf_foundation_witness(const HfSet& x);

std::size_t hf_rank(const HfSet& x);

// All hereditarily finite sets of rank at most rank_bound whose sets have
// at most width_bound elements throughout, in hf order.
std::vector<HfSet> hf_universe(std::size_t rank_bound,
                               std::size_t width_bound);

// Bridge to the kernel representation. to_hf rejects values containing a
// matrix anywhere, since the oracle models the matrix-free fragment only.
HfSet to_hf(const Value& v);
Value from_hf(const HfSet& s);

}  // namespace smx::hf
