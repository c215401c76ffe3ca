#include "smx/kernel.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "smx/errors.hpp"

namespace smx {

namespace {

// |base|^exp with saturation just above `cap`, so callers can compare
// against the cap without overflow.
std::size_t pow_capped(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > cap / base) return cap + 1;
    result *= base;
    if (result > cap) return cap + 1;
  }
  return result;
}

void require_set(const Value& v, const char* op) {
  if (!v.is_set()) {
    throw KindError(std::string(op) + ": argument must be a set");
  }
}

}  // namespace

bool member(const Value& a, const Value& x) {
  if (x.is_matrix()) return false;
  const auto& elems = x.elements();
  auto it = std::lower_bound(elems.begin(), elems.end(), a);
  return it != elems.end() && values_equal(*it, a);
}

bool subset(const Value& x, const Value& y) {
  if (!x.is_set() || !y.is_set()) {
    throw KindError("subset: both arguments must be sets");
  }
  // Both element lists are strictly increasing; walk them in lockstep.
  const auto& xs = x.elements();
  const auto& ys = y.elements();
  std::size_t j = 0;
  for (const Value& e : xs) {
    while (j < ys.size() && ys[j] < e) ++j;
    if (j == ys.size() || !values_equal(ys[j], e)) return false;
    ++j;
  }
  return true;
}

Value pair(const Value& a, const Value& b) { return mk_set({a, b}); }

Value successor(const Value& x) {
  require_set(x, "succ");
  return mk_set({x});
}

Value numeral(std::size_t n) {
  Value v;
  for (std::size_t i = 0; i < n; ++i) v = mk_set({std::move(v)});
  return v;
}

Value naturals_upto(std::size_t n) {
  std::vector<Value> items;
  items.reserve(n);
  Value v;
  for (std::size_t i = 0; i < n; ++i) {
    items.push_back(v);
    v = mk_set({std::move(v)});
  }
  return mk_set(std::move(items));
}

Value union_family(const Value& x) {
  require_set(x, "union");
  std::vector<Value> items;
  for (const Value& e : x.elements()) {
    if (!e.is_set()) {
      throw GuardError("union: family contains a matrix element");
    }
    items.insert(items.end(), e.elements().begin(), e.elements().end());
  }
  return mk_set(std::move(items));
}

Value union2(const Value& x, const Value& y) {
  if (!x.is_set() || !y.is_set()) {
    throw KindError("union2: both arguments must be sets");
  }
  return union_family(pair(x, y));
}

Value power_set(const Value& x, std::size_t cap) {
  require_set(x, "pow");
  const auto& elems = x.elements();
  const std::size_t n = elems.size();
  if (n >= 63 || (std::size_t{1} << n) > cap) {
    throw CapError("pow: 2^" + std::to_string(n) + " results exceed cap " +
                   std::to_string(cap));
  }
  std::vector<Value> subsets;
  subsets.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Value> items;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) items.push_back(elems[i]);
    }
    subsets.push_back(mk_set(std::move(items)));
  }
  return mk_set(std::move(subsets));
}

namespace {

// Runs fn once per length-`slots` index tuple over {0..choices-1}; `count`
// is choices^slots, already checked against the cap by the caller.
template <typename Fn>
void for_each_tuple(std::size_t choices, std::size_t slots, std::size_t count,
                    Fn&& fn) {
  std::vector<std::size_t> idx(slots, 0);
  for (std::size_t produced = 0; produced < count; ++produced) {
    fn(idx);
    for (std::size_t k = slots; k-- > 0;) {
      if (++idx[k] < choices) break;
      idx[k] = 0;
    }
  }
}

}  // namespace

Value set_of_matrices(std::size_t m, std::size_t n, const Value& x,
                      std::size_t cap) {
  require_set(x, "matset");
  if (m == 0 || n == 0) {
    throw ConstructionError("matset: dimensions must be positive");
  }
  if (m * n == 1) return x;  // a 1x1 matrix is its entry
  const auto& elems = x.elements();
  const std::size_t count = pow_capped(elems.size(), m * n, cap);
  if (count > cap) {
    throw CapError("matset: " + std::to_string(elems.size()) + "^" +
                   std::to_string(m * n) + " results exceed cap " +
                   std::to_string(cap));
  }
  std::vector<Value> matrices;
  matrices.reserve(count);
  for_each_tuple(elems.size(), m * n, count,
                 [&](const std::vector<std::size_t>& ix) {
                   std::vector<Value> entries;
                   entries.reserve(ix.size());
                   for (std::size_t i : ix) entries.push_back(elems[i]);
                   matrices.push_back(mk_matrix(m, n, std::move(entries)));
                 });
  return mk_set(std::move(matrices));
}

Value tuple_of(std::vector<Value> items) {
  if (items.empty()) {
    throw ConstructionError("tuple: needs at least one item");
  }
  const std::size_t n = items.size();
  return mk_matrix(1, n, std::move(items));
}

Value cartesian(const Value& x, const Value& y, std::size_t cap) {
  require_set(x, "cart");
  require_set(y, "cart");
  const auto& xs = x.elements();
  const auto& ys = y.elements();
  if (!ys.empty() && xs.size() > cap / ys.size()) {
    throw CapError("cart: " + std::to_string(xs.size()) + "*" +
                   std::to_string(ys.size()) + " results exceed cap " +
                   std::to_string(cap));
  }
  std::vector<Value> pairs;
  pairs.reserve(xs.size() * ys.size());
  for (const Value& b : xs) {
    for (const Value& c : ys) {
      pairs.push_back(mk_matrix(1, 2, {b, c}));
    }
  }
  return mk_set(std::move(pairs));
}

Value cartesian_n(std::span<const Value> factors, std::size_t cap) {
  if (factors.size() < 2) {
    throw ConstructionError("cartn: needs at least two factors");
  }
  std::size_t count = 1;
  for (const Value& f : factors) {
    require_set(f, "cartn");
    count = f.size() == 0 ? 0
                          : (count > cap / f.size() ? cap + 1
                                                    : count * f.size());
  }
  if (count > cap) {
    throw CapError("cartn: results exceed cap " + std::to_string(cap));
  }
  // Odometer over the factor index space; each tuple is a flat 1-by-k row.
  std::vector<Value> tuples;
  tuples.reserve(count);
  std::vector<std::size_t> idx(factors.size(), 0);
  for (std::size_t produced = 0; produced < count; ++produced) {
    std::vector<Value> items;
    items.reserve(factors.size());
    for (std::size_t k = 0; k < factors.size(); ++k) {
      items.push_back(factors[k].elements()[idx[k]]);
    }
    tuples.push_back(mk_matrix(1, factors.size(), std::move(items)));
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++idx[k] < factors[k].size()) break;
      idx[k] = 0;
    }
  }
  return mk_set(std::move(tuples));
}

Value function_space(const Value& x, const Value& y, std::size_t cap) {
  require_set(x, "funspace");
  require_set(y, "funspace");
  const auto& dom = x.elements();
  const auto& cod = y.elements();
  const std::size_t count = pow_capped(cod.size(), dom.size(), cap);
  if (count > cap) {
    throw CapError("funspace: " + std::to_string(cod.size()) + "^" +
                   std::to_string(dom.size()) + " results exceed cap " +
                   std::to_string(cap));
  }
  if (dom.empty()) {
    // Exactly one function from the empty set: the empty graph.
    return mk_set({Value()});
  }
  if (cod.empty()) return Value();
  std::vector<Value> graphs;
  graphs.reserve(count);
  for_each_tuple(cod.size(), dom.size(), count,
                 [&](const std::vector<std::size_t>& ix) {
                   std::vector<Value> edges;
                   edges.reserve(dom.size());
                   for (std::size_t i = 0; i < dom.size(); ++i) {
                     edges.push_back(mk_matrix(1, 2, {dom[i], cod[ix[i]]}));
                   }
                   graphs.push_back(mk_set(std::move(edges)));
                 });
  return mk_set(std::move(graphs));
}

Value foundation_witness(const Value& x) {
  require_set(x, "foundation_witness");
  if (x.size() == 0) {
    throw GuardError("foundation_witness: set is empty");
  }
  for (const Value& z : x.elements()) {
    if (!z.is_set()) {
      throw GuardError("foundation_witness: element is a matrix");
    }
  }
  for (const Value& z : x.elements()) {
    bool disjoint = true;
    for (const Value& w : z.elements()) {
      if (member(w, x)) {
        disjoint = false;
        break;
      }
    }
    if (disjoint) return z;
  }
  // Unreachable for well-founded values: a minimal-rank element always
  // qualifies, because its members have strictly smaller rank than
  // everything in x.
  throw Error("foundation_witness: no witness found");
}

Value separation_if(const Value& x,
                    const std::function<bool(const Value&)>& pred) {
  require_set(x, "separation");
  std::vector<Value> kept;
  for (const Value& e : x.elements()) {
    if (pred(e)) kept.push_back(e);
  }
  return mk_set(std::move(kept));
}

Value replacement_with(
    const Value& x, std::span<const Value> witnesses,
    const std::function<bool(const Value&, const Value&)>& rel) {
  require_set(x, "replacement");
  std::vector<Value> image;
  image.reserve(x.size());
  for (const Value& e : x.elements()) {
    std::size_t hits = 0;
    const Value* found = nullptr;
    for (const Value& w : witnesses) {
      if (rel(e, w)) {
        ++hits;
        found = &w;
        if (hits > 1) break;
      }
    }
    if (hits != 1) {
      throw FunctionalityError(
          "replacement: relation is not functional (element has " +
          std::string(hits == 0 ? "no witness" : "several witnesses") +
          " in the universe)");
    }
    image.push_back(*found);
  }
  return mk_set(std::move(image));
}

ShapePartition partition_by_shape(const Value& x) {
  require_set(x, "partition_by_shape");
  std::map<Shape, std::vector<Value>> buckets;
  for (const Value& e : x.elements()) {
    buckets[shape_of(e)].push_back(e);
  }
  ShapePartition out;
  for (auto& [shape, items] : buckets) {
    out.emplace(shape, mk_set(std::move(items)));
  }
  return out;
}

}  // namespace smx
