#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "smx/value.hpp"

namespace smx {

// Default bound on the cardinality of combinatorially constructed results
// (power sets, matrix spaces, products, function spaces). Operations that
// would exceed the cap throw CapError instead of allocating.
inline constexpr std::size_t kDefaultCap = 1'000'000;

// Membership. Matrices have no members, so member(a, M) is false for every
// a; only a set can contain anything.
bool member(const Value& a, const Value& x);

// Subset test. Both arguments must be sets (KindError otherwise).
bool subset(const Value& x, const Value& y);

// {a, b}; collapses to a singleton when a equals b.
Value pair(const Value& a, const Value& b);

// {x} for a set x. The matrix case is rejected because succession is a
// set-forming step on sets only.
Value successor(const Value& x);

// Numerals built by iterated succession from the empty set:
// 0 = {}, n+1 = {n}.
Value numeral(std::size_t n);

// {0, 1, ..., n-1} as numerals.
Value naturals_upto(std::size_t n);

// Union of a family: x must be a set, and every element of x must itself be
// a set. A matrix element is a guard violation (GuardError), not a value to
// be skipped.
Value union_family(const Value& x);

// Binary union of two sets.
Value union2(const Value& x, const Value& y);

// All subsets of the set x. |result| = 2^|x|, checked against cap first.
Value power_set(const Value& x, std::size_t cap = kDefaultCap);

// The set of all m-by-n matrices with entries drawn from the set x.
// |result| = |x|^(m*n), checked against cap. With m = n = 1 the result is x
// itself, since a 1x1 matrix is its entry.
Value set_of_matrices(std::size_t m, std::size_t n, const Value& x,
                      std::size_t cap = kDefaultCap);

// <x1, ..., xn> encoded as the 1-by-n matrix [x1 ... xn]; a single-item
// tuple is the item itself. Items may be sets or matrices.
Value tuple_of(std::vector<Value> items);

// { [b c] : b in x, c in y } for sets x, y.
Value cartesian(const Value& x, const Value& y, std::size_t cap = kDefaultCap);

// Flat k-ary product: 1-by-k tuples, one coordinate per factor. Requires at
// least two factors; cartesian_n({x, y}) == cartesian(x, y).
Value cartesian_n(std::span<const Value> factors,
                  std::size_t cap = kDefaultCap);

// y^x: graphs of the total functions from set x to set y, each graph a set
// of pairs [b c]. |result| = |y|^|x|, checked against cap.
Value function_space(const Value& x, const Value& y,
                     std::size_t cap = kDefaultCap);

// An element z of x sharing no member with x. Requires x to be a nonempty
// set whose elements are all sets; such a witness always exists here
// because membership is well-founded. Deterministically returns the first
// qualifying element in canonical order.
Value foundation_witness(const Value& x);

// Subset of the set x selected by an arbitrary predicate.
Value separation_if(const Value& x,
                    const std::function<bool(const Value&)>& pred);

// Image of the set x under a relation that must be functional on x:
// for each element, exactly one witness in `witnesses` may satisfy
// rel(element, witness); zero or several is a FunctionalityError.
Value replacement_with(
    const Value& x, std::span<const Value> witnesses,
    const std::function<bool(const Value&, const Value&)>& rel);

// Elements of a set grouped by shape. Blocks are nonempty sets; their
// union is x and distinct blocks are disjoint.
using ShapePartition = std::map<Shape, Value>;
ShapePartition partition_by_shape(const Value& x);

}  // namespace smx
