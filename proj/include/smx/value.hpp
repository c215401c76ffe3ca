#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace smx {

// A hereditarily finite value: either a set of values or an m-by-n matrix of
// values with m*n >= 2. Instances are immutable and canonical by
// construction:
//
//   * set elements are stored strictly increasing under canonical_compare
//     (so there are no duplicates),
//   * a 1x1 matrix is never represented; mk_matrix(1, 1, {x}) yields x
//     itself, which makes [x] = x and [[M]] = M hold definitionally.
//
// Copies are cheap (shared immutable nodes), and structural equality
// coincides with extensional equality.
class Value {
 public:
  enum class Kind : std::uint8_t { set, matrix };

  // Default-constructed value is the empty set.
  Value();

  Kind kind() const noexcept;
  bool is_set() const noexcept { return kind() == Kind::set; }
  bool is_matrix() const noexcept { return kind() == Kind::matrix; }

  // Set access. Requires is_set().
  const std::vector<Value>& elements() const;
  std::size_t size() const;  // number of elements

  // Matrix access. Requires is_matrix().
  std::size_t rows() const;
  std::size_t cols() const;
  const std::vector<Value>& entries() const;  // row-major, rows()*cols() long

  // Rank of the membership/entry tree: rank({}) = 0, otherwise 1 + max rank
  // of the children. Cached at construction.
  std::size_t rank() const noexcept;

  // Depth of directly nested matrices: 0 for sets, 1 + max over entries for
  // matrices (set entries contribute 0 regardless of their contents).
  std::size_t grid_nesting() const noexcept;

  bool operator==(const Value& other) const noexcept;
  std::strong_ordering operator<=>(const Value& other) const noexcept;

  // Implementation node; defined privately in value.cpp.
  struct Node;

 private:
  explicit Value(std::shared_ptr<const Node> node) noexcept;

  std::shared_ptr<const Node> node_;

  friend Value mk_set(std::vector<Value> elements);
  friend Value mk_matrix(std::size_t rows, std::size_t cols,
                         std::vector<Value> entries);
  friend std::strong_ordering canonical_compare(const Value& a,
                                                const Value& b) noexcept;
  friend Value make_matrix_unchecked_impl(std::size_t rows, std::size_t cols,
                                          std::vector<Value> entries);
};

// Builds a set; the input may be in any order and contain duplicates.
Value mk_set(std::vector<Value> elements);

// Builds an m-by-n matrix from row-major entries. Throws ConstructionError
// if rows or cols is zero or entries.size() != rows*cols. A 1x1 call
// returns its sole entry unchanged.
Value mk_matrix(std::size_t rows, std::size_t cols,
                std::vector<Value> entries);

inline Value empty_set() { return Value(); }

// Total order on values: sets before matrices; sets by size then
// elementwise; matrices by rows, then cols, then row-major entries.
std::strong_ordering canonical_compare(const Value& a,
                                       const Value& b) noexcept;

inline bool values_equal(const Value& a, const Value& b) noexcept {
  return canonical_compare(a, b) == std::strong_ordering::equal;
}

inline std::size_t rank(const Value& v) noexcept { return v.rank(); }

// Structural hash consistent with values_equal.
std::size_t value_hash(const Value& v) noexcept;

// The shape of a value forgets set contents but keeps the matrix skeleton:
// a set is a Leaf, an m-by-n matrix is a Grid over the shapes of its
// entries. Grids always satisfy m*n >= 2, mirroring Value.
class Shape {
 public:
  Shape() noexcept = default;  // Leaf

  static Shape leaf() noexcept { return Shape(); }
  static Shape grid(std::size_t rows, std::size_t cols,
                    std::vector<Shape> children);

  bool is_leaf() const noexcept { return node_ == nullptr; }
  bool is_grid() const noexcept { return node_ != nullptr; }

  // Grid access. Requires is_grid().
  std::size_t rows() const;
  std::size_t cols() const;
  const std::vector<Shape>& children() const;

  // Number of Leaf positions in depth-first row-major order; 1 for a Leaf.
  std::size_t leaf_count() const noexcept;

  bool operator==(const Shape& other) const noexcept;
  std::strong_ordering operator<=>(const Shape& other) const noexcept;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

Shape shape_of(const Value& v);

// Leaf values of v in the order shape_of(v) enumerates its leaves. For a
// set this is {v} itself; for a matrix, the set-valued positions in
// depth-first row-major order.
std::vector<Value> shape_leaves(const Value& v);

// Rebuilds a value of the given shape from exactly shape.leaf_count()
// leaves. Inverse of shape_leaves when fed a value's own shape and leaves.
Value rebuild_with_leaves(const Shape& shape, std::span<const Value> leaves);

namespace detail {
// Test support: builds a matrix node without the 1x1 collapse, so checker
// tests can inject values that violate the canonical representation. Never
// use outside fault-injection tests.
Value make_matrix_unchecked(std::size_t rows, std::size_t cols,
                            std::vector<Value> entries);
}  // namespace detail

}  // namespace smx
