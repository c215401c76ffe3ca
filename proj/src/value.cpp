#include "smx/value.hpp"

#include <algorithm>
#include <utility>

#include "smx/errors.hpp"

namespace smx {

struct Value::Node {
  Kind kind;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::uint32_t rank = 0;
  std::uint32_t nesting = 0;
  std::vector<Value> items;  // set elements or row-major matrix entries
};

namespace {

// Shared node for the empty set so that default construction never
// allocates and identical empties compare by pointer.
const std::shared_ptr<const Value::Node>& empty_node() {
  static const std::shared_ptr<const Value::Node> node = [] {
    auto n = std::make_shared<Value::Node>();
    n->kind = Value::Kind::set;
    return std::shared_ptr<const Value::Node>(std::move(n));
  }();
  return node;
}

}  // namespace

Value::Value() : node_(empty_node()) {}

Value::Value(std::shared_ptr<const Node> node) noexcept
    : node_(std::move(node)) {}

Value::Kind Value::kind() const noexcept { return node_->kind; }

const std::vector<Value>& Value::elements() const {
  if (!is_set()) throw KindError("elements() on a matrix");
  return node_->items;
}

std::size_t Value::size() const {
  if (!is_set()) throw KindError("size() on a matrix");
  return node_->items.size();
}

std::size_t Value::rows() const {
  if (!is_matrix()) throw KindError("rows() on a set");
  return node_->rows;
}

std::size_t Value::cols() const {
  if (!is_matrix()) throw KindError("cols() on a set");
  return node_->cols;
}

const std::vector<Value>& Value::entries() const {
  if (!is_matrix()) throw KindError("entries() on a set");
  return node_->items;
}

std::size_t Value::rank() const noexcept { return node_->rank; }

std::size_t Value::grid_nesting() const noexcept { return node_->nesting; }

std::strong_ordering canonical_compare(const Value& a,
                                       const Value& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.kind() != b.kind()) {
    return a.is_set() ? std::strong_ordering::less
                      : std::strong_ordering::greater;
  }
  const auto& xs = a.node_->items;
  const auto& ys = b.node_->items;
  if (a.is_matrix()) {
    if (auto c = a.node_->rows <=> b.node_->rows; c != 0) return c;
    if (auto c = a.node_->cols <=> b.node_->cols; c != 0) return c;
  } else {
    if (auto c = xs.size() <=> ys.size(); c != 0) return c;
  }
  // Same size (sets) or same dimensions (matrices): compare childwise.
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (auto c = canonical_compare(xs[i], ys[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool Value::operator==(const Value& other) const noexcept {
  return canonical_compare(*this, other) == std::strong_ordering::equal;
}

std::strong_ordering Value::operator<=>(const Value& other) const noexcept {
  return canonical_compare(*this, other);
}

Value mk_set(std::vector<Value> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (elements.empty()) return Value();
  auto node = std::make_shared<Value::Node>();
  node->kind = Value::Kind::set;
  std::uint32_t max_rank = 0;
  for (const Value& e : elements) {
    max_rank = std::max(max_rank, static_cast<std::uint32_t>(e.rank()));
  }
  node->rank = max_rank + 1;
  // A set is not itself a grid; its nesting stays 0 whatever it contains.
  node->items = std::move(elements);
  return Value(std::move(node));
}

namespace {

void check_matrix_args(std::size_t rows, std::size_t cols,
                       const std::vector<Value>& entries) {
  if (rows == 0 || cols == 0) {
    throw ConstructionError("matrix dimensions must be positive, got " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (entries.size() != rows * cols) {
    throw ConstructionError(
        "matrix entry count " + std::to_string(entries.size()) +
        " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

std::shared_ptr<const Value::Node> make_matrix_node(
    std::size_t rows, std::size_t cols, std::vector<Value> entries) {
  auto node = std::make_shared<Value::Node>();
  node->kind = Value::Kind::matrix;
  node->rows = static_cast<std::uint32_t>(rows);
  node->cols = static_cast<std::uint32_t>(cols);
  std::uint32_t max_rank = 0;
  std::uint32_t max_nesting = 0;
  for (const Value& e : entries) {
    max_rank = std::max(max_rank, static_cast<std::uint32_t>(e.rank()));
    max_nesting =
        std::max(max_nesting, static_cast<std::uint32_t>(e.grid_nesting()));
  }
  node->rank = max_rank + 1;
  node->nesting = max_nesting + 1;
  node->items = std::move(entries);
  return node;
}

}  // namespace

Value mk_matrix(std::size_t rows, std::size_t cols,
                std::vector<Value> entries) {
  check_matrix_args(rows, cols, entries);
  if (rows * cols == 1) return std::move(entries.front());
  return Value(make_matrix_node(rows, cols, std::move(entries)));
}

Value make_matrix_unchecked_impl(std::size_t rows, std::size_t cols,
                                 std::vector<Value> entries) {
  check_matrix_args(rows, cols, entries);
  return Value(make_matrix_node(rows, cols, std::move(entries)));
}

namespace detail {
Value make_matrix_unchecked(std::size_t rows, std::size_t cols,
                            std::vector<Value> entries) {
  return make_matrix_unchecked_impl(rows, cols, std::move(entries));
}
}  // namespace detail

std::size_t value_hash(const Value& v) noexcept {
  // FNV-style structural mix; matches values_equal because values are
  // canonical by construction.
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  if (v.is_set()) {
    mix(0x5e7);
    for (const Value& e : v.elements()) mix(value_hash(e));
  } else {
    mix(0x3a7);
    mix(v.rows());
    mix(v.cols());
    for (const Value& e : v.entries()) mix(value_hash(e));
  }
  return h;
}

struct Shape::Node {
  std::uint32_t rows;
  std::uint32_t cols;
  std::uint32_t leaves;
  std::vector<Shape> children;
};

Shape Shape::grid(std::size_t rows, std::size_t cols,
                  std::vector<Shape> children) {
  if (rows * cols < 2) {
    throw ConstructionError("grid shapes need at least two positions, got " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (children.size() != rows * cols) {
    throw ConstructionError("grid child count does not match dimensions");
  }
  auto node = std::make_shared<Node>();
  node->rows = static_cast<std::uint32_t>(rows);
  node->cols = static_cast<std::uint32_t>(cols);
  std::uint32_t leaves = 0;
  for (const Shape& c : children) {
    leaves += static_cast<std::uint32_t>(c.leaf_count());
  }
  node->leaves = leaves;
  node->children = std::move(children);
  Shape s;
  s.node_ = std::move(node);
  return s;
}

std::size_t Shape::rows() const {
  if (!node_) throw KindError("rows() on a leaf shape");
  return node_->rows;
}

std::size_t Shape::cols() const {
  if (!node_) throw KindError("cols() on a leaf shape");
  return node_->cols;
}

const std::vector<Shape>& Shape::children() const {
  if (!node_) throw KindError("children() on a leaf shape");
  return node_->children;
}

std::size_t Shape::leaf_count() const noexcept {
  return node_ ? node_->leaves : 1;
}

std::strong_ordering Shape::operator<=>(const Shape& other) const noexcept {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (is_leaf() != other.is_leaf()) {
    return is_leaf() ? std::strong_ordering::less
                     : std::strong_ordering::greater;
  }
  if (is_leaf()) return std::strong_ordering::equal;
  if (auto c = node_->rows <=> other.node_->rows; c != 0) return c;
  if (auto c = node_->cols <=> other.node_->cols; c != 0) return c;
  for (std::size_t i = 0; i < node_->children.size(); ++i) {
    if (auto c = node_->children[i] <=> other.node_->children[i]; c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

bool Shape::operator==(const Shape& other) const noexcept {
  return (*this <=> other) == std::strong_ordering::equal;
}

Shape shape_of(const Value& v) {
  if (v.is_set()) return Shape::leaf();
  std::vector<Shape> children;
  children.reserve(v.entries().size());
  for (const Value& e : v.entries()) children.push_back(shape_of(e));
  return Shape::grid(v.rows(), v.cols(), std::move(children));
}

namespace {

void collect_leaves(const Value& v, std::vector<Value>& out) {
  if (v.is_set()) {
    out.push_back(v);
    return;
  }
  for (const Value& e : v.entries()) collect_leaves(e, out);
}

Value rebuild_rec(const Shape& shape, std::span<const Value> leaves,
                  std::size_t& next) {
  if (shape.is_leaf()) {
    if (next >= leaves.size()) {
      throw ConstructionError("too few leaves for shape");
    }
    return leaves[next++];
  }
  std::vector<Value> entries;
  entries.reserve(shape.children().size());
  for (const Shape& c : shape.children()) {
    entries.push_back(rebuild_rec(c, leaves, next));
  }
  return mk_matrix(shape.rows(), shape.cols(), std::move(entries));
}

}  // namespace

std::vector<Value> shape_leaves(const Value& v) {
  std::vector<Value> out;
  collect_leaves(v, out);
  return out;
}

Value rebuild_with_leaves(const Shape& shape, std::span<const Value> leaves) {
  if (leaves.size() != shape.leaf_count()) {
    throw ConstructionError("leaf count " + std::to_string(leaves.size()) +
                            " does not match shape with " +
                            std::to_string(shape.leaf_count()) + " leaves");
  }
  std::size_t next = 0;
  return rebuild_rec(shape, leaves, next);
}

}  // namespace smx
