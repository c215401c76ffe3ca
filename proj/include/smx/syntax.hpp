#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "smx/value.hpp"

namespace smx {

// Abstract syntax for the term language. Terms denote values; they are
// produced by parse_term and consumed by the evaluator. Nodes are immutable
// and shared.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Named operations applicable in term position. `matset` additionally
// carries its two dimension literals on the App node.
enum class AppOp { pair, union_family, power, matset, cart, funspace, succ };

struct Term {
  struct Empty {};                       // {}
  struct Var { std::string name; };      // x
  struct SetLit { std::vector<TermPtr> items; };
  struct MatrixLit {                     // [a b; c d]; row-major entries
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<TermPtr> entries;
  };
  struct Tuple { std::vector<TermPtr> items; };  // <a, b, c> sugar
  struct Numeral { std::size_t value = 0; };     // decimal sugar
  struct App {
    AppOp op;
    std::size_t rows = 0;  // matset only
    std::size_t cols = 0;  // matset only
    std::vector<TermPtr> args;
  };

  using Node =
      std::variant<Empty, Var, SetLit, MatrixLit, Tuple, Numeral, App>;
  Node node;
};

// Formulas are classical and two-valued. Quantifiers come in a bounded form
// (ranging over the elements of a term) and an unbounded form (ranging over
// a configured finite universe).
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  struct BoolLit { bool value; };                    // true / false
  struct Member { TermPtr lhs, rhs; };               // a in x
  struct Equal { TermPtr lhs, rhs; };                // a = b
  struct SubsetOf { TermPtr lhs, rhs; };             // x sub y
  struct Not { FormulaPtr body; };
  struct And { FormulaPtr lhs, rhs; };
  struct Or { FormulaPtr lhs, rhs; };
  struct Implies { FormulaPtr lhs, rhs; };
  struct Iff { FormulaPtr lhs, rhs; };
  struct ForallIn { std::string var; TermPtr domain; FormulaPtr body; };
  struct ExistsIn { std::string var; TermPtr domain; FormulaPtr body; };
  struct ForallUniv { std::string var; FormulaPtr body; };
  struct ExistsUniv { std::string var; FormulaPtr body; };

  using Node = std::variant<BoolLit, Member, Equal, SubsetOf, Not, And, Or,
                            Implies, Iff, ForallIn, ExistsIn, ForallUniv,
                            ExistsUniv>;
  Node node;
};

// Parses a complete term or formula; trailing input is a ParseError.
// Precedence, tightest first: not, and, or, ->, <->; `and`/`or` associate
// left, the arrows associate right; quantifier bodies are parenthesized.
TermPtr parse_term(const std::string& text);
FormulaPtr parse_formula(const std::string& text);

// Canonical text for a value: sets as {a, b} in canonical element order,
// matrices as [a b; c d] with a single space between columns and "; "
// between rows. render round-trips through parse_term for every value.
std::string render(const Value& v);

// Shape descriptors print as "set" for a leaf and "RxC(child, ...)" for a
// grid, e.g. "1x2(set, set)".
std::string render_shape(const Shape& s);

}  // namespace smx
