#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smx {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument had the wrong kind (e.g. a matrix where a set is required).
class KindError : public Error {
 public:
  using Error::Error;
};

// A literal or constructor call was malformed (dimension/length mismatch,
// empty tuple, oversized numeral).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// A guarded operation was applied outside its guard, e.g. the sum set of a
// family containing a matrix.
class GuardError : public Error {
 public:
  using Error::Error;
};

// A combinatorial result would exceed the configured cardinality cap.
class CapError : public Error {
 public:
  using Error::Error;
};

// A relation used for an image construction was not functional on its
// domain (zero or more than one witness for some element).
class FunctionalityError : public Error {
 public:
  using Error::Error;
};

// A per-shape family does not cover every shape occurring in the input.
class CoverageError : public Error {
 public:
  using Error::Error;
};

// Input text could not be parsed; `position` is the byte offset into the
// input where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Evaluation failed: unbound variable, missing universe, and similar.
class EvalError : public Error {
 public:
  using Error::Error;
};

// A value left the matrix-free fragment where only sets are meaningful.
class FragmentError : public Error {
 public:
  using Error::Error;
};

}  // namespace smx
