#ifndef EPOLY_ERRORS_HPP
#define EPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epoly {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller misuse: mismatched nvars, bad indices, out-of-range parameters.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Laurent encoding rejects coefficients outside Q.
class CoefficientNotRational : public Error {
 public:
  explicit CoefficientNotRational(const std::string& msg) : Error(msg) {}
};

// Laurent encoding rejects exponents outside the extracted lattice.
class ExponentOutsideLattice : public Error {
 public:
  explicit ExponentOutsideLattice(const std::string& msg) : Error(msg) {}
};

// Resource budget exhausted. Never a silent wrong answer.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

}  // namespace epoly

#endif
