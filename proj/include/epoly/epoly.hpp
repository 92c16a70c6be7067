#ifndef EPOLY_EPOLY_HPP
#define EPOLY_EPOLY_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "epoly/base_coeff.hpp"

namespace epoly {

class EPoly;
using EPolyPtr = std::shared_ptr<const EPoly>;

// x^beta * t^a with beta in N^n and a an exponential polynomial with zero
// constant part. exparg == nullptr encodes a = 0, so the trivial monomial is
// {xexp all zero, exparg null}.
struct GenMonomial {
  std::vector<std::uint32_t> xexp;
  EPolyPtr exparg;

  bool is_trivial() const;
  std::uint32_t xdegree() const;
  // 0 when exparg is 0, else 1 + height(*exparg).
  std::uint32_t tower_height() const;
};

// Total order: tower height, then graded lex on xexp, then the exponent
// arguments recursively. Returns <0, 0, >0.
int compare(const GenMonomial& a, const GenMonomial& b);

// Canonical-form element of K[x1..xn]^E: sorted terms (descending monomial
// order), no zero coefficients. Immutable after construction.
class EPoly {
 public:
  using Term = std::pair<GenMonomial, BaseCoeff>;

  EPoly() : nvars_(0), height_(0) {}

  static EPoly zero(std::uint32_t nvars);
  static EPoly one(std::uint32_t nvars);
  static EPoly constant(std::uint32_t nvars, const Rational& r);
  static EPoly constant(std::uint32_t nvars, const BaseCoeff& c);
  static EPoly variable(std::uint32_t nvars, std::uint32_t index);
  static EPoly monomial(std::uint32_t nvars, GenMonomial m, BaseCoeff c);
  // Normalizes: merges duplicate monomials, drops zeros, sorts.
  static EPoly from_terms(std::uint32_t nvars, std::vector<Term> terms);

  std::uint32_t nvars() const { return nvars_; }
  std::uint32_t height() const { return height_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }

  // Coefficient of the trivial monomial (zero if absent).
  const BaseCoeff& constant_part() const;

  int compare(const EPoly& rhs) const;
  bool operator==(const EPoly& rhs) const { return compare(rhs) == 0; }
  bool operator!=(const EPoly& rhs) const { return compare(rhs) != 0; }

  EPoly operator-() const;
  friend EPoly operator+(const EPoly& a, const EPoly& b);
  friend EPoly operator-(const EPoly& a, const EPoly& b);
  friend EPoly operator*(const EPoly& a, const EPoly& b);

 private:
  std::uint32_t nvars_;
  std::uint32_t height_;
  std::vector<Term> terms_;
};

EPoly add(const EPoly& p, const EPoly& q);
EPoly sub(const EPoly& p, const EPoly& q);
EPoly mul(const EPoly& p, const EPoly& q);
EPoly neg(const EPoly& p);
EPoly scale(const EPoly& p, const Rational& r);
EPoly scale(const EPoly& p, const BaseCoeff& c);

// E(p) = E_K(c) * t^a = t^a for p = c + a (the base exponential is trivial).
EPoly exp_apply(const EPoly& p);

// p = c*1 + a with a of zero constant part (a legal formal exponent).
std::pair<BaseCoeff, EPoly> split_constant(const EPoly& p);

std::uint32_t height(const EPoly& p);
bool equals(const EPoly& p, const EPoly& q);

// Re-target to a wider variable count (padding x-exponent vectors).
EPoly with_nvars(const EPoly& p, std::uint32_t nvars);

// Structural invariant check; throws Error with a description on violation.
void validate(const EPoly& p);

}  // namespace epoly

#endif
