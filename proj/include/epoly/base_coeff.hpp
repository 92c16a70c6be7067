#ifndef EPOLY_BASE_COEFF_HPP
#define EPOLY_BASE_COEFF_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "epoly/rational.hpp"

namespace epoly {

// Coefficient from the base ring K = Q[b0, b1, ...]: a polynomial over the
// rationals in the transcendental symbols b_j. Stored sparse, no zero
// coefficients, exponent keys trimmed of trailing zeros so equal monomials
// have equal keys regardless of how many symbols are in play.
class BaseCoeff {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, Rational>;

  BaseCoeff() = default;  // zero
  explicit BaseCoeff(const Rational& r);
  explicit BaseCoeff(long n) : BaseCoeff(make_rational(n)) {}

  // The symbol b_j.
  static BaseCoeff symbol(std::uint32_t j);
  static BaseCoeff monomial(Exponents exps, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  // Requires is_rational(); the zero polynomial reads as 0.
  Rational as_rational() const;

  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  // Number of b-symbols needed to express this coefficient.
  std::uint32_t symbol_count() const;

  BaseCoeff& operator+=(const BaseCoeff& rhs);
  BaseCoeff& operator-=(const BaseCoeff& rhs);
  BaseCoeff& operator*=(const BaseCoeff& rhs);
  friend BaseCoeff operator+(BaseCoeff a, const BaseCoeff& b) { return a += b; }
  friend BaseCoeff operator-(BaseCoeff a, const BaseCoeff& b) { return a -= b; }
  friend BaseCoeff operator*(const BaseCoeff& a, const BaseCoeff& b);
  BaseCoeff operator-() const;
  BaseCoeff scaled(const Rational& r) const;

  // Deterministic total order (term count, then keys/values lexicographically).
  int compare(const BaseCoeff& rhs) const;
  bool operator==(const BaseCoeff& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const BaseCoeff& rhs) const { return !(*this == rhs); }

 private:
  TermMap terms_;
  void add_term(const Exponents& exps, const Rational& coeff);
};

}  // namespace epoly

#endif
