#ifndef EPOLY_LAURENT_HPP
#define EPOLY_LAURENT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "epoly/epoly.hpp"
#include "epoly/rational.hpp"

namespace epoly {

// Sparse element of Q[x1..xn][u1..ur, u1^-1..ur^-1]: x-exponents in N,
// u-exponents in Z, rational coefficients only, canonical sorted order.
class LaurentPoly {
 public:
  struct Key {
    std::vector<std::uint32_t> xexp;
    std::vector<std::int64_t> uexp;
    auto operator<=>(const Key&) const = default;
  };
  using Term = std::pair<Key, Rational>;

  LaurentPoly() = default;
  LaurentPoly(std::uint32_t nx, std::uint32_t nu) : nx_(nx), nu_(nu) {}

  static LaurentPoly constant(std::uint32_t nx, std::uint32_t nu, const Rational& r);
  static LaurentPoly monomial(std::uint32_t nx, std::uint32_t nu, Key key,
                              const Rational& r);
  static LaurentPoly from_terms(std::uint32_t nx, std::uint32_t nu,
                                std::vector<Term> terms);

  std::uint32_t nx() const { return nx_; }
  std::uint32_t nu() const { return nu_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool operator==(const LaurentPoly& rhs) const = default;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Rational& r) const;

  // Widen the variable blocks (appending zero exponents).
  LaurentPoly resized(std::uint32_t nx, std::uint32_t nu) const;

  std::string to_string(const std::string& xname = "x",
                        const std::string& uname = "u") const;

 private:
  std::uint32_t nx_ = 0, nu_ = 0;
  std::vector<Term> terms_;
};

// Exact evaluation at a rational point; u-coordinates must be nonzero
// (negative exponents are evaluated through the inverse).
Rational evaluate_at_point(const LaurentPoly& f, std::span<const Rational> xpoint,
                           std::span<const Rational> upoint);

// The finitely generated subgroup of formal exponents occurring in a family
// of E-polynomials: a Z-basis obtained by common-denominator scaling and
// Hermite reduction of the atoms' coordinates over their generalized-monomial
// axes. Every atom decodes to integer coordinates over the basis.
class ExponentLattice {
 public:
  // Atoms are the distinct top-level exponent arguments of ps (plus any
  // extras, which lets callers test enlargement invariance).
  static ExponentLattice extract(std::span<const EPoly> ps,
                                 std::span<const EPoly> extra_atoms = {});

  std::uint32_t nvars() const { return nvars_; }
  std::uint32_t rank() const { return static_cast<std::uint32_t>(basis_.size()); }
  const std::vector<EPoly>& atoms() const { return atoms_; }
  // Basis vectors reconstructed as E-polynomials (exact).
  const std::vector<EPoly>& basis() const { return basis_; }
  // Positive integer clearing every rational basis coordinate.
  const Integer& denominator() const { return denominator_; }

  // Integer coordinates of an exponent argument over basis(); throws
  // ExponentOutsideLattice when the argument is not a lattice element.
  std::vector<Integer> coordinates(const EPoly& exparg) const;

 private:
  std::uint32_t nvars_ = 0;
  std::vector<EPoly> atoms_;
  std::vector<EPoly> basis_;
  Integer denominator_ = 1;
  // Axes: the distinct (generalized monomial, b-monomial) coordinates that
  // span the atoms; each axis is kept as a single-term EPoly.
  std::vector<EPoly> axes_;
  std::vector<std::vector<Integer>> basis_rows_;  // over axes, scaled by denominator_
};

// Ring embedding determined by a lattice: x^beta * t^a -> x^beta * u^coords(a).
// Coefficients must be pure rationals (CoefficientNotRational otherwise).
LaurentPoly encode(const EPoly& p, const ExponentLattice& lattice);
EPoly decode(const LaurentPoly& f, const ExponentLattice& lattice);

}  // namespace epoly

#endif
