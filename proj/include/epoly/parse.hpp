#ifndef EPOLY_PARSE_HPP
#define EPOLY_PARSE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "epoly/epoly.hpp"

namespace epoly {

// Expression grammar (shared by every text interface):
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := atom ('^' nat)?
//   atom     := rational | 'x' nat? | 'y' nat? | 'b' nat
//             | 'E' '(' expr ')' | '(' expr ')'
//   rational := nat ('/' nat)?
// '/' requires a nonzero rational divisor (so E(x/2) is legal).
//
// In E-polynomial context the y-atoms alias onto the x-block: y_k = x_{k+1}
// (bare y = x2), matching the two-variable examples written in x and y.
// parse_xy_poly instead keeps x- and y-blocks separate and rejects E and b.

// Parses an element of K[x1..xn]^E. nvars is the max of min_nvars and the
// highest variable index used.
EPoly parse_epoly(std::string_view text, std::uint32_t min_nvars = 0);

// Canonical text form; parse_epoly(format_epoly(p)) == p.
std::string format_epoly(const EPoly& p);

// A plain polynomial over Q in separate x- and y-blocks.
struct XYPoly {
  struct Term {
    std::vector<std::uint32_t> xexp, yexp;
    Rational coeff;
  };
  std::uint32_t nx = 0, ny = 0;
  std::vector<Term> terms;  // sorted by (xexp, yexp), no zero coefficients
};

XYPoly parse_xy_poly(std::string_view text, std::uint32_t min_nx = 0,
                     std::uint32_t min_ny = 0);

std::string format_xy_poly(const XYPoly& p);

// Widen the blocks of an already-parsed polynomial.
XYPoly with_xy_arity(const XYPoly& p, std::uint32_t nx, std::uint32_t ny);

}  // namespace epoly

#endif
