#pragma once

#include "singreg/multipoly.hpp"
#include "singreg/unipoly.hpp"

#include <string>

namespace singreg::poly {

/// Res_var(p, q): the Sylvester determinant with respect to `var`, computed
/// with the subresultant remainder sequence. Both inputs must have positive
/// degree in `var`.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

/// Projection data for two plane curves p(x, y), q(x, y) after eliminating
/// one coordinate.
struct Elimination {
  UniPoly resultant;  // exact Res_eliminated(p, q) in the kept variable
  /// Principal subresultant coefficient of degree 1, up to a nonzero
  /// constant. At a root k of the resultant the two fibres share exactly one
  /// (necessarily real) point iff this does not vanish at k, provided the
  /// leading coefficients of p and q in the eliminated variable do not vanish
  /// simultaneously there.
  UniPoly psc1;
  /// Leading coefficients (in the eliminated variable) as polynomials in the kept one.
  UniPoly lead_p;
  UniPoly lead_q;
};

/// Eliminates `eliminated` from two polynomials in {eliminated, kept}.
Elimination eliminate(const MultiPoly& p, const MultiPoly& q, const std::string& eliminated, const std::string& kept);

}  // namespace singreg::poly
