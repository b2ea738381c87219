#pragma once

#include <stdexcept>

#include "heunfg/linsolve.hpp"
#include "heunfg/multipoly.hpp"

namespace heunfg {

class DegreeTooLow : public std::runtime_error {
public:
    DegreeTooLow() : std::runtime_error("discriminant_z: deg_z < 2") {}
};

/// Discriminant with respect to z of a polynomial in z with coefficients in
/// Q[l]; `p` must have no `a` dependence (specialize the modulus first).
/// Computed exactly as (-1)^{n(n-1)/2} Res_z(p, dp/dz) / lc_z(p).
UPoly discriminant_z(const MultiPoly& p);

/// Resultant of two polynomials in z with coefficients in Q[l] via the
/// Sylvester determinant (fraction-free).
UPoly resultant_z(const MultiPoly& p, const MultiPoly& q);

}  // namespace heunfg
