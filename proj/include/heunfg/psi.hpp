#pragma once

#include <optional>

#include "heunfg/characteristics.hpp"
#include "heunfg/multipoly.hpp"
#include "heunfg/singular_rational.hpp"

namespace heunfg {

class InvalidModulus : public std::runtime_error {
public:
    InvalidModulus() : std::runtime_error("a must not be 0 or 1") {}
};

/// The generating polynomial Psi(l, z): degree g in l, degree N in z, with
/// l^g coefficient z^{m1} (z-1)^{m2} (z-a)^{m3}.  Product of two solutions
/// of the underlying second-order equation for every value of l.
struct PsiPolynomial {
    Characteristics m;
    std::optional<Rational> a;  // nullopt: symbolic modulus
    int g = 0;
    MultiPoly psi;  // polynomial in z, l and (when symbolic) a

    /// Coefficient of l^{g-j}, a polynomial in z (and a); index 0 is the
    /// fixed leading coefficient.
    MultiPoly coeff(int j) const { return psi.coeff_l(g - j); }
};

/// z(z-1)(z-a)
MultiPoly singular_cubic();
/// The first-derivative coefficient of the underlying equation scaled by
/// 2 z(z-1)(z-a): sum_i (1-2m_i) * (product of the other two linear factors).
MultiPoly odd_coefficient(const Characteristics& m);
/// The zeroth-order coefficient scaled by 4 z(z-1)(z-a): N(N-2m0-1) z + l.
MultiPoly even_coefficient(const Characteristics& m);

/// The cleared-denominator third-order form applied to psi; identically
/// zero exactly when psi is a product of two solutions.
MultiPoly product_equation_residual(const Characteristics& m, const MultiPoly& psi);

/// Determines a_1..a_g by exact linear algebra: their z-coefficients are
/// unknowns, the residual's z^p l^q coefficients give the equations.  The
/// solution exists and is unique; both solver failure modes signal bugs.
PsiPolynomial build_psi(const Characteristics& m, std::optional<Rational> a = std::nullopt);

/// a_j / a_0 as a rational function of z with poles among {0, 1, a}.
SingularRational coeff_ratio(const PsiPolynomial& p, int j);

}  // namespace heunfg
