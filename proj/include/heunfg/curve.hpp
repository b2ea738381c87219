#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heunfg/psi.hpp"

namespace heunfg {

class NotDivisible : public std::runtime_error {
public:
    NotDivisible() : std::runtime_error("nu_squared: numerator not divisible by the singular factors") {}
};
class ZDependent : public std::runtime_error {
public:
    ZDependent() : std::runtime_error("nu_squared: quotient depends on z") {}
};
class EmptyClass : public std::runtime_error {
public:
    EmptyClass() : std::runtime_error("heun_polynomial_eigenvalues: negative degree") {}
};
class NotPerfectSquare : public std::runtime_error {
public:
    NotPerfectSquare() : std::runtime_error("branch_factorize: residual factor is not a perfect square") {}
};
class BadMultiplicity : public std::runtime_error {
public:
    BadMultiplicity() : std::runtime_error("branch_factorize: multiplicity not in {0, 2m+1}") {}
};

/// The hyperelliptic curve nu^2 = prod_j (l - l_j): monic of degree 2g+1 in
/// l, coefficients polynomial in a (constant when the modulus is rational).
struct SpectralCurve {
    Characteristics m;
    std::optional<Rational> a;
    int g = 0;
    MultiPoly nu2;  // z-free

    /// Branch points previously computed per rational modulus.
    std::map<Rational, std::vector<std::complex<double>>> cache;
};

SpectralCurve nu_squared(const PsiPolynomial& psi);

/// Numeric branch points at a rational modulus (must match the curve's own
/// modulus when that is rational); cached.
const std::vector<std::complex<double>>& branch_points(SpectralCurve& curve, const Rational& a);

/// One admissible sign pattern: reduced characteristics with each entry
/// m_i or -m_i-1 and a positive integer count of branch points.
struct SignClass {
    std::array<int, 4> pattern{};  // 1 where the entry is flipped
    Characteristics reduced;
    int count = 0;   // number of accessory values in the class
    int deg_f = 0;   // count - 1, the attached polynomial degree
};

/// Scans all 16 patterns and keeps those with a positive integer count;
/// pattern/complement pairs have opposite counts, so no duplicates remain.
std::vector<SignClass> enumerate_nk(const Characteristics& m);

/// Accessory shift between a reduced problem and the original: the reduced
/// eigenvalue lt corresponds to l = lt - shift.
AField eigenvalue_shift(const Characteristics& m, const Characteristics& reduced);

struct HeunEigenpair {
    std::optional<AField> lambda_exact;  // when expressible over Q(a)
    std::complex<double> lambda{};       // numeric value (rational-a mode)
    std::vector<std::complex<double>> f;  // monic polynomial, ascending (rational-a mode)
};

struct HeunEigenSystem {
    Characteristics reduced;
    int degree = 0;
    /// det(l I + T) as a monic polynomial in l: coefficient k is attached
    /// to l^(degree+1-k), each a polynomial in a.
    std::vector<UPoly> charpoly_a;
    std::vector<HeunEigenpair> values;
};

/// Accessory values at which the equation with the (possibly negative)
/// characteristics `reduced` has a polynomial solution of degree d, via the
/// (d+1)x(d+1) coefficient matrix.  Numeric roots and eigenvectors are
/// produced in rational-a mode; exact values whenever the characteristic
/// polynomial resolves over Q(a) after stripping zero roots.
HeunEigenSystem heun_polynomial_eigenvalues(const Characteristics& reduced, int d,
                                            std::optional<Rational> a);

/// Factorization of Psi at a branch point:
/// Psi(l_j, z) = sigma * z^M1 (z-1)^M2 (z-a)^M3 Fhat^2(z).
struct BranchPointRecord {
    std::optional<AField> lambda_exact;
    std::complex<double> lambda{};
    std::array<int, 4> M{};  // multiplicities; M[0] from the z-degree drop
    Characteristics reduced;
    int deg_f = 0;
    std::vector<AField> f_monic;  // exact mode: monic Fhat, ascending
    AField scale;                 // exact mode: sigma
    std::vector<std::complex<double>> f_numeric;  // numeric mode: monic
    std::optional<AField> lambda_tilde_exact;
    std::complex<double> lambda_tilde{};
};

/// Exact factorization; lambda must be polynomial in a (or plain rational).
BranchPointRecord branch_factorize(const PsiPolynomial& psi, const AField& lambda);
/// Numeric factorization; requires rational-a Psi.
BranchPointRecord branch_factorize(const PsiPolynomial& psi, std::complex<double> lambda,
                                   double tol = 1e-8);

/// Root sets whose members are all branch points: the leading z-coefficient
/// a0(l), Psi(l, s) at the three finite singularities, and (for N >= 2) the
/// z-discriminant of Psi.  Identically-zero sources yield no entry.
struct LabeledRoots {
    std::string label;
    std::vector<std::complex<double>> roots;
};
std::vector<LabeledRoots> special_lambda_roots(const PsiPolynomial& psi, const Rational& a);

struct StieltjesReport {
    std::vector<double> residuals;
    double max_residual = 0.0;
};

/// At a generic accessory value: every zero z_k of Psi(l, .) satisfies
/// prod_{j!=k} (z_k - z_j)^2 =
///   -nu2(l)/a0^2(l) * z_k^(2m1-1) (z_k-1)^(2m2-1) (z_k-a)^(2m3-1).
StieltjesReport stieltjes_product_check(const PsiPolynomial& psi, const SpectralCurve& curve,
                                        std::complex<double> lambda, const Rational& a);

/// At a branch point: every zero z_k of F satisfies
/// sum_{i!=k} 1/(z_k-z_i) =
///   ((2mt1-1)/z_k + (2mt2-1)/(z_k-1) + (2mt3-1)/(z_k-a)) / 4.
StieltjesReport stieltjes_sum_check(const BranchPointRecord& rec, const Rational& a);

}  // namespace heunfg
