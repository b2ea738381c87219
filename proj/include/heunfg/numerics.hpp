#pragma once

#include <array>
#include <complex>
#include <functional>

#include "heunfg/curve.hpp"
#include "heunfg/quadrature.hpp"

namespace heunfg {

class TooCloseToSingularity : public std::runtime_error {
public:
    TooCloseToSingularity()
        : std::runtime_error("evaluation point too close to a singular point") {}
};

class OutsideValidatedRegime : public std::runtime_error {
public:
    explicit OutsideValidatedRegime(const std::string& why)
        : std::runtime_error("outside the validated regime: " + why) {}
};

struct SolutionValue {
    std::complex<double> y1, y2;
    std::complex<double> lambda, z;
};

/// Evaluates the closed-form solution pair
///   Y_{1,2} = sqrt(Psi) exp(-+ (i nu / 2) Integral),
///   Integral = int z^m1 (z-1)^m2 (z-a)^m3 dz / (Psi sqrt(z(z-1)(z-a))),
/// continued from a base point on (0,1) chosen away from zeros of Psi.
/// Nearby evaluations reuse an anchor integral so finite differences of the
/// result are numerically consistent.
class SolutionEvaluator {
public:
    /// Generic accessory value (not a branch point).
    SolutionEvaluator(const PsiPolynomial& psi, const SpectralCurve& curve,
                      std::complex<double> lambda, double tol = 1e-13);

    SolutionValue operator()(std::complex<double> z) const;
    /// Degenerate pair at a branch point: Y1 = sqrt(Psi), Y2 = Y1 * Integral.
    SolutionValue degenerate(std::complex<double> z) const;

    std::complex<double> nu() const { return nu_; }
    double modulus() const { return a_; }
    std::complex<double> psi_at(std::complex<double> z) const;
    /// Continued sqrt(z(z-1)(z-a)) at z, same branch as inside the integral.
    std::complex<double> sqrt3_at(std::complex<double> z) const;
    double base() const { return base_; }
    const std::vector<std::complex<double>>& psi_zeros() const { return zeros_; }

private:
    struct Anchor {
        std::complex<double> z;
        std::complex<double> integral;
        std::complex<double> sqrt3;     // continued branch value at z
        std::complex<double> sqrt_psi;  // continued branch value at z
    };
    std::complex<double> integrand(std::complex<double> z, std::complex<double> s3) const;
    /// Integral from z = 0 to the base point, making the degenerate second
    /// solution's integral start at the origin; 0 when the integrand is not
    /// integrable there (negative m1 or a zero of Psi at the origin).
    std::complex<double> origin_offset() const;
    const Anchor& anchor_for(std::complex<double> z) const;
    Anchor extend(const Anchor& from, std::complex<double> z) const;
    QuadraturePath path_between(std::complex<double> z0, std::complex<double> z1) const;

    const PsiPolynomial* psi_;
    double a_ = 0.0;
    std::complex<double> lambda_;
    std::complex<double> nu_;
    double tol_;
    double base_ = 0.5;
    std::vector<std::complex<double>> zeros_;
    mutable std::vector<Anchor> anchors_;
    mutable std::optional<std::complex<double>> origin_offset_;
};

/// Residual of y against the second-order equation with the given
/// characteristics, from Richardson-extrapolated central differences of the
/// black-box evaluator; normalized by the largest term magnitude.  The step
/// is h * (local scale).
double ode_residual(const Characteristics& m, std::complex<double> lambda, double a,
                    const std::function<std::complex<double>(std::complex<double>)>& y,
                    std::complex<double> z, double h = 5e-3);

/// Relative deviation of the finite-difference Wronskian of the evaluator's
/// pair from -i nu z^m1 (z-1)^m2 (z-a)^m3 / sqrt(z(z-1)(z-a)).
double wronskian_check(const SolutionEvaluator& ev, const Characteristics& m,
                       std::complex<double> z, double h = 5e-3);

/// The two connection angles: phi from the [0,1] integral, psi along the
/// 0 -> a leg with semicircular detours above z = 1 and above real zeros of
/// Psi.  Validated regime: rational a > 1, real non-branch lambda with
/// nu^2(lambda) > 0, all characteristics nonnegative.
std::pair<double, double> connection_angles(const PsiPolynomial& psi, const SpectralCurve& curve,
                                            double lambda, double tol = 1e-11);

using Mat2 = std::array<std::array<double, 2>, 2>;

struct MonodromyData {
    double phi = 0.0, psi_angle = 0.0;
    Mat2 M0{}, M1{}, M2{};
};

/// The reflection generators around z = 0, 1, a:
/// M0 = diag(1,-1), M1 and M2 its conjugates by the rotation through phi
/// resp. psi.
MonodromyData monodromy_generators(const PsiPolynomial& psi, const SpectralCurve& curve,
                                   double lambda);

}  // namespace heunfg
