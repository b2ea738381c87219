#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace heunfg {

class NoConvergence : public std::runtime_error {
public:
    NoConvergence() : std::runtime_error("poly_roots_numeric: iteration cap reached") {}
};

/// All complex roots (with multiplicity) of a polynomial given by ascending
/// coefficients.  Aberth-Ehrlich simultaneous iteration with a Newton
/// polish; the result satisfies the backward-error bound
/// ||p - lc*prod(x-r_i)||_inf / ||p||_inf <= tol.  Throws NoConvergence
/// after 500 iterations, std::invalid_argument for degree < 1.
std::vector<std::complex<double>> poly_roots_numeric(
    const std::vector<std::complex<double>>& coeffs, double tol = 1e-12);

/// Backward error of a candidate root set (max-coefficient norm, relative).
double roots_backward_error(const std::vector<std::complex<double>>& coeffs,
                            const std::vector<std::complex<double>>& roots);

/// Groups numerically close roots; two roots are clustered when their
/// distance is below rel_tol * max(1, |root|).
std::vector<std::pair<std::complex<double>, int>> cluster_roots(
    const std::vector<std::complex<double>>& roots, double rel_tol = 1e-8);

}  // namespace heunfg
