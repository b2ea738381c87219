#include "heunfg/roots.hpp"

#include <algorithm>
#include <cmath>

namespace heunfg {

namespace {

using C = std::complex<double>;
// The Aberth iteration and the polish run in extended precision: spectral
// polynomials routinely carry root clusters separated by ~1e-3 with
// coefficients spanning 8 orders of magnitude, and plain double stalls just
// above the backward-error tolerance on them.
using CL = std::complex<long double>;

CL horner(const std::vector<CL>& p, const CL& x) {
    CL r(0.0L, 0.0L);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

CL horner_d(const std::vector<CL>& p, const CL& x) {
    CL r(0.0L, 0.0L);
    for (size_t i = p.size(); i-- > 1;) r = r * x + p[i] * static_cast<long double>(i);
    return r;
}

}  // namespace

double roots_backward_error(const std::vector<C>& coeffs, const std::vector<C>& roots) {
    // reconstruct lc * prod (x - r_i), ascending coefficients
    std::vector<CL> p{CL(coeffs.back())};
    for (const C& r : roots) {
        std::vector<CL> q(p.size() + 1, CL(0.0L, 0.0L));
        for (size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += p[i];  // x * p_i
            q[i] -= p[i] * CL(r);
        }
        p = std::move(q);
    }
    long double norm = 0.0L, err = 0.0L;
    for (const C& c : coeffs) norm = std::max(norm, std::abs(CL(c)));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        CL rec = i < p.size() ? p[i] : CL(0.0L, 0.0L);
        err = std::max(err, std::abs(CL(coeffs[i]) - rec));
    }
    return static_cast<double>(norm > 0 ? err / norm : err);
}

std::vector<C> poly_roots_numeric(const std::vector<C>& coeffs_in, double tol) {
    std::vector<CL> p;
    for (const C& c : coeffs_in) p.push_back(CL(c));
    while (!p.empty() && std::abs(p.back()) == 0.0L) p.pop_back();
    if (p.size() < 2) throw std::invalid_argument("poly_roots_numeric: degree < 1");

    // strip exact zero roots at the origin
    std::vector<C> roots;
    while (std::abs(p.front()) == 0.0L) {
        roots.push_back(C(0.0, 0.0));
        p.erase(p.begin());
        if (p.size() < 2) {
            return roots;
        }
    }

    size_t n = p.size() - 1;

    // Substitute x = s*y with s near the geometric mean of the root moduli:
    // polynomials whose roots sit far from 1 carry coefficients spanning many
    // orders of magnitude, which stalls the iteration just above the
    // backward-error tolerance.
    long double s = std::pow(std::abs(p.front() / p.back()), 1.0L / static_cast<long double>(n));
    s = std::clamp(s, 1e-6L, 1e6L);
    std::vector<CL> ps = p;
    {
        long double sk = 1.0L;
        for (size_t i = 0; i < ps.size(); ++i, sk *= s) ps[i] *= sk;
    }

    // initial guesses on a circle scaled by a root bound (Cauchy)
    long double lc = std::abs(ps.back());
    long double bound = 0.0L;
    for (size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(ps[i]) / lc);
    long double radius = 1.0L + bound;
    std::vector<CL> x(n);
    for (size_t i = 0; i < n; ++i) {
        long double ang =
            2.0L * static_cast<long double>(M_PI) * static_cast<long double>(i) /
                static_cast<long double>(n) +
            0.4L;
        x[i] = std::polar(0.5L * radius, ang);
    }

    const int cap = 2000;
    bool converged = false;
    for (int iter = 0; iter < cap && !converged; ++iter) {
        converged = true;
        for (size_t i = 0; i < n; ++i) {
            CL pv = horner(ps, x[i]);
            CL dv = horner_d(ps, x[i]);
            CL newton = (std::abs(dv) > 0) ? pv / dv : CL(0.0L, 0.0L);
            CL s(0.0L, 0.0L);
            for (size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                CL d = x[i] - x[j];
                if (std::abs(d) < 1e-300L) d = CL(1e-300L, 0.0L);
                s += 1.0L / d;
            }
            CL denom = 1.0L - newton * s;
            CL step = (std::abs(denom) > 0) ? newton / denom : newton;
            x[i] -= step;
            if (std::abs(step) > 1e-17L * (1.0L + std::abs(x[i]))) converged = false;
        }
    }

    // undo the variable scaling, then polish against the original coefficients
    for (CL& r : x) r *= s;
    for (size_t i = 0; i < n; ++i) {
        for (int k = 0; k < 5; ++k) {
            CL pv = horner(p, x[i]);
            CL dv = horner_d(p, x[i]);
            if (std::abs(dv) == 0.0L) break;
            CL step = pv / dv;
            if (std::abs(step) > 0.1L * (1.0L + std::abs(x[i]))) break;  // near-multiple root
            x[i] -= step;
        }
    }

    std::vector<C> all = roots;
    for (const CL& r : x)
        all.push_back(C(static_cast<double>(r.real()), static_cast<double>(r.imag())));
    if (roots_backward_error(coeffs_in, all) <= tol) return all;

    // A multiple root of multiplicity k is found as a cluster of k simple
    // roots each accurate only to ~sqrt of the working precision.  The root is
    // simple for the (k-1)-th derivative, so polishing the cluster mean
    // against it recovers full accuracy; then the cluster members are
    // replaced by the polished center.
    std::vector<C> merged = all;
    for (auto& [center, count] : cluster_roots(all, 1e-7)) {
        if (count < 2) continue;
        std::vector<CL> d = p;
        for (int k = 1; k < count; ++k) {
            std::vector<CL> nd(d.size() - 1);
            for (size_t i = 1; i < d.size(); ++i) nd[i - 1] = d[i] * static_cast<long double>(i);
            d = std::move(nd);
        }
        CL z(center);
        for (int k = 0; k < 40; ++k) {
            CL dv = horner_d(d, z);
            if (std::abs(dv) == 0.0L) break;
            CL step = horner(d, z) / dv;
            z -= step;
            if (std::abs(step) <= 1e-18L * (1.0L + std::abs(z))) break;
        }
        C zc(static_cast<double>(z.real()), static_cast<double>(z.imag()));
        for (C& r : merged)
            if (std::abs(r - center) <= 1e-7 * std::max(1.0, std::abs(center))) r = zc;
    }
    if (roots_backward_error(coeffs_in, merged) <= tol) return merged;
    throw NoConvergence();
}

std::vector<std::pair<C, int>> cluster_roots(const std::vector<C>& roots, double rel_tol) {
    std::vector<std::pair<C, int>> clusters;
    for (const C& r : roots) {
        bool placed = false;
        for (auto& [center, count] : clusters) {
            if (std::abs(r - center) <= rel_tol * std::max(1.0, std::abs(center))) {
                center = (center * static_cast<double>(count) + r) / static_cast<double>(count + 1);
                ++count;
                placed = true;
                break;
            }
        }
        if (!placed) clusters.emplace_back(r, 1);
    }
    return clusters;
}

}  // namespace heunfg
