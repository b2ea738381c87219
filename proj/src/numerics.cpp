#include "heunfg/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "heunfg/roots.hpp"

namespace heunfg {

namespace {

using cplx = std::complex<double>;

cplx int_pow(cplx z, int e) {
    cplx r(1.0);
    bool inv = e < 0;
    for (int i = 0; i < std::abs(e); ++i) r *= z;
    return inv ? 1.0 / r : r;
}

cplx eval_in_z(const MultiPoly& p, cplx z, cplx lambda, double a) {
    return p.eval(z, lambda, cplx(a, 0.0));
}

// Principal square root, except that arguments which are negative real up
// to roundoff are snapped onto +i sqrt(|v|).  Without this the value
// straddles the branch cut of std::sqrt and flips sides with the sign of
// 1e-17-level imaginary noise, which breaks both branch continuation and
// quadrature convergence along real path segments.
cplx stable_sqrt(cplx v) {
    if (v.real() < 0.0 && std::abs(v.imag()) <= 1e-12 * (-v.real()))
        return cplx(0.0, std::sqrt(-v.real()));
    return std::sqrt(v);
}

}  // namespace

SolutionEvaluator::SolutionEvaluator(const PsiPolynomial& psi, const SpectralCurve& curve,
                                     cplx lambda, double tol)
    : psi_(&psi), lambda_(lambda), tol_(tol) {
    if (!psi.a) throw std::invalid_argument("SolutionEvaluator: rational modulus required");
    a_ = psi.a->to_double();

    MultiPoly nu2 = curve.a ? curve.nu2 : curve.nu2.subst_a(*psi.a);
    nu_ = stable_sqrt(nu2.eval(0.0, lambda, cplx(a_, 0.0)));

    std::vector<cplx> c;
    for (int i = 0; i <= psi.psi.deg_z(); ++i)
        c.push_back(psi.psi.coeff_z(i).eval(0.0, lambda, cplx(a_, 0.0)));
    if (c.size() > 1) zeros_ = poly_roots_numeric(c);

    // base point on (0,1) far from zeros and singularities
    double best = -1.0;
    for (int k = 1; k < 16; ++k) {
        double x = k / 16.0;
        double d = std::min({x, 1.0 - x, std::abs(a_ - x)});
        for (const auto& zz : zeros_) d = std::min(d, std::abs(zz - cplx(x, 0.0)));
        if (d > best) {
            best = d;
            base_ = x;
        }
    }
}

cplx SolutionEvaluator::psi_at(cplx z) const {
    return eval_in_z(psi_->psi, z, lambda_, a_);
}

cplx SolutionEvaluator::integrand(cplx z, cplx s3) const {
    cplx pref = int_pow(z, psi_->m.m1) * int_pow(z - 1.0, psi_->m.m2) *
                int_pow(z - cplx(a_, 0.0), psi_->m.m3);
    return pref / (psi_at(z) * s3);
}

QuadraturePath SolutionEvaluator::path_between(cplx z0, cplx z1) const {
    const double imag_eps = 1e-12 * (1.0 + std::abs(z1));
    if (std::abs(z0.imag()) < imag_eps && std::abs(z1.imag()) < imag_eps) {
        double x0 = z0.real(), x1 = z1.real();
        bool flip = x0 > x1;
        if (flip) std::swap(x0, x1);
        double scale = std::min(1.0, std::abs(a_ - 1.0));
        for (const auto& zz : zeros_)
            if (std::abs(zz - z0) < 1e-3 * scale || std::abs(zz - z1) < 1e-3 * scale)
                throw PathTooCloseToZero();
        std::vector<double> obstacles{0.0, 1.0, a_};
        for (const auto& zz : zeros_)
            if (std::abs(zz.imag()) < 1e-6) obstacles.push_back(zz.real());
        double radius = 0.03 * std::min(1.0, std::abs(a_ - 1.0));
        for (double o : obstacles) {
            double d0 = std::abs(o - x0), d1 = std::abs(o - x1);
            if (d0 > imag_eps) radius = std::min(radius, 0.45 * d0);
            if (d1 > imag_eps) radius = std::min(radius, 0.45 * d1);
        }
        auto p = QuadraturePath::real_axis_with_detours(x0, x1, obstacles, radius);
        // zeros just off the real axis get no detour; keep clear of them
        for (const auto& zz : zeros_)
            if (std::abs(zz.imag()) >= 1e-6 && p.distance_to(zz) < 1e-3 * scale)
                throw PathTooCloseToZero();
        if (flip) {
            QuadraturePath r;
            for (auto it = p.segments.rbegin(); it != p.segments.rend(); ++it) {
                PathSegment s = *it;
                if (s.is_arc)
                    std::swap(s.th0, s.th1);
                else
                    std::swap(s.z0, s.z1);
                r.segments.push_back(s);
            }
            p = r;
        }
        return p;
    }
    auto p = QuadraturePath::straight(z0, z1);
    double scale = std::min(1.0, std::abs(a_ - 1.0));
    for (cplx s : {cplx(0.0), cplx(1.0), cplx(a_, 0.0)})
        if (std::abs(s - z1) > 1e-12 && p.distance_to(s) < 1e-3 * scale) throw PathTooCloseToZero();
    for (const auto& zz : zeros_)
        if (p.distance_to(zz) < 1e-3 * scale) throw PathTooCloseToZero();
    return p;
}

SolutionEvaluator::Anchor SolutionEvaluator::extend(const Anchor& from, cplx z) const {
    auto path = path_between(from.z, z);
    auto sqrt3 = [this](cplx zz) {
        return stable_sqrt(zz * (zz - 1.0) * (zz - cplx(a_, 0.0)));
    };
    auto sqrt_psi = [this](cplx zz) { return stable_sqrt(psi_at(zz)); };
    BranchTracker t3(path, sqrt3, 512, from.sqrt3);
    BranchTracker tp(path, sqrt_psi, 512, from.sqrt_psi);

    Anchor out;
    out.z = z;
    out.integral =
        from.integral +
        integrate_path(
            path,
            [&](cplx zz, size_t k, double t, double) { return integrand(zz, t3.value(k, t)); },
            tol_);
    out.sqrt3 = t3.value_at_end();
    out.sqrt_psi = tp.value_at_end();
    return out;
}

const SolutionEvaluator::Anchor& SolutionEvaluator::anchor_for(cplx z) const {
    double scale = std::min(1.0, std::abs(a_ - 1.0));
    for (const auto& an : anchors_)
        if (std::abs(an.z - z) < 0.1 * scale) return an;
    Anchor start;
    start.z = cplx(base_, 0.0);
    start.integral = 0.0;
    start.sqrt3 = stable_sqrt(start.z * (start.z - 1.0) * (start.z - cplx(a_, 0.0)));
    start.sqrt_psi = stable_sqrt(psi_at(start.z));
    anchors_.push_back(anchors_.empty() && std::abs(start.z - z) < 1e-14
                           ? start
                           : extend(start, z));
    return anchors_.back();
}

SolutionValue SolutionEvaluator::operator()(cplx z) const {
    const Anchor& an = anchor_for(z);
    Anchor at = std::abs(an.z - z) < 1e-15 ? an : extend(an, z);
    cplx u = cplx(0.0, 1.0) * nu_ * 0.5 * at.integral;
    SolutionValue v;
    v.lambda = lambda_;
    v.z = z;
    v.y1 = at.sqrt_psi * std::exp(u);
    v.y2 = at.sqrt_psi * std::exp(-u);
    return v;
}

cplx SolutionEvaluator::origin_offset() const {
    if (origin_offset_) return *origin_offset_;
    cplx val = 0.0;
    if (psi_->m.m1 >= 0 && std::abs(psi_at(cplx(0.0))) > 1e-9) {
        double scale = std::min(1.0, std::abs(a_ - 1.0));
        std::vector<double> obstacles;
        for (const auto& zz : zeros_)
            if (std::abs(zz.imag()) < 1e-9 && zz.real() > 1e-9 && zz.real() < base_ - 1e-9)
                obstacles.push_back(zz.real());
        double radius = 0.05 * scale;
        std::vector<double> pts{0.0, base_};
        pts.insert(pts.end(), obstacles.begin(), obstacles.end());
        std::sort(pts.begin(), pts.end());
        for (size_t i = 0; i + 1 < pts.size(); ++i)
            radius = std::min(radius, 0.45 * (pts[i + 1] - pts[i]));
        auto path = QuadraturePath::real_axis_with_detours(0.0, base_, obstacles, radius);
        auto sqrt3 = [this](cplx zz) {
            return stable_sqrt(zz * (zz - 1.0) * (zz - cplx(a_, 0.0)));
        };
        BranchTracker t3(path, sqrt3);
        val = integrate_path(
            path,
            [&](cplx zz, size_t k, double t, double) {
                const auto& seg = path.segments[k];
                // the first leg starts on the singular point z = 0: rebuild
                // the vanishing factor from the parametrization
                cplx f0 = (!seg.is_arc && t < 0.5 && std::abs(seg.z0) < 1e-14)
                              ? (seg.z1 - seg.z0) * t
                              : zz;
                cplx rest = (zz - 1.0) * (zz - cplx(a_, 0.0));
                cplx pref = int_pow(f0, psi_->m.m1) * int_pow(zz - 1.0, psi_->m.m2) *
                            int_pow(zz - cplx(a_, 0.0), psi_->m.m3);
                cplx s3 = t3.match(k, t, stable_sqrt(f0 * rest));
                return pref / (psi_at(zz) * s3);
            },
            tol_);
    }
    origin_offset_ = val;
    return val;
}

SolutionValue SolutionEvaluator::degenerate(cplx z) const {
    const Anchor& an = anchor_for(z);
    Anchor at = std::abs(an.z - z) < 1e-15 ? an : extend(an, z);
    SolutionValue v;
    v.lambda = lambda_;
    v.z = z;
    v.y1 = at.sqrt_psi;
    v.y2 = at.sqrt_psi * (origin_offset() + at.integral);
    return v;
}

cplx SolutionEvaluator::sqrt3_at(cplx z) const {
    const Anchor& an = anchor_for(z);
    if (std::abs(an.z - z) < 1e-15) return an.sqrt3;
    return extend(an, z).sqrt3;
}

double ode_residual(const Characteristics& m, cplx lambda, double a,
                    const std::function<cplx(cplx)>& y, cplx z, double h) {
    double dist = std::min({std::abs(z), std::abs(z - 1.0), std::abs(z - cplx(a, 0.0))});
    if (dist < 10.0 * h) throw TooCloseToSingularity();
    double hh = h * std::min(dist, 1.0);

    cplx yp2 = y(z + 2.0 * hh), yp1 = y(z + hh), y0 = y(z), ym1 = y(z - hh), ym2 = y(z - 2.0 * hh);
    cplx d1 = (8.0 * (yp1 - ym1) - (yp2 - ym2)) / (12.0 * hh);
    cplx d2 = (-yp2 + 16.0 * yp1 - 30.0 * y0 + 16.0 * ym1 - ym2) / (12.0 * hh * hh);

    cplx P = (0.5 - m.m1) / z + (0.5 - m.m2) / (z - 1.0) + (0.5 - m.m3) / (z - cplx(a, 0.0));
    long n = m.N();
    cplx Q = (static_cast<double>(n * (n - 2 * m.m0 - 1)) * z + lambda) /
             (4.0 * z * (z - 1.0) * (z - cplx(a, 0.0)));

    cplx r = d2 + P * d1 + Q * y0;
    double denom = std::max({std::abs(d2), std::abs(P * d1), std::abs(Q * y0), 1e-30});
    return std::abs(r) / denom;
}

double wronskian_check(const SolutionEvaluator& ev, const Characteristics& m, cplx z, double h) {
    const double a = ev.modulus();
    double dist = std::min({std::abs(z), std::abs(z - 1.0), std::abs(z - cplx(a, 0.0))});
    if (dist < 10.0 * h) throw TooCloseToSingularity();
    double hh = h * std::min(dist, 1.0);

    auto at = [&ev](cplx zz) { return ev(zz); };
    SolutionValue vp2 = at(z + 2.0 * hh), vp1 = at(z + hh), v0 = at(z), vm1 = at(z - hh),
                  vm2 = at(z - 2.0 * hh);
    auto d1 = [hh](cplx p2, cplx p1, cplx m1v, cplx m2v) {
        return (8.0 * (p1 - m1v) - (p2 - m2v)) / (12.0 * hh);
    };
    cplx y1p = d1(vp2.y1, vp1.y1, vm1.y1, vm2.y1);
    cplx y2p = d1(vp2.y2, vp1.y2, vm1.y2, vm2.y2);
    cplx w = v0.y1 * y2p - v0.y2 * y1p;

    cplx s3 = ev.sqrt3_at(z);
    cplx pref = int_pow(z, m.m1) * int_pow(z - 1.0, m.m2) * int_pow(z - cplx(a, 0.0), m.m3);
    cplx expected = -cplx(0.0, 1.0) * ev.nu() * pref / s3;

    double denom = std::max({std::abs(w), std::abs(expected), 1e-30});
    return std::abs(w - expected) / denom;
}

std::pair<double, double> connection_angles(const PsiPolynomial& psi, const SpectralCurve& curve,
                                            double lambda, double tol) {
    if (!psi.a) throw OutsideValidatedRegime("rational modulus required");
    if (!(*psi.a > Rational(1))) throw OutsideValidatedRegime("modulus must exceed 1");
    if (!psi.m.all_nonnegative()) throw OutsideValidatedRegime("negative characteristics");
    const double a = psi.a->to_double();

    MultiPoly nu2 = curve.a ? curve.nu2 : curve.nu2.subst_a(*psi.a);
    cplx nu2v = nu2.eval(0.0, cplx(lambda, 0.0), cplx(a, 0.0));
    if (nu2v.real() <= 0.0) throw OutsideValidatedRegime("nu^2 must be positive");
    double nu = std::sqrt(nu2v.real());

    SolutionEvaluator ev(psi, curve, cplx(lambda, 0.0));
    for (const auto& zz : ev.psi_zeros())
        if (std::abs(zz.imag()) < 1e-9 && zz.real() > 1e-9 && zz.real() < 1.0 - 1e-9)
            throw OutsideValidatedRegime("zero of Psi inside (0,1)");

    // phi: real integral over (0,1); z(z-1)(z-a) = t(1-t)(a-t) > 0 there,
    // so the principal square root is real.  The complement 1-t supplied by
    // the quadrature keeps the z-1 and square-root factors accurate at the
    // right endpoint.
    auto phi_integrand = [&](double t, double omt) -> cplx {
        cplx z(t, 0.0);
        double s3 = std::sqrt(t * omt * (a - t));
        cplx pref = int_pow(z, psi.m.m1) * int_pow(cplx(-omt, 0.0), psi.m.m2) *
                    int_pow(z - a, psi.m.m3);
        return pref / (ev.psi_at(z) * s3);
    };
    double phi =
        0.5 * nu *
        tanh_sinh_01(std::function<cplx(double, double)>(phi_integrand), tol).real();

    // psi angle: 0 -> a with detours above 1 and above real zeros of Psi
    std::vector<double> obstacles{1.0};
    for (const auto& zz : ev.psi_zeros())
        if (std::abs(zz.imag()) < 1e-9 && zz.real() > 0.0 && zz.real() < a)
            obstacles.push_back(zz.real());
    double radius = 0.05 * std::min(1.0, a - 1.0);
    std::sort(obstacles.begin(), obstacles.end());
    for (size_t i = 0; i + 1 < obstacles.size(); ++i)
        radius = std::min(radius, 0.45 * (obstacles[i + 1] - obstacles[i]));
    auto path = QuadraturePath::real_axis_with_detours(0.0, a, obstacles, radius);

    auto sqrt3 = [a](cplx zz) { return stable_sqrt(zz * (zz - 1.0) * (zz - cplx(a, 0.0))); };
    BranchTracker t3(path, sqrt3);
    // Reconstruct each linear factor from the segment parametrization when
    // the segment ends on the corresponding singular point, so the factor
    // does not cancel to roundoff at the deep quadrature nodes.
    auto linear_factor = [&path](cplx zz, size_t k, double t, double omt, cplx s) -> cplx {
        const auto& seg = path.segments[k];
        if (!seg.is_arc) {
            if (omt < 0.5 && std::abs(seg.z1 - s) < 1e-14) return -(seg.z1 - seg.z0) * omt;
            if (t < 0.5 && std::abs(seg.z0 - s) < 1e-14) return (seg.z1 - seg.z0) * t;
        }
        return zz - s;
    };
    cplx integral = integrate_path(
        path,
        [&](cplx zz, size_t k, double t, double omt) {
            cplx f0 = linear_factor(zz, k, t, omt, cplx(0.0));
            cplx f1 = linear_factor(zz, k, t, omt, cplx(1.0));
            cplx fa = linear_factor(zz, k, t, omt, cplx(a, 0.0));
            cplx pref = int_pow(f0, psi.m.m1) * int_pow(f1, psi.m.m2) * int_pow(fa, psi.m.m3);
            cplx s3 = t3.match(k, t, stable_sqrt(f0 * f1 * fa));
            return pref / (ev.psi_at(zz) * s3);
        },
        tol);
    double psi_angle = 0.5 * nu * integral.real();
    return {phi, psi_angle};
}

MonodromyData monodromy_generators(const PsiPolynomial& psi, const SpectralCurve& curve,
                                   double lambda) {
    auto [phi, psia] = connection_angles(psi, curve, lambda);
    MonodromyData d;
    d.phi = phi;
    d.psi_angle = psia;
    d.M0 = {{{1.0, 0.0}, {0.0, -1.0}}};
    auto reflect = [](double ang) -> Mat2 {
        double c = std::cos(2.0 * ang), s = std::sin(2.0 * ang);
        return {{{c, s}, {s, -c}}};
    };
    d.M1 = reflect(phi);
    d.M2 = reflect(psia);
    return d;
}

}  // namespace heunfg
