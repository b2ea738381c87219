#include "heunfg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace heunfg {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kMaxNodes = 1 << 18;

// abscissa of the tanh-sinh map t -> (0,1), returned as the pair
// (x, 1-x) with both ends accurate, plus the weight
void ts_node(double t, double& x, double& omx, double& w) {
    double s = std::sinh(t);
    double c = std::cosh(t);
    double u = (kPi / 2.0) * s;
    double e = std::exp(-2.0 * std::abs(u));
    double nearv = e / (1.0 + e);   // distance to the nearer endpoint
    double farv = 1.0 / (1.0 + e);  // distance to the farther endpoint
    if (u >= 0.0) {
        x = farv;
        omx = nearv;
    } else {
        x = nearv;
        omx = farv;
    }
    double ch = std::cosh(u);
    w = (kPi / 4.0) * c / (ch * ch);
}

}  // namespace

cplx tanh_sinh_01(const std::function<cplx(double, double)>& f, double tol) {
    auto term = [&f](double t) -> cplx {
        double x, omx, w;
        ts_node(t, x, omx, w);
        if (w < 1e-300 || x <= 0.0 || omx <= 0.0) return cplx(0.0);
        return f(x, omx) * w;
    };

    double h = 1.0;
    int evals = 1;
    cplx sum = term(0.0);
    // level 0: step 1 until terms vanish
    for (int k = 1;; ++k) {
        cplx t1 = term(h * k), t2 = term(-h * k);
        sum += t1 + t2;
        evals += 2;
        if (std::abs(t1) + std::abs(t2) < 1e-18 * (1.0 + std::abs(sum)) && k > 3) break;
        if (evals > kMaxNodes) throw QuadratureNoConvergence();
    }
    cplx prev = sum * h;

    for (int level = 1;; ++level) {
        h *= 0.5;
        cplx add(0.0);
        for (int k = 1;; k += 2) {
            cplx t1 = term(h * k), t2 = term(-h * k);
            add += t1 + t2;
            evals += 2;
            if (std::abs(t1) + std::abs(t2) < 1e-18 * (1.0 + std::abs(add)) && h * k > 3.0) break;
            if (evals > kMaxNodes) throw QuadratureNoConvergence();
        }
        cplx cur = prev * 0.5 + add * h;
        if (level >= 2 && std::abs(cur - prev) < tol * (1.0 + std::abs(cur))) return cur;
        if (evals > kMaxNodes) throw QuadratureNoConvergence();
        prev = cur;
    }
}

cplx tanh_sinh_01(const std::function<cplx(double)>& f, double tol) {
    return tanh_sinh_01([&f](double x, double) { return f(x); }, tol);
}

cplx PathSegment::at(double t) const {
    if (!is_arc) return z0 + (z1 - z0) * t;
    double th = th0 + (th1 - th0) * t;
    return center + radius * cplx(std::cos(th), std::sin(th));
}

cplx PathSegment::at2(double t, double omt) const {
    if (!is_arc) return omt < 0.5 ? z1 - (z1 - z0) * omt : z0 + (z1 - z0) * t;
    double th = omt < 0.5 ? th1 - (th1 - th0) * omt : th0 + (th1 - th0) * t;
    return center + radius * cplx(std::cos(th), std::sin(th));
}

cplx PathSegment::velocity(double t) const {
    if (!is_arc) return z1 - z0;
    double th = th0 + (th1 - th0) * t;
    return radius * (th1 - th0) * cplx(-std::sin(th), std::cos(th));
}

QuadraturePath QuadraturePath::straight(cplx z0, cplx z1) {
    QuadraturePath p;
    p.segments.push_back(PathSegment::line(z0, z1));
    return p;
}

QuadraturePath QuadraturePath::real_axis_with_detours(double x0, double x1,
                                                      const std::vector<double>& obstacles,
                                                      double radius) {
    std::vector<double> obs;
    for (double o : obstacles)
        if (o > x0 + radius && o < x1 - radius) obs.push_back(o);
    std::sort(obs.begin(), obs.end());

    QuadraturePath p;
    double cur = x0;
    for (double o : obs) {
        if (o - radius > cur) p.segments.push_back(PathSegment::line(cur, o - radius));
        p.segments.push_back(PathSegment::arc(cplx(o, 0.0), radius, kPi, 0.0));
        cur = o + radius;
    }
    if (x1 > cur) p.segments.push_back(PathSegment::line(cur, x1));
    return p;
}

double QuadraturePath::distance_to(cplx p) const {
    double best = 1e300;
    for (const auto& s : segments)
        for (int i = 0; i <= 256; ++i)
            best = std::min(best, std::abs(s.at(i / 256.0) - p));
    return best;
}

BranchTracker::BranchTracker(const QuadraturePath& path, const std::function<cplx(cplx)>& w,
                             int grid_per_segment, std::optional<cplx> seed)
    : path_(&path), w_(w), grid_(grid_per_segment) {
    cplx prev = seed.value_or(w_(path.segments.front().start()));
    for (const auto& seg : path.segments) {
        std::vector<cplx> vals(static_cast<size_t>(grid_) + 1);
        for (int j = 0; j <= grid_; ++j) {
            cplx v = w_(seg.at(static_cast<double>(j) / grid_));
            if (std::abs(-v - prev) < std::abs(v - prev)) v = -v;
            vals[static_cast<size_t>(j)] = v;
            // keep the reference away from zeros of w so the next
            // comparison stays meaningful
            if (std::abs(v) > 1e-8 * (1.0 + std::abs(prev))) prev = v;
        }
        vals_.push_back(std::move(vals));
    }
}

cplx BranchTracker::match(size_t k, double t, cplx v) const {
    int j = static_cast<int>(std::lround(t * grid_));
    j = std::clamp(j, 0, grid_);
    // step inward past grid nodes where the reference value degenerates
    cplx ref = vals_[k][static_cast<size_t>(j)];
    int step = (j > grid_ / 2) ? -1 : 1;
    while (std::abs(ref) < 1e-8 * std::abs(v) && j + step >= 0 && j + step <= grid_) {
        j += step;
        ref = vals_[k][static_cast<size_t>(j)];
    }
    return (std::abs(v - ref) <= std::abs(-v - ref)) ? v : -v;
}

cplx BranchTracker::value(size_t k, double t) const {
    return match(k, t, w_(path_->segments[k].at(t)));
}

cplx BranchTracker::value_at_end() const {
    return vals_.back().back();
}

cplx integrate_path(const QuadraturePath& path,
                    const std::function<cplx(cplx, size_t, double, double)>& f, double tol) {
    cplx total(0.0);
    for (size_t k = 0; k < path.segments.size(); ++k) {
        const auto& seg = path.segments[k];
        total += tanh_sinh_01(
            [&](double t, double omt) { return f(seg.at2(t, omt), k, t, omt) * seg.velocity(t); },
            tol);
    }
    return total;
}

}  // namespace heunfg
