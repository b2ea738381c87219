#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace heunfg {

class QuadratureNoConvergence : public std::runtime_error {
public:
    QuadratureNoConvergence()
        : std::runtime_error("quadrature: tolerance not reached within the node cap") {}
};

class PathTooCloseToZero : public std::runtime_error {
public:
    PathTooCloseToZero()
        : std::runtime_error("path passes inside the exclusion radius of a zero or singular point") {}
};

/// Double-exponential (tanh-sinh) quadrature of f over (0, 1).  Handles
/// integrable endpoint singularities (inverse square roots in particular).
/// f receives the abscissa x and its complement 1-x, each computed without
/// cancellation, so distances to the endpoints stay accurate at the deep
/// nodes.  Levels are doubled until successive estimates agree to tol; the
/// node count is capped at 2^18.
std::complex<double> tanh_sinh_01(
    const std::function<std::complex<double>(double, double)>& f, double tol);

/// Convenience overload for integrands that are regular at the endpoints.
std::complex<double> tanh_sinh_01(const std::function<std::complex<double>(double)>& f,
                                  double tol);

/// One leg of an integration path: a straight segment or a circular arc,
/// parametrized over [0, 1].
struct PathSegment {
    static PathSegment line(std::complex<double> z0, std::complex<double> z1) {
        PathSegment s;
        s.is_arc = false;
        s.z0 = z0;
        s.z1 = z1;
        return s;
    }
    static PathSegment arc(std::complex<double> center, double radius, double th0, double th1) {
        PathSegment s;
        s.is_arc = true;
        s.center = center;
        s.radius = radius;
        s.th0 = th0;
        s.th1 = th1;
        return s;
    }

    std::complex<double> at(double t) const;
    /// Same point, but parametrized from the nearer endpoint: omt is 1-t
    /// computed without cancellation.
    std::complex<double> at2(double t, double omt) const;
    std::complex<double> velocity(double t) const;
    std::complex<double> start() const { return at(0.0); }
    std::complex<double> end() const { return at(1.0); }

    bool is_arc = false;
    std::complex<double> z0, z1, center;
    double radius = 0.0, th0 = 0.0, th1 = 0.0;
};

/// Piecewise path from a base point to a target, avoiding a set of
/// obstacle points by semicircular detours (polyline legs on the real axis
/// get detours through the upper half plane).
struct QuadraturePath {
    std::vector<PathSegment> segments;

    /// Straight path between two points.
    static QuadraturePath straight(std::complex<double> z0, std::complex<double> z1);
    /// Real-axis path x0 -> x1 (x0 < x1) with semicircular detours above
    /// every obstacle strictly inside the interval.
    static QuadraturePath real_axis_with_detours(double x0, double x1,
                                                 const std::vector<double>& obstacles,
                                                 double radius);

    /// Smallest distance from the path to p, sampled densely.
    double distance_to(std::complex<double> p) const;
};

/// sqrt of z(z-1)(z-a) with the branch fixed at the start of the path
/// (principal there) and continued by nearest-value selection along a dense
/// sample grid.
class BranchTracker {
public:
    /// seed: the continued value at the path start (defaults to the
    /// principal value there).
    BranchTracker(const QuadraturePath& path,
                  const std::function<std::complex<double>(std::complex<double>)>& w,
                  int grid_per_segment = 512,
                  std::optional<std::complex<double>> seed = std::nullopt);

    /// Continued value at parameter t of segment k.
    std::complex<double> value(size_t k, double t) const;
    /// Pick the sign of v (a caller-computed square root at parameter t of
    /// segment k) that matches the continued branch there.
    std::complex<double> match(size_t k, double t, std::complex<double> v) const;
    /// Continued value at the end of the path.
    std::complex<double> value_at_end() const;

private:
    const QuadraturePath* path_;
    std::function<std::complex<double>(std::complex<double>)> w_;
    int grid_;
    std::vector<std::vector<std::complex<double>>> vals_;  // per segment, per grid node
};

/// Integral of f along the path; f receives the point, the segment index,
/// and the segment parameter t together with 1-t (cancellation-free) so
/// branch-tracked factors and endpoint distances can be reconstructed.
std::complex<double> integrate_path(
    const QuadraturePath& path,
    const std::function<std::complex<double>(std::complex<double>, size_t, double, double)>& f,
    double tol);

}  // namespace heunfg
