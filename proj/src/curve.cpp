#include "heunfg/curve.hpp"

#include <algorithm>
#include <cmath>

#include "heunfg/linsolve.hpp"
#include "heunfg/resultant.hpp"
#include "heunfg/roots.hpp"

namespace heunfg {

namespace {

using cplx = std::complex<double>;

std::vector<cplx> to_complex(const UPoly& p) {
    std::vector<cplx> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (const auto& q : p.coeffs()) c.emplace_back(q.to_double(), 0.0);
    return c;
}

double coeff_scale(const std::vector<cplx>& c) {
    double s = 0.0;
    for (const auto& v : c) s = std::max(s, std::abs(v));
    return s > 0.0 ? s : 1.0;
}

}  // namespace

SpectralCurve nu_squared(const PsiPolynomial& psi) {
    const Characteristics& m = psi.m;
    MultiPoly d1 = singular_cubic();
    MultiPoly p = odd_coefficient(m);
    MultiPoly q = even_coefficient(m);
    if (psi.a) {
        d1 = d1.subst_a(*psi.a);
        p = p.subst_a(*psi.a);
    }
    const MultiPoly& f = psi.psi;
    MultiPoly f1 = f.dz();
    MultiPoly h = (d1 * f * f1.dz()).scaled(Rational(2)) - d1 * f1 * f1 + p * f * f1 + q * f * f;

    try {
        for (int i = 0; i < 2 * m.m1; ++i) h = h.divide_z_linear(Rational(0));
        for (int i = 0; i < 2 * m.m2; ++i) h = h.divide_z_linear(Rational(1));
        for (int i = 0; i < 2 * m.m3; ++i)
            h = psi.a ? h.divide_z_linear(*psi.a) : h.divide_z_minus_a();
    } catch (const std::domain_error&) {
        throw NotDivisible();
    }
    if (h.deg_z() != 0) throw ZDependent();

    SpectralCurve c;
    c.m = m;
    c.a = psi.a;
    c.g = psi.g;
    c.nu2 = std::move(h);
    if (c.nu2.deg_l() != 2 * c.g + 1 || !(c.nu2.coeff_l(2 * c.g + 1) == MultiPoly(1)))
        throw std::logic_error("nu_squared: result not monic of degree 2g+1");
    return c;
}

const std::vector<cplx>& branch_points(SpectralCurve& curve, const Rational& a) {
    if (a.is_zero() || a == Rational(1)) throw InvalidModulus();
    if (curve.a && !(*curve.a == a))
        throw std::invalid_argument("branch_points: modulus differs from the curve's");
    auto it = curve.cache.find(a);
    if (it != curve.cache.end()) return it->second;

    MultiPoly spec = curve.a ? curve.nu2 : curve.nu2.subst_a(a);
    std::vector<cplx> coeffs;
    for (int k = 0; k <= 2 * curve.g + 1; ++k)
        coeffs.emplace_back(spec.coeff_l(k).constant_term().to_double(), 0.0);
    auto roots = poly_roots_numeric(coeffs);
    std::sort(roots.begin(), roots.end(), [](const cplx& x, const cplx& y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return curve.cache.emplace(a, std::move(roots)).first->second;
}

std::vector<SignClass> enumerate_nk(const Characteristics& m) {
    std::vector<SignClass> out;
    for (int mask = 0; mask < 16; ++mask) {
        SignClass c;
        int sum = 0;
        for (int i = 0; i < 4; ++i) {
            int flip = (mask >> i) & 1;
            c.pattern[static_cast<size_t>(i)] = flip;
            c.reduced.at(i) = flip ? -m.at(i) - 1 : m.at(i);
            sum += c.reduced.at(i);
        }
        if (sum % 2 != 0) continue;
        c.count = 1 + sum / 2;
        if (c.count < 1) continue;
        c.deg_f = c.count - 1;
        out.push_back(std::move(c));
    }
    return out;
}

AField eigenvalue_shift(const Characteristics& m, const Characteristics& reduced) {
    long M1 = m.m1 - reduced.m1, M2 = m.m2 - reduced.m2, M3 = m.m3 - reduced.m3;
    Rational c0(2 * m.m1 * M3 + 2 * m.m3 * M1 - 2 * M1 * M3 - M1 - M3);
    Rational c1(2 * m.m1 * M2 + 2 * m.m2 * M1 - 2 * M1 * M2 - M1 - M2);
    return AField(UPoly(std::vector<Rational>{c0, c1}));
}

HeunEigenSystem heun_polynomial_eigenvalues(const Characteristics& reduced, int d,
                                            std::optional<Rational> a) {
    if (d < 0) throw EmptyClass();
    if (a && (a->is_zero() || *a == Rational(1))) throw InvalidModulus();

    HeunEigenSystem sys;
    sys.reduced = reduced;
    sys.degree = d;
    const size_t n = static_cast<size_t>(d) + 1;

    // rows of 4 D1 F'' + 2 p F' + c z F applied to the monomial basis
    MultiPoly d1 = singular_cubic().scaled(Rational(4));
    MultiPoly p = odd_coefficient(reduced).scaled(Rational(2));
    long nn = reduced.N();
    Rational c(nn * (nn - 2 * reduced.m0 - 1));
    if (a) {
        d1 = d1.subst_a(*a);
        p = p.subst_a(*a);
    }

    ExactMatrix minusT(n, n);
    for (size_t i = 0; i < n; ++i) {
        MultiPoly zi = MultiPoly::monomial({static_cast<int>(i), 0, 0}, Rational(1));
        MultiPoly e = d1 * zi.dz().dz() + p * zi.dz() +
                      MultiPoly::monomial({static_cast<int>(i) + 1, 0, 0}, c);
        if (i + 1 == n && !e.coeff_z(d + 1).is_zero())
            throw std::invalid_argument(
                "heun_polynomial_eigenvalues: degree incompatible with the characteristics");
        for (size_t k = 0; k < n; ++k)
            minusT.at(k, i) = -e.coeff_z(static_cast<int>(k)).as_upoly_in_a();
    }

    sys.charpoly_a = charpoly(minusT);  // det(l I + T)

    // exact roots: strip zero roots, then resolve degree <= 2 over Q(a)
    std::vector<AField> exact;
    {
        std::vector<UPoly> cp = sys.charpoly_a;
        while (cp.size() > 1 && cp.back().is_zero()) {
            exact.emplace_back(Rational(0));
            cp.pop_back();
        }
        size_t r = cp.size() - 1;
        if (r == 1) {
            exact.emplace_back(-cp[1]);
        } else if (r == 2) {
            UPoly disc = cp[1] * cp[1] - cp[2].scaled(Rational(4));
            if (auto s = disc.sqrt_exact()) {
                exact.push_back(AField((-cp[1] + *s).scaled(Rational(1, 2))));
                exact.push_back(AField((-cp[1] - *s).scaled(Rational(1, 2))));
            }
        }
    }

    if (!a) {
        for (auto& e : exact) {
            HeunEigenpair pr;
            pr.lambda_exact = std::move(e);
            sys.values.push_back(std::move(pr));
        }
        return sys;
    }

    // numeric roots and eigenvectors at the rational modulus
    std::vector<cplx> coeffs(n + 1);
    for (size_t k = 0; k <= n; ++k)
        coeffs[k] = cplx(sys.charpoly_a[n - k].eval(*a).to_double(), 0.0);
    auto roots = poly_roots_numeric(coeffs);
    std::sort(roots.begin(), roots.end(), [](const cplx& x, const cplx& y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });

    std::vector<bool> used(exact.size(), false);
    for (const auto& root : roots) {
        HeunEigenpair pr;
        pr.lambda = root;

        // nearest unmatched exact value
        double best = 1e-6 * (1.0 + std::abs(root));
        size_t bi = exact.size();
        for (size_t i = 0; i < exact.size(); ++i) {
            if (used[i]) continue;
            double dd = std::abs(cplx(exact[i].eval(*a).to_double(), 0.0) - root);
            if (dd < best) { best = dd; bi = i; }
        }
        if (bi < exact.size()) { used[bi] = true; pr.lambda_exact = exact[bi]; }

        // null vector of (T + l I) by elimination with partial pivoting
        std::vector<std::vector<cplx>> A(n, std::vector<cplx>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                A[i][j] = -cplx(minusT.at(i, j).eval(*a).to_double(), 0.0);
                if (i == j) A[i][j] += root;
            }
        std::vector<size_t> pivot_col;
        size_t row = 0;
        for (size_t col = 0; col < n && row < n; ++col) {
            size_t best_r = row;
            for (size_t i = row + 1; i < n; ++i)
                if (std::abs(A[i][col]) > std::abs(A[best_r][col])) best_r = i;
            if (std::abs(A[best_r][col]) < 1e-9 * (1.0 + std::abs(root))) continue;
            std::swap(A[row], A[best_r]);
            for (size_t i = 0; i < n; ++i) {
                if (i == row) continue;
                cplx fct = A[i][col] / A[row][col];
                for (size_t j = col; j < n; ++j) A[i][j] -= fct * A[row][j];
            }
            pivot_col.push_back(col);
            ++row;
        }
        size_t free_col = n;
        for (size_t col = n; col-- > 0;)
            if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end()) {
                free_col = col;
                break;
            }
        if (free_col == n) free_col = n - 1;  // numerically full rank: pick the top
        std::vector<cplx> f(n, cplx(0.0));
        f[free_col] = 1.0;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            f[pivot_col[i]] = -A[i][free_col] / A[i][pivot_col[i]];
        size_t top = n;
        for (size_t i = n; i-- > 0;)
            if (std::abs(f[i]) > 1e-9) { top = i; break; }
        if (top == n) top = free_col;
        cplx lead = f[top];
        f.resize(top + 1);
        for (auto& v : f) v /= lead;
        pr.f = std::move(f);
        sys.values.push_back(std::move(pr));
    }
    return sys;
}

namespace {

// shared tail: multiplicity bookkeeping and the shifted accessory
void finish_record(BranchPointRecord& rec, const Characteristics& m) {
    for (int i = 0; i < 4; ++i) {
        int mi = m.at(i), Mi = rec.M[static_cast<size_t>(i)];
        if (Mi != 0 && Mi != 2 * mi + 1) throw BadMultiplicity();
        rec.reduced.at(i) = mi - Mi;
    }
    int sum = rec.reduced.N();
    if (sum % 2 != 0 || sum / 2 != rec.deg_f)
        throw BadMultiplicity();
}

}  // namespace

BranchPointRecord branch_factorize(const PsiPolynomial& psi, const AField& lambda) {
    if (!lambda.is_polynomial())
        throw std::invalid_argument("branch_factorize: accessory value not polynomial in a");
    BranchPointRecord rec;
    rec.lambda_exact = lambda;

    MultiPoly pv = psi.psi.subst_l(MultiPoly::from_upoly_in_a(lambda.as_polynomial()));
    if (pv.is_zero()) throw std::invalid_argument("branch_factorize: Psi vanishes identically");
    rec.M[0] = psi.m.N() - pv.deg_z();

    auto divide_out = [&pv](auto&& divide, int cap) {
        int cnt = 0;
        while (cnt < cap) {
            try {
                pv = divide(pv);
            } catch (const std::domain_error&) {
                break;
            }
            ++cnt;
        }
        return cnt;
    };
    rec.M[1] = divide_out([](const MultiPoly& f) { return f.divide_z_linear(Rational(0)); },
                          2 * psi.m.m1 + 1);
    rec.M[2] = divide_out([](const MultiPoly& f) { return f.divide_z_linear(Rational(1)); },
                          2 * psi.m.m2 + 1);
    rec.M[3] = divide_out(
        [&psi](const MultiPoly& f) {
            return psi.a ? f.divide_z_linear(*psi.a) : f.divide_z_minus_a();
        },
        2 * psi.m.m3 + 1);

    int deg = pv.deg_z();
    if (deg % 2 != 0) throw NotPerfectSquare();
    rec.deg_f = deg / 2;
    finish_record(rec, psi.m);

    std::vector<AField> h(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) h[static_cast<size_t>(i)] = AField(pv.coeff_z(i).as_upoly_in_a());
    rec.scale = h.back();
    for (auto& v : h) v /= rec.scale;

    const int nf = rec.deg_f;
    std::vector<AField> f(static_cast<size_t>(nf) + 1);
    f[static_cast<size_t>(nf)] = AField(1);
    for (int k = nf - 1; k >= 0; --k) {
        AField s = h[static_cast<size_t>(nf + k)];
        for (int i = k + 1; i <= nf - 1; ++i) s -= f[static_cast<size_t>(i)] * f[static_cast<size_t>(nf + k - i)];
        f[static_cast<size_t>(k)] = s / AField(2);
    }
    // verify the full square, not just the upper half
    std::vector<AField> sq(static_cast<size_t>(deg) + 1, AField(0));
    for (int i = 0; i <= nf; ++i)
        for (int j = 0; j <= nf; ++j) sq[static_cast<size_t>(i + j)] += f[static_cast<size_t>(i)] * f[static_cast<size_t>(j)];
    for (int i = 0; i <= deg; ++i)
        if (!(sq[static_cast<size_t>(i)] == h[static_cast<size_t>(i)])) throw NotPerfectSquare();
    rec.f_monic = std::move(f);

    AField shift = eigenvalue_shift(psi.m, rec.reduced);
    rec.lambda_tilde_exact = lambda + shift;
    return rec;
}

BranchPointRecord branch_factorize(const PsiPolynomial& psi, cplx lambda, double tol) {
    if (!psi.a) throw std::invalid_argument("branch_factorize: numeric mode needs a rational modulus");
    BranchPointRecord rec;
    rec.lambda = lambda;

    const double av = psi.a->to_double();
    std::vector<cplx> c;
    for (int i = 0; i <= psi.psi.deg_z(); ++i)
        c.push_back(psi.psi.coeff_z(i).eval(0.0, lambda, av));
    const double scale = coeff_scale(c);
    while (c.size() > 1 && std::abs(c.back()) < tol * scale) c.pop_back();
    rec.M[0] = psi.m.N() - static_cast<int>(c.size()) + 1;

    auto deflate = [&c, tol, scale](cplx s, int cap) {
        int cnt = 0;
        while (cnt < cap && c.size() > 1) {
            // synthetic evaluation/division at z = s
            cplx rem = 0.0;
            std::vector<cplx> q(c.size() - 1);
            for (size_t i = c.size(); i-- > 0;) {
                cplx v = c[i] + rem * s;
                if (i > 0) q[i - 1] = rem = v;
                else rem = v;
            }
            if (std::abs(rem) > tol * scale) break;
            c = std::move(q);
            ++cnt;
        }
        return cnt;
    };
    rec.M[1] = deflate(cplx(0.0), 2 * psi.m.m1 + 1);
    rec.M[2] = deflate(cplx(1.0), 2 * psi.m.m2 + 1);
    rec.M[3] = deflate(cplx(av), 2 * psi.m.m3 + 1);

    int deg = static_cast<int>(c.size()) - 1;
    if (deg % 2 != 0) throw NotPerfectSquare();
    rec.deg_f = deg / 2;
    finish_record(rec, psi.m);

    cplx sigma = c.back();
    std::vector<cplx> h = c;
    for (auto& v : h) v /= sigma;
    const int nf = rec.deg_f;
    std::vector<cplx> f(static_cast<size_t>(nf) + 1, cplx(0.0));
    f[static_cast<size_t>(nf)] = 1.0;
    for (int k = nf - 1; k >= 0; --k) {
        cplx s = h[static_cast<size_t>(nf + k)];
        for (int i = k + 1; i <= nf - 1; ++i) s -= f[static_cast<size_t>(i)] * f[static_cast<size_t>(nf + k - i)];
        f[static_cast<size_t>(k)] = s / 2.0;
    }
    std::vector<cplx> sq(static_cast<size_t>(deg) + 1, cplx(0.0));
    for (int i = 0; i <= nf; ++i)
        for (int j = 0; j <= nf; ++j) sq[static_cast<size_t>(i + j)] += f[static_cast<size_t>(i)] * f[static_cast<size_t>(j)];
    // The leading coefficient can be small without vanishing (e.g. near another
    // branch point that lowers the degree), which inflates the normalized
    // coefficients; judge the square fit relative to their magnitude.
    double hmax = 1.0;
    for (const cplx& v : h) hmax = std::max(hmax, std::abs(v));
    for (int i = 0; i <= deg; ++i)
        if (std::abs(sq[static_cast<size_t>(i)] - h[static_cast<size_t>(i)]) > 1e3 * tol * hmax)
            throw NotPerfectSquare();
    rec.f_numeric = std::move(f);

    rec.lambda_tilde = lambda + eigenvalue_shift(psi.m, rec.reduced).eval(*psi.a).to_double();
    return rec;
}

std::vector<LabeledRoots> special_lambda_roots(const PsiPolynomial& psi, const Rational& a) {
    if (a.is_zero() || a == Rational(1)) throw InvalidModulus();
    if (psi.a && !(*psi.a == a))
        throw std::invalid_argument("special_lambda_roots: modulus differs from Psi's");
    if (psi.m.N() < 1)
        throw std::invalid_argument("special_lambda_roots: constant Psi");
    MultiPoly f = psi.a ? psi.psi : psi.psi.subst_a(a);

    std::vector<LabeledRoots> out;
    // These polynomials often carry multiple roots (e.g. the discriminant);
    // the coefficients are exact, so root the squarefree part instead of
    // asking the numeric solver to resolve the multiplicities.
    auto add_upoly = [&out](std::string label, UPoly u) {
        if (u.is_zero()) return;
        if (u.degree() < 1) {
            out.push_back({std::move(label), {}});
            return;
        }
        UPoly g = UPoly::gcd(u, u.derivative());
        if (g.degree() > 0) u = u.divide_exact(g);
        out.push_back({std::move(label), poly_roots_numeric(to_complex(u))});
    };
    auto add = [&add_upoly](std::string label, const MultiPoly& p) {
        if (p.is_zero()) return;
        std::vector<Rational> c;
        for (int k = 0; k <= p.deg_l(); ++k) c.push_back(p.coeff_l(k).constant_term());
        add_upoly(std::move(label), UPoly(std::move(c)));
    };
    add("a0", f.coeff_z(psi.m.N()));
    add("psi_at_0", f.subst_z(Rational(0)));
    add("psi_at_1", f.subst_z(Rational(1)));
    add("psi_at_a", f.subst_z(a));
    if (psi.m.N() >= 2) {
        UPoly disc = discriminant_z(f);
        if (!disc.is_constant()) add_upoly("discriminant", std::move(disc));
    }
    return out;
}

StieltjesReport stieltjes_product_check(const PsiPolynomial& psi, const SpectralCurve& curve,
                                        cplx lambda, const Rational& a) {
    StieltjesReport rep;
    const double av = a.to_double();
    MultiPoly f = psi.a ? psi.psi : psi.psi.subst_a(a);

    std::vector<cplx> c;
    for (int i = 0; i <= f.deg_z(); ++i) c.push_back(f.coeff_z(i).eval(0.0, lambda, av));
    auto zeros = poly_roots_numeric(c);

    MultiPoly nu2 = curve.a ? curve.nu2 : curve.nu2.subst_a(a);
    cplx nu2v = nu2.eval(0.0, lambda, av);
    cplx a0 = f.coeff_z(psi.m.N()).eval(0.0, lambda, av);

    for (size_t k = 0; k < zeros.size(); ++k) {
        cplx zk = zeros[k];
        cplx lhs = 1.0;
        for (size_t j = 0; j < zeros.size(); ++j)
            if (j != k) lhs *= (zk - zeros[j]) * (zk - zeros[j]);
        cplx rhs = -nu2v / (a0 * a0) * std::pow(zk, 2 * psi.m.m1 - 1) *
                   std::pow(zk - 1.0, 2 * psi.m.m2 - 1) * std::pow(zk - av, 2 * psi.m.m3 - 1);
        double denom = std::max(std::abs(lhs), std::abs(rhs));
        double res = denom > 0.0 ? std::abs(lhs - rhs) / denom : 0.0;
        rep.residuals.push_back(res);
        rep.max_residual = std::max(rep.max_residual, res);
    }
    return rep;
}

StieltjesReport stieltjes_sum_check(const BranchPointRecord& rec, const Rational& a) {
    StieltjesReport rep;
    const double av = a.to_double();
    std::vector<cplx> c = rec.f_numeric;
    if (c.empty()) {
        for (const auto& v : rec.f_monic) c.emplace_back(v.eval(a).to_double(), 0.0);
    }
    if (c.size() <= 1) return rep;
    auto zeros = poly_roots_numeric(c);
    for (size_t k = 0; k < zeros.size(); ++k) {
        cplx zk = zeros[k];
        cplx lhs = 0.0;
        for (size_t i = 0; i < zeros.size(); ++i)
            if (i != k) lhs += 1.0 / (zk - zeros[i]);
        cplx rhs = (cplx(2.0 * rec.reduced.m1 - 1.0) / zk +
                    cplx(2.0 * rec.reduced.m2 - 1.0) / (zk - 1.0) +
                    cplx(2.0 * rec.reduced.m3 - 1.0) / (zk - av)) /
                   4.0;
        double denom = std::max({std::abs(lhs), std::abs(rhs), 1.0});
        double res = std::abs(lhs - rhs) / denom;
        rep.residuals.push_back(res);
        rep.max_residual = std::max(rep.max_residual, res);
    }
    return rep;
}

}  // namespace heunfg
