#pragma once

#include <complex>
#include <map>
#include <string>

#include "heunfg/upoly.hpp"

namespace heunfg {

/// Exponent triple for z^i * l^j * a^k.
struct Exps {
    int z = 0, l = 0, a = 0;
    int total() const { return z + l + a; }
    friend bool operator==(const Exps&, const Exps&) = default;
};

/// Canonical term order: higher total degree first, ties broken by
/// lexicographic comparison of (z, l, a) exponents ascending.  Map iteration
/// order equals the canonical text order.
struct ExpsOrder {
    bool operator()(const Exps& x, const Exps& y) const {
        if (x.total() != y.total()) return x.total() > y.total();
        if (x.z != y.z) return x.z < y.z;
        if (x.l != y.l) return x.l < y.l;
        return x.a < y.a;
    }
};

/// Sparse exact polynomial over Q in the indeterminates z, l (lambda), a.
/// No zero coefficients are stored, so equal polynomials have identical
/// term sequences.
class MultiPoly {
public:
    using Terms = std::map<Exps, Rational, ExpsOrder>;

    MultiPoly() = default;
    MultiPoly(Rational c) { add_term({0, 0, 0}, std::move(c)); }
    MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly z() { return monomial({1, 0, 0}, Rational(1)); }
    static MultiPoly l() { return monomial({0, 1, 0}, Rational(1)); }
    static MultiPoly a() { return monomial({0, 0, 1}, Rational(1)); }
    static MultiPoly monomial(Exps e, Rational c);
    static MultiPoly from_upoly_in_a(const UPoly& p);
    static MultiPoly from_upoly_in_l(const UPoly& p);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.total() == 0); }
    Rational constant_term() const { return coeff({0, 0, 0}); }
    Rational coeff(const Exps& e) const;

    int deg_z() const;
    int deg_l() const;
    int deg_a() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
    friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const MultiPoly& x, const MultiPoly& y) { return x.t_ == y.t_; }

    MultiPoly scaled(const Rational& s) const;
    MultiPoly pow(int e) const;
    MultiPoly dz() const;
    MultiPoly dl() const;

    /// Coefficient of l^j, as a polynomial in z and a.
    MultiPoly coeff_l(int j) const;
    /// Coefficient of z^i l^j, as a univariate polynomial in a.
    UPoly coeff_zl(int i, int j) const;
    /// Coefficient of z^i, as a polynomial in l and a.
    MultiPoly coeff_z(int i) const;
    /// Requires deg_z = deg_a = 0.
    UPoly as_upoly_in_l() const;
    /// Requires deg_z = deg_l = 0.
    UPoly as_upoly_in_a() const;

    MultiPoly subst_a(const Rational& v) const;
    MultiPoly subst_z(const Rational& v) const;
    /// Substitutes l by an arbitrary polynomial (Horner in l).
    MultiPoly subst_l(const MultiPoly& v) const;

    std::complex<double> eval(const std::complex<double>& zv,
                              const std::complex<double>& lv,
                              const std::complex<double>& av) const;

    /// Exact division by (z - r), r rational; throws std::domain_error when
    /// the remainder is nonzero.
    MultiPoly divide_z_linear(const Rational& r) const;
    /// Exact division by (z - a) with symbolic a.
    MultiPoly divide_z_minus_a() const;

    /// Canonical text form: terms in canonical order, `c * z^i * l^j * a^k`
    /// with unit exponents and factors omitted.
    std::string str() const;
    static MultiPoly parse(const std::string& s);

private:
    void add_term(const Exps& e, Rational c);
    Terms t_;
};

}  // namespace heunfg
