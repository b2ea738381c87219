#pragma once

#include <complex>
#include <string>
#include <vector>

#include "heunfg/rational.hpp"

namespace heunfg {

/// Dense univariate polynomial over the rationals.  Used for polynomials in
/// the modulus `a` and in the spectral variable `l` (lambda).  Coefficients
/// are stored ascending; trailing zeros are trimmed, the zero polynomial has
/// an empty coefficient vector and degree -1.
class UPoly {
public:
    UPoly() = default;
    UPoly(Rational c) { c_.push_back(std::move(c)); trim(); }
    UPoly(long c) : UPoly(Rational(c)) {}
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly var() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static UPoly monomial(Rational c, int e);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly& operator*=(const UPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    UPoly scaled(const Rational& s) const;
    UPoly pow(int e) const;
    UPoly derivative() const;

    /// Quotient and remainder; requires b nonzero.  Works over Q (field
    /// division by the leading coefficient).
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    /// Exact division; throws std::domain_error when the remainder is nonzero.
    UPoly divide_exact(const UPoly& b) const;

    /// Monic gcd (Euclid over Q); gcd(0,0) = 0.
    static UPoly gcd(UPoly a, UPoly b);

    /// gcd of all coefficients with the sign of the leading coefficient.
    Rational content() const;
    UPoly primitive() const;
    UPoly monic() const;

    Rational eval(const Rational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    /// Exact square root, when the polynomial is a perfect square over Q.
    std::optional<UPoly> sqrt_exact() const;

    std::string str(const std::string& var) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace heunfg
