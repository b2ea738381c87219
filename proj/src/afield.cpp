#include "heunfg/afield.hpp"

namespace heunfg {

AField::AField(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("AField: zero denominator");
    reduce();
}

void AField::reduce() {
    if (num_.is_zero()) {
        den_ = UPoly(Rational(1));
        return;
    }
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Rational lc = den_.lc();
    if (!lc.is_one()) {
        Rational inv = Rational(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

UPoly AField::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("AField: not a polynomial");
    return num_.scaled(Rational(1) / den_.lc());
}

std::optional<Rational> AField::as_rational() const {
    if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
    if (num_.is_zero()) return Rational(0);
    return num_.lc() / den_.lc();
}

AField AField::operator-() const {
    AField r(*this);
    r.num_ = -r.num_;
    return r;
}

AField operator+(const AField& x, const AField& y) {
    return AField(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

AField operator-(const AField& x, const AField& y) {
    return AField(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

AField operator*(const AField& x, const AField& y) {
    return AField(x.num_ * y.num_, x.den_ * y.den_);
}

AField operator/(const AField& x, const AField& y) {
    if (y.is_zero()) throw std::domain_error("AField: division by zero");
    return AField(x.num_ * y.den_, x.den_ * y.num_);
}

AField AField::inverse() const {
    if (is_zero()) throw std::domain_error("AField: inverse of zero");
    return AField(den_, num_);
}

Rational AField::eval(const Rational& a) const {
    Rational d = den_.eval(a);
    if (d.is_zero()) throw std::domain_error("AField: pole at evaluation point");
    return num_.eval(a) / d;
}

std::complex<double> AField::eval(const std::complex<double>& a) const {
    return num_.eval(a) / den_.eval(a);
}

std::string AField::str() const {
    if (is_polynomial()) return as_polynomial().str("a");
    return "(" + num_.str("a") + ")/(" + den_.str("a") + ")";
}

}  // namespace heunfg
