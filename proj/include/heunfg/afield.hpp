#pragma once

#include <optional>
#include <string>

#include "heunfg/upoly.hpp"

namespace heunfg {

/// Element of the field Q(a) of rational functions in the modulus `a`,
/// stored as a reduced quotient with monic denominator.
class AField {
public:
    AField() : num_(), den_(Rational(1)) {}
    AField(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    AField(long c) : num_(Rational(c)), den_(Rational(1)) {}
    AField(UPoly num) : num_(std::move(num)), den_(Rational(1)) {}
    AField(UPoly num, UPoly den);

    static AField var() { return AField(UPoly::var()); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Requires is_polynomial().
    UPoly as_polynomial() const;
    std::optional<Rational> as_rational() const;

    AField operator-() const;
    friend AField operator+(const AField& x, const AField& y);
    friend AField operator-(const AField& x, const AField& y);
    friend AField operator*(const AField& x, const AField& y);
    friend AField operator/(const AField& x, const AField& y);
    AField& operator+=(const AField& o) { return *this = *this + o; }
    AField& operator-=(const AField& o) { return *this = *this - o; }
    AField& operator*=(const AField& o) { return *this = *this * o; }
    AField& operator/=(const AField& o) { return *this = *this / o; }
    friend bool operator==(const AField& x, const AField& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

    AField inverse() const;

    /// Evaluation at a rational value of `a`; throws if the denominator
    /// vanishes there.
    Rational eval(const Rational& a) const;
    std::complex<double> eval(const std::complex<double>& a) const;

    std::string str() const;

private:
    void reduce();
    UPoly num_, den_;
};

}  // namespace heunfg
