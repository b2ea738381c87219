#include "heunfg/upoly.hpp"

#include <sstream>

namespace heunfg {

UPoly UPoly::monomial(Rational c, int e) {
    if (c.is_zero()) return UPoly();
    std::vector<Rational> v(static_cast<size_t>(e) + 1, Rational(0));
    v.back() = std::move(c);
    return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rational& s) const {
    if (s.is_zero()) return UPoly();
    UPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

UPoly UPoly::pow(int e) const {
    UPoly r{Rational(1)};
    UPoly base(*this);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(r));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
    r = a;
    q = UPoly();
    const Rational inv_lc = Rational(1) / b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational f = r.lc() * inv_lc;
        q += monomial(f, shift);
        r -= b * monomial(f, shift);
    }
}

UPoly UPoly::divide_exact(const UPoly& b) const {
    UPoly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::domain_error("UPoly: inexact division");
    return q;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Rational UPoly::content() const {
    if (is_zero()) return Rational(0);
    mpz_class g(0), l(1);
    for (const auto& c : c_) {
        if (c.is_zero()) continue;
        mpz_class n = c.num(), d = c.den();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Rational c(mpq_class(g, l));
    return lc().sign() < 0 ? -c : c;
}

UPoly UPoly::primitive() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / content());
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / lc());
}

Rational UPoly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::complex<double> UPoly::eval(const std::complex<double>& x) const {
    std::complex<double> r(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->to_double();
    return r;
}

std::optional<UPoly> UPoly::sqrt_exact() const {
    if (is_zero()) return UPoly();
    if (degree() % 2 != 0) return std::nullopt;
    auto slc = lc().sqrt_exact();
    if (!slc) return std::nullopt;
    int n = degree() / 2;
    std::vector<Rational> f(static_cast<size_t>(n) + 1, Rational(0));
    f[n] = *slc;
    // coefficient recursion from the top: coeff(n+k) of f^2 determines f[k]
    for (int k = n - 1; k >= 0; --k) {
        Rational s = coeff(n + k);
        for (int i = k + 1; i <= n - 1; ++i) s -= f[i] * f[n + k - i];
        f[k] = s / (f[n] * Rational(2));
    }
    UPoly cand{std::vector<Rational>(f)};
    if (cand * cand == *this) return cand;
    return std::nullopt;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        Rational ac = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = ac.is_one() && i > 0;
        if (!unit) os << ac.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace heunfg
