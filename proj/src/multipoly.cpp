#include "heunfg/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace heunfg {

void MultiPoly::add_term(const Exps& e, Rational c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

MultiPoly MultiPoly::monomial(Exps e, Rational c) {
    MultiPoly p;
    p.add_term(e, std::move(c));
    return p;
}

MultiPoly MultiPoly::from_upoly_in_a(const UPoly& p) {
    MultiPoly r;
    for (int k = 0; k <= p.degree(); ++k) r.add_term({0, 0, k}, p.coeff(k));
    return r;
}

MultiPoly MultiPoly::from_upoly_in_l(const UPoly& p) {
    MultiPoly r;
    for (int j = 0; j <= p.degree(); ++j) r.add_term({0, j, 0}, p.coeff(j));
    return r;
}

Rational MultiPoly::coeff(const Exps& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rational(0) : it->second;
}

int MultiPoly::deg_z() const {
    int d = t_.empty() ? 0 : -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.z);
    return std::max(d, 0);
}

int MultiPoly::deg_l() const {
    int d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, e.l);
    return d;
}

int MultiPoly::deg_a() const {
    int d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, e.a);
    return d;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.t_) {
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.t_) {
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
    MultiPoly r;
    for (const auto& [ex, cx] : x.t_) {
        for (const auto& [ey, cy] : y.t_) {
            r.add_term({ex.z + ey.z, ex.l + ey.l, ex.a + ey.a}, cx * cy);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& s) const {
    MultiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    MultiPoly r{Rational(1)};
    MultiPoly base(*this);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::dz() const {
    MultiPoly r;
    for (const auto& [e, c] : t_) {
        if (e.z > 0) r.add_term({e.z - 1, e.l, e.a}, c * Rational(e.z));
    }
    return r;
}

MultiPoly MultiPoly::dl() const {
    MultiPoly r;
    for (const auto& [e, c] : t_) {
        if (e.l > 0) r.add_term({e.z, e.l - 1, e.a}, c * Rational(e.l));
    }
    return r;
}

MultiPoly MultiPoly::coeff_l(int j) const {
    MultiPoly r;
    for (const auto& [e, c] : t_) {
        if (e.l == j) r.add_term({e.z, 0, e.a}, c);
    }
    return r;
}

UPoly MultiPoly::coeff_zl(int i, int j) const {
    std::vector<Rational> v;
    for (const auto& [e, c] : t_) {
        if (e.z != i || e.l != j) continue;
        if (static_cast<int>(v.size()) <= e.a) v.resize(static_cast<size_t>(e.a) + 1, Rational(0));
        v[static_cast<size_t>(e.a)] = c;
    }
    return UPoly(std::move(v));
}

MultiPoly MultiPoly::coeff_z(int i) const {
    MultiPoly r;
    for (const auto& [e, c] : t_) {
        if (e.z == i) r.add_term({0, e.l, e.a}, c);
    }
    return r;
}

UPoly MultiPoly::as_upoly_in_l() const {
    std::vector<Rational> v;
    for (const auto& [e, c] : t_) {
        if (e.z != 0 || e.a != 0)
            throw std::domain_error("MultiPoly: not univariate in l");
        if (static_cast<int>(v.size()) <= e.l) v.resize(static_cast<size_t>(e.l) + 1, Rational(0));
        v[static_cast<size_t>(e.l)] = c;
    }
    return UPoly(std::move(v));
}

UPoly MultiPoly::as_upoly_in_a() const {
    std::vector<Rational> v;
    for (const auto& [e, c] : t_) {
        if (e.z != 0 || e.l != 0)
            throw std::domain_error("MultiPoly: not univariate in a");
        if (static_cast<int>(v.size()) <= e.a) v.resize(static_cast<size_t>(e.a) + 1, Rational(0));
        v[static_cast<size_t>(e.a)] = c;
    }
    return UPoly(std::move(v));
}

MultiPoly MultiPoly::subst_a(const Rational& v) const {
    MultiPoly r;
    for (const auto& [e, c] : t_) r.add_term({e.z, e.l, 0}, c * v.pow(e.a));
    return r;
}

MultiPoly MultiPoly::subst_z(const Rational& v) const {
    MultiPoly r;
    for (const auto& [e, c] : t_) r.add_term({0, e.l, e.a}, c * v.pow(e.z));
    return r;
}

MultiPoly MultiPoly::subst_l(const MultiPoly& v) const {
    MultiPoly r;
    int dl = deg_l();
    for (int j = dl; j >= 0; --j) {
        r = r * v + coeff_l(j);
    }
    return r;
}

std::complex<double> MultiPoly::eval(const std::complex<double>& zv,
                                     const std::complex<double>& lv,
                                     const std::complex<double>& av) const {
    std::complex<double> s(0.0, 0.0);
    for (const auto& [e, c] : t_) {
        std::complex<double> m(c.to_double(), 0.0);
        for (int i = 0; i < e.z; ++i) m *= zv;
        for (int i = 0; i < e.l; ++i) m *= lv;
        for (int i = 0; i < e.a; ++i) m *= av;
        s += m;
    }
    return s;
}

MultiPoly MultiPoly::divide_z_linear(const Rational& r) const {
    // synthetic division by (z - r) with coefficients in Q[l,a]
    int d = deg_z();
    if (is_zero()) return MultiPoly();
    std::vector<MultiPoly> cz(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) cz[static_cast<size_t>(i)] = coeff_z(i);
    MultiPoly carry;  // current quotient coefficient
    MultiPoly q;
    for (int i = d; i >= 1; --i) {
        carry = (i == d) ? cz[static_cast<size_t>(i)]
                         : cz[static_cast<size_t>(i)] + carry.scaled(r);
        q += carry * monomial({i - 1, 0, 0}, Rational(1));
    }
    MultiPoly rem = cz[0] + carry.scaled(r);
    if (!rem.is_zero()) throw std::domain_error("MultiPoly: inexact division by z-linear factor");
    return q;
}

MultiPoly MultiPoly::divide_z_minus_a() const {
    int d = deg_z();
    if (is_zero()) return MultiPoly();
    std::vector<MultiPoly> cz(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) cz[static_cast<size_t>(i)] = coeff_z(i);
    MultiPoly carry;
    MultiPoly q;
    const MultiPoly av = a();
    for (int i = d; i >= 1; --i) {
        carry = (i == d) ? cz[static_cast<size_t>(i)]
                         : cz[static_cast<size_t>(i)] + carry * av;
        q += carry * monomial({i - 1, 0, 0}, Rational(1));
    }
    MultiPoly rem = cz[0] + carry * av;
    if (!rem.is_zero()) throw std::domain_error("MultiPoly: inexact division by (z - a)");
    return q;
}

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        Rational ac = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = e.total() > 0;
        bool unit = ac.is_one() && has_vars;
        if (!unit) os << ac.str();
        bool need_star = !unit;
        auto emit = [&](const char* name, int exp) {
            if (exp == 0) return;
            if (need_star) os << "*";
            os << name;
            if (exp > 1) os << "^" << exp;
            need_star = true;
        };
        emit("z", e.z);
        emit("l", e.l);
        emit("a", e.a);
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Rational number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (start == pos) throw std::invalid_argument("MultiPoly::parse: expected number");
        return Rational::parse(s.substr(start, pos - start));
    }

    int exponent() {
        if (!eat('^')) return 1;
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("MultiPoly::parse: expected exponent");
        return std::stoi(s.substr(start, pos - start));
    }

    MultiPoly term() {
        Exps e;
        Rational c(1);
        bool saw_factor = false;
        for (;;) {
            char p = peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                c *= number();
            } else if (p == 'z') {
                ++pos;
                e.z += exponent();
            } else if (p == 'l') {
                ++pos;
                e.l += exponent();
            } else if (p == 'a') {
                ++pos;
                e.a += exponent();
            } else {
                throw std::invalid_argument("MultiPoly::parse: unexpected character");
            }
            saw_factor = true;
            if (!eat('*')) break;
        }
        if (!saw_factor) throw std::invalid_argument("MultiPoly::parse: empty term");
        return MultiPoly::monomial(e, c);
    }

    MultiPoly parse() {
        MultiPoly r;
        bool neg = eat('-');
        if (!neg) eat('+');
        for (;;) {
            MultiPoly t = term();
            r += neg ? -t : t;
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+')) {
                neg = false;
            } else if (eat('-')) {
                neg = true;
            } else {
                throw std::invalid_argument("MultiPoly::parse: expected + or -");
            }
        }
        return r;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("MultiPoly::parse: empty input");
    Parser p(s);
    p.skip_ws();
    if (p.pos < s.size() && s.compare(p.pos, 1, "0") == 0 && p.pos + 1 == s.size())
        return MultiPoly();
    return p.parse();
}

}  // namespace heunfg
