#include "heunfg/singular_rational.hpp"

#include <sstream>

namespace heunfg {

namespace {

using ZP = std::vector<AField>;  // polynomial in z over Q(a), ascending

void trim(ZP& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ZP zp_mul(const ZP& x, const ZP& y) {
    if (x.empty() || y.empty()) return {};
    ZP r(x.size() + y.size() - 1);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    }
    trim(r);
    return r;
}

ZP zp_add(ZP x, const ZP& y) {
    if (y.size() > x.size()) x.resize(y.size());
    for (size_t i = 0; i < y.size(); ++i) x[i] += y[i];
    trim(x);
    return x;
}

/// Synthetic division by (z - c); returns quotient, sets rem.
ZP zp_div_linear(const ZP& p, const AField& c, AField& rem) {
    if (p.empty()) {
        rem = AField(0);
        return {};
    }
    ZP q(p.size() > 1 ? p.size() - 1 : 0);
    AField carry(0);
    for (size_t i = p.size(); i-- > 0;) {
        AField cur = p[i] + carry * c;
        if (i == 0) {
            rem = cur;
        } else {
            q[i - 1] = cur;
            carry = cur;
        }
    }
    trim(q);
    return q;
}

/// Taylor coefficients of p at z = c, lowest first (length = p.size()).
ZP zp_shift(const ZP& p, const AField& c) {
    ZP work = p;
    ZP out;
    out.reserve(p.size());
    while (!work.empty()) {
        AField rem;
        work = zp_div_linear(work, c, rem);
        out.push_back(rem);
    }
    return out;
}

/// Division by a monic divisor; quotient and remainder.
void zp_divmod_monic(const ZP& num, const ZP& den, ZP& q, ZP& r) {
    r = num;
    trim(r);
    q.clear();
    if (den.empty()) throw std::domain_error("zp_divmod_monic: zero divisor");
    int dd = static_cast<int>(den.size()) - 1;
    while (static_cast<int>(r.size()) - 1 >= dd) {
        int shift = static_cast<int>(r.size()) - 1 - dd;
        AField f = r.back();
        if (static_cast<int>(q.size()) <= shift) q.resize(static_cast<size_t>(shift) + 1);
        q[static_cast<size_t>(shift)] += f;
        for (int i = 0; i <= dd; ++i)
            r[static_cast<size_t>(shift + i)] -= f * den[static_cast<size_t>(i)];
        trim(r);
    }
    trim(q);
}

}  // namespace

SingularRational::SingularRational(AField a_value) : aval_(std::move(a_value)) {}

AField SingularRational::pole_location(int p) const {
    switch (p) {
        case 0: return AField(0);
        case 1: return AField(1);
        default: return aval_;
    }
}

SingularRational SingularRational::from_poly(std::vector<AField> coeffs, AField a_value) {
    SingularRational r(std::move(a_value));
    r.poly_ = std::move(coeffs);
    trim(r.poly_);
    return r;
}

SingularRational SingularRational::from_quotient(std::vector<AField> num, int e0, int e1, int e2,
                                                 AField a_value) {
    SingularRational r(std::move(a_value));
    trim(num);
    if (num.empty()) return r;

    std::array<int, 3> ord = {e0, e1, e2};
    // cancel factors shared with the denominator
    for (int p = 0; p < 3; ++p) {
        AField loc = r.pole_location(p);
        while (ord[static_cast<size_t>(p)] > 0) {
            AField rem;
            ZP q = zp_div_linear(num, loc, rem);
            if (!rem.is_zero()) break;
            num = std::move(q);
            --ord[static_cast<size_t>(p)];
        }
    }

    // denominator, monic in z
    ZP den{AField(1)};
    for (int p = 0; p < 3; ++p) {
        AField loc = r.pole_location(p);
        for (int k = 0; k < ord[static_cast<size_t>(p)]; ++k)
            den = zp_mul(den, ZP{-loc, AField(1)});
    }

    ZP rem;
    zp_divmod_monic(num, den, r.poly_, rem);

    for (int p = 0; p < 3; ++p) {
        int k = ord[static_cast<size_t>(p)];
        if (k == 0) continue;
        AField loc = r.pole_location(p);
        // cofactor Q = den / (z - loc)^k
        ZP cof{AField(1)};
        for (int o = 0; o < 3; ++o) {
            if (o == p) continue;
            AField oloc = r.pole_location(o);
            for (int t = 0; t < ord[static_cast<size_t>(o)]; ++t)
                cof = zp_mul(cof, ZP{-oloc, AField(1)});
        }
        // series of rem(w+loc) / cof(w+loc) modulo w^k
        ZP ns = zp_shift(rem, loc);
        ZP qs = zp_shift(cof, loc);
        ns.resize(static_cast<size_t>(k));
        qs.resize(static_cast<size_t>(k) + 1);
        std::vector<AField> inv(static_cast<size_t>(k));
        inv[0] = qs[0].inverse();
        for (int t = 1; t < k; ++t) {
            AField s(0);
            for (int i = 1; i <= t; ++i) s += qs[static_cast<size_t>(i)] * inv[static_cast<size_t>(t - i)];
            inv[static_cast<size_t>(t)] = -s * inv[0];
        }
        std::vector<AField> series(static_cast<size_t>(k));
        for (int t = 0; t < k; ++t) {
            AField s(0);
            for (int i = 0; i <= t; ++i) s += ns[static_cast<size_t>(i)] * inv[static_cast<size_t>(t - i)];
            series[static_cast<size_t>(t)] = s;
        }
        // coefficient of (z-loc)^{-(k-t)} is series[t]
        auto& pp = r.pp_[static_cast<size_t>(p)];
        pp.assign(static_cast<size_t>(k), AField(0));
        for (int t = 0; t < k; ++t) pp[static_cast<size_t>(k - t - 1)] = series[static_cast<size_t>(t)];
        while (!pp.empty() && pp.back().is_zero()) pp.pop_back();
    }
    return r;
}

bool SingularRational::is_zero() const {
    if (!poly_.empty()) return false;
    for (const auto& pp : pp_)
        if (!pp.empty()) return false;
    return true;
}

bool SingularRational::is_constant() const {
    if (poly_.size() > 1) return false;
    for (const auto& pp : pp_)
        if (!pp.empty()) return false;
    return true;
}

SingularRational SingularRational::operator-() const {
    SingularRational r(*this);
    for (auto& c : r.poly_) c = -c;
    for (auto& pp : r.pp_)
        for (auto& c : pp) c = -c;
    return r;
}

SingularRational& SingularRational::operator+=(const SingularRational& o) {
    poly_ = zp_add(std::move(poly_), o.poly_);
    for (int p = 0; p < 3; ++p) {
        auto& x = pp_[static_cast<size_t>(p)];
        const auto& y = o.pp_[static_cast<size_t>(p)];
        if (y.size() > x.size()) x.resize(y.size());
        for (size_t i = 0; i < y.size(); ++i) x[i] += y[i];
        while (!x.empty() && x.back().is_zero()) x.pop_back();
    }
    return *this;
}

SingularRational& SingularRational::operator-=(const SingularRational& o) { return *this += -o; }

SingularRational operator*(const SingularRational& x, const SingularRational& y) {
    std::vector<AField> nx, ny;
    int a0, a1, a2, b0, b1, b2;
    x.to_quotient(nx, a0, a1, a2);
    y.to_quotient(ny, b0, b1, b2);
    return SingularRational::from_quotient(zp_mul(nx, ny), a0 + b0, a1 + b1, a2 + b2, x.aval_);
}

bool operator==(const SingularRational& x, const SingularRational& y) {
    return x.poly_ == y.poly_ && x.pp_ == y.pp_;
}

SingularRational SingularRational::scaled(const AField& s) const {
    if (s.is_zero()) return SingularRational(aval_);
    SingularRational r(*this);
    for (auto& c : r.poly_) c = c * s;
    for (auto& pp : r.pp_)
        for (auto& c : pp) c = c * s;
    return r;
}

SingularRational SingularRational::derivative() const {
    SingularRational r(aval_);
    if (poly_.size() > 1) {
        r.poly_.resize(poly_.size() - 1);
        for (size_t i = 1; i < poly_.size(); ++i)
            r.poly_[i - 1] = poly_[i] * AField(Rational(static_cast<long>(i)));
        trim(r.poly_);
    }
    for (int p = 0; p < 3; ++p) {
        const auto& pp = pp_[static_cast<size_t>(p)];
        if (pp.empty()) continue;
        auto& rp = r.pp_[static_cast<size_t>(p)];
        rp.assign(pp.size() + 1, AField(0));
        // d/dz (z-p)^{-j} = -j (z-p)^{-j-1}
        for (size_t j = 1; j <= pp.size(); ++j)
            rp[j] = pp[j - 1] * AField(Rational(-static_cast<long>(j)));
        while (!rp.empty() && rp.back().is_zero()) rp.pop_back();
    }
    return r;
}

SingularRational SingularRational::integrate() const {
    for (int p = 0; p < 3; ++p) {
        const auto& pp = pp_[static_cast<size_t>(p)];
        if (!pp.empty() && !pp[0].is_zero()) throw LogTermPresent(p);
    }
    SingularRational r(aval_);
    if (!poly_.empty()) {
        r.poly_.assign(poly_.size() + 1, AField(0));
        for (size_t i = 0; i < poly_.size(); ++i)
            r.poly_[i + 1] = poly_[i] / AField(Rational(static_cast<long>(i) + 1));
        trim(r.poly_);
    }
    for (int p = 0; p < 3; ++p) {
        const auto& pp = pp_[static_cast<size_t>(p)];
        if (pp.size() < 2) continue;
        auto& rp = r.pp_[static_cast<size_t>(p)];
        rp.assign(pp.size() - 1, AField(0));
        // int (z-p)^{-j} dz = (z-p)^{-(j-1)} / (1-j), j >= 2
        for (size_t j = 2; j <= pp.size(); ++j)
            rp[j - 2] = pp[j - 1] / AField(Rational(1 - static_cast<long>(j)));
        while (!rp.empty() && rp.back().is_zero()) rp.pop_back();
    }
    return r;
}

void SingularRational::to_quotient(std::vector<AField>& num, int& e0, int& e1, int& e2) const {
    std::array<int, 3> ord = {pole_order(0), pole_order(1), pole_order(2)};
    ZP den{AField(1)};
    for (int p = 0; p < 3; ++p) {
        AField loc = pole_location(p);
        for (int k = 0; k < ord[static_cast<size_t>(p)]; ++k)
            den = zp_mul(den, ZP{-loc, AField(1)});
    }
    ZP acc = zp_mul(poly_, den);
    for (int p = 0; p < 3; ++p) {
        const auto& pp = pp_[static_cast<size_t>(p)];
        if (pp.empty()) continue;
        AField loc = pole_location(p);
        // cofactor with (z-loc)^k removed
        for (size_t j = 1; j <= pp.size(); ++j) {
            if (pp[j - 1].is_zero()) continue;
            ZP part{pp[j - 1]};
            for (int o = 0; o < 3; ++o) {
                AField oloc = pole_location(o);
                int e = ord[static_cast<size_t>(o)] - (o == p ? static_cast<int>(j) : 0);
                for (int t = 0; t < e; ++t) part = zp_mul(part, ZP{-oloc, AField(1)});
            }
            acc = zp_add(std::move(acc), part);
        }
    }
    num = std::move(acc);
    e0 = ord[0];
    e1 = ord[1];
    e2 = ord[2];
}

std::string SingularRational::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& piece) {
        if (!first) os << " + ";
        os << piece;
        first = false;
    };
    for (size_t i = poly_.size(); i-- > 0;) {
        if (poly_[i].is_zero()) continue;
        std::ostringstream t;
        t << "(" << poly_[i].str() << ")";
        if (i >= 1) {
            t << "*z";
            if (i > 1) t << "^" << i;
        }
        emit(t.str());
    }
    static const char* names[3] = {"z", "(z-1)", "(z-a)"};
    for (int p = 0; p < 3; ++p) {
        const auto& pp = pp_[static_cast<size_t>(p)];
        for (size_t j = 1; j <= pp.size(); ++j) {
            if (pp[j - 1].is_zero()) continue;
            std::ostringstream t;
            t << "(" << pp[j - 1].str() << ")/" << names[p];
            if (j > 1) t << "^" << j;
            emit(t.str());
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace heunfg
