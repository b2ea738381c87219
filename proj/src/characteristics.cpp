#include "heunfg/characteristics.hpp"

#include <algorithm>
#include <sstream>

namespace heunfg {

int Characteristics::max_m() const { return std::max({m0, m1, m2, m3}); }
int Characteristics::min_m() const { return std::min({m0, m1, m2, m3}); }

std::string Characteristics::str() const {
    std::ostringstream os;
    os << "(" << m0 << "," << m1 << "," << m2 << "," << m3 << ")";
    return os.str();
}

int genus(const Characteristics& m) {
    if (!m.all_nonnegative()) throw NegativeCharacteristic();
    int n = m.N();
    if (n % 2 == 0) return std::max(m.max_m(), n / 2 - m.min_m());
    return std::max(m.max_m(), (n + 1) / 2);
}

ShiftData normalize_characteristics(const Characteristics& m, const MultiPoly& lambda) {
    ShiftData s;
    s.normalized = m;
    s.mu = lambda;
    s.prefactor = {Rational(0), Rational(0), Rational(0), Rational(0)};
    auto& c = s.normalized;
    const MultiPoly av = MultiPoly::a();

    if (c.m0 < 0) c.m0 = -c.m0 - 1;  // accessory unchanged
    if (c.m1 < 0) {
        int m1 = -c.m1 - 1;
        // mu = lambda - (2m1+1)(2m2-1)a - (2m1+1)(2m3-1)
        s.mu -= av.scaled(Rational(2 * m1 + 1) * Rational(2 * c.m2 - 1));
        s.mu -= MultiPoly(Rational(2 * m1 + 1) * Rational(2 * c.m3 - 1));
        s.prefactor[1] = Rational(-(2 * m1 + 1), 2);
        c.m1 = m1;
    }
    if (c.m2 < 0) {
        int m2 = -c.m2 - 1;
        // mu = lambda - (2m1-1)(2m2+1)a
        s.mu -= av.scaled(Rational(2 * c.m1 - 1) * Rational(2 * m2 + 1));
        s.prefactor[2] = Rational(-(2 * m2 + 1), 2);
        c.m2 = m2;
    }
    if (c.m3 < 0) {
        int m3 = -c.m3 - 1;
        // mu = lambda - (2m1-1)(2m3+1)
        s.mu -= MultiPoly(Rational(2 * c.m1 - 1) * Rational(2 * m3 + 1));
        s.prefactor[3] = Rational(-(2 * m3 + 1), 2);
        c.m3 = m3;
    }
    return s;
}

HeunParams heun_params(const Characteristics& m, const MultiPoly& lambda) {
    HeunParams p;
    p.gamma = Rational(1 - 2 * m.m1, 2);
    p.delta = Rational(1 - 2 * m.m2, 2);
    p.epsilon = Rational(1 - 2 * m.m3, 2);
    p.q = lambda.scaled(Rational(-1, 4));
    int n = m.N();
    p.alpha_beta_product = Rational(static_cast<long>(n) * (n - 2 * m.m0 - 1), 4);
    p.alpha_beta_sum = p.gamma + p.delta + p.epsilon - Rational(1);
    p.discriminant = p.alpha_beta_sum * p.alpha_beta_sum - Rational(4) * p.alpha_beta_product;
    if (auto sq = p.discriminant.sqrt_exact()) {
        Rational half(1, 2);
        Rational alpha = (p.alpha_beta_sum + *sq) * half;
        Rational beta = (p.alpha_beta_sum - *sq) * half;
        p.rational_roots = std::make_pair(alpha, beta);
    }
    return p;
}

}  // namespace heunfg
