#include "heunfg/rational.hpp"

namespace heunfg {

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpq_class q(s);
        if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
        return Rational(q);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        mpz_class num(digits);
        mpz_class den(1);
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(mpq_class(num, den));
    }
    return Rational(mpq_class(s));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return Rational(1) / pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(n, d));
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = v_.get_num(), d = v_.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(sn, sd));
}

}  // namespace heunfg
