#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "heunfg/afield.hpp"

namespace heunfg {

/// Thrown by integration when a nonzero residue would force a logarithm.
class LogTermPresent : public std::runtime_error {
public:
    /// pole: 0 -> z=0, 1 -> z=1, 2 -> z=a
    explicit LogTermPresent(int pole)
        : std::runtime_error("integrate: nonzero residue at pole index " + std::to_string(pole)),
          pole_index(pole) {}
    int pole_index;
};

/// Rational function of z with poles restricted to {0, 1, a}, stored in
/// partial-fraction form: a polynomial part plus principal parts at the
/// three admissible poles.  Scalars live in Q(a); the third pole location is
/// the stored value of `a` (the indeterminate, or a rational constant).
class SingularRational {
public:
    explicit SingularRational(AField a_value = AField::var());

    static SingularRational zero(AField a_value = AField::var()) {
        return SingularRational(std::move(a_value));
    }
    static SingularRational from_poly(std::vector<AField> coeffs, AField a_value = AField::var());
    /// num(z) / (z^e0 (z-1)^e1 (z-a)^e2), num with ascending coefficients.
    static SingularRational from_quotient(std::vector<AField> num, int e0, int e1, int e2,
                                          AField a_value = AField::var());

    const AField& a_value() const { return aval_; }
    const std::vector<AField>& poly() const { return poly_; }
    /// Principal part at pole p (0,1,2 -> z=0,1,a): index j holds the
    /// coefficient of (z-p)^{-(j+1)}.
    const std::vector<AField>& principal(int p) const { return pp_[static_cast<size_t>(p)]; }
    int pole_order(int p) const { return static_cast<int>(pp_[static_cast<size_t>(p)].size()); }
    int poly_degree() const { return static_cast<int>(poly_.size()) - 1; }

    bool is_zero() const;
    bool is_constant() const;

    SingularRational operator-() const;
    SingularRational& operator+=(const SingularRational& o);
    SingularRational& operator-=(const SingularRational& o);
    friend SingularRational operator+(SingularRational x, const SingularRational& y) { return x += y; }
    friend SingularRational operator-(SingularRational x, const SingularRational& y) { return x -= y; }
    friend SingularRational operator*(const SingularRational& x, const SingularRational& y);
    friend bool operator==(const SingularRational& x, const SingularRational& y);

    SingularRational scaled(const AField& s) const;
    SingularRational derivative() const;

    /// Antiderivative with respect to z; the constant of integration is
    /// fixed to zero (zero constant term in the polynomial part).  Throws
    /// LogTermPresent when any residue is nonzero.
    SingularRational integrate() const;

    /// Conversion to the quotient form num / (z^e0 (z-1)^e1 (z-a)^e2).
    void to_quotient(std::vector<AField>& num, int& e0, int& e1, int& e2) const;

    std::string str() const;

private:
    AField pole_location(int p) const;
    AField aval_;
    std::vector<AField> poly_;
    std::array<std::vector<AField>, 3> pp_;
    friend struct SingularRationalOps;
};

/// Antiderivative per the module contract; same as f.integrate().
inline SingularRational integrate_rational(const SingularRational& f) { return f.integrate(); }

}  // namespace heunfg
