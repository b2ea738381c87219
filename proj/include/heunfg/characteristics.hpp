#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "heunfg/multipoly.hpp"
#include "heunfg/rational.hpp"

namespace heunfg {

class NegativeCharacteristic : public std::runtime_error {
public:
    NegativeCharacteristic() : std::runtime_error("genus: negative characteristic") {}
};

/// The four integer characteristics (m0, m1, m2, m3); N = m0+m1+m2+m3.
struct Characteristics {
    int m0 = 0, m1 = 0, m2 = 0, m3 = 0;

    int N() const { return m0 + m1 + m2 + m3; }
    std::array<int, 4> as_array() const { return {m0, m1, m2, m3}; }
    int& at(int i) {
        switch (i) {
            case 0: return m0;
            case 1: return m1;
            case 2: return m2;
            default: return m3;
        }
    }
    int at(int i) const {
        switch (i) {
            case 0: return m0;
            case 1: return m1;
            case 2: return m2;
            default: return m3;
        }
    }
    bool all_nonnegative() const { return m0 >= 0 && m1 >= 0 && m2 >= 0 && m3 >= 0; }
    int max_m() const;
    int min_m() const;
    std::string str() const;
    friend bool operator==(const Characteristics&, const Characteristics&) = default;
    friend auto operator<=>(const Characteristics&, const Characteristics&) = default;
};

/// Genus of the spectral curve for nonnegative characteristics:
/// even N: max{max m_i, N/2 - min m_i}; odd N: max{max m_i, (N+1)/2}.
int genus(const Characteristics& m);

/// Result of normalizing negative characteristics: all m_i >= 0 afterwards,
/// with the accessory parameter shifted and half-integer prefactor
/// exponents on z, z-1, z-a accumulated.
struct ShiftData {
    Characteristics normalized;
    MultiPoly mu;  // shifted accessory, a polynomial in l and a
    /// prefactor exponents: index 0 unused (always 0), 1 -> z, 2 -> (z-1),
    /// 3 -> (z-a); each an integer multiple of 1/2
    std::array<Rational, 4> prefactor;
    bool trivial() const {
        for (const auto& p : prefactor)
            if (!p.is_zero()) return false;
        return true;
    }
};

/// Applies the negative-characteristic reductions (m_i -> -m_i-1 with the
/// associated accessory shift and prefactor) until all characteristics are
/// nonnegative.  Indices are processed in the order 0, 1, 2, 3.
ShiftData normalize_characteristics(const Characteristics& m, const MultiPoly& lambda);

/// Standard Heun parameters of the special equation with integer
/// characteristics: gamma = (1-2m1)/2 etc., q = -lambda/4, alpha*beta =
/// N(N-2m0-1)/4, alpha+beta = gamma+delta+epsilon-1.
struct HeunParams {
    Rational gamma, delta, epsilon;
    MultiPoly q;  // -lambda/4 as a polynomial in l (and a)
    Rational alpha_beta_product;
    Rational alpha_beta_sum;
    Rational discriminant;  // (alpha+beta)^2 - 4*alpha*beta
    std::optional<std::pair<Rational, Rational>> rational_roots;  // {alpha, beta} when rational
};

HeunParams heun_params(const Characteristics& m, const MultiPoly& lambda);

}  // namespace heunfg
