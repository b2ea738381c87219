#pragma once

#include <vector>

#include "heunfg/characteristics.hpp"
#include "heunfg/singular_rational.hpp"

namespace heunfg {

class BoundExceeded : public std::runtime_error {
public:
    BoundExceeded()
        : std::runtime_error("novikov_order: no linear dependence found up to order N") {}
};

/// The `potential' U(z): four-term rational function with simple poles at
/// 0, 1, a and a linear polynomial part.  Invariant under m_i -> -m_i-1.
SingularRational potential_U(const Characteristics& m, AField a_value = AField::var());

/// The recursion operator:
/// L(f) = z(z-1)(z-a) f'' + (3z^2-2(a+1)z+a)/2 f' - int(4 U f' + 2 f U') dz,
/// with the integration constant fixed to zero.
SingularRational apply_flow_operator(const SingularRational& f, const SingularRational& U);

/// Lazily extended sequence I_0 = U, I_{n+1} = L(I_n) for one (m, a) pair;
/// computed flows are retained.
class FlowSequence {
public:
    FlowSequence(Characteristics m, AField a_value = AField::var());
    const Characteristics& characteristics() const { return m_; }
    const AField& a_value() const { return aval_; }
    const SingularRational& get(int n);
    const SingularRational& potential() { return get(0); }

private:
    Characteristics m_;
    AField aval_;
    std::vector<SingularRational> flows_;
};

/// I_g + sum_j c_j I_{g-j} = d, the minimal-order affine dependence.
struct NovikovData {
    int order = 0;
    std::vector<AField> constants;  // c_1..c_g
    AField affine_constant;         // d
};

/// Smallest g with I_g in the affine span of {I_{g-1}, ..., I_0, 1}.
/// Throws BoundExceeded when no dependence is found by order N (cannot
/// happen for valid inputs).
NovikovData novikov_order(const Characteristics& m, AField a_value = AField::var());
NovikovData novikov_order(FlowSequence& flows);

/// Coefficients x with target = sum_k x_k basis_k + x_last * 1, solved
/// exactly in partial-fraction coordinates; nullopt when the target is not
/// in the affine span.
std::optional<std::vector<AField>> affine_span_solve(
    const std::vector<SingularRational>& basis, const SingularRational& target);

}  // namespace heunfg
