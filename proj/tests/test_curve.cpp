#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "heunfg/appendix.hpp"
#include "heunfg/curve.hpp"

using namespace heunfg;
using cplx = std::complex<double>;

namespace {

const MultiPoly Z = MultiPoly::z();
const MultiPoly L = MultiPoly::l();
const MultiPoly A = MultiPoly::a();

std::vector<cplx> sorted_by_real(std::vector<cplx> v) {
    std::sort(v.begin(), v.end(), [](cplx x, cplx y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return v;
}

// multiset match to absolute/relative tolerance
bool same_multiset(std::vector<cplx> x, std::vector<cplx> y, double tol) {
    if (x.size() != y.size()) return false;
    x = sorted_by_real(std::move(x));
    y = sorted_by_real(std::move(y));
    for (size_t i = 0; i < x.size(); ++i)
        if (std::abs(x[i] - y[i]) > tol * (1.0 + std::abs(y[i]))) return false;
    return true;
}

}  // namespace

TEST_CASE("curve construction") {
    CHECK(nu_squared(build_psi({0, 0, 0, 0}, std::nullopt)).nu2 == L);
    {
        auto curve = nu_squared(build_psi({1, 1, 0, 0}, std::nullopt));
        MultiPoly expect = (L + A + MultiPoly(1)) * (L * L - A.scaled(Rational(4)));
        CHECK(curve.nu2 == expect);
        CHECK(curve.g == 1);
    }
    {
        auto curve = nu_squared(build_psi({1, 1, 1, 0}, std::nullopt));
        MultiPoly expect = L * (L + A.scaled(Rational(3))) *
                           (L + (A - MultiPoly(1)).scaled(Rational(3))) *
                           (L * L + (A.scaled(Rational(2)) - MultiPoly(1)).scaled(Rational(2)) * L -
                            MultiPoly(3));
        CHECK(curve.nu2 == expect);
    }
    SUBCASE("appendix curves reproduce exactly") {
        for (const auto& fc : fixture_corpus())
            CHECK(nu_squared(build_psi(fc.m, std::nullopt)).nu2 == fc.nu2);
    }
}

TEST_CASE("numeric branch points") {
    {
        auto curve = nu_squared(build_psi({0, 1, 0, 0}, std::nullopt));
        CHECK(same_multiset(branch_points(curve, Rational(2)), {{-2, 0}, {-1, 0}, {0, 0}}, 1e-10));
    }
    {
        auto curve = nu_squared(build_psi({1, 1, 1, 1}, std::nullopt));
        CHECK(same_multiset(branch_points(curve, Rational(3)), {{-12, 0}, {-4, 0}, {0, 0}}, 1e-10));
    }
    {
        auto curve = nu_squared(build_psi({0, 0, 0, 0}, std::nullopt));
        CHECK(same_multiset(branch_points(curve, Rational(7, 2)), {{0, 0}}, 1e-10));
    }
}

TEST_CASE("sign class enumeration") {
    {
        auto cs = enumerate_nk({0, 0, 0, 0});
        REQUIRE(cs.size() == 1);
        CHECK(cs[0].reduced == Characteristics{0, 0, 0, 0});
        CHECK(cs[0].count == 1);
    }
    {
        auto cs = enumerate_nk({1, 0, 0, 0});
        REQUIRE(cs.size() == 3);
        std::vector<Characteristics> reduced;
        for (const auto& c : cs) {
            CHECK(c.count == 1);
            reduced.push_back(c.reduced);
        }
        std::sort(reduced.begin(), reduced.end());
        std::vector<Characteristics> expect{{1, -1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, -1}};
        std::sort(expect.begin(), expect.end());
        CHECK(reduced == expect);
    }
    {
        auto cs = enumerate_nk({1, 1, 1, 1});
        REQUIRE(cs.size() == 1);
        CHECK(cs[0].reduced == Characteristics{1, 1, 1, 1});
        CHECK(cs[0].count == 3);
        CHECK(cs[0].deg_f == 2);
    }
    SUBCASE("counts add up to 2g+1") {
        for (Characteristics m : {Characteristics{2, 1, 0, 0}, Characteristics{2, 2, 2, 2},
                                  Characteristics{0, 1, 2, 0}}) {
            int total = 0;
            for (const auto& c : enumerate_nk(m)) total += c.count;
            CHECK(total == 2 * genus(m) + 1);
        }
    }
}

TEST_CASE("polynomial eigenvalue systems") {
    SUBCASE("trivial class") {
        auto sys = heun_polynomial_eigenvalues({0, 0, 0, 0}, 0, std::nullopt);
        REQUIRE(sys.values.size() == 1);
        REQUIRE(sys.values[0].lambda_exact.has_value());
        CHECK(*sys.values[0].lambda_exact == AField(0));
    }
    SUBCASE("symbolic eigenvalues of the full class") {
        auto sys = heun_polynomial_eigenvalues({1, 1, 1, 1}, 2, std::nullopt);
        REQUIRE(sys.values.size() == 3);
        std::vector<AField> got;
        for (const auto& v : sys.values) {
            REQUIRE(v.lambda_exact.has_value());
            got.push_back(*v.lambda_exact);
        }
        for (const AField& e :
             {AField(0), AField::var() * AField(-4), AField(Rational(-4))}) {
            CHECK(std::count(got.begin(), got.end(), e) == 1);
        }
    }
    SUBCASE("back-shifted union equals the branch set") {
        auto psi = build_psi({0, 1, 0, 0}, std::nullopt);
        auto curve = nu_squared(psi);
        std::vector<cplx> shifted;
        for (const auto& cls : enumerate_nk({0, 1, 0, 0})) {
            auto sys = heun_polynomial_eigenvalues(cls.reduced, cls.deg_f, Rational(2));
            AField shift = eigenvalue_shift({0, 1, 0, 0}, cls.reduced);
            for (const auto& v : sys.values)
                shifted.push_back(v.lambda - cplx(shift.eval(Rational(2)).num().get_d() /
                                                      shift.eval(Rational(2)).den().get_d(),
                                                  0));
        }
        CHECK(same_multiset(shifted, branch_points(curve, Rational(2)), 1e-8));
    }
    CHECK_THROWS_AS(heun_polynomial_eigenvalues({0, 0, 0, 0}, -1, std::nullopt), EmptyClass);
}

TEST_CASE("factorization at branch points") {
    SUBCASE("linear case") {
        auto psi = build_psi({1, 0, 0, 0}, std::nullopt);
        auto rec = branch_factorize(psi, AField(Rational(1)));
        CHECK(rec.M == std::array<int, 4>{0, 0, 0, 1});
        CHECK(rec.deg_f == 0);
        CHECK(rec.f_monic == std::vector<AField>{AField(1)});
    }
    SUBCASE("perfect square at lambda = 0") {
        auto psi = build_psi({1, 1, 1, 1}, std::nullopt);
        auto rec = branch_factorize(psi, AField(Rational(0)));
        CHECK(rec.M == std::array<int, 4>{0, 0, 0, 0});
        CHECK(rec.deg_f == 2);
        CHECK(rec.f_monic == std::vector<AField>{-AField::var(), AField(0), AField(1)});
    }
    SUBCASE("perfect square at lambda = -4a") {
        auto psi = build_psi({1, 1, 1, 1}, std::nullopt);
        auto rec = branch_factorize(psi, AField::var() * AField(-4));
        CHECK(rec.M == std::array<int, 4>{0, 0, 0, 0});
        CHECK(rec.f_monic ==
              std::vector<AField>{AField::var(), AField::var() * AField(-2), AField(1)});
    }
    SUBCASE("numeric route agrees") {
        auto psi = build_psi({1, 1, 1, 1}, Rational(3));
        auto rec = branch_factorize(psi, cplx(-12.0, 0.0));
        CHECK(rec.M == std::array<int, 4>{0, 0, 0, 0});
        REQUIRE(rec.f_numeric.size() == 3);
        CHECK(std::abs(rec.f_numeric[0] - cplx(3, 0)) < 1e-8);
        CHECK(std::abs(rec.f_numeric[1] - cplx(-6, 0)) < 1e-8);
        CHECK(std::abs(rec.f_numeric[2] - cplx(1, 0)) < 1e-8);
    }
}

TEST_CASE("special accessory roots are branch points") {
    SUBCASE("hand case (0,1,0,0) at a = 2") {
        auto psi = build_psi({0, 1, 0, 0}, std::nullopt);
        auto sets = special_lambda_roots(psi, Rational(2));
        std::vector<cplx> all;
        for (const auto& s : sets)
            for (const auto& r : s.roots) all.push_back(r);
        CHECK(same_multiset(all, {{-2, 0}, {-1, 0}, {0, 0}}, 1e-8));
    }
    SUBCASE("discriminant roots for (1,1,0,0) at a = 4") {
        auto psi = build_psi({1, 1, 0, 0}, std::nullopt);
        auto sets = special_lambda_roots(psi, Rational(4));
        bool found = false;
        for (const auto& s : sets) {
            if (s.label.find("discriminant") == std::string::npos) continue;
            found = true;
            CHECK(same_multiset(s.roots, {{-4, 0}, {4, 0}}, 1e-8));
        }
        CHECK(found);
        // every labeled root lies in the branch set of (l+5)(l^2-16)
        auto curve = nu_squared(psi);
        const auto& bp = branch_points(curve, Rational(4));
        for (const auto& s : sets)
            for (const auto& r : s.roots) {
                double best = 1e300;
                for (const auto& b : bp) best = std::min(best, std::abs(r - b));
                CHECK(best < 1e-8);
            }
    }
}

TEST_CASE("zero-location relations") {
    SUBCASE("product relation, hand case") {
        auto psi = build_psi({1, 0, 0, 0}, Rational(2));
        auto curve = nu_squared(psi);
        auto rep = stieltjes_product_check(psi, curve, cplx(5, 0), Rational(2));
        REQUIRE(rep.residuals.size() == 1);
        CHECK(rep.max_residual < 1e-10);
    }
    SUBCASE("sum relation at a branch point") {
        auto psi = build_psi({1, 1, 1, 1}, Rational(3));
        auto rec = branch_factorize(psi, cplx(-12.0, 0.0));
        auto rep = stieltjes_sum_check(rec, Rational(3));
        REQUIRE(rep.residuals.size() == 2);
        CHECK(rep.max_residual < 1e-10);
    }
}

TEST_CASE("eigenvalue shift consistency") {
    // shifting to the reduced problem and back is the identity on the class
    Characteristics m{0, 1, 0, 0};
    for (const auto& cls : enumerate_nk(m)) {
        AField s = eigenvalue_shift(m, cls.reduced);
        CHECK(eigenvalue_shift(m, cls.reduced) == s);  // deterministic
        if (cls.reduced == m) CHECK(s == AField(0));
    }
}
