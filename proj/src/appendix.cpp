#include "heunfg/appendix.hpp"

namespace heunfg {

namespace {

using MP = MultiPoly;

MP n(long v) { return MP(Rational(v)); }
MP s(const MP& p, long k) { return p.scaled(Rational(k)); }

std::vector<FixtureCase> build_corpus() {
    const MP Z = MP::z(), L = MP::l(), A = MP::a();
    const MP Z2 = Z * Z, Z3 = Z2 * Z, Z4 = Z3 * Z, Z5 = Z4 * Z;
    const MP L2 = L * L, L3 = L2 * L;
    const MP A2 = A * A, A3 = A2 * A;

    std::vector<FixtureCase> v;

    v.push_back({{0, 0, 0, 0}, n(1), L});

    v.push_back({{1, 0, 0, 0},
                 L + Z - A - n(1),
                 (L - n(1)) * (L - A) * (L - A - n(1))});

    v.push_back({{0, 1, 0, 0},
                 Z * L + A,
                 L * (L + A) * (L + n(1))});

    v.push_back({{1, 1, 0, 0},
                 Z * L + Z2 + A,
                 (L + A + n(1)) * (L2 - s(A, 4))});

    v.push_back({{0, 0, 1, 1},
                 (Z - n(1)) * (Z - A) * L + (A + n(1)) * Z2 - s(A * Z, 4) + A * (A + n(1)),
                 (L + A + n(1)) * (L2 - s(A, 4))});

    v.push_back({{1, 1, 1, 0},
                 Z * (Z - n(1)) * L2 + (Z3 + s((A - n(1)) * Z2, 3) - s((A - n(1)) * Z, 3) - A) * L -
                     s(A * (A - n(1)), 3),
                 L * (L + s(A, 3)) * (L + s(A - n(1), 3)) * (L2 + s(s(A, 2) - n(1), 2) * L - n(3))});

    v.push_back({{1, 1, 1, 1},
                 Z * (Z - n(1)) * (Z - A) * L + (Z2 - A) * (Z2 - A),
                 L * (L + s(A, 4)) * (L + n(4))});

    v.push_back({{2, 0, 0, 0},
                 L2 + (s(Z, 3) - s(A + n(1), 5)) * L + s(Z2, 9) - s((A + n(1)) * Z, 12) +
                     (A + n(4)) * (s(A, 4) + n(1)),
                 (L - A - n(1)) * (L - A - n(4)) * (L - s(A, 4) - n(1)) *
                     (L2 - s((A + n(1)) * L, 4) + s(A, 12))});

    // The published table transposes the generating polynomials of the next
    // two cases; each is paired here with the one its own equation produces.
    v.push_back({{0, 2, 0, 0},
                 Z2 * L2 + s(((A + n(1)) * Z + A) * Z * L, 3) + s(A * Z2, 9) + s(A2, 9),
                 (L + n(3)) * (L + s(A, 3)) * (L + s(A + n(1), 3)) *
                     (L2 + s((A + n(1)) * L, 4) + s(A, 12))});

    v.push_back({{2, 1, 0, 0},
                 Z * L2 + (s(Z2, 3) - s((A + n(1)) * Z, 3) + A) * L + s(Z3, 9) -
                     s((A + n(1)) * Z2, 9) - s(A * (A + n(1)), 3),
                 (L - s(A + n(1), 3)) * (L2 - s(L, 2) - s(s(A, 4) + n(1), 3)) *
                     (L2 - s(A * L, 2) - s(A * (A + n(4)), 3))});

    v.push_back({{0, 0, 2, 1},
                 (Z - n(1)) * (Z - n(1)) * (Z - A) * L2 +
                     (s(A * Z2, 4) - (A + n(3)) * (s(A, 3) - n(1)) * Z +
                      s(A * (s(A, 3) - n(1)), 2)) *
                         (Z - n(1)) * L -
                     s(A * Z3, 12) + s((A + n(1)) * (A + n(1)) * Z2, 9) - s(A * Z, 36) -
                     s(A * (s(A2, 3) - s(A, 6) - n(1)), 3),
                 (L - n(3)) * (L2 + s(A * L, 4) - s(A, 12)) *
                     (L2 + s((s(A, 3) - n(1)) * L, 2) + s(s(A2, 3) - s(A, 6) - n(1), 3))});

    v.push_back({{2, 1, 1, 0},
                 Z * (Z - n(1)) * L2 +
                     (s(Z3, 3) + (s(A, 3) - n(10)) * Z2 - (s(A, 3) - n(8)) * Z - A) * L +
                     s(Z4, 9) - s(Z3, 24) - s((s(A, 3) - n(8)) * Z2, 2) - A * (s(A, 3) - n(8)),
                 (L + s(A, 3) - n(8)) * (L + s(A, 3) + n(1)) *
                     (L3 + s((A - n(2)) * L2, 4) - s(A * L, 16) + s(A, 64))});

    v.push_back({{0, 1, 1, 2},
                 Z * (Z - n(1)) * (Z - A) * (Z - A) * L2 +
                     (s((s(A, 2) + n(3)) * Z3, 3) - (s(A2, 3) + s(A, 18) + n(8)) * Z2 +
                      A * (s(A, 3) + n(10)) * Z + A2) *
                         (Z - A) * L +
                     s(A * (A + n(3)) * Z4, 9) - s(A * (s(A, 3) + n(1)) * Z3, 24) +
                     s(A2 * (A + n(3)) * Z2, 18) - s(A3 * (A + n(3)), 3),
                 (L + s(A, 3)) * (L + s(A + n(3), 3)) *
                     (L3 + s((A + n(4)) * L2, 4) + s((s(A, 3) + n(4)) * L, 16) + s(A, 192))});

    v.push_back({{2, 1, 1, 1},
                 Z * (Z - n(1)) * (Z - A) * L3 +
                     (s(Z4, 3) - s((A + n(1)) * Z3, 4) + s((A + n(1)) * (A + n(1)) * Z2, 2) -
                      s(A * (A + n(1)) * Z, 2) + A2) *
                         L2 +
                     (s(Z5, 9) - s((A + n(1)) * Z4, 15) - s((A2 - s(A, 7) + n(1)) * Z3, 5) +
                      s((A - n(1)) * (A - n(1)) * (A + n(1)) * Z2, 15) -
                      s(A * (A - n(1)) * (A - n(1)) * Z, 15) - s(A2 * (A + n(1)), 2)) *
                         L -
                     s(A2 * (A - n(1)) * (A - n(1)), 15),
                 L * (L2 - s((A + n(1)) * L, 2) - s((A - n(1)) * (A - n(1)), 15)) *
                     (L2 - s((A - n(2)) * L, 2) - s(A2, 15)) *
                     (L2 + s((s(A, 2) - n(1)) * L, 2) - n(15))});

    v.push_back({{3, 0, 0, 0},
                 L3 + s((s(Z, 3) - s(A + n(1), 7)) * L2, 2) +
                     (s(Z2, 45) - s((A + n(1)) * Z, 78) + s(A2, 49) + s(A, 158) + n(49)) * L +
                     s(Z3, 225) - s((A + n(1)) * Z2, 405) +
                     s((s(A, 3) + n(8)) * (s(A, 8) + n(3)) * Z, 9) -
                     s((A + n(1)) * (s(A2, 3) + s(A, 26) + n(3)), 12),
                 (L - s(A + n(1), 4)) *
                     (L2 - s((A + n(1)) * L, 10) + s(s(A2, 3) + s(A, 26) + n(3), 3)) *
                     (L2 - s((s(A, 2) + n(5)) * L, 2) + s(s(A, 8) + n(3), 3)) *
                     (L2 - s((s(A, 5) + n(2)) * L, 2) + s(A * (s(A, 3) + n(8)), 3))});

    return v;
}

}  // namespace

const std::vector<FixtureCase>& fixture_corpus() {
    static const std::vector<FixtureCase> corpus = build_corpus();
    return corpus;
}

}  // namespace heunfg
