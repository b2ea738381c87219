#pragma once

#include <vector>

#include "heunfg/characteristics.hpp"
#include "heunfg/multipoly.hpp"

namespace heunfg {

/// One reference case: characteristics with the expected generating
/// polynomial and curve, both with symbolic modulus.
struct FixtureCase {
    Characteristics m;
    MultiPoly psi;
    MultiPoly nu2;
};

/// The embedded reference corpus of simplest cases (15 tuples), expanded to
/// canonical form from their published factored expressions.
const std::vector<FixtureCase>& fixture_corpus();

}  // namespace heunfg
