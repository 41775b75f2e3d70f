#pragma once

#include <array>

#include "qact/basis.hpp"

namespace qact {

// Gamma matrices for metric diag(1,-1,-1,-1).
struct GammaSet {
    std::array<Mat, 4> g{Mat(4), Mat(4), Mat(4), Mat(4)};
};

// Dirac-basis construction: gamma^0 diagonal, spatial gammas from the
// standard 2x2 spin blocks with entries in {0, +-1, +-i}.
GammaSet build_dirac();

// True when {g_mu, g_nu} = 2 eta_munu I holds exactly for all pairs.
bool check_anticommutation(const GammaSet& gs);

// The 16 canonical products (identity, the four gammas, the six pair
// products, the four triple products, and the full product), vectorized and
// reduced; throws DegenerateGammaSet unless the rank is 16.
Basis clifford_basis(const GammaSet& gs);

}  // namespace qact
