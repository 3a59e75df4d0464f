// Seeded generators of random states for property checks and validation runs.

#pragma once

#include "dicke/qstate.hpp"

#include <random>

namespace dicke {

using Rng = std::mt19937_64;

/// Uniform-ish random density matrix with zero first row and column.
TwoQubitState random_class12(Rng& rng);

/// Random state with only rho_22, rho_33, rho_23 (|rho_23| <= sqrt(rho_22 rho_33)) and rho_44.
TwoQubitState random_class22(Rng& rng);

/// Random full-rank 4x4 density matrix (Ginibre ensemble).
TwoQubitState random_state(Rng& rng);

PureStateAngles random_angles(Rng& rng);

}  // namespace dicke
