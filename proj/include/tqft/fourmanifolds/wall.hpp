#pragma once

#include "tqft/links/framed_link.hpp"

namespace tqft {

// Three Lagrangian subspaces of (Z^{2g}, omega), each given by g spanning rows.
struct LagrangianTriple {
    IntMatrix omega;
    IntMatrix L1, L2, L3;
};

LagrangianTriple lagrangian_triple_from_json(const json& j);  // {"omega": .., "L1": .., "L2": .., "L3": ..}

// Throws Error("invalid-lagrangian") if a subspace is not Lagrangian of rank g
// or omega is not skew-symmetric.
void check_lagrangian_triple(const LagrangianTriple& t);

// Signature of Psi(x1, x1') = omega(x1, x2') on L1 n (L2 + L3), where
// x1' + x2' + x3' = 0 with xi' in Li.
int wall_index(const LagrangianTriple& t);

}  // namespace tqft
