#pragma once

#include "tqft/category/premodular.hpp"

namespace tqft {

// The mapping-class action on the torus state space k^{Irr}, basis indexed by
// the label j running through the solid torus.
struct TorusRep {
    ScalarMatrix S;
    ScalarMatrix T;
};

// S_ij = <Hopf link colored (i*, j)> / sqrtD, evaluated as a diagram;
// T = diag(theta_j). Throws Error("modularity-required").
TorusRep torus_rep(CategoryPtr c);

struct TorusCheck {
    bool s4_identity = false;
    bool st_cubed = false;  // (ST)^3 = kappa S^2
    bool passed() const { return s4_identity && st_cubed; }
};

TorusCheck check_torus_rep(const TorusRep& rep, const CycloScalar& kappa);
bool verify_torus_rep(CategoryPtr c);

}  // namespace tqft
