#include "tqft/category/torus.hpp"

#include "tqft/category/invariants.hpp"
#include "tqft/links/fixtures.hpp"
#include "tqft/links/rt.hpp"

namespace tqft {

TorusRep torus_rep(CategoryPtr c) {
    require_modular(*c);
    CycloScalar inv_sqrtD = require_sqrtD(*c).inverse();
    size_t n = c->size();
    TorusRep rep{zero_matrix(n, n), zero_matrix(n, n)};
    // the meridian disk of the glued solid torus meets the core colored i*
    FramedLink h = hopf(0, 0);
    Evaluator ev(c);
    for (size_t i = 0; i < n; ++i) {
        rep.T[i][i] = c->theta(static_cast<int>(i));
        for (size_t j = 0; j < n; ++j)
            rep.S[i][j] = colored_evaluate(h, {c->dual[i], static_cast<int>(j)}, ev) * inv_sqrtD;
    }
    return rep;
}

TorusCheck check_torus_rep(const TorusRep& rep, const CycloScalar& kappa) {
    TorusCheck out;
    ScalarMatrix s2 = mat_mul(rep.S, rep.S);
    out.s4_identity = mat_equal(mat_mul(s2, s2), identity_matrix(rep.S.size()));
    ScalarMatrix st = mat_mul(rep.S, rep.T);
    out.st_cubed = mat_equal(mat_mul(mat_mul(st, st), st), mat_scale(s2, kappa));
    return out;
}

bool verify_torus_rep(CategoryPtr c) {
    TorusRep rep = torus_rep(c);
    return check_torus_rep(rep, require_kappa(*c)).passed();
}

}  // namespace tqft
