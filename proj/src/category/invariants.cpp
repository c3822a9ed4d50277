#include "tqft/category/invariants.hpp"

#include "tqft/errors.hpp"

namespace tqft {

DerivedConstants derived_constants(const PremodularData& c) {
    if (c.p_minus().is_zero()) throw Error("degenerate-category", "p_- vanishes");
    DerivedConstants out{c.global_dim(), c.p_plus(), c.p_minus()};
    out.gauss_product_is_D = c.p_plus() * c.p_minus() == c.global_dim();
    out.kappa_check = c.kappa && *c.kappa * *c.kappa * c.p_minus() == c.p_plus();
    return out;
}

ScalarMatrix s_matrix(const PremodularData& c) {
    int n = c.size();
    ScalarMatrix s = zero_matrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CycloScalar v(0);
            for (int k : c.products(i, j)) v += c.theta(k) * c.d(k);
            s[i][j] = v * c.theta_inv(i) * c.theta_inv(j);
        }
    return s;
}

bool is_modular(const PremodularData& c) { return !mat_det(s_matrix(c)).is_zero(); }

std::vector<int> muger_center(const PremodularData& c) {
    ScalarMatrix s = s_matrix(c);
    std::vector<int> out;
    for (int i = 0; i < c.size(); ++i) {
        bool transparent = true;
        for (int j = 0; j < c.size() && transparent; ++j) transparent = s[i][j] == c.d(i) * c.d(j);
        if (transparent) out.push_back(i);
    }
    return out;
}

const CycloScalar& require_kappa(const PremodularData& c) {
    if (!c.kappa) throw Error("missing-data", "category '" + c.name + "' has no kappa");
    return *c.kappa;
}

const CycloScalar& require_sqrtD(const PremodularData& c) {
    if (!c.sqrtD) throw Error("missing-data", "category '" + c.name + "' has no sqrtD");
    return *c.sqrtD;
}

void require_modular(const PremodularData& c) {
    if (!is_modular(c)) throw Error("modularity-required", "category '" + c.name + "' is not modular");
}

}  // namespace tqft
