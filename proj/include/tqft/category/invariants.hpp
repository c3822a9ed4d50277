#pragma once

#include <vector>

#include "tqft/category/premodular.hpp"

namespace tqft {

struct DerivedConstants {
    CycloScalar D;
    CycloScalar p_plus;
    CycloScalar p_minus;
    bool gauss_product_is_D = false;  // p_+ p_- = D, expected for modular input
    bool kappa_check = false;         // kappa^2 p_- = p_+ (false when kappa is absent)
};

DerivedConstants derived_constants(const PremodularData& c);  // throws degenerate-category if p_- = 0

// s_ij = sum_k N_ij^k theta_k / (theta_i theta_j) d_k
ScalarMatrix s_matrix(const PremodularData& c);
bool is_modular(const PremodularData& c);
// Labels i with s_ij = d_i d_j for every j.
std::vector<int> muger_center(const PremodularData& c);

// kappa and sqrtD as stored; throw Error("missing-data") when absent.
const CycloScalar& require_kappa(const PremodularData& c);
const CycloScalar& require_sqrtD(const PremodularData& c);
// Throws Error("modularity-required") unless det s != 0.
void require_modular(const PremodularData& c);

}  // namespace tqft
