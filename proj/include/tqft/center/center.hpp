#pragma once

#include <utility>
#include <vector>

#include "tqft/diagram/evaluator.hpp"

namespace tqft {

// Object of the Drinfeld center of a modular category in the A x A model:
// mult[i][j] is the multiplicity of X_i x X_j^*.
struct CenterObject {
    std::vector<std::vector<long>> mult;
    friend bool operator==(const CenterObject&, const CenterObject&) = default;
    bool is_zero() const;
};

CenterObject zero_object(int n);
CenterObject simple_object(int n, int i, int j);  // X_i x X_j^*

// Reduced tensor product: (X_i x X_j^*) (X_k x X_l^*) = delta_jk X_i x X_l^*,
// extended bilinearly. Requires a modular category.
CenterObject reduced_tensor(const CenterObject& a, const CenterObject& b, const PremodularData& c);
CenterObject reduced_unit(const PremodularData& c);

// Left and right dimensions of X_i x X_j^*: (d_j / d_i, d_i / d_j).
std::pair<CycloScalar, CycloScalar> center_dims(int i, int j, const PremodularData& c);

// D^-1 times an Omega circle around the middle pair of (i, j*, k, l*),
// as an endomorphism on the fusion-tree basis.
MorphismMatrix q_projector(int i, int j, int k, int l, CategoryPtr c);
MorphismMatrix q_projector(int i, int j, int k, int l, Evaluator& ev);
// rank of the image predicted by the fusion rule: delta_jk sum_m N_{i l*}^m
long expected_q_rank(int i, int j, int k, int l, const PremodularData& c);

}  // namespace tqft
