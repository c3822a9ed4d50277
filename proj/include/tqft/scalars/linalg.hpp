#pragma once

#include <gmpxx.h>

#include <vector>

#include "tqft/scalars/cyclo.hpp"

namespace tqft {

using ScalarMatrix = std::vector<std::vector<CycloScalar>>;
using RationalMatrix = std::vector<std::vector<mpq_class>>;

ScalarMatrix identity_matrix(size_t n);
ScalarMatrix zero_matrix(size_t rows, size_t cols);
ScalarMatrix mat_mul(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix mat_scale(const ScalarMatrix& a, const CycloScalar& s);
bool mat_equal(const ScalarMatrix& a, const ScalarMatrix& b);

// Exact Gaussian elimination over the cyclotomic field.
size_t mat_rank(ScalarMatrix a);
CycloScalar mat_det(ScalarMatrix a);
ScalarMatrix mat_inverse(ScalarMatrix a);  // throws on singular input

// Signature (n+ - n-) of a symmetric rational matrix by congruence
// diagonalization. Pivot: first nonzero diagonal entry, else the first nonzero
// off-diagonal pair (i, j), which is folded into row/column i.
int signature(RationalMatrix a);

size_t rational_rank(RationalMatrix a);
// Rows form a basis of {x : a x = 0}.
RationalMatrix rational_nullspace(const RationalMatrix& a);

}  // namespace tqft
