#pragma once

#include <cstdint>
#include <functional>

#include "tqft/statesum/network.hpp"
#include "tqft/statesum/triangulation.hpp"

namespace tqft {

// Triangle and tetrahedron labels, indexed like OrderedTriangulation's lists.
// The vertex witnesses are implicit: every category here is multiplicity free.
struct CSBColoring {
    std::vector<int> tri;
    std::vector<int> tet;
};

// Calls f on every admissible coloring in a fixed order: triangles are
// assigned first (pruned whenever a tetrahedron's four faces are known), then
// tetrahedron labels from lambda(s0) x lambda(s2) meet lambda(s1) x lambda(s3).
// Returning false from f stops the enumeration.
void enumerate_colorings(const OrderedTriangulation& t, const PremodularData& c,
                         const std::function<bool(const CSBColoring&)>& f);
// Counts colorings, stopping once the count passes `limit`.
std::uint64_t count_colorings(const OrderedTriangulation& t, const PremodularData& c,
                              std::uint64_t limit = UINT64_MAX);

// Labels of pentachoron p under a coloring.
PentachoronLabels pentachoron_labels(const OrderedTriangulation& t, int p, const CSBColoring& lam);

enum class Normalization {
    Dual,  // prod_tau d_tau, |lambda, xi| with dual-basis vertices
    Cky,   // prod_tau d_tau^-1, ||lambda, xi|| = |lambda, xi| prod_{tau in xi} d_tau
};

constexpr std::uint64_t kDefaultBudget = 100000000;

struct StatesumOptions {
    Normalization normalization = Normalization::Dual;
    // Weighted operations: colorings times pentachora times rank^2.
    std::uint64_t budget = kDefaultBudget;
    int threads = 1;
    NetworkGauge gauge;
};

// Budget from TQFT_BUDGET when set, else the default.
std::uint64_t budget_from_env();

// D^{n0-n1} sum_lambda prod_sigma d prod_tau d^{+-1} prod_xi (15j).
// Throws Error("budget-error") with the projected cost when over budget.
CycloScalar cy_statesum(const OrderedTriangulation& t, CategoryPtr c, const StatesumOptions& opt = {});

}  // namespace tqft
