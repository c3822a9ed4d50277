#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tqft/category/premodular.hpp"
#include "tqft/diagram/sliced.hpp"
#include "tqft/fourmanifolds/wall.hpp"

namespace tqft::checks {

// Outcome of one group of checks; `detail` names the first failure.
struct Outcome {
    bool pass = true;
    std::string detail;
    int checked = 0;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::vector<std::string> modular_builtins();

// Single-entry corruptions of built-in F and R data, with a description.
struct Mutation {
    std::string what;
    PremodularData data;
};
std::vector<Mutation> coherence_mutations();

// Strands (all pointing down) with an Omega loop encircling positions
// [first, first + count). The loop is slot 0.
SlicedDiagram omega_meridian(const std::vector<int>& labels, int first, int count);
// Same, preceded by strand `mover` (at position first - 1) taking a full
// turn around the encircled group: the picture after sliding it over the loop.
SlicedDiagram omega_meridian_slid(const std::vector<int>& labels, int first, int count);

// Lagrangians of (Z^{2g}, standard omega) as images of span(e_1..e_g) under
// random products of symplectic transvections.
IntMatrix standard_omega(int g);
IntMatrix random_lagrangian(int g, std::mt19937& rng);

// The acceptance criteria, each self-contained.
Outcome category_coherence();
Outcome graphical_lemmas();
Outcome rt_values();
Outcome signature_formula();
Outcome statesum_oracle();
Outcome sl2z_relations();
Outcome wall_index_laws();
Outcome reduced_tensor_laws();
Outcome muger_centers();

}  // namespace tqft::checks
