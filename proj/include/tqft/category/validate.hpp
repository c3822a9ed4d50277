#pragma once

#include <string>
#include <vector>

#include "tqft/category/premodular.hpp"

namespace tqft {

struct AxiomFailure {
    std::string axiom;                 // e.g. "pentagon", "hexagon-1", "ribbon"
    std::vector<std::string> witness;  // label names (or a short note)
    CycloScalar lhs;
    CycloScalar rhs;
};

struct ValidationReport {
    bool passed = true;
    std::vector<AxiomFailure> failures;
};

// Exhaustive coherence check. Structural problems that stop finalize() are
// reported as a single "structure" failure instead of being thrown. At most
// max_failures entries are recorded.
ValidationReport validate(const PremodularData& c, size_t max_failures = 64);

}  // namespace tqft
