#pragma once

#include <vector>

#include "tqft/diagram/evaluator.hpp"
#include "tqft/links/framed_link.hpp"

namespace tqft {

// Evaluates the link with component k colored coloring[k] (a label or
// kOmega). The link is reflected through the page first, so that a +1-framed
// Omega unknot gives p_+ while a bare positive twist in the diagram module
// gives theta^-1.
CycloScalar colored_evaluate(const FramedLink& L, const std::vector<int>& coloring, Evaluator& ev);
CycloScalar colored_evaluate(const FramedLink& L, const std::vector<int>& coloring, CategoryPtr c);

// <L> with every component colored Omega. The first component's label sum is
// split across `threads` workers; partials are added in label order, so the
// result does not depend on the thread count.
CycloScalar omega_evaluate(const FramedLink& L, CategoryPtr c, int threads = 1);

// kappa^{-sigma(L)} D^{(-|L|-1)/2} <L>_Omega. Needs a modular category with
// kappa and sqrtD.
CycloScalar zrt3(const FramedLink& L, CategoryPtr c, int threads = 1);

}  // namespace tqft
