#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tqft/links/framed_link.hpp"

namespace tqft {

// Small hand-built framed links. Framings are blackboard framings realized
// with twist generators (or crossing kinks, where noted).
FramedLink empty_link();
FramedLink unknot(int framing, const std::string& name = "K");
FramedLink unknot_with_kinks(int framing, const std::string& name = "K");  // framing from crossing kinks
// Hopf link with clasp sign +1 (linking number +1) or -1.
FramedLink hopf(int f1, int f2, int clasp = 1);
// Closure of the 2-braid sigma^3 (negative crossings), plus `extra` twists.
FramedLink trefoil(int extra_twists = 0);

struct NamedLink {
    std::string name;
    FramedLink link;
};

// Links used for stabilization checks.
std::vector<NamedLink> stabilization_fixtures();
// Pairs (L, L') related by a single handle slide.
std::vector<std::pair<NamedLink, NamedLink>> handle_slide_pairs();

}  // namespace tqft
