#pragma once

#include <string>
#include <vector>

#include "tqft/category/premodular.hpp"
#include "tqft/links/framed_link.hpp"

namespace tqft {

// Handle decomposition of a closed 4-manifold in dotted-circle notation.
// Dotted components are 1-handles; the remaining components are 2-handles.
struct KirbyPresentation {
    int n0 = 1;
    std::vector<int> dotted;  // component indices into link
    FramedLink link;
    int n3 = 0;
    int n4 = 1;
};

// {"n0": 1, "dotted": ["c1"], "link": <link JSON>, "n3": 0, "n4": 1}
KirbyPresentation kirby_from_json(const json& j);
json kirby_to_json(const KirbyPresentation& k);

// Dotted circles must be 0-framed and pairwise unlinked (unknottedness is
// the caller's responsibility). Throws Error("invalid-kirby").
void check_kirby(const KirbyPresentation& k);

int euler_char(const KirbyPresentation& k);
// Signature of the full linking matrix, dotted circles read as 0-framed.
int sigma4(const KirbyPresentation& k);

// D^{n4 - n3 - |dotted|} <L>_Omega, from the handle-by-handle rules.
CycloScalar zcy_closed(const KirbyPresentation& k, CategoryPtr c, int threads = 1);
// kappa^sigma sqrtD^chi
CycloScalar zcy_formula(const KirbyPresentation& k, CategoryPtr c);

// Disjoint union of diagrams with merged counts: the connected sum.
KirbyPresentation connected_sum(const KirbyPresentation& a, const KirbyPresentation& b);

// Named presentations: "S4", "CP2", "CP2bar", "S2xS2", "S1xS3", "CP2#CP2bar".
std::vector<std::string> kirby_fixture_names();
KirbyPresentation kirby_fixture(const std::string& name);

}  // namespace tqft
