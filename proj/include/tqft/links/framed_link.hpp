#pragma once

#include <string>
#include <vector>

#include "tqft/diagram/io.hpp"
#include "tqft/diagram/sliced.hpp"

namespace tqft {

using IntMatrix = std::vector<std::vector<long>>;

// A closed sliced diagram in which every strand carries a component slot.
// Components are diagram.slot_names; framing is the blackboard framing
// (self-crossings plus twist generators).
struct FramedLink {
    SlicedDiagram diagram;
    size_t size() const { return diagram.slot_names.size(); }
};

// Throws Error("malformed-link") unless the diagram is closed, unlabelled
// (slots only), vertex-free, and each component is one closed loop.
FramedLink make_link(SlicedDiagram d);
FramedLink link_from_json(const json& j);

// Off-diagonal entries are half the signed crossings between two components
// (right-handed crossings count +1); diagonal entries are writhe plus twists.
IntMatrix linking_matrix(const FramedLink& L);
int link_signature(const FramedLink& L);

FramedLink disjoint_union(const FramedLink& a, const FramedLink& b);
// Renames components so that component k becomes perm[k].
FramedLink permute_components(const FramedLink& L, const std::vector<int>& perm);

}  // namespace tqft
