#pragma once

#include <array>
#include <vector>

#include "tqft/diagram/evaluator.hpp"

namespace tqft {

// Labels seen by one pentachoron v0 < ... < v4. tri[a][b] (a < b) colors the
// triangle missing v_a and v_b; tet[j] colors the tetrahedron missing v_j.
struct PentachoronLabels {
    std::array<std::array<int, 5>, 5> tri{};
    std::array<int, 5> tet{};
};

// Discrete choices left open by the pictorial definition of the network.
// The defaults are the resolved convention; the rest of the family exists so
// the resolution can be replayed.
struct NetworkGauge {
    // Leg k of node j points out of the node when j + k + parity is even.
    int parity = 0;
    // Draw the planar map as its mirror image (left and right exchanged).
    bool reflect = false;
    // Sign of the one crossing between edges v0v1 and v3v4: +1 over, -1 under
    // for the strand coming from the left.
    int k5_cross = -1;
    // Sign of the half braiding inside nodes 2 and 4, nodes 1 and 3, node 0.
    int half_even = -1;
    int half_odd = 1;
    int half_first = -1;

    friend bool operator==(const NetworkGauge&, const NetworkGauge&) = default;
};

// All 64 gauges, lexicographic in the field order above with -1 < +1.
std::vector<NetworkGauge> all_network_gauges();

// Node j stands for the tetrahedron missing v_j. Its four legs are the
// triangles f_{j,k}; legs {0,2} and {1,3} are paired. The incoming pair fuses
// into the tetrahedron label, which then splits into the outgoing pair. Around
// the node the legs sit in the order (3, 0, 2, 1), reversed for odd j; where
// that order disagrees with the planar vertex, a half braiding is inserted.
// The nodes form a K5 drawn in the plane with one crossing. A negatively
// oriented pentachoron gets the mirror image with the node types exchanged.
// Throws Error("coloring-error") when a node is inadmissible.
SlicedDiagram fifteen_j_network(const PentachoronLabels& lab, int sign, const PremodularData& c,
                                const NetworkGauge& g = {});

// |lambda, xi|: the network evaluated with fuse/split vertices, which are
// dual bases under the trace pairing.
CycloScalar fifteen_j(const PentachoronLabels& lab, int sign, Evaluator& ev, const NetworkGauge& g = {});

}  // namespace tqft
