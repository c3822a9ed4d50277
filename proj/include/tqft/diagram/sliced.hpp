#pragma once

#include <climits>
#include <string>
#include <vector>

#include "tqft/category/premodular.hpp"

namespace tqft {

// A strand label is either a concrete label index (>= 0) or a slot (< 0).
// Slots stand for a component whose color is chosen at evaluation time.
inline int slot_ref(int k) { return -1 - k; }
inline bool is_slot(int ref) { return ref < 0; }
inline int slot_index(int ref) { return -1 - ref; }

// A strand pointing down carries its label; pointing up it carries the dual.
struct Strand {
    int label = 0;
    bool up = false;
    friend bool operator==(const Strand&, const Strand&) = default;
};

constexpr int kAnyLabel = INT_MIN;

enum class GenKind { Id, Cup, Cap, CrossOver, CrossUnder, Twist, Fuse, Split };

// One generator inside a slice. pos is measured on the slice's input.
//   cup(label, up): emits (label, label*) as strands [(label, up), (label, !up)]
//   cap(label, up): consumes such a pair
//   cross_over(pos): the braiding c of the two strands, top-left strand over
//   cross_under(pos): the inverse braiding, top-left strand under
//   twist(pos, sign): sign +1 multiplies by theta^-1 (a positive kink)
//   fuse(a, b -> c), split(c -> a, b): trivalent vertices, objects a, b, c
struct Generator {
    GenKind kind = GenKind::Id;
    int pos = 0;
    int label = kAnyLabel;   // id/cup/cap; kAnyLabel on cap/id accepts whatever is there
    int orient = -1;         // id/cup/cap: -1 unspecified, 0 down, 1 up (left strand)
    int sign = 1;            // twist
    int a = 0, b = 0, c = 0; // fuse/split
};

using Slice = std::vector<Generator>;

struct SlicedDiagram {
    std::vector<Strand> top;
    std::vector<Slice> slices;
    std::vector<std::string> slot_names;  // slot k is named slot_names[k]
};

// One generator applied to a known cross-section, in evaluation order.
struct Step {
    size_t slice = 0;  // index of the originating slice
    Generator gen;
    std::vector<Strand> in;
    std::vector<Strand> out;
};

struct DiagramPlan {
    std::vector<Step> steps;
    std::vector<Strand> top, bottom;
};

// Default bound on strands per cross-section; tree enumeration grows with it.
constexpr size_t kDefaultMaxWidth = 64;

// Throws Error("composition-error") naming slice/position, or
// Error("fusion-error") for an inadmissible vertex (needs the category for
// that check; pass nullptr to skip it).
DiagramPlan check_wellformed(const SlicedDiagram& d, const PremodularData* c = nullptr,
                             size_t max_width = kDefaultMaxWidth);

// Joins top to bottom around the right with nested cups and caps.
SlicedDiagram close_trace(const SlicedDiagram& d);  // throws trace-error

// Reflection through the page: swaps over/under crossings and twist signs.
SlicedDiagram mirror(const SlicedDiagram& d);

// Vertical composition: `lower` is attached below `upper`.
SlicedDiagram stack(const SlicedDiagram& upper, const SlicedDiagram& lower);
// Side by side; slots of `right` are renumbered after those of `left`.
SlicedDiagram juxtapose(const SlicedDiagram& left, const SlicedDiagram& right);

// Convenience builders.
Generator g_cup(int pos, int label, bool left_up = false);
Generator g_cap(int pos, int label = kAnyLabel);
Generator g_over(int pos);
Generator g_under(int pos);
Generator g_twist(int pos, int sign);
Generator g_fuse(int pos, int a, int b, int c);
Generator g_split(int pos, int c, int a, int b);

// Appends each generator as its own slice.
void push_steps(SlicedDiagram& d, std::initializer_list<Generator> gens);

}  // namespace tqft
