#include "tqft/links/fixtures.hpp"

#include <cstdlib>

namespace tqft {

namespace {

void add_twists(SlicedDiagram& d, int pos, int count) {
    for (int i = 0; i < std::abs(count); ++i) push_steps(d, {g_twist(pos, count > 0 ? 1 : -1)});
}

}  // namespace

FramedLink empty_link() { return make_link(SlicedDiagram{}); }

FramedLink unknot(int framing, const std::string& name) {
    SlicedDiagram d;
    d.slot_names = {name};
    push_steps(d, {g_cup(0, slot_ref(0))});
    add_twists(d, 0, framing);
    push_steps(d, {g_cap(0)});
    return make_link(std::move(d));
}

FramedLink unknot_with_kinks(int framing, const std::string& name) {
    SlicedDiagram d;
    d.slot_names = {name};
    push_steps(d, {g_cup(0, slot_ref(0))});
    // a curl on a downward strand: the inverse braiding gives writhe +1
    for (int i = 0; i < std::abs(framing); ++i)
        push_steps(d, {g_cup(1, slot_ref(0)), framing > 0 ? g_under(0) : g_over(0), g_cap(1)});
    push_steps(d, {g_cap(0)});
    return make_link(std::move(d));
}

FramedLink hopf(int f1, int f2, int clasp) {
    SlicedDiagram d;
    d.slot_names = {"A", "B"};
    push_steps(d, {g_cup(0, slot_ref(0)), g_cup(2, slot_ref(1))});
    // [A down, A up, B down, B up]; a full twist of the middle pair links them
    for (int i = 0; i < 2; ++i) push_steps(d, {clasp > 0 ? g_over(1) : g_under(1)});
    add_twists(d, 0, f1);
    add_twists(d, 2, f2);
    push_steps(d, {g_cap(2), g_cap(0)});
    return make_link(std::move(d));
}

FramedLink trefoil(int extra_twists) {
    SlicedDiagram d;
    d.slot_names = {"K"};
    push_steps(d, {g_cup(0, slot_ref(0)), g_cup(1, slot_ref(0)), g_over(0), g_over(0), g_over(0)});
    add_twists(d, 0, extra_twists);
    push_steps(d, {g_cap(1), g_cap(0)});
    return make_link(std::move(d));
}

std::vector<NamedLink> stabilization_fixtures() {
    return {
        {"empty", empty_link()},
        {"unknot(0)", unknot(0)},
        {"unknot(-2)", unknot_with_kinks(-2)},
        {"hopf(0,1)", hopf(0, 1)},
        {"trefoil(-2)", trefoil(1)},
    };
}

// Sliding K1 over K2 replaces K1 by a band sum with a push-off of K2: the
// framing becomes f1 + f2 + 2 lk and the new linking number lk + f2.
std::vector<std::pair<NamedLink, NamedLink>> handle_slide_pairs() {
    return {
        {{"hopf(0,0)", hopf(0, 0)}, {"hopf(2,0)", hopf(2, 0)}},
        {{"unknot(0)+unknot(1)", disjoint_union(unknot(0, "A"), unknot(1, "B"))}, {"hopf(1,1)", hopf(1, 1, 1)}},
        {{"unknot(1)+unknot(-1)", disjoint_union(unknot(1, "A"), unknot(-1, "B"))}, {"hopf(0,-1) negative clasp", hopf(0, -1, -1)}},
    };
}

}  // namespace tqft
