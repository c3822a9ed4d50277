#include "tqft/diagram/sliced.hpp"

#include <algorithm>
#include <map>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

int in_width(GenKind k) {
    switch (k) {
        case GenKind::Cup: return 0;
        case GenKind::Id:
        case GenKind::Twist:
        case GenKind::Split: return 1;
        default: return 2;
    }
}

[[noreturn]] void comp_error(size_t t, int pos, const std::string& what) {
    throw Error("composition-error", "slice " + std::to_string(t) + ", position " + std::to_string(pos) + ": " + what);
}

std::string label_text(int ref, const PremodularData* c) {
    if (is_slot(ref)) return "slot " + std::to_string(slot_index(ref));
    if (c && ref < c->size()) return c->labels[ref];
    return std::to_string(ref);
}

// Object carried by a concrete strand.
int object_of(const Strand& s, const PremodularData& c) { return s.up ? c.dual[s.label] : s.label; }

void check_label(int ref, const PremodularData* c, size_t t, int pos) {
    if (ref == kAnyLabel) comp_error(t, pos, "generator needs a label");
    if (!is_slot(ref) && c && ref >= c->size()) comp_error(t, pos, "label " + std::to_string(ref) + " is not in the category");
}

void check_object(const Strand& s, int want, const PremodularData* c, size_t t, int pos) {
    if (is_slot(s.label)) comp_error(t, pos, "vertex strands need concrete labels");
    if (!c) return;
    if (object_of(s, *c) != want)
        comp_error(t, pos, "expected object " + label_text(want, c) + ", found " + label_text(object_of(s, *c), c));
}

}  // namespace

DiagramPlan check_wellformed(const SlicedDiagram& d, const PremodularData* c, size_t max_width) {
    DiagramPlan plan;
    plan.top = d.top;
    std::vector<Strand> cur = d.top;
    for (const auto& s : cur) check_label(s.label, c, 0, 0);
    for (size_t t = 0; t < d.slices.size(); ++t) {
        std::vector<Generator> gens = d.slices[t];
        std::stable_sort(gens.begin(), gens.end(), [](const Generator& x, const Generator& y) { return x.pos > y.pos; });
        int limit = static_cast<int>(cur.size()) + 1;
        for (const auto& g : gens) {
            int w = in_width(g.kind);
            if (g.pos < 0 || g.pos + w > static_cast<int>(cur.size())) comp_error(t, g.pos, "generator runs off the strands");
            if (g.pos + std::max(w, 1) > limit) comp_error(t, g.pos, "generators in one slice overlap");
            limit = g.pos;
        }
        for (const auto& g : gens) {
            Step st{t, g, cur, {}};
            int p = g.pos;
            switch (g.kind) {
                case GenKind::Id:
                    if (g.label != kAnyLabel && cur[p].label != g.label) comp_error(t, p, "id label mismatch");
                    if (g.orient >= 0 && cur[p].up != (g.orient == 1)) comp_error(t, p, "id orientation mismatch");
                    break;
                case GenKind::Cup: {
                    check_label(g.label, c, t, p);
                    bool up = g.orient == 1;
                    cur.insert(cur.begin() + p, {Strand{g.label, up}, Strand{g.label, !up}});
                    break;
                }
                case GenKind::Cap:
                    if (cur[p].label != cur[p + 1].label)
                        comp_error(t, p, "cap joins " + label_text(cur[p].label, c) + " with " + label_text(cur[p + 1].label, c));
                    if (cur[p].up == cur[p + 1].up) comp_error(t, p, "cap joins two strands of the same orientation");
                    if (g.label != kAnyLabel && g.label != cur[p].label) comp_error(t, p, "cap label mismatch");
                    if (g.orient >= 0 && cur[p].up != (g.orient == 1)) comp_error(t, p, "cap orientation mismatch");
                    cur.erase(cur.begin() + p, cur.begin() + p + 2);
                    break;
                case GenKind::CrossOver:
                case GenKind::CrossUnder: std::swap(cur[p], cur[p + 1]); break;
                case GenKind::Twist:
                    if (g.sign != 1 && g.sign != -1) comp_error(t, p, "twist sign must be +1 or -1");
                    break;
                case GenKind::Fuse:
                    check_object(cur[p], g.a, c, t, p);
                    check_object(cur[p + 1], g.b, c, t, p + 1);
                    if (c && (g.c < 0 || g.c >= c->size() || !c->N(g.a, g.b, g.c)))
                        throw Error("fusion-error", "slice " + std::to_string(t) + ": " + label_text(g.a, c) + " x " +
                                                        label_text(g.b, c) + " does not contain " + label_text(g.c, c));
                    cur.erase(cur.begin() + p + 1);
                    cur[p] = Strand{g.c, false};
                    break;
                case GenKind::Split:
                    check_object(cur[p], g.c, c, t, p);
                    if (c && (g.a < 0 || g.a >= c->size() || g.b < 0 || g.b >= c->size() || !c->N(g.a, g.b, g.c)))
                        throw Error("fusion-error", "slice " + std::to_string(t) + ": " + label_text(g.c, c) +
                                                        " does not split into " + label_text(g.a, c) + " x " + label_text(g.b, c));
                    cur[p] = Strand{g.a, false};
                    cur.insert(cur.begin() + p + 1, Strand{g.b, false});
                    break;
            }
            if (cur.size() > max_width) throw Error("width-exceeded", "cross-section wider than " + std::to_string(max_width));
            st.out = cur;
            plan.steps.push_back(std::move(st));
        }
    }
    plan.bottom = cur;
    return plan;
}

SlicedDiagram close_trace(const SlicedDiagram& d) {
    DiagramPlan plan = check_wellformed(d);
    if (!(plan.top == plan.bottom)) throw Error("trace-error", "top and bottom objects differ");
    SlicedDiagram out;
    out.slot_names = d.slot_names;
    int n = static_cast<int>(d.top.size());
    for (int i = 0; i < n; ++i) out.slices.push_back({g_cup(i, d.top[i].label, d.top[i].up)});
    for (const auto& s : d.slices) out.slices.push_back(s);
    for (int i = n - 1; i >= 0; --i) out.slices.push_back({g_cap(i)});
    return out;
}

SlicedDiagram mirror(const SlicedDiagram& d) {
    SlicedDiagram out = d;
    for (auto& s : out.slices)
        for (auto& g : s) {
            if (g.kind == GenKind::CrossOver)
                g.kind = GenKind::CrossUnder;
            else if (g.kind == GenKind::CrossUnder)
                g.kind = GenKind::CrossOver;
            else if (g.kind == GenKind::Twist)
                g.sign = -g.sign;
        }
    return out;
}

namespace {

int remap_ref(int ref, const std::vector<int>& slot_map) { return is_slot(ref) ? slot_ref(slot_map[slot_index(ref)]) : ref; }

void remap_slots(SlicedDiagram& d, const std::vector<int>& slot_map) {
    for (auto& s : d.top) s.label = remap_ref(s.label, slot_map);
    for (auto& sl : d.slices)
        for (auto& g : sl)
            if (g.label != kAnyLabel) g.label = remap_ref(g.label, slot_map);
}

}  // namespace

SlicedDiagram stack(const SlicedDiagram& upper, const SlicedDiagram& lower) {
    SlicedDiagram out = upper;
    SlicedDiagram low = lower;
    // slots with equal names are identified
    std::vector<int> slot_map;
    for (const auto& nm : lower.slot_names) {
        auto it = std::find(out.slot_names.begin(), out.slot_names.end(), nm);
        if (it == out.slot_names.end()) {
            out.slot_names.push_back(nm);
            slot_map.push_back(static_cast<int>(out.slot_names.size()) - 1);
        } else {
            slot_map.push_back(static_cast<int>(it - out.slot_names.begin()));
        }
    }
    remap_slots(low, slot_map);
    for (auto& s : low.slices) out.slices.push_back(std::move(s));
    return out;
}

SlicedDiagram juxtapose(const SlicedDiagram& left, const SlicedDiagram& right) {
    SlicedDiagram out = left;
    SlicedDiagram r = right;
    std::vector<int> slot_map;
    for (const auto& nm : right.slot_names) {
        slot_map.push_back(static_cast<int>(out.slot_names.size()));
        out.slot_names.push_back(nm);
    }
    remap_slots(r, slot_map);
    int offset = static_cast<int>(check_wellformed(left).bottom.size());
    out.top.insert(out.top.end(), r.top.begin(), r.top.end());
    for (auto& s : r.slices) {
        for (auto& g : s) g.pos += offset;
        out.slices.push_back(std::move(s));
    }
    return out;
}

Generator g_cup(int pos, int label, bool left_up) {
    Generator g;
    g.kind = GenKind::Cup;
    g.pos = pos;
    g.label = label;
    g.orient = left_up ? 1 : 0;
    return g;
}

Generator g_cap(int pos, int label) {
    Generator g;
    g.kind = GenKind::Cap;
    g.pos = pos;
    g.label = label;
    return g;
}

Generator g_over(int pos) {
    Generator g;
    g.kind = GenKind::CrossOver;
    g.pos = pos;
    return g;
}

Generator g_under(int pos) {
    Generator g;
    g.kind = GenKind::CrossUnder;
    g.pos = pos;
    return g;
}

Generator g_twist(int pos, int sign) {
    Generator g;
    g.kind = GenKind::Twist;
    g.pos = pos;
    g.sign = sign;
    return g;
}

Generator g_fuse(int pos, int a, int b, int c) {
    Generator g;
    g.kind = GenKind::Fuse;
    g.pos = pos;
    g.a = a;
    g.b = b;
    g.c = c;
    return g;
}

Generator g_split(int pos, int c, int a, int b) {
    Generator g;
    g.kind = GenKind::Split;
    g.pos = pos;
    g.a = a;
    g.b = b;
    g.c = c;
    return g;
}

void push_steps(SlicedDiagram& d, std::initializer_list<Generator> gens) {
    for (const auto& g : gens) d.slices.push_back({g});
}

}  // namespace tqft
