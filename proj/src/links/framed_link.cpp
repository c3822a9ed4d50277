#include "tqft/links/framed_link.hpp"

#include <algorithm>
#include <numeric>

#include "tqft/errors.hpp"
#include "tqft/scalars/linalg.hpp"

namespace tqft {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error("malformed-link", what); }

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

// Direction of travel, in page coordinates (x right, y up), of a strand that
// moves from the top-left to the bottom-right of a crossing (or the reverse).
std::pair<int, int> direction(bool from_left, bool up) {
    int dx = from_left ? 1 : -1;
    return up ? std::make_pair(-dx, 1) : std::make_pair(dx, -1);
}

}  // namespace

FramedLink make_link(SlicedDiagram d) {
    if (!d.top.empty()) malformed("a link diagram has no top boundary");
    DiagramPlan plan;
    try {
        plan = check_wellformed(d);
    } catch (const Error& e) {
        malformed(e.what());
    }
    if (!plan.bottom.empty()) malformed("a link diagram has no bottom boundary");
    // every cup starts a new arc; caps glue arcs together
    std::vector<int> parent, arc_slot;
    std::vector<int> arcs;  // arc id per strand in the current cross-section
    for (const auto& st : plan.steps) {
        const Generator& g = st.gen;
        int p = g.pos;
        switch (g.kind) {
            case GenKind::Cup: {
                if (!is_slot(g.label)) malformed("link strands carry components, not labels");
                int id = static_cast<int>(parent.size());
                parent.push_back(id);
                arc_slot.push_back(slot_index(g.label));
                arcs.insert(arcs.begin() + p, {id, id});
                break;
            }
            case GenKind::Cap: {
                int a = find_root(parent, arcs[p]), b = find_root(parent, arcs[p + 1]);
                parent[a] = b;
                arcs.erase(arcs.begin() + p, arcs.begin() + p + 2);
                break;
            }
            case GenKind::CrossOver:
            case GenKind::CrossUnder: std::swap(arcs[p], arcs[p + 1]); break;
            case GenKind::Fuse:
            case GenKind::Split: malformed("links have no trivalent vertices");
            default: break;
        }
    }
    std::vector<int> root_of_slot(d.slot_names.size(), -1);
    for (size_t a = 0; a < parent.size(); ++a) {
        int r = find_root(parent, static_cast<int>(a));
        int& slot_root = root_of_slot[arc_slot[a]];
        if (slot_root == -1)
            slot_root = r;
        else if (slot_root != r)
            malformed("component '" + d.slot_names[arc_slot[a]] + "' is not a single loop");
    }
    for (size_t k = 0; k < root_of_slot.size(); ++k)
        if (root_of_slot[k] == -1) malformed("component '" + d.slot_names[k] + "' has no strands");
    // distinct components must also be distinct loops
    for (size_t k = 0; k < root_of_slot.size(); ++k)
        for (size_t l = k + 1; l < root_of_slot.size(); ++l)
            if (root_of_slot[k] == root_of_slot[l]) malformed("two components share a loop");
    return FramedLink{std::move(d)};
}

FramedLink link_from_json(const json& j) { return make_link(diagram_from_json(j, nullptr)); }

IntMatrix linking_matrix(const FramedLink& L) {
    size_t n = L.size();
    IntMatrix twice(n, std::vector<long>(n, 0));
    DiagramPlan plan = check_wellformed(L.diagram);
    for (const auto& st : plan.steps) {
        const Generator& g = st.gen;
        int p = g.pos;
        if (g.kind == GenKind::Twist) {
            int k = slot_index(st.in[p].label);
            twice[k][k] += 2 * g.sign;
            continue;
        }
        if (g.kind != GenKind::CrossOver && g.kind != GenKind::CrossUnder) continue;
        const Strand& left = st.in[p];
        const Strand& right = st.in[p + 1];
        auto dl = direction(true, left.up), dr = direction(false, right.up);
        auto over = g.kind == GenKind::CrossOver ? dl : dr;
        auto under = g.kind == GenKind::CrossOver ? dr : dl;
        int sign = over.first * under.second - over.second * under.first > 0 ? 1 : -1;
        int a = slot_index(left.label), b = slot_index(right.label);
        if (a == b) {
            twice[a][a] += 2 * sign;
        } else {
            twice[a][b] += sign;
            twice[b][a] += sign;
        }
    }
    IntMatrix out(n, std::vector<long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (twice[i][j] % 2 != 0) malformed("odd crossing count between two components");
            out[i][j] = twice[i][j] / 2;
        }
    return out;
}

int link_signature(const FramedLink& L) {
    IntMatrix m = linking_matrix(L);
    RationalMatrix q(m.size(), std::vector<mpq_class>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) q[i][j] = m[i][j];
    return signature(q);
}

FramedLink disjoint_union(const FramedLink& a, const FramedLink& b) {
    SlicedDiagram d = a.diagram;
    std::vector<int> slot_map;
    for (const auto& nm : b.diagram.slot_names) {
        std::string name = nm;
        while (std::find(d.slot_names.begin(), d.slot_names.end(), name) != d.slot_names.end()) name += "'";
        slot_map.push_back(static_cast<int>(d.slot_names.size()));
        d.slot_names.push_back(name);
    }
    for (auto sl : b.diagram.slices) {
        for (auto& g : sl)
            if (g.label != kAnyLabel && is_slot(g.label)) g.label = slot_ref(slot_map[slot_index(g.label)]);
        d.slices.push_back(std::move(sl));
    }
    return make_link(std::move(d));
}

FramedLink permute_components(const FramedLink& L, const std::vector<int>& perm) {
    size_t n = L.size();
    if (perm.size() != n) throw Error("invalid-permutation", "permutation has the wrong length");
    std::vector<int> check(perm);
    std::sort(check.begin(), check.end());
    for (size_t i = 0; i < n; ++i)
        if (check[i] != static_cast<int>(i)) throw Error("invalid-permutation", "not a permutation");
    SlicedDiagram d = L.diagram;
    for (size_t k = 0; k < n; ++k) d.slot_names[perm[k]] = L.diagram.slot_names[k];
    for (auto& sl : d.slices)
        for (auto& g : sl)
            if (g.label != kAnyLabel && is_slot(g.label)) g.label = slot_ref(perm[slot_index(g.label)]);
    return make_link(std::move(d));
}

}  // namespace tqft
