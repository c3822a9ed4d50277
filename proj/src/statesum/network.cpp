#include "tqft/statesum/network.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

constexpr int kX = 5;  // the dummy vertex at the crossing of v0v1 and v3v4

int other_node(int j, int k) { return k < j ? k : k + 1; }
int leg_towards(int j, int m) { return m < j ? m : m - 1; }

// Triangle edge of K5 carried by the planar-map edge {a, b}.
std::array<int, 2> k5_edge(int a, int b) {
    if (a > b) std::swap(a, b);
    if (b == kX) return a <= 1 ? std::array<int, 2>{0, 1} : std::array<int, 2>{3, 4};
    return {a, b};
}

using Rotation = std::array<std::vector<int>, 6>;

Rotation planar_rotation(bool reflect) {
    Rotation rot;
    for (int j = 0; j < 5; ++j) {
        for (int k : {3, 0, 2, 1}) rot[j].push_back(other_node(j, k));
        if (j % 2) std::reverse(rot[j].begin(), rot[j].end());
    }
    auto via_x = [&](int a, int b) { std::replace(rot[a].begin(), rot[a].end(), b, kX); };
    via_x(0, 1), via_x(1, 0), via_x(3, 4), via_x(4, 3);
    rot[kX] = {0, 4, 1, 3};
    if (reflect)
        for (auto& r : rot) std::reverse(r.begin(), r.end());
    return rot;
}

// Top-to-bottom order of the planar map's vertices, with each vertex's
// edges to earlier vertices (left to right) and to later ones.
struct SweepPlan {
    std::vector<int> order;
    std::array<std::vector<int>, 6> up, down;
};

int index_of(const std::vector<int>& v, int x) { return static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin()); }

std::vector<std::vector<std::array<int, 2>>> faces(const Rotation& rot) {
    std::vector<std::vector<std::array<int, 2>>> out;
    std::map<std::array<int, 2>, bool> seen;
    for (int u = 0; u < 6; ++u)
        for (int v : rot[u]) {
            if (seen[{u, v}]) continue;
            std::vector<std::array<int, 2>> f;
            std::array<int, 2> d{u, v};
            while (!seen[d]) {
                seen[d] = true;
                f.push_back(d);
                const auto& r = rot[d[1]];
                d = {d[1], r[(index_of(r, d[0]) + 1) % r.size()]};
            }
            out.push_back(f);
        }
    return out;
}

// Reads the rotation as clockwise. Returns false if the order and outer face
// do not give a crossing-free sweep.
bool try_plan(const Rotation& rot, const std::vector<int>& order, const std::vector<std::array<int, 2>>& outer, SweepPlan& plan) {
    std::array<int, 6> pos{};
    for (int i = 0; i < 6; ++i) pos[order[i]] = i;
    plan.order = order;
    // sector of the outer face at a vertex: entered from a, left towards b
    auto outer_start = [&](int v) {
        for (size_t i = 0; i < outer.size(); ++i)
            if (outer[i][1] == v) return outer[(i + 1) % outer.size()][1];
        return -1;
    };
    for (int v = 0; v < 6; ++v) {
        const auto& r = rot[v];
        int n = static_cast<int>(r.size());
        std::vector<int> seq;
        bool is_s = v == order.front(), is_t = v == order.back();
        if (is_s || is_t) {
            int w = outer_start(v);
            if (w < 0) return false;
            for (int i = 0; i < n; ++i) seq.push_back(r[(index_of(r, w) + i) % n]);
            if (is_s) {
                std::reverse(seq.begin(), seq.end());
                plan.down[v] = seq;
            } else {
                plan.up[v] = seq;
            }
            continue;
        }
        // rotate so the edges to earlier vertices come first
        int start = -1;
        for (int i = 0; i < n && start < 0; ++i)
            if (pos[r[i]] < pos[v] && pos[r[(i + n - 1) % n]] > pos[v]) start = i;
        if (start < 0) return false;
        for (int i = 0; i < n; ++i) seq.push_back(r[(start + i) % n]);
        auto split = std::find_if(seq.begin(), seq.end(), [&](int w) { return pos[w] > pos[v]; });
        if (std::any_of(split, seq.end(), [&](int w) { return pos[w] < pos[v]; })) return false;
        plan.up[v].assign(seq.begin(), split);
        plan.down[v].assign(split, seq.end());
        std::reverse(plan.down[v].begin(), plan.down[v].end());
    }
    // replay the sweep on edge names
    std::vector<std::array<int, 2>> active;
    for (int v : order) {
        std::vector<std::array<int, 2>> in;
        for (int w : plan.up[v]) in.push_back({w, v});
        auto it = std::search(active.begin(), active.end(), in.begin(), in.end());
        if (!in.empty() && it == active.end()) return false;
        if (in.empty()) {
            // a source sits in the face to the right of nothing: only the first vertex
            if (v != order.front()) return false;
            it = active.end();
        }
        size_t at = it - active.begin();
        active.erase(active.begin() + at, active.begin() + at + in.size());
        std::vector<std::array<int, 2>> out;
        for (int w : plan.down[v]) out.push_back({v, w});
        active.insert(active.begin() + at, out.begin(), out.end());
    }
    return active.empty();
}

SweepPlan find_plan(bool reflect) {
    Rotation rot = planar_rotation(reflect);
    auto fs = faces(rot);
    std::vector<int> order(6);
    std::iota(order.begin(), order.end(), 0);
    do {
        std::array<int, 6> pos{};
        for (int i = 0; i < 6; ++i) pos[order[i]] = i;
        bool bipolar = true;
        for (int v = 0; v < 6 && bipolar; ++v) {
            int lo = 0, hi = 0;
            for (int w : rot[v]) (pos[w] < pos[v] ? lo : hi)++;
            if (v != order.front() && lo == 0) bipolar = false;
            if (v != order.back() && hi == 0) bipolar = false;
            if (v == kX && lo != 2) bipolar = false;
        }
        if (!bipolar) continue;
        for (const auto& f : fs) {
            bool has_s = false, has_t = false;
            for (const auto& d : f) {
                has_s |= d[1] == order.front();
                has_t |= d[1] == order.back();
            }
            SweepPlan plan;
            if (has_s && has_t && try_plan(rot, order, f, plan)) return plan;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    throw Error("internal", "no planar sweep for the pentachoron network");
}

const SweepPlan& plan_for(bool reflect) {
    static std::once_flag once;
    static SweepPlan plans[2];
    std::call_once(once, [] {
        plans[0] = find_plan(false);
        plans[1] = find_plan(true);
    });
    return plans[reflect ? 1 : 0];
}

struct Open {
    std::array<int, 2> piece;  // planar-map edge, earlier vertex first
    Strand strand;
};

class Builder {
public:
    Builder(const PentachoronLabels& lab, const PremodularData& c, const NetworkGauge& g, int parity)
        : lab_(lab), c_(c), g_(g), parity_(parity) {}

    SlicedDiagram run(const SweepPlan& plan) {
        for (int v : plan.order) {
            std::vector<std::array<int, 2>> in;
            for (int w : plan.up[v]) in.push_back({w, v});
            int at = static_cast<int>(act_.size());
            if (!in.empty()) {
                auto it = std::search(act_.begin(), act_.end(), in.begin(), in.end(),
                                      [](const Open& o, const std::array<int, 2>& p) { return o.piece == p; });
                at = static_cast<int>(it - act_.begin());
            }
            if (v == kX)
                crossing(at, plan.down[v]);
            else
                node(v, at, static_cast<int>(in.size()), plan.down[v]);
        }
        if (!act_.empty()) throw Error("internal", "network sweep left open strands");
        return d_;
    }

private:
    bool out_leg(int j, int k) const { return (j + k + parity_) % 2 == 0; }

    int label_of(const std::array<int, 2>& piece) const {
        auto e = k5_edge(piece[0], piece[1]);
        return lab_.tri[e[0]][e[1]];
    }

    // Does the triangle edge run from piece[0] towards piece[1]?
    bool flows(int a, int b) const {
        auto e = k5_edge(a, b);
        int o = out_leg(e[0], leg_towards(e[0], e[1])) ? e[0] : e[1];
        int i = o == e[0] ? e[1] : e[0];
        return a == o || b == i;
    }

    Open open(int v, int w) const { return {{v, w}, Strand{label_of({v, w}), !flows(v, w)}}; }

    void emit(const Generator& gen) { d_.slices.push_back({gen}); }

    void cross(int p, int sign) {
        emit(sign > 0 ? g_over(p) : g_under(p));
        std::swap(act_[p], act_[p + 1]);
    }

    void crossing(int at, const std::vector<int>& down) {
        Open a = act_[at], b = act_[at + 1];
        cross(at, g_.k5_cross);
        act_[at] = {{kX, down[0]}, b.strand};
        act_[at + 1] = {{kX, down[1]}, a.strand};
        if (k5_edge(kX, down[0]) != k5_edge(b.piece[0], b.piece[1]))
            throw Error("internal", "crossing does not continue its strands");
    }

    void node(int j, int at, int n_in, const std::vector<int>& down) {
        int tau = lab_.tet[j];
        // bend the outgoing pieces up to the right with nested cups, innermost
        // last, so they leave in plan order: legs at [at, at + 4)
        int p = at + n_in;
        for (auto w = down.rbegin(); w != down.rend(); ++w) {
            Open o = open(j, *w);
            emit(g_cup(p, o.strand.label, !o.strand.up));
            Open bent{o.piece, Strand{o.strand.label, !o.strand.up}};
            act_.insert(act_.begin() + p, {bent, o});
            ++p;
        }
        auto leg = [&](int i) {
            auto e = k5_edge(act_[at + i].piece[0], act_[at + i].piece[1]);
            return leg_towards(j, e[0] == j ? e[1] : e[0]);
        };
        // rotate until the incoming pair leads: the last leg is replaced by a
        // copy drawn from a cup on the left, closed off after the node
        std::vector<int> pending;
        for (int turns = 0; out_leg(j, leg(0)) || out_leg(j, leg(1)); ++turns) {
            if (turns == 4) throw Error("internal", "node legs are interleaved");
            Open last = act_[at + 3];
            Open mate{last.piece, Strand{last.strand.label, !last.strand.up}};
            emit(g_cup(at, last.strand.label, mate.strand.up));
            act_.insert(act_.begin() + at, {mate, last});
            pending.push_back(at++);
        }
        int half = j == 0 ? g_.half_first : j % 2 ? g_.half_odd : g_.half_even;
        int a = leg(0), b = leg(1), x = leg(2), y = leg(3);
        auto L = [&](int k) { return lab_.tri[std::min(j, other_node(j, k))][std::max(j, other_node(j, k))]; };
        int lo = std::min(a, b), hi = std::max(a, b);
        if (!c_.N(L(lo), L(hi), tau) || !c_.N(L(std::min(x, y)), L(std::max(x, y)), tau))
            throw Error("coloring-error", "tetrahedron " + std::to_string(j) + " of the pentachoron is not admissible");
        if (a > b) cross(at, half);
        emit(g_fuse(at, L(lo), L(hi), tau));
        emit(g_split(at, tau, L(std::min(x, y)), L(std::max(x, y))));
        // bent legs x, y must meet the split outputs nested: (lo, hi) against (y, x)
        if (x < y) {
            emit(half > 0 ? g_over(at) : g_under(at));
        }
        emit(g_cap(at + 1));
        emit(g_cap(at));
        act_.erase(act_.begin() + at, act_.begin() + at + 4);
        for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
            emit(g_cap(*it));
            act_.erase(act_.begin() + *it, act_.begin() + *it + 2);
        }
    }

    const PentachoronLabels& lab_;
    const PremodularData& c_;
    NetworkGauge g_;
    int parity_;
    SlicedDiagram d_;
    std::vector<Open> act_;
};

}  // namespace

std::vector<NetworkGauge> all_network_gauges() {
    std::vector<NetworkGauge> out;
    for (int parity : {0, 1})
        for (bool reflect : {false, true})
            for (int k5 : {-1, 1})
                for (int he : {-1, 1})
                    for (int ho : {-1, 1})
                        for (int hf : {-1, 1}) out.push_back({parity, reflect, k5, he, ho, hf});
    return out;
}

SlicedDiagram fifteen_j_network(const PentachoronLabels& lab, int sign, const PremodularData& c, const NetworkGauge& g) {
    if (sign > 0) return Builder(lab, c, g, g.parity).run(plan_for(g.reflect));
    return mirror(Builder(lab, c, g, 1 - g.parity).run(plan_for(g.reflect)));
}

CycloScalar fifteen_j(const PentachoronLabels& lab, int sign, Evaluator& ev, const NetworkGauge& g) {
    return ev.evaluate_closed(fifteen_j_network(lab, sign, ev.category(), g));
}

}  // namespace tqft
