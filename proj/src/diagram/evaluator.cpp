#include "tqft/diagram/evaluator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tqft/errors.hpp"

namespace tqft {

const CycloScalar& MorphismMatrix::scalar() const {
    if (!is_scalar()) throw Error("not-closed", "diagram is not closed");
    return entries[0][0];
}

std::vector<Tree> enumerate_trees(const std::vector<int>& objects, const PremodularData& c) {
    std::vector<Tree> out;
    if (objects.empty()) {
        out.push_back({});
        return out;
    }
    Tree cur;
    std::function<void(size_t, int)> rec = [&](size_t i, int charge) {
        if (i == objects.size()) {
            out.push_back(cur);
            return;
        }
        for (int e : c.products(charge, objects[i])) {
            cur.push_back(e);
            rec(i + 1, e);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

namespace {

using State = std::unordered_map<std::vector<int>, CycloScalar, VecKeyHash>;

void add_to(State& s, std::vector<int>&& key, const CycloScalar& v) {
    if (v.is_zero()) return;
    auto it = s.find(key);
    if (it == s.end())
        s.emplace(std::move(key), v);
    else
        it->second += v;
}

struct PreparedStep {
    const Step* step;
    std::vector<int> open;   // Omega slots whose sum starts here
    std::vector<int> close;  // Omega slots whose sum ends here
};

std::set<int> slots_in(const std::vector<Strand>& ss) {
    std::set<int> out;
    for (const auto& s : ss)
        if (is_slot(s.label)) out.insert(slot_index(s.label));
    return out;
}

}  // namespace

const Evaluator::Coeffs& Evaluator::braid(int e_prev, int x, int y, int e_next, int e_mid, bool under) {
    std::vector<int> key{e_prev, x, y, e_next, e_mid, under ? 1 : 0};
    auto it = braid_cache_.find(key);
    if (it != braid_cache_.end()) return it->second;
    const PremodularData& c = *c_;
    Coeffs out;
    const FBlock* b1 = c.fblock(e_prev, x, y, e_next);
    const FBlock* b2 = c.fblock(e_prev, y, x, e_next);
    if (b1 && b2 && b1->row_of[e_mid] >= 0) {
        for (int g : b2->rows) {
            CycloScalar v(0);
            for (int f : b1->cols) {
                const CycloScalar& r = under ? c.r_inverse(y, x, f) : c.r_symbol(x, y, f);
                v += b1->F[b1->row_of[e_mid]][b1->col_of[f]] * r * b2->Finv[b2->col_of[f]][b2->row_of[g]];
            }
            if (!v.is_zero()) out.emplace_back(g, v);
        }
    }
    return braid_cache_.emplace(std::move(key), std::move(out)).first->second;
}

MorphismMatrix Evaluator::evaluate(const SlicedDiagram& d_in, const std::vector<int>& slot_colors) {
    const PremodularData& c = *c_;
    // substitute concrete slot colors; renumber the Omega slots densely
    SlicedDiagram d = d_in;
    std::vector<int> omega_index(d.slot_names.size(), -1);
    int m = 0;
    for (size_t k = 0; k < d.slot_names.size(); ++k) {
        int col = k < slot_colors.size() ? slot_colors[k] : kOmega;
        if (col != kOmega && (col < 0 || col >= c.size())) throw Error("coloring-error", "color of slot '" + d.slot_names[k] + "' is not a label");
        if (col == kOmega) omega_index[k] = m++;
    }
    auto subst = [&](int ref) {
        if (ref == kAnyLabel || !is_slot(ref)) return ref;
        size_t k = slot_index(ref);
        if (k >= d.slot_names.size()) throw Error("coloring-error", "strand refers to an undeclared slot");
        int col = k < slot_colors.size() ? slot_colors[k] : kOmega;
        return col == kOmega ? slot_ref(omega_index[k]) : col;
    };
    for (auto& s : d.top) s.label = subst(s.label);
    for (auto& sl : d.slices)
        for (auto& g : sl) g.label = subst(g.label);

    DiagramPlan plan = check_wellformed(d, &c);
    for (const auto* side : {&plan.top, &plan.bottom})
        for (const auto& s : *side)
            if (is_slot(s.label)) throw Error("coloring-error", "Omega-colored strands must not reach the boundary");

    std::vector<PreparedStep> prepared;
    for (const auto& st : plan.steps) {
        PreparedStep ps{&st, {}, {}};
        auto before = slots_in(st.in), after = slots_in(st.out);
        for (int k : after)
            if (!before.count(k)) ps.open.push_back(k);
        for (int k : before)
            if (!after.count(k)) ps.close.push_back(k);
        prepared.push_back(std::move(ps));
    }

    auto objects = [&](const std::vector<Strand>& ss) {
        std::vector<int> out;
        for (const auto& s : ss) out.push_back(s.up ? c.dual[s.label] : s.label);
        return out;
    };

    MorphismMatrix mm;
    mm.source = enumerate_trees(objects(plan.top), c);
    mm.target = enumerate_trees(objects(plan.bottom), c);
    mm.entries = zero_matrix(mm.target.size(), mm.source.size());
    std::map<Tree, size_t> target_index;
    for (size_t i = 0; i < mm.target.size(); ++i) target_index[mm.target[i]] = i;

    for (size_t si = 0; si < mm.source.size(); ++si) {
        State state;
        std::vector<int> key(m, -1);
        key.insert(key.end(), mm.source[si].begin(), mm.source[si].end());
        state.emplace(std::move(key), CycloScalar(1));

        for (const auto& ps : prepared) {
            for (int k : ps.open) {
                State next;
                for (auto& [key0, v] : state)
                    for (int i = 0; i < c.size(); ++i) {
                        std::vector<int> k2 = key0;
                        k2[k] = i;
                        add_to(next, std::move(k2), v * c.d(i));
                    }
                state.swap(next);
            }
            const Step& st = *ps.step;
            const Generator& g = st.gen;
            const int p = g.pos;
            State next;
            for (auto& [key0, v] : state) {
                auto obj = [&](int i) {
                    int l = st.in[i].label;
                    if (is_slot(l)) l = key0[slot_index(l)];
                    return st.in[i].up ? c.dual[l] : l;
                };
                auto lab = [&](int ref) { return is_slot(ref) ? key0[slot_index(ref)] : ref; };
                const int* e = key0.data() + m;
                int e_prev = p > 0 ? e[p - 1] : 0;
                switch (g.kind) {
                    case GenKind::Id: add_to(next, std::vector<int>(key0), v); break;
                    case GenKind::Twist: {
                        int x = obj(p);
                        add_to(next, std::vector<int>(key0), v * (g.sign > 0 ? c.theta_inv(x) : c.theta(x)));
                        break;
                    }
                    case GenKind::CrossOver:
                    case GenKind::CrossUnder: {
                        int x = obj(p), y = obj(p + 1);
                        for (const auto& [gg, coef] : braid(e_prev, x, y, e[p + 1], e[p], g.kind == GenKind::CrossUnder)) {
                            std::vector<int> k2 = key0;
                            k2[m + p] = gg;
                            add_to(next, std::move(k2), v * coef);
                        }
                        break;
                    }
                    case GenKind::Cup: {
                        int l = lab(g.label);
                        bool up = g.orient == 1;
                        int y = up ? c.dual[l] : l;
                        const FBlock* blk = c.fblock(e_prev, y, c.dual[y], e_prev);
                        CycloScalar factor = up ? c.epsilon(l).inverse() : CycloScalar(1);
                        for (int gg : blk->rows) {
                            const CycloScalar& fi = blk->Finv[blk->col_of[0]][blk->row_of[gg]];
                            if (fi.is_zero()) continue;
                            std::vector<int> k2(key0.begin(), key0.begin() + m + p);
                            k2.push_back(gg);
                            k2.push_back(e_prev);
                            k2.insert(k2.end(), key0.begin() + m + p, key0.end());
                            add_to(next, std::move(k2), v * factor * fi);
                        }
                        break;
                    }
                    case GenKind::Cap: {
                        if (e[p + 1] != e_prev) break;
                        int y = obj(p);
                        int l = lab(st.in[p].label);
                        CycloScalar f = c.f_symbol(e_prev, y, c.dual[y], e_prev, e[p], 0);
                        if (f.is_zero()) break;
                        CycloScalar factor = st.in[p].up ? c.lambda(l) : c.epsilon(l) * c.lambda(c.dual[l]);
                        std::vector<int> k2(key0.begin(), key0.begin() + m + p);
                        k2.insert(k2.end(), key0.begin() + m + p + 2, key0.end());
                        add_to(next, std::move(k2), v * f * factor);
                        break;
                    }
                    case GenKind::Fuse: {
                        CycloScalar f = c.f_symbol(e_prev, g.a, g.b, e[p + 1], e[p], g.c);
                        if (f.is_zero()) break;
                        std::vector<int> k2 = key0;
                        k2.erase(k2.begin() + m + p);
                        add_to(next, std::move(k2), v * f * c.d_inv(g.c));
                        break;
                    }
                    case GenKind::Split: {
                        const FBlock* blk = c.fblock(e_prev, g.a, g.b, e[p]);
                        if (!blk || blk->col_of[g.c] < 0) break;
                        for (int gg : blk->rows) {
                            const CycloScalar& fi = blk->Finv[blk->col_of[g.c]][blk->row_of[gg]];
                            if (fi.is_zero()) continue;
                            std::vector<int> k2 = key0;
                            k2.insert(k2.begin() + m + p, gg);
                            add_to(next, std::move(k2), v * fi);
                        }
                        break;
                    }
                }
            }
            state.swap(next);
            for (int k : ps.close) {
                State merged;
                for (auto& [key0, v] : state) {
                    std::vector<int> k2 = key0;
                    k2[k] = -1;
                    add_to(merged, std::move(k2), v);
                }
                state.swap(merged);
            }
        }
        for (auto& [key0, v] : state) {
            Tree t(key0.begin() + m, key0.end());
            auto it = target_index.find(t);
            if (it == target_index.end()) throw Error("internal", "evaluation left the admissible tree basis");
            mm.entries[it->second][si] += v;
        }
    }
    return mm;
}

CycloScalar Evaluator::evaluate_closed(const SlicedDiagram& d, const std::vector<int>& slot_colors) {
    return evaluate(d, slot_colors).scalar();
}

MorphismMatrix evaluate(const SlicedDiagram& d, CategoryPtr c, const std::vector<int>& slot_colors) {
    return Evaluator(std::move(c)).evaluate(d, slot_colors);
}

CycloScalar evaluate_closed(const SlicedDiagram& d, CategoryPtr c, const std::vector<int>& slot_colors) {
    return Evaluator(std::move(c)).evaluate_closed(d, slot_colors);
}

}  // namespace tqft
