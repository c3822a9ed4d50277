#include "tqft/center/center.hpp"

#include "tqft/category/invariants.hpp"
#include "tqft/errors.hpp"

namespace tqft {

bool CenterObject::is_zero() const {
    for (const auto& row : mult)
        for (long m : row)
            if (m != 0) return false;
    return true;
}

CenterObject zero_object(int n) { return {std::vector<std::vector<long>>(n, std::vector<long>(n, 0))}; }

CenterObject simple_object(int n, int i, int j) {
    if (i < 0 || i >= n || j < 0 || j >= n) throw Error("coloring-error", "label out of range");
    CenterObject o = zero_object(n);
    o.mult[i][j] = 1;
    return o;
}

CenterObject reduced_tensor(const CenterObject& a, const CenterObject& b, const PremodularData& c) {
    require_modular(c);
    int n = c.size();
    if (a.mult.size() != static_cast<size_t>(n) || b.mult.size() != static_cast<size_t>(n))
        throw Error("coloring-error", "center object has the wrong number of labels");
    CenterObject out = zero_object(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a.mult[i][j] == 0) continue;
            for (int l = 0; l < n; ++l) out.mult[i][l] += a.mult[i][j] * b.mult[j][l];
        }
    return out;
}

CenterObject reduced_unit(const PremodularData& c) {
    require_modular(c);
    CenterObject o = zero_object(c.size());
    for (int i = 0; i < c.size(); ++i) o.mult[i][i] = 1;
    return o;
}

std::pair<CycloScalar, CycloScalar> center_dims(int i, int j, const PremodularData& c) {
    require_modular(c);
    return {c.d(j) * c.d_inv(i), c.d(i) * c.d_inv(j)};
}

MorphismMatrix q_projector(int i, int j, int k, int l, Evaluator& ev) {
    const PremodularData& c = ev.category();
    require_modular(c);
    for (int x : {i, j, k, l})
        if (x < 0 || x >= c.size()) throw Error("coloring-error", "label out of range");
    SlicedDiagram d;
    d.top = {{i, false}, {j, true}, {k, false}, {l, true}};
    d.slot_names = {"omega"};
    // the loop's right strand passes over j* and k, then back under them
    push_steps(d, {g_cup(1, slot_ref(0)), g_over(2), g_over(3), g_over(3), g_over(2), g_cap(1)});
    MorphismMatrix m = ev.evaluate(d);
    m.entries = mat_scale(m.entries, c.global_dim().inverse());
    return m;
}

MorphismMatrix q_projector(int i, int j, int k, int l, CategoryPtr c) {
    Evaluator ev(std::move(c));
    return q_projector(i, j, k, l, ev);
}

long expected_q_rank(int i, int j, int k, int l, const PremodularData& c) {
    if (j != k) return 0;
    return static_cast<long>(c.products(i, c.dual[l]).size());
}

}  // namespace tqft
