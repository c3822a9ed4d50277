#include "checks.hpp"

#include <algorithm>

#include "tqft/category/invariants.hpp"
#include "tqft/category/torus.hpp"
#include "tqft/category/validate.hpp"
#include "tqft/center/center.hpp"
#include "tqft/diagram/evaluator.hpp"
#include "tqft/fourmanifolds/kirby.hpp"
#include "tqft/links/fixtures.hpp"
#include "tqft/links/rt.hpp"
#include "tqft/statesum/statesum.hpp"

namespace tqft::checks {

namespace {

std::string at(const std::string& cat, const std::string& what) { return cat + ": " + what; }

bool is_scalar_identity(const MorphismMatrix& m, const CycloScalar& s) {
    for (size_t r = 0; r < m.entries.size(); ++r)
        for (size_t q = 0; q < m.entries[r].size(); ++q)
            if (m.entries[r][q] != (m.target[r] == m.source[q] ? s : CycloScalar(0))) return false;
    return true;
}

SlicedDiagram straight(const std::vector<int>& labels) {
    SlicedDiagram d;
    for (int x : labels) d.top.push_back({x, false});
    return d;
}

// Matrix-unit image of a center object: mult itself, multiplied as matrices.
std::vector<std::vector<long>> matmul(const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b) {
    size_t n = a.size();
    std::vector<std::vector<long>> out(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

CenterObject random_object(int n, std::mt19937& rng) {
    std::uniform_int_distribution<long> m(0, 2);
    CenterObject o = zero_object(n);
    for (auto& row : o.mult)
        for (auto& x : row) x = m(rng);
    return o;
}

}  // namespace

std::vector<std::string> modular_builtins() {
    std::vector<std::string> out;
    for (const auto& n : builtin_names())
        if (is_modular(*builtin(n))) out.push_back(n);
    return out;
}

std::vector<Mutation> coherence_mutations() {
    std::vector<Mutation> out;
    for (const auto& n : builtin_names()) {
        const PremodularData& base = *builtin(n);
        int taken = 0;
        for (const auto& [key, val] : base.F) {
            if (taken++ == 4) break;
            Mutation m{n + " F" , base};
            for (int x : key) m.what += " " + base.labels[x];
            m.data.F[key] = val * CycloScalar(2);
            out.push_back(std::move(m));
        }
        taken = 0;
        for (const auto& [key, val] : base.R) {
            if (taken++ == 2) break;
            Mutation m{n + " R", base};
            for (int x : key) m.what += " " + base.labels[x];
            m.data.R[key] = -val;
            out.push_back(std::move(m));
        }
    }
    return out;
}

SlicedDiagram omega_meridian(const std::vector<int>& labels, int first, int count) {
    SlicedDiagram d = straight(labels);
    d.slot_names = {"omega"};
    push_steps(d, {g_cup(first, slot_ref(0))});
    // the loop's right strand crosses over the group, then returns beneath it
    for (int k = 0; k < count; ++k) push_steps(d, {g_over(first + 1 + k)});
    for (int k = count - 1; k >= 0; --k) push_steps(d, {g_over(first + 1 + k)});
    push_steps(d, {g_cap(first)});
    return d;
}

SlicedDiagram omega_meridian_slid(const std::vector<int>& labels, int first, int count) {
    SlicedDiagram d = straight(labels);
    int m = first - 1;
    for (int k = 0; k < count; ++k) push_steps(d, {g_over(m + k)});
    for (int k = count - 1; k >= 0; --k) push_steps(d, {g_over(m + k)});
    SlicedDiagram loop = omega_meridian(labels, first, count);
    d.slot_names = loop.slot_names;
    d.slices.insert(d.slices.end(), loop.slices.begin(), loop.slices.end());
    return d;
}

IntMatrix standard_omega(int g) {
    IntMatrix w(2 * g, std::vector<long>(2 * g, 0));
    for (int i = 0; i < g; ++i) {
        w[i][g + i] = 1;
        w[g + i][i] = -1;
    }
    return w;
}

IntMatrix random_lagrangian(int g, std::mt19937& rng) {
    IntMatrix w = standard_omega(g);
    IntMatrix rows(g, std::vector<long>(2 * g, 0));
    for (int i = 0; i < g; ++i) rows[i][i] = 1;
    std::uniform_int_distribution<long> entry(-1, 1);
    std::uniform_int_distribution<int> steps(1, 5);
    for (int s = steps(rng); s > 0; --s) {
        std::vector<long> v(2 * g);
        for (auto& x : v) x = entry(rng);
        long k = entry(rng) >= 0 ? 1 : -1;
        // x -> x + k omega(v, x) v preserves omega
        for (auto& x : rows) {
            long wvx = 0;
            for (int a = 0; a < 2 * g; ++a)
                for (int b = 0; b < 2 * g; ++b) wvx += v[a] * w[a][b] * x[b];
            for (int a = 0; a < 2 * g; ++a) x[a] += k * wvx * v[a];
        }
    }
    return rows;
}

Outcome category_coherence() {
    Outcome o;
    for (const auto& n : builtin_names()) o.expect(validate(*builtin(n)).passed, at(n, "validation failed"));
    auto muts = coherence_mutations();
    o.expect(muts.size() >= 20, "fewer than 20 mutations");
    for (const auto& m : muts) o.expect(!validate(m.data, 1).passed, "mutation accepted: " + m.what);
    return o;
}

Outcome graphical_lemmas() {
    Outcome o;
    for (const auto& n : builtin_names()) {
        CategoryPtr c = builtin(n);
        Evaluator ev(c);
        const int k = c->size();
        ScalarMatrix s = s_matrix(*c);
        bool modular = is_modular(*c);
        SlicedDiagram circle;
        circle.slot_names = {"omega"};
        push_steps(circle, {g_cup(0, slot_ref(0)), g_cap(0)});
        o.expect(ev.evaluate_closed(circle) == c->global_dim(), at(n, "Omega circle is not D"));
        for (int i = 0; i < k; ++i) {
            SlicedDiagram u;
            push_steps(u, {g_cup(0, i), g_cap(0)});
            o.expect(ev.evaluate_closed(u) == c->d(i), at(n, "unknot " + c->labels[i]));
            if (modular) {
                MorphismMatrix m = ev.evaluate(omega_meridian({i}, 0, 1));
                o.expect(is_scalar_identity(m, i == 0 ? c->global_dim() : CycloScalar(0)),
                         at(n, "killing lemma at " + c->labels[i]));
            }
            for (int j = 0; j < k; ++j) {
                o.expect(colored_evaluate(hopf(0, 0), {i, j}, ev) == s[i][j],
                         at(n, "Hopf link " + c->labels[i] + "," + c->labels[j]));
                // sum_c d_c split_c fuse_c = id on X_i X_j
                MorphismMatrix id = ev.evaluate(straight({i, j}));
                ScalarMatrix sum = zero_matrix(id.entries.size(), id.entries[0].size());
                for (int x : c->products(i, j)) {
                    SlicedDiagram d = straight({i, j});
                    push_steps(d, {g_fuse(0, i, j, x), g_split(0, x, i, j)});
                    MorphismMatrix m = ev.evaluate(d);
                    for (size_t r = 0; r < sum.size(); ++r)
                        for (size_t q = 0; q < sum[r].size(); ++q) sum[r][q] += c->d(x) * m.entries[r][q];
                }
                o.expect(mat_equal(sum, id.entries), at(n, "partition of unity " + c->labels[i] + "," + c->labels[j]));
                // sliding a strand over the Omega loop around one or two strands
                o.expect(mat_equal(ev.evaluate(omega_meridian({i, j}, 1, 1)).entries,
                                   ev.evaluate(omega_meridian_slid({i, j}, 1, 1)).entries),
                         at(n, "sliding over a loop around " + c->labels[j]));
                if (k <= 3)
                    for (int l = 0; l < k; ++l)
                        o.expect(mat_equal(ev.evaluate(omega_meridian({i, j, l}, 1, 2)).entries,
                                           ev.evaluate(omega_meridian_slid({i, j, l}, 1, 2)).entries),
                                 at(n, "sliding over a loop around a pair"));
            }
        }
    }
    return o;
}

Outcome rt_values() {
    Outcome o;
    for (const auto& n : modular_builtins()) {
        CategoryPtr c = builtin(n);
        const CycloScalar& sqrtD = *c->sqrtD;
        o.expect(zrt3(empty_link(), c) == sqrtD.inverse(), at(n, "empty link is not D^-1/2"));
        o.expect(zrt3(unknot(0), c).is_one(), at(n, "0-framed unknot is not 1"));
        auto fx = stabilization_fixtures();
        for (const auto& L : fx) {
            CycloScalar z = zrt3(L.link, c);
            for (int s : {1, -1})
                o.expect(zrt3(disjoint_union(L.link, unknot(s, "stab")), c) == z,
                         at(n, "stabilization of " + L.name + " by " + std::to_string(s)));
        }
        for (size_t a = 0; a + 1 < fx.size(); ++a) {
            const auto& L1 = fx[a].link;
            const auto& L2 = fx[a + 1].link;
            o.expect(zrt3(disjoint_union(L1, L2), c) == sqrtD * zrt3(L1, c) * zrt3(L2, c),
                     at(n, "disjoint union " + fx[a].name + " + " + fx[a + 1].name));
        }
        for (const auto& [x, y] : handle_slide_pairs())
            o.expect(zrt3(x.link, c) == zrt3(y.link, c), at(n, "handle slide " + x.name + " ~ " + y.name));
    }
    return o;
}

Outcome signature_formula() {
    Outcome o;
    for (const auto& n : modular_builtins()) {
        CategoryPtr c = builtin(n);
        for (const auto& m : kirby_fixture_names()) {
            KirbyPresentation k = kirby_fixture(m);
            o.expect(zcy_closed(k, c) == zcy_formula(k, c), at(n, m));
        }
        KirbyPresentation a = kirby_fixture("CP2"), b = kirby_fixture("CP2bar");
        CycloScalar parts = c->global_dim().inverse() * zcy_closed(a, c) * zcy_closed(b, c);
        o.expect(zcy_closed(connected_sum(a, b), c) == parts, at(n, "connected sum law"));
        o.expect(zcy_closed(kirby_fixture("CP2#CP2bar"), c) == parts, at(n, "connected sum fixture"));
    }
    return o;
}

Outcome statesum_oracle() {
    Outcome o;
    const std::vector<std::vector<int>> perms = {
        {1, 0, 2, 3, 4, 5}, {5, 4, 3, 2, 1, 0}, {2, 0, 4, 1, 5, 3}, {0, 2, 1, 5, 3, 4}, {3, 5, 0, 4, 2, 1}};
    OrderedTriangulation t = boundary_of_5_simplex();
    for (const std::string n : {"trivial", "semion", "su2_1"}) {
        CategoryPtr c = builtin(n);
        CycloScalar oracle = zcy_formula(kirby_fixture("S4"), c);
        CycloScalar z = cy_statesum(t, c);
        o.expect(z == oracle, at(n, "state sum on S4 is " + z.to_string()));
        for (const auto& p : perms) o.expect(cy_statesum(relabel(t, p), c) == oracle, at(n, "relabeled state sum"));
    }
    return o;
}

Outcome sl2z_relations() {
    Outcome o;
    for (const auto& n : modular_builtins()) {
        CategoryPtr c = builtin(n);
        TorusCheck t = check_torus_rep(torus_rep(c), *c->kappa);
        o.expect(t.s4_identity, at(n, "S^4 != 1"));
        o.expect(t.st_cubed, at(n, "(ST)^3 != kappa S^2"));
    }
    return o;
}

Outcome wall_index_laws() {
    Outcome o;
    LagrangianTriple g1{{{0, 1}, {-1, 0}}, {{1, 1}}, {{0, 1}}, {{1, 0}}};
    o.expect(wall_index(g1) == -1, "genus-1 value is not -1");
    std::mt19937 rng(20261018);
    int quads = 0;
    for (int g : {1, 2}) {
        IntMatrix w = standard_omega(g);
        for (int trial = 0; trial < 8; ++trial, ++quads) {
            IntMatrix L[4];
            for (auto& x : L) x = random_lagrangian(g, rng);
            auto s = [&](int a, int b, int c) { return wall_index({w, L[a], L[b], L[c]}); };
            std::string tag = "genus " + std::to_string(g) + " trial " + std::to_string(trial);
            int base = s(0, 1, 2);
            o.expect(s(1, 0, 2) == -base && s(0, 2, 1) == -base && s(2, 1, 0) == -base, tag + ": antisymmetry");
            o.expect(s(1, 2, 0) == base, tag + ": cyclic symmetry");
            o.expect(s(0, 0, 1) == 0 && s(0, 1, 1) == 0 && s(1, 0, 1) == 0, tag + ": repeated Lagrangian");
            o.expect(s(0, 1, 2) + s(0, 2, 3) == s(0, 1, 3) + s(1, 2, 3), tag + ": cocycle");
        }
    }
    o.expect(quads >= 10, "fewer than 10 random quadruples");
    return o;
}

Outcome reduced_tensor_laws() {
    Outcome o;
    std::mt19937 rng(7);
    for (const auto& n : modular_builtins()) {
        CategoryPtr c = builtin(n);
        const int k = c->size();
        Evaluator ev(c);
        CenterObject unit = reduced_unit(*c);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                auto [dl, dr] = center_dims(i, j, *c);
                o.expect(dl == c->d(j) / c->d(i) && dr == c->d(i) / c->d(j) && (dl * dr).is_one(),
                         at(n, "center dimensions"));
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b) {
                        CenterObject p = reduced_tensor(simple_object(k, i, j), simple_object(k, a, b), *c);
                        o.expect(p == (j == a ? simple_object(k, i, b) : zero_object(k)), at(n, "delta rule"));
                        MorphismMatrix q = q_projector(i, j, a, b, ev);
                        o.expect(mat_equal(mat_mul(q.entries, q.entries), q.entries), at(n, "Q is not idempotent"));
                        o.expect(static_cast<long>(mat_rank(q.entries)) == expected_q_rank(i, j, a, b, *c),
                                 at(n, "rank of Q on " + c->labels[i] + "," + c->labels[j] + "," + c->labels[a] + "," +
                                           c->labels[b]));
                    }
            }
        for (int t = 0; t < 10; ++t) {
            CenterObject a = random_object(k, rng), b = random_object(k, rng);
            o.expect(reduced_tensor(unit, a, *c) == a && reduced_tensor(a, unit, *c) == a, at(n, "unit law"));
            o.expect(reduced_tensor(a, b, *c).mult == matmul(a.mult, b.mult), at(n, "matrix-unit isomorphism"));
        }
    }
    CategoryPtr fib = builtin("fibonacci");
    CenterObject tt = simple_object(2, 1, 1), t1 = simple_object(2, 1, 0);
    o.expect(!reduced_tensor(tt, t1, *fib).is_zero() && reduced_tensor(t1, tt, *fib).is_zero(),
             "fibonacci non-commutativity witness");
    return o;
}

Outcome muger_centers() {
    Outcome o;
    for (const auto& n : modular_builtins()) o.expect(muger_center(*builtin(n)) == std::vector<int>{0}, at(n, "Muger center"));
    o.expect(muger_center(*builtin("repZ2")) == std::vector<int>{0, 1}, "repZ2 Muger center");
    o.expect(!is_modular(*builtin("repZ2")), "repZ2 reported modular");
    return o;
}

}  // namespace tqft::checks
