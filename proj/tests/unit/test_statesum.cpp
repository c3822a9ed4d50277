#include <cstdlib>

#include "doctest.h"
#include "support/checks.hpp"
#include "tqft/errors.hpp"
#include "tqft/fourmanifolds/kirby.hpp"
#include "tqft/statesum/statesum.hpp"

using namespace tqft;

namespace {

// Exhaustive count: every triangle labeling, times the number of tetrahedron
// labels admissible on both channels. Faces are found by vertex containment,
// not through the triangulation's own face tables.
std::uint64_t brute_force_count(const OrderedTriangulation& t, const PremodularData& c) {
    const auto& tris = t.triangles();
    const auto& tets = t.tetrahedra();
    std::vector<std::array<int, 4>> faces;
    for (const auto& q : tets) {
        std::array<int, 4> f{};
        for (int k = 0; k < 4; ++k) {
            std::array<int, 3> s{};
            for (int i = 0, m = 0; i < 4; ++i)
                if (i != k) s[m++] = q[i];
            f[k] = static_cast<int>(std::find(tris.begin(), tris.end(), s) - tris.begin());
        }
        faces.push_back(f);
    }
    const int n = c.size();
    std::vector<int> lab(tris.size(), 0);
    std::uint64_t total = 0;
    while (true) {
        std::uint64_t prod = 1;
        for (const auto& f : faces) {
            std::uint64_t ok = 0;
            for (int x = 0; x < n; ++x)
                ok += c.N(lab[f[0]], lab[f[2]], x) && c.N(lab[f[1]], lab[f[3]], x);
            prod *= ok;
            if (!prod) break;
        }
        total += prod;
        size_t p = 0;
        while (p < lab.size() && ++lab[p] == n) lab[p++] = 0;
        if (p == lab.size()) break;
    }
    return total;
}

bool power_of_i(const CycloScalar& v) { return v.pow(4).is_one(); }

}  // namespace

TEST_CASE("criterion-level state-sum oracle") {
    checks::Outcome o = checks::statesum_oracle();
    CHECK_MESSAGE(o.pass, o.detail);
}

TEST_CASE("triangulation bookkeeping") {
    OrderedTriangulation t = boundary_of_5_simplex();
    CHECK(t.vertex_count() == 6);
    CHECK(t.edge_count() == 15);
    CHECK(t.triangles().size() == 20);
    CHECK(t.tetrahedra().size() == 15);
    OrderedTriangulation dp = double_pentachoron();
    CHECK(dp.edge_count() == 10);
    CHECK(dp.tetrahedra().size() == 5);
    OrderedTriangulation back = triangulation_from_json(json::parse(triangulation_to_json(t).dump()));
    CHECK(back.pentachora().size() == 6);
    // an odd relabeling flips every orientation sign
    OrderedTriangulation r = relabel(t, {1, 0, 2, 3, 4, 5});
    for (size_t p = 0; p < 6; ++p) CHECK(r.pentachora()[p].verts.size() == 5);
    int plus = 0;
    for (const auto& p : r.pentachora()) plus += p.sign > 0;
    CHECK(plus == 3);
}

TEST_CASE("invalid triangulations are rejected") {
    auto bad = [](int n, std::vector<Pentachoron> ps) { CHECK_THROWS_AS(OrderedTriangulation(n, std::move(ps)), Error); };
    bad(5, {Pentachoron{{0, 1, 2, 3, 4}, 1}});                                   // open boundary
    bad(5, {Pentachoron{{0, 1, 2, 3, 4}, 1}, Pentachoron{{0, 1, 2, 3, 4}, 1}});  // same orientation twice
    bad(5, {Pentachoron{{0, 2, 1, 3, 4}, 1}, Pentachoron{{0, 1, 2, 3, 4}, -1}}); // not increasing
    bad(4, {Pentachoron{{0, 1, 2, 3, 4}, 1}, Pentachoron{{0, 1, 2, 3, 4}, -1}}); // unknown vertex
    bad(5, {Pentachoron{{0, 1, 2, 3, 4}, 2}, Pentachoron{{0, 1, 2, 3, 4}, -1}}); // bad sign
    CHECK_THROWS_AS(triangulation_from_json(json::parse(R"({"vertices": 5})")), ParseError);
    CHECK_THROWS_AS(relabel(boundary_of_5_simplex(), {0, 0, 1, 2, 3, 4}), Error);
}

TEST_CASE("coloring counts match exhaustive enumeration") {
    CHECK(count_colorings(boundary_of_5_simplex(), *builtin("trivial")) == 1);
    for (const char* n : {"semion", "su2_1", "repZ2"}) {
        CAPTURE(n);
        CHECK(count_colorings(boundary_of_5_simplex(), *builtin(n)) == brute_force_count(boundary_of_5_simplex(), *builtin(n)));
    }
    for (const char* n : {"fibonacci", "ising", "su2_2"}) {
        CAPTURE(n);
        CHECK(count_colorings(double_pentachoron(), *builtin(n)) == brute_force_count(double_pentachoron(), *builtin(n)));
    }
    CHECK(count_colorings(boundary_of_5_simplex(), *builtin("semion")) == 1024);
    CHECK(count_colorings(boundary_of_5_simplex(), *builtin("fibonacci"), 2000) == 2001);
}

TEST_CASE("semion pentachoron values are fourth roots of unity") {
    CategoryPtr c = builtin("semion");
    Evaluator ev(c);
    OrderedTriangulation t = boundary_of_5_simplex();
    int seen = 0;
    enumerate_colorings(t, *c, [&](const CSBColoring& lam) {
        for (size_t p = 0; p < t.pentachora().size(); ++p) {
            CycloScalar v = fifteen_j(pentachoron_labels(t, static_cast<int>(p), lam), t.pentachora()[p].sign, ev);
            CHECK(power_of_i(v));
        }
        return ++seen < 200;
    });
}

TEST_CASE("all-unit coloring gives 1 and an inadmissible one throws") {
    CategoryPtr c = builtin("fibonacci");
    Evaluator ev(c);
    PentachoronLabels unit;
    CHECK(fifteen_j(unit, 1, ev).is_one());
    CHECK(fifteen_j(unit, -1, ev).is_one());
    PentachoronLabels bad;
    bad.tri[0][1] = bad.tri[1][0] = 1;
    CHECK_THROWS_WITH_AS(fifteen_j(bad, 1, ev), doctest::Contains("coloring-error"), Error);
}

// Mirroring conjugates a value only when the vertex basis is unitary, so the
// property is checked where every stored F block is unitary. The cyclotomic
// data for fibonacci and su2_3/4 lives in a non-unitary gauge; there the two
// orientations differ by vertex factors that cancel over closed manifolds.
bool unitary_gauge(const PremodularData& c) {
    const int k = c.size();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int x = 0; x < k; ++x)
                for (int d = 0; d < k; ++d) {
                    const FBlock* f = c.fblock(a, b, x, d);
                    if (!f) continue;
                    for (size_t i = 0; i < f->F.size(); ++i)
                        for (size_t j = 0; j < f->F.size(); ++j) {
                            CycloScalar s(0);
                            for (size_t l = 0; l < f->F.size(); ++l) s += f->F[i][l] * f->F[j][l].conj();
                            if (s != CycloScalar(i == j ? 1 : 0)) return false;
                        }
                }
    return true;
}

TEST_CASE("orientation reversal conjugates pentachoron values in a unitary gauge") {
    int tried = 0;
    for (const auto& n : builtin_names()) {
        CategoryPtr c = builtin(n);
        if (!unitary_gauge(*c)) continue;
        CAPTURE(n);
        ++tried;
        Evaluator ev(c);
        OrderedTriangulation t = double_pentachoron();
        enumerate_colorings(t, *c, [&](const CSBColoring& lam) {
            PentachoronLabels pl = pentachoron_labels(t, 0, lam);
            CHECK(fifteen_j(pl, -1, ev) == fifteen_j(pl, 1, ev).conj());
            return true;
        });
    }
    CHECK(tried >= 5);
    CHECK_FALSE(unitary_gauge(*builtin("fibonacci")));
}

TEST_CASE("accumulation is linear: chunked partial sums equal the total") {
    OrderedTriangulation t = boundary_of_5_simplex();
    for (const char* n : {"semion", "su2_1"}) {
        CategoryPtr c = builtin(n);
        Evaluator ev(c);
        std::vector<CycloScalar> chunks;
        CycloScalar chunk(0);
        int in_chunk = 0;
        enumerate_colorings(t, *c, [&](const CSBColoring& lam) {
            CycloScalar w(1);
            for (int x : lam.tri) w *= c->d(x);
            for (int x : lam.tet) w *= c->d(x);
            for (size_t p = 0; p < t.pentachora().size(); ++p)
                w *= fifteen_j(pentachoron_labels(t, static_cast<int>(p), lam), t.pentachora()[p].sign, ev);
            chunk += w;
            if (++in_chunk == 37) {
                chunks.push_back(chunk);
                chunk = CycloScalar(0);
                in_chunk = 0;
            }
            return true;
        });
        chunks.push_back(chunk);
        CycloScalar total(0);
        for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) total += *it;
        total *= c->global_dim().pow(t.vertex_count() - t.edge_count());
        CHECK(total == cy_statesum(t, c));
    }
}

TEST_CASE("dual and cky normalizations, thread counts") {
    OrderedTriangulation t = boundary_of_5_simplex();
    for (const char* n : {"semion", "repZ2", "su2_1"}) {
        CAPTURE(n);
        CategoryPtr c = builtin(n);
        StatesumOptions dual, cky, par;
        cky.normalization = Normalization::Cky;
        par.threads = 3;
        CycloScalar z = cy_statesum(t, c, dual);
        CHECK(z == c->global_dim());
        CHECK(cy_statesum(t, c, cky) == z);
        CHECK(cy_statesum(t, c, par) == z);
    }
    // su2_3 and su2_4 have tens of thousands of double-pentachoron colorings
    for (const auto& n : builtin_names()) {
        if (n == "su2_3" || n == "su2_4") continue;
        CAPTURE(n);
        CHECK(cy_statesum(double_pentachoron(), builtin(n)) == builtin(n)->global_dim());
    }
}

TEST_CASE("budget") {
    StatesumOptions o;
    o.budget = 1000;
    CHECK_THROWS_WITH_AS(cy_statesum(boundary_of_5_simplex(), builtin("fibonacci"), o),
                         doctest::Contains("1021480 colorings"), Error);
    setenv("TQFT_BUDGET", "12345", 1);
    CHECK(budget_from_env() == 12345);
    setenv("TQFT_BUDGET", "lots", 1);
    CHECK_THROWS_AS(budget_from_env(), ParseError);
    unsetenv("TQFT_BUDGET");
    CHECK(budget_from_env() == kDefaultBudget);
}

TEST_CASE("the default network gauge is the first one passing the oracles") {
    OrderedTriangulation s4 = boundary_of_5_simplex(), dp = double_pentachoron();
    std::vector<NetworkGauge> passing;
    for (const auto& g : all_network_gauges()) {
        StatesumOptions o;
        o.gauge = g;
        bool ok = cy_statesum(dp, builtin("semion"), o) == 2 &&
                  cy_statesum(dp, builtin("fibonacci"), o) == builtin("fibonacci")->global_dim();
        ok = ok && cy_statesum(s4, builtin("semion"), o) == 2 && cy_statesum(s4, builtin("su2_1"), o) == 2;
        if (ok) passing.push_back(g);
    }
    REQUIRE_FALSE(passing.empty());
    CHECK(passing.front() == NetworkGauge{});
    CHECK(passing.size() == 16);
    for (const auto& g : passing) CHECK((g.half_first == g.half_even && g.half_odd == -g.half_even));
}
