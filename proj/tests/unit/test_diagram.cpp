#include "doctest.h"
#include "support/checks.hpp"
#include "tqft/category/invariants.hpp"
#include "tqft/diagram/evaluator.hpp"
#include "tqft/diagram/io.hpp"
#include "tqft/errors.hpp"

using namespace tqft;

namespace {

SlicedDiagram strands(const std::vector<Strand>& top) {
    SlicedDiagram d;
    d.top = top;
    return d;
}

bool same_map(Evaluator& ev, const SlicedDiagram& a, const SlicedDiagram& b) {
    MorphismMatrix x = ev.evaluate(a), y = ev.evaluate(b);
    return x.source == y.source && x.target == y.target && mat_equal(x.entries, y.entries);
}

}  // namespace

TEST_CASE("criterion-level lemma sweep") {
    checks::Outcome o = checks::graphical_lemmas();
    CHECK_MESSAGE(o.pass, o.detail);
}

TEST_CASE("Reidemeister II and III on every label pair") {
    for (const auto& n : builtin_names()) {
        CAPTURE(n);
        Evaluator ev(builtin(n));
        const int k = ev.category().size();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                for (bool up : {false, true}) {
                    SlicedDiagram id = strands({{i, false}, {j, up}});
                    SlicedDiagram r2 = id;
                    push_steps(r2, {g_over(0), g_under(0)});
                    CHECK(same_map(ev, id, r2));
                    if (k > 3) continue;
                    for (int l = 0; l < k; ++l) {
                        SlicedDiagram a = strands({{i, false}, {j, up}, {l, false}}), b = a;
                        push_steps(a, {g_over(0), g_over(1), g_over(0)});
                        push_steps(b, {g_over(1), g_over(0), g_over(1)});
                        CHECK(same_map(ev, a, b));
                    }
                }
    }
}

TEST_CASE("yanking: zigzags are identities") {
    for (const auto& n : builtin_names()) {
        CAPTURE(n);
        Evaluator ev(builtin(n));
        for (int i = 0; i < ev.category().size(); ++i)
            for (bool up : {false, true}) {
                SlicedDiagram id = strands({{i, up}});
                SlicedDiagram z = id;
                // cup on the right, then cap the original strand with the cup's left leg
                push_steps(z, {g_cup(1, i, !up), g_cap(0)});
                CHECK(same_map(ev, id, z));
                SlicedDiagram s = id;
                push_steps(s, {g_cup(0, i, up), g_cap(1)});
                CHECK(same_map(ev, id, s));
            }
    }
}

TEST_CASE("twist and its inverse cancel; closed twisted loop gives theta^-1 d") {
    for (const auto& n : builtin_names()) {
        Evaluator ev(builtin(n));
        const PremodularData& c = ev.category();
        for (int i = 0; i < c.size(); ++i) {
            SlicedDiagram t = strands({{i, false}});
            push_steps(t, {g_twist(0, 1), g_twist(0, -1)});
            CHECK(same_map(ev, strands({{i, false}}), t));
            SlicedDiagram loop;
            push_steps(loop, {g_cup(0, i), g_twist(0, 1), g_cap(0)});
            CHECK(ev.evaluate_closed(loop) == c.theta_inv(i) * c.d(i));
        }
    }
}

TEST_CASE("mirror image conjugates closed diagrams of unitary built-ins") {
    for (const char* n : {"semion", "fibonacci", "ising", "su2_2", "su2_3"}) {
        CAPTURE(n);
        CategoryPtr c = builtin(n);
        Evaluator ev(c);
        for (int i = 0; i < c->size(); ++i)
            for (int j = 0; j < c->size(); ++j) {
                SlicedDiagram d = checks::omega_meridian({i, j}, 1, 1);
                SlicedDiagram closed = close_trace(d);
                std::vector<int> col = {kOmega};
                CHECK(ev.evaluate_closed(mirror(closed), col) == ev.evaluate_closed(closed, col).conj());
            }
    }
}

TEST_CASE("trace closure and composition helpers") {
    CategoryPtr c = builtin("fibonacci");
    Evaluator ev(c);
    SlicedDiagram id = strands({{1, false}});
    CHECK(ev.evaluate_closed(close_trace(id)) == c->d(1));
    SlicedDiagram two = juxtapose(id, id);
    CHECK(ev.evaluate_closed(close_trace(two)) == c->d(1) * c->d(1));
    SlicedDiagram braid = strands({{1, false}, {1, false}});
    push_steps(braid, {g_over(0)});
    SlicedDiagram inv = strands({{1, false}, {1, false}});
    push_steps(inv, {g_under(0)});
    CHECK(same_map(ev, stack(braid, inv), two));
}

TEST_CASE("malformed diagrams are rejected with a location") {
    const PremodularData& c = *builtin("fibonacci");
    SlicedDiagram d = strands({{1, false}, {1, false}});
    push_steps(d, {g_cap(0)});
    CHECK_THROWS_WITH_AS(check_wellformed(d, &c), doctest::Contains("slice 0"), Error);
    SlicedDiagram f = strands({{0, false}, {0, false}});
    push_steps(f, {g_fuse(0, 0, 0, 1)});
    CHECK_THROWS_WITH_AS(check_wellformed(f, &c), doctest::Contains("fusion-error"), Error);
    SlicedDiagram oob = strands({{1, false}});
    push_steps(oob, {g_over(0)});
    CHECK_THROWS_AS(check_wellformed(oob, &c), Error);
}

TEST_CASE("diagram documents round trip") {
    CategoryPtr c = builtin("ising");
    SlicedDiagram d = checks::omega_meridian_slid({1, 1, 2}, 1, 2);
    json j = diagram_to_json(d, c.get());
    SlicedDiagram back = diagram_from_json(json::parse(j.dump()), c.get());
    Evaluator ev(c);
    CHECK(same_map(ev, d, back));
    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"top": 3})"), c.get()), ParseError);
}
