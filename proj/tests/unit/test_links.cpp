#include "doctest.h"
#include "support/checks.hpp"
#include "tqft/category/invariants.hpp"
#include "tqft/errors.hpp"
#include "tqft/links/fixtures.hpp"
#include "tqft/links/rt.hpp"

using namespace tqft;

TEST_CASE("criterion-level RT sweep") {
    checks::Outcome o = checks::rt_values();
    CHECK_MESSAGE(o.pass, o.detail);
}

TEST_CASE("linking matrices and signatures of fixtures") {
    CHECK(linking_matrix(hopf(0, 0)) == IntMatrix{{0, 1}, {1, 0}});
    CHECK(linking_matrix(hopf(2, -1, -1)) == IntMatrix{{2, -1}, {-1, -1}});
    CHECK(link_signature(hopf(0, 0)) == 0);
    CHECK(linking_matrix(unknot(3)) == IntMatrix{{3}});
    CHECK(linking_matrix(unknot_with_kinks(-2)) == IntMatrix{{-2}});
    CHECK(link_signature(unknot(-1)) == -1);
    CHECK(linking_matrix(trefoil()) == IntMatrix{{-3}});
    CHECK(linking_matrix(empty_link()).empty());
}

TEST_CASE("framing by kinks and by twists agree") {
    for (const auto& n : builtin_names()) {
        CategoryPtr c = builtin(n);
        Evaluator ev(c);
        for (int f : {-2, -1, 1, 2})
            for (int i = 0; i < c->size(); ++i)
                CHECK(colored_evaluate(unknot(f), {i}, ev) == colored_evaluate(unknot_with_kinks(f), {i}, ev));
    }
}

TEST_CASE("framed unknots give Gauss sums") {
    for (const auto& n : builtin_names()) {
        CAPTURE(n);
        CategoryPtr c = builtin(n);
        CHECK(colored_evaluate(unknot(1), {kOmega}, c) == c->p_plus());
        CHECK(colored_evaluate(unknot(-1), {kOmega}, c) == c->p_minus());
        CHECK(colored_evaluate(unknot(0), {kOmega}, c) == c->global_dim());
    }
}

TEST_CASE("component relabeling and thread count do not change values") {
    CategoryPtr c = builtin("su2_3");
    FramedLink L = disjoint_union(hopf(1, -2), trefoil(1));
    CycloScalar base = zrt3(L, c);
    CHECK(zrt3(permute_components(L, {2, 0, 1}), c) == base);
    CHECK(zrt3(permute_components(L, {1, 2, 0}), c) == base);
    for (int t : {2, 3, 5}) CHECK(omega_evaluate(L, c, t) == omega_evaluate(L, c, 1));
}

TEST_CASE("RT needs modular data") {
    CHECK_THROWS_AS(zrt3(unknot(0), builtin("repZ2")), Error);
    CHECK_THROWS_AS(colored_evaluate(hopf(0, 0), {0}, builtin("semion")), Error);
}
