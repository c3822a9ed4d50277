#include <cmath>

#include "doctest.h"
#include "support/checks.hpp"
#include "tqft/category/invariants.hpp"
#include "tqft/category/io.hpp"
#include "tqft/category/torus.hpp"
#include "tqft/category/validate.hpp"
#include "tqft/errors.hpp"

using namespace tqft;

TEST_CASE("every built-in passes the coherence check") {
    for (const auto& n : builtin_names()) {
        CAPTURE(n);
        ValidationReport r = validate(*builtin(n));
        CHECK(r.passed);
        CHECK(r.failures.empty());
    }
}

TEST_CASE("single-entry mutations of F and R are all rejected") {
    auto muts = checks::coherence_mutations();
    CHECK(muts.size() >= 20);
    for (const auto& m : muts) {
        CAPTURE(m.what);
        ValidationReport r = validate(m.data, 4);
        CHECK_FALSE(r.passed);
        REQUIRE_FALSE(r.failures.empty());
        CHECK_FALSE(r.failures[0].axiom.empty());
    }
}

TEST_CASE("structural breakage is reported, not thrown") {
    PremodularData c = *builtin("fibonacci");
    c.qdim.pop_back();
    ValidationReport r = validate(c);
    CHECK_FALSE(r.passed);
    CHECK(r.failures.at(0).axiom == "structure");
}

TEST_CASE("global dimensions match closed forms") {
    auto D = [](const char* n) { return builtin(n)->global_dim().to_complex().real(); };
    CHECK(D("trivial") == doctest::Approx(1));
    CHECK(D("semion") == doctest::Approx(2));
    CHECK(D("fibonacci") == doctest::Approx((5 + std::sqrt(5.0)) / 2));
    CHECK(D("ising") == doctest::Approx(4));
    for (int k = 1; k <= 4; ++k) {
        double s = std::sin(M_PI / (k + 2));
        CHECK(D(("su2_" + std::to_string(k)).c_str()) == doctest::Approx((k + 2) / (2 * s * s)));
    }
    for (const auto& n : builtin_names()) {
        const PremodularData& c = *builtin(n);
        CycloScalar sum(0);
        for (int i = 0; i < c.size(); ++i) sum += c.d(i) * c.d(i);
        CHECK(sum == c.global_dim());
    }
}

TEST_CASE("Verlinde formula recovers the fusion rules of modular built-ins") {
    for (const auto& n : checks::modular_builtins()) {
        CAPTURE(n);
        const PremodularData& c = *builtin(n);
        ScalarMatrix s = s_matrix(c);
        const int k = c.size();
        CycloScalar Dinv = c.global_dim().inverse();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                for (int l = 0; l < k; ++l) {
                    CycloScalar v(0);
                    for (int m = 0; m < k; ++m) v += s[i][m] * s[j][m] * s[c.dual[l]][m] / s[0][m];
                    CHECK(v * Dinv == CycloScalar(c.N(i, j, l) ? 1 : 0));
                }
    }
}

TEST_CASE("Gauss sums and kappa") {
    for (const auto& n : checks::modular_builtins()) {
        CAPTURE(n);
        const PremodularData& c = *builtin(n);
        DerivedConstants k = derived_constants(c);
        CHECK(k.gauss_product_is_D);
        CHECK(k.kappa_check);
        CHECK(*c.sqrtD * *c.sqrtD == c.global_dim());
        CHECK((k.p_plus * k.p_minus) == c.global_dim());
    }
    // semion: p_+ = 1 + i, kappa = zeta_8
    const PremodularData& s = *builtin("semion");
    CHECK(s.p_plus() == CycloScalar(1) + CycloScalar::zeta(4, 1));
    CHECK(*s.kappa == CycloScalar::zeta(8, 1));
}

TEST_CASE("twists of well-known anyons") {
    CHECK(builtin("semion")->theta(1) == CycloScalar::zeta(4, 1));
    CHECK(builtin("fibonacci")->theta(1) == CycloScalar::zeta(5, 2));
    const PremodularData& is = *builtin("ising");
    CHECK(is.theta(is.label_index("sigma")) == CycloScalar::zeta(16, 1));
    CHECK(is.theta(is.label_index("psi")) == CycloScalar(-1));
    CHECK(builtin("repZ2")->theta(1).is_one());
}

TEST_CASE("modularity and Muger centers") {
    for (const auto& n : builtin_names()) {
        CAPTURE(n);
        bool modular = is_modular(*builtin(n));
        CHECK(modular == (n != "repZ2"));
        auto mc = muger_center(*builtin(n));
        CHECK(mc == (modular ? std::vector<int>{0} : std::vector<int>{0, 1}));
    }
    CHECK_THROWS_AS(require_modular(*builtin("repZ2")), Error);
    CHECK_THROWS_AS(torus_rep(builtin("repZ2")), Error);
}

TEST_CASE("torus representation satisfies the SL(2,Z) relations") {
    for (const auto& n : checks::modular_builtins()) {
        CAPTURE(n);
        CHECK(verify_torus_rep(builtin(n)));
    }
    // a wrong kappa must be detected
    CategoryPtr f = builtin("fibonacci");
    CHECK_FALSE(check_torus_rep(torus_rep(f), f->kappa->conj()).st_cubed);
}

TEST_CASE("category documents round trip") {
    for (const auto& n : builtin_names()) {
        CAPTURE(n);
        const PremodularData& c = *builtin(n);
        PremodularData back = category_from_json(json::parse(category_to_json(c).dump()));
        back.finalize();
        CHECK(back.labels == c.labels);
        CHECK(back.F == c.F);
        CHECK(back.R == c.R);
        CHECK(validate(back).passed);
    }
}

TEST_CASE("category selectors") {
    CHECK(resolve_category("fibonacci")->name == "fibonacci");
    CHECK_THROWS_AS(resolve_category("no_such_category"), Error);
    CHECK_THROWS_AS(resolve_category("missing/file.json"), ParseError);
    CHECK_THROWS_AS(builtin("nope"), Error);
}
