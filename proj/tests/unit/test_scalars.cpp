#include <random>

#include "doctest.h"
#include "tqft/category/io.hpp"
#include "tqft/errors.hpp"
#include "tqft/scalars/embed.hpp"
#include "tqft/scalars/linalg.hpp"

using namespace tqft;

namespace {

// Random element of Q(zeta_N) together with its value under zeta -> e^{2 pi i/N},
// computed independently with std::complex.
struct Sample {
    CycloScalar x;
    std::complex<double> z;
};

Sample random_sample(int N, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    std::uniform_int_distribution<int> terms(1, 4), power(0, 2 * N);
    Sample s{CycloScalar(0), 0};
    for (int t = terms(rng); t > 0; --t) {
        mpq_class q(num(rng), den(rng));
        q.canonicalize();
        int k = power(rng);
        s.x += CycloScalar::rational(q) * CycloScalar::zeta(N, k);
        s.z += q.get_d() * std::polar(1.0, 2 * M_PI * k / N);
    }
    return s;
}

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(b)); }

}  // namespace

TEST_CASE("cyclotomic relations hold in canonical form") {
    for (int N : {1, 2, 3, 4, 5, 8, 12, 20, 24}) {
        CycloScalar sum(0);
        for (int k = 0; k < N; ++k) sum += CycloScalar::zeta(N, k);
        CHECK((N == 1 ? sum.is_one() : sum.is_zero()));
        CHECK(CycloScalar::zeta(N, N).is_one());
        CHECK(CycloScalar::zeta(N, 1).pow(N).is_one());
    }
    CHECK(CycloScalar::zeta(4, 1) * CycloScalar::zeta(4, 1) == CycloScalar(-1));
    // golden ratio: phi^2 = phi + 1 with phi = 1 + zeta_5 + zeta_5^4
    CycloScalar phi = CycloScalar(1) + CycloScalar::zeta(5, 1) + CycloScalar::zeta(5, 4);
    CHECK(phi * phi == phi + CycloScalar(1));
    CHECK(near(phi.to_complex(), (1 + std::sqrt(5.0)) / 2));
}

TEST_CASE("field operations agree with complex arithmetic on random elements") {
    std::mt19937 rng(11);
    for (int N : {3, 5, 8, 16, 20, 24}) {
        for (int t = 0; t < 40; ++t) {
            Sample a = random_sample(N, rng), b = random_sample(N, rng), c = random_sample(N, rng);
            CHECK(near((a.x + b.x).to_complex(), a.z + b.z));
            CHECK(near((a.x * b.x).to_complex(), a.z * b.z));
            CHECK(near((a.x - b.x).to_complex(), a.z - b.z));
            CHECK((a.x * (b.x + c.x)) == (a.x * b.x + a.x * c.x));
            CHECK(((a.x * b.x) * c.x) == (a.x * (b.x * c.x)));
            CHECK(a.x + b.x == b.x + a.x);
            if (!a.x.is_zero()) {
                CHECK((a.x * a.x.inverse()).is_one());
                CHECK(near((b.x / a.x).to_complex(), b.z / a.z));
            }
            CHECK(near(a.x.conj().to_complex(), std::conj(a.z)));
            // Galois automorphisms are ring homomorphisms
            for (long k : {1L, -1L, 7L})
                if (gcd_long(k, N) == 1) CHECK((a.x * b.x).galois(k) == a.x.galois(k) * b.x.galois(k));
        }
    }
}

TEST_CASE("mixed root orders promote to a common field") {
    CycloScalar i = CycloScalar::zeta(4, 1), w = CycloScalar::zeta(3, 1);
    CycloScalar p = i * w;
    CHECK(p.root_order() == 12);
    CHECK(p == CycloScalar::zeta(12, 7));
    CHECK(i.promote(20) == CycloScalar::zeta(20, 5));
    CHECK(CycloScalar::zeta(8, 2) == i);
}

TEST_CASE("rational values and errors") {
    CycloScalar h = CycloScalar::rational(mpq_class(1, 2));
    CHECK(h.is_rational());
    CHECK(h.rational_value() == mpq_class(1, 2));
    CHECK_THROWS_AS(CycloScalar(0).inverse(), Error);
    CHECK((h.pow(-3)) == CycloScalar(8));
}

TEST_CASE("scalar JSON round trip and text forms") {
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        Sample a = random_sample(20, rng);
        CHECK(scalar_from_json(scalar_to_json(a.x)) == a.x);
        CHECK(scalar_from_json(json::parse(scalar_to_json(a.x).dump())) == a.x);
    }
    CHECK(scalar_from_json(json("3/4")) == CycloScalar::rational(mpq_class(3, 4)));
    CHECK(scalar_from_json(json(5)) == CycloScalar(5));
    CHECK_THROWS_AS(scalar_from_json(json("x")), ParseError);
    CHECK(format_complex(CycloScalar::zeta(4, 1), 3) == "0.000+1.000i");
    ComplexApprox e = embed_complex(CycloScalar(1) + CycloScalar::zeta(5, 1) + CycloScalar::zeta(5, 4), 30);
    CHECK(e.re.substr(0, 22) == "1.61803398874989484820");
}

TEST_CASE("exact linear algebra") {
    ScalarMatrix m = {{1, 2}, {3, 4}};
    CHECK(mat_det(m) == CycloScalar(-2));
    CHECK(mat_equal(mat_mul(m, mat_inverse(m)), identity_matrix(2)));
    CHECK(mat_rank({{1, 2}, {2, 4}}) == 1);
    CHECK_THROWS(mat_inverse({{1, 2}, {2, 4}}));
    CHECK(signature({{0, 1}, {1, 0}}) == 0);
    CHECK(signature({{2, 0, 0}, {0, 1, 0}, {0, 0, -3}}) == 1);
    CHECK(signature({{0, 0}, {0, 0}}) == 0);
    RationalMatrix a = {{1, 1, 0}, {0, 0, 1}};
    RationalMatrix ns = rational_nullspace(a);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == -ns[0][1]);
    CHECK(ns[0][2] == 0);
}
