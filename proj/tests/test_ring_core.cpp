#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ringlab/parse.hpp"
#include "ringlab/ring.hpp"

using namespace ringlab;

namespace {

/// Ring axioms, exhaustive for size <= 64 and on 10000 seeded random triples
/// above that.
void check_ring_axioms(const RingPtr& rp) {
    const Ring& r = *rp;
    INFO("ring " << r.spec_string());
    auto check_triple = [&](int a, int b, int c) {
        REQUIRE(r.add(a, b) == r.add(b, a));
        REQUIRE(r.mul(a, b) == r.mul(b, a));
        REQUIRE(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
        REQUIRE(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
        REQUIRE(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
    };
    for (int a = 0; a < r.size(); ++a) {
        REQUIRE(r.add(a, r.zero()) == a);
        REQUIRE(r.mul(a, r.one()) == a);
        REQUIRE(r.add(a, r.neg(a)) == r.zero());
    }
    if (r.size() <= 64) {
        for (int a = 0; a < r.size(); ++a)
            for (int b = 0; b < r.size(); ++b)
                for (int c = 0; c < r.size(); ++c) check_triple(a, b, c);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> d(0, r.size() - 1);
        for (int k = 0; k < 10000; ++k) check_triple(d(rng), d(rng), d(rng));
    }
    if (r.size() > 1) REQUIRE(r.zero() != r.one());
}

}  // namespace

TEST_CASE("ring axioms hold across constructor kinds") {
    check_ring_axioms(build_zn(12));
    check_ring_axioms(build_zn(1));
    check_ring_axioms(build_zn(60));
    check_ring_axioms(build_product(build_zn(4), build_zn(9)));
    check_ring_axioms(build_product(build_zn(2), build_zn(2)));
    check_ring_axioms(build_poly_quotient(2, {1, 1, 1}));       // GF(4)
    check_ring_axioms(build_poly_quotient(12, {0, 0, 1}));      // Z12[x]/(x^2), size 144
    check_ring_axioms(build_poly_quotient(4, {0, 0, 0, 1}));    // Z4[x]/(x^3)
    check_ring_axioms(realize(parse_ring_spec("Z12/<4>")));
}

TEST_CASE("Z_n arithmetic") {
    auto z12 = build_zn(12);
    REQUIRE(z12->size() == 12);
    REQUIRE(z12->mul(4, 4) == 4);  // 16 mod 12
    auto z8 = build_zn(8);
    REQUIRE(z8->mul(z8->mul(2, 2), 2) == 0);

    auto z1 = build_zn(1);
    REQUIRE(z1->size() == 1);
    REQUIRE(z1->zero() == z1->one());

    REQUIRE_THROWS_AS(build_zn(100000), Error);
    try {
        build_zn(100000);
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::CapExceeded);
    }
}

TEST_CASE("products") {
    auto z4 = build_zn(4);
    auto z9 = build_zn(9);
    auto prod = build_product(z4, z9);
    REQUIRE(prod->size() == 36);
    // componentwise oracle: (2,3)*(2,3) = (0,0)
    int e23 = 2 * 9 + 3;
    REQUIRE(prod->mul(e23, e23) == 0);
    // oracle sweep: every pair multiplies componentwise
    for (int a = 0; a < 36; ++a)
        for (int b = 0; b < 36; ++b) {
            int expect = z4->mul(a / 9, b / 9) * 9 + z9->mul(a % 9, b % 9);
            REQUIRE(prod->mul(a, b) == expect);
        }

    // identity factor: Z1 x R has R's tables exactly
    auto r = build_zn(7);
    auto with_one = build_product(build_zn(1), r);
    REQUIRE(tables_equal(*with_one, *r));

    // orthogonal idempotents in Z2 x Z2
    auto z2z2 = build_product(build_zn(2), build_zn(2));
    REQUIRE(z2z2->mul(2, 1) == 0);  // (1,0)*(0,1) = (0,0)

    // coordinate projections recover the factor tables
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            int p = z2z2->mul(a, b);
            REQUIRE(p / 2 == build_zn(2)->mul(a / 2, b / 2));
            REQUIRE(p % 2 == build_zn(2)->mul(a % 2, b % 2));
        }
}

TEST_CASE("polynomial quotients") {
    // Z12[x]/(x^2): (4x)(4x) = 16x^2 = 0
    auto r = build_poly_quotient(12, {0, 0, 1});
    REQUIRE(r->size() == 144);
    int fourx = 4 * 12;
    REQUIRE(r->mul(fourx, fourx) == 0);
    REQUIRE(r->label(fourx) == "4x");

    // independent reduction oracle on sampled pairs: multiply coefficient
    // vectors, long-divide by x^2, compare
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(0, 143);
    for (int k = 0; k < 500; ++k) {
        int a = d(rng), b = d(rng);
        int a0 = a % 12, a1 = a / 12, b0 = b % 12, b1 = b / 12;
        int c0 = (a0 * b0) % 12;
        int c1 = (a0 * b1 + a1 * b0) % 12;  // x^2 term vanishes
        REQUIRE(r->mul(a, b) == c0 + 12 * c1);
    }

    // GF(4) = Z2[x]/(x^2+x+1): x(x+1) = x^2+x = 1
    auto gf4 = build_poly_quotient(2, {1, 1, 1});
    REQUIRE(gf4->size() == 4);
    int x = 2, xp1 = 3;
    REQUIRE(gf4->mul(x, xp1) == 1);
    REQUIRE(is_field(*gf4));

    // degree-1 quotient collapses to Z_n
    auto rx = build_poly_quotient(5, {0, 1});
    REQUIRE(tables_equal(*rx, *build_zn(5)));

    REQUIRE_THROWS_AS(build_poly_quotient(12, {0, 0, 2}), Error);  // non-monic
    REQUIRE_THROWS_AS(build_poly_quotient(12, {1}), Error);        // degree 0
    REQUIRE_THROWS_AS(build_poly_quotient(10, {0, 0, 0, 0, 1}), Error);  // 10^4 > cap
}

TEST_CASE("units and idempotents") {
    auto z12 = build_zn(12);
    REQUIRE(units(*z12).to_vector() == std::vector<int>{1, 5, 7, 11});
    REQUIRE(idempotents(*z12).to_vector() == std::vector<int>{0, 1, 4, 9});

    auto z8 = build_zn(8);
    REQUIRE(idempotents(*z8).to_vector() == std::vector<int>{0, 1});
    REQUIRE(is_indecomposable(*z8));
    REQUIRE_FALSE(is_indecomposable(*z12));

    REQUIRE(units(*build_zn(2)).to_vector() == std::vector<int>{1});
    REQUIRE(units(*build_zn(1)).to_vector() == std::vector<int>{0});

    auto z2z2 = build_product(build_zn(2), build_zn(2));
    REQUIRE(idempotents(*z2z2).count() == 4);
}

TEST_CASE("isomorphism search") {
    auto z4 = build_zn(4);
    auto gf4 = build_poly_quotient(2, {1, 1, 1});
    auto z2z2 = build_product(build_zn(2), build_zn(2));
    REQUIRE(is_isomorphic(*z4, *z4));
    REQUIRE_FALSE(is_isomorphic(*z4, *gf4));
    REQUIRE_FALSE(is_isomorphic(*z4, *z2z2));
    REQUIRE_FALSE(is_isomorphic(*gf4, *z2z2));
    // Z6 = Z2 x Z3 up to isomorphism
    REQUIRE(is_isomorphic(*build_zn(6), *build_product(build_zn(2), build_zn(3))));
}
