#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ringlab/family.hpp"
#include "ringlab/parse.hpp"

using namespace ringlab;

TEST_CASE("atoms, products, quotients") {
    REQUIRE(parse_ring_spec("Z12") == RingSpec::zn(12));
    REQUIRE(parse_ring_spec("Z4xZ9") == RingSpec::product(RingSpec::zn(4), RingSpec::zn(9)));
    REQUIRE(parse_ring_spec("Z12[x]/(x^2)") == RingSpec::poly_quotient(12, {0, 0, 1}));
    REQUIRE(parse_ring_spec(" Z4 x Z9 ") == parse_ring_spec("Z4xZ9"));

    RingSpec q = parse_ring_spec("Z12/<4>");
    REQUIRE(q.kind == RingSpec::Kind::Quotient);
    REQUIRE(*q.base == RingSpec::zn(12));
    REQUIRE(q.modulus_ideal.size() == 1);
    REQUIRE(q.modulus_ideal[0] == ElemLit::integer(4));

    // left-associative product chain
    RingSpec chain = parse_ring_spec("Z2xZ3xZ5");
    REQUIRE(chain.kind == RingSpec::Kind::Product);
    REQUIRE(*chain.right == RingSpec::zn(5));
    REQUIRE(chain.left->kind == RingSpec::Kind::Product);
}

TEST_CASE("parse errors carry byte offsets") {
    auto offset_of = [](const std::string& text) {
        try {
            parse_ring_spec(text);
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::ParseError);
            return e.offset();
        }
        FAIL("expected a parse error for: " << text);
        return -1L;
    };
    REQUIRE(offset_of("Q12") == 0);
    REQUIRE(offset_of("Z") == 1);
    REQUIRE(offset_of("Z12xx") >= 3);
    REQUIRE(offset_of("Z12[x]/(2x^2)") >= 8);  // non-monic modulus
    REQUIRE(offset_of("Z12 trailing") >= 4);
}

TEST_CASE("printer round-trips through the parser") {
    // hand-picked shapes
    for (const char* text :
         {"Z12", "Z4xZ9", "Z12[x]/(x^2)", "Z2[x]/(x^2+x+1)", "Z12/<4>", "Z2xZ3xZ5",
          "Z12[x]/(x^2)/<4x>", "Z12/<4>xZ9", "Z4xZ9/<3>"}) {
        RingSpec s = parse_ring_spec(text);
        REQUIRE(parse_ring_spec(print_ring_spec(s)) == s);
    }

    // randomized left-associative specs
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> kind(0, 3), modn(1, 12), deg(1, 3);
    auto random_atom = [&]() -> RingSpec {
        int k = kind(rng);
        long n = modn(rng);
        if (k == 1) {
            std::vector<long> f(static_cast<size_t>(deg(rng)) + 1, 0);
            for (size_t i = 0; i + 1 < f.size(); ++i)
                f[i] = std::uniform_int_distribution<long>(0, n - 1)(rng);
            f.back() = 1;
            return RingSpec::poly_quotient(n, f);
        }
        if (k == 2) {
            IdealSpec gens;
            gens.push_back(ElemLit::integer(std::uniform_int_distribution<long>(0, n - 1)(rng)));
            return RingSpec::quotient(RingSpec::zn(n), gens);
        }
        return RingSpec::zn(n);
    };
    for (int t = 0; t < 200; ++t) {
        RingSpec s = random_atom();
        int factors = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int f = 0; f < factors; ++f) s = RingSpec::product(std::move(s), random_atom());
        REQUIRE(parse_ring_spec(print_ring_spec(s)) == s);
    }
}

TEST_CASE("realization matches structure") {
    REQUIRE(realize(parse_ring_spec("Z12"))->size() == 12);
    REQUIRE(realize(parse_ring_spec("Z4xZ9"))->size() == 36);
    REQUIRE(realize(parse_ring_spec("Z12[x]/(x^2)"))->size() == 144);
    // quotient realization: Z12/<4> is Z4 up to table equality after renaming
    auto q = realize(parse_ring_spec("Z12/<4>"));
    REQUIRE(q->size() == 4);
    REQUIRE(is_isomorphic(*q, *build_zn(4)));
    // cap errors happen at realization, not parse
    RingSpec big = parse_ring_spec("Z10[x]/(x^4)");
    REQUIRE_THROWS_AS(realize(big), Error);
}

TEST_CASE("ideal literals") {
    RingSpec spec = parse_ring_spec("Z12");
    auto ring = realize(spec);
    Ideal p = parse_ideal_literal("<4>", spec, ring);
    REQUIRE(p.member_list() == std::vector<int>{0, 4, 8});
    REQUIRE(parse_ideal_literal("<16>", spec, ring) == p);   // reduced mod 12
    REQUIRE(parse_ideal_literal("<-8>", spec, ring) == p);   // negatives allowed
    REQUIRE(parse_ideal_literal("<0>", spec, ring).is_zero());
    REQUIRE(parse_ideal_literal("<2,3>", spec, ring).count() == 12);

    RingSpec pq = parse_ring_spec("Z12[x]/(x^2)");
    auto pqr = realize(pq);
    Ideal px = parse_ideal_literal("<4x>", pq, pqr);
    REQUIRE(px.member_list() == std::vector<int>{0, 4 * 12, 8 * 12});
    // high-degree literals reduce through the modulus: x^3 = 0 here
    REQUIRE(parse_ideal_literal("<x^3>", pq, pqr).is_zero());

    RingSpec pr = parse_ring_spec("Z2xZ3");
    auto prr = realize(pr);
    Ideal pp = parse_ideal_literal("<(1,0)>", pr, prr);
    REQUIRE(pp.count() == 2);

    RingSpec qt = parse_ring_spec("Z12/<4>");
    auto qtr = realize(qt);
    Ideal qi = parse_ideal_literal("<2>", qt, qtr);
    REQUIRE(qi.count() == 2);
    REQUIRE(parse_ideal_literal("<[2]>", qt, qtr) == qi);

    // ideal literal printer re-parses to the same ideal
    for (const char* lit : {"<0>", "<4>", "<2,3>", "<6>"}) {
        Ideal v = parse_ideal_literal(lit, spec, ring);
        REQUIRE(parse_ideal_literal(ideal_literal(v), spec, ring) == v);
    }
}

TEST_CASE("multiplicative set literals") {
    RingSpec spec = parse_ring_spec("Z12");
    auto ring = realize(spec);
    auto s = parse_mult_set_literal("{1,3,9}", spec, ring);
    REQUIRE(s.member_list() == std::vector<int>{1, 3, 9});
    REQUIRE_THROWS_AS(parse_mult_set_literal("{1,2}", spec, ring), Error);  // 2*2=4 missing
    REQUIRE_THROWS_AS(parse_mult_set_literal("{3,9}", spec, ring), Error);  // missing 1
}

TEST_CASE("family expressions") {
    REQUIRE(parse_family("Zn:2..5").size() == 4);
    REQUIRE(parse_family("Z12").size() == 1);
    REQUIRE(parse_family("Z12,Z4xZ9").size() == 2);
    auto products = parse_family("ZmxZn:<=12");
    // ordered pairs with m,n >= 2, m*n <= 12: (2,2..6)=5, (3,2..4)=3, (4,2,3)=2, (5,2)=1, (6,2)=1
    REQUIRE(products.size() == 12);
    auto locals = parse_family("local:<=9");
    // Z2,Z4,Z8,Z3,Z9,Z5,Z7 and Z2[x]/(x^2),(x^3), Z3[x]/(x^2)
    REQUIRE(locals.size() == 10);
    auto f0 = family_f0();
    REQUIRE(f0.size() == 59 + 153 + 27);
    // commas inside literals do not split tokens
    REQUIRE(parse_family("Z12/<2,3>").size() == 1);
}
