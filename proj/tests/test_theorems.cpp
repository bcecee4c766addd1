#include <catch2/catch_amalgamated.hpp>

#include "ringlab/family.hpp"
#include "ringlab/parse.hpp"
#include "ringlab/search.hpp"
#include "ringlab/theorems.hpp"

using namespace ringlab;

namespace {
Ideal gen(const RingPtr& r, std::vector<int> g) { return Ideal::from_generators(r, std::move(g)); }
}

TEST_CASE("theorem id catalog") {
    REQUIRE(theorem_catalog().size() == 19);
    REQUIRE(theorem_from_name("T13") == TheoremId::T13);
    REQUIRE_FALSE(theorem_from_name("T99").has_value());
    for (const auto& [id, name] : theorem_catalog()) REQUIRE(theorem_from_name(name) == id);
}

TEST_CASE("verify counts the Z12 sweep domain as pinned") {
    TheoremReport rep = verify(TheoremId::T1_2, {RingSpec::zn(12)}, "Z12");
    REQUIRE(rep.passed);
    REQUIRE(rep.instances == 30);  // 5 proper ideals x 6 ideals
    REQUIRE(rep.counterexamples.empty());
}

TEST_CASE("verify over an empty family is a vacuous pass") {
    TheoremReport rep = verify(TheoremId::T13, {}, "empty");
    REQUIRE(rep.passed);
    REQUIRE(rep.vacuous);
    REQUIRE(rep.instances == 0);
}

TEST_CASE("verify reports budget errors as notes and keeps sweeping") {
    auto reports = run_sweeps({TheoremId::T1_2}, {RingSpec::zn(12), RingSpec::zn(600)}, "mixed");
    REQUIRE(reports.size() == 1);
    REQUIRE(reports[0].instances == 30);  // Z12 contributed, Z600 exceeded the budget
    REQUIRE(reports[0].notes.size() == 1);
    REQUIRE(reports[0].passed);
}

TEST_CASE("run_sweeps shares contexts across ids and stays deterministic") {
    auto family = parse_family("Zn:2..20,Z2xZ6");
    std::vector<TheoremId> ids = {TheoremId::T13, TheoremId::L2, TheoremId::T1_1};
    auto a = run_sweeps(ids, family, "f", {});
    SweepOptions seq;
    seq.jobs = 1;
    auto b = run_sweeps(ids, family, "f", seq);
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) {
        REQUIRE(a[k].passed);
        REQUIRE(a[k].instances == b[k].instances);
        REQUIRE(a[k].counterexamples.empty());
    }
}

TEST_CASE("decomposition golden: Z12 with P = I = <4>") {
    auto z12 = build_zn(12);
    Ideal p = gen(z12, {4});
    DecompositionWitness w = decompose(p, p);
    REQUIRE_FALSE(w.is_zero_prime);
    REQUIRE(w.ok);
    REQUIRE(w.idempotent == 4);
    REQUIRE(w.t->size() == 4);
    REQUIRE(w.s->size() == 3);
    REQUIRE(w.t_carrier == std::vector<int>{0, 3, 6, 9});
    REQUIRE(w.s_carrier == std::vector<int>{0, 4, 8});
    REQUIRE(w.iso_verified);
    REQUIRE(is_isomorphic(*w.t, *build_zn(4)));
    REQUIRE(is_isomorphic(*w.s, *build_zn(3)));
    REQUIRE(w.j->is_zero());
    REQUIRE(w.j_weakly_prime);
    REQUIRE(w.p_maps_to_j_cross_s);
}

TEST_CASE("decomposition verdict and precondition") {
    auto z8 = build_zn(8);
    // <2> in Z8 is weakly prime: first branch
    DecompositionWitness w = decompose(gen(z8, {2}), Ideal::zero_ideal(z8));
    REQUIRE(w.is_zero_prime);
    REQUIRE(w.ok);

    // Z12[x]/(x^2), P = <4x>, I = <4>: IP = P is not inside P^3 = 0
    RingSpec spec = parse_ring_spec("Z12[x]/(x^2)");
    auto r = realize(spec);
    Ideal p = parse_ideal_literal("<4x>", spec, r);
    Ideal i = parse_ideal_literal("<4>", spec, r);
    REQUIRE(ideal_product(i, p) == p);
    REQUIRE(ideal_power(p, 3).is_zero());
    REQUIRE_THROWS_AS(decompose(p, i), Error);

    // not I-prime at all is also rejected
    REQUIRE_THROWS_AS(decompose(p, Ideal::zero_ideal(r)), Error);
}

TEST_CASE("product ideal classification goldens") {
    auto z4 = build_zn(4);
    auto z9 = build_zn(9);
    // I = Z4 x <3>, Q = Z4 x <3>: type 3 and I-prime
    auto rows = classify_product_ideals(z4, z9, Ideal::unit_ideal(z4), gen(z9, {3}));
    bool found = false;
    for (const auto& row : rows) {
        REQUIRE(row.agree);
        REQUIRE((row.tag >= 0 && row.tag <= 3));
        if (row.q.count() == 12 && row.q.contains(3) && !row.q.contains(1)) {
            // Q = Z4 x <3>: 12 members, contains (0,3) = index 3, misses (0,1)
            REQUIRE(row.tag == 3);
            REQUIRE(row.i_prime);
            found = true;
        }
    }
    REQUIRE(found);

    // Z12 x Z12 with I = <4> x <4>, Q = <4> x <4>: type 1 (vacuous)
    auto z12 = build_zn(12);
    auto rows2 = classify_product_ideals(z12, z12, gen(z12, {4}), gen(z12, {4}));
    bool found2 = false;
    for (const auto& row : rows2) {
        REQUIRE(row.agree);
        if (row.q.count() == 9) {  // |<4> x <4>| = 3*3
            bool is_g44 = true;
            for (int x : row.q.member_list())
                if ((x / 12) % 4 != 0 || (x % 12) % 4 != 0) is_g44 = false;
            if (is_g44) {
                REQUIRE(row.tag == 1);
                REQUIRE(row.i_prime);
                found2 = true;
            }
        }
    }
    REQUIRE(found2);

    // prime Q = P1 x R2 stays I-prime for every I, including proper I2
    auto z2 = build_zn(2);
    auto rows3 = classify_product_ideals(z2, z2, Ideal::zero_ideal(z2), Ideal::zero_ideal(z2));
    for (const auto& row : rows3) {
        REQUIRE(row.agree);
        if (row.q.count() == 2 && row.q.is_proper()) {
            REQUIRE(row.i_prime);  // prime ideal of the product
            REQUIRE((row.tag == 2 || row.tag == 3));
        }
    }
}

TEST_CASE("counterexample search") {
    auto hits = search_counterexamples("i_prime & !weakly_prime", {RingSpec::zn(12)}, 100);
    bool found = false;
    for (const auto& h : hits)
        if (h.ring == "Z12" && h.p == "<4>" && h.i == "<4>") found = true;
    REQUIRE(found);

    REQUIRE(search_counterexamples("prime & !i_prime", parse_family("Zn:2..20"), 100).empty());

    // the weakly-not-prime square-zero remark, small scale
    REQUIRE(
        search_counterexamples("weakly_prime & !prime & !(P^2=0)", parse_family("Zn:2..30"), 10)
            .empty());

    // budget caps the hit list
    REQUIRE(search_counterexamples("proper", {RingSpec::zn(12)}, 7).size() == 7);

    REQUIRE_THROWS_AS(search_counterexamples("i_prime &", {RingSpec::zn(12)}, 10), Error);
    REQUIRE_THROWS_AS(search_counterexamples("nonsense_flag", {RingSpec::zn(12)}, 10), Error);
}

TEST_CASE("flag expression grammar") {
    REQUIRE(flag_from_name("i_prime") == Flag::IPrime);
    REQUIRE(flag_from_name("P^2=0") == Flag::PSquaredZero);
    REQUIRE(flag_from_name("P\xc2\xb2=0") == Flag::PSquaredZero);  // UTF-8 superscript
    REQUIRE(flag_from_name("routes_agree") == Flag::RoutesAgree);
    REQUIRE_FALSE(flag_from_name("bogus").has_value());

    // parentheses and precedence: ! binds tighter than &, & tighter than |
    auto family = parse_family("Z12");
    auto a = search_counterexamples("prime | weakly_prime & !proper", family, 100);
    auto b = search_counterexamples("prime | (weakly_prime & (!proper))", family, 100);
    REQUIRE(a.size() == b.size());
}

TEST_CASE("theorem sweep over a mixed small family") {
    auto family = parse_family("Zn:2..16,Z2xZ4,Z3xZ3,Z2[x]/(x^3),Z4[x]/(x^2)");
    std::vector<TheoremId> all;
    for (const auto& [id, name] : theorem_catalog()) all.push_back(id);
    auto reports = run_sweeps(all, family, "small");
    for (const auto& rep : reports) {
        INFO(theorem_name(rep.id));
        REQUIRE(rep.passed);
        REQUIRE(rep.notes.empty());
    }
}
