#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "ringlab/ideal.hpp"
#include "ringlab/lattice.hpp"
#include "ringlab/parse.hpp"
#include "ringlab/quotient.hpp"

using namespace ringlab;

namespace {

Ideal gen(const RingPtr& r, std::vector<int> g) { return Ideal::from_generators(r, std::move(g)); }

/// Independent closure oracle: repeated full passes until nothing changes
/// (no worklist, different shape from the library's fixpoint).
std::set<int> naive_closure(const Ring& r, const std::vector<int>& gens) {
    std::set<int> s{r.zero()};
    for (int g : gens) s.insert(g);
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<int> next = s;
        for (int a : s) {
            for (int b : s) next.insert(r.add(a, b));
            for (int x = 0; x < r.size(); ++x) next.insert(r.mul(x, a));
        }
        if (next != s) {
            s = std::move(next);
            changed = true;
        }
    }
    return s;
}

int divisor_count(int n) {
    int c = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) ++c;
    return c;
}

}  // namespace

TEST_CASE("generation closure") {
    auto z12 = build_zn(12);
    REQUIRE(gen(z12, {4}).member_list() == std::vector<int>{0, 4, 8});
    REQUIRE(gen(z12, {}).member_list() == std::vector<int>{0});
    REQUIRE(gen(z12, {8}).member_list() == std::vector<int>{0, 4, 8});  // 8+8 = 4

    // closure oracle on random generator sets across rings
    std::mt19937 rng(2024);
    for (const auto& rp : {build_zn(24), build_product(build_zn(4), build_zn(6)),
                           build_poly_quotient(4, {0, 0, 1})}) {
        std::uniform_int_distribution<int> d(0, rp->size() - 1);
        for (int t = 0; t < 20; ++t) {
            std::vector<int> gens{d(rng), d(rng)};
            auto got = gen(rp, gens).member_list();
            auto want = naive_closure(*rp, gens);
            REQUIRE(std::set<int>(got.begin(), got.end()) == want);
        }
    }
}

TEST_CASE("ideal product, sum, intersection, power") {
    auto z12 = build_zn(12);
    Ideal i4 = gen(z12, {4}), i2 = gen(z12, {2}), i3 = gen(z12, {3}), i6 = gen(z12, {6});
    Ideal zero = Ideal::zero_ideal(z12), unit = Ideal::unit_ideal(z12);

    REQUIRE(ideal_product(i4, i4) == i4);  // <4><4> = <16> = <4>
    REQUIRE(ideal_product(i2, i3) == i6);
    REQUIRE(ideal_product(i3, zero) == zero);

    REQUIRE(ideal_sum(i2, i3) == unit);
    REQUIRE(ideal_intersect(i2, i3) == i6);
    REQUIRE(ideal_sum(i4, zero) == i4);
    REQUIRE(ideal_intersect(i4, unit) == i4);

    REQUIRE(ideal_power(i2, 2) == i4);
    REQUIRE(ideal_power(i6, 2) == zero);  // 36 = 0 mod 12
    REQUIRE(ideal_power(i2, 1) == i2);

    REQUIRE_THROWS_AS(ideal_product(i4, gen(build_zn(12), {4})), Error);  // distinct rings
}

TEST_CASE("stable power intersection") {
    auto z12 = build_zn(12);
    Ideal i2 = gen(z12, {2}), i4 = gen(z12, {4}), zero = Ideal::zero_ideal(z12);
    REQUIRE(stable_power_intersection(i2) == i4);
    REQUIRE(stable_power_intersection(i4) == i4);
    REQUIRE(stable_power_intersection(zero) == zero);

    // oracle: literal intersection of the first k powers once A^k = A^{k+1}
    for (const auto& rp : {build_zn(24), build_zn(36), build_poly_quotient(4, {0, 0, 1})}) {
        for (const auto& a : enumerate_ideals(rp)) {
            Ideal power = a;
            Ideal inter = a;
            int guard = 0;
            for (;;) {
                Ideal next = ideal_product(power, a);
                if (next == power) break;
                inter = ideal_intersect(inter, next);
                power = next;
                REQUIRE(++guard < 64);
            }
            REQUIRE(stable_power_intersection(a) == inter);
            REQUIRE(ideal_product(power, a) == power);  // stabilized
        }
    }
}

TEST_CASE("colon ideals") {
    auto z12 = build_zn(12);
    Ideal i4 = gen(z12, {4}), i6 = gen(z12, {6}), i2 = gen(z12, {2}), i3 = gen(z12, {3});
    REQUIRE(colon(i4, Element{z12, 2}) == i2);
    REQUIRE(colon(i6, Element{z12, 4}) == i3);
    REQUIRE(colon(i4, Element{z12, 1}) == i4);

    REQUIRE(colon_ideal(i4, i2) == i2);  // {r : 2r in <4>} = <2>
    REQUIRE(colon_ideal(i4, Ideal::unit_ideal(z12)) == i4);

    // exhaustive membership oracle
    for (int x = 0; x < 12; ++x) {
        auto got = colon(i4, Element{z12, x}).members();
        for (int r = 0; r < 12; ++r) REQUIRE(got.test(r) == i4.contains(z12->mul(r, x)));
    }
}

TEST_CASE("radical") {
    auto z12 = build_zn(12);
    REQUIRE(radical(gen(z12, {4})) == gen(z12, {2}));
    REQUIRE(radical(Ideal::zero_ideal(z12)) == gen(z12, {6}));  // nilpotents {0, 6}
    REQUIRE(radical(gen(z12, {2})) == gen(z12, {2}));           // primes are radical

    // naive oracle: try every exponent up to the ring size
    for (const auto& rp : {build_zn(36), build_poly_quotient(2, {0, 0, 0, 1})}) {
        for (const auto& p : enumerate_ideals(rp)) {
            Bitset want(rp->size());
            for (int x = 0; x < rp->size(); ++x) {
                int y = x;
                for (int k = 1; k <= rp->size(); ++k) {
                    if (p.contains(y)) {
                        want.set(x);
                        break;
                    }
                    y = rp->mul(y, x);
                }
            }
            REQUIRE(radical(p).members() == want);
        }
    }
}

TEST_CASE("ideal enumeration") {
    auto z12 = build_zn(12);
    auto ideals = enumerate_ideals(z12);
    REQUIRE(ideals.size() == 6);
    // deterministic order: membership bitsets ascending as binary numbers
    REQUIRE(ideals[0].member_list() == std::vector<int>{0});
    REQUIRE(ideals[1].member_list() == std::vector<int>{0, 6});
    REQUIRE(ideals[2].member_list() == std::vector<int>{0, 4, 8});
    REQUIRE(ideals[3].member_list() == std::vector<int>{0, 3, 6, 9});
    REQUIRE(ideals[4].member_list() == std::vector<int>{0, 2, 4, 6, 8, 10});
    REQUIRE(ideals[5].count() == 12);

    for (int n : {2, 3, 5, 13, 31}) REQUIRE(enumerate_ideals(build_zn(n)).size() == 2);
    REQUIRE(enumerate_ideals(build_product(build_zn(4), build_zn(9))).size() == 9);

    // divisor-count oracle
    for (int n = 2; n <= 40; ++n)
        REQUIRE(enumerate_ideals(build_zn(n)).size() ==
                static_cast<size_t>(divisor_count(n)));

    // every enumerated set is closed (validates the trusted constructor)
    for (const auto& p : enumerate_ideals(build_poly_quotient(4, {0, 0, 1})))
        REQUIRE_NOTHROW(Ideal::from_members_checked(p.ring(), p.members()));

    REQUIRE_THROWS_AS(enumerate_ideals(build_zn(600)), Error);  // budget
}

TEST_CASE("maximal ideals and quasi-local detection") {
    auto z12 = build_zn(12);
    auto ms = maximal_ideals(z12);
    REQUIRE(ms.size() == 2);
    REQUIRE(ms[0] == gen(z12, {3}));  // enumeration order puts <3> before <2>
    REQUIRE(ms[1] == gen(z12, {2}));
    REQUIRE_FALSE(is_quasi_local(z12).quasi_local);

    auto z8 = build_zn(8);
    auto ql = is_quasi_local(z8);
    REQUIRE(ql.quasi_local);
    REQUIRE(*ql.maximal == gen(z8, {2}));

    auto z7 = build_zn(7);
    auto qf = is_quasi_local(z7);
    REQUIRE(qf.quasi_local);
    REQUIRE(qf.maximal->is_zero());
}

TEST_CASE("quotient images") {
    auto z12 = build_zn(12);
    Ideal i4 = gen(z12, {4}), i2 = gen(z12, {2});
    Quotient q = build_quotient(z12, i4);
    REQUIRE(q.ring->size() == 4);

    // coset enumeration oracle: cosets of <4> in Z12 partition into 4 classes
    // keyed by residue mod 4; representative is the least member
    for (int x = 0; x < 12; ++x) REQUIRE(q.reps[static_cast<size_t>(q.projection[static_cast<size_t>(x)])] == x % 4);

    REQUIRE(image_in_quotient(i4, q).is_zero());
    Ideal img2 = image_in_quotient(i2, q);
    REQUIRE(img2.count() == 2);
    REQUIRE_THROWS_AS(image_in_quotient(gen(z12, {3}), q), Error);  // <4> not inside <3>

    // trivial quotient is the identity ring
    Quotient triv = build_quotient(z12, Ideal::zero_ideal(z12));
    REQUIRE(triv.ring->size() == 12);
    for (int x = 0; x < 12; ++x) REQUIRE(triv.projection[static_cast<size_t>(x)] == x);
    REQUIRE(tables_equal(*triv.ring, *z12));

    // quotient by the whole ring collapses everything
    REQUIRE(build_quotient(z12, Ideal::unit_ideal(z12)).ring->size() == 1);

    // I(P/J) = (IP + J)/J across valid triples in a couple of rings
    for (const auto& rp : {build_zn(24), build_product(build_zn(4), build_zn(3))}) {
        auto ideals = enumerate_ideals(rp);
        for (const auto& j : ideals) {
            Quotient qq = build_quotient(rp, j);
            for (const auto& p : ideals) {
                if (!j.is_subset_of(p)) continue;
                for (const auto& i : ideals) {
                    Ideal lhs = ideal_product(image_in_quotient(ideal_sum(i, j), qq),
                                              image_in_quotient(p, qq));
                    Ideal rhs = image_in_quotient(ideal_sum(ideal_product(i, p), j), qq);
                    REQUIRE(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("idempotent generators") {
    auto z12 = build_zn(12);
    REQUIRE(idempotent_generator(gen(z12, {4})) == 4);
    REQUIRE(idempotent_generator(Ideal::zero_ideal(z12)) == 0);
    REQUIRE_FALSE(idempotent_generator(gen(z12, {2})).has_value());
}

TEST_CASE("algebraic properties across a small family") {
    std::vector<RingPtr> rings = {build_zn(12), build_zn(16), build_zn(30),
                                  build_product(build_zn(4), build_zn(6)),
                                  build_poly_quotient(4, {0, 0, 1})};
    for (const auto& rp : rings) {
        auto ideals = enumerate_ideals(rp);
        for (const auto& a : ideals) {
            REQUIRE(a.is_subset_of(radical(a)));
            REQUIRE(radical(radical(a)) == radical(a));
            for (int x = 0; x < rp->size(); ++x)
                REQUIRE(a.is_subset_of(colon(a, Element{rp, x})));
            for (const auto& b : ideals) {
                Ideal ab = ideal_product(a, b);
                REQUIRE(ab == ideal_product(b, a));
                REQUIRE(ab.is_subset_of(ideal_intersect(a, b)));
                for (const auto& c : ideals)
                    REQUIRE(ideal_product(ab, c) == ideal_product(a, ideal_product(b, c)));
            }
        }
    }
}

TEST_CASE("lattice arithmetic agrees with the direct operations") {
    for (const auto& rp : {build_zn(24), build_poly_quotient(4, {0, 0, 1})}) {
        IdealLattice lat(rp);
        for (int a = 0; a < lat.count(); ++a)
            for (int b = 0; b < lat.count(); ++b) {
                REQUIRE(lat.at(lat.product(a, b)) == ideal_product(lat.at(a), lat.at(b)));
                REQUIRE(lat.at(lat.sum(a, b)) == ideal_sum(lat.at(a), lat.at(b)));
            }
        for (int a = 0; a < lat.count(); ++a) {
            REQUIRE(lat.at(lat.radical_of(a)) == radical(lat.at(a)));
            REQUIRE(lat.at(lat.stable_intersection(a)) == stable_power_intersection(lat.at(a)));
        }
    }
}

TEST_CASE("multiplicative sets") {
    auto z12 = build_zn(12);
    auto s = MultiplicativeSet::generated_by(z12, 3);
    REQUIRE(s.member_list() == std::vector<int>{1, 3, 9});
    auto u = MultiplicativeSet::unit_group(z12);
    REQUIRE(u.member_list() == std::vector<int>{1, 5, 7, 11});
    Bitset bad(12);
    bad.set(1);
    bad.set(2);
    REQUIRE_THROWS_AS(MultiplicativeSet::from_members(z12, bad), Error);
}
