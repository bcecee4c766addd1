#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "ringlab/localization.hpp"
#include "ringlab/parse.hpp"

using namespace ringlab;

namespace {

/// Pair-equivalence oracle: the literal relation (a,s) ~ (b,t) iff
/// u(at - bs) = 0 for some u in S, closed transitively with the
/// Floyd-Warshall pass. Completely independent of the scaling-orbit
/// construction inside localize().
std::vector<int> naive_classes(const Ring& r, const std::vector<int>& s) {
    int ns = static_cast<int>(s.size());
    int np = r.size() * ns;
    auto related = [&](int p1, int p2) {
        int a = p1 / ns, sv = s[static_cast<size_t>(p1 % ns)];
        int b = p2 / ns, tv = s[static_cast<size_t>(p2 % ns)];
        for (int u : s)
            if (r.mul(u, r.sub(r.mul(a, tv), r.mul(b, sv))) == r.zero()) return true;
        return false;
    };
    std::vector<std::vector<bool>> m(static_cast<size_t>(np), std::vector<bool>(static_cast<size_t>(np)));
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = related(i, j);
    for (int k = 0; k < np; ++k)
        for (int i = 0; i < np; ++i)
            for (int j = 0; j < np; ++j)
                if (m[static_cast<size_t>(i)][static_cast<size_t>(k)] && m[static_cast<size_t>(k)][static_cast<size_t>(j)])
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
    std::vector<int> cls(static_cast<size_t>(np), -1);
    int next = 0;
    for (int i = 0; i < np; ++i) {
        if (cls[static_cast<size_t>(i)] >= 0) continue;
        cls[static_cast<size_t>(i)] = next;
        for (int j = i + 1; j < np; ++j)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(j)]) cls[static_cast<size_t>(j)] = next;
        ++next;
    }
    return cls;
}

}  // namespace

TEST_CASE("localization of Z12 at {1,3,9}") {
    auto z12 = build_zn(12);
    auto s = MultiplicativeSet::generated_by(z12, 3);
    Localization loc = localize(z12, s);

    REQUIRE(loc.ring->size() == 4);
    REQUIRE(loc.kernel() == Ideal::from_generators(z12, {4}));
    REQUIRE(is_isomorphic(*loc.ring, *build_zn(4)));

    // the oracle partition has the same classes
    auto cls = naive_classes(*z12, s.member_list());
    std::map<int, int> seen;  // oracle class -> hom image (on pairs (a, 1))
    int pos1 = 1;  // position of 1 in {1,3,9}... index 0
    pos1 = 0;
    for (int a = 0; a < 12; ++a) {
        int oracle_class = cls[static_cast<size_t>(a * 3 + pos1)];
        int impl_class = loc.hom[static_cast<size_t>(a)];
        auto it = seen.find(oracle_class);
        if (it == seen.end()) seen.emplace(oracle_class, impl_class);
        else REQUIRE(it->second == impl_class);
    }
    REQUIRE(seen.size() == 4);

    // localize the prime <2>: its image is the size-2 ideal {0, [2]}
    Ideal img = localize_ideal(Ideal::from_generators(z12, {2}), loc);
    REQUIRE(img.count() == 2);
    REQUIRE(img.contains(loc.ring->zero()));
    REQUIRE(img.contains(loc.hom[2]));

    // image generated from generators equals the direct set image
    Bitset direct(loc.ring->size());
    for (int a : Ideal::from_generators(z12, {2}).member_list())
        for (int sv : s.member_list()) {
            // class of (a, sv): reach it as hom(a) / hom(sv) via table ops
            // hom(sv) is a unit in the localization
            for (int x = 0; x < loc.ring->size(); ++x)
                if (loc.ring->mul(x, loc.hom[static_cast<size_t>(sv)]) ==
                    loc.hom[static_cast<size_t>(a)])
                    direct.set(x);
        }
    REQUIRE(img.members() == direct);
}

TEST_CASE("localization at units is an isomorphism") {
    for (const auto& rp : {build_zn(12), build_zn(9), build_product(build_zn(2), build_zn(4))}) {
        Localization loc = localize(rp, MultiplicativeSet::unit_group(rp));
        REQUIRE(loc.ring->size() == rp->size());
        REQUIRE(loc.kernel().is_zero());
        std::vector<int> f(loc.hom.begin(), loc.hom.end());
        REQUIRE(is_isomorphism(*rp, *loc.ring, f));
    }
}

TEST_CASE("localization with zero in S collapses to the zero ring") {
    auto z12 = build_zn(12);
    Localization loc = localize(z12, MultiplicativeSet::generated_by(z12, 0));
    REQUIRE(loc.ring->size() == 1);
}

TEST_CASE("localization at powers of 2 in Z12") {
    auto z12 = build_zn(12);
    // S = {1,2,4,8}: inverting 2 kills the 3-part, leaving Z3
    Localization loc = localize(z12, MultiplicativeSet::generated_by(z12, 2));
    REQUIRE(loc.ring->size() == 3);
    REQUIRE(is_isomorphic(*loc.ring, *build_zn(3)));
    REQUIRE(loc.kernel() == Ideal::from_generators(z12, {3}));
}

TEST_CASE("contraction is the hom preimage") {
    auto z12 = build_zn(12);
    auto s = MultiplicativeSet::generated_by(z12, 3);
    Localization loc = localize(z12, s);
    Ideal p2 = Ideal::from_generators(z12, {2});
    Ideal lp = localize_ideal(p2, loc);
    REQUIRE(contract(lp, loc) == p2);
}
