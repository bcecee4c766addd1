#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// S^{-1}R together with the canonical homomorphism a -> a/1.
struct Localization {
    RingPtr ring;
    RingPtr base;
    MultiplicativeSet set;
    std::vector<int> hom;  // base index -> localized index

    /// {a : a/1 = 0}, an ideal of the base ring.
    Ideal kernel() const {
        Bitset k(base->size());
        for (int a = 0; a < base->size(); ++a)
            if (hom[static_cast<size_t>(a)] == ring->zero()) k.set(a);
        return Ideal::trusted(base, std::move(k));
    }
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent_[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent_[static_cast<size_t>(b)] = a;  // keep the smaller id as root
        else parent_[static_cast<size_t>(a)] = b;
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

/**
 * Builds S^{-1}R as pairs (a,s) in R x S modulo (a,s) ~ (b,t) iff
 * u(at - bs) = 0 for some u in S.
 *
 * The relation is generated by the scaling moves (a,s) -> (ua,us), u in S:
 * if u(at - bs) = 0 then scaling (a,s) by ut and (b,t) by us lands both on
 * the pair (uat, ust), and conversely joined orbits satisfy the relation.
 * This gives the classes in O(|R|·|S|^2) unions instead of quadratically
 * many relation tests. The canonical representative of a class is its
 * lexicographically smallest pair (a, s).
 */
inline Localization localize(const RingPtr& rp, const MultiplicativeSet& s) {
    require_same_ring(rp, s.ring());
    const Ring& r = *rp;
    const std::vector<int> sl = s.member_list();  // ascending
    const int ns = static_cast<int>(sl.size());
    std::vector<int> spos(static_cast<size_t>(r.size()), -1);
    for (int i = 0; i < ns; ++i) spos[static_cast<size_t>(sl[static_cast<size_t>(i)])] = i;

    const int npairs = r.size() * ns;
    auto pair_id = [&](int a, int sp) { return a * ns + sp; };

    detail::UnionFind uf(npairs);
    for (int a = 0; a < r.size(); ++a)
        for (int sp = 0; sp < ns; ++sp) {
            int id = pair_id(a, sp);
            for (int u : sl) {
                int ua = r.mul(u, a);
                int us = r.mul(u, sl[static_cast<size_t>(sp)]);
                uf.unite(id, pair_id(ua, spos[static_cast<size_t>(us)]));
            }
        }

    // Roots are minimal ids within their class (unions keep the smaller id);
    // number classes by ascending root id.
    std::vector<int> class_of(static_cast<size_t>(npairs), -1);
    std::vector<int> rep_pair;  // class -> canonical pair id
    for (int id = 0; id < npairs; ++id) {
        int root = uf.find(id);
        if (class_of[static_cast<size_t>(root)] < 0) {
            class_of[static_cast<size_t>(root)] = static_cast<int>(rep_pair.size());
            rep_pair.push_back(root);
        }
        class_of[static_cast<size_t>(id)] = class_of[static_cast<size_t>(root)];
    }
    const int m = static_cast<int>(rep_pair.size());

    auto rep_a = [&](int c) { return rep_pair[static_cast<size_t>(c)] / ns; };
    auto rep_s = [&](int c) { return sl[static_cast<size_t>(rep_pair[static_cast<size_t>(c)] % ns)]; };

    std::vector<uint16_t> add(static_cast<size_t>(m) * m), mul(static_cast<size_t>(m) * m),
        neg(static_cast<size_t>(m));
    std::vector<std::string> labels(static_cast<size_t>(m));
    auto cls = [&](int a, int sv) { return class_of[static_cast<size_t>(pair_id(a, spos[static_cast<size_t>(sv)]))]; };

    for (int i = 0; i < m; ++i) {
        int a = rep_a(i), sv = rep_s(i);
        neg[static_cast<size_t>(i)] = static_cast<uint16_t>(cls(r.neg(a), sv));
        if (sv == r.one()) {
            labels[static_cast<size_t>(i)] = r.label(a);
        } else {
            auto wrap = [](const std::string& l) {
                return l.find('+') == std::string::npos ? l : "(" + l + ")";
            };
            labels[static_cast<size_t>(i)] = wrap(r.label(a)) + "/" + wrap(r.label(sv));
        }
        for (int k = 0; k < m; ++k) {
            int b = rep_a(k), tv = rep_s(k);
            int st = r.mul(sv, tv);
            add[static_cast<size_t>(i) * m + k] =
                static_cast<uint16_t>(cls(r.add(r.mul(a, tv), r.mul(b, sv)), st));
            mul[static_cast<size_t>(i) * m + k] = static_cast<uint16_t>(cls(r.mul(a, b), st));
        }
    }
    int one = cls(r.one(), r.one());

    Localization out{nullptr, rp, s, {}};
    std::string sname;
    for (size_t k = 0; k < sl.size(); ++k) {
        if (k) sname += ",";
        sname += r.label(sl[k]);
    }
    out.ring = std::make_shared<Ring>("loc(" + r.spec_string() + ";{" + sname + "})", m, one,
                                      std::move(add), std::move(mul), std::move(neg),
                                      std::move(labels));
    out.hom.resize(static_cast<size_t>(r.size()));
    for (int a = 0; a < r.size(); ++a) out.hom[static_cast<size_t>(a)] = cls(a, r.one());
    return out;
}

/// S^{-1}P: the ideal generated by the hom-images of P's generators.
inline Ideal localize_ideal(const Ideal& p, const Localization& loc) {
    require_same_ring(p.ring(), loc.base);
    std::vector<int> gens;
    for (int g : p.generators()) gens.push_back(loc.hom[static_cast<size_t>(g)]);
    if (p.generators().empty() && !p.is_zero())
        for (int g : p.member_list()) gens.push_back(loc.hom[static_cast<size_t>(g)]);
    return Ideal::from_generators(loc.ring, gens);
}

/// Hom-preimage of an ideal of S^{-1}R, an ideal of the base ring. This is
/// the contraction "Q ∩ R" realized through the canonical map.
inline Ideal contract(const Ideal& q, const Localization& loc) {
    require_same_ring(q.ring(), loc.ring);
    Bitset m(loc.base->size());
    for (int a = 0; a < loc.base->size(); ++a)
        if (q.contains(loc.hom[static_cast<size_t>(a)])) m.set(a);
    return Ideal::trusted(loc.base, std::move(m));
}

}  // namespace ringlab
