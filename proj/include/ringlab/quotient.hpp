#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// A quotient ring together with the canonical projection from its base.
/// Cosets are represented by their minimum element index; quotient element i
/// is the i-th representative in ascending order.
struct Quotient {
    RingPtr ring;
    RingPtr base;
    Ideal modulus;
    std::vector<int> projection;  // base index -> quotient index
    std::vector<int> reps;        // quotient index -> base representative
};

inline Quotient build_quotient(const RingPtr& rp, const Ideal& j, std::string name = "") {
    require_same_ring(rp, j.ring());
    const Ring& r = *rp;
    const auto jm = j.member_list();

    std::vector<int> rep(static_cast<size_t>(r.size()), -1);
    std::vector<int> reps;
    for (int x = 0; x < r.size(); ++x) {
        if (rep[static_cast<size_t>(x)] >= 0) continue;
        // x is the least element of its coset (scan order is ascending)
        reps.push_back(x);
        for (int m : jm) rep[static_cast<size_t>(r.add(x, m))] = x;
    }
    int q = static_cast<int>(reps.size());
    std::vector<int> rank(static_cast<size_t>(r.size()), -1);
    for (int i = 0; i < q; ++i) rank[static_cast<size_t>(reps[static_cast<size_t>(i)])] = i;

    std::vector<int> proj(static_cast<size_t>(r.size()));
    for (int x = 0; x < r.size(); ++x)
        proj[static_cast<size_t>(x)] = rank[static_cast<size_t>(rep[static_cast<size_t>(x)])];

    std::vector<uint16_t> add(static_cast<size_t>(q) * q), mul(static_cast<size_t>(q) * q),
        neg(static_cast<size_t>(q));
    std::vector<std::string> labels(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i) {
        int a = reps[static_cast<size_t>(i)];
        neg[static_cast<size_t>(i)] = static_cast<uint16_t>(proj[static_cast<size_t>(r.neg(a))]);
        labels[static_cast<size_t>(i)] = "[" + r.label(a) + "]";
        for (int k = 0; k < q; ++k) {
            int b = reps[static_cast<size_t>(k)];
            add[static_cast<size_t>(i) * q + k] =
                static_cast<uint16_t>(proj[static_cast<size_t>(r.add(a, b))]);
            mul[static_cast<size_t>(i) * q + k] =
                static_cast<uint16_t>(proj[static_cast<size_t>(r.mul(a, b))]);
        }
    }
    int one = proj[static_cast<size_t>(r.one())];

    if (name.empty()) {
        std::string gens_str;
        for (size_t k = 0; k < j.generators().size(); ++k) {
            if (k) gens_str += ",";
            gens_str += r.label(j.generators()[k]);
        }
        if (gens_str.empty()) gens_str = r.label(r.zero());
        name = r.spec_string() + "/<" + gens_str + ">";
    }

    Quotient out;
    out.ring = std::make_shared<Ring>(std::move(name), q, one, std::move(add), std::move(mul),
                                      std::move(neg), std::move(labels));
    out.base = rp;
    out.modulus = j;
    out.projection = std::move(proj);
    out.reps = std::move(reps);
    return out;
}

/// P/J in R/J for J contained in P, as the projection image of P.
inline Ideal image_in_quotient(const Ideal& p, const Quotient& q) {
    require_same_ring(p.ring(), q.base);
    if (!q.modulus.is_subset_of(p))
        fail(ErrorKind::InvalidArgument,
             "quotient modulus is not contained in the ideal being projected");
    Bitset m(q.ring->size());
    for (int x : p.member_list()) m.set(q.projection[static_cast<size_t>(x)]);
    std::vector<int> gens;
    for (int g : p.generators()) gens.push_back(q.projection[static_cast<size_t>(g)]);
    return Ideal::trusted_with_gens(q.ring, std::move(m), std::move(gens));
}

}  // namespace ringlab
