#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ringlab/bitset.hpp"
#include "ringlab/config.hpp"
#include "ringlab/error.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

namespace detail {

/// Closes `m` (given with its member list) under addition and under
/// multiplication by every ring element. Standard worklist fixpoint.
inline void close_to_ideal(const Ring& r, Bitset& m, std::vector<int>& members) {
    size_t head = 0;
    while (head < members.size()) {
        int w = members[head++];
        for (int x = 0; x < r.size(); ++x) {
            int p = r.mul(x, w);
            if (!m.test(p)) {
                m.set(p);
                members.push_back(p);
            }
        }
        for (size_t k = 0; k < members.size(); ++k) {
            int s = r.add(members[k], w);
            if (!m.test(s)) {
                m.set(s);
                members.push_back(s);
            }
        }
    }
}

inline bool is_closed_ideal(const Ring& r, const Bitset& m) {
    if (!m.test(r.zero())) return false;
    auto mem = m.to_vector();
    for (int a : mem) {
        for (int x = 0; x < r.size(); ++x)
            if (!m.test(r.mul(x, a))) return false;
        for (int b : mem)
            if (!m.test(r.add(a, b))) return false;
    }
    return true;
}

/// Smallest generating subset picked greedily over ascending member indices.
/// Deterministic; used as the canonical display form for derived ideals.
inline std::vector<int> greedy_generators(const Ring& r, const std::vector<int>& members) {
    std::vector<int> gens;
    Bitset closed(r.size());
    closed.set(r.zero());
    std::vector<int> closed_list{r.zero()};
    for (int m : members) {
        if (closed.test(m)) continue;
        gens.push_back(m);
        closed.set(m);
        closed_list.push_back(m);
        close_to_ideal(r, closed, closed_list);
    }
    return gens;
}

}  // namespace detail

/// A subset of a ring closed under addition and under multiplication by every
/// ring element, stored as a membership bitset plus a recorded generator list
/// whose closure equals the members.
class Ideal {
public:
    Ideal() = default;

    /// Smallest ideal containing `gens` (empty list yields <0>).
    static Ideal from_generators(RingPtr ring, std::vector<int> gens) {
        Bitset m(ring->size());
        std::vector<int> members{ring->zero()};
        m.set(ring->zero());
        for (int g : gens) {
            if (g < 0 || g >= ring->size())
                fail(ErrorKind::InvalidArgument, "generator index out of range");
            if (!m.test(g)) {
                m.set(g);
                members.push_back(g);
            }
        }
        detail::close_to_ideal(*ring, m, members);
        return Ideal(std::move(ring), std::move(m), std::move(gens));
    }

    /// Verifies closure of an explicit member set (ErrorKind::NotAnIdeal
    /// otherwise). Generators are re-derived canonically.
    static Ideal from_members_checked(RingPtr ring, const Bitset& members) {
        if (!detail::is_closed_ideal(*ring, members))
            fail(ErrorKind::NotAnIdeal, "member set is not an ideal");
        auto gens = detail::greedy_generators(*ring, members.to_vector());
        return Ideal(std::move(ring), members, std::move(gens));
    }

    /// Internal fast path for sets that are ideals by construction
    /// (colon sets, radicals, bitset intersections, projection images).
    /// Unit tests cross-check these paths against from_members_checked.
    static Ideal trusted(RingPtr ring, Bitset members) {
        auto gens = detail::greedy_generators(*ring, members.to_vector());
        return Ideal(std::move(ring), std::move(members), std::move(gens));
    }

    static Ideal trusted_with_gens(RingPtr ring, Bitset members, std::vector<int> gens) {
        return Ideal(std::move(ring), std::move(members), std::move(gens));
    }

    static Ideal zero_ideal(RingPtr ring) { return from_generators(std::move(ring), {}); }
    static Ideal unit_ideal(RingPtr ring) {
        int one = ring->one();
        return from_generators(std::move(ring), {one});
    }

    const RingPtr& ring() const { return ring_; }
    const Bitset& members() const { return members_; }
    const std::vector<int>& generators() const { return gens_; }

    int count() const { return members_.count(); }
    bool contains(int a) const { return members_.test(a); }
    bool is_proper() const { return !members_.test(ring_->one()); }
    bool is_zero() const { return members_.count() == 1; }

    std::vector<int> member_list() const { return members_.to_vector(); }

    bool operator==(const Ideal& o) const {
        return ring_.get() == o.ring_.get() && members_ == o.members_;
    }
    bool is_subset_of(const Ideal& o) const { return members_.is_subset_of(o.members_); }

private:
    Ideal(RingPtr ring, Bitset members, std::vector<int> gens)
        : ring_(std::move(ring)), members_(std::move(members)), gens_(std::move(gens)) {}

    RingPtr ring_;
    Bitset members_;
    std::vector<int> gens_;
};

inline Ideal ideal_from_generators(const RingPtr& r, const std::vector<int>& gens) {
    return Ideal::from_generators(r, gens);
}

/// Ideal generated by all pairwise member products. The product set is
/// already closed under ring multiplication, so only sums need closing.
inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    const Ring& r = *a.ring();
    Bitset m(r.size());
    std::vector<int> members;
    auto la = a.member_list();
    auto lb = b.member_list();
    for (int x : la)
        for (int y : lb) {
            int p = r.mul(x, y);
            if (!m.test(p)) {
                m.set(p);
                members.push_back(p);
            }
        }
    // close under addition
    size_t head = 0;
    while (head < members.size()) {
        int w = members[head++];
        for (size_t k = 0; k < members.size(); ++k) {
            int s = r.add(members[k], w);
            if (!m.test(s)) {
                m.set(s);
                members.push_back(s);
            }
        }
    }
    return Ideal::trusted(a.ring(), std::move(m));
}

/// Pointwise sums a+b already form the ideal A+B.
inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    const Ring& r = *a.ring();
    Bitset m(r.size());
    for (int x : a.member_list())
        for (int y : b.member_list()) m.set(r.add(x, y));
    return Ideal::trusted(a.ring(), std::move(m));
}

inline Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    return Ideal::trusted(a.ring(), a.members() & b.members());
}

inline Ideal ideal_power(const Ideal& a, int n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "ideal power requires exponent >= 1");
    Ideal acc = a;
    for (int k = 1; k < n; ++k) acc = ideal_product(acc, a);
    return acc;
}

/// The intersection of all powers A^i. In a finite ring the power chain
/// A >= A^2 >= ... stabilizes; the intersection equals the stable power.
inline Ideal stable_power_intersection(const Ideal& a) {
    Ideal cur = a;
    Ideal inter = a;
    for (;;) {
        Ideal nxt = ideal_product(cur, a);
        if (nxt == cur) return inter;
        inter = ideal_intersect(inter, nxt);
        cur = nxt;
    }
}

/// (P : x) = {r : r*x in P}.
inline Bitset colon_members(const Ring& r, const Bitset& p, int x) {
    Bitset out(r.size());
    for (int a = 0; a < r.size(); ++a)
        if (p.test(r.mul(a, x))) out.set(a);
    return out;
}

inline Ideal colon(const Ideal& p, const Element& x) {
    require_same_ring(p.ring(), x.ring);
    return Ideal::trusted(p.ring(), colon_members(*p.ring(), p.members(), x.index));
}

/// (P : J) = {r : r*J subset of P}; checking the generators of J suffices.
inline Ideal colon_ideal(const Ideal& p, const Ideal& j) {
    require_same_ring(p.ring(), j.ring());
    const Ring& r = *p.ring();
    std::vector<int> gens = j.generators();
    if (gens.empty()) gens = j.member_list();
    Bitset out(r.size());
    for (int a = 0; a < r.size(); ++a) {
        bool ok = true;
        for (int g : gens)
            if (!p.contains(r.mul(a, g))) {
                ok = false;
                break;
            }
        if (ok) out.set(a);
    }
    return Ideal::trusted(p.ring(), std::move(out));
}

/// sqrt(P) = {x : x^k in P for some k >= 1}; per-element power iteration with
/// cycle detection, so no exponent bound is assumed.
inline Ideal radical(const Ideal& p) {
    const Ring& r = *p.ring();
    Bitset out(r.size());
    std::vector<int> stamp(static_cast<size_t>(r.size()), -1);
    for (int x = 0; x < r.size(); ++x) {
        int y = x;
        bool in = false;
        while (stamp[static_cast<size_t>(y)] != x) {
            if (p.contains(y)) {
                in = true;
                break;
            }
            stamp[static_cast<size_t>(y)] = x;
            y = r.mul(y, x);
        }
        if (in) out.set(x);
    }
    return Ideal::trusted(p.ring(), std::move(out));
}

/// Every distinct ideal exactly once, ordered by membership bitset value
/// ascending. Principal ideals are closed under pairwise sums to a fixpoint.
inline std::vector<Ideal> enumerate_ideals(const RingPtr& rp,
                                           int budget = config::ideal_budget()) {
    const Ring& r = *rp;
    if (r.size() > budget)
        fail(ErrorKind::BudgetExceeded,
             "ideal enumeration budget " + std::to_string(budget) + " exceeded by ring of size " +
                 std::to_string(r.size()));

    std::unordered_map<Bitset, int, BitsetHash> seen;
    std::vector<Bitset> list;
    auto push = [&](Bitset b) {
        if (seen.emplace(b, static_cast<int>(list.size())).second) list.push_back(std::move(b));
    };
    for (int x = 0; x < r.size(); ++x) {
        Bitset b(r.size());
        for (int a = 0; a < r.size(); ++a) b.set(r.mul(a, x));
        push(std::move(b));
    }
    for (size_t i = 0; i < list.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            // when one contains the other, the sum is the larger one
            if (list[j].is_subset_of(list[i]) || list[i].is_subset_of(list[j])) continue;
            const auto va = list[i].to_vector();
            const auto vb = list[j].to_vector();
            Bitset s(r.size());
            for (int x : va)
                for (int y : vb) s.set(r.add(x, y));
            push(std::move(s));
        }
    }
    std::sort(list.begin(), list.end(),
              [](const Bitset& a, const Bitset& b) { return a.value_less(b); });
    std::vector<Ideal> out;
    out.reserve(list.size());
    for (auto& b : list) out.push_back(Ideal::trusted(rp, std::move(b)));
    return out;
}

/// Proper ideals maximal under inclusion.
inline std::vector<Ideal> maximal_ideals(const RingPtr& rp,
                                         int budget = config::ideal_budget()) {
    auto all = enumerate_ideals(rp, budget);
    std::vector<Ideal> out;
    for (const auto& cand : all) {
        if (!cand.is_proper()) continue;
        bool maximal = true;
        for (const auto& other : all) {
            if (!other.is_proper() || &other == &cand) continue;
            if (cand.is_subset_of(other) && !(cand == other)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(cand);
    }
    return out;
}

struct QuasiLocal {
    bool quasi_local = false;
    std::optional<Ideal> maximal;  // the unique maximal ideal when quasi_local
};

inline QuasiLocal is_quasi_local(const RingPtr& rp, int budget = config::ideal_budget()) {
    auto ms = maximal_ideals(rp, budget);
    QuasiLocal q;
    q.quasi_local = ms.size() == 1;
    if (q.quasi_local) q.maximal = ms.front();
    return q;
}

/// Smallest e in A with e*e = e and <e> = A, if one exists.
inline std::optional<int> idempotent_generator(const Ideal& a) {
    const Ring& r = *a.ring();
    for (int e : a.member_list()) {
        if (r.mul(e, e) != e) continue;
        Bitset gen(r.size());
        for (int x = 0; x < r.size(); ++x) gen.set(r.mul(x, e));
        if (gen == a.members()) return e;
    }
    return std::nullopt;
}

/// A subset containing 1 and closed under multiplication.
class MultiplicativeSet {
public:
    static MultiplicativeSet from_members(RingPtr ring, const Bitset& members) {
        if (!members.test(ring->one()))
            fail(ErrorKind::NotMultClosed, "multiplicative set must contain 1");
        auto mem = members.to_vector();
        for (int a : mem)
            for (int b : mem)
                if (!members.test(ring->mul(a, b)))
                    fail(ErrorKind::NotMultClosed,
                         "set is not closed under multiplication: " + ring->label(a) + "*" +
                             ring->label(b) + " = " + ring->label(ring->mul(a, b)) +
                             " is outside");
        return MultiplicativeSet(std::move(ring), members);
    }

    /// {1, x, x^2, ...} — the submonoid generated by one element.
    static MultiplicativeSet generated_by(RingPtr ring, int x) {
        Bitset m(ring->size());
        m.set(ring->one());
        int y = x;
        while (!m.test(y)) {
            m.set(y);
            y = ring->mul(y, x);
        }
        return MultiplicativeSet(std::move(ring), std::move(m));
    }

    static MultiplicativeSet unit_group(RingPtr ring) {
        Bitset u = units(*ring);
        return MultiplicativeSet(std::move(ring), std::move(u));
    }

    const RingPtr& ring() const { return ring_; }
    const Bitset& members() const { return members_; }
    std::vector<int> member_list() const { return members_.to_vector(); }
    bool contains(int a) const { return members_.test(a); }

private:
    MultiplicativeSet(RingPtr ring, Bitset members)
        : ring_(std::move(ring)), members_(std::move(members)) {}

    RingPtr ring_;
    Bitset members_;
};

}  // namespace ringlab
