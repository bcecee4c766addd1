#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "ringlab/lattice.hpp"
#include "ringlab/localization.hpp"
#include "ringlab/parse.hpp"
#include "ringlab/primality.hpp"
#include "ringlab/spec.hpp"

namespace ringlab {

enum class TheoremId {
    T1_1,
    T1_2,
    L2,
    C_CAP,
    R_RAD,
    C_RADEQ,
    R_IDEM,
    T4_1,
    T4_2,
    C_INDEC,
    C_P2FIELD,
    T_PRIN_1,
    T_PRIN_2,
    T_PRIN_3,
    T13,
    C_PSQRT,
    P14_QUOT,
    P14_LOC,
    T15,
};

inline const std::vector<std::pair<TheoremId, const char*>>& theorem_catalog() {
    static const std::vector<std::pair<TheoremId, const char*>> v = {
        {TheoremId::T1_1, "T1_1"},         {TheoremId::T1_2, "T1_2"},
        {TheoremId::L2, "L2"},             {TheoremId::C_CAP, "C_CAP"},
        {TheoremId::R_RAD, "R_RAD"},       {TheoremId::C_RADEQ, "C_RADEQ"},
        {TheoremId::R_IDEM, "R_IDEM"},     {TheoremId::T4_1, "T4_1"},
        {TheoremId::T4_2, "T4_2"},         {TheoremId::C_INDEC, "C_INDEC"},
        {TheoremId::C_P2FIELD, "C_P2FIELD"}, {TheoremId::T_PRIN_1, "T_PRIN_1"},
        {TheoremId::T_PRIN_2, "T_PRIN_2"}, {TheoremId::T_PRIN_3, "T_PRIN_3"},
        {TheoremId::T13, "T13"},           {TheoremId::C_PSQRT, "C_PSQRT"},
        {TheoremId::P14_QUOT, "P14_QUOT"}, {TheoremId::P14_LOC, "P14_LOC"},
        {TheoremId::T15, "T15"},
    };
    return v;
}

inline const char* theorem_name(TheoremId id) {
    for (const auto& [tid, name] : theorem_catalog())
        if (tid == id) return name;
    return "?";
}

inline std::optional<TheoremId> theorem_from_name(const std::string& s) {
    for (const auto& [tid, name] : theorem_catalog())
        if (s == name) return tid;
    return std::nullopt;
}

/// One falsifying instance: the ring, the (P, I) pair involved, and a
/// human-readable account of what failed.
struct Counterexample {
    std::string ring;
    std::string p;
    std::string i;
    std::string detail;
};

struct TheoremReport {
    TheoremId id = TheoremId::T1_1;
    std::string family;
    long instances = 0;
    bool passed = true;
    bool vacuous = false;  // family contributed no instances
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;  // per-member operational errors
    double elapsed_ms = 0.0;
};

// ---------------------------------------------------------------------------
// decomposition (principal construction behind the product-splitting theorem)
// ---------------------------------------------------------------------------

/// Witness for the splitting R ~ T x S induced by the idempotent generator of
/// P^2, with P mapping onto J x S for a weakly prime J of T. Every claim is
/// re-verified exhaustively and recorded as a flag; a false flag falsifies
/// the construction and is reported, never asserted away.
struct DecompositionWitness {
    bool is_zero_prime = false;  // first branch: P itself is weakly prime
    bool ok = false;             // all verified flags below hold
    std::string failure;         // first failed check, empty when ok

    int idempotent = -1;
    RingPtr t, s;
    std::vector<int> t_carrier, s_carrier;
    std::vector<std::pair<int, int>> iso;  // element r -> (t index, s index)
    bool iso_verified = false;
    std::optional<Ideal> j;  // ideal of t
    bool j_weakly_prime = false;
    bool p_maps_to_j_cross_s = false;
};

namespace detail {

inline DecompositionWitness decompose_unchecked(const Ideal& p) {
    const RingPtr rp = p.ring();
    const Ring& r = *rp;
    DecompositionWitness w;

    if (is_weakly_prime(p).value) {
        w.is_zero_prime = true;
        w.ok = true;
        return w;
    }

    Ideal p2 = ideal_power(p, 2);
    if (p2.is_zero()) {
        w.failure = "P is not weakly prime yet P^2 = 0";
        return w;
    }
    auto e = idempotent_generator(p2);
    if (!e) {
        w.failure = "P^2 has no idempotent generator";
        return w;
    }
    w.idempotent = *e;
    int ce = r.sub(r.one(), *e);  // complementary idempotent 1-e

    Subring t = subring_by_idempotent(rp, ce, r.spec_string() + "*(1-" + r.label(*e) + ")");
    Subring s = subring_by_idempotent(rp, *e, r.spec_string() + "*" + r.label(*e));
    w.t = t.ring;
    w.s = s.ring;
    w.t_carrier = t.carrier;
    w.s_carrier = s.carrier;

    // the map r -> (r(1-e), re); verify it is a ring isomorphism onto T x S
    w.iso.resize(static_cast<size_t>(r.size()));
    for (int x = 0; x < r.size(); ++x)
        w.iso[static_cast<size_t>(x)] = {t.to_sub[static_cast<size_t>(r.mul(x, ce))],
                                         s.to_sub[static_cast<size_t>(r.mul(x, *e))]};
    w.iso_verified = true;
    if (static_cast<long long>(w.t->size()) * w.s->size() != r.size()) w.iso_verified = false;
    if (w.iso_verified) {
        Bitset seen(r.size());
        for (int x = 0; x < r.size() && w.iso_verified; ++x) {
            auto [tx, sx] = w.iso[static_cast<size_t>(x)];
            int code = tx * w.s->size() + sx;
            if (seen.test(code)) w.iso_verified = false;
            seen.set(code);
        }
        for (int x = 0; x < r.size() && w.iso_verified; ++x)
            for (int y = 0; y < r.size(); ++y) {
                auto [tx, sx] = w.iso[static_cast<size_t>(x)];
                auto [ty, sy] = w.iso[static_cast<size_t>(y)];
                auto [tsum, ssum] = w.iso[static_cast<size_t>(r.add(x, y))];
                auto [tprod, sprod] = w.iso[static_cast<size_t>(r.mul(x, y))];
                if (tsum != w.t->add(tx, ty) || ssum != w.s->add(sx, sy) ||
                    tprod != w.t->mul(tx, ty) || sprod != w.s->mul(sx, sy)) {
                    w.iso_verified = false;
                    break;
                }
            }
        auto [t1, s1] = w.iso[static_cast<size_t>(r.one())];
        if (t1 != w.t->one() || s1 != w.s->one()) w.iso_verified = false;
    }
    if (!w.iso_verified) {
        w.failure = "r -> (r(1-e), re) is not an isomorphism onto T x S";
        return w;
    }

    // J = P(1-e) as an ideal of T
    Bitset jm(w.t->size());
    for (int x : p.member_list()) jm.set(t.to_sub[static_cast<size_t>(r.mul(x, ce))]);
    w.j = Ideal::trusted(w.t, std::move(jm));
    w.j_weakly_prime = is_weakly_prime(*w.j).value;

    // image of P must be exactly J x S
    w.p_maps_to_j_cross_s = true;
    Bitset image(static_cast<int>(w.t->size() * w.s->size()));
    for (int x : p.member_list()) {
        auto [tx, sx] = w.iso[static_cast<size_t>(x)];
        image.set(tx * w.s->size() + sx);
    }
    if (image.count() != w.j->count() * w.s->size()) w.p_maps_to_j_cross_s = false;
    for (int x : p.member_list()) {
        auto [tx, sx] = w.iso[static_cast<size_t>(x)];
        (void)sx;
        if (!w.j->contains(tx)) w.p_maps_to_j_cross_s = false;
    }

    if (!w.j_weakly_prime)
        w.failure = "J is not weakly prime in T";
    else if (!w.p_maps_to_j_cross_s)
        w.failure = "image of P is not J x S";
    w.ok = w.failure.empty();
    return w;
}

}  // namespace detail

/// Splits the ring along the idempotent generator of P^2, given an I-prime P
/// with IP contained in P^3 (checked; structured error otherwise).
inline DecompositionWitness decompose(const Ideal& p, const Ideal& i) {
    require_same_ring(p.ring(), i.ring());
    auto pre = is_i_prime(p, i);
    if (!pre.value)
        fail(ErrorKind::InvalidArgument, "decompose requires an I-prime ideal P");
    Ideal ip = ideal_product(i, p);
    Ideal p3 = ideal_power(p, 3);
    if (!ip.is_subset_of(p3))
        fail(ErrorKind::InvalidArgument,
             "decompose requires IP contained in P^3; here IP = " + ideal_literal(ip) +
                 " is not inside P^3 = " + ideal_literal(p3));
    return detail::decompose_unchecked(p);
}

// ---------------------------------------------------------------------------
// product-ideal classification
// ---------------------------------------------------------------------------

/// One row of the product-ring classification: the ideal Q = P1 x P2, the
/// type its shape and the factor predicates predict (0 = none), and whether
/// the direct I-prime scan agrees with that prediction.
struct ProductIdealRow {
    Ideal q;
    int p1_index = 0, p2_index = 0;  // factor-lattice indices
    int tag = 0;                     // 0 none, 1..3 per the trichotomy
    bool i_prime = false;
    bool agree = false;
};

namespace detail {

/**
 * Predicted type of Q = P1 x P2 under I = I1 x I2:
 *   1: both P_i proper and I_iP_i = P_i           (vacuous region)
 *   2: Q = P1 x R2 with P1 prime, or P1 I1-prime and I2 = R2
 *   3: symmetric to 2
 * Type 2/3 admit the prime factor unconditionally: a prime P1 makes
 * P1 x R2 a prime ideal of the product, hence I-prime for every I, even
 * when I2 is proper (e.g. Z2 x Z2, I = 0 x 0, Q = 0 x Z2). The trichotomy
 * is exhaustive and mutually exclusive by the shape of Q.
 */
inline int predicted_product_type(IdealLattice& left, IdealLattice& right, int p1, int p2,
                                  int i1, int i2) {
    bool p1_proper = left.at(p1).is_proper();
    bool p2_proper = right.at(p2).is_proper();
    if (p1_proper && p2_proper) {
        if (left.product(i1, p1) == p1 && right.product(i2, p2) == p2) return 1;
        return 0;
    }
    if (p1_proper && !p2_proper) {
        if (left.prime(p1).value) return 2;
        if (left.i_prime(p1, i1).value && right.at(i2).is_proper() == false) return 2;
        return 0;
    }
    if (!p1_proper && p2_proper) {
        if (right.prime(p2).value) return 3;
        if (right.i_prime(p2, i2).value && left.at(i1).is_proper() == false) return 3;
        return 0;
    }
    return 0;  // Q = R1 x R2 is improper
}

}  // namespace detail

/// Classifies every ideal of r1 x r2 against I = i1 x i2: predicted type from
/// the factor data versus the direct I-prime scan on the product.
inline std::vector<ProductIdealRow> classify_product_ideals(const RingPtr& r1, const RingPtr& r2,
                                                            const Ideal& i1, const Ideal& i2,
                                                            int budget = config::ideal_budget()) {
    require_same_ring(r1, i1.ring());
    require_same_ring(r2, i2.ring());
    RingPtr prod = build_product(r1, r2);
    IdealLattice lat(prod, budget);
    IdealLattice left(r1, budget), right(r2, budget);
    int n2 = r2->size();

    int i1_idx = left.index_of(i1);
    int i2_idx = right.index_of(i2);
    // I = I1 x I2 inside the product
    Bitset ib(prod->size());
    for (int x : i1.member_list())
        for (int y : i2.member_list()) ib.set(x * n2 + y);
    int i_idx = lat.index_of(ib);

    std::vector<ProductIdealRow> rows;
    for (int q = 0; q < lat.count(); ++q) {
        Bitset a(r1->size()), b(r2->size());
        for (int x : lat.at(q).member_list()) {
            a.set(x / n2);
            b.set(x % n2);
        }
        int p1 = left.index_of(a);
        int p2 = right.index_of(b);
        ProductIdealRow row;
        row.q = lat.at(q);
        row.p1_index = p1;
        row.p2_index = p2;
        row.tag = detail::predicted_product_type(left, right, p1, p2, i1_idx, i2_idx);
        row.i_prime = lat.i_prime(q, i_idx).value;
        row.agree = (row.tag != 0) == row.i_prime;
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// sweep context: one family member with every cache the checkers share
// ---------------------------------------------------------------------------

namespace detail {

struct ProductView {
    RingPtr left_ring, right_ring;
    std::unique_ptr<IdealLattice> left, right;
    int n2 = 1;

    std::pair<int, int> split(IdealLattice& lat, int q) {
        Bitset a(left_ring->size()), b(right_ring->size());
        for (int x : lat.at(q).member_list()) {
            a.set(x / n2);
            b.set(x % n2);
        }
        return {left->index_of(a), right->index_of(b)};
    }
    int embed(IdealLattice& lat, int p1, int p2) {
        Bitset m(static_cast<int>(left_ring->size()) * n2);
        for (int x : left->at(p1).member_list())
            for (int y : right->at(p2).member_list()) m.set(x * n2 + y);
        return lat.index_of(m);
    }
};

struct LocalizationStudy {
    Localization loc;
    bool bijective = false;
    std::unordered_map<Bitset, int, BitsetHash> image_id;
    std::vector<Ideal> images;
    std::unordered_map<int, int> image_of_base;        // base ideal idx -> image id
    std::unordered_map<long long, bool> iprime_memo;   // (lp, li) -> conclusion
    std::unordered_map<int, Bitset> contraction_memo;  // lp -> contracted members

    explicit LocalizationStudy(Localization l) : loc(std::move(l)) {
        bijective = loc.ring->size() == loc.base->size();
    }

    int image_of(IdealLattice& lat, int idx) {
        auto it = image_of_base.find(idx);
        if (it != image_of_base.end()) return it->second;
        Ideal img = localize_ideal(lat.at(idx), loc);
        auto [it2, fresh] = image_id.emplace(img.members(), static_cast<int>(images.size()));
        if (fresh) images.push_back(std::move(img));
        image_of_base.emplace(idx, it2->second);
        return it2->second;
    }

    bool localized_i_prime(int lp, int li) {
        long long key = static_cast<long long>(lp) * 1000003 + li;
        auto it = iprime_memo.find(key);
        if (it != iprime_memo.end()) return it->second;
        bool v = is_i_prime(images[static_cast<size_t>(lp)], images[static_cast<size_t>(li)]).value;
        iprime_memo.emplace(key, v);
        return v;
    }

    const Bitset& contraction(int lp) {
        auto it = contraction_memo.find(lp);
        if (it != contraction_memo.end()) return it->second;
        return contraction_memo.emplace(lp, contract(images[static_cast<size_t>(lp)], loc).members())
            .first->second;
    }
};

struct SweepContext {
    RingSpec spec;
    RingPtr ring;
    IdealLattice lat;
    std::optional<ProductView> prod;

    std::optional<Bitset> units_;
    std::optional<std::vector<int>> principal_;  // element -> index of <x>
    std::optional<QuasiLocal> quasi_local_;
    std::optional<bool> indecomposable_, field_;

    // quotient-side conclusions for the projection proposition,
    // keyed (modulus j, p, i+j)
    std::unordered_map<long long, bool> quotient_iprime_memo;

    std::vector<std::unique_ptr<LocalizationStudy>> localizations;
    bool localizations_built = false;

    SweepContext(RingSpec s, RingPtr r, int budget)
        : spec(std::move(s)), ring(std::move(r)), lat(ring, budget) {
        if (spec.kind == RingSpec::Kind::Product) {
            ProductView pv;
            pv.left_ring = realize(*spec.left);
            pv.right_ring = realize(*spec.right);
            pv.left = std::make_unique<IdealLattice>(pv.left_ring, budget);
            pv.right = std::make_unique<IdealLattice>(pv.right_ring, budget);
            pv.n2 = pv.right_ring->size();
            prod = std::move(pv);
        }
    }

    const Bitset& unit_set() {
        if (!units_) units_ = units(*ring);
        return *units_;
    }
    const std::vector<int>& principal_index() {
        if (!principal_) {
            std::vector<int> v(static_cast<size_t>(ring->size()));
            for (int x = 0; x < ring->size(); ++x) {
                Bitset b(ring->size());
                for (int a = 0; a < ring->size(); ++a) b.set(ring->mul(a, x));
                v[static_cast<size_t>(x)] = lat.index_of(b);
            }
            principal_ = std::move(v);
        }
        return *principal_;
    }
    const QuasiLocal& quasi_local() {
        if (!quasi_local_) {
            QuasiLocal q;
            const auto& proper = lat.proper_indices();
            std::vector<int> maximal;
            for (int c : proper) {
                bool is_max = true;
                for (int o : proper)
                    if (o != c && lat.at(c).is_subset_of(lat.at(o))) {
                        is_max = false;
                        break;
                    }
                if (is_max) maximal.push_back(c);
            }
            q.quasi_local = maximal.size() == 1;
            if (q.quasi_local) q.maximal = lat.at(maximal.front());
            quasi_local_ = std::move(q);
        }
        return *quasi_local_;
    }
    bool indecomposable() {
        if (!indecomposable_) indecomposable_ = is_indecomposable(*ring);
        return *indecomposable_;
    }
    bool field() {
        if (!field_) field_ = is_field(*ring);
        return *field_;
    }

    /// Generated submonoids {1, x, x^2, ...} for each element plus the unit
    /// group, deduplicated in that order and capped.
    void build_localizations(int cap = config::mult_set_cap()) {
        if (localizations_built) return;
        localizations_built = true;
        std::unordered_map<Bitset, bool, BitsetHash> seen;
        std::vector<MultiplicativeSet> sets;
        for (int x = 0; x < ring->size() && static_cast<int>(sets.size()) < cap - 1; ++x) {
            auto s = MultiplicativeSet::generated_by(ring, x);
            if (seen.emplace(s.members(), true).second) sets.push_back(std::move(s));
        }
        auto ug = MultiplicativeSet::unit_group(ring);
        if (seen.emplace(ug.members(), true).second) sets.push_back(std::move(ug));
        for (auto& s : sets)
            localizations.push_back(std::make_unique<LocalizationStudy>(localize(ring, s)));
    }

    std::string pl(int idx) { return ideal_literal(lat.at(idx)); }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// per-theorem checkers
// ---------------------------------------------------------------------------

namespace detail {

struct PartialReport {
    long instances = 0;
    std::vector<Counterexample> cex;
};

inline void report(PartialReport& out, SweepContext& ctx, int p, int i, std::string detail_msg) {
    out.cex.push_back({ctx.ring->spec_string(), p >= 0 ? ctx.pl(p) : "-",
                       i >= 0 ? ctx.pl(i) : "-", std::move(detail_msg)});
}

/// larger I keeps I-primeness: for I inside J, I-prime P stays J-prime.
inline PartialReport check_T1_1(SweepContext& ctx) {
    PartialReport out;
    auto& lat = ctx.lat;
    for (int p : lat.proper_indices())
        for (int i = 0; i < lat.count(); ++i)
            for (int j = 0; j < lat.count(); ++j) {
                if (!lat.at(i).is_subset_of(lat.at(j))) continue;
                ++out.instances;
                if (lat.i_prime(p, i).value && !lat.i_prime(p, j).value)
                    report(out, ctx, p, i,
                           "I-prime is lost after enlarging I to J = " + ctx.pl(j));
            }
    return out;
}

/// non-prime I-prime P forces P^2 inside IP.
inline PartialReport check_T1_2(SweepContext& ctx) {
    PartialReport out;
    auto& lat = ctx.lat;
    for (int p : lat.proper_indices())
        for (int i = 0; i < lat.count(); ++i) {
            ++out.instances;
            if (!lat.i_prime(p, i).value || lat.prime(p).value) continue;
            int p2 = lat.power(p, 2);
            int ip = lat.product(i, p);
            if (!lat.at(p2).is_subset_of(lat.at(ip)))
                report(out, ctx, p, i,
                       "P^2 = " + ctx.pl(p2) + " is not inside IP = " + ctx.pl(ip));
        }
    return out;
}

/// definitional route agrees with the weakly-prime-in-R/IP route.
inline PartialReport check_L2(SweepContext& ctx) {
    PartialReport out;
    auto& lat = ctx.lat;
    for (int p : lat.proper_indices())
        for (int i = 0; i < lat.count(); ++i) {
            ++out.instances;
            int ip = lat.product(i, p);
            bool direct = lat.i_prime_by_region(p, ip).value;
            bool via_quotient = lat.quotient_route(p, ip);
            if (direct != via_quotient)
                report(out, ctx, p, i,
                       std::string("definition says ") + (direct ? "true" : "false") +
                           ", quotient route says " + (via_quotient ? "true" : "false"));
        }
    return out;
}

/// I-prime with IP inside P^3 stays Q-prime for Q = the stabilized
/// intersection of the powers of P.
inline PartialReport check_C_CAP(SweepContext& ctx) {
    PartialReport out;
    auto& lat = ctx.lat;
    for (int p : lat.proper_indices())
        for (int i = 0; i < lat.count(); ++i) {
            ++out.instances;
            if (!lat.i_prime(p, i).value) continue;
            int ip = lat.product(i, p);
            if (!lat.at(ip).is_subset_of(lat.at(lat.power(p, 3)))) continue;
            int q = lat.stable_intersection(p);
            if (!lat.i_prime(p, q).value)
                report(out, ctx, p, i, "P is not Q-prime for Q = " + ctx.pl(q));
        }
    return out;
}

/// radical dichotomy for I-prime P.
inline PartialReport check_R_RAD(SweepContext& ctx) {
    PartialReport out;
    auto& lat = ctx.lat;
    for (int p : lat.proper_indices())
        for (int i = 0; i < lat.count(); ++i) {
            ++out.instances;
            if (!lat.i_prime(p, i).value) continue;
            int rad = lat.radical_of(lat.product(i, p));
            if (!lat.at(p).is_subset_of(lat.at(rad)) && !lat.at(rad).is_subset_of(lat.at(p)))
                report(out, ctx, p, i,
                       "neither P inside sqrt(IP) = " + ctx.pl(rad) + " nor the reverse");
        }
    return out;
}

/// sqrt(P) = sqrt(IP) for non-prime I-prime P.
inline PartialReport check_C_RADEQ(SweepContext& ctx) {
    PartialReport out;
    auto& lat = ctx.lat;
    for (int p : lat.proper_indices())
        for (int i = 0; i < lat.count(); ++i) {
            ++out.instances;
            if (!lat.i_prime(p, i).value || lat.prime(p).value) continue;
            int rp = lat.radical_of(p);
            int rip = lat.radical_of(lat.product(i, p));
            if (rp != rip)
                report(out, ctx, p, i,
                       "sqrt(P) = " + ctx.pl(rp) + " differs from sqrt(IP) = " + ctx.pl(rip));
        }
    return out;
}

/// non-prime I-prime P with IP inside P^3 has idempotent square: P^2 = P^3.
inline PartialReport check_R_IDEM(SweepContext& ctx) {
    PartialReport out;
    auto& lat = ctx.lat;
    for (int p : lat.proper_indices())
        for (int i = 0; i < lat.count(); ++i) {
            ++out.instances;
            if (!lat.i_prime(p, i).value || lat.prime(p).value) continue;
            int p2 = lat.power(p, 2), p3 = lat.power(p, 3);
            if (!lat.at(lat.product(i, p)).is_subset_of(lat.at(p3))) continue;
            if (p2 != p3)
                report(out, ctx, p, i,
                       "P^2 = " + ctx.pl(p2) + " differs from P^3 = " + ctx.pl(p3));
            else if (lat.power(p, 4) != p2)
                report(out, ctx, p, i, "P^2 is not idempotent");
        }
    return out;
}

/// weakly prime P of the left factor: P x R2 is I-prime whenever the stable
/// power intersection of P x R2 sits inside I(P x R2).
inline PartialReport check_T4_1(SweepContext& ctx) {
    PartialReport out;
    if (!ctx.prod) return out;
    auto& lat = ctx.lat;
    auto& pv = *ctx.prod;
    for (int p1 : pv.left->proper_indices()) {
        if (!pv.left->weakly_prime(p1).value) continue;
        int q = pv.embed(lat, p1, pv.right->unit_index());
        int q0 = lat.stable_intersection(q);
        for (int i = 0; i < lat.count(); ++i) {
            ++out.instances;
            if (!lat.at(q0).is_subset_of(lat.at(lat.product(i, q)))) continue;
            if (!lat.i_prime(q, i).value)
                report(out, ctx, q, i,
                       "P x R2 is not I-prime despite the power-intersection premise");
        }
    }
    return out;
}

/// the decomposition construction yields a verified witness whenever the
/// premise fires.
inline PartialReport check_T4_2(SweepContext& ctx) {
    PartialReport out;
    auto& lat = ctx.lat;
    std::unordered_map<int, DecompositionWitness> memo;
    for (int p : lat.proper_indices())
        for (int i = 0; i < lat.count(); ++i) {
            ++out.instances;
            if (!lat.i_prime(p, i).value) continue;
            if (!lat.at(lat.product(i, p)).is_subset_of(lat.at(lat.power(p, 3)))) continue;
            auto it = memo.find(p);
            if (it == memo.end())
                it = memo.emplace(p, decompose_unchecked(lat.at(p))).first;
            if (!it->second.ok) report(out, ctx, p, i, it->second.failure);
        }
    return out;
}

/// on rings with only trivial idempotents, I-prime with IP inside P^3 forces
/// weakly prime.
inline PartialReport check_C_INDEC(SweepContext& ctx) {
    PartialReport out;
    if (!ctx.indecomposable()) return out;
    auto& lat = ctx.lat;
    for (int p : lat.proper_indices())
        for (int i = 0; i < lat.count(); ++i) {
            ++out.instances;
            if (!lat.i_prime(p, i).value) continue;
            if (!lat.at(lat.product(i, p)).is_subset_of(lat.at(lat.power(p, 3)))) continue;
            if (!lat.weakly_prime(p).value)
                report(out, ctx, p, i, "P is I-prime with IP inside P^3 but not weakly prime");
        }
    return out;
}

/// prime <=> P^2-prime, checked on the finite fields of the family (the
/// finite integral domains); trivial by design and labeled so in the report.
inline PartialReport check_C_P2FIELD(SweepContext& ctx) {
    PartialReport out;
    if (!ctx.field()) return out;
    auto& lat = ctx.lat;
    for (int p : lat.proper_indices()) {
        ++out.instances;
        bool lhs = lat.prime(p).value;
        bool rhs = lat.i_prime(p, lat.power(p, 2)).value;
        if (lhs != rhs)
            report(out, ctx, p, lat.power(p, 2), "prime and P^2-prime disagree in a field");
    }
    return out;
}

/// principal (a) with (0:a) inside (a): I-prime for I(a) inside (a)^2 iff
/// prime.
inline PartialReport check_T_PRIN_1(SweepContext& ctx) {
    PartialReport out;
    auto& lat = ctx.lat;
    const Ring& r = *ctx.ring;
    const auto& units_b = ctx.unit_set();
    const auto& pidx = ctx.principal_index();
    for (int a = 0; a < r.size(); ++a) {
        if (units_b.test(a)) continue;
        int pa = pidx[static_cast<size_t>(a)];
        Bitset ann = colon_members(r, lat.at(lat.zero_index()).members(), a);
        if (!ann.is_subset_of(lat.at(pa).members())) continue;
        int pa2 = lat.power(pa, 2);
        for (int i = 0; i < lat.count(); ++i) {
            if (!lat.at(lat.product(i, pa)).is_subset_of(lat.at(pa2))) continue;
            ++out.instances;
            if (lat.i_prime(pa, i).value != lat.prime(pa).value)
                report(out, ctx, pa, i,
                       "(a) for a = " + r.label(a) + ": I-prime and prime disagree");
        }
    }
    return out;
}

/// quasi-local: principal (a) is I-prime for I(a) inside (a)^3 iff weakly
/// prime.
inline PartialReport check_T_PRIN_2(SweepContext& ctx) {
    PartialReport out;
    if (!ctx.quasi_local().quasi_local) return out;
    auto& lat = ctx.lat;
    const Ring& r = *ctx.ring;
    const auto& units_b = ctx.unit_set();
    const auto& pidx = ctx.principal_index();
    for (int a = 0; a < r.size(); ++a) {
        if (units_b.test(a)) continue;
        int pa = pidx[static_cast<size_t>(a)];
        int pa3 = lat.power(pa, 3);
        for (int i = 0; i < lat.count(); ++i) {
            if (!lat.at(lat.product(i, pa)).is_subset_of(lat.at(pa3))) continue;
            ++out.instances;
            if (lat.i_prime(pa, i).value != lat.weakly_prime(pa).value)
                report(out, ctx, pa, i,
                       "(a) for a = " + r.label(a) + ": I-prime and weakly prime disagree");
        }
    }
    return out;
}

/// quasi-local: (a) is m-prime iff a is irreducible, for nonzero non-unit a.
/// a = 0 is excluded: (0) is always vacuously m-prime while 0 need not be
/// irreducible outside domains, so the equivalence is read for the classical
/// irreducible candidates.
inline PartialReport check_T_PRIN_3(SweepContext& ctx) {
    PartialReport out;
    const auto& ql = ctx.quasi_local();
    if (!ql.quasi_local) return out;
    auto& lat = ctx.lat;
    const Ring& r = *ctx.ring;
    int m = lat.index_of(*ql.maximal);
    const auto& units_b = ctx.unit_set();
    const auto& pidx = ctx.principal_index();
    for (int a = 0; a < r.size(); ++a) {
        if (a == r.zero() || units_b.test(a)) continue;
        ++out.instances;
        int pa = pidx[static_cast<size_t>(a)];
        bool mprime = lat.i_prime(pa, m).value;
        bool irr = is_irreducible(Element{ctx.ring, a}).value;
        if (mprime != irr)
            report(out, ctx, pa, m,
                   "a = " + r.label(a) + ": m-prime = " + (mprime ? "true" : "false") +
                       " but irreducible = " + (irr ? "true" : "false"));
    }
    return out;
}

/// all five routes agree.
inline PartialReport check_T13(SweepContext& ctx) {
    PartialReport out;
    auto& lat = ctx.lat;
    for (int p : lat.proper_indices())
        for (int i = 0; i < lat.count(); ++i) {
            ++out.instances;
            const RouteSet& rs = lat.routes(p, i);
            if (!rs.agree())
                report(out, ctx, p, i,
                       std::string("routes disagree: definition=") +
                           (rs.definition ? "1" : "0") + " quotient=" + (rs.quotient ? "1" : "0") +
                           " colon_union=" + (rs.colon_union ? "1" : "0") + " colon_dichotomy=" +
                           (rs.colon_dichotomy ? "1" : "0") + " ideal_pairs=" +
                           (rs.ideal_pairs ? "1" : "0"));
        }
    return out;
}

/// P sqrt(IP) inside IP for non-prime I-prime P.
inline PartialReport check_C_PSQRT(SweepContext& ctx) {
    PartialReport out;
    auto& lat = ctx.lat;
    for (int p : lat.proper_indices())
        for (int i = 0; i < lat.count(); ++i) {
            ++out.instances;
            if (!lat.i_prime(p, i).value || lat.prime(p).value) continue;
            int ip = lat.product(i, p);
            int lhs = lat.product(p, lat.radical_of(ip));
            if (!lat.at(lhs).is_subset_of(lat.at(ip)))
                report(out, ctx, p, i,
                       "P*sqrt(IP) = " + ctx.pl(lhs) + " is not inside IP = " + ctx.pl(ip));
        }
    return out;
}

/// projection: P/J is (I+J)/J-prime in R/J for every J inside P, when P is
/// I-prime. J = <0> transports exactly (the projection is bijective).
inline PartialReport check_P14_QUOT(SweepContext& ctx) {
    PartialReport out;
    auto& lat = ctx.lat;
    for (int p : lat.proper_indices())
        for (int j = 0; j < lat.count(); ++j) {
            if (!lat.at(j).is_subset_of(lat.at(p))) continue;
            for (int i = 0; i < lat.count(); ++i) {
                ++out.instances;
                if (!lat.i_prime(p, i).value) continue;
                if (j == lat.zero_index()) continue;  // identity projection
                int isum = lat.sum(i, j);
                long long key = (static_cast<long long>(j) * lat.count() + p) * lat.count() + isum;
                auto it = ctx.quotient_iprime_memo.find(key);
                if (it == ctx.quotient_iprime_memo.end()) {
                    const Quotient& q = lat.quotient_by(j);
                    Ideal img_p = image_in_quotient(lat.at(p), q);
                    Ideal img_i = image_in_quotient(lat.at(isum), q);
                    bool v = is_i_prime(img_p, img_i).value;
                    it = ctx.quotient_iprime_memo.emplace(key, v).first;
                }
                if (!it->second)
                    report(out, ctx, p, i,
                           "P/J is not (I+J)/J-prime in R/J for J = " + ctx.pl(j));
            }
        }
    return out;
}

inline std::string set_label(LocalizationStudy& st) {
    std::string out;
    const Ring& r = *st.loc.base;
    auto mem = st.loc.set.member_list();
    for (size_t k = 0; k < mem.size(); ++k) {
        if (k) out += ",";
        out += r.label(mem[k]);
    }
    return out;
}

/// localization: S^{-1}P is S^{-1}I-prime when P misses S, and contraction
/// recovers P when S^{-1}P differs from S^{-1}(IP). Localizations whose
/// canonical map is bijective transport both claims exactly; the check is
/// performed in the localized ring otherwise.
inline PartialReport check_P14_LOC(SweepContext& ctx) {
    PartialReport out;
    ctx.build_localizations();
    auto& lat = ctx.lat;
    for (auto& study_ptr : ctx.localizations) {
        auto& st = *study_ptr;
        for (int p : lat.proper_indices()) {
            bool disjoint = true;
            for (int s : st.loc.set.member_list())
                if (lat.at(p).contains(s)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            for (int i = 0; i < lat.count(); ++i) {
                ++out.instances;
                if (!lat.i_prime(p, i).value) continue;
                if (st.bijective) continue;  // exact transport of both claims
                int lp = st.image_of(lat, p);
                int li = st.image_of(lat, i);
                int lip = st.image_of(lat, lat.product(i, p));
                if (!st.localized_i_prime(lp, li)) {
                    report(out, ctx, p, i,
                           "S^{-1}P is not S^{-1}I-prime for S = {" + set_label(st) + "}");
                    continue;
                }
                if (lp != lip) {
                    if (!(st.contraction(lp) == lat.at(p).members()))
                        report(out, ctx, p, i,
                               "contraction of S^{-1}P does not recover P for S = {" +
                                   set_label(st) + "}");
                }
            }
        }
    }
    return out;
}

/// product trichotomy: predicted type is nonzero exactly when the direct
/// scan says I-prime, for every I = I1 x I2 and every ideal of the product.
inline PartialReport check_T15(SweepContext& ctx) {
    PartialReport out;
    if (!ctx.prod) return out;
    auto& lat = ctx.lat;
    auto& pv = *ctx.prod;
    for (int i = 0; i < lat.count(); ++i) {
        auto [i1, i2] = pv.split(lat, i);
        if (pv.embed(lat, i1, i2) != i) {
            report(out, ctx, i, -1, "ideal of the product is not a product of ideals");
            continue;
        }
        for (int q = 0; q < lat.count(); ++q) {
            ++out.instances;
            auto [p1, p2] = pv.split(lat, q);
            if (pv.embed(lat, p1, p2) != q) {
                report(out, ctx, q, i, "ideal of the product is not a product of ideals");
                continue;
            }
            int tag = predicted_product_type(*pv.left, *pv.right, p1, p2, i1, i2);
            bool direct = lat.i_prime(q, i).value;
            if ((tag != 0) != direct)
                report(out, ctx, q, i,
                       "predicted type " + std::to_string(tag) + " but direct check says " +
                           (direct ? "I-prime" : "not I-prime"));
        }
    }
    return out;
}

inline PartialReport run_checker(TheoremId id, SweepContext& ctx) {
    switch (id) {
        case TheoremId::T1_1: return check_T1_1(ctx);
        case TheoremId::T1_2: return check_T1_2(ctx);
        case TheoremId::L2: return check_L2(ctx);
        case TheoremId::C_CAP: return check_C_CAP(ctx);
        case TheoremId::R_RAD: return check_R_RAD(ctx);
        case TheoremId::C_RADEQ: return check_C_RADEQ(ctx);
        case TheoremId::R_IDEM: return check_R_IDEM(ctx);
        case TheoremId::T4_1: return check_T4_1(ctx);
        case TheoremId::T4_2: return check_T4_2(ctx);
        case TheoremId::C_INDEC: return check_C_INDEC(ctx);
        case TheoremId::C_P2FIELD: return check_C_P2FIELD(ctx);
        case TheoremId::T_PRIN_1: return check_T_PRIN_1(ctx);
        case TheoremId::T_PRIN_2: return check_T_PRIN_2(ctx);
        case TheoremId::T_PRIN_3: return check_T_PRIN_3(ctx);
        case TheoremId::T13: return check_T13(ctx);
        case TheoremId::C_PSQRT: return check_C_PSQRT(ctx);
        case TheoremId::P14_QUOT: return check_P14_QUOT(ctx);
        case TheoremId::P14_LOC: return check_P14_LOC(ctx);
        case TheoremId::T15: return check_T15(ctx);
    }
    fail(ErrorKind::InvalidArgument, "unknown theorem id");
}

}  // namespace detail

struct SweepOptions {
    int budget = config::ideal_budget();
    int jobs = 0;  // 0 = hardware concurrency
};

/// Runs every requested checker over the family, one shared context per
/// family member (so ideal lattices and predicate caches are reused across
/// theorems). Members run in parallel; reports merge in family order.
inline std::vector<TheoremReport> run_sweeps(const std::vector<TheoremId>& ids,
                                             const std::vector<RingSpec>& family,
                                             const std::string& family_desc,
                                             const SweepOptions& opt = {}) {
    struct MemberResult {
        std::vector<detail::PartialReport> parts;  // per id
        std::string error;
        std::vector<double> elapsed_ms;
    };
    std::vector<MemberResult> results(family.size());

    auto work = [&](size_t m) {
        MemberResult& res = results[m];
        res.parts.resize(ids.size());
        res.elapsed_ms.assign(ids.size(), 0.0);
        try {
            RingPtr ring = realize(family[m]);
            detail::SweepContext ctx(family[m], ring, opt.budget);
            for (size_t k = 0; k < ids.size(); ++k) {
                auto t0 = std::chrono::steady_clock::now();
                res.parts[k] = detail::run_checker(ids[k], ctx);
                res.elapsed_ms[k] =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                        .count();
            }
        } catch (const Error& e) {
            res.error = std::string(error_kind_name(e.kind())) + ": " + e.what();
        }
    };

    int jobs = opt.jobs > 0 ? opt.jobs
                            : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (jobs <= 1 || family.size() <= 1) {
        for (size_t m = 0; m < family.size(); ++m) work(m);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    size_t m = next.fetch_add(1);
                    if (m >= family.size()) return;
                    work(m);
                }
            });
        for (auto& t : pool) t.join();
    }

    std::vector<TheoremReport> reports;
    for (size_t k = 0; k < ids.size(); ++k) {
        TheoremReport rep;
        rep.id = ids[k];
        rep.family = family_desc;
        for (size_t m = 0; m < family.size(); ++m) {
            if (!results[m].error.empty()) {
                std::string note = print_ring_spec(family[m]) + ": " + results[m].error;
                if (std::find(rep.notes.begin(), rep.notes.end(), note) == rep.notes.end())
                    rep.notes.push_back(note);
                continue;
            }
            rep.instances += results[m].parts[k].instances;
            for (auto& c : results[m].parts[k].cex) rep.counterexamples.push_back(c);
            rep.elapsed_ms += results[m].elapsed_ms[k];
        }
        rep.passed = rep.counterexamples.empty();
        rep.vacuous = rep.instances == 0;
        reports.push_back(std::move(rep));
    }
    return reports;
}

inline TheoremReport verify(TheoremId id, const std::vector<RingSpec>& family,
                            const std::string& family_desc = "custom",
                            const SweepOptions& opt = {}) {
    return run_sweeps({id}, family, family_desc, opt).front();
}

}  // namespace ringlab
