#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/quotient.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct PairWitness {
    int a = -1, b = -1;
    std::string a_label, b_label;
};

struct PredicateResult {
    bool value = false;
    std::optional<PairWitness> witness;  // lexicographically smallest violating pair
    bool vacuous = false;                // scan region was empty
    explicit operator bool() const { return value; }
};

namespace detail {

/// Lexicographically smallest (a,b) with a,b outside P and a*b inside the
/// region, or nullopt. All the generalized-primality predicates are this
/// scan with different regions.
inline std::optional<PairWitness> find_violation(const Ring& r, const Bitset& p,
                                                 const Bitset& region) {
    if (region.none()) return std::nullopt;
    for (int a = 0; a < r.size(); ++a) {
        if (p.test(a)) continue;
        for (int b = 0; b < r.size(); ++b) {
            if (p.test(b)) continue;
            if (region.test(r.mul(a, b)))
                return PairWitness{a, b, r.label(a), r.label(b)};
        }
    }
    return std::nullopt;
}

inline PredicateResult region_predicate(const Ideal& p, const Bitset& region) {
    PredicateResult out;
    out.vacuous = region.none();
    if (!p.is_proper()) {
        out.value = false;
        return out;
    }
    out.witness = find_violation(*p.ring(), p.members(), region);
    out.value = !out.witness.has_value();
    return out;
}

}  // namespace detail

/// ab in P implies a in P or b in P. Improper P is not prime.
inline PredicateResult is_prime(const Ideal& p) {
    return detail::region_predicate(p, p.members());
}

/// ab in P - {0} implies a in P or b in P.
inline PredicateResult is_weakly_prime(const Ideal& p) {
    Bitset region = p.members();
    region.reset(p.ring()->zero());
    return detail::region_predicate(p, region);
}

/// ab in P - P^n implies a in P or b in P (n >= 2).
inline PredicateResult is_almost_prime(const Ideal& p, int n) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "almost-prime order must be >= 2");
    Bitset region = and_not(p.members(), ideal_power(p, n).members());
    return detail::region_predicate(p, region);
}

/// ab in P - IP implies a in P or b in P. The vacuous flag is set when
/// P - IP is empty (e.g. IP = P), which makes the implication hold with no
/// instances.
inline PredicateResult is_i_prime(const Ideal& p, const Ideal& i) {
    require_same_ring(p.ring(), i.ring());
    Bitset region = and_not(p.members(), ideal_product(i, p).members());
    return detail::region_predicate(p, region);
}

/// Quotient route: P is I-prime iff P/IP is weakly prime in R/IP.
inline bool is_i_prime_via_quotient(const Ideal& p, const Ideal& i) {
    require_same_ring(p.ring(), i.ring());
    if (!p.is_proper()) return false;
    Ideal ip = ideal_product(i, p);
    Quotient q = build_quotient(p.ring(), ip);
    Ideal image = image_in_quotient(p, q);
    return is_weakly_prime(image).value;
}

/// Characterization: for every x outside P, (P:x) = P ∪ (IP:x).
inline bool colon_union_holds(const Ideal& p, const Ideal& i) {
    require_same_ring(p.ring(), i.ring());
    if (!p.is_proper()) return false;
    const Ring& r = *p.ring();
    Bitset ip = ideal_product(i, p).members();
    for (int x = 0; x < r.size(); ++x) {
        if (p.contains(x)) continue;
        Bitset lhs = colon_members(r, p.members(), x);
        Bitset rhs = p.members() | colon_members(r, ip, x);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

/// Characterization: for every x outside P, (P:x) = P or (P:x) = (IP:x).
inline bool colon_dichotomy_holds(const Ideal& p, const Ideal& i) {
    require_same_ring(p.ring(), i.ring());
    if (!p.is_proper()) return false;
    const Ring& r = *p.ring();
    Bitset ip = ideal_product(i, p).members();
    for (int x = 0; x < r.size(); ++x) {
        if (p.contains(x)) continue;
        Bitset lhs = colon_members(r, p.members(), x);
        if (lhs == p.members()) continue;
        if (!(lhs == colon_members(r, ip, x))) return false;
    }
    return true;
}

/// Characterization over ideal pairs: JK ⊆ P and JK ⊄ IP imply J ⊆ P or
/// K ⊆ P, swept over all ideals of the ring (budget-bounded enumeration).
inline bool ideal_pairs_condition_holds(const Ideal& p, const Ideal& i,
                                        int budget = config::ideal_budget()) {
    require_same_ring(p.ring(), i.ring());
    if (!p.is_proper()) return false;
    Bitset ip = ideal_product(i, p).members();
    auto ideals = enumerate_ideals(p.ring(), budget);
    for (const auto& j : ideals)
        for (const auto& k : ideals) {
            Bitset jk = ideal_product(j, k).members();
            if (!jk.is_subset_of(p.members())) continue;
            if (jk.is_subset_of(ip)) continue;
            if (!j.is_subset_of(p) && !k.is_subset_of(p)) return false;
        }
    return true;
}

/// a = xy implies x in (a) or y in (a). Units are rejected (structured
/// error); in particular the zero ring has no irreducible candidates.
inline PredicateResult is_irreducible(const Element& a) {
    const Ring& r = *a.ring;
    for (int b = 0; b < r.size(); ++b)
        if (r.mul(a.index, b) == r.one())
            fail(ErrorKind::InvalidArgument,
                 "irreducibility is undefined for the unit " + r.label(a.index));
    Bitset gen(r.size());
    for (int x = 0; x < r.size(); ++x) gen.set(r.mul(x, a.index));
    PredicateResult out;
    out.value = true;
    for (int x = 0; x < r.size() && out.value; ++x) {
        if (gen.test(x)) continue;
        for (int y = 0; y < r.size(); ++y) {
            if (gen.test(y)) continue;
            if (r.mul(x, y) == a.index) {
                out.value = false;
                out.witness = PairWitness{x, y, r.label(x), r.label(y)};
                break;
            }
        }
    }
    return out;
}

/// Every flag the predicate family produces for one (P, I) pair. The five
/// I-prime routes are computed independently; they must agree (asserted by
/// the sweeps, reported as routes_agree here).
struct ClassificationReport {
    std::string ring_spec;
    std::vector<std::string> p_generators, i_generators;
    std::vector<int> p_members, i_members;

    bool proper = false;
    bool prime = false;
    bool weakly_prime = false;
    std::map<int, bool> almost_prime;               // n in 2..5
    std::map<int, PairWitness> almost_prime_witness;  // for false entries
    bool i_prime = false;
    bool vacuous = false;
    bool p_squared_zero = false;

    std::optional<PairWitness> prime_witness, weakly_prime_witness, i_prime_witness;

    bool route_definition = false;
    bool route_quotient = false;
    bool route_colon_union = false;
    bool route_colon_dichotomy = false;
    bool route_ideal_pairs = false;
    bool routes_agree = false;
};

inline ClassificationReport classify(const Ideal& p, const Ideal& i,
                                     int budget = config::ideal_budget()) {
    require_same_ring(p.ring(), i.ring());
    const Ring& r = *p.ring();

    ClassificationReport rep;
    rep.ring_spec = r.spec_string();
    for (int g : p.generators()) rep.p_generators.push_back(r.label(g));
    for (int g : i.generators()) rep.i_generators.push_back(r.label(g));
    if (rep.p_generators.empty()) rep.p_generators.push_back(r.label(r.zero()));
    if (rep.i_generators.empty()) rep.i_generators.push_back(r.label(r.zero()));
    rep.p_members = p.member_list();
    rep.i_members = i.member_list();

    rep.proper = p.is_proper();
    auto pr = is_prime(p);
    rep.prime = pr.value;
    rep.prime_witness = pr.witness;
    auto wk = is_weakly_prime(p);
    rep.weakly_prime = wk.value;
    rep.weakly_prime_witness = wk.witness;
    for (int n = 2; n <= 5; ++n) {
        auto ap = is_almost_prime(p, n);
        rep.almost_prime[n] = ap.value;
        if (!ap.value && ap.witness) rep.almost_prime_witness[n] = *ap.witness;
    }
    auto ip = is_i_prime(p, i);
    rep.i_prime = ip.value;
    rep.vacuous = ip.vacuous;
    rep.i_prime_witness = ip.witness;
    rep.p_squared_zero = ideal_power(p, 2).is_zero();

    rep.route_definition = ip.value;
    rep.route_quotient = is_i_prime_via_quotient(p, i);
    rep.route_colon_union = colon_union_holds(p, i);
    rep.route_colon_dichotomy = colon_dichotomy_holds(p, i);
    rep.route_ideal_pairs = ideal_pairs_condition_holds(p, i, budget);
    rep.routes_agree = rep.route_definition == rep.route_quotient &&
                       rep.route_definition == rep.route_colon_union &&
                       rep.route_definition == rep.route_colon_dichotomy &&
                       rep.route_definition == rep.route_ideal_pairs;
    return rep;
}

}  // namespace ringlab
