#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/primality.hpp"
#include "ringlab/quotient.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Five independently computed answers to "is P I-prime?". Agreement across
/// all of them is itself a checked property; a disagreement is reportable
/// data, never silently repaired.
struct RouteSet {
    bool definition = false;
    bool quotient = false;
    bool colon_union = false;
    bool colon_dichotomy = false;
    bool ideal_pairs = false;
    bool agree() const {
        return definition == quotient && definition == colon_union &&
               definition == colon_dichotomy && definition == ideal_pairs;
    }
};

/// The full ideal lattice of one ring with memoized ideal arithmetic and
/// predicate evaluations. All sweeps over (P, I) pairs go through this so
/// repeated subexpressions (products, powers, radicals, route checks) are
/// computed once. Everything is keyed by the ideal's index in the canonical
/// enumeration order.
class IdealLattice {
public:
    explicit IdealLattice(RingPtr ring, int budget = config::ideal_budget())
        : ring_(std::move(ring)) {
        ideals_ = enumerate_ideals(ring_, budget);
        for (int k = 0; k < static_cast<int>(ideals_.size()); ++k) {
            index_.emplace(ideals_[static_cast<size_t>(k)].members(), k);
            if (ideals_[static_cast<size_t>(k)].is_proper()) proper_.push_back(k);
            if (ideals_[static_cast<size_t>(k)].is_zero()) zero_idx_ = k;
            if (!ideals_[static_cast<size_t>(k)].is_proper()) unit_idx_ = k;
        }
        prime_.resize(ideals_.size());
        weakly_.resize(ideals_.size());
        radical_.assign(ideals_.size(), -1);
        stable_.assign(ideals_.size(), -1);
        comp_.resize(ideals_.size());
    }

    const RingPtr& ring() const { return ring_; }
    int count() const { return static_cast<int>(ideals_.size()); }
    const Ideal& at(int k) const { return ideals_[static_cast<size_t>(k)]; }
    const std::vector<int>& proper_indices() const { return proper_; }
    int zero_index() const { return zero_idx_; }
    int unit_index() const { return unit_idx_; }

    int index_of(const Bitset& members) const {
        auto it = index_.find(members);
        if (it == index_.end())
            fail(ErrorKind::InvalidArgument, "set is not an ideal of this ring");
        return it->second;
    }
    int index_of(const Ideal& p) const { return index_of(p.members()); }

    int product(int a, int b) {
        if (a > b) std::swap(a, b);
        if (a == zero_idx_) return zero_idx_;
        if (b == unit_idx_) return a;
        auto key = pair_key(a, b);
        auto it = prod_.find(key);
        if (it != prod_.end()) return it->second;
        int r = index_of(fast_product(ideals_[static_cast<size_t>(a)],
                                      ideals_[static_cast<size_t>(b)]));
        prod_.emplace(key, r);
        return r;
    }

    int sum(int a, int b) {
        if (a > b) std::swap(a, b);
        if (ideals_[static_cast<size_t>(a)].is_subset_of(ideals_[static_cast<size_t>(b)])) return b;
        if (ideals_[static_cast<size_t>(b)].is_subset_of(ideals_[static_cast<size_t>(a)])) return a;
        auto key = pair_key(a, b);
        auto it = sum_.find(key);
        if (it != sum_.end()) return it->second;
        int r = index_of(ideal_sum(ideals_[static_cast<size_t>(a)], ideals_[static_cast<size_t>(b)]));
        sum_.emplace(key, r);
        return r;
    }

    int intersect(int a, int b) {
        return index_of(ideals_[static_cast<size_t>(a)].members() &
                        ideals_[static_cast<size_t>(b)].members());
    }

    int power(int a, int k) {
        int acc = a;
        for (int i = 1; i < k; ++i) acc = product(acc, a);
        return acc;
    }

    /// Index of the stabilized intersection of all powers of a.
    int stable_intersection(int a) {
        int& memo = stable_[static_cast<size_t>(a)];
        if (memo >= 0) return memo;
        int cur = a;
        for (;;) {
            int nxt = product(cur, a);
            if (nxt == cur) break;
            cur = nxt;
        }
        return memo = cur;
    }

    int radical_of(int a) {
        int& memo = radical_[static_cast<size_t>(a)];
        if (memo >= 0) return memo;
        return memo = index_of(radical(ideals_[static_cast<size_t>(a)]));
    }

    const PredicateResult& prime(int p) {
        auto& memo = prime_[static_cast<size_t>(p)];
        if (!memo) memo = is_prime(ideals_[static_cast<size_t>(p)]);
        return *memo;
    }

    const PredicateResult& weakly_prime(int p) {
        auto& memo = weakly_[static_cast<size_t>(p)];
        if (!memo) memo = is_weakly_prime(ideals_[static_cast<size_t>(p)]);
        return *memo;
    }

    /// Definitional I-prime check; the result depends on (P, IP) only, so it
    /// is keyed that way and shared across all I with the same product.
    const PredicateResult& i_prime(int p, int i) { return i_prime_by_region(p, product(i, p)); }

    const PredicateResult& i_prime_by_region(int p, int ip) {
        auto key = pair_key(p, ip);
        auto it = iprime_.find(key);
        if (it != iprime_.end()) return it->second;
        const Ideal& P = ideals_[static_cast<size_t>(p)];
        const Ideal& IP = ideals_[static_cast<size_t>(ip)];
        PredicateResult res;
        Bitset region = and_not(P.members(), IP.members());
        res.vacuous = region.none();
        if (P.is_proper())
            res.witness = detail::find_violation(*ring_, P.members(), region);
        res.value = P.is_proper() && !res.witness.has_value();
        return iprime_.emplace(key, std::move(res)).first->second;
    }

    /// All five routes for (P, I); also keyed by (P, IP).
    const RouteSet& routes(int p, int i) {
        int ip = product(i, p);
        auto key = pair_key(p, ip);
        auto it = routes_.find(key);
        if (it != routes_.end()) return it->second;
        RouteSet rs;
        const Ideal& P = ideals_[static_cast<size_t>(p)];
        const Ideal& IP = ideals_[static_cast<size_t>(ip)];
        rs.definition = i_prime_by_region(p, ip).value;
        rs.quotient = quotient_route(p, ip);
        if (P.is_proper()) {
            rs.colon_union = colon_union_by_region(P, IP);
            rs.colon_dichotomy = colon_dichotomy_by_region(P, IP);
            rs.ideal_pairs = ideal_pairs_by_region(p, ip);
        }
        return routes_.emplace(key, rs).first->second;
    }

    /// P is weakly prime in R/IP — built and scanned in the quotient.
    bool quotient_route(int p, int ip) {
        const Ideal& P = ideals_[static_cast<size_t>(p)];
        if (!P.is_proper()) return false;
        const Quotient& q = quotient_by(ip);
        return is_weakly_prime(image_in_quotient(P, q)).value;
    }

    const Quotient& quotient_by(int j) {
        auto it = quot_.find(j);
        if (it != quot_.end()) return it->second;
        return quot_.emplace(j, build_quotient(ring_, ideals_[static_cast<size_t>(j)])).first->second;
    }

    /// Elements outside the ideal, ascending (scan order for witnesses).
    const std::vector<int>& complement(int p) {
        auto& memo = comp_[static_cast<size_t>(p)];
        if (!memo) {
            std::vector<int> v;
            for (int x = 0; x < ring_->size(); ++x)
                if (!ideals_[static_cast<size_t>(p)].contains(x)) v.push_back(x);
            memo = std::move(v);
        }
        return *memo;
    }

private:
    long long pair_key(int a, int b) const {
        return static_cast<long long>(a) * static_cast<long long>(count()) + b;
    }

    /// IP computed as the ideal sum of g·P over the recorded generators g of
    /// I; each g·P = {g·p} is already an ideal, so only sums are closed.
    Ideal fast_product(const Ideal& a, const Ideal& b) {
        const Ring& r = *ring_;
        std::vector<int> gens = a.generators();
        if (gens.empty() && !a.is_zero()) gens = a.member_list();
        Bitset acc(r.size());
        acc.set(r.zero());
        std::vector<int> acc_list{r.zero()};
        auto blist = b.member_list();
        for (int g : gens) {
            Bitset gb(r.size());
            std::vector<int> gb_list;
            for (int y : blist) {
                int v = r.mul(g, y);
                if (!gb.test(v)) {
                    gb.set(v);
                    gb_list.push_back(v);
                }
            }
            Bitset nxt(r.size());
            std::vector<int> nxt_list;
            for (int u : acc_list)
                for (int v : gb_list) {
                    int s = r.add(u, v);
                    if (!nxt.test(s)) {
                        nxt.set(s);
                        nxt_list.push_back(s);
                    }
                }
            acc = std::move(nxt);
            acc_list = std::move(nxt_list);
        }
        return Ideal::trusted(ring_, std::move(acc));
    }

    bool colon_union_by_region(const Ideal& P, const Ideal& IP) {
        const Ring& r = *ring_;
        for (int x = 0; x < r.size(); ++x) {
            if (P.contains(x)) continue;
            Bitset lhs = colon_members(r, P.members(), x);
            Bitset rhs = P.members() | colon_members(r, IP.members(), x);
            if (!(lhs == rhs)) return false;
        }
        return true;
    }

    bool colon_dichotomy_by_region(const Ideal& P, const Ideal& IP) {
        const Ring& r = *ring_;
        for (int x = 0; x < r.size(); ++x) {
            if (P.contains(x)) continue;
            Bitset lhs = colon_members(r, P.members(), x);
            if (lhs == P.members()) continue;
            if (!(lhs == colon_members(r, IP.members(), x))) return false;
        }
        return true;
    }

    bool ideal_pairs_by_region(int p, int ip) {
        const Bitset& pm = ideals_[static_cast<size_t>(p)].members();
        const Bitset& ipm = ideals_[static_cast<size_t>(ip)].members();
        for (int j = 0; j < count(); ++j)
            for (int k = j; k < count(); ++k) {
                const Bitset& jk = ideals_[static_cast<size_t>(product(j, k))].members();
                if (!jk.is_subset_of(pm)) continue;
                if (jk.is_subset_of(ipm)) continue;
                if (!ideals_[static_cast<size_t>(j)].is_subset_of(ideals_[static_cast<size_t>(p)]) &&
                    !ideals_[static_cast<size_t>(k)].is_subset_of(ideals_[static_cast<size_t>(p)]))
                    return false;
            }
        return true;
    }

    RingPtr ring_;
    std::vector<Ideal> ideals_;
    std::unordered_map<Bitset, int, BitsetHash> index_;
    std::vector<int> proper_;
    int zero_idx_ = 0;
    int unit_idx_ = 0;

    std::unordered_map<long long, int> prod_, sum_;
    std::unordered_map<long long, PredicateResult> iprime_;
    std::unordered_map<long long, RouteSet> routes_;
    std::unordered_map<int, Quotient> quot_;
    std::vector<std::optional<PredicateResult>> prime_, weakly_;
    std::vector<int> radical_, stable_;
    std::vector<std::optional<std::vector<int>>> comp_;
};

}  // namespace ringlab
