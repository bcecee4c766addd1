#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/error.hpp"
#include "ringlab/lattice.hpp"
#include "ringlab/parse.hpp"
#include "ringlab/spec.hpp"

namespace ringlab {

/// Flags the search expression language can reference for a (ring, P, I)
/// triple. Each atom is evaluated lazily so cheap expressions stay cheap.
enum class Flag {
    Proper,
    Prime,
    WeaklyPrime,
    AlmostPrime2,
    AlmostPrime3,
    AlmostPrime4,
    AlmostPrime5,
    IPrime,
    Vacuous,
    PSquaredZero,
    RouteDefinition,
    RouteQuotient,
    RouteColonUnion,
    RouteColonDichotomy,
    RouteIdealPairs,
    RoutesAgree,
};

inline std::optional<Flag> flag_from_name(std::string name) {
    for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name == "proper") return Flag::Proper;
    if (name == "prime") return Flag::Prime;
    if (name == "weakly_prime" || name == "weakly") return Flag::WeaklyPrime;
    if (name == "almost_prime_2" || name == "almost_prime") return Flag::AlmostPrime2;
    if (name == "almost_prime_3") return Flag::AlmostPrime3;
    if (name == "almost_prime_4") return Flag::AlmostPrime4;
    if (name == "almost_prime_5") return Flag::AlmostPrime5;
    if (name == "i_prime") return Flag::IPrime;
    if (name == "vacuous") return Flag::Vacuous;
    if (name == "p^2=0" || name == "p2_zero" || name == "p_squared_zero" || name == "p\xc2\xb2=0")
        return Flag::PSquaredZero;
    if (name == "definition") return Flag::RouteDefinition;
    if (name == "quotient") return Flag::RouteQuotient;
    if (name == "colon_union") return Flag::RouteColonUnion;
    if (name == "colon_dichotomy") return Flag::RouteColonDichotomy;
    if (name == "ideal_pairs") return Flag::RouteIdealPairs;
    if (name == "routes_agree") return Flag::RoutesAgree;
    return std::nullopt;
}

namespace detail {

struct FlagExpr {
    enum class Op { Atom, Not, And, Or } op = Op::Atom;
    Flag flag = Flag::Proper;
    std::unique_ptr<FlagExpr> lhs, rhs;
};

/// expr := or ; or := and ('|' and)* ; and := unary ('&' unary)* ;
/// unary := '!' unary | '(' expr ')' | atom
class FlagParser {
public:
    explicit FlagParser(const std::string& text) : s_(text) {}

    std::unique_ptr<FlagExpr> parse() {
        auto e = parse_or();
        skip_ws();
        if (pos_ < s_.size())
            fail(ErrorKind::ParseError, "trailing input at byte " + std::to_string(pos_),
                 static_cast<long>(pos_));
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool try_take(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::unique_ptr<FlagExpr> parse_or() {
        auto lhs = parse_and();
        while (try_take('|')) {
            auto node = std::make_unique<FlagExpr>();
            node->op = FlagExpr::Op::Or;
            node->lhs = std::move(lhs);
            node->rhs = parse_and();
            lhs = std::move(node);
        }
        return lhs;
    }
    std::unique_ptr<FlagExpr> parse_and() {
        auto lhs = parse_unary();
        while (try_take('&')) {
            auto node = std::make_unique<FlagExpr>();
            node->op = FlagExpr::Op::And;
            node->lhs = std::move(lhs);
            node->rhs = parse_unary();
            lhs = std::move(node);
        }
        return lhs;
    }
    std::unique_ptr<FlagExpr> parse_unary() {
        if (try_take('!')) {
            auto node = std::make_unique<FlagExpr>();
            node->op = FlagExpr::Op::Not;
            node->lhs = parse_unary();
            return node;
        }
        if (try_take('(')) {
            auto e = parse_or();
            skip_ws();
            if (!try_take(')'))
                fail(ErrorKind::ParseError, "expected ')' at byte " + std::to_string(pos_),
                     static_cast<long>(pos_));
            return e;
        }
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
               s_[pos_] != '&' && s_[pos_] != '|' && s_[pos_] != '(' && s_[pos_] != ')' &&
               s_[pos_] != '!')
            ++pos_;
        if (pos_ == start)
            fail(ErrorKind::ParseError, "expected a flag name at byte " + std::to_string(start),
                 static_cast<long>(start));
        std::string name = s_.substr(start, pos_ - start);
        auto f = flag_from_name(name);
        if (!f)
            fail(ErrorKind::ParseError,
                 "unknown flag '" + name + "' at byte " + std::to_string(start),
                 static_cast<long>(start));
        auto node = std::make_unique<FlagExpr>();
        node->op = FlagExpr::Op::Atom;
        node->flag = *f;
        return node;
    }

    const std::string& s_;
    size_t pos_ = 0;
};

/// Lazily evaluated flags for one (P, I) pair against a shared lattice.
struct LazyFlags {
    IdealLattice& lat;
    int p, i;

    bool get(Flag f) {
        switch (f) {
            case Flag::Proper: return lat.at(p).is_proper();
            case Flag::Prime: return lat.prime(p).value;
            case Flag::WeaklyPrime: return lat.weakly_prime(p).value;
            case Flag::AlmostPrime2: return almost(2);
            case Flag::AlmostPrime3: return almost(3);
            case Flag::AlmostPrime4: return almost(4);
            case Flag::AlmostPrime5: return almost(5);
            case Flag::IPrime: return lat.i_prime(p, i).value;
            case Flag::Vacuous: return lat.i_prime(p, i).vacuous;
            case Flag::PSquaredZero: return lat.power(p, 2) == lat.zero_index();
            case Flag::RouteDefinition: return lat.routes(p, i).definition;
            case Flag::RouteQuotient: return lat.routes(p, i).quotient;
            case Flag::RouteColonUnion: return lat.routes(p, i).colon_union;
            case Flag::RouteColonDichotomy: return lat.routes(p, i).colon_dichotomy;
            case Flag::RouteIdealPairs: return lat.routes(p, i).ideal_pairs;
            case Flag::RoutesAgree: return lat.routes(p, i).agree();
        }
        return false;
    }
    bool almost(int n) { return lat.i_prime_by_region(p, lat.power(p, n)).value; }

    bool eval(const FlagExpr& e) {
        switch (e.op) {
            case FlagExpr::Op::Atom: return get(e.flag);
            case FlagExpr::Op::Not: return !eval(*e.lhs);
            case FlagExpr::Op::And: return eval(*e.lhs) && eval(*e.rhs);
            case FlagExpr::Op::Or: return eval(*e.lhs) || eval(*e.rhs);
        }
        return false;
    }
};

}  // namespace detail

struct SearchHit {
    std::string ring;
    std::string p;
    std::string i;
};

/// All (ring, P, I) triples over the family whose flags satisfy the
/// expression, in deterministic (family, P, I) order, capped by the budget.
inline std::vector<SearchHit> search_counterexamples(const std::string& expression,
                                                     const std::vector<RingSpec>& family,
                                                     long budget = 100,
                                                     int ideal_budget = config::ideal_budget()) {
    detail::FlagParser parser(expression);
    auto expr = parser.parse();

    std::vector<SearchHit> hits;
    for (const auto& spec : family) {
        if (static_cast<long>(hits.size()) >= budget) break;
        RingPtr ring = realize(spec);
        IdealLattice lat(ring, ideal_budget);
        for (int p = 0; p < lat.count() && static_cast<long>(hits.size()) < budget; ++p)
            for (int i = 0; i < lat.count() && static_cast<long>(hits.size()) < budget; ++i) {
                detail::LazyFlags flags{lat, p, i};
                if (flags.eval(*expr))
                    hits.push_back(
                        {ring->spec_string(), ideal_literal(lat.at(p)), ideal_literal(lat.at(i))});
            }
    }
    return hits;
}

}  // namespace ringlab
