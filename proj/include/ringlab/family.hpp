#pragma once

#include <string>
#include <vector>

#include "ringlab/error.hpp"
#include "ringlab/parse.hpp"
#include "ringlab/spec.hpp"

namespace ringlab {

namespace detail {

inline bool is_prime_number(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long parse_family_nat(const std::string& tok, size_t& pos) {
    if (pos >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[pos])))
        fail(ErrorKind::ParseError, "expected a number in family token '" + tok + "'",
             static_cast<long>(pos));
    long v = 0;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
        v = v * 10 + (tok[pos++] - '0');
    return v;
}

}  // namespace detail

/// "Zn:a..b" — the rings Z_a .. Z_b.
inline std::vector<RingSpec> family_zn_range(long a, long b) {
    std::vector<RingSpec> out;
    for (long n = a; n <= b; ++n) out.push_back(RingSpec::zn(n));
    return out;
}

/// "ZmxZn:<=k" — ordered pairs Z_m x Z_n with m, n >= 2 and m*n <= k.
inline std::vector<RingSpec> family_products_up_to(long k) {
    std::vector<RingSpec> out;
    for (long m = 2; m * 2 <= k; ++m)
        for (long n = 2; m * n <= k; ++n)
            out.push_back(RingSpec::product(RingSpec::zn(m), RingSpec::zn(n)));
    return out;
}

namespace detail {

inline RingSpec x_power_quotient(long base, long j) {
    std::vector<long> f(static_cast<size_t>(j) + 1, 0);
    f.back() = 1;
    return RingSpec::poly_quotient(base, f);
}

}  // namespace detail

/// "local:<=k" — every Z_{p^j} and Z_p[x]/(x^j) of size at most k.
inline std::vector<RingSpec> family_local_up_to(long k) {
    std::vector<RingSpec> out;
    for (long p = 2; p <= k; ++p) {
        if (!detail::is_prime_number(p)) continue;
        for (long size = p; size <= k;) {
            out.push_back(RingSpec::zn(size));
            if (size > k / p) break;
            size *= p;
        }
        long size = p * p;
        for (long j = 2; size <= k; ++j) {
            out.push_back(detail::x_power_quotient(p, j));
            if (size > k / p) break;
            size *= p;
        }
    }
    return out;
}

/// "polylocal:<=k" — Z_{p^e}[x]/(x^j) with j >= 2 and size (p^e)^j <= k.
inline std::vector<RingSpec> family_poly_local_up_to(long k) {
    std::vector<RingSpec> out;
    for (long p = 2; p * p <= k; ++p) {
        if (!detail::is_prime_number(p)) continue;
        for (long base = p; base * base <= k; base *= p) {
            long size = base * base;
            for (long j = 2; size <= k; ++j) {
                out.push_back(detail::x_power_quotient(base, j));
                if (size > k / base) break;
                size *= base;
            }
        }
    }
    return out;
}

/// The default desk-scale family: Z_2..Z_60, all ordered products with at
/// most 64 elements, and the local polynomial quotients Z_{p^e}[x]/(x^j) of
/// size at most 512.
inline std::vector<RingSpec> family_f0() {
    std::vector<RingSpec> out = family_zn_range(2, 60);
    for (auto& s : family_products_up_to(64)) out.push_back(std::move(s));
    for (auto& s : family_poly_local_up_to(512)) out.push_back(std::move(s));
    return out;
}

/**
 * Family expression grammar (tokens unioned by commas):
 *   "Zn:a..b"        ranges of Z_n
 *   "ZmxZn:<=k"      ordered products with m*n <= k
 *   "local:<=k"      Z_{p^j} and Z_p[x]/(x^j) up to size k
 *   "polylocal:<=k"  Z_{p^e}[x]/(x^j), j >= 2, up to size k
 *   "F0"             the default family above
 *   anything else    a single ring spec, e.g. "Z12[x]/(x^2)"
 */
inline std::vector<RingSpec> parse_family(const std::string& expr) {
    std::vector<RingSpec> out;
    size_t start = 0;
    int depth = 0;  // commas inside <...> or (...) belong to ring literals
    auto flush = [&](size_t end) {
        std::string tok = expr.substr(start, end - start);
        // trim
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) return;
        tok = tok.substr(b, e - b + 1);

        if (tok == "F0") {
            for (auto& s : family_f0()) out.push_back(std::move(s));
            return;
        }
        if (tok.rfind("Zn:", 0) == 0) {
            size_t pos = 3;
            long a = detail::parse_family_nat(tok, pos);
            if (tok.compare(pos, 2, "..") != 0)
                fail(ErrorKind::ParseError, "expected '..' in '" + tok + "'",
                     static_cast<long>(pos));
            pos += 2;
            long bnd = detail::parse_family_nat(tok, pos);
            for (auto& s : family_zn_range(a, bnd)) out.push_back(std::move(s));
            return;
        }
        if (tok.rfind("ZmxZn:<=", 0) == 0) {
            size_t pos = 8;
            long k = detail::parse_family_nat(tok, pos);
            for (auto& s : family_products_up_to(k)) out.push_back(std::move(s));
            return;
        }
        if (tok.rfind("local:<=", 0) == 0) {
            size_t pos = 8;
            long k = detail::parse_family_nat(tok, pos);
            for (auto& s : family_local_up_to(k)) out.push_back(std::move(s));
            return;
        }
        if (tok.rfind("polylocal:<=", 0) == 0) {
            size_t pos = 12;
            long k = detail::parse_family_nat(tok, pos);
            for (auto& s : family_poly_local_up_to(k)) out.push_back(std::move(s));
            return;
        }
        out.push_back(parse_ring_spec(tok));
    };
    for (size_t k = 0; k < expr.size(); ++k) {
        char c = expr[k];
        if (c == '<' || c == '(') ++depth;
        else if (c == '>' || c == ')') --depth;
        else if (c == ',' && depth == 0) {
            flush(k);
            start = k + 1;
        }
    }
    flush(expr.size());
    if (out.empty()) fail(ErrorKind::ParseError, "empty family expression", 0);
    return out;
}

}  // namespace ringlab
