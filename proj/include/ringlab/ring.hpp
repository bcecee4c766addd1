#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/bitset.hpp"
#include "ringlab/config.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A finite commutative ring with identity. Elements are dense indices
/// 0..size-1 with 0 always the zero element; the full addition and
/// multiplication tables are materialized at construction, so all later
/// sweeps are table lookups. Values are immutable and shared by pointer;
/// pointer identity is ring identity.
class Ring {
public:
    Ring(std::string spec_string, int size, int one,
         std::vector<uint16_t> add, std::vector<uint16_t> mul,
         std::vector<uint16_t> neg, std::vector<std::string> labels)
        : spec_(std::move(spec_string)),
          n_(size),
          one_(one),
          add_(std::move(add)),
          mul_(std::move(mul)),
          neg_(std::move(neg)),
          labels_(std::move(labels)) {}

    int size() const { return n_; }
    int zero() const { return 0; }
    int one() const { return one_; }

    int add(int a, int b) const { return add_[static_cast<size_t>(a) * n_ + b]; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
    int neg(int a) const { return neg_[static_cast<size_t>(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    int pow(int a, long k) const {
        // k >= 1
        int acc = one_;
        int base = a;
        while (k > 0) {
            if (k & 1) acc = mul(acc, base);
            base = mul(base, base);
            k >>= 1;
        }
        return acc;
    }

    const std::string& label(int a) const { return labels_[static_cast<size_t>(a)]; }
    const std::string& spec_string() const { return spec_; }

    bool is_zero_ring() const { return n_ == 1; }

private:
    std::string spec_;
    int n_;
    int one_;
    std::vector<uint16_t> add_, mul_, neg_;
    std::vector<std::string> labels_;
};

/// An element tagged with its owning ring; the public entry points reject
/// cross-ring combinations through this type.
struct Element {
    RingPtr ring;
    int index = 0;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() != b.get())
        fail(ErrorKind::RingMismatch, "operands belong to different rings");
}

namespace detail {

inline void check_cap(long long size, long long cap, const std::string& what) {
    if (size > cap)
        fail(ErrorKind::CapExceeded,
             what + " has " + std::to_string(size) + " elements, exceeding the size cap " +
                 std::to_string(cap));
    if (size > config::hard_size_limit)
        fail(ErrorKind::CapExceeded, what + " exceeds the hard size limit");
}

/// Canonical display form of a polynomial over Z_n, highest power first:
/// "x^2+3x+1", "4x", "0".
inline std::string poly_label(const std::vector<long>& coeffs) {
    std::string out;
    for (size_t k = coeffs.size(); k-- > 0;) {
        long c = coeffs[k];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += 'x';
            if (k > 1) out += '^' + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

/// Z_n, the integers mod n; element index i is the residue i.
inline RingPtr build_zn(long n, long cap = config::size_cap()) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "Z_n requires n >= 1");
    detail::check_cap(n, cap, "Z" + std::to_string(n));
    int sz = static_cast<int>(n);
    std::vector<uint16_t> add(static_cast<size_t>(sz) * sz), mul(static_cast<size_t>(sz) * sz),
        neg(static_cast<size_t>(sz));
    std::vector<std::string> labels(static_cast<size_t>(sz));
    for (int a = 0; a < sz; ++a) {
        neg[static_cast<size_t>(a)] = static_cast<uint16_t>((sz - a) % sz);
        labels[static_cast<size_t>(a)] = std::to_string(a);
        for (int b = 0; b < sz; ++b) {
            add[static_cast<size_t>(a) * sz + b] = static_cast<uint16_t>((a + b) % sz);
            mul[static_cast<size_t>(a) * sz + b] =
                static_cast<uint16_t>((static_cast<long long>(a) * b) % sz);
        }
    }
    int one = sz == 1 ? 0 : 1;
    return std::make_shared<Ring>("Z" + std::to_string(n), sz, one, std::move(add),
                                  std::move(mul), std::move(neg), std::move(labels));
}

/// R1 x R2 with componentwise operations; index (i1, i2) encodes as
/// i1*|R2| + i2, so nested products flatten to the same encoding.
inline RingPtr build_product(const RingPtr& r1, const RingPtr& r2,
                             long cap = config::size_cap()) {
    long long sz = static_cast<long long>(r1->size()) * r2->size();
    detail::check_cap(sz, cap, r1->spec_string() + "x" + r2->spec_string());
    int n = static_cast<int>(sz);
    int n2 = r2->size();
    std::vector<uint16_t> add(static_cast<size_t>(n) * n), mul(static_cast<size_t>(n) * n),
        neg(static_cast<size_t>(n));
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        int a1 = a / n2, a2 = a % n2;
        neg[static_cast<size_t>(a)] = static_cast<uint16_t>(r1->neg(a1) * n2 + r2->neg(a2));
        labels[static_cast<size_t>(a)] = "(" + r1->label(a1) + "," + r2->label(a2) + ")";
        for (int b = 0; b < n; ++b) {
            int b1 = b / n2, b2 = b % n2;
            add[static_cast<size_t>(a) * n + b] =
                static_cast<uint16_t>(r1->add(a1, b1) * n2 + r2->add(a2, b2));
            mul[static_cast<size_t>(a) * n + b] =
                static_cast<uint16_t>(r1->mul(a1, b1) * n2 + r2->mul(a2, b2));
        }
    }
    int one = r1->one() * n2 + r2->one();
    return std::make_shared<Ring>(r1->spec_string() + "x" + r2->spec_string(), n, one,
                                  std::move(add), std::move(mul), std::move(neg),
                                  std::move(labels));
}

/// Z_n[x]/(f) for monic f of degree d >= 1. Elements are coefficient vectors
/// of length d over Z_n; index = sum c_k * n^k.
inline RingPtr build_poly_quotient(long n, const std::vector<long>& monic_coeffs,
                                   long cap = config::size_cap()) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "coefficient modulus must be >= 1");
    if (monic_coeffs.size() < 2)
        fail(ErrorKind::InvalidArgument, "modulus polynomial must have degree >= 1");
    if (monic_coeffs.back() != 1)
        fail(ErrorKind::InvalidArgument, "modulus polynomial must be monic");
    int d = static_cast<int>(monic_coeffs.size()) - 1;

    long long size = 1;
    std::string name =
        "Z" + std::to_string(n) + "[x]/(" + detail::poly_label(monic_coeffs) + ")";
    for (int k = 0; k < d; ++k) {
        size *= n;
        detail::check_cap(size, cap, name);
    }
    int sz = static_cast<int>(size);

    auto mod_n = [&](long v) { return static_cast<int>(((v % n) + n) % n); };

    // decode index -> coefficient vector (c_0 .. c_{d-1})
    auto decode = [&](int idx) {
        std::vector<int> c(static_cast<size_t>(d));
        for (int k = 0; k < d; ++k) {
            c[static_cast<size_t>(k)] = idx % static_cast<int>(n);
            idx /= static_cast<int>(n);
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        long long idx = 0;
        for (int k = d - 1; k >= 0; --k) idx = idx * n + c[static_cast<size_t>(k)];
        return static_cast<int>(idx);
    };

    // x^m mod f for m in [d, 2d-2], as length-d coefficient vectors.
    std::vector<std::vector<int>> xpow(static_cast<size_t>(d > 1 ? d - 1 : 0));
    {
        std::vector<int> cur(static_cast<size_t>(d));  // x^d = -(c_{d-1}x^{d-1}+...+c_0)
        for (int k = 0; k < d; ++k) cur[static_cast<size_t>(k)] = mod_n(-monic_coeffs[static_cast<size_t>(k)]);
        for (int m = d; m <= 2 * d - 2; ++m) {
            xpow[static_cast<size_t>(m - d)] = cur;
            // multiply cur by x and reduce
            std::vector<int> nxt(static_cast<size_t>(d), 0);
            int top = cur[static_cast<size_t>(d - 1)];
            for (int k = d - 1; k > 0; --k) nxt[static_cast<size_t>(k)] = cur[static_cast<size_t>(k - 1)];
            nxt[0] = 0;
            if (top != 0)
                for (int k = 0; k < d; ++k)
                    nxt[static_cast<size_t>(k)] = mod_n(
                        nxt[static_cast<size_t>(k)] +
                        static_cast<long>(top) * mod_n(-monic_coeffs[static_cast<size_t>(k)]));
            cur = nxt;
        }
    }

    std::vector<uint16_t> add(static_cast<size_t>(sz) * sz), mul(static_cast<size_t>(sz) * sz),
        neg(static_cast<size_t>(sz));
    std::vector<std::string> labels(static_cast<size_t>(sz));
    std::vector<std::vector<int>> coeffs(static_cast<size_t>(sz));
    for (int a = 0; a < sz; ++a) coeffs[static_cast<size_t>(a)] = decode(a);

    for (int a = 0; a < sz; ++a) {
        const auto& ca = coeffs[static_cast<size_t>(a)];
        {
            std::vector<int> cn(static_cast<size_t>(d));
            std::vector<long> ldisp(static_cast<size_t>(d));
            for (int k = 0; k < d; ++k) {
                cn[static_cast<size_t>(k)] = mod_n(-ca[static_cast<size_t>(k)]);
                ldisp[static_cast<size_t>(k)] = ca[static_cast<size_t>(k)];
            }
            neg[static_cast<size_t>(a)] = static_cast<uint16_t>(encode(cn));
            labels[static_cast<size_t>(a)] = detail::poly_label(ldisp);
        }
        for (int b = 0; b < sz; ++b) {
            const auto& cb = coeffs[static_cast<size_t>(b)];
            std::vector<int> s(static_cast<size_t>(d));
            for (int k = 0; k < d; ++k)
                s[static_cast<size_t>(k)] = mod_n(ca[static_cast<size_t>(k)] + cb[static_cast<size_t>(k)]);
            add[static_cast<size_t>(a) * sz + b] = static_cast<uint16_t>(encode(s));

            // convolution, then fold powers >= d through the xpow table
            std::vector<long> conv(static_cast<size_t>(2 * d - 1), 0);
            for (int i = 0; i < d; ++i) {
                if (ca[static_cast<size_t>(i)] == 0) continue;
                for (int j = 0; j < d; ++j)
                    conv[static_cast<size_t>(i + j)] += static_cast<long>(ca[static_cast<size_t>(i)]) *
                                                        cb[static_cast<size_t>(j)];
            }
            std::vector<int> p(static_cast<size_t>(d), 0);
            for (int k = 0; k < d; ++k) p[static_cast<size_t>(k)] = mod_n(conv[static_cast<size_t>(k)]);
            for (int m = d; m <= 2 * d - 2; ++m) {
                long c = conv[static_cast<size_t>(m)] % n;
                if (c == 0) continue;
                const auto& rep = xpow[static_cast<size_t>(m - d)];
                for (int k = 0; k < d; ++k)
                    p[static_cast<size_t>(k)] = mod_n(p[static_cast<size_t>(k)] + c * rep[static_cast<size_t>(k)]);
            }
            mul[static_cast<size_t>(a) * sz + b] = static_cast<uint16_t>(encode(p));
        }
    }
    int one = sz == 1 ? 0 : 1;  // constant 1 has index 1 (n >= 2), or 0 in the zero ring
    return std::make_shared<Ring>(name, sz, one, std::move(add), std::move(mul),
                                  std::move(neg), std::move(labels));
}

/// All a with a*b = 1 for some b.
inline Bitset units(const Ring& r) {
    Bitset u(r.size());
    for (int a = 0; a < r.size(); ++a)
        for (int b = 0; b < r.size(); ++b)
            if (r.mul(a, b) == r.one()) {
                u.set(a);
                break;
            }
    return u;
}

/// All e with e*e = e.
inline Bitset idempotents(const Ring& r) {
    Bitset e(r.size());
    for (int a = 0; a < r.size(); ++a)
        if (r.mul(a, a) == a) e.set(a);
    return e;
}

inline bool is_field(const Ring& r) { return r.size() >= 2 && units(r).count() == r.size() - 1; }

/// Only idempotents are 0 and 1 (so the ring admits no nontrivial product
/// decomposition). The zero ring is not considered indecomposable.
inline bool is_indecomposable(const Ring& r) {
    return r.size() >= 2 && idempotents(r).count() == 2;
}

/// The ring Re for an idempotent e: carrier is the principal ideal eR inside
/// the base ring, with identity e. Element i of the result is carrier[i].
struct Subring {
    RingPtr ring;
    std::vector<int> carrier;        // result index -> base element
    std::vector<int> to_sub;         // base element -> result index, or -1
};

inline Subring subring_by_idempotent(const RingPtr& r, int e, const std::string& name) {
    if (r->mul(e, e) != e) fail(ErrorKind::InvalidArgument, "element is not idempotent");
    Bitset in(r->size());
    std::vector<int> carrier;
    for (int a = 0; a < r->size(); ++a) {
        int v = r->mul(a, e);
        if (!in.test(v)) {
            in.set(v);
            carrier.push_back(v);
        }
    }
    std::sort(carrier.begin(), carrier.end());
    int m = static_cast<int>(carrier.size());
    std::vector<int> to_sub(static_cast<size_t>(r->size()), -1);
    for (int i = 0; i < m; ++i) to_sub[static_cast<size_t>(carrier[static_cast<size_t>(i)])] = i;

    std::vector<uint16_t> add(static_cast<size_t>(m) * m), mul(static_cast<size_t>(m) * m),
        neg(static_cast<size_t>(m));
    std::vector<std::string> labels(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int a = carrier[static_cast<size_t>(i)];
        neg[static_cast<size_t>(i)] = static_cast<uint16_t>(to_sub[static_cast<size_t>(r->neg(a))]);
        labels[static_cast<size_t>(i)] = r->label(a);
        for (int j = 0; j < m; ++j) {
            int b = carrier[static_cast<size_t>(j)];
            add[static_cast<size_t>(i) * m + j] =
                static_cast<uint16_t>(to_sub[static_cast<size_t>(r->add(a, b))]);
            mul[static_cast<size_t>(i) * m + j] =
                static_cast<uint16_t>(to_sub[static_cast<size_t>(r->mul(a, b))]);
        }
    }
    int one = to_sub[static_cast<size_t>(e)];
    Subring out;
    out.ring = std::make_shared<Ring>(name, m, one, std::move(add), std::move(mul),
                                      std::move(neg), std::move(labels));
    out.carrier = std::move(carrier);
    out.to_sub = std::move(to_sub);
    return out;
}

inline bool tables_equal(const Ring& a, const Ring& b) {
    if (a.size() != b.size() || a.one() != b.one()) return false;
    for (int x = 0; x < a.size(); ++x) {
        if (a.neg(x) != b.neg(x)) return false;
        for (int y = 0; y < a.size(); ++y)
            if (a.add(x, y) != b.add(x, y) || a.mul(x, y) != b.mul(x, y)) return false;
    }
    return true;
}

/// Checks that f (indexed by elements of a) is a ring isomorphism a -> b.
inline bool is_isomorphism(const Ring& a, const Ring& b, const std::vector<int>& f) {
    if (a.size() != b.size() || static_cast<int>(f.size()) != a.size()) return false;
    Bitset seen(b.size());
    for (int x = 0; x < a.size(); ++x) {
        if (f[static_cast<size_t>(x)] < 0 || f[static_cast<size_t>(x)] >= b.size()) return false;
        if (seen.test(f[static_cast<size_t>(x)])) return false;
        seen.set(f[static_cast<size_t>(x)]);
    }
    if (f[static_cast<size_t>(a.zero())] != b.zero()) return false;
    if (f[static_cast<size_t>(a.one())] != b.one()) return false;
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y) {
            if (f[static_cast<size_t>(a.add(x, y))] !=
                b.add(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
                return false;
            if (f[static_cast<size_t>(a.mul(x, y))] !=
                b.mul(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
                return false;
        }
    return true;
}

namespace detail {

inline bool extend_isomorphism(const Ring& a, const Ring& b, std::vector<int>& f,
                               std::vector<bool>& used, int next) {
    int n = a.size();
    while (next < n && f[static_cast<size_t>(next)] >= 0) ++next;
    if (next == n) return true;
    for (int img = 0; img < n; ++img) {
        if (used[static_cast<size_t>(img)]) continue;
        f[static_cast<size_t>(next)] = img;
        used[static_cast<size_t>(img)] = true;
        // check all constraints among currently mapped elements
        bool ok = true;
        for (int y = 0; y < n && ok; ++y) {
            if (f[static_cast<size_t>(y)] < 0) continue;
            int s = a.add(next, y), p = a.mul(next, y);
            if (f[static_cast<size_t>(s)] >= 0 &&
                f[static_cast<size_t>(s)] != b.add(img, f[static_cast<size_t>(y)]))
                ok = false;
            if (ok && f[static_cast<size_t>(p)] >= 0 &&
                f[static_cast<size_t>(p)] != b.mul(img, f[static_cast<size_t>(y)]))
                ok = false;
        }
        if (ok && extend_isomorphism(a, b, f, used, next + 1)) return true;
        f[static_cast<size_t>(next)] = -1;
        used[static_cast<size_t>(img)] = false;
    }
    return false;
}

}  // namespace detail

/// Backtracking search for a ring isomorphism. Intended for small rings
/// (decomposition factors); returns false quickly on size mismatch.
inline bool is_isomorphic(const Ring& a, const Ring& b) {
    if (a.size() != b.size()) return false;
    std::vector<int> f(static_cast<size_t>(a.size()), -1);
    std::vector<bool> used(static_cast<size_t>(a.size()), false);
    f[static_cast<size_t>(a.zero())] = b.zero();
    used[static_cast<size_t>(b.zero())] = true;
    if (a.size() > 1) {
        if (a.one() == a.zero() || b.one() == b.zero()) return false;
        f[static_cast<size_t>(a.one())] = b.one();
        used[static_cast<size_t>(b.one())] = true;
    }
    return detail::extend_isomorphism(a, b, f, used, 0);
}

}  // namespace ringlab
