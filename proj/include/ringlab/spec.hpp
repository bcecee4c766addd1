#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ringlab/error.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// A generator literal inside an ideal or set literal: an integer (Z_n),
/// a pair (products), or a polynomial in x (polynomial quotients).
struct ElemLit {
    enum class Kind { Int, Pair, Poly };
    Kind kind = Kind::Int;
    long value = 0;                       // Int
    std::vector<long> coeffs;             // Poly, c_0 .. c_d
    std::shared_ptr<ElemLit> left, right; // Pair

    static ElemLit integer(long v) {
        ElemLit e;
        e.kind = Kind::Int;
        e.value = v;
        return e;
    }
    static ElemLit poly(std::vector<long> c) {
        ElemLit e;
        e.kind = Kind::Poly;
        e.coeffs = std::move(c);
        return e;
    }
    static ElemLit pair(ElemLit l, ElemLit r) {
        ElemLit e;
        e.kind = Kind::Pair;
        e.left = std::make_shared<ElemLit>(std::move(l));
        e.right = std::make_shared<ElemLit>(std::move(r));
        return e;
    }

    bool operator==(const ElemLit& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
            case Kind::Int: return value == o.value;
            case Kind::Poly: return coeffs == o.coeffs;
            case Kind::Pair: return *left == *o.left && *right == *o.right;
        }
        return false;
    }
};

using IdealSpec = std::vector<ElemLit>;

/// Structural description of a ring: Z_n, a product, a quotient of an atom
/// by an ideal literal, or Z_n[x]/(f) for monic f.
struct RingSpec {
    enum class Kind { Zn, Product, Quotient, PolyQuotient };
    Kind kind = Kind::Zn;
    long n = 0;                            // Zn / PolyQuotient base modulus
    std::vector<long> modulus_poly;        // PolyQuotient, c_0 .. c_d with c_d = 1
    std::shared_ptr<RingSpec> left, right; // Product
    std::shared_ptr<RingSpec> base;        // Quotient
    IdealSpec modulus_ideal;               // Quotient

    static RingSpec zn(long n) {
        RingSpec s;
        s.kind = Kind::Zn;
        s.n = n;
        return s;
    }
    static RingSpec product(RingSpec l, RingSpec r) {
        RingSpec s;
        s.kind = Kind::Product;
        s.left = std::make_shared<RingSpec>(std::move(l));
        s.right = std::make_shared<RingSpec>(std::move(r));
        return s;
    }
    static RingSpec poly_quotient(long n, std::vector<long> f) {
        if (f.size() < 2 || f.back() != 1)
            fail(ErrorKind::InvalidArgument,
                 "polynomial quotient modulus must be monic of degree >= 1");
        RingSpec s;
        s.kind = Kind::PolyQuotient;
        s.n = n;
        s.modulus_poly = std::move(f);
        return s;
    }
    static RingSpec quotient(RingSpec atom, IdealSpec ideal) {
        if (atom.kind == Kind::Product || atom.kind == Kind::Quotient)
            fail(ErrorKind::InvalidArgument, "only Z_n and Z_n[x]/(f) atoms can be quotiented");
        RingSpec s;
        s.kind = Kind::Quotient;
        s.base = std::make_shared<RingSpec>(std::move(atom));
        s.modulus_ideal = std::move(ideal);
        return s;
    }

    bool operator==(const RingSpec& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
            case Kind::Zn: return n == o.n;
            case Kind::Product: return *left == *o.left && *right == *o.right;
            case Kind::PolyQuotient: return n == o.n && modulus_poly == o.modulus_poly;
            case Kind::Quotient:
                return *base == *o.base && modulus_ideal == o.modulus_ideal;
        }
        return false;
    }
};

inline std::string print_elem_lit(const ElemLit& e) {
    switch (e.kind) {
        case ElemLit::Kind::Int: return std::to_string(e.value);
        case ElemLit::Kind::Poly: return detail::poly_label(e.coeffs);
        case ElemLit::Kind::Pair:
            return "(" + print_elem_lit(*e.left) + "," + print_elem_lit(*e.right) + ")";
    }
    return "";
}

inline std::string print_ideal_spec(const IdealSpec& gens) {
    if (gens.empty()) return "<0>";
    std::string out = "<";
    for (size_t k = 0; k < gens.size(); ++k) {
        if (k) out += ",";
        out += print_elem_lit(gens[k]);
    }
    return out + ">";
}

/// Canonical printer; parse_ring_spec is a left inverse of it.
inline std::string print_ring_spec(const RingSpec& s) {
    switch (s.kind) {
        case RingSpec::Kind::Zn: return "Z" + std::to_string(s.n);
        case RingSpec::Kind::Product:
            return print_ring_spec(*s.left) + "x" + print_ring_spec(*s.right);
        case RingSpec::Kind::PolyQuotient:
            return "Z" + std::to_string(s.n) + "[x]/(" + detail::poly_label(s.modulus_poly) + ")";
        case RingSpec::Kind::Quotient:
            return print_ring_spec(*s.base) + "/" + print_ideal_spec(s.modulus_ideal);
    }
    return "";
}

}  // namespace ringlab
