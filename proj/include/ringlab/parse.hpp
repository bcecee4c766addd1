#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "ringlab/error.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/quotient.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/spec.hpp"

namespace ringlab {

namespace detail {

/// Recursive-descent cursor over the spec/ideal grammar. Whitespace is
/// insignificant; errors report the byte offset in the original text.
class Cursor {
public:
    explicit Cursor(const std::string& text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char peek_at(size_t ahead) {
        skip_ws();
        size_t p = pos_;
        // look past whitespace between tokens as well
        for (size_t k = 0; k < ahead; ++k) {
            if (p >= s_.size()) return '\0';
            ++p;
            while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
        }
        return p < s_.size() ? s_[p] : '\0';
    }
    char take() {
        skip_ws();
        if (pos_ >= s_.size()) fail_here("unexpected end of input");
        return s_[pos_++];
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail_here(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool try_take(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long nat() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail_here("expected a number");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 100000000) fail_here("number too large");
            ++pos_;
        }
        return v;
    }
    size_t pos() {
        skip_ws();
        return pos_;
    }
    [[noreturn]] void fail_here(const std::string& msg) {
        skip_ws();
        fail(ErrorKind::ParseError, msg + " at byte " + std::to_string(pos_),
             static_cast<long>(pos_));
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

/// poly := sign? term (sign term)* ; term := coef | coef? "x" ("^" nat)?
inline std::vector<long> parse_poly(Cursor& c) {
    std::vector<long> coeffs;
    auto bump = [&](size_t deg, long v) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] += v;
    };
    bool first = true;
    for (;;) {
        long sign = 1;
        if (c.try_take('+')) {
            if (first) c.fail_here("unexpected '+'");
        } else if (c.try_take('-')) {
            sign = -1;
        } else if (!first) {
            break;
        }
        first = false;
        long coef = 1;
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = c.nat();
            saw_coef = true;
        }
        if (c.try_take('x')) {
            long deg = 1;
            if (c.try_take('^')) deg = c.nat();
            if (deg < 0 || deg > 64) c.fail_here("exponent out of range");
            bump(static_cast<size_t>(deg), sign * coef);
        } else {
            if (!saw_coef) c.fail_here("expected a coefficient or 'x'");
            bump(0, sign * coef);
        }
        char nxt = c.peek();
        if (nxt != '+' && nxt != '-') break;
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

/// Generator literal shaped by the ring the ideal lives in.
inline ElemLit parse_elem_lit(Cursor& c, const RingSpec& ring) {
    switch (ring.kind) {
        case RingSpec::Kind::Zn: {
            long sign = c.try_take('-') ? -1 : 1;
            return ElemLit::integer(sign * c.nat());
        }
        case RingSpec::Kind::Product: {
            c.expect('(');
            ElemLit l = parse_elem_lit(c, *ring.left);
            c.expect(',');
            ElemLit r = parse_elem_lit(c, *ring.right);
            c.expect(')');
            return ElemLit::pair(std::move(l), std::move(r));
        }
        case RingSpec::Kind::PolyQuotient:
            return ElemLit::poly(parse_poly(c));
        case RingSpec::Kind::Quotient: {
            // base literal, optionally written as a coset "[lit]"
            if (c.try_take('[')) {
                ElemLit e = parse_elem_lit(c, *ring.base);
                c.expect(']');
                return e;
            }
            return parse_elem_lit(c, *ring.base);
        }
    }
    c.fail_here("unsupported ring kind in literal");
}

inline IdealSpec parse_ideal_spec(Cursor& c, const RingSpec& ring) {
    c.expect('<');
    IdealSpec gens;
    if (!c.try_take('>')) {
        for (;;) {
            gens.push_back(parse_elem_lit(c, ring));
            if (c.try_take('>')) break;
            c.expect(',');
        }
    }
    return gens;
}

inline RingSpec parse_atom(Cursor& c) {
    c.expect('Z');
    long n = c.nat();
    if (c.peek() == '[') {
        c.expect('[');
        c.expect('x');
        c.expect(']');
        c.expect('/');
        c.expect('(');
        size_t at = c.pos();
        std::vector<long> f = parse_poly(c);
        c.expect(')');
        if (f.size() < 2)
            fail(ErrorKind::ParseError,
                 "modulus polynomial must have degree >= 1 at byte " + std::to_string(at),
                 static_cast<long>(at));
        if (f.back() != 1)
            fail(ErrorKind::ParseError,
                 "modulus polynomial must be monic at byte " + std::to_string(at),
                 static_cast<long>(at));
        return RingSpec::poly_quotient(n, std::move(f));
    }
    return RingSpec::zn(n);
}

inline RingSpec parse_term(Cursor& c) {
    RingSpec atom = parse_atom(c);
    if (c.peek() == '/' && c.peek_at(1) == '<') {
        c.expect('/');
        IdealSpec ideal = parse_ideal_spec(c, atom);
        return RingSpec::quotient(std::move(atom), std::move(ideal));
    }
    return atom;
}

inline RingSpec parse_spec(Cursor& c) {
    RingSpec t = parse_term(c);
    while (c.peek() == 'x' && c.peek_at(1) == 'Z') {
        c.expect('x');
        t = RingSpec::product(std::move(t), parse_term(c));
    }
    return t;
}

}  // namespace detail

/// Parses the ring-spec grammar:
///   spec := term ("x" term)*
///   term := atom | atom "/" ideal
///   atom := "Z" nat | "Z" nat "[x]/(" poly ")"
inline RingSpec parse_ring_spec(const std::string& text) {
    detail::Cursor c(text);
    RingSpec s = detail::parse_spec(c);
    if (!c.at_end()) c.fail_here("trailing input");
    return s;
}

// ---------------------------------------------------------------------------
// realization: RingSpec -> Ring, and literals -> element indices
// ---------------------------------------------------------------------------

inline RingPtr realize(const RingSpec& spec, long cap = config::size_cap());

/// Evaluates a generator literal to an element index of the realized ring.
/// Polynomials are evaluated through ring arithmetic, so arbitrary integers
/// and degrees reduce correctly.
inline int realize_elem(const ElemLit& e, const RingSpec& spec, const RingPtr& ring) {
    switch (spec.kind) {
        case RingSpec::Kind::Zn: {
            long n = spec.n;
            return static_cast<int>(((e.value % n) + n) % n);
        }
        case RingSpec::Kind::Product: {
            if (e.kind != ElemLit::Kind::Pair)
                fail(ErrorKind::InvalidArgument, "product ring literal must be a pair");
            // recompute factor sizes structurally; the encoding is i1*|R2|+i2
            RingPtr r1 = realize(*spec.left, ring->size());
            RingPtr r2 = realize(*spec.right, ring->size());
            int i1 = realize_elem(*e.left, *spec.left, r1);
            int i2 = realize_elem(*e.right, *spec.right, r2);
            return i1 * r2->size() + i2;
        }
        case RingSpec::Kind::PolyQuotient: {
            long n = spec.n;
            auto mod_n = [&](long v) { return static_cast<int>(((v % n) + n) % n); };
            if (e.kind == ElemLit::Kind::Int) return mod_n(e.value);
            if (e.kind != ElemLit::Kind::Poly)
                fail(ErrorKind::InvalidArgument, "polynomial ring literal must be a polynomial");
            if (ring->size() == 1) return 0;
            // index of x: the vector (0,1,..) encodes as n, except that a
            // degree-1 modulus already forces x = -c_0
            long deg = static_cast<long>(spec.modulus_poly.size()) - 1;
            int x = deg >= 2 ? static_cast<int>(n) : mod_n(-spec.modulus_poly[0]);
            int acc = ring->zero();
            for (size_t k = 0; k < e.coeffs.size(); ++k) {
                int cv = mod_n(e.coeffs[k]);
                if (cv == 0) continue;
                int term = cv;  // constant cv has index cv
                if (k >= 1) term = ring->mul(term, ring->pow(x, static_cast<long>(k)));
                acc = ring->add(acc, term);
            }
            return acc;
        }
        case RingSpec::Kind::Quotient:
            fail(ErrorKind::InvalidArgument, "quotient literals are realized via their base");
    }
    return 0;
}

struct RealizedQuotient;  // below

inline RingPtr realize(const RingSpec& spec, long cap) {
    switch (spec.kind) {
        case RingSpec::Kind::Zn:
            return build_zn(spec.n, cap);
        case RingSpec::Kind::Product:
            return build_product(realize(*spec.left, cap), realize(*spec.right, cap), cap);
        case RingSpec::Kind::PolyQuotient:
            return build_poly_quotient(spec.n, spec.modulus_poly, cap);
        case RingSpec::Kind::Quotient: {
            RingPtr base = realize(*spec.base, cap);
            std::vector<int> gens;
            for (const auto& g : spec.modulus_ideal)
                gens.push_back(realize_elem(g, *spec.base, base));
            Ideal j = Ideal::from_generators(base, gens);
            return build_quotient(base, j, print_ring_spec(spec)).ring;
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown ring spec");
}

/// Parses and realizes an ideal literal against a realized ring.
inline Ideal parse_ideal_literal(const std::string& text, const RingSpec& spec,
                                 const RingPtr& ring) {
    detail::Cursor c(text);
    IdealSpec gens = detail::parse_ideal_spec(c, spec);
    if (!c.at_end()) c.fail_here("trailing input");
    std::vector<int> idx;
    if (spec.kind == RingSpec::Kind::Quotient) {
        // literals name base-ring elements; project through the quotient
        RingPtr base = realize(*spec.base);
        std::vector<int> bgens;
        for (const auto& g : spec.modulus_ideal)
            bgens.push_back(realize_elem(g, *spec.base, base));
        Ideal j = Ideal::from_generators(base, bgens);
        Quotient q = build_quotient(base, j);
        for (const auto& g : gens) {
            int b = realize_elem(g, *spec.base, base);
            idx.push_back(q.projection[static_cast<size_t>(b)]);
        }
    } else {
        for (const auto& g : gens) idx.push_back(realize_elem(g, spec, ring));
    }
    return Ideal::from_generators(ring, idx);
}

/// Parses "{e1,e2,...}" and validates multiplicative closure.
inline MultiplicativeSet parse_mult_set_literal(const std::string& text, const RingSpec& spec,
                                                const RingPtr& ring) {
    detail::Cursor c(text);
    c.expect('{');
    Bitset m(ring->size());
    if (!c.try_take('}')) {
        for (;;) {
            ElemLit e = detail::parse_elem_lit(c, spec);
            if (spec.kind == RingSpec::Kind::Quotient) {
                RingPtr base = realize(*spec.base);
                std::vector<int> bgens;
                for (const auto& g : spec.modulus_ideal)
                    bgens.push_back(realize_elem(g, *spec.base, base));
                Quotient q = build_quotient(base, Ideal::from_generators(base, bgens));
                m.set(q.projection[static_cast<size_t>(realize_elem(e, *spec.base, base))]);
            } else {
                m.set(realize_elem(e, spec, ring));
            }
            if (c.try_take('}')) break;
            c.expect(',');
        }
    }
    if (!c.at_end()) c.fail_here("trailing input");
    return MultiplicativeSet::from_members(ring, m);
}

/// Canonical literal for an ideal: "<g1,...,gk>" over element labels.
inline std::string ideal_literal(const Ideal& p) {
    const Ring& r = *p.ring();
    if (p.generators().empty()) return "<" + r.label(r.zero()) + ">";
    std::string out = "<";
    for (size_t k = 0; k < p.generators().size(); ++k) {
        if (k) out += ",";
        out += r.label(p.generators()[k]);
    }
    return out + ">";
}

}  // namespace ringlab
