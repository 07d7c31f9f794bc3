/* Copyright 2026 The skewlab authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "skewlab/parse.hpp"

#include <cctype>

namespace skewlab {

namespace {

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }
    bool peek_digit() {
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
    }
    Int read_uint() {
        skip_ws();
        if (!peek_digit()) throw ParseError("expected a number", pos);
        Int v = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            v = v * 10 + (src[pos] - '0');
            ++pos;
        }
        return v;
    }
    long read_small_uint() {
        Int v = read_uint();
        if (v > 1'000'000) throw ParseError("number out of range", pos);
        return static_cast<long>(v);
    }
    std::string read_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) throw ParseError("expected an identifier", pos);
        return src.substr(start, pos - start);
    }
};

struct PolyParser {
    Lexer& lex;
    const Ring& ring;

    OrePoly parse_expr() {
        OrePoly acc = parse_term();
        while (true) {
            if (lex.accept('+'))
                acc = acc + parse_term();
            else if (lex.accept('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    OrePoly parse_term() {
        OrePoly acc = parse_unary();
        while (true) {
            if (lex.accept('*')) {
                acc = acc * parse_unary();
            } else if (lex.accept('/')) {
                OrePoly rhs = parse_unary();
                if (!rhs.is_constant() || rhs.is_zero())
                    throw ParseError("division needs a nonzero constant divisor", lex.pos);
                acc = acc * OrePoly::constant(ring, ring.inv(rhs.coeff(0)));
            } else {
                return acc;
            }
        }
    }

    OrePoly parse_unary() {
        if (lex.accept('-')) return -parse_unary();
        return parse_power();
    }

    OrePoly parse_power() {
        OrePoly base = parse_atom();
        if (lex.accept('^')) {
            long e = lex.read_small_uint();
            if (e > 64) throw ParseError("exponent out of range", lex.pos);
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    OrePoly parse_atom() {
        if (lex.accept('(')) {
            OrePoly inner = parse_expr();
            lex.expect(')');
            return inner;
        }
        if (lex.peek_digit()) {
            Int num = lex.read_uint();
            // an immediately following '/' with a digit forms a rational literal
            std::size_t save = lex.pos;
            if (lex.accept('/')) {
                if (lex.peek_digit()) {
                    Int den = lex.read_uint();
                    if (den == 0) throw ParseError("zero denominator", lex.pos);
                    return OrePoly::constant(ring, rational_const(Rat(num, den)));
                }
                lex.pos = save;  // a polynomial division, handled by the caller
            }
            return OrePoly::constant(ring, rational_const(Rat(num)));
        }
        std::size_t at = lex.pos;
        std::string id = lex.read_ident();
        if (id == "t") return OrePoly::t(ring);
        if (id == "w") {
            if (ring.family() != Family::FiniteField || ring.m() < 2)
                throw Error("coefficient-not-in-ring", "'w' needs GF(p^m) with m > 1");
            return OrePoly::constant(ring, ring.generator());
        }
        if (id == "x") {
            if (ring.family() != Family::RationalFunctions)
                throw Error("coefficient-not-in-ring", "'x' needs the ring Q(x)");
            return OrePoly::constant(ring, ring.generator());
        }
        if (id == "i" || id == "j" || id == "k") {
            if (ring.family() != Family::Quaternions)
                throw Error("coefficient-not-in-ring", "'" + id + "' needs the quaternions");
            Quat q{Rat(0), Rat(0), Rat(0), Rat(0)};
            (id == "i" ? q.x : id == "j" ? q.y : q.z) = 1;
            return OrePoly::constant(ring, Elem(q));
        }
        throw ParseError("unknown symbol '" + id + "'", at);
    }

    Elem rational_const(const Rat& r) const {
        switch (ring.family()) {
            case Family::Rationals:
                return Elem(r);
            case Family::RationalFunctions:
                return Elem(RatFn{QxPoly(r), QxPoly(Rat(1))});
            case Family::Quaternions:
                return Elem(Quat{r, Rat(0), Rat(0), Rat(0)});
            case Family::FiniteField: {
                if (rat_den(r) != 1)
                    throw Error("coefficient-not-in-ring",
                                "fractional literal over a finite field");
                Int n = rat_num(r) % ring.characteristic();
                if (n < 0) n += ring.characteristic();
                return ring.from_int(static_cast<long>(n));
            }
        }
        throw InvariantBreach("bad family");
    }
};

}  // namespace

Ring parse_ring(const std::string& spec) {
    Lexer lex{spec};
    std::string head = lex.read_ident();
    if (head == "Q") {
        if (!lex.eof()) throw ParseError("trailing input after ring spec", lex.pos);
        return Ring::rationals();
    }
    if (head == "HQ") {
        if (!lex.eof()) throw ParseError("trailing input after ring spec", lex.pos);
        return Ring::quaternions();
    }
    if (head == "Qx") {
        lex.expect(';');
        std::string d = lex.read_ident();
        lex.expect('/');
        std::string dx = lex.read_ident();
        if (d != "d" || dx != "dx") throw ParseError("expected 'd/dx'", lex.pos);
        if (!lex.eof()) throw ParseError("trailing input after ring spec", lex.pos);
        return Ring::rational_functions();
    }
    if (head == "GF") {
        lex.expect('(');
        long p = lex.read_small_uint();
        long m = 1;
        if (lex.accept('^')) m = lex.read_small_uint();
        int frob = 0;
        std::string beta_src;
        while (lex.accept(';')) {
            std::string key = lex.read_ident();
            lex.expect('=');
            if (key == "frob") {
                frob = static_cast<int>(lex.read_small_uint());
            } else if (key == "beta") {
                // raw capture until ')' or ';' at depth 0
                int depth = 0;
                lex.skip_ws();
                std::size_t start = lex.pos;
                while (lex.pos < spec.size()) {
                    char c = spec[lex.pos];
                    if (c == '(') ++depth;
                    if ((c == ')' || c == ';') && depth == 0) break;
                    if (c == ')') --depth;
                    ++lex.pos;
                }
                beta_src = spec.substr(start, lex.pos - start);
            } else {
                throw ParseError("unknown ring option '" + key + "'", lex.pos);
            }
        }
        lex.expect(')');
        if (!lex.eof()) throw ParseError("trailing input after ring spec", lex.pos);
        Ring base = Ring::finite_field(static_cast<int>(p), static_cast<int>(m), frob);
        if (beta_src.empty()) return base;
        Elem beta = parse_elem(beta_src, base);
        if (base.is_zero(beta)) return base;
        return Ring::finite_field(static_cast<int>(p), static_cast<int>(m), frob, beta);
    }
    throw ParseError("unknown ring family '" + head + "'", 0);
}

OrePoly parse_poly(const std::string& src, const Ring& ring) {
    Lexer lex{src};
    PolyParser pp{lex, ring};
    OrePoly out = pp.parse_expr();
    if (!lex.eof()) throw ParseError("trailing input", lex.pos);
    return out;
}

Elem parse_elem(const std::string& src, const Ring& ring) {
    OrePoly p = parse_poly(src, ring);
    if (!p.is_constant()) throw ParseError("expected a constant element", 0);
    return p.is_zero() ? ring.zero() : p.coeff(0);
}

MatK parse_matrix(const std::string& src, const Ring& ring) {
    Lexer lex{src};
    lex.expect('[');
    std::vector<std::vector<Elem>> rows;
    while (true) {
        lex.expect('[');
        std::vector<Elem> row;
        while (true) {
            // capture an entry up to the next top-level ',' or ']'
            lex.skip_ws();
            std::size_t start = lex.pos;
            int depth = 0;
            while (lex.pos < src.size()) {
                char c = src[lex.pos];
                if (c == '(') ++depth;
                if (c == ')') --depth;
                if ((c == ',' || c == ']') && depth == 0) break;
                ++lex.pos;
            }
            row.push_back(parse_elem(src.substr(start, lex.pos - start), ring));
            if (lex.accept(']')) break;
            lex.expect(',');
        }
        rows.push_back(std::move(row));
        if (lex.accept(']')) break;
        lex.expect(',');
        // the next row must start with '['; loop re-expects it
    }
    if (!lex.eof()) throw ParseError("trailing input after matrix", lex.pos);
    return MatK::from_rows(ring, std::move(rows));
}

std::vector<Elem> parse_set(const std::string& src, const Ring& ring) {
    Lexer lex{src};
    lex.expect('{');
    std::vector<Elem> out;
    if (lex.accept('}')) {
        if (!lex.eof()) throw ParseError("trailing input after set", lex.pos);
        return out;
    }
    while (true) {
        lex.skip_ws();
        std::size_t start = lex.pos;
        int depth = 0;
        while (lex.pos < src.size()) {
            char c = src[lex.pos];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if ((c == ',' || c == '}') && depth == 0) break;
            ++lex.pos;
        }
        out.push_back(parse_elem(src.substr(start, lex.pos - start), ring));
        if (lex.accept('}')) break;
        lex.expect(',');
    }
    if (!lex.eof()) throw ParseError("trailing input after set", lex.pos);
    return out;
}

AutGroup parse_group(const std::string& src, const Ring& ring) {
    std::vector<Aut> gens;
    Lexer lex{src};
    while (true) {
        std::string id = lex.read_ident();
        if (id == "Id") {
            gens.push_back(Aut::identity());
        } else if (id == "Frob") {
            long e = 1;
            if (lex.accept('^')) e = lex.read_small_uint();
            gens.push_back(Aut::frobenius(static_cast<int>(e)));
        } else if (id == "Int") {
            lex.expect('(');
            lex.skip_ws();
            std::size_t start = lex.pos;
            int depth = 0;
            while (lex.pos < src.size()) {
                char c = src[lex.pos];
                if (c == '(') ++depth;
                if (c == ')' && depth == 0) break;
                if (c == ')') --depth;
                ++lex.pos;
            }
            gens.push_back(Aut::inner(ring, parse_elem(src.substr(start, lex.pos - start), ring)));
            lex.expect(')');
        } else {
            throw ParseError("unknown automorphism '" + id + "'", lex.pos);
        }
        if (lex.eof()) break;
        lex.expect(',');
    }
    return AutGroup::closure(ring, std::move(gens));
}

}  // namespace skewlab
