/*
   Copyright 2026 the tschirn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TSCHIRN_PARSE_HPP
#define TSCHIRN_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bivariate.hpp"
#include "poly.hpp"
#include "ratfun.hpp"

namespace tschirn {

/* syntax error carrying the byte offset of the offending token */
class ParseError : public std::runtime_error {
  public:
    ParseError(size_t offset, const std::string& detail)
        : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + detail),
          offset(offset) {}
    size_t offset;
};

namespace detail {

struct Token {
    enum Kind { number, var_x, var_y, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    size_t pos;
    std::string_view digits;
};

inline std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (c >= '0' && c <= '9') {
            size_t j = i;
            while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
            out.push_back({Token::number, i, s.substr(i, j - i)});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case 'x': k = Token::var_x; break;
            case 'y': k = Token::var_y; break;
            case '+': k = Token::plus; break;
            case '-': k = Token::minus; break;
            case '*': k = Token::star; break;
            case '/': k = Token::slash; break;
            case '^': k = Token::caret; break;
            case '(': k = Token::lparen; break;
            case ')': k = Token::rparen; break;
            default: throw ParseError(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, i, {}});
        ++i;
    }
    out.push_back({Token::end, s.size(), {}});
    return out;
}

/* parser value: a bivariate numerator over a y-free denominator, so the
   same grammar serves polynomials, plane models and Laurent entries */
template <class K>
struct ParseVal {
    BiPoly<K> num;
    Poly<K> den;
};

template <class K>
class Parser {
  public:
    Parser(std::string_view text, bool allow_y) : toks_(lex(text)), allow_y_(allow_y) {}

    ParseVal<K> run() {
        ParseVal<K> v = expr();
        if (cur().kind != Token::end) throw ParseError(cur().pos, "unexpected trailing input");
        return v;
    }

  private:
    const Token& cur() const { return toks_[at_]; }
    void advance() { ++at_; }

    static ParseVal<K> lift(BiPoly<K> n) { return {std::move(n), Poly<K>::one()}; }

    ParseVal<K> expr() {
        ParseVal<K> v = term();
        while (cur().kind == Token::plus || cur().kind == Token::minus) {
            bool neg = cur().kind == Token::minus;
            advance();
            ParseVal<K> w = term();
            BiPoly<K> lhs = v.num * BiPoly<K>::from_x(w.den);
            BiPoly<K> rhs = w.num * BiPoly<K>::from_x(v.den);
            v = {neg ? lhs - rhs : lhs + rhs, v.den * w.den};
        }
        return v;
    }

    ParseVal<K> term() {
        ParseVal<K> v = factor();
        while (cur().kind == Token::star || cur().kind == Token::slash) {
            bool div = cur().kind == Token::slash;
            size_t pos = cur().pos;
            advance();
            ParseVal<K> w = factor();
            if (div)
                v = divide(std::move(v), std::move(w), pos);
            else
                v = {v.num * w.num, v.den * w.den};
        }
        return v;
    }

    ParseVal<K> factor() {
        if (cur().kind == Token::minus) {
            advance();
            ParseVal<K> v = factor();
            v.num = -v.num;
            return v;
        }
        if (cur().kind == Token::plus) {
            advance();
            return factor();
        }
        ParseVal<K> v = atom();
        if (cur().kind == Token::caret) {
            size_t pos = cur().pos;
            advance();
            v = power(std::move(v), exponent(), pos);
        }
        return v;
    }

    long long exponent() {
        bool neg = false;
        if (cur().kind == Token::minus) {
            neg = true;
            advance();
        }
        if (cur().kind != Token::number) throw ParseError(cur().pos, "expected an integer exponent");
        long long e = 0;
        for (char c : cur().digits) {
            e = e * 10 + (c - '0');
            if (e > 4096) throw ParseError(cur().pos, "exponent out of range");
        }
        advance();
        return neg ? -e : e;
    }

    ParseVal<K> atom() {
        switch (cur().kind) {
            case Token::number: {
                K v;
                const K ten = K::from_int(10);
                for (char c : cur().digits) v = v * ten + K::from_int(c - '0');
                advance();
                return lift(BiPoly<K>::from_x(Poly<K>(v)));
            }
            case Token::var_x: advance(); return lift(BiPoly<K>::from_x(Poly<K>::x()));
            case Token::var_y:
                if (!allow_y_) throw ParseError(cur().pos, "'y' is not allowed here");
                advance();
                return lift(BiPoly<K>::y());
            case Token::lparen: {
                advance();
                ParseVal<K> v = expr();
                if (cur().kind != Token::rparen) throw ParseError(cur().pos, "expected ')'");
                advance();
                return v;
            }
            default: throw ParseError(cur().pos, "expected an operand");
        }
    }

    ParseVal<K> divide(ParseVal<K> a, const ParseVal<K>& b, size_t pos) {
        if (b.num.ydeg() > 0) throw ParseError(pos, "cannot divide by an expression containing y");
        Poly<K> bn = b.num.ycoeff(0);
        if (bn.is_zero()) throw ParseError(pos, "division by zero");
        return {a.num * BiPoly<K>::from_x(b.den), a.den * bn};
    }

    ParseVal<K> power(ParseVal<K> v, long long e, size_t pos) {
        if (e < 0) {
            if (v.num.ydeg() > 0) throw ParseError(pos, "cannot invert an expression containing y");
            Poly<K> n = v.num.ycoeff(0);
            if (n.is_zero()) throw ParseError(pos, "division by zero");
            v = {BiPoly<K>::from_x(v.den), std::move(n)};
            e = -e;
        }
        ParseVal<K> out = lift(BiPoly<K>::from_x(Poly<K>::one()));
        for (long long i = 0; i < e; ++i) out = {out.num * v.num, out.den * v.den};
        return out;
    }

    std::vector<Token> toks_;
    bool allow_y_;
    size_t at_ = 0;
};

}  // namespace detail

template <class K>
RationalFunction<K> parse_ratfun(std::string_view text) {
    detail::ParseVal<K> v = detail::Parser<K>(text, false).run();
    return RationalFunction<K>(v.num.ycoeff(0), v.den);
}

template <class K>
Poly<K> parse_poly(std::string_view text) {
    RationalFunction<K> r = parse_ratfun<K>(text);
    if (!r.is_polynomial()) throw std::domain_error("expression is not a polynomial");
    return r.num();
}

template <class K>
K parse_scalar(std::string_view text) {
    Poly<K> p = parse_poly<K>(text);
    if (p.degree() > 0) throw std::domain_error("expression is not a constant");
    return p.coeff(0);
}

template <class K>
BiPoly<K> parse_bipoly(std::string_view text) {
    detail::ParseVal<K> v = detail::Parser<K>(text, true).run();
    int top = v.num.ydeg();
    std::vector<Poly<K>> c;
    for (int i = 0; i <= (top < 0 ? 0 : top); ++i) {
        RationalFunction<K> q(v.num.ycoeff(i), v.den);
        if (!q.is_polynomial())
            throw std::domain_error("denominator does not divide the coefficient of y^" + std::to_string(i));
        c.push_back(q.num());
    }
    return BiPoly<K>(std::move(c));
}

}  // namespace tschirn

#endif
