#pragma once

// Text grammar for scalars:
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := unary { ('*'|'/') unary }
//   unary   := '-' unary | power
//   power   := primary [ '^' ['-'] integer ]
//   primary := integer | 'X' | 'Y' | 'z<i>_<j>_<l>' | '(' expr ')'
// Multiplication must be explicit. Printing is canonical (terms in descending graded-lex order).

#include <cctype>
#include <string>
#include <string_view>

#include "hermsq/rational_function.hpp"

namespace hermsq {

namespace detail {

class ScalarParser {
  public:
    explicit ScalarParser(std::string_view text) : s_(text) {}

    RationalFunction parse() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty scalar", pos_);
        RationalFunction r = expr();
        skip();
        if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return r;
    }

  private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    RationalFunction expr() {
        bool neg = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            neg = true;
        }
        RationalFunction r = term();
        if (neg) r = -r;
        for (;;) {
            if (peek('+')) {
                ++pos_;
                r += term();
            } else if (peek('-')) {
                ++pos_;
                r -= term();
            } else {
                return r;
            }
        }
    }

    RationalFunction term() {
        RationalFunction r = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                r *= unary();
            } else if (peek('/')) {
                std::size_t at = pos_++;
                RationalFunction d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                r /= d;
            } else {
                skip();
                if (pos_ < s_.size() && starts_primary(s_[pos_]))
                    throw ParseError("expected operator (multiplication must be explicit)", pos_);
                return r;
            }
        }
    }

    RationalFunction unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        return power();
    }

    RationalFunction power() {
        RationalFunction base = primary();
        if (!peek('^')) return base;
        ++pos_;
        bool neg = false;
        if (peek('-')) {
            ++pos_;
            neg = true;
        }
        skip();
        std::size_t at = pos_;
        Integer e = integer();
        if (e > 4096) throw ParseError("exponent too large", at);
        long k = e.get_si();
        if (neg && base.is_zero()) throw ParseError("division by zero", at);
        return base.pow(neg ? -k : k);
    }

    static bool starts_primary(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'X' || c == 'Y' || c == 'z' || c == '(';
    }

    Integer integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    unsigned small_index() {
        std::size_t at = pos_;
        Integer v = integer();
        if (v < 1 || v > 65536) throw ParseError("index out of range", at);
        return static_cast<unsigned>(v.get_ui());
    }

    RationalFunction primary() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rational(integer()));
        if (c == 'X' || c == 'Y') {
            ++pos_;
            return RationalFunction(c == 'X' ? Var::x() : Var::y());
        }
        if (c == 'z') {
            std::size_t at = pos_++;
            unsigned i = small_index();
            expect('_');
            unsigned j = small_index();
            expect('_');
            unsigned l = small_index();
            try {
                return RationalFunction(Var::zeta(i, j, l));
            } catch (const DomainError&) {
                throw ParseError("zeta index out of range", at);
            }
        }
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RationalFunction parse_scalar(std::string_view text) { return detail::ScalarParser(text).parse(); }

/// Parses a scalar that must be a rational number.
inline Rational parse_rational(std::string_view text) {
    RationalFunction f = parse_scalar(text);
    if (!f.is_constant()) throw ParseError("expected a rational constant", 0);
    return f.constant_value();
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = abs(c);
        std::string body;
        if (m.is_one())
            body = a.get_str();
        else if (a == 1)
            body = m.str();
        else
            body = a.get_str() + "*" + m.str();
        if (c < 0)
            out += "-";
        else if (!first)
            out += "+";
        out += body;
        first = false;
    }
    return out;
}

inline std::string to_string(const RationalFunction& f) {
    if (f.is_polynomial() && f.den() == Polynomial(1)) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace hermsq
