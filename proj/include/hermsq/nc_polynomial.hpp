#pragma once

// Free *-algebra Q<x1, x1*, x2, x2*, ...>.
// Text grammar:
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { ['*' surrounded by space] factor }   (juxtaposition multiplies)
//   factor := atom { '*' } [ '^' integer ]                  ('*' right after an atom is the star)
//   atom   := integer [ '/' integer ] | 'x'<index> | '(' expr ')'
// So "x1* x2" is x1^* x2, and "3*x1" is 3 x1 (a number has no star).

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hermsq/matrix.hpp"
#include "hermsq/rational.hpp"

namespace hermsq {

struct Letter {
    unsigned var = 1;  // 1-based
    bool star = false;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Graded lexicographic order on words.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline Word star(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) l.star = !l.star;
    return out;
}

inline std::string to_string(const Word& w) {
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += "x" + std::to_string(l.var) + (l.star ? "*" : "");
    }
    return out;
}

class NCPolynomial {
  public:
    using Terms = std::map<Word, Rational, WordLess>;

    NCPolynomial() = default;
    NCPolynomial(const Rational& c) { add_term({}, c); }
    NCPolynomial(int c) : NCPolynomial(Rational(c)) {}
    NCPolynomial(const Word& w, const Rational& c = 1) { add_term(w, c); }

    static NCPolynomial var(unsigned i, bool starred = false) {
        if (i == 0) throw DomainError("variable indices start at 1");
        return NCPolynomial(Word{Letter{i, starred}});
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

    /// Largest variable index used (0 for constants).
    unsigned variable_count() const {
        unsigned m = 0;
        for (const auto& [w, c] : terms_)
            for (const auto& l : w) m = std::max(m, l.var);
        return m;
    }

    void add_term(const Word& w, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (fresh) return;
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    NCPolynomial& operator+=(const NCPolynomial& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPolynomial& operator-=(const NCPolynomial& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    friend NCPolynomial operator-(NCPolynomial a) {
        for (auto& [w, c] : a.terms_) c = -c;
        return a;
    }

    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
        NCPolynomial out;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                out.add_term(w, ca * cb);
            }
        return out;
    }

    NCPolynomial pow(unsigned e) const {
        NCPolynomial r(1);
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

    /// Reverses words and toggles stars; coefficients are fixed.
    NCPolynomial star() const {
        NCPolynomial out;
        for (const auto& [w, c] : terms_) out.terms_.emplace(hermsq::star(w), c);
        return out;
    }

    bool is_symmetric() const { return star() == *this; }

  private:
    Terms terms_;
};

inline NCPolynomial commutator(const NCPolynomial& a, const NCPolynomial& b) { return a * b - b * a; }

/// Canonical text: terms in descending word order, e.g. "3 x1* x2 x1 - x2 + 1/2".
inline std::string to_string(const NCPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        Rational a = abs(c);
        std::string body;
        if (w.empty())
            body = a.get_str();
        else if (a == 1)
            body = to_string(w);
        else
            body = a.get_str() + " " + to_string(w);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        out += body;
        first = false;
    }
    return out;
}

namespace detail {

class NCParser {
  public:
    explicit NCParser(std::string_view text) : s_(text) {}

    NCPolynomial parse() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
        NCPolynomial r = expr();
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
    bool starts_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'X' || c == '(';
    }

    NCPolynomial expr() {
        bool neg = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            neg = true;
        }
        NCPolynomial r = term();
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

    NCPolynomial term() {
        NCPolynomial r = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                if (!starts_atom()) throw ParseError("expected a factor after '*'", pos_);
                r = r * factor();
            } else if (starts_atom()) {
                r = r * factor();
            } else {
                return r;
            }
        }
    }

    NCPolynomial factor() {
        skip();
        bool number = pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
        NCPolynomial base = atom();
        // a star binds only when it touches the atom
        while (!number && pos_ < s_.size() && s_[pos_] == '*') {
            base = base.star();
            ++pos_;
        }
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t at = pos_;
            Integer e = integer();
            if (e > 64) throw ParseError("exponent too large", at);
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Integer integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    NCPolynomial atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational v(integer());
            if (pos_ < s_.size() && s_[pos_] == '/') {
                std::size_t at = pos_++;
                Integer d = integer();
                if (d == 0) throw ParseError("division by zero", at);
                v /= Rational(d);
            }
            return NCPolynomial(v);
        }
        if (c == 'x' || c == 'X') {
            std::size_t at = pos_++;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected variable index", pos_);
            Integer i = integer();
            if (i < 1 || i > 1024) throw ParseError("variable index out of range", at);
            return NCPolynomial::var(static_cast<unsigned>(i.get_ui()));
        }
        if (c == '(') {
            ++pos_;
            NCPolynomial r = expr();
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline NCPolynomial parse_nc(std::string_view text) { return detail::NCParser(text).parse(); }

/// Evaluates every word of f with x_i -> images[i-1], x_i* -> star_images[i-1], sharing prefixes.
template <class T>
Matrix<T> evaluate_words(const NCPolynomial& f, const std::vector<Matrix<T>>& images,
                         const std::vector<Matrix<T>>& star_images, std::size_t n) {
    if (f.variable_count() > images.size()) throw DomainError("no value for variable x" + std::to_string(f.variable_count()));
    std::map<Word, Matrix<T>> prefix;
    prefix.emplace(Word{}, Matrix<T>::identity(n));
    auto value = [&](const Word& w) -> const Matrix<T>& {
        std::size_t k = w.size();
        while (!prefix.count(Word(w.begin(), w.begin() + k))) --k;
        for (; k < w.size(); ++k) {
            Word p(w.begin(), w.begin() + k);
            const Letter& l = w[k];
            const auto& m = l.star ? star_images[l.var - 1] : images[l.var - 1];
            Matrix<T> next = prefix.at(p) * m;
            p.push_back(l);
            prefix.emplace(p, std::move(next));
        }
        return prefix.at(w);
    };
    Matrix<T> out(n, n);
    for (const auto& [w, c] : f.terms()) out += scale(T(c), value(w));
    return out;
}

/// f(s, s^t) over Q.
inline Matrix<Rational> nc_eval(const NCPolynomial& f, const std::vector<Matrix<Rational>>& s, std::size_t n = 0) {
    if (s.empty() && n == 0) throw DomainError("matrix size unknown: no matrices given");
    if (!s.empty()) n = s.front().rows();
    std::vector<Matrix<Rational>> t;
    for (const auto& m : s) {
        if (m.rows() != n || m.cols() != n) throw DimensionMismatch("matrix tuple has nonuniform size");
        t.push_back(m.transpose());
    }
    return evaluate_words(f, s, t, n);
}

}  // namespace hermsq
