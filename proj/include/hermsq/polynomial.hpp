#pragma once

// Sparse multivariate polynomials over Q in commuting variables.
//
// Variables are identified by a stable 32-bit id: X = 0, Y = 1, and the
// generic-matrix indeterminates z<i>_<j>_<l> packed above that. The id order
// is the variable order (X < Y < z...), which the graded-lex term order uses.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hermsq/error.hpp"
#include "hermsq/rational.hpp"

namespace hermsq {

struct Var {
    std::uint32_t id = 0;

    friend auto operator<=>(const Var&, const Var&) = default;

    static constexpr Var x() { return {0}; }
    static constexpr Var y() { return {1}; }

    /// Generic-matrix indeterminate z<row>_<col>_<index>, all 1-based.
    static Var zeta(unsigned row, unsigned col, unsigned index) {
        if (row < 1 || col < 1 || index < 1 || row > 256 || col > 256 || index > 65536)
            throw DomainError("zeta index out of range");
        return {2u + (((index - 1) << 16) | ((row - 1) << 8) | (col - 1))};
    }

    bool is_zeta() const { return id >= 2; }

    std::string name() const {
        if (id == 0) return "X";
        if (id == 1) return "Y";
        std::uint32_t k = id - 2;
        return "z" + std::to_string(((k >> 8) & 0xff) + 1) + "_" + std::to_string((k & 0xff) + 1) + "_" +
               std::to_string((k >> 16) + 1);
    }
};

/// A power product: (variable, exponent) pairs sorted by variable, exponents > 0.
class Monomial {
  public:
    using Entry = std::pair<Var, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(Var v, std::uint32_t e = 1) {
        if (e > 0) entries_.emplace_back(v, e);
    }
    static Monomial from_entries(std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end());
        Monomial m;
        for (auto& [v, e] : entries) {
            if (e == 0) continue;
            if (!m.entries_.empty() && m.entries_.back().first == v)
                m.entries_.back().second += e;
            else
                m.entries_.emplace_back(v, e);
        }
        return m;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (const auto& [v, e] : entries_) d += e;
        return d;
    }

    std::uint32_t exponent(Var v) const {
        for (const auto& [w, e] : entries_)
            if (w == v) return e;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        out.entries_.reserve(a.entries_.size() + b.entries_.size());
        auto i = a.entries_.begin(), j = b.entries_.begin();
        while (i != a.entries_.end() || j != b.entries_.end()) {
            if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
                out.entries_.push_back(*i++);
            } else if (i == a.entries_.end() || j->first < i->first) {
                out.entries_.push_back(*j++);
            } else {
                out.entries_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return out;
    }

    bool divides(const Monomial& other) const {
        for (const auto& [v, e] : entries_)
            if (other.exponent(v) < e) return false;
        return true;
    }

    /// other / *this, requires divides(other).
    Monomial quotient_of(const Monomial& other) const {
        std::vector<Entry> out;
        for (const auto& [v, e] : other.entries_) {
            std::uint32_t d = exponent(v);
            if (e > d) out.emplace_back(v, e - d);
        }
        Monomial m;
        m.entries_ = std::move(out);
        return m;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (const auto& [v, e] : a.entries_) {
            std::uint32_t f = b.exponent(v);
            if (f > 0) m.entries_.emplace_back(v, std::min(e, f));
        }
        return m;
    }

    /// Removes variable v entirely.
    Monomial without(Var v) const {
        Monomial m;
        for (const auto& en : entries_)
            if (en.first != v) m.entries_.push_back(en);
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string str() const {
        std::string s;
        for (const auto& [v, e] : entries_) {
            if (!s.empty()) s += "*";
            s += v.name();
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }

  private:
    std::vector<Entry> entries_;
};

/// Graded lexicographic order: total degree, then exponents compared from the largest variable down.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        const auto& ea = a.entries();
        const auto& eb = b.entries();
        auto i = ea.rbegin(), j = eb.rbegin();
        while (i != ea.rend() && j != eb.rend()) {
            if (i->first != j->first) return i->first < j->first;
            if (i->second != j->second) return i->second < j->second;
            ++i;
            ++j;
        }
        return i == ea.rend() && j != eb.rend();
    }
};

class Polynomial {
  public:
    using Terms = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    Polynomial(const Rational& c) {
        if (c != 0) terms_.emplace(Monomial(), c);
    }
    Polynomial(int c) : Polynomial(Rational(c)) {}
    Polynomial(Var v) { terms_.emplace(Monomial(v), Rational(1)); }
    Polynomial(const Monomial& m, const Rational& c) {
        if (c != 0) terms_.emplace(m, c);
    }

    static Polynomial x() { return Polynomial(Var::x()); }
    static Polynomial y() { return Polynomial(Var::y()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    bool is_term() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    Rational constant_value() const {
        if (!is_constant()) throw DomainError("polynomial is not constant");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    /// Leading (grlex-maximal) term; the polynomial must be nonzero.
    const Monomial& leading_monomial() const { return nonzero().rbegin()->first; }
    const Rational& leading_coefficient() const { return nonzero().rbegin()->second; }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    std::uint32_t degree_in(Var v) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
        return d;
    }

    std::set<Var> variables() const {
        std::set<Var> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.entries()) out.insert(v);
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        if (a.is_zero() || b.is_zero()) return out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    Polynomial scaled(const Rational& c) const {
        if (c == 0) return {};
        Polynomial out = *this;
        for (auto& [m, k] : out.terms_) k *= c;
        return out;
    }

    Polynomial times_monomial(const Monomial& mono, const Rational& c) const {
        Polynomial out;
        if (c == 0) return out;
        for (const auto& [m, k] : terms_) out.terms_.emplace_hint(out.terms_.end(), m * mono, k * c);
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial pow(unsigned e) const {
        Polynomial r = 1, b = *this;
        while (e > 0) {
            if (e & 1u) r *= b;
            e >>= 1u;
            if (e > 0) b *= b;
        }
        return r;
    }

    template <class Map>
    Rational evaluate(const Map& values) const {
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : m.entries()) {
                auto it = values.find(v);
                if (it == values.end()) throw DomainError("no value for variable " + v.name());
                t *= hermsq::pow(it->second, static_cast<long>(e));
            }
            total += t;
        }
        return total;
    }

    /// Coefficients with respect to v: result[k] is the coefficient of v^k.
    std::vector<Polynomial> coefficients_in(Var v) const {
        std::vector<Polynomial> out(degree_in(v) + 1);
        for (const auto& [m, c] : terms_) out[m.exponent(v)].add_term(m.without(v), c);
        return out;
    }

    static Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, Var v) {
        Polynomial out;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            out += coeffs[k].times_monomial(Monomial(v, static_cast<std::uint32_t>(k)), 1);
        return out;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

  private:
    const Terms& nonzero() const {
        if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
        return terms_;
    }

    Terms terms_;
};

/// Exact quotient a / b; throws DomainError if b does not divide a.
inline Polynomial exact_divide(Polynomial a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (b.is_constant()) return a.scaled(inverse(b.constant_value()));
    const Monomial& lb = b.leading_monomial();
    const Rational& cb = b.leading_coefficient();
    if (b.is_term()) {
        Polynomial q;
        for (const auto& [m, c] : a.terms()) {
            if (!lb.divides(m)) throw DomainError("inexact polynomial division");
            q.add_term(lb.quotient_of(m), c / cb);
        }
        return q;
    }
    Polynomial q;
    while (!a.is_zero()) {
        const Monomial& la = a.leading_monomial();
        if (!lb.divides(la)) throw DomainError("inexact polynomial division");
        Monomial qm = lb.quotient_of(la);
        Rational qc = a.leading_coefficient() / cb;
        q.add_term(qm, qc);
        a -= b.times_monomial(qm, qc);
    }
    return q;
}

namespace detail {

using Univariate = std::vector<Polynomial>;  // coefficients in ascending degree

inline void trim(Univariate& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int udeg(const Univariate& p) { return static_cast<int>(p.size()) - 1; }

// lc(b)^(deg a - deg b + 1) * a  mod  b
inline Univariate pseudo_remainder(Univariate a, const Univariate& b) {
    int db = udeg(b);
    int e = udeg(a) - db + 1;
    const Polynomial& lb = b.back();
    while (udeg(a) >= db && !a.empty()) {
        Polynomial la = a.back();
        int shift = udeg(a) - db;
        for (auto& c : a) c *= lb;
        for (int k = 0; k <= db; ++k) a[k + shift] -= b[k] * la;
        --e;
        trim(a);
    }
    if (e > 0) {
        Polynomial f = lb.pow(static_cast<unsigned>(e));
        for (auto& c : a) c *= f;
    }
    return a;
}

}  // namespace detail

Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Gcd of the coefficients of p viewed in R[v].
inline Polynomial content_in(const std::vector<Polynomial>& coeffs) {
    Polynomial g;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd(g, c);
        if (g.is_constant()) return 1;
    }
    return g;
}

/// Greatest common divisor over Q, normalized to leading coefficient 1 (gcd(0,0) = 0).
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    auto monic = [](const Polynomial& p) { return p.scaled(inverse(p.leading_coefficient())); };
    if (a.is_zero()) return b.is_zero() ? Polynomial() : monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return 1;
    if (a.is_term() || b.is_term()) {
        const Polynomial& t = a.is_term() ? a : b;
        const Polynomial& o = a.is_term() ? b : a;
        Monomial g = t.leading_monomial();
        for (const auto& [m, c] : o.terms()) {
            g = Monomial::gcd(g, m);
            if (g.is_one()) break;
        }
        return Polynomial(g, 1);
    }
    if (a == b) return monic(a);

    // Main variable: the largest variable occurring in both.
    auto va = a.variables(), vb = b.variables();
    std::optional<Var> main;
    for (auto it = va.rbegin(); it != va.rend(); ++it)
        if (vb.count(*it)) {
            main = *it;
            break;
        }
    if (!main) {
        // No shared variable: the gcd is a common factor of the contents in each other's variables.
        Var v = *va.rbegin();
        return gcd(content_in(a.coefficients_in(v)), b);
    }
    Var v = *main;

    detail::Univariate A = a.coefficients_in(v), B = b.coefficients_in(v);
    if (A.size() < B.size()) std::swap(A, B);
    Polynomial ca = content_in(A), cb = content_in(B);
    Polynomial d = gcd(ca, cb);
    for (auto& c : A) c = exact_divide(c, ca);
    for (auto& c : B) c = exact_divide(c, cb);

    // Subresultant PRS.
    Polynomial g = 1, h = 1;
    for (;;) {
        int delta = detail::udeg(A) - detail::udeg(B);
        detail::Univariate R = detail::pseudo_remainder(A, B);
        if (R.empty()) break;
        if (detail::udeg(R) == 0) {
            B = {Polynomial(1)};
            break;
        }
        A = B;
        Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
        for (auto& c : R) c = exact_divide(c, divisor);
        B = std::move(R);
        g = A.back();
        if (delta == 0) {
            // h unchanged: h^(1-0) g^0 = h
        } else {
            h = exact_divide(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
    Polynomial cB = content_in(B);
    for (auto& c : B) c = exact_divide(c, cB);
    return monic(d * Polynomial::from_coefficients(B, v));
}

}  // namespace hermsq
