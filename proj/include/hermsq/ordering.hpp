#pragma once

// The four orderings of Q(X,Y) induced by the embedding into Q((X))((Y)):
// X and Y are infinitesimals with |Y| << |X| << 1 and chosen signs.

#include <array>
#include <string>

#include "hermsq/rational_function.hpp"

namespace hermsq {

struct MonomialOrdering {
    int sign_x = 1;
    int sign_y = 1;

    friend bool operator==(const MonomialOrdering&, const MonomialOrdering&) = default;

    /// "++", "+-", "-+", "--" (X sign first).
    std::string str() const { return std::string(sign_x > 0 ? "+" : "-") + (sign_y > 0 ? "+" : "-"); }

    static MonomialOrdering parse(const std::string& s) {
        if (s.size() != 2 || (s[0] != '+' && s[0] != '-') || (s[1] != '+' && s[1] != '-'))
            throw DomainError("ordering must be one of ++ +- -+ --");
        return {s[0] == '+' ? 1 : -1, s[1] == '+' ? 1 : -1};
    }

    /// (+,+), (+,-), (-,+), (-,-).
    static std::array<MonomialOrdering, 4> all() { return {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}}; }
};

/// Sign of a polynomial in X, Y at the ordering: decided by the term of least Y-degree, then least X-degree.
inline int sign_at(const Polynomial& p, const MonomialOrdering& P) {
    if (p.is_zero()) return 0;
    const Monomial* best = nullptr;
    const Rational* coeff = nullptr;
    std::uint32_t by = 0, bx = 0;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.entries())
            if (v.is_zeta()) throw DomainError("sign is only defined for polynomials in X and Y");
        std::uint32_t ey = m.exponent(Var::y()), ex = m.exponent(Var::x());
        if (!best || ey < by || (ey == by && ex < bx)) {
            best = &m;
            coeff = &c;
            by = ey;
            bx = ex;
        }
    }
    int s = sign(*coeff);
    if (bx % 2 == 1) s *= P.sign_x;
    if (by % 2 == 1) s *= P.sign_y;
    return s;
}

inline int sign_at(const RationalFunction& f, const MonomialOrdering& P) {
    return sign_at(f.num(), P) * sign_at(f.den(), P);
}

/// c * X^ex * Y^ey with integer (possibly negative) exponents.
struct LaurentMonomial {
    Rational coeff;
    long ex = 0;
    long ey = 0;

    RationalFunction to_function() const {
        Monomial num = Monomial::from_entries({{Var::x(), static_cast<std::uint32_t>(ex > 0 ? ex : 0)},
                                               {Var::y(), static_cast<std::uint32_t>(ey > 0 ? ey : 0)}});
        Monomial den = Monomial::from_entries({{Var::x(), static_cast<std::uint32_t>(ex < 0 ? -ex : 0)},
                                               {Var::y(), static_cast<std::uint32_t>(ey < 0 ? -ey : 0)}});
        return RationalFunction(Polynomial(num, coeff), Polynomial(den, 1));
    }
};

/// Decomposes a monomial scalar in X, Y; throws NotMonomial otherwise.
inline LaurentMonomial as_laurent_monomial(const RationalFunction& f) {
    if (!f.is_monomial()) throw NotMonomial();
    const auto& [mn, cn] = *f.num().terms().begin();
    const auto& [md, cd] = *f.den().terms().begin();
    for (const auto* m : {&mn, &md})
        for (const auto& [v, e] : m->entries())
            if (v.is_zeta()) throw NotMonomial();
    LaurentMonomial out;
    out.coeff = cn / cd;
    out.ex = static_cast<long>(mn.exponent(Var::x())) - static_cast<long>(md.exponent(Var::x()));
    out.ey = static_cast<long>(mn.exponent(Var::y())) - static_cast<long>(md.exponent(Var::y()));
    return out;
}

/// Square class d * X^a * Y^b (d square-free, a, b in {0, 1}) of a monomial scalar.
struct SquareClass {
    Integer d;
    int a = 0;
    int b = 0;

    friend bool operator==(const SquareClass&, const SquareClass&) = default;
    friend bool operator<(const SquareClass& l, const SquareClass& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.d < r.d;
    }

    RationalFunction to_function() const { return LaurentMonomial{Rational(d), a, b}.to_function(); }
};

inline SquareClass monomial_square_class(const RationalFunction& f) {
    LaurentMonomial m = as_laurent_monomial(f);
    return {squarefree_part(m.coeff), static_cast<int>(((m.ex % 2) + 2) % 2), static_cast<int>(((m.ey % 2) + 2) % 2)};
}

}  // namespace hermsq
