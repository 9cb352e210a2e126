#pragma once

// Diagonal quadratic forms over Q and Q(X,Y).

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "hermsq/matrix.hpp"
#include "hermsq/ordering.hpp"
#include "hermsq/rational_function.hpp"

namespace hermsq {

/// Nonsingular diagonal form <c1, ..., ck>.
template <class T>
class DiagonalForm {
  public:
    DiagonalForm() = default;
    DiagonalForm(std::vector<T> entries) : entries_(std::move(entries)) {
        for (const auto& e : entries_)
            if (is_zero_value(e)) throw DomainError("diagonal form entries must be nonzero");
    }
    DiagonalForm(std::initializer_list<T> entries) : DiagonalForm(std::vector<T>(entries)) {}

    const std::vector<T>& entries() const { return entries_; }
    std::size_t dim() const { return entries_.size(); }
    const T& operator[](std::size_t i) const { return entries_[i]; }

    /// Value sum c_i x_i^2.
    T evaluate(const std::vector<T>& x) const {
        if (x.size() != entries_.size()) throw DimensionMismatch("vector length differs from form dimension");
        T s{};
        for (std::size_t i = 0; i < x.size(); ++i) s = s + entries_[i] * x[i] * x[i];
        return s;
    }

    /// m x q: m orthogonal copies.
    DiagonalForm multiple(std::size_t m) const {
        std::vector<T> out;
        for (std::size_t t = 0; t < m; ++t) out.insert(out.end(), entries_.begin(), entries_.end());
        return DiagonalForm(std::move(out));
    }

    friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;

  private:
    std::vector<T> entries_;
};

using Form = DiagonalForm<RationalFunction>;
using RationalForm = DiagonalForm<Rational>;
using GramForm = Matrix<RationalFunction>;

/// Entries are all pairwise products, row-major in (q1 index, q2 index).
template <class T>
DiagonalForm<T> tensor(const DiagonalForm<T>& q1, const DiagonalForm<T>& q2) {
    std::vector<T> out;
    out.reserve(q1.dim() * q2.dim());
    for (const auto& a : q1.entries())
        for (const auto& b : q2.entries()) out.push_back(a * b);
    return DiagonalForm<T>(std::move(out));
}

template <class T>
DiagonalForm<T> perp(const DiagonalForm<T>& q1, const DiagonalForm<T>& q2) {
    std::vector<T> out = q1.entries();
    out.insert(out.end(), q2.entries().begin(), q2.entries().end());
    return DiagonalForm<T>(std::move(out));
}

template <class T>
DiagonalForm<T> scale(const T& c, const DiagonalForm<T>& q) {
    if (is_zero_value(c)) throw DomainError("scaling factor must be nonzero");
    std::vector<T> out;
    for (const auto& e : q.entries()) out.push_back(c * e);
    return DiagonalForm<T>(std::move(out));
}

template <class T>
DiagonalForm<T> negate(const DiagonalForm<T>& q) {
    return scale(T(-1), q);
}

/// A diagonalization with its congruence: transform^t * gram * transform = diag(form).
template <class T>
struct Diagonalization {
    DiagonalForm<T> form;
    Matrix<T> transform;
};

/// Symmetric Gaussian elimination. Throws SingularMatrix for singular input.
template <class T>
Diagonalization<T> diagonalize(const Matrix<T>& gram) {
    if (!gram.is_symmetric()) throw DomainError("Gram matrix must be symmetric");
    const std::size_t n = gram.rows();
    Matrix<T> a = gram, t = Matrix<T>::identity(n);

    auto swap_basis = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(t(r, i), t(r, j));
    };
    // e_i <- e_i + f * e_j
    auto add_basis = [&](std::size_t i, std::size_t j, const T& f) {
        for (std::size_t r = 0; r < n; ++r)
            if (!is_zero_value(a(r, j))) a(r, i) = a(r, i) + f * a(r, j);
        for (std::size_t c = 0; c < n; ++c)
            if (!is_zero_value(a(j, c))) a(i, c) = a(i, c) + f * a(j, c);
        for (std::size_t r = 0; r < n; ++r)
            if (!is_zero_value(t(r, j))) t(r, i) = t(r, i) + f * t(r, j);
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (is_zero_value(a(k, k))) {
            std::size_t j = k + 1;
            while (j < n && is_zero_value(a(j, j))) ++j;
            if (j < n) {
                swap_basis(k, j);
            } else {
                j = k + 1;
                while (j < n && is_zero_value(a(k, j))) ++j;
                if (j == n) throw SingularMatrix("Gram matrix is singular");
                add_basis(k, j, T(1));
            }
        }
        const T pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero_value(a(k, i))) continue;
            T f = -(a(k, i) / pivot);
            add_basis(i, k, f);
        }
    }
    std::vector<T> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
    return {DiagonalForm<T>(std::move(d)), std::move(t)};
}

/// Sum of the signs of the entries at the ordering.
inline int signature(const Form& q, const MonomialOrdering& P) {
    int s = 0;
    for (const auto& e : q.entries()) s += sign_at(e, P);
    return s;
}

inline int signature(const RationalForm& q) {
    int s = 0;
    for (const auto& e : q.entries()) s += sign(e);
    return s;
}

/// Sorted square classes of a form with monomial entries.
inline std::vector<SquareClass> square_classes(const Form& q) {
    std::vector<SquareClass> out;
    for (const auto& e : q.entries()) out.push_back(monomial_square_class(e));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Integer> square_classes(const RationalForm& q) {
    std::vector<Integer> out;
    for (const auto& e : q.entries()) out.push_back(squarefree_part(e));
    std::sort(out.begin(), out.end());
    return out;
}

/// Converts a form whose entries are rational constants.
inline RationalForm to_rational_form(const Form& q) {
    std::vector<Rational> out;
    for (const auto& e : q.entries()) {
        if (!e.is_constant()) throw DomainError("form entry is not a rational constant");
        out.push_back(e.constant_value());
    }
    return RationalForm(std::move(out));
}

inline Form to_form(const RationalForm& q) {
    std::vector<RationalFunction> out;
    for (const auto& e : q.entries()) out.emplace_back(e);
    return Form(std::move(out));
}

// ---------------------------------------------------------------------------
// Local invariants over Q

/// Hilbert symbol (a, b)_p for nonzero integers; p = 0 denotes the real place.
inline int hilbert_symbol(const Integer& a, const Integer& b, const Integer& p) {
    if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    auto split = [&](Integer x, unsigned long& val) {
        val = 0;
        while (x % p == 0) {
            x /= p;
            ++val;
        }
        return x;
    };
    unsigned long alpha = 0, beta = 0;
    Integer u = split(a, alpha), v = split(b, beta);
    if (p == 2) {
        auto mod = [](const Integer& x, unsigned long m) {
            Integer r = x % m;
            if (r < 0) r += m;
            return r.get_ui();
        };
        unsigned long eu = mod(u, 4) == 3 ? 1 : 0, ev = mod(v, 4) == 3 ? 1 : 0;
        auto omega = [&](const Integer& x) {
            unsigned long r = mod(x, 8);
            return (r == 3 || r == 5) ? 1ul : 0ul;
        };
        unsigned long e = eu * ev + alpha * omega(v) + beta * omega(u);
        return (e % 2 == 0) ? 1 : -1;
    }
    int s = 1;
    if ((alpha * beta) % 2 == 1 && p % 4 == 3) s = -s;
    Integer up = u % p, vp = v % p;
    if (up < 0) up += p;
    if (vp < 0) vp += p;
    if (beta % 2 == 1) s *= mpz_legendre(up.get_mpz_t(), p.get_mpz_t());
    if (alpha % 2 == 1) s *= mpz_legendre(vp.get_mpz_t(), p.get_mpz_t());
    return s;
}

namespace detail {

inline std::vector<Integer> squarefree_entries(const RationalForm& q) {
    std::vector<Integer> out;
    for (const auto& e : q.entries()) out.push_back(squarefree_part(e));
    return out;
}

// 2 together with every prime dividing one of the square-free representatives.
inline std::vector<Integer> relevant_primes(const std::vector<Integer>& entries) {
    std::vector<Integer> primes{2};
    for (const auto& e : entries)
        for (const auto& [p, k] : factorize(e))
            if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    return primes;
}

inline Integer product(const std::vector<Integer>& v) {
    Integer d = 1;
    for (const auto& x : v) d *= x;
    return d;
}

// prod_{i<j} (a_i, a_j)_p
inline int hasse_invariant(const std::vector<Integer>& a, const Integer& p) {
    int e = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) e *= hilbert_symbol(a[i], a[j], p);
    return e;
}

inline bool is_local_square(const Integer& d, const Integer& p) {
    Integer s = squarefree_part(d);
    if (p == 0) return s > 0;
    if (s % p == 0) return false;
    if (p == 2) {
        Integer r = s % 8;
        if (r < 0) r += 8;
        return r == 1;
    }
    Integer r = s % p;
    if (r < 0) r += p;
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t()) == 1;
}

inline bool indefinite(const std::vector<Integer>& a) {
    bool pos = false, neg = false;
    for (const auto& x : a) (x > 0 ? pos : neg) = true;
    return pos && neg;
}

}  // namespace detail

/// Whether diag(q) is isotropic over the completion Q_p (p = 0: over R).
inline bool is_locally_isotropic(const RationalForm& q, const Integer& p) {
    auto a = detail::squarefree_entries(q);
    const std::size_t n = a.size();
    if (n <= 1) return false;
    if (p == 0) return detail::indefinite(a);
    Integer d = detail::product(a);
    switch (n) {
        case 2:
            return detail::is_local_square(Integer(-d), p);
        case 3:
            return hilbert_symbol(-1, -d, p) == detail::hasse_invariant(a, p);
        case 4:
            return !detail::is_local_square(d, p) || detail::hasse_invariant(a, p) == hilbert_symbol(-1, -1, p);
        default:
            return true;
    }
}

/// Hasse-Minkowski: isotropic over Q iff isotropic at the real place and at every prime.
inline bool is_isotropic_Q(const RationalForm& q) {
    const std::size_t n = q.dim();
    if (n <= 1) return false;
    auto a = detail::squarefree_entries(q);
    if (n == 2) return is_square(Rational(-q[0] * q[1]));
    if (!detail::indefinite(a)) return false;
    if (n >= 5) return true;
    for (const auto& p : detail::relevant_primes(a))
        if (!is_locally_isotropic(q, p)) return false;
    return true;
}

/// Some multiple m x q is isotropic; over Q this is indefiniteness.
inline bool is_weakly_isotropic_Q(const RationalForm& q) {
    bool pos = false, neg = false;
    for (const auto& e : q.entries()) (e > 0 ? pos : neg) = true;
    return pos && neg;
}

/// For a > 0 > b, a zero (t0, t1, t2, t3, 1) of 4 x <a> + <b>.
inline std::array<Rational, 5> weak_isotropy_witness(const Rational& a, const Rational& b) {
    if (!(a > 0 && b < 0)) throw DomainError("witness needs a > 0 > b");
    auto t = four_squares(Rational(-b / a));
    return {t[0], t[1], t[2], t[3], Rational(1)};
}

/// Isometry of forms over Q: dimension, discriminant, signature and all Hasse invariants agree.
inline bool isometric_Q(const RationalForm& q1, const RationalForm& q2) {
    if (q1.dim() != q2.dim()) return false;
    if (q1.dim() == 0) return true;
    auto a = detail::squarefree_entries(q1), b = detail::squarefree_entries(q2);
    if (squarefree_part(detail::product(a)) != squarefree_part(detail::product(b))) return false;
    if (signature(q1) != signature(q2)) return false;
    std::vector<Integer> all = a;
    all.insert(all.end(), b.begin(), b.end());
    for (const auto& p : detail::relevant_primes(all))
        if (detail::hasse_invariant(a, p) != detail::hasse_invariant(b, p)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Springer reduction over Q((X))((Y)) for forms with monomial entries

/// Splits q by the parity of the exponent of var: q ~ q_even + var * q_odd over the Laurent field.
/// Residue entries keep only the parity of the other variable's exponent.
inline std::pair<Form, Form> springer_residues(const Form& q, Var var) {
    if (var != Var::x() && var != Var::y()) throw DomainError("Springer reduction is over X or Y");
    std::vector<RationalFunction> even, odd;
    for (const auto& e : q.entries()) {
        LaurentMonomial m = as_laurent_monomial(e);
        long own = var == Var::x() ? m.ex : m.ey;
        long other = var == Var::x() ? m.ey : m.ex;
        long other_parity = ((other % 2) + 2) % 2;
        LaurentMonomial r{m.coeff, var == Var::x() ? 0 : other_parity, var == Var::x() ? other_parity : 0};
        (((own % 2) + 2) % 2 == 0 ? even : odd).push_back(r.to_function());
    }
    return {Form(std::move(even)), Form(std::move(odd))};
}

/// Outcome of the weak-representation test; when positive it carries an explicit
/// vector x with sum_{t,i} q_i x_{t*dim+i}^2 = 1 on m copies of q.
struct WeakRepresentation {
    bool represents = false;
    std::size_t multiplicity = 0;
    std::vector<RationalFunction> vector;
};

inline bool verify_weak_representation(const Form& q, const WeakRepresentation& w) {
    if (!w.represents) return false;
    if (w.vector.size() != w.multiplicity * q.dim()) return false;
    return q.multiple(w.multiplicity).evaluate(w.vector) == RationalFunction(1);
}

/// Decides whether some m x q represents 1 over Q((X))((Y)), for q with monomial entries.
/// A positive answer is a representation over Q(X,Y) itself and comes with a witness.
inline WeakRepresentation weakly_represents_one(const Form& q) {
    // Double Springer step on -q: four residue classes indexed by (X parity, Y parity).
    auto [y_even, y_odd] = springer_residues(negate(q), Var::y());
    std::array<Form, 4> classes;
    {
        auto [ee, eo] = springer_residues(y_even, Var::x());
        auto [oe, oo] = springer_residues(y_odd, Var::x());
        classes = {ee, eo, oe, oo};  // (0,0), (1,0), (0,1), (1,1)
    }
    bool verdict = false;
    for (const auto& e : classes[0].entries())
        if (e.constant_value() < 0) verdict = true;  // <1> + m x <positive> meets <1>
    for (const auto& cls : classes)
        if (is_weakly_isotropic_Q(to_rational_form(cls))) verdict = true;

    WeakRepresentation out;
    if (!verdict) return out;

    // Witness over Q(X,Y) with m = 4.
    const std::size_t dim = q.dim(), m = 4;
    std::vector<LaurentMonomial> mono;
    for (const auto& e : q.entries()) mono.push_back(as_laurent_monomial(e));
    auto parity = [](long e) { return ((e % 2) + 2) % 2; };
    auto half_power = [](long ex, long ey) { return LaurentMonomial{Rational(1), ex / 2, ey / 2}.to_function(); };
    out.represents = true;
    out.multiplicity = m;
    out.vector.assign(m * dim, RationalFunction());

    for (std::size_t i = 0; i < dim; ++i) {
        if (parity(mono[i].ex) == 0 && parity(mono[i].ey) == 0 && mono[i].coeff > 0) {
            // q_i = c N^2: 1 = q_i * sum_t (s_t / N)^2 with 1/c = sum s_t^2.
            auto s = four_squares(inverse(mono[i].coeff));
            RationalFunction inv_n = half_power(mono[i].ex, mono[i].ey).inverse();
            for (std::size_t t = 0; t < m; ++t) out.vector[t * dim + i] = RationalFunction(s[t]) * inv_n;
            return out;
        }
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (!(mono[i].coeff > 0 && mono[j].coeff < 0)) continue;
            if (parity(mono[i].ex - mono[j].ex) != 0 || parity(mono[i].ey - mono[j].ey) != 0) continue;
            // Isotropic v: q_i * sum_t s_t^2 + q_j * N^2 = 0 with N^2 = M_i / M_j.
            auto s = four_squares(Rational(-mono[j].coeff / mono[i].coeff));
            RationalFunction n_ratio = half_power(mono[i].ex - mono[j].ex, mono[i].ey - mono[j].ey);
            std::vector<RationalFunction> v(m * dim);
            for (std::size_t t = 0; t < m; ++t) v[t * dim + i] = RationalFunction(s[t]);
            v[j] = n_ratio;
            // x = lambda v + e_j with Q(x) = 2 lambda q_j N + q_j = 1.
            const RationalFunction& qj = q[j];
            RationalFunction lambda = (RationalFunction(1) - qj) / (RationalFunction(2) * qj * n_ratio);
            for (std::size_t k = 0; k < v.size(); ++k) out.vector[k] = lambda * v[k];
            out.vector[j] += RationalFunction(1);
            return out;
        }
    throw DomainError("weak representation verdict without a constructible witness");
}

/// Coarse equivalence of forms over Q(X,Y): dimension, discriminant class, the four monomial signatures,
/// and (for monomial forms) the square-class multisets. Isometry itself is not decided.
inline bool weakly_equivalent(const Form& q1, const Form& q2) {
    if (q1.dim() != q2.dim()) return false;
    for (const auto& P : MonomialOrdering::all())
        if (signature(q1, P) != signature(q2, P)) return false;
    auto monomial = [](const Form& q) {
        return std::all_of(q.entries().begin(), q.entries().end(), [](const auto& e) { return e.is_monomial(); });
    };
    if (monomial(q1) && monomial(q2)) return square_classes(q1) == square_classes(q2);
    RationalFunction d1 = 1, d2 = 1;
    for (const auto& e : q1.entries()) d1 *= e;
    for (const auto& e : q2.entries()) d2 *= e;
    if (d1.is_monomial() && d2.is_monomial()) return monomial_square_class(d1) == monomial_square_class(d2);
    return true;
}

}  // namespace hermsq
