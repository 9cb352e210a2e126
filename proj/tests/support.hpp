#pragma once

// Random generators and independent oracles shared by the unit tests and the acceptance binary.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hermsq/certificates.hpp"
#include "hermsq/scalar_io.hpp"

namespace hermsq::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline int nonzero(Rng& rng, int bound) {
    int v = uniform(rng, 1, bound);
    return uniform(rng, 0, 1) ? v : -v;
}

inline Monomial xy_monomial(unsigned a, unsigned b) {
    return Monomial::from_entries({{Var::x(), a}, {Var::y(), b}});
}

/// Sparse polynomial in X, Y with small coefficients; never zero.
inline Polynomial random_xy_poly(Rng& rng, unsigned max_deg = 3, int terms = 3, int coeff = 5) {
    Polynomial p;
    while (p.is_zero()) {
        int t = uniform(rng, 1, terms);
        for (int k = 0; k < t; ++k) {
            unsigned a = uniform(rng, 0, max_deg), b = uniform(rng, 0, max_deg);
            p += Polynomial(xy_monomial(a, b), Rational(nonzero(rng, coeff)));
        }
    }
    return p;
}

/// Nonzero rational multiple of a Laurent monomial X^i Y^j.
inline RationalFunction random_monomial(Rng& rng, int max_exp = 3, int coeff = 12) {
    LaurentMonomial m{Rational(nonzero(rng, coeff), uniform(rng, 1, 4)), uniform(rng, -max_exp, max_exp),
                      uniform(rng, -max_exp, max_exp)};
    m.coeff.canonicalize();
    return m.to_function();
}

inline RationalFunction random_small_scalar(Rng& rng) {
    switch (uniform(rng, 0, 4)) {
        case 0: return RationalFunction(0);
        case 1:
        case 2: return RationalFunction(nonzero(rng, 3));
        case 3: return random_monomial(rng, 2, 3);
        default: return RationalFunction(random_xy_poly(rng, 1, 2, 2));
    }
}

inline Quat random_quat(Rng& rng, const QuaternionAlgebraPtr& H, bool monomials = true) {
    auto c = [&] { return monomials ? random_small_scalar(rng) : RationalFunction(uniform(rng, -3, 3)); };
    if (!H) return Quat(c());
    return Quat(H, c(), c(), c(), c());
}

inline AlgElem random_element(Rng& rng, const Algebra& A, bool monomials = true) {
    AlgElem x = A.zero();
    for (std::size_t i = 0; i < A.n(); ++i)
        for (std::size_t j = 0; j < A.n(); ++j) x(i, j) = random_quat(rng, A.quaternion(), monomials);
    return x;
}

inline Matrix<Rational> random_rational_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = 5) {
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = Rational(uniform(rng, -bound, bound), uniform(rng, 1, 3));
            m(i, j).canonicalize();
        }
    return m;
}

/// Random symmetric matrix: a third each of unstructured, B^t B (PSD, often singular), and
/// B^t B minus a small rank-one term (usually just barely indefinite).
inline Matrix<Rational> random_symmetric(Rng& rng, std::size_t n) {
    int kind = uniform(rng, 0, 2);
    if (kind == 0) {
        Matrix<Rational> m = random_rational_matrix(rng, n, n);
        return scale(Rational(1, 2), m + m.transpose());
    }
    std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(n)));
    Matrix<Rational> b = random_rational_matrix(rng, k, n, 3);
    Matrix<Rational> m = b.transpose() * b;
    if (kind == 2) {
        Matrix<Rational> v = random_rational_matrix(rng, n, 1, 2);
        m -= scale(Rational(1, uniform(rng, 1, 50)), v * v.transpose());
    }
    return m;
}

// ---------------------------------------------------------------------------------------------
// Oracles

/// Sign by exact evaluation at X = sx/1000, Y = sy * 10^-(3(d+2)), small enough that Y is
/// negligible against every power of X up to the degree bound d.
inline int sign_by_evaluation(const RationalFunction& f, const MonomialOrdering& P, unsigned degree_bound) {
    std::map<Var, Rational> at;
    at[Var::x()] = Rational(P.sign_x, 1000);
    Integer den = 1;
    for (unsigned k = 0; k < 3 * (degree_bound + 2); ++k) den *= 10;
    at[Var::y()] = Rational(Integer(P.sign_y), den);
    Rational v = f.evaluate(at);
    return sgn(v);
}

/// Integer search for a nontrivial zero of sum c_i x_i^2 with |x_i| <= height, solving for the
/// last coordinate. Entries must be nonzero integers.
inline bool brute_force_isotropic(const std::vector<long>& c, long height) {
    const std::size_t d = c.size();
    if (d < 2) return false;
    std::vector<long> x(d - 1, 0);
    const long last = c.back();
    for (;;) {
        std::size_t k = 0;
        while (k < x.size() && x[k] == height) x[k++] = 0;
        if (k == x.size()) return false;
        ++x[k];
        long s = 0;
        for (std::size_t i = 0; i + 1 < d; ++i) s += c[i] * x[i] * x[i];
        // c_last * t^2 = -s
        if (s == 0) return true;
        if ((-s) % last != 0) continue;
        long q = -s / last;
        if (q < 0) continue;
        long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(q))));
        for (long t = std::max(0L, r - 1); t <= r + 1; ++t)
            if (t * t == q && t <= height) return true;
    }
}

/// Coefficients c_0..c_n of det(t I - M) by the Faddeev-LeVerrier recursion.
inline std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix<Rational> mk(n, n), id = Matrix<Rational>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * (mk + scale(c[n - k + 1], id));
        c[n - k] = -mk.trace() / Rational(static_cast<long>(k));
    }
    return c;
}

/// A real symmetric matrix is PSD iff (-1)^(n-k) c_k >= 0 for its characteristic coefficients.
inline bool psd_by_charpoly(const Matrix<Rational>& m) {
    auto c = characteristic_polynomial(m);
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k <= n; ++k) {
        int s = ((n - k) % 2 == 0) ? 1 : -1;
        if (s * sgn(c[k]) < 0) return false;
    }
    return true;
}

}  // namespace hermsq::testing
