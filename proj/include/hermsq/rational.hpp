#pragma once

// Exact integers and rationals (GMP-backed) plus the arithmetic helpers the
// quadratic-form code needs: square-free parts, factorization, four squares.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hermsq/error.hpp"

namespace hermsq {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational inverse(const Rational& r) {
    if (r == 0) throw DivisionByZero();
    return Rational(1) / r;
}

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

inline bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_square(const Rational& q) {
    return q >= 0 && is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

inline Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

inline bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
inline Integer pollard_rho(const Integer& n) {
    if (n % 2 == 0) return 2;
    std::mt19937_64 rng(0x5eed);
    for (;;) {
        Integer c = Integer(static_cast<unsigned long>(rng() % 1000000 + 1));
        Integer y = Integer(static_cast<unsigned long>(rng() % 1000000 + 2)) % n;
        Integer g = 1, q = 1, x, ys;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer d = x - y;
                    q = (q * abs(d)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer d = abs(Integer(x - ys));
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void factor_into(Integer n, std::vector<Integer>& primes) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace detail

/// Prime factorization of |n| (n != 0), ascending primes with multiplicities.
inline std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
    if (n == 0) throw DomainError("cannot factor zero");
    Integer m = abs(n);
    std::vector<Integer> primes;
    for (unsigned long p = 2; p < 10000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            primes.emplace_back(p);
            m /= p;
        }
    }
    if (m > 1) detail::factor_into(m, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Integer, unsigned>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

/// Signed square-free part: n = squarefree_part(n) * k^2 with k > 0.
inline Integer squarefree_part(const Integer& n) {
    if (n == 0) throw DomainError("square-free part of zero");
    Integer out = sign(n) < 0 ? -1 : 1;
    for (const auto& [p, e] : factorize(n))
        if (e % 2 == 1) out *= p;
    return out;
}

/// Square class representative of a nonzero rational: the square-free integer d with q = d * r^2.
inline Integer squarefree_part(const Rational& q) {
    return squarefree_part(Integer(q.get_num() * q.get_den()));
}

/// Nonnegative integers (a, b, c, d) with a^2 + b^2 + c^2 + d^2 = n.
inline std::array<Integer, 4> four_squares(const Integer& n) {
    if (n < 0) throw DomainError("four_squares of a negative integer");
    // Strip factors of 4: (2a)^2 + ... = 4(a^2 + ...).
    Integer m = n, scale = 1;
    while (m != 0 && m % 4 == 0) {
        m /= 4;
        scale *= 2;
    }
    for (Integer a = isqrt(m); a >= 0; --a) {
        Integer r1 = m - a * a;
        for (Integer b = std::min(a, isqrt(r1)); b >= 0; --b) {
            Integer r2 = r1 - b * b;
            for (Integer c = std::min(b, isqrt(r2)); c >= 0 && 2 * c * c >= r2; --c) {
                Integer r3 = r2 - c * c;
                if (is_perfect_square(r3)) return {a * scale, b * scale, c * scale, isqrt(r3) * scale};
            }
        }
    }
    throw DomainError("four-square search failed");  // unreachable by Lagrange
}

/// Rationals (t0..t3) with t0^2 + t1^2 + t2^2 + t3^2 = q for q >= 0.
inline std::array<Rational, 4> four_squares(const Rational& q) {
    if (q < 0) throw DomainError("four_squares of a negative rational");
    // q = (num*den) / den^2
    auto ints = four_squares(Integer(q.get_num() * q.get_den()));
    std::array<Rational, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = make_rational(ints[i], q.get_den());
    return out;
}

inline Rational pow(const Rational& base, long e) {
    if (e < 0) return pow(inverse(base), -e);
    Rational r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace hermsq
