#pragma once

// Randomized property suites. Each suite draws `cases` inputs from a generator seeded by `seed`
// and counts inputs on which a property fails; the first failure is described for diagnosis.

#include <functional>
#include <string>
#include <vector>

#include "hermsq/generic_matrices.hpp"
#include "hermsq/quadratic_forms.hpp"
#include "support.hpp"

namespace hermsq::testing {

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void record(bool ok, const std::function<std::string()>& describe) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first_failure = describe();
    }
};

// ---------------------------------------------------------------------------------------------
// Scalars

inline PropertyResult prop_sign_multiplicative(std::uint64_t seed, std::size_t cases) {
    PropertyResult r{"sign multiplicativity and evaluation oracle"};
    Rng rng(seed);
    for (std::size_t t = 0; t < cases; ++t) {
        Polynomial f = random_xy_poly(rng), g = random_xy_poly(rng);
        bool ok = true;
        for (const auto& P : MonomialOrdering::all()) {
            int sf = sign_at(f, P), sg = sign_at(g, P), sfg = sign_at(f * g, P);
            ok = ok && sfg == sf * sg;
            ok = ok && sf == sign_by_evaluation(RationalFunction(f), P, 3);
            ok = ok && sfg == sign_by_evaluation(RationalFunction(f * g), P, 6);
        }
        r.record(ok, [&] { return "f = " + to_string(f) + ", g = " + to_string(g); });
    }
    return r;
}

inline PropertyResult prop_sign_of_squares(std::uint64_t seed, std::size_t cases) {
    PropertyResult r{"sign of nonzero squares"};
    Rng rng(seed);
    for (std::size_t t = 0; t < cases; ++t) {
        RationalFunction f(random_xy_poly(rng), random_xy_poly(rng, 2, 2));
        bool ok = true;
        for (const auto& P : MonomialOrdering::all()) ok = ok && sign_at(f * f, P) == 1;
        r.record(ok, [&] { return "f = " + to_string(f); });
    }
    return r;
}

inline PropertyResult prop_square_class_invariance(std::uint64_t seed, std::size_t cases) {
    PropertyResult r{"square class of f g^2"};
    Rng rng(seed);
    for (std::size_t t = 0; t < cases; ++t) {
        RationalFunction f = random_monomial(rng), g = random_monomial(rng);
        bool ok = monomial_square_class(f * g * g) == monomial_square_class(f);
        r.record(ok, [&] { return "f = " + to_string(f) + ", g = " + to_string(g); });
    }
    return r;
}

inline PropertyResult prop_canonical_fractions(std::uint64_t seed, std::size_t cases) {
    PropertyResult r{"canonical rational-function normalization"};
    Rng rng(seed);
    for (std::size_t t = 0; t < cases; ++t) {
        Polynomial a = random_xy_poly(rng, 2), b = random_xy_poly(rng, 2), c = random_xy_poly(rng, 2);
        Polynomial d = uniform(rng, 0, 1) ? b : random_xy_poly(rng, 2);
        RationalFunction f(a, b), g(a * c, d * c);
        bool same_fraction = f.num() * g.den() == g.num() * f.den();
        bool identical = f.num() == g.num() && f.den() == g.den();
        bool ok = same_fraction == (b == d) && identical == same_fraction && (f == g) == same_fraction;
        r.record(ok, [&] { return "a = " + to_string(a) + ", b = " + to_string(b) + ", d = " + to_string(d); });
    }
    return r;
}

// ---------------------------------------------------------------------------------------------
// Forms

inline Form random_monomial_form(Rng& rng, std::size_t dim) {
    std::vector<RationalFunction> e;
    for (std::size_t i = 0; i < dim; ++i) e.push_back(random_monomial(rng, 2, 6));
    return Form(std::move(e));
}

inline PropertyResult prop_signature_algebra(std::uint64_t seed, std::size_t cases) {
    PropertyResult r{"signature additivity and multiplicativity"};
    Rng rng(seed);
    for (std::size_t t = 0; t < cases; ++t) {
        Form q1 = random_monomial_form(rng, uniform(rng, 1, 4)), q2 = random_monomial_form(rng, uniform(rng, 1, 4));
        bool ok = true;
        for (const auto& P : MonomialOrdering::all()) {
            int s1 = signature(q1, P), s2 = signature(q2, P);
            ok = ok && signature(perp(q1, q2), P) == s1 + s2;
            ok = ok && signature(tensor(q1, q2), P) == s1 * s2;
            ok = ok && signature(negate(q1), P) == -s1;
        }
        r.record(ok, [&] { return "dims " + std::to_string(q1.dim()) + ", " + std::to_string(q2.dim()); });
    }
    return r;
}

/// Congruence certificate of diagonalize over Q (up to 8x8) and Q(X,Y) (up to 4x4).
inline PropertyResult prop_diagonalize_congruence(std::uint64_t seed, std::size_t cases) {
    PropertyResult r{"diagonalization congruence"};
    Rng rng(seed);
    for (std::size_t t = 0; t < cases; ++t) {
        bool ok = true;
        std::string what;
        if (t % 4 != 3) {
            std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 8));
            Matrix<Rational> m = random_rational_matrix(rng, n, n);
            m = m + m.transpose();
            try {
                auto d = diagonalize(m);
                ok = d.transform.transpose() * m * d.transform == Matrix<Rational>::diagonal(d.form.entries());
            } catch (const SingularMatrix&) {
                ok = characteristic_polynomial(m)[0] == 0;
            }
            what = "rational " + std::to_string(n) + "x" + std::to_string(n);
        } else {
            std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
            Matrix<RationalFunction> m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_small_scalar(rng);
            if (determinant(m).is_zero()) {
                ok = true;
            } else {
                auto d = diagonalize(m);
                ok = d.transform.transpose() * m * d.transform == Matrix<RationalFunction>::diagonal(d.form.entries());
            }
            what = "function " + std::to_string(n) + "x" + std::to_string(n);
        }
        r.record(ok, [&] { return what; });
    }
    return r;
}

inline PropertyResult prop_weak_isotropy(std::uint64_t seed, std::size_t cases) {
    PropertyResult r{"weak isotropy over Q equals indefiniteness"};
    Rng rng(seed);
    for (std::size_t t = 0; t < cases; ++t) {
        std::vector<Rational> e;
        std::size_t dim = static_cast<std::size_t>(uniform(rng, 1, 4));
        bool pos = false, neg = false;
        for (std::size_t i = 0; i < dim; ++i) {
            Rational c(nonzero(rng, 20), uniform(rng, 1, 7));
            c.canonicalize();
            (c > 0 ? pos : neg) = true;
            e.push_back(c);
        }
        RationalForm q(e);
        bool ok = is_weakly_isotropic_Q(q) == (pos && neg);
        // explicit witness 4<a> + <b>: a (s1^2 + ... + s4^2) + b = 0 with sum s_t^2 = -b/a
        for (std::size_t i = 0; ok && i < dim; ++i)
            for (std::size_t j = 0; ok && j < dim; ++j) {
                if (!(e[i] > 0 && e[j] < 0)) continue;
                Rational sum = e[j];
                for (const auto& s : four_squares(Rational(-e[j] / e[i]))) sum += e[i] * s * s;
                ok = sum == 0;
            }
        r.record(ok, [&] { return "dim " + std::to_string(dim); });
    }
    return r;
}

/// Positive answers of weakly_represents_one carry a representation of 1 checked by direct expansion.
inline PropertyResult prop_weak_representation_soundness(std::uint64_t seed, std::size_t cases) {
    PropertyResult r{"weak representation witnesses"};
    Rng rng(seed);
    for (std::size_t t = 0; t < cases; ++t) {
        Form q = random_monomial_form(rng, static_cast<std::size_t>(uniform(rng, 1, 4)));
        auto w = weakly_represents_one(q);
        bool ok = true;
        if (w.represents) {
            RationalFunction s;
            ok = w.vector.size() == w.multiplicity * q.dim();
            for (std::size_t k = 0; ok && k < w.vector.size(); ++k) s += q[k % q.dim()] * w.vector[k] * w.vector[k];
            ok = ok && s == RationalFunction(1);
        } else {
            // an entry c N^2 with c > 0 rational represents 1 over Q after four squares
            for (const auto& e : q.entries()) {
                auto sc = monomial_square_class(e);
                if (sc.a == 0 && sc.b == 0 && sc.d > 0) ok = false;
            }
        }
        r.record(ok, [&] { return "dim " + std::to_string(q.dim()); });
    }
    return r;
}

// ---------------------------------------------------------------------------------------------
// Involutions

struct AlgebraCase {
    std::string name;
    Algebra algebra;
};

inline std::vector<AlgebraCase> property_algebras() {
    auto H = make_quaternion_algebra(-1, -1);
    auto HX = make_quaternion_algebra(RationalFunction(Var::x()), -1);
    Matrix<RationalFunction> S(4, 4);
    const int s[4][4] = {{0, 2, -1, 3}, {-2, 0, 1, 1}, {1, -1, 0, 2}, {-3, -1, -2, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) S(i, j) = RationalFunction(s[i][j]);
    Form q({RationalFunction(Var::x()), RationalFunction(Var::y()), RationalFunction(Var::x()) * RationalFunction(Var::y())});
    return {
        {"M2(F) transpose", Algebra(2, InvolutionSpec::transpose())},
        {"M3(F) adjoint <X,Y,XY>", Algebra(3, InvolutionSpec::adjoint_diag(q))},
        {"M2(F) symplectic", Algebra(2, InvolutionSpec::symplectic_standard())},
        {"M4(F) adjoint of skew S", Algebra(4, InvolutionSpec::adjoint_skew(S))},
        {"(-1,-1) conjugation", Algebra(H, 1, InvolutionSpec::quat_conjugation())},
        {"(X,-1) Int(i) conjugation", Algebra(HX, 1, InvolutionSpec::int_u_conj(Quat::i(HX)))},
        {"M2(-1,-1) hermitian <1,X>", Algebra(H, 2, InvolutionSpec::adjoint_hermitian(Form({RationalFunction(1), RationalFunction(Var::x())})))},
    };
}

inline PropertyResult prop_involution_laws(std::uint64_t seed, std::size_t cases) {
    PropertyResult r{"involution laws"};
    Rng rng(seed);
    auto algebras = property_algebras();
    for (std::size_t t = 0; t < cases; ++t) {
        const auto& [name, A] = algebras[t % algebras.size()];
        AlgElem x = random_element(rng, A), y = random_element(rng, A);
        RationalFunction c = random_small_scalar(rng);
        bool ok = A.apply_involution(A.apply_involution(x)) == x;
        ok = ok && A.apply_involution(x * y) == A.apply_involution(y) * A.apply_involution(x);
        ok = ok && A.apply_involution(x + y) == A.apply_involution(x) + A.apply_involution(y);
        ok = ok && A.apply_involution(A.scalar(c)) == A.scalar(c);
        ok = ok && A.reduced_trace(x * y) == A.reduced_trace(y * x);
        ok = ok && A.is_symmetric(A.hermitian_square(x));
        for (const auto& P : sigma_orderings(A)) ok = ok && sign_at(A.reduced_trace(A.hermitian_square(x)), P) >= 0;
        r.record(ok, [&] { return name; });
    }
    return r;
}

inline PropertyResult prop_reduced_norm(std::uint64_t seed, std::size_t cases) {
    PropertyResult r{"reduced norm multiplicativity"};
    Rng rng(seed);
    auto H = make_quaternion_algebra(RationalFunction(Var::x()), RationalFunction(Var::y()));
    for (std::size_t t = 0; t < cases; ++t) {
        Quat p = random_quat(rng, H), q = random_quat(rng, H);
        bool ok = (p * q).nrd() == p.nrd() * q.nrd() && p * p.conj() == Quat(p.nrd()) && (p + p.conj()) == Quat(p.trd());
        r.record(ok, [] { return std::string("quaternion pair"); });
    }
    return r;
}

// ---------------------------------------------------------------------------------------------
// Certificates

/// Changes one coordinate of one witness entry by k/97, a rational that the constructions never
/// produce, so the change cannot undo itself by a sign flip.
inline HermSqCertificate perturb(Rng& rng, HermSqCertificate c) {
    auto& w = c.witnesses[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(c.witnesses.size()) - 1))];
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(w.rows()) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(w.cols()) - 1));
    RationalFunction delta(Rational(nonzero(rng, 96), 97));
    const auto& H = c.algebra.quaternion();
    if (!H) {
        w(i, j) = w(i, j) + Quat(delta);
    } else {
        std::array<RationalFunction, 4> d{};
        d[static_cast<std::size_t>(uniform(rng, 0, 3))] = delta;
        w(i, j) = w(i, j) + Quat(H, d[0], d[1], d[2], d[3]);
    }
    return c;
}

inline std::vector<HermSqCertificate> certificate_pool(Rng& rng) {
    std::vector<HermSqCertificate> pool;
    for (auto [a, b] : {std::pair{-1, -1}, {-1, -3}}) {
        auto H = make_quaternion_algebra(a, b);
        for (auto& e : prop41_certificates(H, InvolutionSpec::quat_conjugation())) pool.push_back(e.certificate);
    }
    {
        auto H = make_quaternion_algebra(-1, -1);
        for (auto& e : prop41_certificates(H, InvolutionSpec::int_u_conj(Quat::i(H)))) pool.push_back(e.certificate);
    }
    for (int k = 0; k < 4; ++k) {
        std::size_t n = k < 2 ? 2 : 4;
        Matrix<RationalFunction> S(n, n);
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    S(i, j) = RationalFunction(uniform(rng, -4, 4));
                    S(j, i) = -S(i, j);
                }
        } while (determinant(S).is_zero());
        pool.push_back(symplectic_minus_one(S).certificate);
    }
    for (int k = 0; k < 4; ++k) {
        std::size_t n = static_cast<std::size_t>(2 + k);
        Matrix<Rational> b = random_rational_matrix(rng, n, n, 3);
        pool.push_back(psd_certificate(b.transpose() * b));
    }
    for (const auto& [name, A] : property_algebras()) {
        std::vector<AlgElem> xs{random_element(rng, A), random_element(rng, A)};
        pool.push_back({A, sum_of_hermitian_squares(A, xs), xs});
    }
    return pool;
}

/// sum_k Trd(sigma(w_k) w_k) from the Gram matrix of the trace form, as an independent check
/// that a perturbation changed the hermitian-square sum.
inline RationalFunction trace_value(const HermSqCertificate& c, const GramForm& g) {
    RationalFunction total;
    for (const auto& w : c.witnesses) {
        auto v = c.algebra.coordinates(w);
        for (std::size_t p = 0; p < v.size(); ++p)
            for (std::size_t q = 0; q < v.size(); ++q)
                if (!v[p].is_zero() && !v[q].is_zero()) total += v[p] * g(p, q) * v[q];
    }
    return total;
}

/// A perturbed certificate must fail whenever its trace value moved; perturbations that keep the
/// trace value (a witness entry with zero cofactor in (M_2, symplectic), say) are not counted.
inline PropertyResult prop_certificate_perturbation(std::uint64_t seed, std::size_t cases) {
    PropertyResult r{"certificate perturbation falsification"};
    Rng rng(seed);
    auto pool = certificate_pool(rng);
    std::vector<GramForm> grams;
    for (const auto& c : pool) grams.push_back(c.algebra.trace_form());
    for (std::size_t t = 0, tries = 0; t < cases; ++tries) {
        std::size_t k = t % pool.size();
        const auto& c = pool[k];
        auto bad = perturb(rng, c);
        if (trace_value(bad, grams[k]) == trace_value(c, grams[k]) && tries < 20 * cases) continue;
        ++t;
        bool ok = verify_hermsq(c) && !verify_hermsq(bad);
        r.record(ok, [&] { return "certificate " + std::to_string(k); });
    }
    return r;
}

// ---------------------------------------------------------------------------------------------
// Noncommutative polynomials

inline NCPolynomial random_nc(Rng& rng, unsigned vars, unsigned max_deg, int terms) {
    NCPolynomial f;
    for (int k = 0; k < terms; ++k) {
        Word w;
        unsigned d = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_deg)));
        for (unsigned i = 0; i < d; ++i)
            w.push_back(Letter{static_cast<unsigned>(uniform(rng, 1, static_cast<int>(vars))), uniform(rng, 0, 1) == 1});
        f.add_term(w, Rational(nonzero(rng, 4)));
    }
    return f;
}

inline PropertyResult prop_generic_star_homomorphism(std::uint64_t seed, std::size_t cases) {
    PropertyResult r{"generic evaluation is a *-homomorphism"};
    Rng rng(seed);
    GenericMatrixContext orth(2, 2, InvolutionType::orthogonal), symp(2, 2, InvolutionType::symplectic);
    for (std::size_t t = 0; t < cases; ++t) {
        const auto& ctx = t % 2 ? symp : orth;
        NCPolynomial f = random_nc(rng, 2, 3, 3), g = random_nc(rng, 2, 2, 2);
        bool ok = ctx.eval(f.star()) == ctx.involution(ctx.eval(f));
        ok = ok && ctx.eval(f * g) == ctx.eval(f) * ctx.eval(g);
        r.record(ok, [&] { return to_string(f); });
    }
    return r;
}

// ---------------------------------------------------------------------------------------------

/// All suites at their acceptance sizes (more than 10^4 cases in total).
inline std::vector<PropertyResult> run_all_properties(std::uint64_t seed, double size = 1.0) {
    auto n = [&](std::size_t c) { return std::max<std::size_t>(1, static_cast<std::size_t>(c * size)); };
    return {
        prop_involution_laws(seed + 1, n(1400)),
        prop_reduced_norm(seed + 2, n(500)),
        prop_sign_multiplicative(seed + 3, n(2500)),
        prop_sign_of_squares(seed + 4, n(1000)),
        prop_square_class_invariance(seed + 5, n(1000)),
        prop_canonical_fractions(seed + 6, n(1000)),
        prop_signature_algebra(seed + 7, n(1500)),
        prop_diagonalize_congruence(seed + 8, n(400)),
        prop_weak_isotropy(seed + 9, n(500)),
        prop_weak_representation_soundness(seed + 10, n(300)),
        prop_certificate_perturbation(seed + 11, n(1000)),
        prop_generic_star_homomorphism(seed + 12, n(300)),
    };
}

}  // namespace hermsq::testing
