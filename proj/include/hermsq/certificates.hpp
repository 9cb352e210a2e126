#pragma once

// Hermitian-square certificates a = sum sigma(x_i) x_i and the weighted shape
// a = sum_eps alpha^eps sum_i sigma(x_{i,eps}) x_{i,eps}, their construction and exact verification.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermsq/involution_algebra.hpp"

namespace hermsq {

struct HermSqCertificate {
    Algebra algebra;
    AlgElem target;
    std::vector<AlgElem> witnesses;
};

inline AlgElem sum_of_hermitian_squares(const Algebra& A, const std::vector<AlgElem>& xs) {
    AlgElem s = A.zero();
    for (const auto& x : xs) s += A.hermitian_square(x);
    return s;
}

inline bool verify_hermsq(const HermSqCertificate& c) {
    c.algebra.check(c.target);
    return sum_of_hermitian_squares(c.algebra, c.witnesses) == c.target;
}

/// Terms are keyed by bitstrings over the weights ("" when there are none).
struct WeightedCertificate {
    Algebra algebra;
    AlgElem target;
    std::vector<AlgElem> weights;
    std::map<std::string, std::vector<AlgElem>> terms;
};

inline std::vector<bool> parse_bitstring(const std::string& key, std::size_t m) {
    if (key.size() != m) throw DomainError("term key '" + key + "' must have one bit per weight");
    std::vector<bool> bits;
    for (char c : key) {
        if (c != '0' && c != '1') throw DomainError("term key '" + key + "' is not a bitstring");
        bits.push_back(c == '1');
    }
    return bits;
}

inline void check_weights(const WeightedCertificate& c) {
    for (std::size_t i = 0; i < c.weights.size(); ++i) {
        const auto& w = c.weights[i];
        c.algebra.check(w);
        if (!Algebra::is_central(w)) throw DomainError("weight " + std::to_string(i) + " is not central");
        if (w(0, 0).is_zero()) throw DomainError("weight " + std::to_string(i) + " is zero");
        if (!c.algebra.is_symmetric(w)) throw DomainError("weight " + std::to_string(i) + " is not symmetric");
    }
}

inline bool verify_weighted(const WeightedCertificate& c) {
    check_weights(c);
    c.algebra.check(c.target);
    AlgElem total = c.algebra.zero();
    for (const auto& [key, xs] : c.terms) {
        auto bits = parse_bitstring(key, c.weights.size());
        Quat coeff(1);
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) coeff = coeff * c.weights[i](0, 0);
        total += scale(coeff, sum_of_hermitian_squares(c.algebra, xs));
    }
    return total == c.target;
}

inline RationalFunction central_value(const AlgElem& x) {
    if (!Algebra::is_central(x)) throw DomainError("non-scalar target");
    return x(0, 0).scalar_part();
}

/// Uses alpha sigma(x) x = sum_k sigma(y_k x)(y_k x) for central alpha = sum_k sigma(y_k) y_k,
/// one weight factor at a time. weight_certs is keyed by weight index.
inline HermSqCertificate rewrite_weighted_to_pure(const WeightedCertificate& wc,
                                                  const std::map<std::size_t, HermSqCertificate>& weight_certs) {
    check_weights(wc);
    for (const auto& [i, cert] : weight_certs) {
        if (i >= wc.weights.size()) throw DomainError("certificate for unknown weight " + std::to_string(i));
        if (cert.algebra.n() != wc.algebra.n() || cert.algebra.is_split() != wc.algebra.is_split())
            throw DomainError("weight certificate lives in a different algebra");
        if (!(cert.target == wc.weights[i]) || !verify_hermsq(cert))
            throw DomainError("weight certificate " + std::to_string(i) + " does not certify its weight");
    }
    HermSqCertificate out{wc.algebra, wc.target, {}};
    for (const auto& [key, xs] : wc.terms) {
        auto bits = parse_bitstring(key, wc.weights.size());
        std::vector<AlgElem> current = xs;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (!bits[i]) continue;
            auto it = weight_certs.find(i);
            if (it == weight_certs.end()) throw DomainError("no certificate for weight " + std::to_string(i));
            std::vector<AlgElem> next;
            for (const auto& y : it->second.witnesses)
                for (const auto& w : current) next.push_back(y * w);
            current = std::move(next);
        }
        out.witnesses.insert(out.witnesses.end(), current.begin(), current.end());
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Quaternion entry certificates

struct EntryCertificate {
    RationalFunction entry;
    HermSqCertificate certificate;
};

namespace detail {

inline RationalFunction lcm_of_denominators(const std::vector<RationalFunction>& v) {
    Polynomial l(1);
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        l = exact_divide(l * x.den(), gcd(l, x.den()));
    }
    return RationalFunction(l);
}

}  // namespace detail

/// Pure s with us + su = 0: the first null vector of the map s -> us + su on span(i, j, k),
/// with denominators cleared.
inline Quat anticommuting_pure(const QuaternionAlgebraPtr& H, const Quat& u) {
    if (!u.is_pure() || u.is_zero()) throw DomainError("u must be a nonzero pure quaternion");
    std::vector<Quat> basis{Quat::i(H), Quat::j(H), Quat::k(H)};
    Matrix<RationalFunction> m(4, 3);
    for (std::size_t c = 0; c < 3; ++c) {
        Quat v = u * basis[c] + basis[c] * u;
        for (std::size_t r = 0; r < 4; ++r) m(r, c) = v[r];
    }
    auto null = nullspace(m);
    if (null.empty()) throw DomainError("no anticommuting pure quaternion (u is not invertible)");
    RationalFunction l = detail::lcm_of_denominators(null.front());
    const auto& s = null.front();
    return Quat(H, 0, l * s[0], l * s[1], l * s[2]);
}

/// Entries of a diagonalisation of the trace form of (H, sigma), each with a hermitian-square
/// certificate. sigma is quaternion conjugation or Int(u) composed with it.
inline std::vector<EntryCertificate> prop41_certificates(const QuaternionAlgebraPtr& H, const InvolutionSpec& sigma) {
    Algebra A(H, 1, sigma);
    std::vector<Quat> witnesses;
    if (sigma.kind == InvolutionKind::quat_conjugation) {
        witnesses = {Quat(1), Quat::i(H), Quat::j(H), Quat::k(H)};
    } else if (sigma.kind == InvolutionKind::int_u_conj) {
        const Quat& u = *sigma.u;
        Quat s = anticommuting_pure(H, u);
        witnesses = {Quat(1), u, s, u * s};
    } else {
        throw DomainError("prop41_certificates needs quat_conjugation or int_u_conj");
    }
    std::vector<EntryCertificate> out;
    for (const auto& w : witnesses) {
        AlgElem x = AlgElem::scalar(1, w);
        AlgElem h = A.hermitian_square(x);
        RationalFunction c = central_value(h);
        // 2c = sigma(x)x + sigma(x)x
        out.push_back({RationalFunction(2) * c, HermSqCertificate{A, A.scalar(RationalFunction(2) * c), {x, x}}});
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Tensor products, kept formal: an element is a sum of pure tensors of per-factor elements.

using PureTensor = std::vector<AlgElem>;

struct TensorCertificate {
    std::vector<Algebra> factors;
    RationalFunction target;  // central scalar
    std::vector<PureTensor> witnesses;
};

inline TensorCertificate as_tensor_certificate(const HermSqCertificate& c) {
    TensorCertificate t{{c.algebra}, central_value(c.target), {}};
    for (const auto& w : c.witnesses) t.witnesses.push_back({w});
    return t;
}

namespace detail {

inline std::vector<RationalFunction> kronecker(const std::vector<RationalFunction>& a,
                                               const std::vector<RationalFunction>& b) {
    std::vector<RationalFunction> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x.is_zero() || y.is_zero() ? RationalFunction() : x * y);
    return out;
}

inline std::vector<RationalFunction> tensor_coordinates(const std::vector<Algebra>& factors, const PureTensor& t) {
    std::vector<RationalFunction> v{RationalFunction(1)};
    for (std::size_t f = 0; f < factors.size(); ++f) v = kronecker(v, factors[f].coordinates(t[f]));
    return v;
}

}  // namespace detail

/// Expands sum_k (x) sigma_f(w_kf) w_kf in the product basis and compares with target * (1 (x) ... (x) 1).
inline bool verify_tensor(const TensorCertificate& c) {
    if (c.factors.empty()) throw DomainError("tensor certificate without factors");
    PureTensor one;
    for (const auto& A : c.factors) one.push_back(A.one());
    auto expected = detail::tensor_coordinates(c.factors, one);
    for (auto& e : expected) e *= c.target;
    std::vector<RationalFunction> total(expected.size());
    for (const auto& w : c.witnesses) {
        if (w.size() != c.factors.size()) throw DimensionMismatch("pure tensor has the wrong number of factors");
        PureTensor h;
        for (std::size_t f = 0; f < w.size(); ++f) h.push_back(c.factors[f].hermitian_square(w[f]));
        auto v = detail::tensor_coordinates(c.factors, h);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) total[k] += v[k];
    }
    return total == expected;
}

/// Certificate for beta1 * beta2 in the tensor product, with witnesses x_i (x) y_j.
inline TensorCertificate tensor_certificates(const TensorCertificate& c1, const TensorCertificate& c2) {
    TensorCertificate out{c1.factors, c1.target * c2.target, {}};
    out.factors.insert(out.factors.end(), c2.factors.begin(), c2.factors.end());
    for (const auto& x : c1.witnesses)
        for (const auto& y : c2.witnesses) {
            PureTensor t = x;
            t.insert(t.end(), y.begin(), y.end());
            out.witnesses.push_back(std::move(t));
        }
    return out;
}

inline TensorCertificate tensor_certificates(const HermSqCertificate& c1, const HermSqCertificate& c2) {
    return tensor_certificates(as_tensor_certificate(c1), as_tensor_certificate(c2));
}

/// Folds a chain of scalar-target certificates left to right.
inline TensorCertificate tensor_chain(const std::vector<HermSqCertificate>& certs) {
    if (certs.empty()) throw DomainError("empty certificate chain");
    TensorCertificate acc = as_tensor_certificate(certs.front());
    for (std::size_t k = 1; k < certs.size(); ++k) acc = tensor_certificates(acc, as_tensor_certificate(certs[k]));
    return acc;
}

// ---------------------------------------------------------------------------------------------
// -1 as a hermitian square for a symplectic involution.

inline Matrix<RationalFunction> standard_skew_block(std::size_t n) {
    Matrix<RationalFunction> b(n, n);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        b(k, k + 1) = RationalFunction(1);
        b(k + 1, k) = RationalFunction(-1);
    }
    return b;
}

struct SymplecticMinusOne {
    Matrix<RationalFunction> S, P, B, X, Y, W;
    HermSqCertificate certificate;
};

/// P with P^t S P = blockdiag([[0,1],[-1,0]]), pivoting on the first nonzero entry above the
/// diagonal of the trailing block.
inline Matrix<RationalFunction> skew_congruence(const Matrix<RationalFunction>& S) {
    const std::size_t n = S.rows();
    using M = Matrix<RationalFunction>;
    M P = M::identity(n);
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < n; ++r) std::swap(P(r, a), P(r, b));
    };
    for (std::size_t e = 0; e < n; e += 2) {
        const std::size_t f = e + 1;
        M cur = P.transpose() * S * P;
        std::size_t pr = n, pc = n;
        for (std::size_t r = e; r < n && pr == n; ++r)
            for (std::size_t c = r + 1; c < n; ++c)
                if (!cur(r, c).is_zero()) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == n) throw SingularMatrix("skew-symmetric matrix is singular");
        swap_cols(e, pr);
        swap_cols(f, pc == e ? pr : pc);
        cur = P.transpose() * S * P;
        RationalFunction inv = cur(e, f).inverse();
        for (std::size_t r = 0; r < n; ++r) P(r, f) *= inv;
        cur = P.transpose() * S * P;
        for (std::size_t l = f + 1; l < n; ++l) {
            RationalFunction a = cur(f, l), b = cur(e, l);
            if (a.is_zero() && b.is_zero()) continue;
            for (std::size_t r = 0; r < n; ++r) P(r, l) += a * P(r, e) - b * P(r, f);
        }
    }
    return P;
}

inline SymplecticMinusOne symplectic_minus_one(const Matrix<RationalFunction>& S) {
    const std::size_t n = S.rows();
    if (!S.is_square() || n == 0 || n % 2 != 0) throw DomainError("S must be square of even size");
    if (!(S.transpose() == -S)) throw DomainError("S is not skew-symmetric");
    if (determinant(S).is_zero()) throw SingularMatrix("S is singular");
    using M = Matrix<RationalFunction>;
    M P = skew_congruence(S);
    M X(n, n);
    for (std::size_t k = 0; k < n; k += 2) {
        X(k, k + 1) = RationalFunction(1);
        X(k + 1, k) = RationalFunction(1);
    }
    M Y = P * X * P.transpose();
    M W = S * Y;
    Algebra A(n, InvolutionSpec::adjoint_skew(S));
    SymplecticMinusOne r{S, P, standard_skew_block(n), X, Y, W, HermSqCertificate{A, A.scalar(-1), {lift(W)}}};
    return r;
}

// ---------------------------------------------------------------------------------------------
// Totally positive, not a sum of hermitian squares.

struct CounterexampleReport {
    std::optional<Algebra> algebra;
    RationalFunction alpha, beta;
    AlgElem element;
    bool element_symmetric = false;
    // positivity: sum_k Trd(sigma(b_k) b_k) = alpha beta
    std::vector<AlgElem> positivity_witnesses;
    RationalFunction positivity_value;
    bool positivity_verified = false;
    // orderings
    Form trace_form;
    std::vector<int> signatures;  // in MonomialOrdering::all() order
    bool definite_attained = false;
    // obstruction
    Form entry33_form;     // (3,3) entry of sum sigma(a_i)a_i as a form in the entries of the a_i
    bool entry33_symbolic_verified = false;
    Form reduced_form;     // entry33_form scaled by 1/(alpha beta)
    WeakRepresentation weak_rep;
    bool verdict = false;
};

inline CounterexampleReport counterexample_pipeline(const RationalFunction& alpha, const RationalFunction& beta,
                                                    const QuaternionAlgebraPtr& H = nullptr) {
    as_laurent_monomial(alpha);
    as_laurent_monomial(beta);
    CounterexampleReport rep;
    rep.alpha = alpha;
    rep.beta = beta;
    RationalFunction ab = alpha * beta;
    Form q({alpha, beta, ab});
    Algebra A = H ? Algebra(H, 3, InvolutionSpec::adjoint_hermitian(q)) : Algebra(3, InvolutionSpec::adjoint_diag(q));
    rep.element = A.scalar(ab);
    rep.element_symmetric = A.is_symmetric(rep.element);

    // sigma(alpha E12) alpha E12 = alpha beta E22; over a quaternion base Trd doubles, so use two halves.
    if (A.is_split()) {
        rep.positivity_witnesses = {A.unit(0, 1, Quat(alpha))};
    } else {
        AlgElem half = A.unit(0, 1, Quat(alpha * RationalFunction(Rational(1, 2))));
        rep.positivity_witnesses = {half, half};
    }
    for (const auto& b : rep.positivity_witnesses) rep.positivity_value += A.reduced_trace(A.hermitian_square(b));
    rep.positivity_verified = rep.positivity_value == ab;

    rep.trace_form = diagonalize(A.trace_form()).form;
    for (const auto& P : MonomialOrdering::all()) {
        int s = signature(rep.trace_form, P);
        rep.signatures.push_back(s);
        if (s == static_cast<int>(rep.trace_form.dim())) rep.definite_attained = true;
    }

    // (3,3) entry: sum_k (d_3/d_k) Nrd(a_k3) with Nrd expanded as the norm form of H.
    std::vector<RationalFunction> e33;
    Form norm = H ? Form({RationalFunction(1), -H->a, -H->b, H->a * H->b}) : Form({RationalFunction(1)});
    for (std::size_t k = 0; k < 3; ++k)
        for (const auto& n : norm.entries()) e33.push_back(q.entries()[2] / q.entries()[k] * n);
    rep.entry33_form = Form(e33);
    {
        AlgElem a = symbolic_element(A, 1);
        rep.entry33_symbolic_verified = entry_33_constraint(A, {a}) == entry_33_norm_expression(A, {a});
    }
    rep.reduced_form = scale(ab.inverse(), rep.entry33_form);
    rep.weak_rep = weakly_represents_one(rep.reduced_form);
    rep.verdict = rep.element_symmetric && rep.positivity_verified && rep.definite_attained &&
                  rep.entry33_symbolic_verified && !rep.weak_rep.represents;
    rep.algebra = std::move(A);
    return rep;
}

// ---------------------------------------------------------------------------------------------

/// Exact PSD test by symmetric pivoting.
inline bool psd_symmetric_rational(Matrix<Rational> m) {
    if (!m.is_symmetric()) throw DomainError("matrix is not symmetric");
    std::size_t n = m.rows();
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            if (m(i, i) < 0) return false;
            if (m(i, i) == 0) {
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[j] && m(i, j) != 0) return false;
                done[i] = true;  // zero row
                continue;
            }
            if (piv == n) piv = i;
        }
        if (piv == n) break;
        done[piv] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || m(i, piv) == 0) continue;
            Rational f = m(i, piv) / m(piv, piv);
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j]) m(i, j) -= f * m(piv, j);
        }
    }
    return true;
}

/// For a positive semidefinite rational a: a = sum_k d_k r_k^t r_k by symmetric elimination
/// (d_k > 0 the pivots, r_k the scaled pivot rows), and each d_k a sum of four squares, so
/// a = sum x^t x over (M_n(Q), transpose) with every witness supported on its first row.
inline HermSqCertificate psd_certificate(const Matrix<Rational>& a) {
    if (!a.is_symmetric()) throw DomainError("matrix is not symmetric");
    const std::size_t n = a.rows();
    Algebra A(n, InvolutionSpec::transpose());
    HermSqCertificate c{A, lift(a.map([](const Rational& v) { return RationalFunction(v); })), {}};
    Matrix<Rational> m = a;
    for (;;) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (m(i, i) < 0) throw DomainError("matrix is not positive semidefinite");
            if (m(i, i) == 0) {
                for (std::size_t j = 0; j < n; ++j)
                    if (m(i, j) != 0) throw DomainError("matrix is not positive semidefinite");
            } else if (piv == n) {
                piv = i;
            }
        }
        if (piv == n) break;
        const Rational d = m(piv, piv);
        std::vector<Rational> r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = m(piv, j) / d;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= d * r[i] * r[j];
        for (const auto& s : four_squares(d)) {
            if (s == 0) continue;
            AlgElem x = A.zero();
            for (std::size_t k = 0; k < n; ++k)
                if (r[k] != 0) x(0, k) = Quat(RationalFunction(Rational(s * r[k])));
            c.witnesses.push_back(std::move(x));
        }
    }
    return c;
}

}  // namespace hermsq
