#pragma once

// Central simple algebras M_n(F) and M_n(H), H = (a,b)_F, with involutions of the first kind.
// Elements are matrices of Quat in both cases; over F every entry is a scalar quaternion.

#include <optional>
#include <string>
#include <vector>

#include "hermsq/matrix.hpp"
#include "hermsq/ordering.hpp"
#include "hermsq/quadratic_forms.hpp"
#include "hermsq/quaternion.hpp"

namespace hermsq {

using AlgElem = Matrix<Quat>;

enum class InvolutionKind {
    transpose,            // x^t on M_n(F)
    adjoint_diag,         // D x^t D^-1, D = diag(q), on M_n(F)
    symplectic_standard,  // [[x,y],[z,w]] -> [[w^t,-y^t],[-z^t,x^t]] on M_2m(F)
    adjoint_skew,         // S x^t S^-1 for skew-symmetric nonsingular S, on M_n(F)
    quat_conjugation,     // gamma(x)^t on M_n(H)
    int_u_conj,           // u gamma(x)^t u^-1 with gamma(u) = -u, on M_n(H)
    adjoint_hermitian,    // D gamma(x)^t D^-1, D = diag(h) with entries in F, on M_n(H)
};

inline std::string to_string(InvolutionKind k) {
    switch (k) {
        case InvolutionKind::transpose: return "transpose";
        case InvolutionKind::adjoint_diag: return "adjoint_diag";
        case InvolutionKind::symplectic_standard: return "symplectic_standard";
        case InvolutionKind::adjoint_skew: return "adjoint_skew";
        case InvolutionKind::quat_conjugation: return "quat_conjugation";
        case InvolutionKind::int_u_conj: return "int_u_conj";
        case InvolutionKind::adjoint_hermitian: return "adjoint_hermitian";
    }
    return "?";
}

inline InvolutionKind parse_involution_kind(const std::string& s) {
    for (auto k : {InvolutionKind::transpose, InvolutionKind::adjoint_diag, InvolutionKind::symplectic_standard,
                   InvolutionKind::adjoint_skew, InvolutionKind::quat_conjugation, InvolutionKind::int_u_conj,
                   InvolutionKind::adjoint_hermitian})
        if (to_string(k) == s) return k;
    throw DomainError("unknown involution kind '" + s + "'");
}

struct InvolutionSpec {
    InvolutionKind kind = InvolutionKind::transpose;
    Form form;                                  // adjoint_diag / adjoint_hermitian
    std::optional<Quat> u;                      // int_u_conj
    std::optional<Matrix<RationalFunction>> S;  // adjoint_skew

    static InvolutionSpec transpose() { return {}; }
    static InvolutionSpec adjoint_diag(Form q) { return {InvolutionKind::adjoint_diag, std::move(q), {}, {}}; }
    static InvolutionSpec adjoint_hermitian(Form h) {
        return {InvolutionKind::adjoint_hermitian, std::move(h), {}, {}};
    }
    static InvolutionSpec symplectic_standard() { return {InvolutionKind::symplectic_standard, {}, {}, {}}; }
    static InvolutionSpec adjoint_skew(Matrix<RationalFunction> s) {
        return {InvolutionKind::adjoint_skew, {}, {}, std::move(s)};
    }
    static InvolutionSpec quat_conjugation() { return {InvolutionKind::quat_conjugation, {}, {}, {}}; }
    static InvolutionSpec int_u_conj(Quat u) { return {InvolutionKind::int_u_conj, {}, std::move(u), {}}; }
};

inline Matrix<Quat> lift(const Matrix<RationalFunction>& m) {
    return m.map([](const RationalFunction& x) { return Quat(x); });
}

/// (A, sigma) with A = M_n(F) (no quaternion algebra) or M_n(H).
class Algebra {
  public:
    Algebra(std::size_t n, InvolutionSpec sigma) : Algebra(nullptr, n, std::move(sigma)) {}

    Algebra(QuaternionAlgebraPtr quat, std::size_t n, InvolutionSpec sigma)
        : quat_(std::move(quat)), n_(n), sigma_(std::move(sigma)) {
        if (n_ == 0) throw DomainError("matrix size must be positive");
        const bool split = !quat_;
        switch (sigma_.kind) {
            case InvolutionKind::transpose:
                require(split, "transpose needs base F");
                break;
            case InvolutionKind::adjoint_diag:
            case InvolutionKind::adjoint_hermitian: {
                require(split == (sigma_.kind == InvolutionKind::adjoint_diag),
                        sigma_.kind == InvolutionKind::adjoint_diag ? "adjoint_diag needs base F"
                                                                    : "adjoint_hermitian needs a quaternion base");
                if (sigma_.form.dim() != n_) throw DimensionMismatch("form dimension must equal n");
                std::vector<Quat> d, di;
                for (const auto& e : sigma_.form.entries()) {
                    d.emplace_back(e);
                    di.emplace_back(e.inverse());
                }
                D_ = Matrix<Quat>::diagonal(d);
                Dinv_ = Matrix<Quat>::diagonal(di);
                break;
            }
            case InvolutionKind::symplectic_standard: {
                require(split, "symplectic_standard needs base F");
                if (n_ % 2 != 0) throw DomainError("symplectic involution needs even n");
                std::size_t m = n_ / 2;
                D_ = Matrix<Quat>(n_, n_);
                for (std::size_t i = 0; i < m; ++i) {
                    D_(i, m + i) = Quat(1);
                    D_(m + i, i) = Quat(-1);
                }
                Dinv_ = -D_;
                break;
            }
            case InvolutionKind::adjoint_skew: {
                require(split, "adjoint_skew needs base F");
                if (!sigma_.S || sigma_.S->rows() != n_ || sigma_.S->cols() != n_)
                    throw DimensionMismatch("skew matrix must be n x n");
                if (!(sigma_.S->transpose() == -*sigma_.S)) throw DomainError("matrix is not skew-symmetric");
                D_ = lift(*sigma_.S);
                Dinv_ = lift(hermsq::inverse(*sigma_.S));
                break;
            }
            case InvolutionKind::quat_conjugation:
                require(!split, "quat_conjugation needs a quaternion base");
                break;
            case InvolutionKind::int_u_conj: {
                require(!split, "int_u_conj needs a quaternion base");
                if (!sigma_.u) throw DomainError("int_u_conj needs u");
                const Quat& u = *sigma_.u;
                if (!u.is_pure() || u.is_zero()) throw DomainError("u must be a nonzero pure quaternion");
                if (u.nrd().is_zero()) throw DomainError("u must be invertible");
                u_inv_ = u.inverse();
                break;
            }
        }
    }

    const QuaternionAlgebraPtr& quaternion() const { return quat_; }
    bool is_split() const { return !quat_; }
    std::size_t n() const { return n_; }
    const InvolutionSpec& involution() const { return sigma_; }

    /// Degree over F (sqrt of the dimension).
    std::size_t degree() const { return is_split() ? n_ : 2 * n_; }
    std::size_t dimension() const { return degree() * degree(); }

    AlgElem zero() const { return AlgElem(n_, n_); }
    AlgElem one() const { return AlgElem::identity(n_); }
    AlgElem scalar(const RationalFunction& c) const { return AlgElem::scalar(n_, Quat(c)); }
    AlgElem unit(std::size_t i, std::size_t j, const Quat& c = Quat(1)) const { return AlgElem::unit(n_, i, j, c); }

    void check(const AlgElem& x) const {
        if (x.rows() != n_ || x.cols() != n_) throw DimensionMismatch("element has the wrong size");
        for (const auto& e : x.data()) {
            if (e.is_scalar()) continue;
            if (is_split()) throw DomainError("quaternion entry in a split algebra");
            if (e.algebra() != quat_ && !(*e.algebra() == *quat_))
                throw DomainError("entry from a different quaternion algebra");
        }
    }

    AlgElem apply_involution(const AlgElem& x) const {
        check(x);
        AlgElem g = gamma_transpose(x);
        switch (sigma_.kind) {
            case InvolutionKind::transpose:
            case InvolutionKind::quat_conjugation:
                return g;
            case InvolutionKind::int_u_conj:
                return scale(*sigma_.u, g) * AlgElem::scalar(n_, u_inv_);
            default:
                return D_ * g * Dinv_;
        }
    }

    RationalFunction reduced_trace(const AlgElem& x) const {
        check(x);
        RationalFunction t;
        for (std::size_t i = 0; i < n_; ++i) t += x(i, i).scalar_part();
        return is_split() ? t : RationalFunction(2) * t;
    }

    AlgElem hermitian_square(const AlgElem& x) const { return apply_involution(x) * x; }
    bool is_symmetric(const AlgElem& x) const { return apply_involution(x) == x; }

    /// Scalar multiple of the identity with a scalar (central) entry.
    static bool is_central(const AlgElem& x) {
        if (!x.is_square()) return false;
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) {
                if (i == j ? !(x(i, j) == x(0, 0)) : !x(i, j).is_zero()) return false;
            }
        return x.rows() == 0 || x(0, 0).is_scalar();
    }

    /// F-basis: matrix units E_ij (times 1, i, j, k over a quaternion base), row-major.
    std::vector<AlgElem> basis() const {
        std::vector<AlgElem> out;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (is_split()) {
                    out.push_back(unit(i, j));
                } else {
                    out.push_back(unit(i, j, Quat(1)));
                    out.push_back(unit(i, j, Quat::i(quat_)));
                    out.push_back(unit(i, j, Quat::j(quat_)));
                    out.push_back(unit(i, j, Quat::k(quat_)));
                }
            }
        return out;
    }

    /// Coordinates of x in basis().
    std::vector<RationalFunction> coordinates(const AlgElem& x) const {
        check(x);
        std::vector<RationalFunction> out;
        for (const auto& e : x.data()) {
            if (is_split()) {
                out.push_back(e.scalar_part());
            } else {
                for (int c = 0; c < 4; ++c) out.push_back(e[c]);
            }
        }
        return out;
    }

    /// Gram matrix of (x, y) -> (Trd(sigma(x) y) + Trd(sigma(y) x)) / 2 on basis().
    GramForm trace_form() const {
        auto b = basis();
        std::vector<AlgElem> sb;
        for (const auto& e : b) sb.push_back(apply_involution(e));
        const std::size_t d = b.size();
        GramForm g(d, d);
        RationalFunction half = Rational(1, 2);
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = p; q < d; ++q) {
                RationalFunction v = reduced_trace(sb[p] * b[q]);
                if (p != q) v = half * (v + reduced_trace(sb[q] * b[p]));
                g(p, q) = v;
                g(q, p) = v;
            }
        return g;
    }

  private:
    static void require(bool ok, const char* what) {
        if (!ok) throw DomainError(what);
    }

    // Entrywise conjugation followed by transposition.
    AlgElem gamma_transpose(const AlgElem& x) const {
        AlgElem t(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = x(i, j).conj();
        return t;
    }

    QuaternionAlgebraPtr quat_;
    std::size_t n_;
    InvolutionSpec sigma_;
    AlgElem D_, Dinv_;
    Quat u_inv_;
};

/// Orderings among the four monomial ones at which the involution trace form is positive definite.
inline std::vector<MonomialOrdering> sigma_orderings(const Algebra& A) {
    Form t = diagonalize(A.trace_form()).form;
    std::vector<MonomialOrdering> out;
    for (const auto& P : MonomialOrdering::all())
        if (signature(t, P) == static_cast<int>(t.dim())) out.push_back(P);
    return out;
}

/// Generic element of A: entry (i,j) is z<i>_<j>_<l> over F, or has coordinates
/// z<i>_<j>_<4(l-1)+c> (c = 1..4) over a quaternion base.
inline AlgElem symbolic_element(const Algebra& A, unsigned l) {
    AlgElem x = A.zero();
    for (unsigned i = 1; i <= A.n(); ++i)
        for (unsigned j = 1; j <= A.n(); ++j) {
            if (A.is_split()) {
                x(i - 1, j - 1) = Quat(RationalFunction(Var::zeta(i, j, l)));
            } else {
                auto z = [&](unsigned c) { return RationalFunction(Var::zeta(i, j, 4 * (l - 1) + c)); };
                x(i - 1, j - 1) = Quat(A.quaternion(), z(1), z(2), z(3), z(4));
            }
        }
    return x;
}

/// (3,3) entry of sum sigma(a_i) a_i for A = (M_3(F), ad_q) or (M_3(H), ad_h); it is a scalar.
inline RationalFunction entry_33_constraint(const Algebra& A, const std::vector<AlgElem>& elements) {
    auto kind = A.involution().kind;
    if (A.n() != 3 || !(kind == InvolutionKind::adjoint_diag || kind == InvolutionKind::adjoint_hermitian))
        throw DomainError("entry_33_constraint needs n = 3 with a diagonal adjoint involution");
    Quat total;
    for (const auto& a : elements) total = total + A.hermitian_square(a)(2, 2);
    if (!total.is_scalar()) throw DomainError("(3,3) entry is not a scalar");
    return total.scalar_part();
}

/// The same entry computed from the norm formula sum_i sum_k (d_3 / d_k) Nrd(a_k3).
inline RationalFunction entry_33_norm_expression(const Algebra& A, const std::vector<AlgElem>& elements) {
    const auto& d = A.involution().form.entries();
    RationalFunction total;
    for (const auto& a : elements)
        for (std::size_t k = 0; k < 3; ++k) total += d[2] / d[k] * a(k, 2).nrd();
    return total;
}

}  // namespace hermsq
