#pragma once

// Generic matrices Y_l = [z<i>_<j>_<l>] over Q[z] with the orthogonal (transpose) or symplectic
// involution. An NC polynomial is a *-identity of degree-n algebras with that involution type
// iff its generic image vanishes.

#include <cstdlib>
#include <optional>
#include <string>

#include "hermsq/nc_polynomial.hpp"
#include "hermsq/polynomial.hpp"

namespace hermsq {

enum class InvolutionType { orthogonal, symplectic };

inline std::string to_string(InvolutionType t) { return t == InvolutionType::orthogonal ? "orthogonal" : "symplectic"; }

inline InvolutionType parse_involution_type(const std::string& s) {
    if (s == "orthogonal") return InvolutionType::orthogonal;
    if (s == "symplectic") return InvolutionType::symplectic;
    throw DomainError("unknown involution type '" + s + "' (orthogonal | symplectic)");
}

/// Soft limits on symbolic expansion.
struct ExpansionCaps {
    std::size_t max_degree = 6;
    std::size_t max_n = 3;

    /// Defaults, with HERMSQ_MAX_DEGREE overriding the degree cap when set.
    static ExpansionCaps from_environment() {
        ExpansionCaps c;
        if (const char* v = std::getenv("HERMSQ_MAX_DEGREE")) {
            char* end = nullptr;
            long d = std::strtol(v, &end, 10);
            if (end == v || *end != '\0' || d < 0) throw DomainError("HERMSQ_MAX_DEGREE must be a nonnegative integer");
            c.max_degree = static_cast<std::size_t>(d);
        }
        return c;
    }
};

using PolyMatrix = Matrix<Polynomial>;

class GenericMatrixContext {
  public:
    GenericMatrixContext(std::size_t n, unsigned count, InvolutionType type, ExpansionCaps caps = {})
        : n_(n), type_(type), caps_(caps) {
        if (n == 0) throw DomainError("matrix size must be positive");
        if (type == InvolutionType::symplectic && n % 2 != 0) throw DomainError("symplectic type needs even n");
        if (n > caps_.max_n)
            throw ResourceLimit("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(caps_.max_n));
        for (unsigned l = 1; l <= count; ++l) {
            PolyMatrix y(n, n);
            for (unsigned i = 1; i <= n; ++i)
                for (unsigned j = 1; j <= n; ++j) y(i - 1, j - 1) = Polynomial(Var::zeta(i, j, l));
            starred_.push_back(involution(y));
            generic_.push_back(std::move(y));
        }
    }

    std::size_t n() const { return n_; }
    InvolutionType type() const { return type_; }
    const ExpansionCaps& caps() const { return caps_; }
    const std::vector<PolyMatrix>& matrices() const { return generic_; }

    /// Transpose, or [[x,y],[z,w]] -> [[w^t,-y^t],[-z^t,x^t]] with m x m blocks.
    PolyMatrix involution(const PolyMatrix& a) const {
        if (type_ == InvolutionType::orthogonal) return a.transpose();
        const std::size_t m = n_ / 2;
        PolyMatrix out(n_, n_);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                out(i, j) = a(m + j, m + i);
                out(i, m + j) = -a(j, m + i);
                out(m + i, j) = -a(m + j, i);
                out(m + i, m + j) = a(j, i);
            }
        return out;
    }

    void check_degree(std::size_t d) const {
        if (d > caps_.max_degree)
            throw ResourceLimit("degree " + std::to_string(d) + " exceeds the cap " + std::to_string(caps_.max_degree) +
                                " (set HERMSQ_MAX_DEGREE to raise it)");
    }

    PolyMatrix eval(const NCPolynomial& f) const {
        check_degree(f.degree());
        if (f.variable_count() > generic_.size())
            throw DomainError("context has " + std::to_string(generic_.size()) + " generic matrices, f uses x" +
                              std::to_string(f.variable_count()));
        return evaluate_words(f, generic_, starred_, n_);
    }

  private:
    std::size_t n_;
    InvolutionType type_;
    ExpansionCaps caps_;
    std::vector<PolyMatrix> generic_, starred_;
};

inline PolyMatrix generic_eval(const NCPolynomial& f, const GenericMatrixContext& ctx) { return ctx.eval(f); }

inline bool is_identity_mod_a(const NCPolynomial& f, std::size_t n, InvolutionType type, ExpansionCaps caps = {}) {
    GenericMatrixContext ctx(n, f.variable_count(), type, caps);
    return ctx.eval(f).is_zero();
}

/// c I with c a polynomial, or nothing.
inline std::optional<Polynomial> scalar_value(const PolyMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i == j ? !(m(i, j) == m(0, 0)) : !m(i, j).is_zero()) return std::nullopt;
    return m(0, 0);
}

inline bool is_central_nonvanishing(const NCPolynomial& h, std::size_t n, InvolutionType type, ExpansionCaps caps = {}) {
    GenericMatrixContext ctx(n, h.variable_count(), type, caps);
    auto c = scalar_value(ctx.eval(h));
    return c && !c->is_zero();
}

}  // namespace hermsq
