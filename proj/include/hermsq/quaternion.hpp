#pragma once

#include <array>
#include <memory>

#include "hermsq/rational_function.hpp"

namespace hermsq {

/// (a, b)_F with basis 1, i, j, k: i^2 = a, j^2 = b, ij = k = -ji.
struct QuaternionAlgebra {
    RationalFunction a;
    RationalFunction b;

    friend bool operator==(const QuaternionAlgebra&, const QuaternionAlgebra&) = default;
};

using QuaternionAlgebraPtr = std::shared_ptr<const QuaternionAlgebra>;

inline QuaternionAlgebraPtr make_quaternion_algebra(RationalFunction a, RationalFunction b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("quaternion structure constants must be nonzero");
    return std::make_shared<const QuaternionAlgebra>(QuaternionAlgebra{std::move(a), std::move(b)});
}

/// Quaternion x0 + x1 i + x2 j + x3 k. A quaternion with no algebra attached is a pure scalar,
/// which lets F embed in every quaternion algebra (and lets F-matrices reuse the same element type).
class Quat {
  public:
    Quat() = default;
    Quat(int c) : x_{RationalFunction(c), {}, {}, {}} {}
    Quat(const Rational& c) : x_{RationalFunction(c), {}, {}, {}} {}
    Quat(const RationalFunction& s) : x_{s, {}, {}, {}} {}
    Quat(QuaternionAlgebraPtr alg, RationalFunction x0, RationalFunction x1, RationalFunction x2,
         RationalFunction x3)
        : alg_(std::move(alg)), x_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {
        if (!alg_ && !is_scalar()) throw DomainError("non-scalar quaternion needs an algebra");
    }

    static Quat i(QuaternionAlgebraPtr alg) { return {std::move(alg), 0, 1, 0, 0}; }
    static Quat j(QuaternionAlgebraPtr alg) { return {std::move(alg), 0, 0, 1, 0}; }
    static Quat k(QuaternionAlgebraPtr alg) { return {std::move(alg), 0, 0, 0, 1}; }

    const QuaternionAlgebraPtr& algebra() const { return alg_; }
    const RationalFunction& operator[](std::size_t c) const { return x_[c]; }
    const std::array<RationalFunction, 4>& coords() const { return x_; }

    bool is_scalar() const { return x_[1].is_zero() && x_[2].is_zero() && x_[3].is_zero(); }
    bool is_pure() const { return x_[0].is_zero(); }
    bool is_zero() const { return x_[0].is_zero() && is_scalar(); }
    const RationalFunction& scalar_part() const { return x_[0]; }

    /// Quaternion conjugation.
    Quat conj() const {
        if (is_scalar()) return *this;
        return {alg_, x_[0], -x_[1], -x_[2], -x_[3]};
    }

    /// Reduced norm x * conj(x).
    RationalFunction nrd() const {
        RationalFunction n = x_[0] * x_[0];
        if (is_scalar()) return n;
        const auto& [a, b] = *alg_;
        if (!x_[1].is_zero()) n -= a * x_[1] * x_[1];
        if (!x_[2].is_zero()) n -= b * x_[2] * x_[2];
        if (!x_[3].is_zero()) n += a * b * x_[3] * x_[3];
        return n;
    }

    /// Reduced trace 2 x0.
    RationalFunction trd() const { return RationalFunction(2) * x_[0]; }

    Quat inverse() const {
        RationalFunction n = nrd();
        if (n.is_zero()) throw DivisionByZero();
        return conj() * Quat(n.inverse());
    }

    friend Quat operator+(const Quat& p, const Quat& q) {
        Quat r;
        r.alg_ = common(p, q);
        for (int c = 0; c < 4; ++c) r.x_[c] = p.x_[c] + q.x_[c];
        return r;
    }
    friend Quat operator-(const Quat& p) {
        Quat r = p;
        for (auto& c : r.x_) c = -c;
        return r;
    }
    friend Quat operator-(const Quat& p, const Quat& q) { return p + (-q); }

    friend Quat operator*(const Quat& p, const Quat& q) {
        Quat r;
        r.alg_ = common(p, q);
        if (p.is_scalar() || q.is_scalar()) {
            const Quat& s = p.is_scalar() ? p : q;
            const Quat& o = p.is_scalar() ? q : p;
            if (s.x_[0].is_zero()) return Quat();
            for (int c = 0; c < 4; ++c)
                if (!o.x_[c].is_zero()) r.x_[c] = s.x_[0] * o.x_[c];
            return r;
        }
        const auto& [a, b] = *r.alg_;
        const auto& x = p.x_;
        const auto& y = q.x_;
        auto acc = [](RationalFunction& out, const RationalFunction& coeff, const RationalFunction& u,
                      const RationalFunction& v) {
            if (u.is_zero() || v.is_zero()) return;
            out += coeff * u * v;
        };
        RationalFunction one(1), minus(-1), ab = a * b;
        acc(r.x_[0], one, x[0], y[0]);
        acc(r.x_[0], a, x[1], y[1]);
        acc(r.x_[0], b, x[2], y[2]);
        acc(r.x_[0], -ab, x[3], y[3]);
        acc(r.x_[1], one, x[0], y[1]);
        acc(r.x_[1], one, x[1], y[0]);
        acc(r.x_[1], -b, x[2], y[3]);
        acc(r.x_[1], b, x[3], y[2]);
        acc(r.x_[2], one, x[0], y[2]);
        acc(r.x_[2], one, x[2], y[0]);
        acc(r.x_[2], a, x[1], y[3]);
        acc(r.x_[2], -a, x[3], y[1]);
        acc(r.x_[3], one, x[0], y[3]);
        acc(r.x_[3], one, x[3], y[0]);
        acc(r.x_[3], one, x[1], y[2]);
        acc(r.x_[3], minus, x[2], y[1]);
        return r;
    }

    friend Quat operator/(const Quat& p, const Quat& q) { return p * q.inverse(); }

    friend bool operator==(const Quat& p, const Quat& q) { return p.x_ == q.x_; }

  private:
    static QuaternionAlgebraPtr common(const Quat& p, const Quat& q) {
        if (!p.alg_) return q.alg_;
        if (!q.alg_) return p.alg_;
        if (p.alg_ != q.alg_ && !(*p.alg_ == *q.alg_))
            throw DomainError("quaternions from different algebras");
        return p.alg_;
    }

    QuaternionAlgebraPtr alg_;
    std::array<RationalFunction, 4> x_;
};

}  // namespace hermsq
