#pragma once

#include <utility>

#include "hermsq/polynomial.hpp"

namespace hermsq {

/// Element of Q(vars): num/den with gcd(num, den) = 1 and den monic under graded-lex.
/// Two rational functions are equal iff their normalized representations coincide.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(int c) : num_(c), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
    RationalFunction(Var v) : num_(v), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RationalFunction x() { return Var::x(); }
    static RationalFunction y() { return Var::y(); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    /// Nonzero rational multiple of a Laurent monomial.
    bool is_monomial() const { return num_.is_term() && den_.is_term(); }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero();
        return RationalFunction(den_, num_);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ + b.num_);
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
        // Cross-cancel before multiplying so intermediate gcds stay small.
        Polynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        RationalFunction r;
        r.num_ = exact_divide(a.num_, g1) * exact_divide(b.num_, g2);
        r.den_ = exact_divide(a.den_, g2) * exact_divide(b.den_, g1);
        r.make_den_monic();
        return r;
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RationalFunction r;
        r.num_ = num_.pow(static_cast<unsigned>(e));
        r.den_ = den_.pow(static_cast<unsigned>(e));
        return r;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    template <class Map>
    Rational evaluate(const Map& values) const {
        Rational d = den_.evaluate(values);
        if (d == 0) throw DivisionByZero();
        return num_.evaluate(values) / d;
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (!den_.is_constant()) {
            Polynomial g = gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = exact_divide(num_, g);
                den_ = exact_divide(den_, g);
            }
        }
        make_den_monic();
    }

    void make_den_monic() {
        Rational lc = den_.leading_coefficient();
        if (lc != 1) {
            Rational inv = hermsq::inverse(lc);
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Polynomial num_;
    Polynomial den_;
};

inline RationalFunction inverse(const RationalFunction& f) { return f.inverse(); }

}  // namespace hermsq
