#pragma once

#include "laurent.hpp"

#include <optional>
#include <string>
#include <utility>

namespace qzeta {

/// Element of Q(q) in canonical form: gcd(num, den) = 1 and den is an integer
/// polynomial with content 1 and positive leading coefficient.
class RationalFunctionQ {
public:
    RationalFunctionQ() : num_(), den_(BigRational(1)) {}
    RationalFunctionQ(int c) : num_(BigRational(c)), den_(BigRational(1)) {}                 // NOLINT
    RationalFunctionQ(const BigRational& c) : num_(c), den_(BigRational(1)) {}               // NOLINT
    RationalFunctionQ(const BigInt& c) : num_(BigRational(c)), den_(BigRational(1)) {}       // NOLINT
    RationalFunctionQ(RatPoly num) : num_(std::move(num)), den_(BigRational(1)) {}           // NOLINT
    RationalFunctionQ(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    RationalFunctionQ(const LaurentPolyQ& l) {  // NOLINT
        if (l.min_exponent() >= 0) {
            num_ = l.as_polynomial();
            den_ = RatPoly(BigRational(1));
        } else {
            num_ = l.body();
            den_ = RatPoly::monomial(BigRational(1), -l.min_exponent());
        }
        if (num_.is_zero()) den_ = RatPoly(BigRational(1));
    }
    RationalFunctionQ(const LaurentPolyZ& l) : RationalFunctionQ(to_rational(l)) {}  // NOLINT

    /// The indeterminate q.
    static RationalFunctionQ q() { return RationalFunctionQ(RatPoly::variable()); }
    static RationalFunctionQ q_power(int e) { return RationalFunctionQ(LaurentPolyQ::q_power(e)); }

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Laurent view when the denominator is a power of q.
    std::optional<LaurentPolyQ> to_laurent() const {
        if (den_.degree() < 0 || den_.valuation() != den_.degree()) return std::nullopt;
        // den is c*q^k with content 1 and c > 0, so c == 1
        return LaurentPolyQ(num_, -den_.degree());
    }

    /// Integer Laurent view; nullopt unless this lies in Z[q, q^-1].
    std::optional<LaurentPolyZ> to_integer_laurent() const {
        auto l = to_laurent();
        if (!l) return std::nullopt;
        return to_integer(*l);
    }

    /// Value at q = 0, cancelling powers of q first.
    BigRational at_q0() const {
        if (is_zero()) return BigRational(0);
        const int order = num_.valuation() - den_.valuation();
        if (order < 0) throw PoleError("rational function", -order);
        if (order > 0) return BigRational(0);
        return num_.coeff(num_.valuation()) / den_.coeff(den_.valuation());
    }

    /// Value at a rational point of q; throws PreconditionError at a pole.
    BigRational eval(const BigRational& at) const {
        const BigRational d = den_.eval(at);
        if (d == 0) throw PreconditionError("evaluation at a pole of a rational function");
        return num_.eval(at) / d;
    }

    /// Substitutes q -> 1/q.
    RationalFunctionQ inverted_q() const {
        if (is_zero()) return *this;
        const int width = std::max(num_.degree(), den_.degree());
        return RationalFunctionQ(num_.reversed(width), den_.reversed(width));
    }

    /// Substitutes q -> q^d for d >= 1.
    RationalFunctionQ dilated(int d) const { return RationalFunctionQ(num_.dilated(d), den_.dilated(d)); }

    RationalFunctionQ inverse() const {
        if (is_zero()) throw PreconditionError("inverse of zero rational function");
        return RationalFunctionQ(den_, num_);
    }

    RationalFunctionQ operator-() const {
        RationalFunctionQ r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RationalFunctionQ(a.num_ + b.num_, a.den_);
        return RationalFunctionQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) { return a + (-b); }
    friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.degree() == 0 && b.den_.degree() == 0) return RationalFunctionQ(a.num_ * b.num_);
        return RationalFunctionQ(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b) { return a * b.inverse(); }
    RationalFunctionQ& operator+=(const RationalFunctionQ& o) { return *this = *this + o; }
    RationalFunctionQ& operator-=(const RationalFunctionQ& o) { return *this = *this - o; }
    RationalFunctionQ& operator*=(const RationalFunctionQ& o) { return *this = *this * o; }
    RationalFunctionQ& operator/=(const RationalFunctionQ& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunctionQ& a, const RationalFunctionQ& b) { return !(a == b); }

    /// Canonical text `(<num>)/(<den>)`, both in ascending powers of q.
    std::string to_string() const { return "(" + num_.to_string("q") + ")/(" + den_.to_string("q") + ")"; }

private:
    void normalize() {
        if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = RatPoly(BigRational(1));
            return;
        }
        if (den_.degree() > 0) {
            const IntPoly g = gcd(num_, den_);
            if (g.degree() > 0) {
                const RatPoly gr = to_rational(g);
                num_ = exact_quotient(num_, gr);
                den_ = exact_quotient(den_, gr);
            }
        }
        auto [scale, prim] = split_content(den_);
        den_ = to_rational(prim);
        if (scale != 1) num_ = BigRational(1 / scale) * num_;
    }

    RatPoly num_;
    RatPoly den_;
};

using RatFunc = RationalFunctionQ;

inline RationalFunctionQ pow(RationalFunctionQ base, int e) {
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    RationalFunctionQ acc(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

} // namespace qzeta
