#pragma once

#include "errors.hpp"
#include "numbers.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qzeta {

/// Dense univariate polynomial with coefficients in R, stored ascending by degree.
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
template <class R>
class UPoly {
public:
    using coeff_type = R;

    UPoly() = default;
    UPoly(const R& c) {  // NOLINT(google-explicit-constructor): constants promote freely
        if (c != 0) coeffs_.push_back(c);
    }
    UPoly(int c) : UPoly(R(c)) {}  // NOLINT(google-explicit-constructor)
    explicit UPoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UPoly monomial(const R& c, int k) {
        if (c == 0) return {};
        std::vector<R> v(static_cast<std::size_t>(k) + 1, R(0));
        v.back() = c;
        return UPoly(std::move(v));
    }
    static UPoly variable() { return monomial(R(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<R>& coefficients() const { return coeffs_; }

    R coeff(int k) const {
        if (k < 0 || k > degree()) return R(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }
    const R& leading() const { return coeffs_.back(); }

    /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
    int valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<int>(i);
        return -1;
    }

    R eval(const R& x) const {
        R acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Multiplies by v^k (k >= 0).
    UPoly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<R> v(static_cast<std::size_t>(k), R(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return UPoly(std::move(v));
    }

    /// Divides by v^k, which must divide exactly (k <= valuation).
    UPoly unshifted(int k) const {
        if (is_zero() || k == 0) return *this;
        return UPoly(std::vector<R>(coeffs_.begin() + k, coeffs_.end()));
    }

    /// Coefficient reversal relative to `width`: returns v^width * p(1/v).
    UPoly reversed(int width) const {
        std::vector<R> v(static_cast<std::size_t>(width) + 1, R(0));
        for (int k = 0; k <= degree(); ++k) v[static_cast<std::size_t>(width - k)] = coeffs_[static_cast<std::size_t>(k)];
        return UPoly(std::move(v));
    }

    /// p(v^d) for d >= 1.
    UPoly dilated(int d) const {
        if (is_zero()) return {};
        std::vector<R> v(static_cast<std::size_t>(degree() * d) + 1, R(0));
        for (int k = 0; k <= degree(); ++k) v[static_cast<std::size_t>(k * d)] = coeffs_[static_cast<std::size_t>(k)];
        return UPoly(std::move(v));
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    UPoly& operator+=(const UPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const R& s, UPoly p) {
        if (s == 0) return {};
        for (auto& c : p.coeffs_) c *= s;
        return p;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var) const {
        std::vector<std::pair<long, R>> terms;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) terms.emplace_back(static_cast<long>(i), coeffs_[i]);
        return format_terms(terms, var);
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

template <class R>
UPoly<R> pow(UPoly<R> base, int e) {
    UPoly<R> acc(R(1));
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

/// Euclidean division over a field: a = quot*b + rem with deg rem < deg b.
template <class R>
std::pair<UPoly<R>, UPoly<R>> divmod(const UPoly<R>& a, const UPoly<R>& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<R> rem = a.coefficients();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {UPoly<R>{}, a};
    std::vector<R> quot(static_cast<std::size_t>(da - db) + 1, R(0));
    const R& lb = b.leading();
    for (int k = da; k >= db; --k) {
        const R c = rem[static_cast<std::size_t>(k)] / lb;
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UPoly<R>(std::move(quot)), UPoly<R>(std::move(rem))};
}

template <class R>
UPoly<R> exact_quotient(const UPoly<R>& a, const UPoly<R>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("polynomial division expected to be exact");
    return q;
}

using IntPoly = UPoly<BigInt>;
using RatPoly = UPoly<BigRational>;

inline BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p.coefficients()) g = gcd(g, c);
    return g;
}

inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<BigInt> v = p.coefficients();
    for (auto& c : v) c /= g;
    return IntPoly(std::move(v));
}

/// Writes p = scale * prim with prim an integer polynomial of content 1 and positive leading coefficient.
inline std::pair<BigRational, IntPoly> split_content(const RatPoly& p) {
    if (p.is_zero()) return {BigRational(0), IntPoly{}};
    BigInt den = 1;
    for (const auto& c : p.coefficients()) den = lcm(den, denominator_of(c));
    std::vector<BigInt> v;
    v.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) v.push_back(numerator_of(c) * (den / denominator_of(c)));
    IntPoly ip(std::move(v));
    BigInt g = content(ip);
    if (ip.leading() < 0) g = -g;
    IntPoly prim = primitive_part(ip);
    return {BigRational(g, den), prim};
}

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<BigRational> v;
    v.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) v.emplace_back(c);
    return RatPoly(std::move(v));
}

/// Pseudo-remainder of a by b over the integers, made primitive.
inline IntPoly primitive_prem(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    const BigInt& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        const BigInt la = a.leading();
        const int shift = a.degree() - db;
        a = lb * a - IntPoly::monomial(la, shift) * b;
    }
    return primitive_part(a);
}

/// Greatest common divisor in Q[v], returned primitive with positive leading coefficient.
inline IntPoly gcd(const RatPoly& a, const RatPoly& b) {
    IntPoly x = split_content(a).second;
    IntPoly y = split_content(b).second;
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = primitive_prem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return primitive_part(x);
}

} // namespace qzeta
