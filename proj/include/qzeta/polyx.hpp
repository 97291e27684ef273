#pragma once

#include "ratfunc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qzeta {

/// Polynomial in x with coefficients in Q(q), ascending by degree, trailing zeros trimmed.
class PolyX {
public:
    PolyX() = default;
    PolyX(const RationalFunctionQ& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) c_.push_back(c);
    }
    PolyX(int c) : PolyX(RationalFunctionQ(c)) {}  // NOLINT(google-explicit-constructor)
    explicit PolyX(std::vector<RationalFunctionQ> c) : c_(std::move(c)) { trim(); }

    static PolyX x() { return monomial(RationalFunctionQ(1), 1); }
    static PolyX monomial(const RationalFunctionQ& c, int k) {
        if (c.is_zero()) return {};
        std::vector<RationalFunctionQ> v(static_cast<std::size_t>(k) + 1);
        v.back() = c;
        return PolyX(std::move(v));
    }
    /// a + b*x
    static PolyX linear(const RationalFunctionQ& a, const RationalFunctionQ& b) { return PolyX({a, b}); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<RationalFunctionQ>& coefficients() const { return c_; }
    RationalFunctionQ coeff(int k) const {
        if (k < 0 || k > degree()) return {};
        return c_[static_cast<std::size_t>(k)];
    }
    const RationalFunctionQ& leading() const { return c_.back(); }

    RationalFunctionQ eval(const RationalFunctionQ& at) const {
        RationalFunctionQ acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    /// P(inner(x)).
    PolyX compose(const PolyX& inner) const {
        PolyX acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + PolyX(*it);
        return acc;
    }

    template <class F>
    PolyX map_coefficients(F&& f) const {
        std::vector<RationalFunctionQ> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(f(c));
        return PolyX(std::move(v));
    }

    /// Applies q -> 1/q to every coefficient.
    PolyX inverted_q() const {
        return map_coefficients([](const RationalFunctionQ& c) { return c.inverted_q(); });
    }

    PolyX operator-() const {
        return map_coefficients([](const RationalFunctionQ& c) { return -c; });
    }

    friend PolyX operator+(const PolyX& a, const PolyX& b) {
        std::vector<RationalFunctionQ> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.c_.size()) v[i] = a.c_[i];
            if (i < b.c_.size()) v[i] += b.c_[i];
        }
        return PolyX(std::move(v));
    }
    friend PolyX operator-(const PolyX& a, const PolyX& b) { return a + (-b); }
    friend PolyX operator*(const PolyX& a, const PolyX& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<RationalFunctionQ> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return PolyX(std::move(v));
    }
    PolyX& operator+=(const PolyX& o) { return *this = *this + o; }
    PolyX& operator-=(const PolyX& o) { return *this = *this - o; }
    PolyX& operator*=(const PolyX& o) { return *this = *this * o; }

    friend bool operator==(const PolyX& a, const PolyX& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyX& a, const PolyX& b) { return !(a == b); }

    /// Canonical text, e.g. `((-1)/(1+q))*x^1 + ((2+q)/(1+q))*x^2`; `0` for the zero polynomial.
    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c_[k].to_string() + ")*x^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<RationalFunctionQ> c_;
};

inline PolyX pow(PolyX base, int e) {
    if (e < 0) throw PreconditionError("negative power of a polynomial in x");
    PolyX acc(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

/// Exact division of P by (a + b*x), b != 0. Throws InternalError on a nonzero remainder.
inline PolyX divide_by_linear(const PolyX& p, const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (p.is_zero()) return {};
    // synthetic division by the root r = -a/b, then divide the quotient by b
    const RationalFunctionQ root = -a / b;
    const int d = p.degree();
    std::vector<RationalFunctionQ> quot(static_cast<std::size_t>(std::max(d, 0)));
    RationalFunctionQ carry;
    for (int k = d; k >= 1; --k) {
        carry = carry * root + p.coeff(k);
        quot[static_cast<std::size_t>(k - 1)] = carry;
    }
    const RationalFunctionQ remainder = carry * root + p.coeff(0);
    if (!remainder.is_zero()) throw InternalError("division by a linear factor left a remainder");
    const RationalFunctionQ inv_b = b.inverse();
    for (auto& c : quot) c *= inv_b;
    return PolyX(std::move(quot));
}

/// Unique polynomial of degree < #samples through the given (abscissa, value) pairs (Lagrange form).
inline PolyX polyx_interpolate(const std::vector<std::pair<RationalFunctionQ, RationalFunctionQ>>& samples) {
    const std::size_t n = samples.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (samples[i].first == samples[j].first) throw PreconditionError("duplicate interpolation abscissa");
    PolyX result;
    for (std::size_t i = 0; i < n; ++i) {
        if (samples[i].second.is_zero()) continue;
        PolyX basis(1);
        RationalFunctionQ denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis *= PolyX::linear(-samples[j].first, RationalFunctionQ(1));
            denom *= samples[i].first - samples[j].first;
        }
        const RationalFunctionQ scale = samples[i].second / denom;
        result += basis.map_coefficients([&](const RationalFunctionQ& c) { return c * scale; });
    }
    return result;
}

inline RationalFunctionQ polyx_eval(const PolyX& p, const RationalFunctionQ& at) { return p.eval(at); }

/// Substitutes q = 0 in every coefficient; PoleError carries the worst pole order.
inline RatPoly eval_at_q0(const PolyX& p) {
    std::vector<BigRational> v;
    int worst = 0;
    for (const auto& c : p.coefficients()) {
        try {
            v.push_back(c.at_q0());
        } catch (const PoleError& e) {
            worst = std::max(worst, e.order());
        }
    }
    if (worst > 0) throw PoleError("polynomial in x", worst);
    return RatPoly(std::move(v));
}

inline BigRational eval_at_q0(const RationalFunctionQ& f) { return f.at_q0(); }

/// Substitutes q = 1 in every coefficient.
inline RatPoly specialize_q1(const PolyX& p) {
    std::vector<BigRational> v;
    for (const auto& c : p.coefficients()) v.push_back(c.eval(BigRational(1)));
    return RatPoly(std::move(v));
}

/// Lifts a polynomial in x over Q into PolyX.
inline PolyX lift(const RatPoly& p) {
    std::vector<RationalFunctionQ> v;
    for (const auto& c : p.coefficients()) v.emplace_back(c);
    return PolyX(std::move(v));
}

} // namespace qzeta
