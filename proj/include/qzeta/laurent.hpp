#pragma once

#include "upoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qzeta {

/// Laurent polynomial in q: q^low * body(q), where body has a nonzero constant term.
/// Negative exponents are stored explicitly.
template <class R>
class Laurent {
public:
    using coeff_type = R;

    Laurent() = default;
    Laurent(const R& c) : body_(c) {}  // NOLINT(google-explicit-constructor)
    Laurent(int c) : body_(R(c)) {}    // NOLINT(google-explicit-constructor)
    Laurent(UPoly<R> body, int low = 0) : low_(low), body_(std::move(body)) { normalize(); }  // NOLINT

    static Laurent monomial(const R& c, int e) { return Laurent(UPoly<R>(c), e); }
    static Laurent q_power(int e) { return monomial(R(1), e); }

    /// Builds from an exponent -> coefficient map; zero coefficients are ignored.
    static Laurent from_terms(const std::map<int, R>& terms) {
        if (terms.empty()) return {};
        const int lo = terms.begin()->first;
        const int hi = terms.rbegin()->first;
        std::vector<R> v(static_cast<std::size_t>(hi - lo) + 1, R(0));
        for (const auto& [e, c] : terms) v[static_cast<std::size_t>(e - lo)] = c;
        return Laurent(UPoly<R>(std::move(v)), lo);
    }

    bool is_zero() const { return body_.is_zero(); }
    /// Lowest exponent present (0 for the zero polynomial).
    int min_exponent() const { return low_; }
    int max_exponent() const { return is_zero() ? 0 : low_ + body_.degree(); }
    const UPoly<R>& body() const { return body_; }
    R coeff(int e) const { return body_.coeff(e - low_); }

    bool is_polynomial() const { return is_zero() || low_ >= 0; }
    /// True when every coefficient is an integer.
    bool is_integral() const {
        for (const auto& c : body_.coefficients())
            if (!qzeta::is_integral(c)) return false;
        return true;
    }
    bool is_nonnegative() const {
        for (const auto& c : body_.coefficients())
            if (sign_of(c) < 0) return false;
        return true;
    }
    bool is_monomial() const { return body_.degree() == 0; }

    /// Ascending (exponent, coefficient) list of nonzero terms.
    std::vector<std::pair<int, R>> terms() const {
        std::vector<std::pair<int, R>> out;
        const auto& c = body_.coefficients();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) out.emplace_back(low_ + static_cast<int>(i), c[i]);
        return out;
    }

    /// As an ordinary polynomial; requires min_exponent >= 0.
    UPoly<R> as_polynomial() const {
        if (!is_polynomial()) throw PreconditionError("Laurent polynomial has negative exponents");
        return body_.shifted(low_);
    }

    /// Substitutes q -> 1/q.
    Laurent inverted_q() const {
        if (is_zero()) return {};
        return Laurent(body_.reversed(body_.degree()), -max_exponent());
    }

    /// Substitutes q -> q^d, d >= 1.
    Laurent dilated(int d) const { return Laurent(body_.dilated(d), low_ * d); }

    Laurent shifted(int e) const {
        if (is_zero()) return {};
        Laurent r = *this;
        r.low_ += e;
        return r;
    }

    /// Value at q = 1.
    R at_one() const {
        R s(0);
        for (const auto& c : body_.coefficients()) s += c;
        return s;
    }

    Laurent operator-() const {
        Laurent r = *this;
        r.body_ = -r.body_;
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const int lo = std::min(a.low_, b.low_);
        return Laurent(a.body_.shifted(a.low_ - lo) + b.body_.shifted(b.low_ - lo), lo);
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return Laurent(a.body_ * b.body_, a.low_ + b.low_);
    }
    friend Laurent operator*(const R& s, const Laurent& a) {
        if (s == 0) return {};
        Laurent r = a;
        r.body_ = s * r.body_;
        return r;
    }
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.low_ == b.low_ && a.body_ == b.body_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    /// Canonical text: ascending powers of q, e.g. `-q^-1+2+q^3`.
    std::string to_string(const std::string& var = "q") const {
        std::vector<std::pair<long, R>> t;
        for (auto& [e, c] : terms()) t.emplace_back(e, c);
        return format_terms(t, var);
    }

private:
    void normalize() {
        if (body_.is_zero()) {
            low_ = 0;
            return;
        }
        const int v = body_.valuation();
        if (v > 0) {
            body_ = body_.unshifted(v);
            low_ += v;
        }
    }

    int low_ = 0;
    UPoly<R> body_;
};

template <class R>
Laurent<R> pow(Laurent<R> base, int e) {
    if (e < 0) {
        if (!base.is_monomial()) throw PreconditionError("negative power of a non-monomial Laurent polynomial");
        const R c = base.coeff(base.min_exponent());
        if (c != 1 && c != -1) throw PreconditionError("negative power of a non-unit monomial");
        const R sign = (e % 2 != 0) ? c : R(1);
        return Laurent<R>::monomial(sign, base.min_exponent() * e);
    }
    Laurent<R> acc(R(1));
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

/// Divides by q^e exactly; always possible in the Laurent ring.
template <class R>
Laurent<R> divide_by_q_power(const Laurent<R>& a, int e) {
    return a.shifted(-e);
}

using LaurentPolyQ = Laurent<BigRational>;
using LaurentPolyZ = Laurent<BigInt>;

inline LaurentPolyQ to_rational(const LaurentPolyZ& p) {
    std::map<int, BigRational> t;
    for (const auto& [e, c] : p.terms()) t.emplace(e, BigRational(c));
    return LaurentPolyQ::from_terms(t);
}

/// Integer view of a Laurent polynomial with rational coefficients; nullopt if some coefficient is fractional.
inline std::optional<LaurentPolyZ> to_integer(const LaurentPolyQ& p) {
    std::map<int, BigInt> t;
    for (const auto& [e, c] : p.terms()) {
        if (!is_integral(c)) return std::nullopt;
        t.emplace(e, numerator_of(c));
    }
    return LaurentPolyZ::from_terms(t);
}

} // namespace qzeta
