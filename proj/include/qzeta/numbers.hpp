#pragma once

#include "errors.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qzeta {

using BigInt = boost::multiprecision::mpz_int;

/// Arbitrary precision rational, always stored in lowest terms with positive denominator.
using BigRational = boost::multiprecision::mpq_rational;

inline BigInt numerator_of(const BigRational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const BigRational& r) { return boost::multiprecision::denominator(r); }

/// n/d in lowest terms with a positive denominator; d must be nonzero.
inline BigRational make_rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw PreconditionError("zero denominator");
    return d < 0 ? BigRational(BigInt(-n), BigInt(-d)) : BigRational(n, d);
}

inline bool is_integral(const BigRational& r) { return denominator_of(r) == 1; }
inline bool is_integral(const BigInt&) { return true; }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const BigRational& v) { return v.str(); }

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const BigRational& v) { return v.sign(); }

/// Joins ascending (exponent, coefficient) terms as `c*v^k` pieces, e.g. `-1+2*q-q^3`.
/// Exponent 0 prints the bare coefficient, exponent 1 prints `v`, unit coefficients are elided.
template <class R>
std::string format_terms(const std::vector<std::pair<long, R>>& terms, const std::string& var) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exp, c] : terms) {
        const bool negative = sign_of(c) < 0;
        const R magnitude = negative ? R(-c) : c;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        first = false;
        std::string mono;
        if (exp != 0) {
            mono = var;
            if (exp != 1) mono += "^" + std::to_string(exp);
        }
        if (mono.empty()) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += mono;
        } else {
            out += to_string(magnitude) + "*" + mono;
        }
    }
    return out;
}

} // namespace qzeta
