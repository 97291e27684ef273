#pragma once

// Small builders so expected values in tests read close to their printed form.

#include "qzeta/qzeta_all.hpp"

#include <initializer_list>
#include <map>
#include <ostream>

namespace sh {

using qzeta::BigInt;
using qzeta::BigRational;
using qzeta::LaurentPolyQ;
using qzeta::LaurentPolyZ;
using qzeta::PolyX;
using qzeta::RatFunc;

inline RatFunc q() { return RatFunc::q(); }
inline RatFunc c(long v) { return RatFunc(BigRational(v)); }
inline PolyX X() { return PolyX::x(); }
inline PolyX P(const RatFunc& v) { return PolyX(v); }
inline PolyX P(long v) { return PolyX(c(v)); }

/// Scalar multiple of a PolyX.
inline PolyX scale(const PolyX& p, const RatFunc& s) {
    return p.map_coefficients([&](const RatFunc& v) { return v * s; });
}

/// Integer Laurent polynomial from {exponent, coefficient} pairs.
inline LaurentPolyZ lz(std::initializer_list<std::pair<int, long>> terms) {
    LaurentPolyZ out;
    for (const auto& [e, v] : terms) out += LaurentPolyZ::monomial(BigInt(v), e);
    return out;
}

inline LaurentPolyQ lq(std::initializer_list<std::pair<int, long>> terms) { return qzeta::to_rational(lz(terms)); }

/// Rational function from a Laurent polynomial.
inline RatFunc rf(const LaurentPolyZ& l) { return RatFunc(l); }

} // namespace sh

// readable gtest failure messages
namespace qzeta {
template <class R>
void PrintTo(const Laurent<R>& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const RationalFunctionQ& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const PolyX& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const SeriesNumerator& v, std::ostream* os) {
    *os << "[";
    for (const auto& s : v.to_strings()) *os << s << "; ";
    *os << "] / deg " << v.denominator_degree;
}
}  // namespace qzeta
