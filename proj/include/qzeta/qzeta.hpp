#pragma once

#include "poset.hpp"
#include "qbasis.hpp"
#include "qincidence.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qzeta {

// ---------------------------------------------------------------------------
// q-Ehrhart polynomials of the standard basic simplex

/// Weighted count sum_{m in N^k, |m| = n} q^<a, m>, for n = 0..max_n. Entry n of the result.
inline std::vector<LaurentPolyZ> simplex_dilate_weights(const std::vector<int>& a, int max_n) {
    std::vector<LaurentPolyZ> s(static_cast<std::size_t>(max_n) + 1);
    s[0] = LaurentPolyZ(1);
    for (int ai : a)  // multiply the generating series by 1/(1 - q^ai t)
        for (int n = 1; n <= max_n; ++n) s[static_cast<std::size_t>(n)] += s[static_cast<std::size_t>(n - 1)].shifted(ai);
    return s;
}

namespace detail {
inline std::vector<int> sorted_distinct(std::vector<int> a) {
    if (a.empty()) throw PreconditionError("ehr_simplex needs a nonempty tuple");
    std::sort(a.begin(), a.end());
    if (a.front() < 0) throw PreconditionError("ehr_simplex entries must be natural numbers");
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw PreconditionError("ehr_simplex entries must be pairwise distinct");
    return a;
}
}  // namespace detail

/// E_a: the q-Ehrhart polynomial of the standard simplex in N^k for the linear form <a, .>.
/// Interpolated on n = 0..max(a) from the dilate weights.
inline PolyX ehr_simplex(std::vector<int> a) {
    a = detail::sorted_distinct(std::move(a));
    const int d = a.back();
    const auto w = simplex_dilate_weights(a, d);
    return interpolate_q_integer_values(std::vector<LaurentPolyZ>(w.begin(), w.begin() + d + 1), 0);
}

/// E_a at [-m]_q, cross-checked against (-1)^(k-1) sum over interior points z of the m-th dilate of q^-<a,z>.
inline LaurentPolyQ ehr_simplex_value_neg(const std::vector<int>& a_in, int m) {
    if (m < 1) throw PreconditionError("ehr_simplex_value_neg needs m >= 1");
    const std::vector<int> a = detail::sorted_distinct(a_in);
    const int k = static_cast<int>(a.size());
    auto v = ehr_simplex(a).eval(qint(-m)).to_laurent();
    if (!v) throw InternalError("E_a([-m]_q) is not a Laurent polynomial");
    // interior points are 1 + m' with m' >= 0 and |m'| = m - k
    LaurentPolyZ interior;
    if (m >= k) {
        std::vector<int> neg;
        int total = 0;
        for (int ai : a) {
            neg.push_back(-ai);
            total += ai;
        }
        interior = simplex_dilate_weights(neg, m - k)[static_cast<std::size_t>(m - k)].shifted(-total);
    }
    if (k % 2 == 0) interior = -interior;
    if (to_rational(interior) != *v) throw InternalError("Ehrhart reciprocity failed for E_a");
    return *v;
}

/// Memoizes E_a by tuple for the duration of one computation.
class EhrhartCache {
public:
    const PolyX& get(const std::vector<int>& a) {
        auto it = cache_.find(a);
        if (it == cache_.end()) it = cache_.emplace(a, ehr_simplex(a)).first;
        return it->second;
    }

private:
    std::map<std::vector<int>, PolyX> cache_;
};

// ---------------------------------------------------------------------------
// q-Zeta polynomial

enum class Route { interpolation, definition, matrix };

inline std::string to_string(Route r) {
    switch (r) {
        case Route::interpolation: return "interpolation";
        case Route::definition: return "definition";
        case Route::matrix: return "matrix";
    }
    return "?";
}

struct QZetaResult {
    PolyX poly;
    HeightFunction height_used;
    int H = -1;  // max height; -1 for the empty poset
    Route route = Route::interpolation;
};

/// Weighted multichain count sum_{e_1 <= ... <= e_{n-1}} q^(sum h(e_j)) for n >= 2,
/// computed as u^T D_h (Z D_h)^(n-2) u.
inline LaurentPolyZ qzeta_value(const Poset& p, const HeightFunction& h, int n) {
    validate_height(p, h);
    if (n < 2) throw PreconditionError("qzeta_value is defined by chains only for n >= 2");
    const int size = p.size();
    std::vector<LaurentPolyZ> row(static_cast<std::size_t>(size));
    for (int x = 0; x < size; ++x) row[static_cast<std::size_t>(x)] = LaurentPolyZ::q_power(h(x));
    for (int step = 0; step < n - 2; ++step) {
        std::vector<LaurentPolyZ> next(static_cast<std::size_t>(size));
        for (int y = 0; y < size; ++y) {
            LaurentPolyZ s;
            for (int x = 0; x < size; ++x)
                if (p.leq(x, y)) s += row[static_cast<std::size_t>(x)];
            next[static_cast<std::size_t>(y)] = s.shifted(h(y));
        }
        row = std::move(next);
    }
    LaurentPolyZ total;
    for (const auto& v : row) total += v;
    return total;
}

namespace detail {
inline void check_degree(const PolyX& z, int H) {
    if (z.degree() != H) throw InternalError("q-Zeta polynomial degree " + std::to_string(z.degree()) + " differs from max height " + std::to_string(H));
}
}  // namespace detail

/// Z_{P,h} by q-Newton interpolation through x = [n]_q, n = 2..H+2.
inline QZetaResult qzeta_poly(const Poset& p, const HeightFunction& h) {
    validate_height(p, h);
    QZetaResult r;
    r.height_used = h;
    r.route = Route::interpolation;
    if (p.empty()) return r;
    r.H = h.max();
    std::vector<LaurentPolyZ> values;
    for (int n = 2; n <= r.H + 2; ++n) values.push_back(qzeta_value(p, h, n));
    r.poly = interpolate_q_integer_values(values, 2);
    detail::check_degree(r.poly, r.H);
    return r;
}

/// Z from counts of strict chains grouped by their (increasing) height tuple:
/// sum over tuples a of count(a) q^(sum a) E_a((x - [k+1]_q) / q^(k+1)).
inline PolyX qzeta_from_height_tuple_counts(const std::map<std::vector<int>, BigInt>& counts) {
    EhrhartCache cache;
    PolyX z;
    for (const auto& [tuple, count] : counts) {
        if (count == 0) continue;
        const int k = static_cast<int>(tuple.size());
        int sum = 0;
        for (int v : tuple) sum += v;
        const RationalFunctionQ inv = RationalFunctionQ::q_power(-(k + 1));
        const PolyX arg = PolyX::linear(-qint(k + 1) * inv, inv);
        const RationalFunctionQ weight = RationalFunctionQ(BigRational(count)) * RationalFunctionQ::q_power(sum);
        z += cache.get(tuple).compose(arg).map_coefficients([&](const RationalFunctionQ& c) { return c * weight; });
    }
    return z;
}

/// Number of strict chains for each height tuple h(c_1) < ... < h(c_k).
inline std::map<std::vector<int>, BigInt> height_tuple_counts(const Poset& p, const HeightFunction& h) {
    std::map<std::vector<int>, BigInt> counts;
    std::vector<int> tuple;
    for_each_strict_chain(p, [&](const std::vector<int>& c) {
        tuple.clear();
        for (int x : c) tuple.push_back(h(x));
        counts[tuple] += 1;
    });
    return counts;
}

/// Z_{P,h} from the defining sum over strict chains.
inline PolyX qzeta_via_definition(const Poset& p, const HeightFunction& h) {
    validate_height(p, h);
    if (p.empty()) return {};
    PolyX z = qzeta_from_height_tuple_counts(height_tuple_counts(p, h));
    detail::check_degree(z, h.max());
    return z;
}

/// Z_{P,h} interpolated from corner coefficients of twisted zeta powers; P must be bounded.
inline PolyX qzeta_via_matrix(const Poset& p, const HeightFunction& h) {
    if (!is_bounded(p)) throw PreconditionError("matrix route needs a bounded poset");
    const int H = h.max();
    const auto mats = twisted_power_range(p, h, 2, H + 2);
    std::vector<LaurentPolyZ> values;
    for (int n = 2; n <= H + 2; ++n) values.push_back(mats[static_cast<std::size_t>(n - 2)](*p.bottom(), *p.top()));
    PolyX z = interpolate_q_integer_values(values, 2);
    detail::check_degree(z, H);
    return z;
}

/// Classical Zeta polynomial sum_k binom(x-2, k-1) #Ch_k, over Q.
inline RatPoly classical_zeta(const Poset& p) {
    const auto counts = chain_counts(p);
    RatPoly z;
    RatPoly binom(BigRational(1));  // binom(x-2, k-1) for the current k
    for (std::size_t k = 1; k < counts.size(); ++k) {
        z += BigRational(counts[k]) * binom;
        // binom(x-2, k) = binom(x-2, k-1) * (x - 2 - (k-1)) / k
        const int j = static_cast<int>(k) - 1;
        binom = binom * RatPoly(std::vector<BigRational>{BigRational(-2 - j), BigRational(1)});
        binom = BigRational(1, static_cast<long>(k)) * binom;
    }
    return z;
}

// ---------------------------------------------------------------------------
// special values

/// A value read off the polynomial next to the closed form predicted for it.
struct SpecialValue {
    LaurentPolyQ from_polynomial;
    LaurentPolyQ closed_form;
    bool agrees() const { return from_polynomial == closed_form; }
};

namespace detail {
inline LaurentPolyQ laurent_value(const PolyX& z, int n) {
    auto v = z.eval(qint(n)).to_laurent();
    if (!v) throw InternalError("value at [" + std::to_string(n) + "]_q is not a Laurent polynomial");
    return *v;
}
inline SpecialValue checked(SpecialValue v, const char* what) {
    if (!v.agrees()) throw InternalError(std::string(what) + ": polynomial value " + v.from_polynomial.to_string() + " != closed form " + v.closed_form.to_string());
    return v;
}
}  // namespace detail

/// Z([1]_q) = Euler characteristic of the order complex.
inline SpecialValue value_at_1(const Poset& p, const HeightFunction& h) {
    const PolyX z = qzeta_poly(p, h).poly;
    return detail::checked({detail::laurent_value(z, 1), LaurentPolyQ(BigRational(euler_characteristic(p)))}, "value at [1]_q");
}

/// Z([0]_q) = q^-h(0) (1 - chi(P minus 0)); needs a unique minimum.
inline SpecialValue value_at_0(const Poset& p, const HeightFunction& h) {
    auto bot = p.bottom();
    if (!bot) throw PreconditionError("value at [0]_q needs a unique minimum");
    const PolyX z = qzeta_poly(p, h).poly;
    std::vector<int> rest;
    for (int x = 0; x < p.size(); ++x)
        if (x != *bot) rest.push_back(x);
    const BigInt chi = euler_characteristic(induced_subposet(p, rest));
    const LaurentPolyQ closed = LaurentPolyQ::monomial(BigRational(1 - chi), -h(*bot));
    return detail::checked({detail::laurent_value(z, 0), closed}, "value at [0]_q");
}

/// Z([-1]_q) = q^(-h(0) - h(1)) mu(0, 1); needs a bounded poset.
inline SpecialValue value_at_minus1(const Poset& p, const HeightFunction& h) {
    if (!is_bounded(p)) throw PreconditionError("value at [-1]_q needs a bounded poset");
    const PolyX z = qzeta_poly(p, h).poly;
    const int b = *p.bottom(), t = *p.top();
    const auto mu = mobius(p)[static_cast<std::size_t>(b)][static_cast<std::size_t>(t)];
    const LaurentPolyQ closed = LaurentPolyQ::monomial(BigRational(mu), -h(b) - h(t));
    return detail::checked({detail::laurent_value(z, -1), closed}, "value at [-1]_q");
}

/// Z with q = 0 substituted coefficientwise; PoleError when some coefficient has a pole there.
inline RatPoly specialize_q0(const PolyX& z) { return eval_at_q0(z); }

// ---------------------------------------------------------------------------
// transformation laws

/// Z_{P,h+1} from Z_{P,h}: multiply by (1 + (q-1)x)/q.
inline PolyX shift_height_poly(const PolyX& z) {
    const RationalFunctionQ q = RationalFunctionQ::q();
    return PolyX::linear(q.inverse(), (q - RationalFunctionQ(1)) / q) * z;
}

/// Z_{P,Dh} from Z_{P,h}: substitute q -> q^D in coefficients, then x -> ((1+(q-1)x)^D - 1)/(q^D - 1).
inline PolyX scale_height_poly(const PolyX& z, int D) {
    if (D < 1) throw PreconditionError("height scale factor must be >= 1");
    const RationalFunctionQ q = RationalFunctionQ::q();
    const PolyX base = PolyX::linear(RationalFunctionQ(1), q - RationalFunctionQ(1));
    const RationalFunctionQ inv = (pow(q, D) - RationalFunctionQ(1)).inverse();
    const PolyX arg = (pow(base, D) - PolyX(1)).map_coefficients([&](const RationalFunctionQ& c) { return c * inv; });
    return z.map_coefficients([&](const RationalFunctionQ& c) { return c.dilated(D); }).compose(arg);
}

/// Z_{dual P, H-h} from Z_{P,h}: sum_j kappa_j(1/q) ((1+(q-1)x)/q)^(H-j) x^j.
inline PolyX duality_transform(const PolyX& z, int H) {
    if (H < z.degree()) throw PreconditionError("duality transform needs H >= deg Z");
    const RationalFunctionQ q = RationalFunctionQ::q();
    const PolyX factor = PolyX::linear(q.inverse(), (q - RationalFunctionQ(1)) / q);
    PolyX out;
    for (int j = 0; j <= z.degree(); ++j) {
        if (z.coeff(j).is_zero()) continue;
        out += PolyX::monomial(z.coeff(j).inverted_q(), j) * pow(factor, H - j);
    }
    return out;
}

// ---------------------------------------------------------------------------
// q-order polynomial

/// Weighted order-preserving labelings: sum over z : P -> {0..n}, z monotone, of q^(sum z).
inline LaurentPolyZ order_polytope_dilate_weight(const Poset& p, int n) {
    const int size = p.size();
    std::vector<BigInt> hist;
    std::vector<int> z(static_cast<std::size_t>(size), 0);
    const auto& order = p.linear_extension();
    std::function<void(std::size_t, int)> place = [&](std::size_t i, int sum) {
        if (i == order.size()) {
            if (hist.size() <= static_cast<std::size_t>(sum)) hist.resize(static_cast<std::size_t>(sum) + 1, BigInt(0));
            hist[static_cast<std::size_t>(sum)] += 1;
            return;
        }
        const int x = order[i];
        int lo = 0;
        for (int y : p.lower_covers(x)) lo = std::max(lo, z[static_cast<std::size_t>(y)]);
        for (int v = lo; v <= n; ++v) {
            z[static_cast<std::size_t>(x)] = v;
            place(i + 1, sum + v);
        }
    };
    place(0, 0);
    return LaurentPolyZ(IntPoly(std::move(hist)));
}

/// L_P by direct enumeration of lattice points of the dilated order polytope (|P| <= 7).
inline PolyX q_order_polynomial_enumerated(const Poset& p) {
    if (p.size() > 7) throw PreconditionError("enumerated q-order polynomial is capped at 7 elements");
    std::vector<LaurentPolyZ> values;
    for (int n = 0; n <= p.size(); ++n) values.push_back(order_polytope_dilate_weight(p, n));
    return interpolate_q_integer_values(values, 0);
}

/// L_P(x) = Z_{J(dual P), rk}(1 + q x).
inline PolyX q_order_polynomial_via_lattice(const Poset& p) {
    const Poset j = j_of_p(dual(p));
    const PolyX z = qzeta_poly(j, rank_function(j)).poly;
    return z.compose(PolyX::linear(RationalFunctionQ(1), RationalFunctionQ::q()));
}

/// q-order polynomial via the ideal lattice; for |P| <= 7 the enumeration route must agree.
inline PolyX q_order_polynomial(const Poset& p) {
    PolyX l = q_order_polynomial_via_lattice(p);
    if (p.size() <= 7 && q_order_polynomial_enumerated(p) != l) throw InternalError("q-order polynomial routes disagree");
    return l;
}

} // namespace qzeta
