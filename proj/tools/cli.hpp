#pragma once

// Command-line front end. Everything is reachable through run() so tests can drive it in-process.
// Exit codes: 0 ok, 1 invalid input or failed check, 2 value undefined (pole), 3 internal error.

#include "qzeta/qzeta_all.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qzeta::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { exit_ok = 0, exit_invalid = 1, exit_undefined = 2, exit_internal = 3 };

// ---------------------------------------------------------------------------
// poset sources

struct Loaded {
    Poset poset;
    std::optional<HeightFunction> height;
};

inline int parse_count(const std::string& s, const std::string& what, int max) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw PreconditionError(what + " needs an integer argument, got '" + s + "'");
    }
    if (used != s.size() || v < 0) throw PreconditionError(what + " needs a natural number, got '" + s + "'");
    if (v > max) throw PreconditionError(what + " is capped at " + std::to_string(max));
    return v;
}

inline Loaded load_source(const std::string& src);

/// Generator registry; unknown specs raise PreconditionError.
inline Poset generate(const std::string& spec) {
    auto arg = [&](const std::string& prefix) -> std::optional<std::string> {
        if (spec.rfind(prefix, 0) == 0) return spec.substr(prefix.size());
        return std::nullopt;
    };
    if (auto a = arg("chain:")) return chain(parse_count(*a, "chain", 200));
    if (auto a = arg("antichain:")) return antichain(parse_count(*a, "antichain", 200));
    if (auto a = arg("boolean:")) return boolean(parse_count(*a, "boolean", 10));
    if (auto a = arg("diamond:")) return diamond(parse_count(*a, "diamond", 200));
    if (auto a = arg("jop:")) return j_of_p(load_source(*a).poset);
    if (auto a = arg("dual:")) return dual(load_source(*a).poset);
    if (auto a = arg("product:")) {
        const auto comma = a->find(',');
        if (comma == std::string::npos) throw PreconditionError("product needs two sources separated by a comma");
        return product(load_source(a->substr(0, comma)).poset, load_source(a->substr(comma + 1)).poset);
    }
    if (spec.size() == 3 && spec.rfind("ex", 0) == 0) return example(spec);
    if (spec == "icosahedron") return icosahedron_face_lattice();
    if (spec == "associahedron3") return associahedron3_face_lattice();
    if (spec == "weak-s3") return weak_order_s3();
    throw PreconditionError("unknown poset source '" + spec + "' (not a file and not in the generator registry)");
}

/// A readable file wins over the generator registry.
inline Loaded load_source(const std::string& src) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(src, ec)) {
        PosetDocument doc = read_poset_file(src);
        return {std::move(doc.poset), std::move(doc.height)};
    }
    return {generate(src), std::nullopt};
}

/// mode "" picks the document's height, then rk when graded.
inline HeightFunction resolve_height(const Loaded& l, const std::string& mode, const std::string& height_file) {
    if (mode == "rk") return rank_function(l.poset);
    if (mode == "linext") return height_from_linear_extension(l.poset);
    if (mode == "file" || (mode.empty() && !height_file.empty())) {
        if (!height_file.empty()) {
            std::ifstream in(height_file);
            if (!in) throw PreconditionError("cannot open height file '" + height_file + "'");
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw PreconditionError(std::string("malformed height file: ") + e.what());
            }
            return height_from_json(l.poset, j);
        }
        if (!l.height) throw PreconditionError("--height file needs --height-file or a height in the poset document");
        return *l.height;
    }
    if (!mode.empty()) throw PreconditionError("unknown height mode '" + mode + "'");
    if (l.height) return *l.height;
    if (!is_graded(l.poset)) throw PreconditionError("poset is not graded; pass --height linext or a height file");
    return rank_function(l.poset);
}

inline Json height_json(const Poset& p, const HeightFunction& h) {
    Json j = Json::object();
    for (int x = 0; x < p.size(); ++x) j[p.label(x)] = h(x);
    return j;
}

// ---------------------------------------------------------------------------
// formatting

inline Json numerator_json(const SeriesNumerator& n) {
    Json arr = Json::array();
    for (const auto& s : n.to_strings()) arr.push_back(s);
    return arr;
}

/// "1 + (2*q)*t - ..." style rendering of a numerator in t.
inline std::string numerator_text(const SeriesNumerator& n) {
    std::string out;
    for (int k = 0; k <= n.t_degree(); ++k) {
        const LaurentPolyZ c = n.coeff(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) out += c.to_string();
        else out += "(" + c.to_string() + ")*t" + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return out.empty() ? "0" : out;
}

/// JSON number when it fits, decimal string otherwise.
inline Json big_json(const BigInt& v) {
    static const BigInt limit = BigInt(1) << 62;
    if (abs(v) < limit) return v.convert_to<long long>();
    return v.str();
}

inline std::string value_text(const RationalFunctionQ& v) {
    if (auto l = v.to_laurent()) return l->to_string();
    return v.to_string();
}

// ---------------------------------------------------------------------------
// check reports

struct CheckLine {
    std::string suite, name, status, detail;  // status: PASS FAIL SKIP POLE
};

class Report {
public:
    void add(std::string suite, std::string name, std::string status, std::string detail = {}) {
        lines_.push_back({std::move(suite), std::move(name), std::move(status), std::move(detail)});
    }
    void expect(const std::string& suite, const std::string& name, bool ok, const std::string& detail = {}) {
        add(suite, name, ok ? "PASS" : "FAIL", detail);
    }
    /// Runs f; precondition failures become SKIP, identity failures (InternalError) become FAIL.
    void guarded(const std::string& suite, const std::string& name, const std::function<bool(std::string&)>& f) {
        std::string detail;
        try {
            expect(suite, name, f(detail), detail);
        } catch (const PoleError& e) {
            add(suite, name, "POLE", e.what());
        } catch (const InternalError& e) {
            add(suite, name, "FAIL", e.what());
        } catch (const Error& e) {
            add(suite, name, "SKIP", e.what());
        }
    }
    bool failed() const {
        for (const auto& l : lines_)
            if (l.status == "FAIL") return true;
        return false;
    }
    bool all_passed() const {
        for (const auto& l : lines_)
            if (l.status != "PASS") return false;
        return true;
    }
    void print(std::ostream& out, bool json) const {
        if (json) {
            Json arr = Json::array();
            for (const auto& l : lines_) arr.push_back({{"suite", l.suite}, {"check", l.name}, {"status", l.status}, {"detail", l.detail}});
            out << Json{{"passed", !failed()}, {"checks", arr}}.dump(2) << "\n";
            return;
        }
        for (const auto& l : lines_) {
            out << l.status << " " << l.suite << "/" << l.name;
            if (!l.detail.empty()) out << ": " << l.detail;
            out << "\n";
        }
        out << (failed() ? "FAILED" : "OK") << "\n";
    }

private:
    std::vector<CheckLine> lines_;
};

inline const std::vector<std::string>& check_suites() {
    static const std::vector<std::string> s{"duality", "special-values", "jop", "volume", "q0", "eulerian", "incidence", "basis", "routes"};
    return s;
}

/// Invariant checks of one suite on one poset with its height.
inline void run_check(Report& r, const std::string& suite, const std::string& tag, const Poset& p, const HeightFunction& h) {
    const std::string s = suite + "[" + tag + "]";
    if (suite == "duality") {
        r.guarded(s, "dual-height", [&](std::string& d) {
            const int H = h.max();
            const PolyX z = qzeta_poly(p, h).poly;
            const PolyX zd = qzeta_poly(dual(p), dual_height(h, H)).poly;
            d = "H=" + std::to_string(H);
            return duality_transform(z, H) == zd;
        });
        return;
    }
    if (suite == "special-values") {
        r.guarded(s, "value-at-[1]", [&](std::string& d) {
            const auto v = value_at_1(p, h);
            d = v.from_polynomial.to_string();
            return v.agrees();
        });
        r.guarded(s, "value-at-[0]", [&](std::string& d) {
            const auto v = value_at_0(p, h);
            d = v.from_polynomial.to_string();
            return v.agrees();
        });
        r.guarded(s, "value-at-[-1]", [&](std::string& d) {
            const auto v = value_at_minus1(p, h);
            d = v.from_polynomial.to_string();
            return v.agrees();
        });
        // a pole at q = 0 is only a failure when the q=0 theorem applies
        const bool theorem_applies = is_bounded(p) && is_graded(p) && rank_function(p).values == h.values;
        try {
            const RatPoly z0 = specialize_q0(qzeta_poly(p, h).poly);
            r.add(s, "q=0", "PASS", z0.to_string("x"));
        } catch (const PoleError& e) {
            if (theorem_applies) r.add(s, "q=0", "FAIL", e.what());
            else r.add(s, "q=0", "POLE", std::string(e.what()) + " (allowed: not a bounded graded poset with h = rk)");
        }
        return;
    }
    if (suite == "jop") {
        r.guarded(s, "J(P)-vs-order-polynomial", [&](std::string& d) {
            if (p.size() > 8) throw PreconditionError("skipped above 8 elements");
            const Poset j = j_of_p(p);
            d = "|J(P)|=" + std::to_string(j.size());
            const PolyX lhs = qzeta_poly(j, rank_function(j)).poly.compose(PolyX::linear(RationalFunctionQ(1), RationalFunctionQ::q()));
            const Poset pd = dual(p);
            const PolyX rhs = pd.size() <= 7 ? q_order_polynomial_enumerated(pd) : q_order_polynomial_via_lattice(pd);
            return lhs == rhs;
        });
        return;
    }
    if (suite == "volume") {
        r.guarded(s, "volume-and-HH", [&](std::string& d) {
            const auto v = qzeta_volume_raw(p, h);
            d = v.to_string();
            return v == volume_from_dual_hh(p, h);
        });
        return;
    }
    if (suite == "q0") {
        r.guarded(s, "q0-theorem", [&](std::string&) { return q0_theorem_check(p); });
        return;
    }
    if (suite == "eulerian") {
        r.guarded(s, "reciprocity", [&](std::string&) {
            if (!is_bounded(p) || !is_graded(p)) throw PreconditionError("not bounded graded");
            return eulerian_reciprocity_check(p);
        });
        return;
    }
    if (suite == "incidence") {
        r.guarded(s, "corner-values", [&](std::string& d) {
            if (!is_bounded(p)) throw PreconditionError("not bounded");
            const int H = h.max();
            const PolyX z = qzeta_poly(p, h).poly;
            const auto mats = twisted_power_range(p, h, -3, H + 3);
            for (int n = -3; n <= H + 3; ++n)
                if (RationalFunctionQ(mats[static_cast<std::size_t>(n + 3)](*p.bottom(), *p.top())) != z.eval(qint(n))) {
                    d = "mismatch at n=" + std::to_string(n);
                    return false;
                }
            d = "n in [-3, " + std::to_string(H + 3) + "]";
            return true;
        });
        r.guarded(s, "annihilation", [&](std::string&) { return annihilation_check(p, h, -2, h.max() + 2); });
        return;
    }
    if (suite == "basis") {
        r.guarded(s, "Z(1+qx)-in-Aq", [&](std::string& d) {
            const PolyX w = qzeta_poly(p, h).poly.compose(PolyX::linear(RationalFunctionQ(1), RationalFunctionQ::q()));
            const auto dec = decompose_in_B(w);
            d = "B-coefficients: " + std::to_string(dec.coefficients.size());
            return recompose_from_B(dec) == w;
        });
        r.guarded(s, "numerator-round-trip", [&](std::string&) {
            const PolyX w = qzeta_poly(p, h).poly.compose(PolyX::linear(RationalFunctionQ(1), RationalFunctionQ::q()));
            return numerator_to_polynomial(polynomial_to_numerator(w, h.max())) == w;
        });
        return;
    }
    if (suite == "routes") {
        r.guarded(s, "definition", [&](std::string&) { return qzeta_via_definition(p, h) == qzeta_poly(p, h).poly; });
        r.guarded(s, "matrix", [&](std::string&) {
            if (!is_bounded(p)) throw PreconditionError("not bounded");
            return qzeta_via_matrix(p, h) == qzeta_poly(p, h).poly;
        });
        r.guarded(s, "q=1", [&](std::string&) { return specialize_q1(qzeta_poly(p, h).poly) == classical_zeta(p); });
        return;
    }
    throw PreconditionError("unknown check suite '" + suite + "'");
}

/// Built-in corpus used by `check` when no poset is given.
inline std::vector<std::pair<std::string, Poset>> default_corpus() {
    std::vector<std::pair<std::string, Poset>> out;
    for (const char* id : {"ex1", "ex2", "ex3", "ex4", "ex5", "ex6"}) out.emplace_back(id, example(id));
    out.emplace_back("dual:ex5", dual(example("ex5")));
    for (int n = 0; n <= 3; ++n) out.emplace_back("boolean:" + std::to_string(n), boolean(n));
    out.emplace_back("diamond:4", diamond(4));
    out.emplace_back("jop:ex6", j_of_p(example("ex6")));
    return out;
}

// ---------------------------------------------------------------------------
// reproduce

namespace detail {
inline RationalFunctionQ qpoly(const std::vector<long>& c) {
    LaurentPolyZ l;
    for (std::size_t i = 0; i < c.size(); ++i) l += LaurentPolyZ::monomial(BigInt(c[i]), static_cast<int>(i));
    return RationalFunctionQ(l);
}
inline PolyX scaled(const PolyX& p, const RationalFunctionQ& s) {
    return p.map_coefficients([&](const RationalFunctionQ& c) { return c * s; });
}
}  // namespace detail

/// Every worked example and displayed formula, recomputed.
inline Report reproduce_examples() {
    using detail::qpoly;
    using detail::scaled;
    const RationalFunctionQ q = RationalFunctionQ::q(), one(1);
    const PolyX x = PolyX::x();
    auto rk_poly = [](const Poset& p) { return qzeta_poly(p, rank_function(p)).poly; };
    Report r;
    const std::string s = "examples";

    r.guarded(s, "ex1 ((1+(q-1)x)/q)^H, H<=4", [&](std::string&) {
        for (int H = 0; H <= 4; ++H)
            if (qzeta_poly(example("ex1"), HeightFunction{{H}}).poly != pow(PolyX::linear(q.inverse(), (q - one) / q), H)) return false;
        return true;
    });
    r.guarded(s, "ex2 total order, d<=5", [&](std::string&) {
        for (int d = 1; d <= 5; ++d) {
            PolyX acc(1);
            for (int j = 0; j <= d - 2; ++j) acc *= qint_affine(j);
            if (rk_poly(chain(d)) != scaled(acc, qfactorial(d - 1).inverse())) return false;
        }
        return true;
    });
    r.guarded(s, "ex3 x((q+2)x-1)/(q+1)", [&](std::string& d) {
        d = rk_poly(example("ex3")).to_string();
        return d == "((-1)/(1+q))*x^1 + ((2+q)/(1+q))*x^2";
    });
    r.guarded(s, "ex4 2(q+1)(x-1)/q", [&](std::string&) {
        return rk_poly(example("ex4")) == scaled(x - PolyX(1), RationalFunctionQ(2) * (q + one) / q);
    });
    r.guarded(s, "ex5 2x-1", [&](std::string&) { return rk_poly(example("ex5")) == scaled(x, RationalFunctionQ(2)) - PolyX(1); });
    r.guarded(s, "ex5 dual ((q+1)x-1)/q", [&](std::string&) {
        return rk_poly(dual(example("ex5"))) == scaled(scaled(x, q + one) - PolyX(1), q.inverse());
    });
    r.guarded(s, "ex6 (2qx^2+2x-q-1)/(q+1)", [&](std::string&) {
        return rk_poly(example("ex6")) ==
               scaled(PolyX(std::vector<RationalFunctionQ>{-q - one, RationalFunctionQ(2), RationalFunctionQ(2) * q}), (q + one).inverse());
    });

    const std::string o = "order-polynomial";
    const RationalFunctionQ d23 = qint(2) * qint(3);
    r.guarded(o, "Z_{J(P),rk} for the V poset", [&](std::string&) {
        const Poset j = j_of_p(example("ex5"));
        return rk_poly(j) == scaled(x * PolyX::linear(one, q) * PolyX::linear(one, q * q + q), d23.inverse());
    });
    r.guarded(o, "L of the dual V poset", [&](std::string&) {
        const PolyX l = scaled(PolyX::linear(one, q) * PolyX::linear(one + q, q * q) * PolyX::linear(one + q + q * q, q * q * q + q * q), d23.inverse());
        return q_order_polynomial(dual(example("ex5"))) == l;
    });
    r.guarded(o, "Z_{J(P),rk}(1+qx) = L of the dual", [&](std::string&) {
        const Poset v = example("ex5");
        return rk_poly(j_of_p(v)).compose(PolyX::linear(one, q)) == q_order_polynomial(dual(v));
    });

    const std::string e = "ehrhart-series";
    r.guarded(e, "diamond HH = 1 + 2qt", [&](std::string& d) {
        const Poset p = example("ex3");
        const auto n = hh_numerator(p, rank_function(p));
        d = numerator_text(n);
        return n.to_strings() == std::vector<std::string>{"1", "2*q"} && n.denominator_degree == 2;
    });
    r.guarded(e, "diamond q-volume = q + 2", [&](std::string& d) {
        const Poset p = example("ex3");
        const auto v = qzeta_volume(p, rank_function(p));
        d = v.to_string();
        return d == "2+q";
    });
    r.guarded(e, "ex6 numerator -q^3t^2 + (2+q+q^2)t - 1", [&](std::string& d) {
        const Poset p = example("ex6");
        const auto n = hh_numerator_shifted(p, rank_function(p));
        d = numerator_text(n) + " (series indexed from Z([0]_q))";
        return n.to_strings() == std::vector<std::string>{"-1", "2+q+q^2", "-q^3"};
    });
    r.guarded(e, "positivity fails for ex5 and ex6", [&](std::string&) {
        for (const char* id : {"ex5", "ex6"}) {
            const Poset p = example(id);
            if (hh_numerator_shifted(p, rank_function(p)).is_nonnegative()) return false;
        }
        return true;
    });

    const std::string l = "r-labellings";
    r.guarded(l, "B_n atom labelling, n<=4", [&](std::string&) {
        for (int n = 1; n <= 4; ++n)
            if (!bjorner_stanley_check(boolean(n), boolean_atom_labelling(boolean(n), n))) return false;
        return true;
    });
    r.guarded(l, "weak order on S3 has no R-labelling", [&](std::string& d) {
        const Poset w = weak_order_s3();
        const auto edges = w.covers();
        int tried = 0;
        for (unsigned lab = 0; lab < (1u << edges.size()); ++lab)
            for (unsigned rel = 0; rel < 16u; ++rel) {
                RLabelling lb;
                for (std::size_t i = 0; i < edges.size(); ++i) lb.labels[edges[i]] = 1 + static_cast<int>(lab >> i & 1u);
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        if (rel >> (2 * a + b) & 1u) lb.relation.insert({a + 1, b + 1});
                ++tried;
                if (r_labelling_check(w, lb).valid) return false;
            }
        d = std::to_string(tried) + " labellings with two labels tried";
        return true;
    });
    r.guarded(l, "B_n HH nonnegative, n<=4", [&](std::string&) {
        for (int n = 0; n <= 4; ++n)
            if (!hh_numerator(boolean(n), rank_function(boolean(n))).is_nonnegative()) return false;
        return true;
    });

    const std::string z = "q=0";
    r.guarded(z, "2(q+1)/q has a pole of order 1", [&](std::string&) {
        try {
            eval_at_q0(RationalFunctionQ(2) * (q + one) / q);
        } catch (const PoleError& pe) {
            return pe.order() == 1;
        }
        return false;
    });
    r.guarded(z, "poles exactly for ex4 and dual ex5", [&](std::string& d) {
        std::vector<std::pair<std::string, Poset>> ex;
        for (const char* id : {"ex1", "ex2", "ex3", "ex4", "ex5", "ex6"}) ex.emplace_back(id, example(id));
        ex.emplace_back("dual ex5", dual(example("ex5")));
        std::vector<std::string> poles;
        for (const auto& [name, p] : ex) {
            try {
                specialize_q0(rk_poly(p));
            } catch (const PoleError&) {
                poles.push_back(name);
            }
        }
        for (const auto& n : poles) d += (d.empty() ? "" : ", ") + n;
        return poles == std::vector<std::string>{"ex4", "dual ex5"};
    });
    r.guarded(z, "diamond theorem", [&](std::string&) { return q0_theorem_check(example("ex3")); });

    const std::string u = "eulerian";
    r.guarded(u, "icosahedron Z", [&](std::string&) {
        const RationalFunctionQ den = (q * q + one) * (q * q + q + one);
        const PolyX want(std::vector<RationalFunctionQ>{RationalFunctionQ(0), RationalFunctionQ(-8) * qpoly({-1, 1}) / den,
                                                        RationalFunctionQ(-24) * qpoly({1, -1, 1}) / den,
                                                        RationalFunctionQ(-16) * qpoly({-1, 2, -2, 1}) / den, qpoly({1, 17, -6, 17, 1}) / den});
        return rk_poly(icosahedron_face_lattice()) == want;
    });
    r.guarded(u, "associahedron Z", [&](std::string&) {
        const RationalFunctionQ den = (q * q + one) * (q * q + q + one);
        const PolyX want(std::vector<RationalFunctionQ>{RationalFunctionQ(0), RationalFunctionQ(5) * qpoly({-1, 1}) / den,
                                                        RationalFunctionQ(-15) * q / den, RationalFunctionQ(-5) * qpoly({-1, -1, 1, 1}) / den,
                                                        qpoly({1, 6, 7, 6, 1}) / den});
        return rk_poly(associahedron3_face_lattice()) == want;
    });
    r.guarded(u, "reciprocity (exponent -H)", [&](std::string&) {
        for (int n = 0; n <= 4; ++n)
            if (!eulerian_reciprocity_check(boolean(n))) return false;
        return eulerian_reciprocity_check(icosahedron_face_lattice()) && eulerian_reciprocity_check(associahedron3_face_lattice());
    });

    const std::string a = "appendix";
    r.guarded(a, "Delta_q B_k = B_{k-1}, k<=6", [&](std::string&) {
        for (int k = 0; k <= 6; ++k)
            if (delta_q(basis_B(k)) != basis_B(k - 1)) return false;
        return true;
    });
    r.guarded(a, "unit D_h^-1 and diamond corners", [&](std::string&) {
        const Poset p = example("ex3");
        const RankFunction rk = rank_function(p);
        const QMatrix zm = zeta_matrix(p);
        if (twisted_product(p, zm, twisted_unit(rk), rk) != zm) return false;
        return corner_value(p, rk, 2) == qpoly({1, 3, 1}).to_integer_laurent() && corner_value(p, rk, -1) == LaurentPolyZ::monomial(BigInt(2), -2);
    });
    return r;
}

// ---------------------------------------------------------------------------
// scan

inline Poset random_bounded_graded(std::mt19937& rng, int H, int width) {
    std::uniform_int_distribution<int> wpick(1, width);
    std::vector<std::vector<int>> levels;
    std::vector<std::string> labels;
    int next = 0;
    for (int r = 0; r <= H; ++r) {
        const int w = (r == 0 || r == H) ? 1 : wpick(rng);
        std::vector<int> lev;
        for (int i = 0; i < w; ++i) {
            lev.push_back(next++);
            labels.push_back("r" + std::to_string(r) + "_" + std::to_string(i));
        }
        levels.push_back(lev);
    }
    std::vector<std::pair<int, int>> covers;
    std::bernoulli_distribution coin(0.5);
    for (int r = 0; r < H; ++r) {
        const auto& lo = levels[static_cast<std::size_t>(r)];
        const auto& up = levels[static_cast<std::size_t>(r + 1)];
        std::vector<bool> lo_used(lo.size(), false), up_used(up.size(), false);
        for (std::size_t i = 0; i < lo.size(); ++i)
            for (std::size_t j = 0; j < up.size(); ++j)
                if (coin(rng)) {
                    covers.emplace_back(lo[i], up[j]);
                    lo_used[i] = up_used[j] = true;
                }
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (!lo_used[i]) {
                std::uniform_int_distribution<std::size_t> j(0, up.size() - 1);
                const std::size_t k = j(rng);
                covers.emplace_back(lo[i], up[k]);
                up_used[k] = true;
            }
        for (std::size_t j = 0; j < up.size(); ++j)
            if (!up_used[j]) {
                std::uniform_int_distribution<std::size_t> i(0, lo.size() - 1);
                covers.emplace_back(lo[i(rng)], up[j]);
            }
    }
    return Poset::from_index_covers(std::move(labels), std::move(covers));
}

inline std::string flag_key(const FlagVectors& f) {
    std::string k = std::to_string(f.H) + ":";
    for (const auto& [s, v] : f.alpha) k += rank_set_key(s) + "=" + v.str() + ";";
    return k;
}

/// Looks for bounded graded posets with equal Z_{P,rk} but different flag f-vectors.
inline Json scan_flags(std::uint32_t seed, int count, int max_rank, int width) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> hpick(1, max_rank);
    std::map<std::string, std::map<std::string, Json>> by_z;  // Z -> flag key -> example poset
    for (int i = 0; i < count; ++i) {
        const Poset p = random_bounded_graded(rng, hpick(rng), width);
        const std::string zs = qzeta_poly(p, rank_function(p)).poly.to_string();
        const std::string fk = flag_key(flag_vectors(p));
        auto& slot = by_z[zs];
        if (!slot.count(fk)) slot[fk] = poset_to_json(p);
    }
    Json found = Json::array();
    for (const auto& [zs, flags] : by_z)
        if (flags.size() > 1) {
            Json group = Json::array();
            for (const auto& [fk, pj] : flags) group.push_back({{"flags", fk}, {"poset", pj}});
            found.push_back({{"Z", zs}, {"posets", group}});
        }
    return {{"scanned", count}, {"distinct_Z", by_z.size()}, {"same_Z_different_flags", found}};
}

/// HH_{P,rk} positivity on random bounded graded posets.
inline Json scan_positivity(std::uint32_t seed, int count, int max_rank, int width) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> hpick(1, max_rank);
    int positive = 0;
    Json negatives = Json::array();
    for (int i = 0; i < count; ++i) {
        const Poset p = random_bounded_graded(rng, hpick(rng), width);
        const auto n = hh_numerator(p, rank_function(p));
        if (n.is_nonnegative()) ++positive;
        else if (negatives.size() < 5) negatives.push_back({{"numerator", numerator_json(n)}, {"poset", poset_to_json(p)}});
    }
    return {{"scanned", count}, {"nonnegative", positive}, {"negative", count - positive}, {"negative_examples", negatives}};
}

// ---------------------------------------------------------------------------
// entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"q-Zeta polynomials of finite posets"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    std::string poset_src, height_mode, height_file, format = "text";
    auto add_source = [&](CLI::App* c) {
        c->add_option("--poset", poset_src, "Poset JSON file or generator spec")->required();
        c->add_option("--height", height_mode, "Height: rk, linext or file")->check(CLI::IsMember({"rk", "linext", "file"}));
        c->add_option("--height-file", height_file, "JSON map label -> height");
        c->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    // gen
    auto* gen = app.add_subcommand("gen", "Emit a generated poset as JSON");
    std::string gen_spec, gen_height;
    gen->add_option("spec", gen_spec, "chain:n antichain:n boolean:n diamond:m jop:<src> dual:<src> product:<a>,<b> ex1..ex6 icosahedron associahedron3 weak-s3")
        ->required();
    gen->add_option("--height", gen_height, "Embed a height: rk or linext")->check(CLI::IsMember({"rk", "linext"}));

    // compute
    auto* compute = app.add_subcommand("compute", "Compute an invariant");
    std::string what, route = "interpolation", indexing = "definition";
    compute->add_option("what", what, "qzeta zeta orderpoly charpoly flags hh volume")
        ->required()
        ->check(CLI::IsMember({"qzeta", "zeta", "orderpoly", "charpoly", "flags", "hh", "volume"}));
    compute->add_option("--route", route, "qzeta route")->check(CLI::IsMember({"interpolation", "definition", "matrix"}));
    compute->add_option("--indexing", indexing, "hh series start: definition (Z([1]_q)) or shifted (Z([0]_q))")
        ->check(CLI::IsMember({"definition", "shifted"}));
    add_source(compute);

    // values
    auto* values = app.add_subcommand("values", "Values at q-integers, special values, q=0 specialization");
    bool q0_only = false, corner = false;
    int from = -1;
    std::optional<int> to;
    values->add_flag("--q0", q0_only, "Only Z at q=0 (exit 2 on a pole)");
    values->add_flag("--corner", corner, "Corner coefficients of twisted zeta powers instead of polynomial values");
    values->add_option("--from", from, "First n");
    values->add_option("--to", to, "Last n (default H+2)");
    add_source(values);

    // check
    auto* check = app.add_subcommand("check", "Run invariant checks");
    std::string check_suite;
    std::vector<std::string> suite_names{"all"};
    for (const auto& n : check_suites()) suite_names.push_back(n);
    check->add_option("suite", check_suite, "all or one suite")->required()->check(CLI::IsMember(suite_names));
    check->add_option("--poset", poset_src, "Poset JSON file or generator spec (default: built-in corpus)");
    check->add_option("--height", height_mode, "Height: rk, linext or file")->check(CLI::IsMember({"rk", "linext", "file"}));
    check->add_option("--height-file", height_file, "JSON map label -> height");
    check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "Recompute the worked examples");
    std::string target;
    reproduce->add_option("target", target, "paper")->required()->check(CLI::IsMember({"paper"}));
    reproduce->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    // scan
    auto* scan = app.add_subcommand("scan", "Exploratory searches; outcomes are reported, not asserted");
    std::string scan_kind;
    std::uint32_t seed = 1;
    int count = 200, max_rank = 4, width = 3;
    scan->add_option("kind", scan_kind, "flags or positivity")->required()->check(CLI::IsMember({"flags", "positivity"}));
    scan->add_option("--seed", seed, "Random seed");
    scan->add_option("--count", count, "Number of random posets")->check(CLI::Range(1, 100000));
    scan->add_option("--max-rank", max_rank, "Largest rank")->check(CLI::Range(1, 8));
    scan->add_option("--width", width, "Largest rank level")->check(CLI::Range(1, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }

    const bool json = format == "json";
    try {
        if (*gen) {
            Loaded l = load_source(gen_spec);
            std::optional<HeightFunction> h;
            if (!gen_height.empty()) h = resolve_height(l, gen_height, "");
            out << poset_to_json(l.poset, h ? &*h : nullptr).dump(2) << "\n";
            return exit_ok;
        }
        if (*compute) {
            const Loaded l = load_source(poset_src);
            const Poset& p = l.poset;
            if (what == "qzeta") {
                const HeightFunction h = resolve_height(l, height_mode, height_file);
                QZetaResult r;
                if (route == "interpolation") r = qzeta_poly(p, h);
                else {
                    r.height_used = h;
                    r.H = p.empty() ? -1 : h.max();
                    r.route = route == "definition" ? Route::definition : Route::matrix;
                    r.poly = route == "definition" ? qzeta_via_definition(p, h) : qzeta_via_matrix(p, h);
                }
                if (json) out << Json{{"route", to_string(r.route)}, {"H", r.H}, {"height", height_json(p, h)}, {"poly", r.poly.to_string()}}.dump(2) << "\n";
                else out << r.poly.to_string() << "\n";
            } else if (what == "zeta") {
                const std::string s = classical_zeta(p).to_string("x");
                if (json) out << Json{{"zeta", s}}.dump(2) << "\n";
                else out << s << "\n";
            } else if (what == "orderpoly") {
                const std::string s = q_order_polynomial(p).to_string();
                if (json) out << Json{{"size", p.size()}, {"poly", s}}.dump(2) << "\n";
                else out << s << "\n";
            } else if (what == "charpoly") {
                const IntPoly c = characteristic_polynomial(p);
                if (json) {
                    Json arr = Json::array();
                    for (int k = 0; k <= c.degree(); ++k) arr.push_back(c.coeff(k).str());
                    out << Json{{"charpoly", format_spaced(c, "y")}, {"coefficients", arr}}.dump(2) << "\n";
                } else out << format_spaced(c, "y") << "\n";
            } else if (what == "flags") {
                const FlagVectors f = flag_vectors(p);
                if (json) {
                    Json a = Json::object(), b = Json::object();
                    for (RankSet s : rank_subsets(f.H)) {
                        a[rank_set_key(s)] = big_json(f.a(s));
                        b[rank_set_key(s)] = big_json(f.b(s));
                    }
                    out << Json{{"H", f.H}, {"alpha", a}, {"beta", b}}.dump(2) << "\n";
                } else {
                    out << "H: " << f.H << "\n";
                    for (RankSet s : rank_subsets(f.H)) out << "{" << rank_set_key(s) << "} alpha=" << f.a(s).str() << " beta=" << f.b(s).str() << "\n";
                }
            } else if (what == "hh") {
                const HeightFunction h = resolve_height(l, height_mode, height_file);
                const SeriesNumerator n = indexing == "shifted" ? hh_numerator_shifted(p, h) : hh_numerator(p, h);
                if (json) out << Json{{"H", h.max()}, {"indexing", indexing}, {"denominator_degree", n.denominator_degree}, {"numerator", numerator_json(n)}}.dump(2) << "\n";
                else out << "numerator: " << numerator_text(n) << "\nH: " << h.max() << "\n";
            } else if (what == "volume") {
                const HeightFunction h = resolve_height(l, height_mode, height_file);
                const std::string s = qzeta_volume(p, h).to_string();
                if (json) out << Json{{"H", h.max()}, {"volume", s}}.dump(2) << "\n";
                else out << s << "\n";
            }
            return exit_ok;
        }
        if (*values) {
            const Loaded l = load_source(poset_src);
            const Poset& p = l.poset;
            const HeightFunction h = resolve_height(l, height_mode, height_file);
            const auto r = qzeta_poly(p, h);
            if (q0_only) {
                const std::string s = specialize_q0(r.poly).to_string("x");
                if (json) out << Json{{"q0", s}}.dump(2) << "\n";
                else out << s << "\n";
                return exit_ok;
            }
            const int last = to.value_or(r.H + 2);
            if (last < from) throw PreconditionError("--to must not be below --from");
            if (corner && !is_bounded(p)) throw PreconditionError("--corner needs a bounded poset");
            std::vector<std::pair<int, std::string>> seq;
            if (corner) {
                const auto mats = twisted_power_range(p, h, from, last);
                for (int n = from; n <= last; ++n) seq.emplace_back(n, mats[static_cast<std::size_t>(n - from)](*p.bottom(), *p.top()).to_string());
            } else {
                for (int n = from; n <= last; ++n) seq.emplace_back(n, value_text(r.poly.eval(qint(n))));
            }
            std::vector<std::pair<std::string, std::string>> special;
            auto try_special = [&](const std::string& name, const std::function<SpecialValue()>& f) {
                try {
                    special.emplace_back(name, f().from_polynomial.to_string());
                } catch (const PreconditionError& e) {
                    special.emplace_back(name, std::string("undefined: ") + e.what());
                }
            };
            if (!corner) {
                try_special("[1]_q", [&] { return value_at_1(p, h); });
                try_special("[0]_q", [&] { return value_at_0(p, h); });
                try_special("[-1]_q", [&] { return value_at_minus1(p, h); });
                try {
                    special.emplace_back("q=0", specialize_q0(r.poly).to_string("x"));
                } catch (const PoleError& e) {
                    special.emplace_back("q=0", std::string("undefined: ") + e.what());
                }
            }
            if (json) {
                Json arr = Json::array();
                for (const auto& [n, v] : seq) arr.push_back(v);
                Json j{{"from", from}, {"to", last}, {corner ? "corner" : "values", arr}};
                if (!corner) {
                    Json sj = Json::object();
                    for (const auto& [k, v] : special) sj[k] = v;
                    j["special"] = sj;
                }
                out << j.dump(2) << "\n";
            } else {
                for (const auto& [n, v] : seq) out << (corner ? "corner(" : "Z([") << n << (corner ? ") = " : "]_q) = ") << v << "\n";
                for (const auto& [k, v] : special) out << "special " << k << ": " << v << "\n";
            }
            return exit_ok;
        }
        if (*check) {
            Report rep;
            const std::vector<std::string> suites = check_suite == "all" ? check_suites() : std::vector<std::string>{check_suite};
            std::vector<std::tuple<std::string, Poset, HeightFunction>> targets;
            if (!poset_src.empty()) {
                const Loaded l = load_source(poset_src);
                targets.emplace_back(poset_src, l.poset, resolve_height(l, height_mode, height_file));
            } else {
                for (auto& [name, p] : default_corpus()) {
                    const Loaded l{p, std::nullopt};
                    targets.emplace_back(name, p, resolve_height(l, height_mode, height_file));
                }
            }
            for (const auto& sname : suites)
                for (const auto& [name, p, h] : targets) run_check(rep, sname, name, p, h);
            rep.print(out, json);
            return rep.failed() ? exit_invalid : exit_ok;
        }
        if (*reproduce) {
            const Report rep = reproduce_examples();
            rep.print(out, json);
            return rep.all_passed() ? exit_ok : exit_invalid;
        }
        if (*scan) {
            const Json j = scan_kind == "flags" ? scan_flags(seed, count, max_rank, width) : scan_positivity(seed, count, max_rank, width);
            out << j.dump(2) << "\n";
            return exit_ok;
        }
    } catch (const PoleError& e) {
        err << "undefined: " << e.what() << "\n";
        return exit_undefined;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const NotInAq& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}

} // namespace qzeta::cli
