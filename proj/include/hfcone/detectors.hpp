#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hfcone/error.hpp"
#include "hfcone/knot_complex.hpp"
#include "hfcone/laurent.hpp"
#include "hfcone/subquotient.hpp"
#include "hfcone/surgery_cone.hpp"
#include "hfcone/twisted_cone.hpp"

namespace hfcone {

enum class VerdictKind { Fires, DoesNotFire, Inconclusive };

inline const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Fires: return "Fires";
        case VerdictKind::DoesNotFire: return "DoesNotFire";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

using WitnessValue = std::variant<std::int64_t, std::string>;

/// Outcome of a detector. `witness` holds the data that decided it and is
/// non-empty unless the kind is Inconclusive.
struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::string statement;
    std::map<std::string, WitnessValue> witness;

    [[nodiscard]] std::int64_t int_at(const std::string& key) const { return std::get<std::int64_t>(witness.at(key)); }
    [[nodiscard]] const std::string& str_at(const std::string& key) const {
        return std::get<std::string>(witness.at(key));
    }
};

namespace detail {

inline std::string spinc_list(const std::vector<KnotComplex>& cs) {
    std::string s;
    for (const auto& c : cs) s += (s.empty() ? "" : ",") + c.spinc_label;
    return s;
}

inline int overall_bound(const std::vector<KnotComplex>& cs) {
    int b = 0;
    for (const auto& c : cs) b = std::max(b, c.a_max());
    return b;
}

}  // namespace detail

/// Fires when some twisted group HF(Y_0(K), t_s; Novikov) is nonzero, which
/// rules out a non-separating two-sphere in Y_0(K). Scans |s| <= A_max.
inline Verdict sphere_obstruction(const std::vector<KnotComplex>& complexes) {
    const auto bound = static_cast<std::int64_t>(detail::overall_bound(complexes));
    std::int64_t tested = 0;
    for (const auto& raw : complexes) {
        const auto c = ensure_flip(raw);
        for (int s = -c.a_max(); s <= c.a_max(); ++s) {
            ++tested;
            if (auto dim = novikov_dim(c, s)) {
                return {VerdictKind::Fires,
                        "Y_0(K) contains no non-separating two-sphere",
                        {{"spinc", c.spinc_label},
                         {"s", std::int64_t{s}},
                         {"novikov_dim", static_cast<std::int64_t>(dim)},
                         {"s_bound", bound}}};
            }
        }
    }
    return {VerdictKind::DoesNotFire,
            "all twisted groups vanish; necessary condition for a non-separating sphere holds",
            {{"tested", tested}, {"s_bound", bound}, {"covered", detail::spinc_list(complexes)}}};
}

/// Given Y_0(K) = N # S^2 x S^1, compares dim HF-hat(N) with dim HF-hat(Y).
/// witness["outcome"] is one of "unknotted", "inconclusive", "impossible".
inline Verdict theorem1_verdict(std::int64_t dim_y, std::int64_t dim_n) {
    if (dim_y < 1 || dim_n < 1) throw Error("HF-hat dimensions must be at least 1");
    std::map<std::string, WitnessValue> w{{"dim_y", dim_y}, {"dim_n", dim_n}};
    if (dim_n == dim_y) {
        w["outcome"] = std::string("unknotted");
        return {VerdictKind::Fires, "K unknotted, N = Y", w};
    }
    if (dim_n < dim_y) {
        w["outcome"] = std::string("inconclusive");
        return {VerdictKind::Inconclusive, "consistent; no unknotting conclusion", w};
    }
    w["outcome"] = std::string("impossible");
    return {VerdictKind::Fires, "no such surgery exists: dim HF-hat(N) cannot exceed dim HF-hat(Y)", w};
}

/// Smallest s >= 0 such that v_i induces an isomorphism on homology for every
/// i >= s and every supplied Spin^c structure.
inline int genus(const std::vector<KnotComplex>& complexes) {
    int g = 0;
    for (const auto& c : complexes) {
        for (int i = c.a_max(); i >= 0; --i) {
            if (!build_v_hat(c, i).induces_isomorphism()) {
                g = std::max(g, i + 1);
                break;
            }
        }
    }
    return g;
}

struct AlexanderResult {
    /// Graded Euler characteristic of HFK-hat, reduced mod 2.
    LaurentPoly polynomial;
    bool trivial_mod_2 = false;
    /// dim HFK-hat by Alexander grading (nonzero entries only).
    std::map<int, std::size_t> hfk_dims;
};

/// Reads HFK-hat off the associated graded of B-hat: keep only differential
/// terms with U^0 that preserve the Alexander grading.
inline AlexanderResult alexander_polynomial(const KnotComplex& c) {
    std::map<int, std::vector<std::size_t>> by_alexander;
    for (std::size_t g = 0; g < c.generators.size(); ++g) by_alexander[c.generators[g].alexander].push_back(g);

    F2Matrix d(c.generators.size(), c.generators.size());
    for (const auto& t : c.differential) {
        const auto s = c.index_of(t.source);
        const auto g = c.index_of(t.target);
        if (t.u_power == 0 && c.generators[s].alexander == c.generators[g].alexander) d.toggle(g, s);
    }

    AlexanderResult r;
    std::vector<int> exps;
    for (const auto& [a, gens] : by_alexander) {
        const std::size_t dim = gens.size() - 2 * rank_f2(d.select_columns(gens));
        if (dim == 0) continue;
        r.hfk_dims[a] = dim;
        if (dim % 2 == 1) exps.push_back(a);
    }
    r.polynomial = LaurentPoly::from_exponents(std::move(exps));
    const auto& sup = r.polynomial.support();
    r.trivial_mod_2 = sup.empty() || (sup.size() == 1 && sup.front() == 0);
    return r;
}

/// If some HF_red,i(Y) is exactly one-dimensional for a homology sphere Y, no
/// knot in Y has S^2 x S^1 as its 0-surgery.
inline Verdict prop_red1_obstruction(const std::map<Rational, std::size_t>& red, bool homology_sphere) {
    if (!homology_sphere) throw NotHomologySphere("the HF_red obstruction applies only to homology spheres");
    for (const auto& [grading, dim] : red) {
        if (dim == 1) {
            return {VerdictKind::Fires,
                    "no knot in Y has S^2 x S^1 as 0-surgery",
                    {{"grading", grading.str()}}};
        }
    }
    return {VerdictKind::DoesNotFire,
            "no grading carries HF_red of dimension exactly 1",
            {{"gradings", static_cast<std::int64_t>(red.size())}}};
}

/// dim HF-hat(Y) = |H_1(Y)| + 2 whenever dim HF_red(Y) = 1.
constexpr std::int64_t hat_dim_from_red1(std::int64_t h1_order) { return h1_order + 2; }

/// Checks the necessary conditions for Y_0(K) = N # S^2 x S^1 on every
/// supplied Spin^c structure and every |s| <= A_max:
///   (a) (v_s + h_s)_* is an isomorphism for s != 0,
///   (c) dim H(A_s) = dim H(B),
///   (b) the twisted cone vanishes over the Novikov field.
/// Clauses are tried in the order a, c, b; the first failure is the witness.
inline Verdict check_prop_0surgery(const std::vector<KnotComplex>& complexes) {
    std::vector<KnotComplex> cs;
    for (const auto& c : complexes) cs.push_back(ensure_flip(c));
    const auto bound = static_cast<std::int64_t>(detail::overall_bound(cs));
    const auto covered = detail::spinc_list(cs);

    auto fail = [&](const char* clause, const KnotComplex& c, int s, const std::string& why) {
        return Verdict{VerdictKind::DoesNotFire,
                       why,
                       {{"clause", std::string(clause)},
                        {"spinc", c.spinc_label},
                        {"s", std::int64_t{s}},
                        {"s_bound", bound},
                        {"covered", covered}}};
    };

    for (const auto& c : cs) {
        for (int s = -c.a_max(); s <= c.a_max(); ++s) {
            if (s == 0) continue;
            auto r = cone_homology_hat(c, s);
            if (!(r.rank_v_plus_h == r.dim_a && r.rank_v_plus_h == r.dim_b)) {
                return fail("a", c, s, "(v_s + h_s)_* is not an isomorphism");
            }
        }
    }
    for (const auto& c : cs) {
        const auto dim_b = build_B_hat(c).homology_dim();
        for (int s = -c.a_max(); s <= c.a_max(); ++s) {
            if (build_A_hat(c, s).homology_dim() != dim_b) return fail("c", c, s, "dim H(A_s) != dim H(B)");
        }
    }
    for (const auto& c : cs) {
        for (int s = -c.a_max(); s <= c.a_max(); ++s) {
            if (novikov_dim(c, s) != 0) return fail("b", c, s, "twisted cone is not acyclic over the Novikov field");
        }
    }
    return {VerdictKind::Fires,
            "all necessary conditions for a non-separating sphere in Y_0(K) hold on Spin^c structures " + covered,
            {{"s_bound", bound}, {"covered", covered}}};
}

}  // namespace hfcone
