#pragma once

#include <cstddef>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hfcone/error.hpp"
#include "hfcone/f2_matrix.hpp"
#include "hfcone/knot_complex.hpp"
#include "hfcone/rational.hpp"
#include "hfcone/subquotient.hpp"

namespace hfcone {

/// F2 chain map between two subquotient complexes.
struct ChainMapF2 {
    std::shared_ptr<const SubquotientComplex> source;
    std::shared_ptr<const SubquotientComplex> target;
    F2Matrix matrix;
    /// Common Maslov shift of every entry; nullopt when entries disagree.
    std::optional<Rational> maslov_shift;

    /// Rank of the induced map on homology.
    [[nodiscard]] std::size_t induced_rank() const {
        return induced_rank_f2(matrix, source->differential, target->differential);
    }

    /// True when the induced map on homology is an isomorphism.
    [[nodiscard]] bool induces_isomorphism() const {
        const auto r = induced_rank();
        return r == source->homology_dim() && r == target->homology_dim();
    }
};

namespace detail {

inline std::vector<PlaneElement> flip_image(const TermTable& phi, const PlaneElement& e) {
    return plane_boundary(phi, e);  // same term-table action: (t, i - n)
}

inline std::optional<Rational> common_shift(const SubquotientComplex& src, const SubquotientComplex& tgt,
                                            const F2Matrix& m) {
    std::optional<Rational> shift;
    for (auto [r, c] : m.entries()) {
        Rational d = tgt.maslov[r] - src.maslov[c];
        if (shift && *shift != d) return std::nullopt;
        shift = d;
    }
    return shift.value_or(Rational(0));
}

inline ChainMapF2 finish_map(std::shared_ptr<const SubquotientComplex> src,
                             std::shared_ptr<const SubquotientComplex> tgt, F2Matrix m, const char* what) {
    if (!(tgt->differential * m == m * src->differential)) {
        throw NotAChainMap(std::string(what) + " does not commute with the differentials");
    }
    auto shift = common_shift(*src, *tgt, m);
    return {std::move(src), std::move(tgt), std::move(m), shift};
}

/// Sends each source element to itself when it lies in the target region and
/// to 0 otherwise.
inline F2Matrix projection_matrix(const SubquotientComplex& src, const SubquotientComplex& tgt) {
    F2Matrix m(tgt.size(), src.size());
    for (std::size_t k = 0; k < src.size(); ++k) {
        if (auto t = tgt.find(src.basis[k])) m.toggle(*t, k);
    }
    return m;
}

/// Project to j >= s, multiply by U^s, apply the flip.
inline F2Matrix flip_projection_matrix(const KnotComplex& c, const SubquotientComplex& src,
                                       const SubquotientComplex& tgt, int s) {
    const auto phi = flip_table(c);
    F2Matrix m(tgt.size(), src.size());
    for (std::size_t k = 0; k < src.size(); ++k) {
        const auto& e = src.basis[k];
        if (plane_j(c, e) < s) continue;
        for (const auto& x : flip_image(phi, {e.generator, e.i - s})) {
            if (auto t = tgt.find(x)) m.toggle(*t, k);
        }
    }
    return m;
}

}  // namespace detail

/// v_s : A_s -> B, the projection onto the i = 0 column.
inline ChainMapF2 build_v_hat(const KnotComplex& c, int s) {
    auto a = std::make_shared<const SubquotientComplex>(build_A_hat(c, s));
    auto b = std::make_shared<const SubquotientComplex>(build_B_hat(c));
    auto m = detail::projection_matrix(*a, *b);
    return detail::finish_map(a, b, std::move(m), "v_hat");
}

/// h_s : A_s -> B, projection onto the j = s row followed by U^s and the flip.
inline ChainMapF2 build_h_hat(const KnotComplex& c, int s) {
    if (!c.flip) throw FlipMissing("complex '" + c.id + "' has no flip map");
    auto a = std::make_shared<const SubquotientComplex>(build_A_hat(c, s));
    auto b = std::make_shared<const SubquotientComplex>(build_B_hat(c));
    auto m = detail::flip_projection_matrix(c, *a, *b, s);
    return detail::finish_map(a, b, std::move(m), "h_hat");
}

/// The map A_s -> A_{s'} (s <= s') through which v_s factors:
/// v_s = v_{s'} * project_A(s, s').
inline ChainMapF2 project_A(const KnotComplex& c, int s, int s_prime) {
    if (s_prime < s) throw Error("project_A requires s <= s'");
    auto a = std::make_shared<const SubquotientComplex>(build_A_hat(c, s));
    auto b = std::make_shared<const SubquotientComplex>(build_A_hat(c, s_prime));
    auto m = detail::projection_matrix(*a, *b);
    return detail::finish_map(a, b, std::move(m), "project_A");
}

inline ChainMapF2 build_v_plus(const KnotComplex& c, int s, int n) {
    auto a = std::make_shared<const SubquotientComplex>(build_plus_truncated(c, PlusRegion::A, s, n).complex);
    auto b = std::make_shared<const SubquotientComplex>(build_plus_truncated(c, PlusRegion::B, s, n).complex);
    auto m = detail::projection_matrix(*a, *b);
    return detail::finish_map(a, b, std::move(m), "v_plus");
}

inline ChainMapF2 build_h_plus(const KnotComplex& c, int s, int n) {
    if (!c.flip) throw FlipMissing("complex '" + c.id + "' has no flip map");
    auto a = std::make_shared<const SubquotientComplex>(build_plus_truncated(c, PlusRegion::A, s, n).complex);
    auto b = std::make_shared<const SubquotientComplex>(build_plus_truncated(c, PlusRegion::B, s, n).complex);
    auto m = detail::flip_projection_matrix(c, *a, *b, s);
    return detail::finish_map(a, b, std::move(m), "h_plus");
}

/// Differential of Cone(f : A -> B) on A (+) B: [[d_A, 0], [f, d_B]].
inline F2Matrix cone_differential(const F2Matrix& d_a, const F2Matrix& d_b, const F2Matrix& f) {
    const std::size_t na = d_a.cols();
    const std::size_t nb = d_b.cols();
    std::vector<F2Vector> cols;
    cols.reserve(na + nb);
    for (std::size_t k = 0; k < na; ++k) {
        F2Vector col = d_a.column(k);
        for (auto r : f.column(k)) col.push_back(na + r);
        cols.push_back(std::move(col));
    }
    for (std::size_t k = 0; k < nb; ++k) {
        F2Vector col;
        for (auto r : d_b.column(k)) col.push_back(na + r);
        cols.push_back(std::move(col));
    }
    return F2Matrix::from_columns(na + nb, std::move(cols));
}

/// Cone grading: A keeps its Maslov grading, B sits one lower.
inline std::vector<Rational> cone_grading(const SubquotientComplex& a, const SubquotientComplex& b) {
    std::vector<Rational> g = a.maslov;
    for (const auto& m : b.maslov) g.push_back(m - Rational(1));
    return g;
}

struct ConeResult {
    int s = 0;
    std::size_t total_dim = 0;
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    /// Relative gradings; only at s = 0, where v and h share a grading shift.
    std::optional<std::map<Rational, std::size_t>> graded_dims;
    std::size_t rank_v = 0;
    std::size_t rank_h = 0;
    std::size_t rank_v_plus_h = 0;
};

/// Homology of Cone(v_s + h_s : A_s -> B), the hat-flavor Floer homology of
/// 0-surgery in the Spin^c structure indexed by s.
inline ConeResult cone_homology_hat(const KnotComplex& c, int s) {
    const auto v = build_v_hat(c, s);
    const auto h = build_h_hat(c, s);
    const auto& a = *v.source;
    const auto& b = *v.target;
    const F2Matrix f = v.matrix + h.matrix;
    const F2Matrix d = cone_differential(a.differential, b.differential, f);

    ConeResult r;
    r.s = s;
    r.dim_a = a.homology_dim();
    r.dim_b = b.homology_dim();
    r.total_dim = homology_dim_f2(d);
    r.rank_v = v.induced_rank();
    r.rank_h = h.induced_rank();
    r.rank_v_plus_h = induced_rank_f2(f, a.differential, b.differential);
    if (r.total_dim + 2 * r.rank_v_plus_h != r.dim_a + r.dim_b) {
        throw Error("cone rank-nullity identity failed");  // unreachable for chain maps
    }
    if (s == 0) r.graded_dims = graded_homology_dims(d, cone_grading(a, b));
    return r;
}

struct PlusConeResult {
    int s = 0;
    int truncation = 0;
    /// s != 0 only: dimension of the (finite) cone homology.
    std::optional<std::size_t> total_dim;
    /// s = 0 only: reduced part and ker U_*, by relative grading.
    std::map<Rational, std::size_t> reduced;
    std::map<Rational, std::size_t> u_kernel;

    friend bool operator==(const PlusConeResult& x, const PlusConeResult& y) {
        return x.s == y.s && x.total_dim == y.total_dim && x.reduced == y.reduced && x.u_kernel == y.u_kernel;
    }
};

namespace detail {

struct PlusCone {
    SubquotientComplex a;
    SubquotientComplex b;
    F2Matrix d;
};

inline PlusCone plus_cone(const KnotComplex& c, int s, int n) {
    auto v = build_v_plus(c, s, n);
    auto h = build_h_plus(c, s, n);
    F2Matrix d = cone_differential(v.source->differential, v.target->differential, v.matrix + h.matrix);
    return {*v.source, *v.target, std::move(d)};
}

inline PlusConeResult plus_cone_graded(const KnotComplex& c, int n) {
    auto cone = plus_cone(c, 0, n);
    const auto ua = u_action(c, cone.a).matrix;
    const auto ub = u_action(c, cone.b).matrix;
    const std::size_t na = cone.a.size();
    std::vector<F2Vector> ucols;
    for (std::size_t k = 0; k < na; ++k) ucols.push_back(ua.column(k));
    for (std::size_t k = 0; k < cone.b.size(); ++k) {
        F2Vector col;
        for (auto r : ub.column(k)) col.push_back(na + r);
        ucols.push_back(std::move(col));
    }
    TruncatedModule m;
    m.differential = cone.d;
    m.u = F2Matrix::from_columns(cone.d.rows(), std::move(ucols));
    m.grading = cone_grading(cone.a, cone.b);
    m.quotient_floor = std::min(lowest_grading_at_height(c, cone.a.region, n + 1),
                                lowest_grading_at_height(c, cone.b.region, n + 1) - Rational(1));
    m.truncation = n;
    auto t = analyze_towers(m);
    PlusConeResult r;
    r.s = 0;
    r.truncation = n;
    r.reduced = std::move(t.reduced);
    r.u_kernel = std::move(t.u_kernel);
    return r;
}

/// Classes of the height-n truncated cone that survive into the height-2n one.
inline PlusConeResult plus_cone_total(const KnotComplex& c, int s, int n) {
    auto small = plus_cone(c, s, n);
    auto big = plus_cone(c, s, 2 * n + 1);
    const std::size_t na = small.a.size();
    const std::size_t big_na = big.a.size();
    F2Matrix incl(big.d.rows(), small.d.cols());
    for (std::size_t k = 0; k < na; ++k) incl.toggle(*big.a.find(small.a.basis[k]), k);
    for (std::size_t k = 0; k < small.b.size(); ++k) incl.toggle(big_na + *big.b.find(small.b.basis[k]), na + k);
    PlusConeResult r;
    r.s = s;
    r.truncation = n;
    r.total_dim = induced_rank_f2(incl, small.d, big.d);
    return r;
}

}  // namespace detail

/// Plus-flavor cone of v+_s + h+_s on U-truncations, grown until stable.
/// With `fixed` set the search starts there and is not doubled.
inline PlusConeResult cone_homology_plus_truncated(const KnotComplex& c, int s, std::optional<int> fixed = std::nullopt) {
    if (!c.flip) throw FlipMissing("complex '" + c.id + "' has no flip map");
    auto bounds = default_truncation(c);
    bounds.start += std::abs(s);
    bounds.cap += std::abs(s);
    if (fixed) bounds = {*fixed, *fixed};
    return stabilize_truncation<PlusConeResult>(bounds.start, bounds.cap, [&](int n) {
        return s == 0 ? detail::plus_cone_graded(c, n) : detail::plus_cone_total(c, s, n);
    });
}

}  // namespace hfcone
