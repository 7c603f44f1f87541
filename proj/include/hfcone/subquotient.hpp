#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hfcone/error.hpp"
#include "hfcone/f2_matrix.hpp"
#include "hfcone/knot_complex.hpp"
#include "hfcone/rational.hpp"

namespace hfcone {

enum class RegionKind { BHat, AHat, BPlus, APlus };

/// A convex lattice region X defining the subquotient complex CX.
///
///   BHat       i = 0
///   AHat(s)    max(i, j - s) = 0
///   BPlus(N)   0 <= i <= N
///   APlus(s,N) 0 <= max(i, j - s) <= N
///
/// BPlus does not depend on s; it is carried only so tags print uniformly.
struct Region {
    RegionKind kind = RegionKind::BHat;
    int s = 0;
    int n = 0;

    [[nodiscard]] int height(int i, int j) const {
        switch (kind) {
            case RegionKind::BHat:
            case RegionKind::BPlus: return i;
            case RegionKind::AHat:
            case RegionKind::APlus: return std::max(i, j - s);
        }
        return i;
    }

    [[nodiscard]] int top() const { return (kind == RegionKind::BHat || kind == RegionKind::AHat) ? 0 : n; }

    [[nodiscard]] bool contains(int i, int j) const {
        int h = height(i, j);
        return h >= 0 && h <= top();
    }

    /// Value of i at which a generator of Alexander grading `alexander`
    /// reaches height h.
    [[nodiscard]] int i_at_height(int alexander, int h) const {
        if (kind == RegionKind::BHat || kind == RegionKind::BPlus) return h;
        return h - std::max(0, alexander - s);
    }

    [[nodiscard]] std::string str() const {
        switch (kind) {
            case RegionKind::BHat: return "B_hat";
            case RegionKind::AHat: return "A_hat(s=" + std::to_string(s) + ")";
            case RegionKind::BPlus: return "B_plus(N=" + std::to_string(n) + ")";
            case RegionKind::APlus: return "A_plus(s=" + std::to_string(s) + ",N=" + std::to_string(n) + ")";
        }
        return "?";
    }

    friend bool operator==(const Region&, const Region&) = default;
};

/// Finite F2 complex CX for a convex region X. Basis ordered by
/// (generator name, i).
struct SubquotientComplex {
    std::vector<PlaneElement> basis;
    F2Matrix differential;
    std::vector<Rational> maslov;
    Region region;
    std::map<PlaneElement, std::size_t> index;

    [[nodiscard]] std::size_t size() const noexcept { return basis.size(); }

    [[nodiscard]] std::optional<std::size_t> find(const PlaneElement& e) const {
        auto it = index.find(e);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] std::size_t homology_dim() const { return homology_dim_f2(differential); }
};

/// Multiplication by U on a plus-flavor truncation; kills the height-0 layer.
struct UAction {
    F2Matrix matrix;
};

inline SubquotientComplex extract_region(const KnotComplex& c, const Region& region) {
    std::vector<PlaneElement> elems;
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
        const int a = c.generators[g].alexander;
        for (int h = 0; h <= region.top(); ++h) elems.push_back({g, region.i_at_height(a, h)});
    }
    auto w = detail::induced_window(c, std::move(elems));
    SubquotientComplex out;
    out.region = region;
    out.differential = std::move(w.differential);
    out.basis = std::move(w.elements);
    for (std::size_t k = 0; k < out.basis.size(); ++k) {
        out.maslov.push_back(plane_maslov(c, out.basis[k]));
        out.index[out.basis[k]] = k;
    }
    return out;
}

/// C{i = 0}: models HF-hat(Y, t).
inline SubquotientComplex build_B_hat(const KnotComplex& c) { return extract_region(c, {RegionKind::BHat, 0, 0}); }

/// C{max(i, j - s) = 0}.
inline SubquotientComplex build_A_hat(const KnotComplex& c, int s) {
    return extract_region(c, {RegionKind::AHat, s, 0});
}

enum class PlusRegion { B, A };

struct PlusTruncation {
    SubquotientComplex complex;
    UAction u;
};

inline UAction u_action(const KnotComplex& c, const SubquotientComplex& q) {
    (void)c;
    F2Matrix m(q.size(), q.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (auto t = q.find({q.basis[k].generator, q.basis[k].i - 1})) m.toggle(*t, k);
    }
    return {std::move(m)};
}

/// B+ or A+_s cut off above height n.
inline PlusTruncation build_plus_truncated(const KnotComplex& c, PlusRegion which, int s, int n) {
    if (n < 0) throw Error("truncation height must be non-negative");
    Region r = which == PlusRegion::B ? Region{RegionKind::BPlus, s, n} : Region{RegionKind::APlus, s, n};
    auto q = extract_region(c, r);
    auto u = u_action(c, q);
    return {std::move(q), std::move(u)};
}

/// Smallest grading of a generator's element at the given height, over all
/// generators. Used to bound the range where a truncation is exact.
inline Rational lowest_grading_at_height(const KnotComplex& c, const Region& r, int h) {
    std::optional<Rational> lo;
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
        Rational m = plane_maslov(c, {g, r.i_at_height(c.generators[g].alexander, h)});
        if (!lo || m < *lo) lo = m;
    }
    return lo.value_or(Rational(0));
}

// Graded homology ----------------------------------------------------------

namespace detail {

inline std::vector<std::size_t> indices_in_grading(const std::vector<Rational>& grading, const Rational& k) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < grading.size(); ++i) {
        if (grading[i] == k) out.push_back(i);
    }
    return out;
}

}  // namespace detail

/// dim H_k for a differential of degree -1 with respect to `grading`.
inline std::size_t graded_homology_dim(const F2Matrix& d, const std::vector<Rational>& grading, const Rational& k) {
    auto here = detail::indices_in_grading(grading, k);
    auto above = detail::indices_in_grading(grading, k + Rational(1));
    return here.size() - rank_f2(d.select_columns(here)) - rank_f2(d.select_columns(above));
}

inline std::map<Rational, std::size_t> graded_homology_dims(const F2Matrix& d, const std::vector<Rational>& grading) {
    std::map<Rational, std::size_t> out;
    for (const auto& k : std::set<Rational>(grading.begin(), grading.end())) {
        if (auto dim = graded_homology_dim(d, grading, k)) out[k] = dim;
    }
    return out;
}

/// Rank of f_* : H_{k_src}(src) -> H_{k_tgt}(tgt) for a homogeneous chain map f
/// between graded complexes (d, grading).
inline std::size_t graded_induced_rank(const F2Matrix& f, const F2Matrix& d_src, const std::vector<Rational>& g_src,
                                       const Rational& k_src, const F2Matrix& d_tgt,
                                       const std::vector<Rational>& g_tgt, const Rational& k_tgt) {
    auto src_cols = detail::indices_in_grading(g_src, k_src);
    auto bd_cols = detail::indices_in_grading(g_tgt, k_tgt + Rational(1));
    std::vector<F2Vector> cols;
    for (auto c : bd_cols) cols.push_back(d_tgt.column(c));
    const std::size_t boundary_rank = rank_f2(F2Matrix::from_columns(d_tgt.rows(), cols));
    for (const auto& z : kernel_basis_f2(d_src.select_columns(src_cols))) {
        F2Vector global;
        for (auto local : z) global.push_back(src_cols[local]);
        std::sort(global.begin(), global.end());
        cols.push_back(f.apply(global));
    }
    return rank_f2(F2Matrix::from_columns(f.rows(), std::move(cols))) - boundary_rank;
}

// Towers and reduced parts of truncated plus-flavor modules ----------------

/// A U-truncated plus-flavor complex. Its homology agrees with the
/// untruncated one in every grading k with k + 1 < quotient_floor.
struct TruncatedModule {
    F2Matrix differential;
    F2Matrix u;
    std::vector<Rational> grading;
    Rational quotient_floor;
    int truncation = 0;
};

struct TowerAnalysis {
    /// dim of the U-torsion (reduced) part, by grading.
    std::map<Rational, std::size_t> reduced;
    /// dim ker(U_*) by grading: bottoms of towers plus bottoms of torsion.
    std::map<Rational, std::size_t> u_kernel;
    int truncation = 0;

    friend bool operator==(const TowerAnalysis& a, const TowerAnalysis& b) {
        return a.reduced == b.reduced && a.u_kernel == b.u_kernel;
    }
};

/// Reads the reduced part as dim H_k - rank(U^d : H_{k+2d} -> H_k) with d as
/// large as the exact range allows. Only gradings with d >= ceil(N/2) are
/// reported, so classes at the truncation top never leak in.
inline TowerAnalysis analyze_towers(const TruncatedModule& m) {
    TowerAnalysis out;
    out.truncation = m.truncation;
    const int min_depth = (m.truncation + 1) / 2;
    const std::set<Rational> degrees(m.grading.begin(), m.grading.end());

    std::vector<F2Matrix> u_powers{F2Matrix::identity(m.u.cols())};
    auto u_power = [&](std::size_t d) -> const F2Matrix& {
        while (u_powers.size() <= d) u_powers.push_back(m.u * u_powers.back());
        return u_powers[d];
    };

    for (const auto& k : degrees) {
        Rational room = m.quotient_floor - Rational(1) - k;
        if (room <= Rational(0)) continue;
        const std::int64_t depth = (room * Rational(1, 2)).ceil() - 1;
        if (depth < min_depth) continue;
        const std::size_t dim = graded_homology_dim(m.differential, m.grading, k);
        if (dim == 0) continue;
        const Rational from = k + Rational(2 * depth);
        const std::size_t tower = graded_induced_rank(u_power(static_cast<std::size_t>(depth)), m.differential,
                                                      m.grading, from, m.differential, m.grading, k);
        if (dim > tower) out.reduced[k] = dim - tower;
        const std::size_t u_rank =
            graded_induced_rank(m.u, m.differential, m.grading, k, m.differential, m.grading, k - Rational(2));
        if (dim > u_rank) out.u_kernel[k] = dim - u_rank;
    }
    return out;
}

/// Runs `at(N)` at increasing truncation heights until N and N + 1 agree.
/// Starts at `start`, doubles up to `cap`.
template <class Result, class Compute>
Result stabilize_truncation(int start, int cap, Compute&& at) {
    int n = std::max(start, 0);
    for (;;) {
        Result here = at(n);
        Result next = at(n + 1);
        if (here == next) return here;
        if (n >= cap) {
            throw TruncationUnstable("truncated homology did not stabilize by N = " + std::to_string(cap));
        }
        n = std::min(std::max(2 * n, n + 1), cap);
    }
}

struct TruncationBounds {
    int start = 0;
    int cap = 0;
};

/// Default start 2*(generators) + spread and cap 4*(generators) + spread,
/// spread = max Maslov - min Maslov rounded up.
inline TruncationBounds default_truncation(const KnotComplex& c) {
    Rational lo = c.generators.front().maslov;
    Rational hi = lo;
    for (const auto& g : c.generators) {
        lo = std::min(lo, g.maslov);
        hi = std::max(hi, g.maslov);
    }
    const auto spread = static_cast<int>((hi - lo).ceil());
    const auto gens = static_cast<int>(c.generators.size());
    return {2 * gens + spread, 4 * gens + spread};
}

inline TruncatedModule plus_module(const KnotComplex& c, PlusRegion which, int s, int n) {
    auto t = build_plus_truncated(c, which, s, n);
    TruncatedModule m;
    m.quotient_floor = lowest_grading_at_height(c, t.complex.region, n + 1);
    m.differential = std::move(t.complex.differential);
    m.u = std::move(t.u.matrix);
    m.grading = std::move(t.complex.maslov);
    m.truncation = n;
    return m;
}

/// Graded dimensions of HF_red(Y, t), the U-torsion part of H(B+).
///
/// With `fixed` set, the search starts at that height and never grows past it
/// beyond the N + 1 comparison.
struct ReducedHomology {
    std::map<Rational, std::size_t> dims;
    int truncation = 0;
};

inline ReducedHomology hf_red_graded(const KnotComplex& c, std::optional<int> fixed = std::nullopt) {
    auto bounds = default_truncation(c);
    if (fixed) bounds = {*fixed, *fixed};
    auto t = stabilize_truncation<TowerAnalysis>(
        bounds.start, bounds.cap, [&](int n) { return analyze_towers(plus_module(c, PlusRegion::B, 0, n)); });
    return {t.reduced, t.truncation};
}

}  // namespace hfcone
