#pragma once

#include <cstddef>
#include <vector>

#include "hfcone/knot_complex.hpp"
#include "hfcone/laurent.hpp"
#include "hfcone/surgery_cone.hpp"

namespace hfcone {

/// Cone differential of v_s + T h_s on A_s (+) B over F2[T, T^-1]:
/// [[d_A, 0], [v + T h, d_B]].
inline LaurentMatrix twisted_cone_matrix(const KnotComplex& c, int s) {
    const auto v = build_v_hat(c, s);
    const auto h = build_h_hat(c, s);
    const std::size_t na = v.source->size();
    const std::size_t nb = v.target->size();
    LaurentMatrix m(na + nb, na + nb);
    for (auto [r, k] : v.source->differential.entries()) m.add(r, k, LaurentPoly::one());
    for (auto [r, k] : v.target->differential.entries()) m.add(na + r, na + k, LaurentPoly::one());
    for (auto [r, k] : v.matrix.entries()) m.add(na + r, k, LaurentPoly::one());
    for (auto [r, k] : h.matrix.entries()) m.add(na + r, k, LaurentPoly::monomial(1));
    return m;
}

/// Dimension over the Novikov field of H(Cone(v_s + T h_s)).
///
/// The Novikov field is flat over F2[T, T^-1] and contains its fraction field,
/// so this is n - 2 * rank over F2(T) for the n x n cone differential.
inline std::size_t novikov_dim(const KnotComplex& c, int s) {
    const auto m = twisted_cone_matrix(c, s);
    return m.cols() - 2 * rank_fraction_field(m);
}

struct TwistedConeResult {
    int s = 0;
    std::size_t novikov_dim = 0;
    std::size_t laurent_free_rank = 0;
    /// Non-unit invariant factors, unit-normalized and sorted.
    std::vector<LaurentPoly> torsion_factors;
};

/// Full homology of the twisted cone over the PID F2[T, T^-1].
///
/// ker D is saturated, so H = ker D / im D is free of rank n - 2r plus one
/// cyclic summand per non-unit invariant factor of D.
inline TwistedConeResult twisted_homology_laurent(const KnotComplex& c, int s) {
    const auto m = twisted_cone_matrix(c, s);
    const auto factors = smith_invariants_laurent(m);
    TwistedConeResult r;
    r.s = s;
    r.laurent_free_rank = m.cols() - 2 * factors.size();
    for (const auto& f : factors) {
        if (!f.is_unit()) r.torsion_factors.push_back(f);
    }
    r.novikov_dim = m.cols() - 2 * rank_fraction_field(m);
    return r;
}

}  // namespace hfcone
