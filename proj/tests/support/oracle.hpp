#pragma once

// Brute-force and alternative-route oracles. Nothing here calls the library's
// elimination, region, or chain-map code; only the raw complex data is shared.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hfcone/knot_complex.hpp"
#include "hfcone/laurent.hpp"

namespace oracle {

using Dense = std::vector<std::vector<std::uint8_t>>;  // [row][col]

inline Dense to_dense(const hfcone::F2Matrix& m) {
    Dense d(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
    for (auto [r, c] : m.entries()) d[r][c] = 1;
    return d;
}

inline Dense dense_from_columns(std::size_t rows, const std::vector<std::vector<std::size_t>>& cols) {
    Dense d(rows, std::vector<std::uint8_t>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (auto r : cols[c]) d[r][c] ^= 1;
    }
    return d;
}

/// Image of a bit-vector input (bit k = coordinate k).
inline std::uint64_t apply_bits(const Dense& m, std::uint64_t x) {
    std::uint64_t y = 0;
    for (std::size_t r = 0; r < m.size(); ++r) {
        std::uint8_t bit = 0;
        for (std::size_t c = 0; c < m[r].size(); ++c) bit ^= static_cast<std::uint8_t>(m[r][c] & ((x >> c) & 1U));
        y |= static_cast<std::uint64_t>(bit) << r;
    }
    return y;
}

inline std::size_t log2_exact(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

/// Rank by counting distinct images of all 2^cols inputs.
inline std::size_t enum_rank(const Dense& m, std::size_t cols) {
    std::set<std::uint64_t> images;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); ++x) images.insert(apply_bits(m, x));
    return log2_exact(images.size());
}

/// dim ker(d_out) - dim im(d_in) by enumerating every vector.
inline std::size_t enum_homology(const Dense& d_in, std::size_t in_cols, const Dense& d_out, std::size_t mid) {
    std::size_t kernel = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << mid); ++x) {
        if (apply_bits(d_out, x) == 0) ++kernel;
    }
    return log2_exact(kernel) - enum_rank(d_in, in_cols);
}

/// Row-echelon rank on a dense copy.
inline std::size_t gauss_rank(Dense m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && !m[p][c]) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rank && m[r][c]) {
                for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

// GF(2^16) --------------------------------------------------------------------

constexpr std::uint32_t kModulus = 0x1002D;  // x^16 + x^5 + x^3 + x^2 + 1

inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0;
    while (b) {
        if (b & 1U) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & 0x10000U) a ^= kModulus;
    }
    return r;
}

inline std::uint32_t gf_inv(std::uint32_t a) {
    std::uint32_t r = 1;
    std::uint32_t base = a;
    std::uint32_t e = 0xFFFE;  // a^(2^16 - 2)
    while (e) {
        if (e & 1U) r = gf_mul(r, base);
        base = gf_mul(base, base);
        e >>= 1;
    }
    return r;
}

/// Polynomial remainder over F2 for the irreducibility check.
inline std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    auto deg = [](std::uint32_t x) { return 31 - __builtin_clz(x); };
    while (a && deg(a) >= deg(b)) a ^= b << (deg(a) - deg(b));
    return a;
}

inline bool modulus_irreducible() {
    for (std::uint32_t d = 2; d < (1U << 9); ++d) {
        if (poly_mod(kModulus, d) == 0) return false;
    }
    return true;
}

using GfMatrix = std::vector<std::vector<std::uint32_t>>;

inline std::size_t gf_rank(GfMatrix m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        const std::uint32_t inv = gf_inv(m[rank][c]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const std::uint32_t f = gf_mul(m[r][c], inv);
            for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= gf_mul(f, m[rank][k]);
        }
        ++rank;
    }
    return rank;
}

/// A matrix over F2[T, T^-1] whose entries are Laurent polynomials given as
/// exponent lists; evaluates at a point of GF(2^16).
struct LaurentDense {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::vector<int>>> exps;  // [row][col] -> exponents

    [[nodiscard]] GfMatrix at(std::uint32_t t) const {
        const std::uint32_t tinv = gf_inv(t);
        GfMatrix m(rows, std::vector<std::uint32_t>(cols, 0));
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                for (int e : exps[r][c]) {
                    std::uint32_t v = 1;
                    for (int k = 0; k < std::abs(e); ++k) v = gf_mul(v, e > 0 ? t : tinv);
                    m[r][c] ^= v;
                }
            }
        }
        return m;
    }
};

inline LaurentDense to_laurent_dense(const hfcone::LaurentMatrix& m) {
    LaurentDense d;
    d.rows = m.rows();
    d.cols = m.cols();
    d.exps.assign(d.rows, std::vector<std::vector<int>>(d.cols));
    for (const auto& [pos, p] : m.entries()) d.exps[pos.first][pos.second] = p.support();
    return d;
}

/// Generic rank over F2(T): the largest rank over a few random points of
/// GF(2^16). Each nonzero minor has far fewer roots than field elements.
inline std::size_t generic_rank(const LaurentDense& m, std::uint32_t seed = 7) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(2, 0xFFFF);
    std::size_t best = 0;
    for (int k = 0; k < 4; ++k) best = std::max(best, gf_rank(m.at(dist(rng))));
    return best;
}

// Direct cone --------------------------------------------------------------

/// The 0-surgery cone on A_s (+) B written straight from the generator data.
/// Entries carry the exponent of T on the h-part (twisted) so one builder
/// serves both routes: exponent 0 for d and v, 1 for h.
struct DirectCone {
    LaurentDense twisted;
    Dense untwisted;
    std::size_t size = 0;
};

inline DirectCone direct_cone(const hfcone::KnotComplex& c, int s) {
    const std::size_t n = c.generators.size();
    std::vector<int> ia(n);
    for (std::size_t g = 0; g < n; ++g) ia[g] = -std::max(0, c.generators[g].alexander - s);

    DirectCone out;
    out.size = 2 * n;
    out.twisted.rows = out.twisted.cols = 2 * n;
    out.twisted.exps.assign(2 * n, std::vector<std::vector<int>>(2 * n));
    auto put = [&](std::size_t row, std::size_t col, int e) { out.twisted.exps[row][col].push_back(e); };

    for (const auto& t : c.differential) {
        const auto src = c.index_of(t.source);
        const auto tgt = c.index_of(t.target);
        // A part: (src, ia[src]) -> (tgt, ia[src] - n) when that is tgt's A-element.
        if (ia[src] - t.u_power == ia[tgt]) put(tgt, src, 0);
        // B part: only U^0 terms stay in the i = 0 column.
        if (t.u_power == 0) put(n + tgt, n + src, 0);
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (ia[g] == 0) put(n + g, g, 0);
        if (ia[g] + c.generators[g].alexander == s) {
            for (const auto& f : *c.flip) {
                if (f.source != c.generators[g].name) continue;
                if (ia[g] - s - f.u_power == 0) put(n + c.index_of(f.target), g, 1);
            }
        }
    }
    out.untwisted.assign(2 * n, std::vector<std::uint8_t>(2 * n, 0));
    for (std::size_t r = 0; r < 2 * n; ++r) {
        for (std::size_t k = 0; k < 2 * n; ++k) out.untwisted[r][k] = out.twisted.exps[r][k].size() % 2;
    }
    return out;
}

inline std::size_t direct_cone_dim(const hfcone::KnotComplex& c, int s) {
    auto cone = direct_cone(c, s);
    return cone.size - 2 * gauss_rank(cone.untwisted);
}

inline std::size_t direct_novikov_dim(const hfcone::KnotComplex& c, int s) {
    auto cone = direct_cone(c, s);
    return cone.size - 2 * generic_rank(cone.twisted);
}

/// Alexander polynomial mod 2 by counting generators per Alexander grading.
inline std::set<int> alexander_support_by_count(const hfcone::KnotComplex& c) {
    std::map<int, int> count;
    for (const auto& g : c.generators) ++count[g.alexander];
    std::set<int> sup;
    for (auto [a, k] : count) {
        if (k % 2) sup.insert(a);
    }
    return sup;
}

}  // namespace oracle

namespace oracle {

/// Homology of the subquotient on every plane element (g, i) with
/// i in [-span, span] accepted by `keep(i, j)`, by dense elimination.
template <class Keep>
std::size_t region_homology(const hfcone::KnotComplex& c, int span, Keep keep) {
    std::vector<std::pair<std::size_t, int>> elems;
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
        for (int i = -span; i <= span; ++i) {
            if (keep(i, i + c.generators[g].alexander)) elems.emplace_back(g, i);
        }
    }
    Dense d(elems.size(), std::vector<std::uint8_t>(elems.size(), 0));
    for (std::size_t col = 0; col < elems.size(); ++col) {
        const auto [g, i] = elems[col];
        for (const auto& t : c.differential) {
            if (t.source != c.generators[g].name) continue;
            const std::pair<std::size_t, int> tgt{c.index_of(t.target), i - t.u_power};
            for (std::size_t row = 0; row < elems.size(); ++row) {
                if (elems[row] == tgt) d[row][col] ^= 1;
            }
        }
    }
    return elems.size() - 2 * gauss_rank(d);
}

}  // namespace oracle
