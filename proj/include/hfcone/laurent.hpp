#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hfcone/error.hpp"
#include "hfcone/f2_matrix.hpp"

namespace hfcone {

/// Element of F2[T, T^-1], stored as the sorted set of exponents whose
/// coefficient is 1. The zero polynomial has empty support.
class LaurentPoly {
public:
    LaurentPoly() = default;

    /// Exponents may repeat; repeated exponents cancel in pairs.
    static LaurentPoly from_exponents(std::vector<int> exps) {
        std::sort(exps.begin(), exps.end());
        LaurentPoly p;
        for (std::size_t i = 0; i < exps.size();) {
            std::size_t j = i;
            while (j < exps.size() && exps[j] == exps[i]) ++j;
            if ((j - i) % 2 == 1) p.exps_.push_back(exps[i]);
            i = j;
        }
        return p;
    }
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0); }
    static LaurentPoly monomial(int e) {
        LaurentPoly p;
        p.exps_.push_back(e);
        return p;
    }

    [[nodiscard]] const std::vector<int>& support() const noexcept { return exps_; }
    [[nodiscard]] bool is_zero() const noexcept { return exps_.empty(); }
    /// Units of F2[T, T^-1] are exactly the monomials T^k.
    [[nodiscard]] bool is_unit() const noexcept { return exps_.size() == 1; }
    [[nodiscard]] int low() const { return exps_.front(); }
    [[nodiscard]] int high() const { return exps_.back(); }
    /// Euclidean size: high - low. Units have span 0.
    [[nodiscard]] int span() const { return is_zero() ? -1 : high() - low(); }

    [[nodiscard]] LaurentPoly shifted(int k) const {
        LaurentPoly p = *this;
        for (auto& e : p.exps_) e += k;
        return p;
    }

    /// Unit-normalized associate: a polynomial in T with constant term 1.
    [[nodiscard]] LaurentPoly normalized() const { return is_zero() ? *this : shifted(-low()); }

    /// Value at T = 1, i.e. the coefficient sum mod 2.
    [[nodiscard]] bool at_one() const noexcept { return exps_.size() % 2 == 1; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly p;
        std::set_symmetric_difference(a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end(),
                                      std::back_inserter(p.exps_));
        return p;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        std::vector<int> prod;
        prod.reserve(a.exps_.size() * b.exps_.size());
        for (int x : a.exps_) {
            for (int y : b.exps_) prod.push_back(x + y);
        }
        return from_exponents(std::move(prod));
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Reporting order: by span, then lexicographically by support.
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.span() != b.span()) return a.span() < b.span();
        return a.exps_ < b.exps_;
    }

    /// Highest power first, e.g. "T + 1 + T^-1".
    [[nodiscard]] std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (auto it = exps_.rbegin(); it != exps_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            if (*it == 0) {
                s += "1";
            } else if (*it == 1) {
                s += "T";
            } else {
                s += "T^" + std::to_string(*it);
            }
        }
        return s;
    }

private:
    std::vector<int> exps_;
};

struct LaurentDivision {
    LaurentPoly quotient;
    LaurentPoly remainder;
};

/// Euclidean division: a = q*b + r with r = 0 or span(r) < span(b).
inline LaurentDivision divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error("division by zero Laurent polynomial");
    if (a.is_zero()) return {};
    const int la = a.low();
    const int lb = b.low();
    LaurentPoly rem = a.shifted(-la);
    const LaurentPoly div = b.shifted(-lb);
    const int dh = div.high();
    std::vector<int> q;
    while (!rem.is_zero() && rem.high() >= dh) {
        int k = rem.high() - dh;
        q.push_back(k);
        rem += div.shifted(k);
    }
    return {LaurentPoly::from_exponents(std::move(q)).shifted(la - lb), rem.shifted(la)};
}

/// Sparse matrix over F2[T, T^-1]; only nonzero entries are stored.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static LaurentMatrix from_f2(const F2Matrix& m) {
        LaurentMatrix out(m.rows(), m.cols());
        for (auto [r, c] : m.entries()) out.set(r, c, LaurentPoly::one());
        return out;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] LaurentPoly get(std::size_t r, std::size_t c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? LaurentPoly{} : it->second;
    }

    void set(std::size_t r, std::size_t c, LaurentPoly p) {
        if (r >= rows_ || c >= cols_) throw DimensionMismatch("Laurent entry out of bounds");
        if (p.is_zero()) {
            entries_.erase({r, c});
        } else {
            entries_[{r, c}] = std::move(p);
        }
    }

    void add(std::size_t r, std::size_t c, const LaurentPoly& p) { set(r, c, get(r, c) + p); }

    [[nodiscard]] const std::map<std::pair<std::size_t, std::size_t>, LaurentPoly>& entries() const noexcept {
        return entries_;
    }

    /// Specialization T = 1.
    [[nodiscard]] F2Matrix at_one() const {
        F2Matrix m(rows_, cols_);
        for (const auto& [pos, p] : entries_) {
            if (p.at_one()) m.toggle(pos.first, pos.second);
        }
        return m;
    }

    [[nodiscard]] std::vector<std::vector<LaurentPoly>> dense() const {
        std::vector<std::vector<LaurentPoly>> d(rows_, std::vector<LaurentPoly>(cols_));
        for (const auto& [pos, p] : entries_) d[pos.first][pos.second] = p;
        return d;
    }

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
        if (a.cols() != b.rows()) throw DimensionMismatch("Laurent product shape mismatch");
        LaurentMatrix m(a.rows(), b.cols());
        for (const auto& [pa, x] : a.entries_) {
            for (const auto& [pb, y] : b.entries_) {
                if (pa.second == pb.first) m.add(pa.first, pb.second, x * y);
            }
        }
        return m;
    }

    friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

    [[nodiscard]] bool is_zero() const noexcept { return entries_.empty(); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, LaurentPoly> entries_;
};

/// Rank over the field of rational functions F2(T).
///
/// Fraction-free Bareiss elimination: every intermediate entry is a minor of
/// the input, so each division by the previous pivot is exact.
inline std::size_t rank_fraction_field(const LaurentMatrix& m) {
    auto a = m.dense();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    LaurentPoly prev = LaurentPoly::one();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                LaurentPoly num = a[r][c] * a[i][j] + a[i][c] * a[r][j];
                auto [q, rem] = divmod(num, prev);
                if (!rem.is_zero()) throw Error("inexact Bareiss division");
                a[i][j] = std::move(q);
            }
            a[i][c] = LaurentPoly{};
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

/// Nonzero invariant factors over the PID F2[T, T^-1], each normalized to a
/// polynomial with constant term 1 and sorted by (span, support). Units show
/// up as 1.
inline std::vector<LaurentPoly> smith_invariants_laurent(const LaurentMatrix& m) {
    auto a = m.dense();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<LaurentPoly> factors;

    auto add_row = [&](std::size_t dst, std::size_t src, const LaurentPoly& q, std::size_t from) {
        for (std::size_t j = from; j < cols; ++j) {
            if (!a[src][j].is_zero()) a[dst][j] += q * a[src][j];
        }
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const LaurentPoly& q, std::size_t from) {
        for (std::size_t i = from; i < rows; ++i) {
            if (!a[i][src].is_zero()) a[i][dst] += q * a[i][src];
        }
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (auto& row : a) std::swap(row[x], row[y]);
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest-span entry of the trailing block becomes the pivot.
        std::size_t pi = rows;
        std::size_t pj = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j].is_zero()) continue;
                if (pi == rows || a[i][j].span() < a[pi][pj].span()) {
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi == rows) break;
        std::swap(a[pi], a[t]);
        swap_cols(pj, t);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t].is_zero()) continue;
                auto [q, rem] = divmod(a[i][t], a[t][t]);
                add_row(i, t, q, t);
                dirty = dirty || !rem.is_zero();
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j].is_zero()) continue;
                auto [q, rem] = divmod(a[t][j], a[t][t]);
                add_col(j, t, q, t);
                dirty = dirty || !rem.is_zero();
            }
            if (dirty) {
                // A remainder of smaller span now sits in row t or column t.
                std::size_t best_i = t;
                std::size_t best_j = t;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (!a[i][t].is_zero() && a[i][t].span() < a[best_i][best_j].span()) {
                        best_i = i;
                        best_j = t;
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!a[t][j].is_zero() && a[t][j].span() < a[best_i][best_j].span()) {
                        best_i = t;
                        best_j = j;
                    }
                }
                std::swap(a[best_i], a[t]);
                swap_cols(best_j, t);
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a[i][j].is_zero()) continue;
                    if (!divmod(a[i][j], a[t][t]).remainder.is_zero()) {
                        add_row(t, i, LaurentPoly::one(), t);
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) break;
        }
        factors.push_back(a[t][t].normalized());
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace hfcone
