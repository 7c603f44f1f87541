#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "hfcone/error.hpp"

namespace hfcone {

/// Sparse F2 vector: sorted list of indices carrying coefficient 1.
using F2Vector = std::vector<std::size_t>;

/// a <- a + b over F2. Both inputs sorted; result sorted.
inline void xor_into(F2Vector& a, const F2Vector& b) {
    F2Vector out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    a = std::move(out);
}

/// Matrix over F2 stored column-wise as sorted row-index lists.
///
/// Column j is the image of basis vector j, which is the convention used for
/// every boundary and chain-map matrix in the library.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    /// Builds from explicit (row, col) positions. Repeated or out-of-range
    /// positions are rejected.
    static F2Matrix from_entries(std::size_t rows, std::size_t cols,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& entries) {
        F2Matrix m(rows, cols);
        for (auto [r, c] : entries) {
            if (r >= rows || c >= cols) throw DimensionMismatch("entry out of bounds");
            auto& col = m.columns_[c];
            auto it = std::lower_bound(col.begin(), col.end(), r);
            if (it != col.end() && *it == r) throw Error("duplicate entry in F2 matrix");
            col.insert(it, r);
        }
        return m;
    }

    static F2Matrix identity(std::size_t n) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back(i);
        return m;
    }

    /// Builds from columns given as index lists (need not be sorted; repeated
    /// indices cancel in pairs).
    static F2Matrix from_columns(std::size_t rows, std::vector<F2Vector> cols) {
        F2Matrix m(rows, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (auto r : cols[c]) m.toggle(r, c);
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return columns_.size(); }

    [[nodiscard]] const F2Vector& column(std::size_t c) const { return columns_.at(c); }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const {
        const auto& col = columns_.at(c);
        return std::binary_search(col.begin(), col.end(), r);
    }

    /// Adds 1 at (r, c).
    void toggle(std::size_t r, std::size_t c) {
        if (r >= rows_ || c >= cols()) throw DimensionMismatch("toggle out of bounds");
        auto& col = columns_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r);
        if (it != col.end() && *it == r) {
            col.erase(it);
        } else {
            col.insert(it, r);
        }
    }

    [[nodiscard]] std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
    }

    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> entries() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t c = 0; c < cols(); ++c) {
            for (auto r : columns_[c]) out.emplace_back(r, c);
        }
        return out;
    }

    [[nodiscard]] F2Vector apply(const F2Vector& v) const {
        F2Vector out;
        for (auto c : v) xor_into(out, column(c));
        return out;
    }

    [[nodiscard]] F2Matrix select_columns(const std::vector<std::size_t>& which) const {
        F2Matrix m(rows_, which.size());
        for (std::size_t k = 0; k < which.size(); ++k) m.columns_[k] = column(which[k]);
        return m;
    }

    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
        if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
        F2Matrix m(a.rows(), b.cols());
        for (std::size_t c = 0; c < b.cols(); ++c) m.columns_[c] = a.apply(b.columns_[c]);
        return m;
    }

    friend F2Matrix operator+(const F2Matrix& a, const F2Matrix& b) {
        if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape mismatch");
        F2Matrix m = a;
        for (std::size_t c = 0; c < b.cols(); ++c) xor_into(m.columns_[c], b.columns_[c]);
        return m;
    }

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

    [[nodiscard]] std::string str() const {
        std::string s;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols(); ++c) s += get(r, c) ? '1' : '0';
            s += '\n';
        }
        return s;
    }

private:
    std::size_t rows_ = 0;
    std::vector<F2Vector> columns_;
};

/// Left-to-right column reduction (the standard persistence-style pass):
/// each column is reduced against earlier columns with the same lowest row.
struct ColumnReduction {
    std::vector<F2Vector> reduced;
    /// ops[j] records which original columns sum to reduced[j].
    std::vector<F2Vector> ops;
    std::size_t rank = 0;
};

inline ColumnReduction reduce_columns(const F2Matrix& m) {
    ColumnReduction out;
    out.reduced.resize(m.cols());
    out.ops.resize(m.cols());
    std::vector<std::ptrdiff_t> pivot_owner(m.rows(), -1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        F2Vector col = m.column(j);
        F2Vector op{j};
        while (!col.empty()) {
            auto owner = pivot_owner[col.back()];
            if (owner < 0) break;
            xor_into(col, out.reduced[static_cast<std::size_t>(owner)]);
            xor_into(op, out.ops[static_cast<std::size_t>(owner)]);
        }
        if (!col.empty()) {
            pivot_owner[col.back()] = static_cast<std::ptrdiff_t>(j);
            ++out.rank;
        }
        out.reduced[j] = std::move(col);
        out.ops[j] = std::move(op);
    }
    return out;
}

inline std::size_t rank_f2(const F2Matrix& m) { return reduce_columns(m).rank; }

/// Basis of the null space, as sparse vectors over the column index set.
inline std::vector<F2Vector> kernel_basis_f2(const F2Matrix& m) {
    auto red = reduce_columns(m);
    std::vector<F2Vector> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (red.reduced[j].empty()) basis.push_back(std::move(red.ops[j]));
    }
    return basis;
}

/// dim ker(d_out) - rank(d_in) for C_{k+1} --d_in--> C_k --d_out--> C_{k-1}.
inline std::size_t homology_dim_f2(const F2Matrix& d_in, const F2Matrix& d_out) {
    if (d_in.rows() != d_out.cols()) throw DimensionMismatch("d_in target must equal d_out source");
    if (!(d_out * d_in).is_zero()) throw CompositionNonzero("d_out * d_in is nonzero");
    return d_out.cols() - rank_f2(d_out) - rank_f2(d_in);
}

/// Total homology of a single square differential with d*d = 0.
inline std::size_t homology_dim_f2(const F2Matrix& d) { return homology_dim_f2(d, d); }

/// Rank of the map induced on homology by a chain map f : (A, d_src) -> (B, d_tgt).
/// Lifts a cycle basis of A, pushes it forward, and counts what survives
/// modulo boundaries of B.
inline std::size_t induced_rank_f2(const F2Matrix& f, const F2Matrix& d_src, const F2Matrix& d_tgt) {
    if (f.cols() != d_src.cols() || f.rows() != d_tgt.rows()) {
        throw DimensionMismatch("chain map shape does not match complexes");
    }
    std::vector<F2Vector> cols;
    for (std::size_t c = 0; c < d_tgt.cols(); ++c) cols.push_back(d_tgt.column(c));
    std::size_t boundary_rank = rank_f2(d_tgt);
    for (const auto& z : kernel_basis_f2(d_src)) cols.push_back(f.apply(z));
    return rank_f2(F2Matrix::from_columns(f.rows(), std::move(cols))) - boundary_rank;
}

}  // namespace hfcone
