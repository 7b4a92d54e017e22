#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "frontal/rational.hpp"

namespace frontal {

// A sparse row over rational entries, kept sorted by strictly increasing
// column index with no zero entries.
using SparseRow = std::vector<std::pair<int, Rational>>;

inline SparseRow sparse_axpy(const SparseRow& r, const Rational& c, const SparseRow& p) {
    // r - c*p, merging sorted entry lists.
    SparseRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j >= p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.push_back(r[i++]);
        } else if (i >= r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -c * p[j].second);
            ++j;
        } else {
            Rational v = r[i].second - c * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Incremental exact row-echelon form. Pivots sit on the minimal column of
// each stored row, so with columns listed in the canonical monomial order the
// pivot set is exactly the set of leading monomials of the row space.
class RowEchelon {
public:
    // Returns the pivot column claimed by this row, or -1 if it reduced to
    // zero against the rows already present.
    int add_row(SparseRow row) {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) break;
            row = sparse_axpy(row, row.front().second, it->second);
        }
        if (row.empty()) return -1;
        const int col = row.front().first;
        const Rational lead = row.front().second;
        for (auto& [c, v] : row) v /= lead;
        pivots_.emplace(col, std::move(row));
        return col;
    }

    bool has_pivot(int col) const { return pivots_.count(col) != 0; }
    std::size_t rank() const { return pivots_.size(); }
    const std::map<int, SparseRow>& pivot_rows() const { return pivots_; }

private:
    std::map<int, SparseRow> pivots_;
};

// Row echelon with a right-hand side, for solving sparse rational systems.
// add_row returns false exactly when the new equation is inconsistent with
// the ones already inserted.
class LinearSolver {
public:
    bool add_row(SparseRow row, Rational rhs) {
        for (const auto& [c, v] : row) touched_.insert(c);
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) break;
            const Rational factor = row.front().second;
            rhs -= factor * it->second.second;
            row = sparse_axpy(row, factor, it->second.first);
        }
        if (row.empty()) return rhs == 0;
        const int col = row.front().first;
        const Rational lead = row.front().second;
        for (auto& [c, v] : row) v /= lead;
        rhs /= lead;
        pivots_.emplace(col, std::make_pair(std::move(row), std::move(rhs)));
        return true;
    }

    // Back-substitute with every free (non-pivot) unknown set to zero.
    std::vector<Rational> solve(int num_columns) const {
        std::vector<Rational> x(static_cast<std::size_t>(num_columns), Rational(0));
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const auto& [row, rhs] = it->second;
            Rational v = rhs;
            for (std::size_t k = 1; k < row.size(); ++k) {
                v -= row[k].second * x[static_cast<std::size_t>(row[k].first)];
            }
            x[static_cast<std::size_t>(it->first)] = std::move(v);
        }
        return x;
    }

    bool is_pivot(int col) const { return pivots_.count(col) != 0; }

    // A column is touched when it appears with a nonzero coefficient in some
    // inserted equation. Touched non-pivot columns mark genuinely
    // underdetermined unknowns; untouched ones were never constrained at all.
    bool all_touched_are_pivots() const {
        for (int c : touched_) {
            if (!is_pivot(c)) return false;
        }
        return true;
    }

private:
    std::map<int, std::pair<SparseRow, Rational>> pivots_;
    std::set<int> touched_;
};

using DenseMatrix = std::vector<std::vector<Rational>>;

inline std::size_t dense_rank(const DenseMatrix& m) {
    RowEchelon ech;
    for (const auto& row : m) {
        SparseRow r;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] != 0) r.emplace_back(static_cast<int>(j), row[j]);
        }
        ech.add_row(std::move(r));
    }
    return ech.rank();
}

// Reduced row-echelon form with zero rows dropped; used for triangularizing
// sets of linear forms.
inline DenseMatrix dense_rref(DenseMatrix m) {
    if (m.empty()) return m;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational lead = m[row][col];
        for (auto& v : m[row]) v /= lead;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    m.resize(row);
    return m;
}

inline std::optional<DenseMatrix> dense_inverse(const DenseMatrix& m) {
    const std::size_t n = m.size();
    DenseMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("inverse of non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    aug = dense_rref(std::move(aug));
    if (aug.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (aug[i][j] != Rational(i == j ? 1 : 0)) return std::nullopt;
        }
    }
    DenseMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    }
    return inv;
}

} // namespace frontal
