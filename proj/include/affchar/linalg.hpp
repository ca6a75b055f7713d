#pragma once

// Exact linear algebra over a field: small dense matrices (Cartan data) and a
// sparse incremental row-echelon form used for kernels of large, very sparse
// systems (invariance equations, intertwiners).

#include <affchar/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace affchar {

template <class F>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n)
    {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    DenseMatrix transpose() const
    {
        DenseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b)
    {
        DenseMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == F(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

    /// Gauss-Jordan inverse; throws std::domain_error when singular.
    DenseMatrix inverse() const
    {
        if (rows_ != cols_) throw usage_error("affchar: inverse of a non-square matrix");
        std::size_t n = rows_;
        DenseMatrix a = *this;
        DenseMatrix inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && a(piv, col) == F(0)) ++piv;
            if (piv == n) throw std::domain_error("affchar: singular matrix");
            if (piv != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            F s = F(1) / a(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(col, j) *= s;
                inv(col, j) *= s;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || a(r, col) == F(0)) continue;
                F f = a(r, col);
                for (std::size_t j = 0; j < n; ++j) {
                    a(r, j) -= f * a(col, j);
                    inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// Sparse vector: (column, value) pairs sorted by column, no explicit zeros.
template <class F>
using SparseRow = std::vector<std::pair<std::size_t, F>>;

/// Builds a SparseRow from unsorted (column, value) contributions, summing
/// duplicates and dropping zeros.
template <class F>
SparseRow<F> make_sparse_row(std::vector<std::pair<std::size_t, F>> entries)
{
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow<F> out;
    for (auto& [c, v] : entries) {
        if (!out.empty() && out.back().first == c)
            out.back().second += v;
        else
            out.emplace_back(c, v);
        if (out.back().second == F(0)) out.pop_back();
    }
    return out;
}

/// a + f * b for sparse rows.
template <class F>
SparseRow<F> sparse_axpy(const SparseRow<F>& a, const SparseRow<F>& b, const F& f)
{
    SparseRow<F> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            F v = f * b[j].second;
            if (v != F(0)) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            F v = a[i].second + f * b[j].second;
            if (v != F(0)) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

template <class F>
SparseRow<F> sparse_scaled(const SparseRow<F>& a, const F& f)
{
    SparseRow<F> out;
    if (f == F(0)) return out;
    out.reserve(a.size());
    for (const auto& [c, v] : a) out.emplace_back(c, f * v);
    return out;
}

/// Incremental row-echelon form. Rows are reduced against existing pivots on
/// insertion; each stored pivot row has leading coefficient one and no entries
/// left of its pivot column.
template <class F>
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t ncols) : ncols_(ncols) {}

    std::size_t cols() const { return ncols_; }
    std::size_t rank() const { return pivots_.size(); }

    /// Returns true when the row increased the rank.
    bool add_row(SparseRow<F> row)
    {
        row = reduce(std::move(row));
        if (row.empty()) return false;
        F lead = row.front().second;
        if (lead != F(1)) {
            F s = F(1) / lead;
            for (auto& e : row) e.second *= s;
        }
        std::size_t col = row.front().first;
        pivots_.emplace(col, std::move(row));
        return true;
    }

    /// Reduces a row against the stored pivots (result is zero iff the row lies
    /// in the span).
    SparseRow<F> reduce(SparseRow<F> row) const
    {
        std::size_t start = 0;
        while (start < row.size()) {
            auto it = pivots_.find(row[start].first);
            if (it == pivots_.end()) {
                ++start;
                continue;
            }
            F f = row[start].second;
            row = sparse_axpy(row, it->second, -f);
        }
        return row;
    }

    /// Basis of the right kernel {x : every added row . x = 0}.
    std::vector<std::vector<F>> kernel() const
    {
        std::vector<std::vector<F>> basis;
        for (std::size_t free = 0; free < ncols_; ++free) {
            if (pivots_.count(free)) continue;
            std::vector<F> x(ncols_, F(0));
            x[free] = F(1);
            for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
                F acc = F(0);
                for (std::size_t k = 1; k < it->second.size(); ++k) {
                    const auto& [c, v] = it->second[k];
                    if (x[c] != F(0)) acc += v * x[c];
                }
                x[it->first] = -acc;
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }

    std::size_t nullity() const { return ncols_ - rank(); }

private:
    std::size_t ncols_;
    std::map<std::size_t, SparseRow<F>> pivots_;
};

/// Rank of a family of dense vectors.
template <class F>
std::size_t rank_of(const std::vector<std::vector<F>>& vectors)
{
    if (vectors.empty()) return 0;
    SparseEchelon<F> ech(vectors.front().size());
    for (const auto& v : vectors) {
        SparseRow<F> row;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (v[c] != F(0)) row.emplace_back(c, v[c]);
        ech.add_row(std::move(row));
    }
    return ech.rank();
}

} // namespace affchar
