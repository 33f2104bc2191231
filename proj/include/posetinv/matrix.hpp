#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace posetinv {

// Dense row-major matrix over an exact field. 0xn and nx0 shapes are legal.
template <class K>
class matrix {
public:
    matrix() = default;
    matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

    static matrix identity(std::size_t n) {
        matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    static matrix from_rows(const std::vector<std::vector<K>>& rows, std::size_t cols = 0) {
        matrix m(rows.size(), rows.empty() ? cols : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw ShapeMismatch("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static matrix from_columns(const std::vector<std::vector<K>>& cols, std::size_t rows) {
        matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw ShapeMismatch("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const K& x) { return posetinv::is_zero(x); });
    }

    std::vector<K> column(std::size_t j) const {
        std::vector<K> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    matrix transpose() const {
        matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    matrix select_columns(const std::vector<std::size_t>& idx) const {
        matrix m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    matrix select_rows(const std::vector<std::size_t>& idx) const {
        matrix m(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
        return m;
    }

    friend bool operator==(const matrix& a, const matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend matrix operator*(const matrix& a, const matrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeMismatch("product of " + a.shape() + " and " + b.shape());
        matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& x = a(i, k);
                if (posetinv::is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
            }
        return c;
    }

    friend matrix operator+(matrix a, const matrix& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend matrix operator-(matrix a, const matrix& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend matrix operator*(const K& s, matrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void check_same(const matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw ShapeMismatch("sum of " + shape() + " and " + b.shape());
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> data_;
};

template <class K>
matrix<K> hstack(const std::vector<matrix<K>>& blocks, std::size_t rows) {
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw ShapeMismatch("hstack row mismatch");
        cols += b.cols();
    }
    matrix<K> m(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
        off += b.cols();
    }
    return m;
}

template <class K>
matrix<K> vstack(const std::vector<matrix<K>>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw ShapeMismatch("vstack column mismatch");
        rows += b.rows();
    }
    matrix<K> m(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(off + i, j) = b(i, j);
        off += b.rows();
    }
    return m;
}

template <class K>
matrix<K> block_diagonal(const matrix<K>& a, const matrix<K>& b) {
    matrix<K> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

template <class K>
struct echelon {
    matrix<K> reduced;                // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan elimination; only the first `limit` columns are used as pivots.
template <class K>
echelon<K> row_reduce(matrix<K> a, std::size_t limit = static_cast<std::size_t>(-1)) {
    echelon<K> e;
    const std::size_t rows = a.rows(), cols = std::min(a.cols(), limit);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a(p, c))) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const K inv = K(1) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            const K factor = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(a);
    return e;
}

template <class K>
std::size_t rank(const matrix<K>& a) {
    if (a.empty()) return 0;
    // eliminate along the shorter side
    return a.rows() <= a.cols() ? row_reduce(a).rank() : row_reduce(a.transpose()).rank();
}

// Columns form a basis of {x : A x = 0}.
template <class K>
matrix<K> kernel_basis(const matrix<K>& a) {
    const std::size_t n = a.cols();
    auto e = row_reduce(a);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free.push_back(j);
    matrix<K> k(n, free.size());
    for (std::size_t t = 0; t < free.size(); ++t) {
        k(free[t], t) = K(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) k(e.pivots[i], t) = -e.reduced(i, free[t]);
    }
    return k;
}

// Basis of the column span, drawn from the columns of A.
template <class K>
matrix<K> image_basis(const matrix<K>& a) {
    return a.select_columns(row_reduce(a).pivots);
}

template <class K>
std::optional<std::vector<K>> solve(const matrix<K>& a, const std::vector<K>& b) {
    if (b.size() != a.rows()) throw ShapeMismatch("solve: rhs length " + std::to_string(b.size()) + " vs " + a.shape());
    matrix<K> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto e = row_reduce(std::move(aug), a.cols());
    for (std::size_t i = e.rank(); i < a.rows(); ++i)
        if (!is_zero(e.reduced(i, a.cols()))) return std::nullopt;
    std::vector<K> x(a.cols(), K(0));
    for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
    return x;
}

// Solves A X = B column by column; nullopt if any column is inconsistent.
template <class K>
std::optional<matrix<K>> solve_matrix(const matrix<K>& a, const matrix<K>& b) {
    if (b.rows() != a.rows()) throw ShapeMismatch("solve_matrix: " + a.shape() + " vs " + b.shape());
    auto aug = hstack<K>({a, b}, a.rows());
    auto e = row_reduce(std::move(aug), a.cols());
    for (std::size_t i = e.rank(); i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!is_zero(e.reduced(i, a.cols() + j))) return std::nullopt;
    matrix<K> x(a.cols(), b.cols());
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, a.cols() + j);
    return x;
}

// Q with Q A = 0, Q surjective, rank(Q) = rows(A) - rank(A).
template <class K>
matrix<K> cokernel_projection(const matrix<K>& a) {
    return kernel_basis(a.transpose()).transpose();
}

template <class K>
matrix<K> inverse(const matrix<K>& a) {
    if (a.rows() != a.cols()) throw ShapeMismatch("inverse of non-square " + a.shape());
    auto x = solve_matrix(a, matrix<K>::identity(a.rows()));
    if (!x) throw InternalError("inverse of singular matrix");
    return *x;
}

// Standard basis indices completing the column span of B to the whole space.
template <class K>
std::vector<std::size_t> complement_indices(const matrix<K>& b) {
    const std::size_t n = b.rows();
    std::vector<bool> taken(n, false);
    for (auto p : row_reduce(b.transpose()).pivots) taken[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (!taken[i]) out.push_back(i);
    return out;
}

template <class K>
matrix<K> subspace_intersection(const std::vector<matrix<K>>& bases) {
    if (bases.empty()) throw ShapeMismatch("subspace_intersection of no subspaces");
    const std::size_t n = bases.front().rows();
    matrix<K> acc = image_basis(bases.front());
    for (std::size_t t = 1; t < bases.size(); ++t) {
        if (bases[t].rows() != n) throw ShapeMismatch("subspace_intersection: ambient dimensions differ");
        const matrix<K>& v = bases[t];
        // [U | -V] (x; y) = 0  =>  U x lies in both spans
        matrix<K> joined(n, acc.cols() + v.cols());
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < acc.cols(); ++j) joined(i, j) = acc(i, j);
            for (std::size_t j = 0; j < v.cols(); ++j) joined(i, acc.cols() + j) = -v(i, j);
        }
        matrix<K> ker = kernel_basis(joined);
        matrix<K> coeff(acc.cols(), ker.cols());
        for (std::size_t i = 0; i < acc.cols(); ++i)
            for (std::size_t j = 0; j < ker.cols(); ++j) coeff(i, j) = ker(i, j);
        acc = image_basis(acc * coeff);
    }
    return acc;
}

// Rank of the subgroup of Z^n generated by the rows (equals the rational rank).
inline std::size_t integer_lattice_rank(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) return 0;
    matrix<rational> m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw ShapeMismatch("integer_lattice_rank: ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = field_traits<rational>::from_int(rows[i][j]);
    }
    return rank(m);
}

}  // namespace posetinv
