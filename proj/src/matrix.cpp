#include "trslab/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace trslab {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix: entry count mismatch");
}

Matrix Matrix::from_columns(const std::vector<std::vector<Elem>>& columns) {
    if (columns.empty()) return Matrix{};
    const std::size_t rows = columns.front().size();
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw std::invalid_argument("matrix: ragged columns");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Elem>>& rows) {
    if (rows.empty()) return Matrix{};
    const std::size_t cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("matrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem{1};
    return m;
}

std::vector<Elem> Matrix::column(std::size_t j) const {
    std::vector<Elem> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
    Matrix m(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(i, cols[j]);
    }
    return m;
}

Matrix Matrix::with_row(std::span<const Elem> row) const {
    if (rows_ != 0 && row.size() != cols_) throw std::invalid_argument("matrix: row length mismatch");
    std::vector<Elem> data = data_;
    data.insert(data.end(), row.begin(), row.end());
    return Matrix(rows_ + 1, row.size(), std::move(data));
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

Elem det(const Field& f, Matrix m) {
    if (!m.square()) throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = m.rows();
    Elem result = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c).is_zero()) ++pivot;
        if (pivot == n) return f.zero();
        if (pivot != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m(c, j), m(pivot, j));
            result = f.neg(result);
        }
        const Elem pv = m(c, c);
        result = f.mul(result, pv);
        const Elem pinv = f.inv(pv);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const Elem factor = f.mul(m(i, c), pinv);
            for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
        }
    }
    return result;
}

Elem det_of_columns(const Field& f, std::span<const std::vector<Elem>> columns) {
    constexpr std::size_t kMax = 16;
    const std::size_t n = columns.size();
    if (n > kMax) return det(f, Matrix::from_columns({columns.begin(), columns.end()}));
    Elem a[kMax][kMax];
    for (std::size_t j = 0; j < n; ++j) {
        if (columns[j].size() != n) throw std::invalid_argument("det: matrix is not square");
        for (std::size_t i = 0; i < n; ++i) a[i][j] = columns[j][i];
    }
    Elem result = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c].is_zero()) ++pivot;
        if (pivot == n) return f.zero();
        if (pivot != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(a[c][j], a[pivot][j]);
            result = f.neg(result);
        }
        result = f.mul(result, a[c][c]);
        const Elem pinv = f.inv(a[c][c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            const Elem factor = f.neg(f.mul(a[i][c], pinv));
            for (std::size_t j = c + 1; j < n; ++j) a[i][j] = f.add(a[i][j], f.mul(factor, a[c][j]));
        }
    }
    return result;
}

std::vector<std::size_t> row_reduce(const Field& f, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
        }
        const Elem pinv = f.inv(m(row, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), pinv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, c).is_zero()) continue;
            const Elem factor = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return row_reduce(f, m).size(); }

Matrix nullspace(const Field& f, const Matrix& m) {
    Matrix r = m;
    const auto pivots = row_reduce(f, r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Elem>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(m.cols(), Elem{0});
        v[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Matrix(0, m.cols());
    return Matrix::from_rows(basis);
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Elem acc{0};
            for (std::size_t t = 0; t < a.cols(); ++t) acc = f.add(acc, f.mul(a(i, t), b(t, j)));
            out(i, j) = acc;
        }
    }
    return out;
}

std::vector<Elem> apply(const Field& f, const Matrix& m, std::span<const Elem> v) {
    if (v.size() != m.cols()) throw std::invalid_argument("apply: length mismatch");
    std::vector<Elem> out(m.rows(), Elem{0});
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Elem acc{0};
        for (std::size_t j = 0; j < m.cols(); ++j) acc = f.add(acc, f.mul(m(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

bool is_zero(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (auto x : m.row(i)) {
            if (!x.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace trslab
