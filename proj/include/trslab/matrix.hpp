#pragma once

#include <span>
#include <vector>

#include "trslab/field.hpp"

namespace trslab {

/// Dense row-major matrix of field elements.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data);

    /// Matrix whose j-th column is columns[j]; all columns must share a length.
    static Matrix from_columns(const std::vector<std::vector<Elem>>& columns);
    static Matrix from_rows(const std::vector<std::vector<Elem>>& rows);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<Elem> column(std::size_t j) const;
    /// The same rows restricted to the listed columns, in the given order.
    Matrix select_columns(std::span<const std::size_t> cols) const;
    /// A copy with one extra row appended.
    Matrix with_row(std::span<const Elem> row) const;
    Matrix transpose() const;

    bool operator==(const Matrix&) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

/// Determinant by Gaussian elimination, taking the first nonzero entry of each
/// column as pivot. Throws std::invalid_argument for non-square input.
Elem det(const Field& f, Matrix m);

/// Determinant of the matrix with the given columns; every column has length
/// columns.size(). Small dense fast path for the hot subset scans.
Elem det_of_columns(const Field& f, std::span<const std::vector<Elem>> columns);

std::size_t rank(const Field& f, Matrix m);

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> row_reduce(const Field& f, Matrix& m);

/// Rows form a basis of {x : m x = 0}.
Matrix nullspace(const Field& f, const Matrix& m);

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);

/// m * v for a column vector v.
std::vector<Elem> apply(const Field& f, const Matrix& m, std::span<const Elem> v);

bool is_zero(const Matrix& m);

}  // namespace trslab
