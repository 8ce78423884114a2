/*
   Copyright 2026 The krs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KRS_MATRIX_HPP
#define KRS_MATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "krs/polynomial.hpp"
#include "krs/prime_field.hpp"

namespace krs {

using Vector = std::vector<Residue>;

/// Dense row-major matrix over F_p.
class Matrix {
public:
    Matrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    /// Entries are reduced mod p. Throws Error(DimensionMismatch) on ragged input.
    Matrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
    Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Residue> data);

    static Matrix identity(PrimeField field, std::size_t n);
    /// 1 x n matrix holding v.
    static Matrix row_vector(PrimeField field, std::span<const Residue> v);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Residue operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Residue& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Residue> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<Residue> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Residue>& data() const noexcept { return data_; }

    bool is_zero() const noexcept;
    bool is_identity() const noexcept;

    Matrix transpose() const;
    Matrix scaled(Residue c) const;
    /// Rows [first, first + count).
    Matrix row_block(std::size_t first, std::size_t count) const;
    Matrix select_columns(std::span<const std::size_t> columns) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

    /// a += c * b
    void add_scaled(const Matrix& b, Residue c);

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

/// v * M for a row vector v.
Vector row_times(std::span<const Residue> v, const Matrix& m);
/// M * v for a column vector v.
Vector times_column(const Matrix& m, std::span<const Residue> v);

/// Stacks the rows of a on top of the rows of b.
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block-diagonal sum.
Matrix block_diagonal(std::span<const Matrix> blocks, PrimeField field);

struct RowReduction {
    Matrix rref;
    std::size_t rank;
    std::vector<std::size_t> pivots;
    /// (cols - rank) x cols; each row v satisfies M * v^T = 0. Rows are in
    /// reduced row echelon form.
    Matrix kernel_basis;
};

RowReduction row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A subspace given by a basis in reduced row echelon form. Coordinates of
/// a member vector are read off at the pivot columns.
struct EchelonBasis {
    Matrix rows;
    std::vector<std::size_t> pivots;

    std::size_t dim() const noexcept { return rows.rows(); }
    /// Coordinates of v, or nullopt when v is outside the span.
    std::optional<Vector> coordinates(std::span<const Residue> v) const;
    /// Coordinates of every row of m; throws Error(DimensionMismatch) if a
    /// row lies outside the span.
    Matrix coordinates_of_rows(const Matrix& m) const;
};

/// Row space of m in canonical echelon form.
EchelonBasis row_space(const Matrix& m);
/// {v : v * m = 0}, as an echelon basis of row vectors.
EchelonBasis left_kernel(const Matrix& m);

/// Solves A x = b; nullopt iff b is outside the column space of A.
/// Throws Error(DimensionMismatch).
std::optional<Vector> solve_linear(const Matrix& a, std::span<const Residue> b);

/// Throws Error(NotSquare) or Error(Singular).
Matrix invert(const Matrix& m);
std::optional<Matrix> try_invert(const Matrix& m);

/// Minimal polynomial via Krylov sequences and lcm of the local minimal
/// polynomials. Throws Error(NotSquare).
Polynomial min_poly(const Matrix& m);

/// f(M). Throws Error(NotSquare).
Matrix evaluate(const Polynomial& f, const Matrix& m);

}  // namespace krs

#endif  // KRS_MATRIX_HPP
