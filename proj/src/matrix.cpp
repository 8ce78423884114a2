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

#include "krs/matrix.hpp"

#include <algorithm>
#include <string>

namespace krs {

namespace {

void require_compatible(const Matrix& a, const Matrix& b, const char* what) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, what);
}

std::string shape(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Gauss-Jordan elimination in place; returns pivot columns.
std::vector<std::size_t> reduce_in_place(Matrix& m) {
    const auto& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r) {
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(r, k));
        }
        const Residue inv = f.inv(m(r, c));
        for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = f.mul(m(r, k), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Residue factor = f.neg(m(i, c));
            for (std::size_t k = c; k < m.cols(); ++k) m(i, k) = f.mul_add(m(i, k), factor, m(r, k));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Matrix::Matrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        for (auto v : row) data_.push_back(field_.reduce(v));
    }
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Residue> data)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw Error(ErrorCode::DimensionMismatch, "entry count does not match the shape");
    }
    for (auto& v : data_) v = field_.reduce_unsigned(v);
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::row_vector(PrimeField field, std::span<const Residue> v) {
    return Matrix(field, 1, v.size(), std::vector<Residue>(v.begin(), v.end()));
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
}

bool Matrix::is_identity() const noexcept {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != (i == j ? 1U : 0U)) return false;
        }
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

Matrix Matrix::scaled(Residue c) const {
    Matrix out = *this;
    for (auto& v : out.data_) v = field_.mul(v, c);
    return out;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
    Matrix out(field_, count, cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_), count * cols_,
                out.data_.begin());
    return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
    Matrix out(field_, rows_, columns.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < columns.size(); ++j) out(i, j) = (*this)(i, columns[j]);
    }
    return out;
}

void Matrix::add_scaled(const Matrix& b, Residue c) {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
        throw Error(ErrorCode::DimensionMismatch, "add_scaled " + shape(*this) + " vs " + shape(b));
    }
    if (c == 0) return;
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.mul_add(data_[k], c, b.data_[k]);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_compatible(a, b, "matrix sum over different fields");
    Matrix out = a;
    out.add_scaled(b, 1);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_compatible(a, b, "matrix difference over different fields");
    Matrix out = a;
    out.add_scaled(b, a.field().neg(1));
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_compatible(a, b, "matrix product over different fields");
    if (a.cols_ != b.rows_) {
        throw Error(ErrorCode::DimensionMismatch, "product " + shape(a) + " * " + shape(b));
    }
    const auto p = a.field_.characteristic();
    Matrix out(a.field_, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const std::uint64_t aik = a(i, k);
            if (aik == 0) continue;
            const Residue* brow = b.data_.data() + k * b.cols_;
            for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + aik * brow[j]) % p;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = static_cast<Residue>(acc[j]);
    }
    return out;
}

Vector row_times(std::span<const Residue> v, const Matrix& m) {
    if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "row vector length vs rows");
    const auto& f = m.field();
    Vector out(m.cols(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        const auto row = m.row(k);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.mul_add(out[j], v[k], row[j]);
    }
    return out;
}

Vector times_column(const Matrix& m, std::span<const Residue> v) {
    if (v.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "column vector length vs cols");
    const auto& f = m.field();
    Vector out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Residue acc = 0;
        for (std::size_t k = 0; k < v.size(); ++k) acc = f.mul_add(acc, m(i, k), v[k]);
        out[i] = acc;
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_compatible(a, b, "vstack over different fields");
    if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
    std::vector<Residue> data = a.data();
    data.insert(data.end(), b.data().begin(), b.data().end());
    return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

Matrix block_diagonal(std::span<const Matrix> blocks, PrimeField field) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix out(field, rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

RowReduction row_reduce(const Matrix& m) {
    const auto& f = m.field();
    Matrix r = m;
    std::vector<std::size_t> pivots = reduce_in_place(r);
    const std::size_t rank = pivots.size();

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix kernel(f, m.cols() - rank, m.cols());
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        kernel(k, free) = 1;
        for (std::size_t i = 0; i < rank; ++i) kernel(k, pivots[i]) = f.neg(r(i, free));
        ++k;
    }
    reduce_in_place(kernel);
    return {std::move(r), rank, std::move(pivots), std::move(kernel)};
}

std::size_t rank(const Matrix& m) {
    Matrix r = m;
    return reduce_in_place(r).size();
}

std::optional<Vector> EchelonBasis::coordinates(std::span<const Residue> v) const {
    if (v.size() != rows.cols()) throw Error(ErrorCode::DimensionMismatch, "vector length vs ambient");
    Vector coords(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) coords[i] = v[pivots[i]];
    const Vector back = row_times(coords, rows);
    if (!std::equal(back.begin(), back.end(), v.begin())) return std::nullopt;
    return coords;
}

Matrix EchelonBasis::coordinates_of_rows(const Matrix& m) const {
    Matrix out(m.field(), m.rows(), dim());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto c = coordinates(m.row(i));
        if (!c) throw Error(ErrorCode::DimensionMismatch, "row outside the subspace");
        std::copy(c->begin(), c->end(), out.row(i).begin());
    }
    return out;
}

EchelonBasis row_space(const Matrix& m) {
    Matrix r = m;
    auto pivots = reduce_in_place(r);
    return {r.row_block(0, pivots.size()), std::move(pivots)};
}

EchelonBasis left_kernel(const Matrix& m) {
    auto red = row_reduce(m.transpose());
    Matrix basis = std::move(red.kernel_basis);
    // Already echelon; recover the pivot columns.
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::size_t c = 0;
        while (basis(i, c) == 0) ++c;
        pivots.push_back(c);
    }
    return {std::move(basis), std::move(pivots)};
}

std::optional<Vector> solve_linear(const Matrix& a, std::span<const Residue> b) {
    if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length vs rows");
    const auto& f = a.field();
    Matrix aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = f.reduce_unsigned(b[i]);
    }
    const auto pivots = reduce_in_place(aug);
    Vector x(a.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == a.cols()) return std::nullopt;
        x[pivots[i]] = aug(i, a.cols());
    }
    return x;
}

std::optional<Matrix> try_invert(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "invert of " + shape(m));
    const std::size_t n = m.rows();
    const auto& f = m.field();
    Matrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto pivots = reduce_in_place(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    }
    return inv;
}

Matrix invert(const Matrix& m) {
    auto inv = try_invert(m);
    if (!inv) throw Error(ErrorCode::Singular, "matrix of rank " + std::to_string(rank(m)) + " < " +
                                                   std::to_string(m.rows()));
    return *std::move(inv);
}

namespace {

// Local minimal polynomial of v under x -> x*M, and the Krylov vectors.
Polynomial local_min_poly(const Matrix& m, Vector v, std::vector<Vector>& krylov) {
    const auto& f = m.field();
    struct Reduced {
        Vector vec;
        std::size_t pivot;
        std::vector<Residue> combo;  // vec = sum combo[k] * v M^k
    };
    std::vector<Reduced> reduced;
    Vector w = std::move(v);
    for (std::size_t k = 0;; ++k) {
        krylov.push_back(w);
        Vector r = w;
        std::vector<Residue> combo(k + 1, 0);
        combo[k] = 1;
        for (const auto& red : reduced) {
            const Residue c = r[red.pivot];
            if (c == 0) continue;
            const Residue nc = f.neg(c);
            for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.mul_add(r[j], nc, red.vec[j]);
            for (std::size_t j = 0; j < red.combo.size(); ++j) combo[j] = f.mul_add(combo[j], nc, red.combo[j]);
        }
        auto nz = std::find_if(r.begin(), r.end(), [](Residue x) { return x != 0; });
        if (nz == r.end()) {
            krylov.pop_back();
            return Polynomial(f, std::move(combo));
        }
        const auto pivot = static_cast<std::size_t>(nz - r.begin());
        const Residue inv = f.inv(r[pivot]);
        for (auto& x : r) x = f.mul(x, inv);
        for (auto& x : combo) x = f.mul(x, inv);
        // Keep earlier reduced vectors free of the new pivot so later
        // reductions stay one pass.
        for (auto& red : reduced) {
            const Residue c = red.vec[pivot];
            if (c == 0) continue;
            const Residue nc = f.neg(c);
            for (std::size_t j = 0; j < r.size(); ++j) red.vec[j] = f.mul_add(red.vec[j], nc, r[j]);
            red.combo.resize(combo.size(), 0);
            for (std::size_t j = 0; j < combo.size(); ++j) red.combo[j] = f.mul_add(red.combo[j], nc, combo[j]);
        }
        reduced.push_back({std::move(r), pivot, std::move(combo)});
        w = row_times(w, m);
    }
}

}  // namespace

Polynomial min_poly(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "min_poly of " + shape(m));
    const auto& f = m.field();
    const std::size_t n = m.rows();
    Polynomial result = Polynomial::constant(f, 1);
    Matrix span(f, 0, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector e(n, 0);
        e[i] = 1;
        if (span.rows() > 0) {
            EchelonBasis basis = row_space(span);
            if (basis.coordinates(e)) continue;
        }
        std::vector<Vector> krylov;
        result = poly_lcm(result, local_min_poly(m, e, krylov));
        for (const auto& k : krylov) span = vstack(span, Matrix::row_vector(f, k));
        if (rank(span) == n) break;
    }
    return result;
}

Matrix evaluate(const Polynomial& poly, const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "evaluate at " + shape(m));
    const auto& f = m.field();
    Matrix acc(f, m.rows(), m.cols());
    const Matrix id = Matrix::identity(f, m.rows());
    const auto& c = poly.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * m;
        acc.add_scaled(id, *it);
    }
    return acc;
}

}  // namespace krs
