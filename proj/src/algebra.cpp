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

#include "krs/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace krs {

StructureAlgebra::StructureAlgebra(PrimeField field, std::size_t dim, std::vector<Residue> constants,
                                   Vector unit, std::vector<std::string> basis_names)
    : field_(field), dim_(dim), constants_(std::move(constants)), unit_(std::move(unit)),
      names_(std::move(basis_names)) {
    if (dim_ == 0) throw Error(ErrorCode::InvalidAlgebra, "algebra dimension must be at least 1");
    if (constants_.size() != dim_ * dim_ * dim_) {
        throw Error(ErrorCode::DimensionMismatch, "structure constants must have dim^3 entries");
    }
    if (unit_.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "unit must have dim entries");
    if (!names_.empty() && names_.size() != dim_) {
        throw Error(ErrorCode::DimensionMismatch, "basis_names must have dim entries");
    }
    for (auto& c : constants_) c = field_.reduce_unsigned(c);
    for (auto& c : unit_) c = field_.reduce_unsigned(c);
    terms_.resize(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            for (std::size_t k = 0; k < dim_; ++k) {
                if (Residue c = constant(i, j, k); c != 0) terms_[i * dim_ + j].push_back({k, c});
            }
        }
    }
}

Vector StructureAlgebra::multiply(std::span<const Residue> x, std::span<const Residue> y) const {
    if (x.size() != dim_ || y.size() != dim_) {
        throw Error(ErrorCode::DimensionMismatch, "element length vs algebra dimension");
    }
    Vector out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            const Residue xy = field_.mul(x[i], y[j]);
            for (const auto& t : product_terms(i, j)) out[t.index] = field_.mul_add(out[t.index], xy, t.coeff);
        }
    }
    return out;
}

std::uint64_t StructureAlgebra::element_count(std::uint64_t cap) const noexcept {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (n > cap / field_.characteristic()) return cap;
        n *= field_.characteristic();
    }
    return std::min(n, cap);
}

AlgebraPtr make_algebra(PrimeField field, std::size_t dim, std::vector<Residue> constants, Vector unit,
                        std::vector<std::string> basis_names) {
    return std::make_shared<const StructureAlgebra>(field, dim, std::move(constants), std::move(unit),
                                                    std::move(basis_names));
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) noexcept {
    if (a == b) return true;
    return a && b && *a == *b;
}

// ---- elements ----------------------------------------------------------

AlgebraElement::AlgebraElement(AlgebraPtr algebra, Vector coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != algebra_->dim()) {
        throw Error(ErrorCode::DimensionMismatch, "element length vs algebra dimension");
    }
    for (auto& c : coeffs_) c = algebra_->field().reduce_unsigned(c);
}

AlgebraElement AlgebraElement::zero(const AlgebraPtr& algebra) {
    return AlgebraElement(algebra, Vector(algebra->dim(), 0));
}

AlgebraElement AlgebraElement::one(const AlgebraPtr& algebra) { return AlgebraElement(algebra, algebra->unit()); }

AlgebraElement AlgebraElement::basis(const AlgebraPtr& algebra, std::size_t i) {
    Vector v(algebra->dim(), 0);
    v.at(i) = 1;
    return AlgebraElement(algebra, std::move(v));
}

bool AlgebraElement::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

bool AlgebraElement::is_idempotent() const { return algebra_->multiply(coeffs_, coeffs_) == coeffs_; }

AlgebraElement AlgebraElement::scaled(Residue c) const {
    Vector v = coeffs_;
    for (auto& x : v) x = field().mul(x, c);
    return AlgebraElement(algebra_, std::move(v));
}

namespace {
void require_same(const AlgebraElement& a, const AlgebraElement& b) {
    if (!same_algebra(a.algebra(), b.algebra())) {
        throw Error(ErrorCode::AlgebraMismatch, "elements of different algebras");
    }
}
}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    require_same(a, b);
    Vector v(a.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field().add(a.coeffs_[i], b.coeffs_[i]);
    return AlgebraElement(a.algebra_, std::move(v));
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    require_same(a, b);
    Vector v(a.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field().sub(a.coeffs_[i], b.coeffs_[i]);
    return AlgebraElement(a.algebra_, std::move(v));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    require_same(a, b);
    return AlgebraElement(a.algebra_, a.algebra_->multiply(a.coeffs_, b.coeffs_));
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

// ---- validation --------------------------------------------------------

std::string AlgebraValidation::describe(std::size_t max_items) const {
    if (ok()) return "ok";
    std::ostringstream os;
    std::size_t shown = 0;
    for (const auto& v : associativity) {
        if (shown++ == max_items) break;
        os << "associativity fails at (i,j,k,l)=(" << v.i << "," << v.j << "," << v.k << "," << v.l << ")\n";
    }
    for (const auto& v : unit) {
        if (shown++ == max_items) break;
        os << "unit law fails " << (v.left ? "on the left" : "on the right") << " at basis index " << v.index
           << "\n";
    }
    const std::size_t total = associativity.size() + unit.size();
    if (total > max_items) os << "(" << total - max_items << " more)\n";
    return os.str();
}

AlgebraValidation validate_algebra(const StructureAlgebra& a) {
    const auto& f = a.field();
    const std::size_t n = a.dim();
    AlgebraValidation report;
    Vector lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                // (b_i b_j) b_k
                for (const auto& t : a.product_terms(i, j)) {
                    for (const auto& u : a.product_terms(t.index, k)) {
                        lhs[u.index] = f.mul_add(lhs[u.index], t.coeff, u.coeff);
                    }
                }
                // b_i (b_j b_k)
                for (const auto& t : a.product_terms(j, k)) {
                    for (const auto& u : a.product_terms(i, t.index)) {
                        rhs[u.index] = f.mul_add(rhs[u.index], t.coeff, u.coeff);
                    }
                }
                for (std::size_t l = 0; l < n; ++l) {
                    if (lhs[l] != rhs[l]) report.associativity.push_back({i, j, k, l});
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vector b(n, 0);
        b[i] = 1;
        if (a.multiply(a.unit(), b) != b) report.unit.push_back({i, true});
        if (a.multiply(b, a.unit()) != b) report.unit.push_back({i, false});
    }
    return report;
}

// ---- regular representations -------------------------------------------

Matrix left_mul_matrix(const AlgebraElement& x) {
    const auto& a = *x.algebra();
    const auto& f = a.field();
    Matrix m(f, a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Residue xi = x.coeffs()[i];
        if (xi == 0) continue;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (const auto& t : a.product_terms(i, j)) m(t.index, j) = f.mul_add(m(t.index, j), xi, t.coeff);
        }
    }
    return m;
}

Matrix right_mul_matrix(const AlgebraElement& x) {
    const auto& a = *x.algebra();
    const auto& f = a.field();
    Matrix m(f, a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Residue xi = x.coeffs()[i];
        if (xi == 0) continue;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (const auto& t : a.product_terms(j, i)) m(j, t.index) = f.mul_add(m(j, t.index), xi, t.coeff);
        }
    }
    return m;
}

bool is_unit(const AlgebraElement& x) { return rank(left_mul_matrix(x)) == x.algebra()->dim(); }

AlgebraElement inverse(const AlgebraElement& x) {
    // x*y = 1 solves L(x) y = 1; in a finite-dimensional algebra a right
    // inverse is two-sided.
    auto y = solve_linear(left_mul_matrix(x), x.algebra()->unit());
    if (!y || !is_unit(x)) throw Error(ErrorCode::Singular, "element is not a unit");
    return AlgebraElement(x.algebra(), *std::move(y));
}

IdempotentSetFlags check_idempotent_set(const AlgebraPtr& algebra, std::span<const AlgebraElement> set) {
    for (const auto& e : set) {
        if (!same_algebra(e.algebra(), algebra)) {
            throw Error(ErrorCode::AlgebraMismatch, "idempotent set member from another algebra");
        }
    }
    IdempotentSetFlags flags{true, true, false};
    AlgebraElement sum = AlgebraElement::zero(algebra);
    for (std::size_t a = 0; a < set.size(); ++a) {
        if (!set[a].is_idempotent()) flags.each_idempotent = false;
        for (std::size_t b = 0; b < set.size(); ++b) {
            if (a != b && !(set[a] * set[b]).is_zero()) flags.pairwise_orthogonal = false;
        }
        sum = sum + set[a];
    }
    flags.complete = sum.is_one();
    return flags;
}

// ---- corners -----------------------------------------------------------

AlgebraElement CornerAlgebra::embed(const AlgebraElement& y) const {
    if (!same_algebra(y.algebra(), algebra_)) throw Error(ErrorCode::AlgebraMismatch, "not a corner element");
    return AlgebraElement(parent_, row_times(y.coeffs(), basis_.rows));
}

AlgebraElement CornerAlgebra::project(const AlgebraElement& x) const {
    if (!same_algebra(x.algebra(), parent_)) throw Error(ErrorCode::AlgebraMismatch, "not a parent element");
    auto c = basis_.coordinates(x.coeffs());
    if (!c) throw Error(ErrorCode::InvalidArgument, "element lies outside the corner eAe");
    return AlgebraElement(algebra_, *std::move(c));
}

CornerAlgebra corner_algebra(const AlgebraPtr& algebra, const AlgebraElement& e) {
    if (!same_algebra(e.algebra(), algebra)) throw Error(ErrorCode::AlgebraMismatch, "idempotent of another algebra");
    if (!e.is_idempotent()) throw Error(ErrorCode::NotIdempotent, "corner_algebra needs e*e = e");
    const auto& f = algebra->field();
    const std::size_t n = algebra->dim();
    Matrix spanning(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ebe = e * AlgebraElement::basis(algebra, i) * e;
        std::copy(ebe.coeffs().begin(), ebe.coeffs().end(), spanning.row(i).begin());
    }
    EchelonBasis basis = row_space(spanning);
    const std::size_t d = basis.dim();
    if (d == 0) throw Error(ErrorCode::ZeroIdempotent, "the corner of the zero idempotent is zero");

    std::vector<Residue> constants(d * d * d, 0);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            const Vector prod = algebra->multiply(basis.rows.row(a), basis.rows.row(b));
            const auto coords = basis.coordinates(prod);
            if (!coords) throw Error(ErrorCode::InvalidAlgebra, "eAe not closed; parent is not associative");
            std::copy(coords->begin(), coords->end(), constants.begin() + static_cast<std::ptrdiff_t>((a * d + b) * d));
        }
    }
    auto unit = basis.coordinates(e.coeffs());
    auto corner = make_algebra(f, d, std::move(constants), *unit);
    return CornerAlgebra(algebra, e, std::move(corner), std::move(basis));
}

// ---- enumeration -------------------------------------------------------

std::uint64_t for_each_element(const AlgebraPtr& algebra,
                               const std::function<bool(const Vector&, const Matrix&)>& visit) {
    const std::size_t n = algebra->dim();
    const auto& f = algebra->field();
    const Residue top = static_cast<Residue>(f.characteristic() - 1);
    std::vector<Matrix> basis_left;
    basis_left.reserve(n);
    for (std::size_t i = 0; i < n; ++i) basis_left.push_back(left_mul_matrix(AlgebraElement::basis(algebra, i)));

    Vector x(n, 0);
    Matrix left(f, n, n);
    std::uint64_t visited = 0;
    for (;;) {
        ++visited;
        if (!visit(x, left)) return visited;
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (x[i] < top) {
                ++x[i];
                left.add_scaled(basis_left[i], 1);
                break;
            }
            // x[i] wraps from p-1 to 0: subtract (p-1) L_i, i.e. add L_i.
            x[i] = 0;
            left.add_scaled(basis_left[i], 1);
        }
        if (i == n) return visited;
    }
}

// ---- constructions -----------------------------------------------------

AlgebraPtr algebra_from_matrices(PrimeField field, std::span<const Matrix> basis, std::vector<std::string> names) {
    if (basis.empty()) throw Error(ErrorCode::InvalidAlgebra, "empty matrix basis");
    const std::size_t n = basis.front().rows();
    const std::size_t d = basis.size();
    Matrix flat(field, d, n * n);
    for (std::size_t i = 0; i < d; ++i) {
        if (basis[i].rows() != n || basis[i].cols() != n) {
            throw Error(ErrorCode::DimensionMismatch, "matrix basis must be square of one size");
        }
        std::copy(basis[i].data().begin(), basis[i].data().end(), flat.row(i).begin());
    }
    if (rank(flat) != d) throw Error(ErrorCode::InvalidAlgebra, "matrix basis is linearly dependent");
    // Solve coordinates against the original basis: coords * flat = target.
    const Matrix flat_t = flat.transpose();
    auto coords_of = [&](const Matrix& m) {
        auto c = solve_linear(flat_t, m.data());
        if (!c) throw Error(ErrorCode::InvalidAlgebra, "span of the matrix basis is not closed");
        return *std::move(c);
    };
    std::vector<Residue> constants(d * d * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Vector c = coords_of(basis[i] * basis[j]);
            std::copy(c.begin(), c.end(), constants.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d));
        }
    }
    Vector unit = coords_of(Matrix::identity(field, n));
    return make_algebra(field, d, std::move(constants), std::move(unit), std::move(names));
}

AlgebraPtr ground_field_algebra(PrimeField field) {
    return make_algebra(field, 1, {1}, {1}, {"1"});
}

AlgebraPtr quotient_polynomial_algebra(const Polynomial& f) {
    if (f.degree() < 1 || !f.is_monic()) {
        throw Error(ErrorCode::InvalidArgument, "quotient algebra needs a monic polynomial of degree >= 1");
    }
    const auto& field = f.field();
    const auto d = static_cast<std::size_t>(f.degree());
    std::vector<Residue> constants(d * d * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Polynomial r = Polynomial::monomial(field, 1, i + j) % f;
            for (std::size_t k = 0; k < d; ++k) constants[(i * d + j) * d + k] = r.coefficient(k);
        }
    }
    Vector unit(d, 0);
    unit[0] = 1;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) names.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
    return make_algebra(field, d, std::move(constants), std::move(unit), std::move(names));
}

namespace {
Matrix matrix_unit(PrimeField field, std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(field, n, n);
    m(i, j) = 1;
    return m;
}
}  // namespace

AlgebraPtr full_matrix_algebra(PrimeField field, std::size_t n) {
    std::vector<Matrix> basis;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            basis.push_back(matrix_unit(field, n, i, j));
            names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    }
    return algebra_from_matrices(field, basis, std::move(names));
}

AlgebraPtr upper_triangular_algebra(PrimeField field, std::size_t n) {
    std::vector<Matrix> basis;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            basis.push_back(matrix_unit(field, n, i, j));
            names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    }
    return algebra_from_matrices(field, basis, std::move(names));
}

AlgebraPtr cyclic_group_algebra(PrimeField field, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic group of order 0");
    std::vector<Residue> constants(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) constants[(i * n + j) * n + (i + j) % n] = 1;
    }
    Vector unit(n, 0);
    unit[0] = 1;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("g^" + std::to_string(i));
    return make_algebra(field, n, std::move(constants), std::move(unit), std::move(names));
}

AlgebraPtr direct_product(const StructureAlgebra& a, const StructureAlgebra& b) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "direct product over different fields");
    const std::size_t n = a.dim(), m = b.dim(), d = n + m;
    std::vector<Residue> constants(d * d * d, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) constants[(i * d + j) * d + k] = a.constant(i, j, k);
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) constants[((n + i) * d + n + j) * d + n + k] = b.constant(i, j, k);
        }
    }
    Vector unit = a.unit();
    unit.insert(unit.end(), b.unit().begin(), b.unit().end());
    return make_algebra(a.field(), d, std::move(constants), std::move(unit));
}

}  // namespace krs
