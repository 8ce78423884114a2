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

#ifndef KRS_ALGEBRA_HPP
#define KRS_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "krs/matrix.hpp"
#include "krs/prime_field.hpp"

namespace krs {

/// A finite-dimensional associative unital F_p-algebra given by structure
/// constants: b_i * b_j = sum_k c[i][j][k] b_k.
///
/// Construction only checks shapes. Use validate_algebra for the
/// associativity and unit laws.
class StructureAlgebra {
public:
    /// `constants` is indexed (i * dim + j) * dim + k and reduced mod p.
    StructureAlgebra(PrimeField field, std::size_t dim, std::vector<Residue> constants, Vector unit,
                     std::vector<std::string> basis_names = {});

    const PrimeField& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    Residue constant(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return constants_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<Residue>& constants() const noexcept { return constants_; }
    const Vector& unit() const noexcept { return unit_; }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }

    struct Term {
        std::size_t index;
        Residue coeff;
    };
    /// Nonzero terms of b_i * b_j.
    std::span<const Term> product_terms(std::size_t i, std::size_t j) const noexcept {
        const auto& t = terms_[i * dim_ + j];
        return {t.data(), t.size()};
    }

    /// Coefficient vector of x * y.
    Vector multiply(std::span<const Residue> x, std::span<const Residue> y) const;

    /// Number of elements p^dim, saturated at `cap`.
    std::uint64_t element_count(std::uint64_t cap = UINT64_MAX) const noexcept;

    friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.constants_ == b.constants_ &&
               a.unit_ == b.unit_;
    }

private:
    PrimeField field_;
    std::size_t dim_;
    std::vector<Residue> constants_;
    Vector unit_;
    std::vector<std::string> names_;
    std::vector<std::vector<Term>> terms_;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

AlgebraPtr make_algebra(PrimeField field, std::size_t dim, std::vector<Residue> constants, Vector unit,
                        std::vector<std::string> basis_names = {});

/// Pointer identity first, structure second.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) noexcept;

/// An element of a StructureAlgebra as its coefficient vector.
class AlgebraElement {
public:
    AlgebraElement(AlgebraPtr algebra, Vector coeffs);

    static AlgebraElement zero(const AlgebraPtr& algebra);
    static AlgebraElement one(const AlgebraPtr& algebra);
    static AlgebraElement basis(const AlgebraPtr& algebra, std::size_t i);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const Vector& coeffs() const noexcept { return coeffs_; }
    const PrimeField& field() const noexcept { return algebra_->field(); }

    bool is_zero() const noexcept;
    bool is_one() const noexcept { return coeffs_ == algebra_->unit(); }
    bool is_idempotent() const;

    AlgebraElement scaled(Residue c) const;

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return same_algebra(a.algebra_, b.algebra_) && a.coeffs_ == b.coeffs_;
    }

private:
    AlgebraPtr algebra_;
    Vector coeffs_;
};

/// Throws Error(AlgebraMismatch) for elements of different algebras.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

struct AssociativityViolation {
    std::size_t i, j, k, l;  // coefficient l of (b_i b_j) b_k - b_i (b_j b_k) is nonzero
};
struct UnitViolation {
    std::size_t index;
    bool left;  // true: unit * b_index != b_index; false: b_index * unit != b_index
};
struct AlgebraValidation {
    std::vector<AssociativityViolation> associativity;
    std::vector<UnitViolation> unit;
    bool ok() const noexcept { return associativity.empty() && unit.empty(); }
    std::string describe(std::size_t max_items = 8) const;
};

AlgebraValidation validate_algebra(const StructureAlgebra& algebra);

/// Matrix of y -> x*y acting on column coordinate vectors, so that
/// left_mul_matrix(x*y) = left_mul_matrix(x) * left_mul_matrix(y).
Matrix left_mul_matrix(const AlgebraElement& x);
/// Matrix of v -> v*x acting on row coordinate vectors, so that
/// right_mul_matrix(x*y) = right_mul_matrix(x) * right_mul_matrix(y).
Matrix right_mul_matrix(const AlgebraElement& x);

bool is_unit(const AlgebraElement& x);
/// Two-sided inverse; throws Error(Singular) for non-units.
AlgebraElement inverse(const AlgebraElement& x);

struct IdempotentSetFlags {
    bool each_idempotent = false;
    bool pairwise_orthogonal = false;
    bool complete = false;
    bool all() const noexcept { return each_idempotent && pairwise_orthogonal && complete; }
};

IdempotentSetFlags check_idempotent_set(const AlgebraPtr& algebra, std::span<const AlgebraElement> set);

/// The corner algebra eAe with unit e, on the echelon basis of the
/// subspace {e x e}.
class CornerAlgebra {
public:
    const AlgebraPtr& parent() const noexcept { return parent_; }
    const AlgebraElement& idempotent() const noexcept { return idempotent_; }
    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    /// Rows are the parent coordinates of the corner basis.
    const Matrix& embed_matrix() const noexcept { return basis_.rows; }

    AlgebraElement embed(const AlgebraElement& corner_element) const;
    /// Throws Error(InvalidArgument) when x is outside eAe.
    AlgebraElement project(const AlgebraElement& x) const;

private:
    friend CornerAlgebra corner_algebra(const AlgebraPtr& algebra, const AlgebraElement& e);
    CornerAlgebra(AlgebraPtr parent, AlgebraElement e, AlgebraPtr algebra, EchelonBasis basis)
        : parent_(std::move(parent)), idempotent_(std::move(e)), algebra_(std::move(algebra)),
          basis_(std::move(basis)) {}

    AlgebraPtr parent_;
    AlgebraElement idempotent_;
    AlgebraPtr algebra_;
    EchelonBasis basis_;
};

/// Throws Error(NotIdempotent).
CornerAlgebra corner_algebra(const AlgebraPtr& algebra, const AlgebraElement& e);

/// Visits every element of the algebra, coefficient 0 varying fastest. The
/// visitor receives the coefficients and the matching left_mul_matrix,
/// which is maintained incrementally; returning false stops the scan.
/// Returns the number of elements visited.
std::uint64_t for_each_element(const AlgebraPtr& algebra,
                               const std::function<bool(const Vector&, const Matrix&)>& visit);

// ---- standard constructions -------------------------------------------

/// Subalgebra of n x n matrices spanned by `basis` (must be closed under
/// products and contain the identity). Throws Error(InvalidAlgebra).
AlgebraPtr algebra_from_matrices(PrimeField field, std::span<const Matrix> basis,
                                 std::vector<std::string> names = {});
/// F_p as a one-dimensional algebra.
AlgebraPtr ground_field_algebra(PrimeField field);
/// F_p[t]/(f) on the monomial basis; f monic of degree >= 1.
AlgebraPtr quotient_polynomial_algebra(const Polynomial& f);
/// All n x n matrices, basis E_ij in row-major order.
AlgebraPtr full_matrix_algebra(PrimeField field, std::size_t n);
/// Upper-triangular n x n matrices, basis E_ij (i <= j) in row-major order.
AlgebraPtr upper_triangular_algebra(PrimeField field, std::size_t n);
/// F_p[C_n] on the group basis.
AlgebraPtr cyclic_group_algebra(PrimeField field, std::size_t n);
/// A x B with the concatenated basis.
AlgebraPtr direct_product(const StructureAlgebra& a, const StructureAlgebra& b);

}  // namespace krs

#endif  // KRS_ALGEBRA_HPP
