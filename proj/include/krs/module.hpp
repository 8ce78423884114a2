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

#ifndef KRS_MODULE_HPP
#define KRS_MODULE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "krs/algebra.hpp"
#include "krs/matrix.hpp"

namespace krs {

/// A finite-dimensional right module over a StructureAlgebra.
///
/// Vectors are rows and act on the right: v . b_i = v * action[i]. With
/// this convention the representation is multiplicative,
/// action(b_i) * action(b_j) = sum_k c[i][j][k] action(b_k).
class RightModule {
public:
    /// Shapes are checked; the module axioms are left to validate_module.
    RightModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);

    static RightModule zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const PrimeField& field() const noexcept { return algebra_->field(); }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Matrix>& action() const noexcept { return action_; }
    const Matrix& action(std::size_t i) const { return action_.at(i); }
    /// Matrix of v -> v . a.
    Matrix act(const AlgebraElement& a) const;

    friend bool operator==(const RightModule& a, const RightModule& b) {
        return same_algebra(a.algebra_, b.algebra_) && a.dim_ == b.dim_ && a.action_ == b.action_;
    }

private:
    AlgebraPtr algebra_;
    std::size_t dim_;
    std::vector<Matrix> action_;
};

using ModulePtr = std::shared_ptr<const RightModule>;

ModulePtr make_module(RightModule m);
bool same_module(const ModulePtr& a, const ModulePtr& b) noexcept;

/// A module map as a dim(source) x dim(target) matrix acting on rows.
/// Composition follows the row convention: (g o f) has matrix F * G.
class ModuleMorphism {
public:
    ModuleMorphism(ModulePtr source, ModulePtr target, Matrix matrix);

    static ModuleMorphism identity(const ModulePtr& m);
    static ModuleMorphism zero(const ModulePtr& source, const ModulePtr& target);

    const ModulePtr& source() const noexcept { return source_; }
    const ModulePtr& target() const noexcept { return target_; }
    const Matrix& matrix() const noexcept { return matrix_; }

    /// rho_src(b_i) * F == F * rho_tgt(b_i) for every basis vector b_i.
    bool intertwines() const;
    bool is_injective() const { return rank(matrix_) == source_->dim(); }
    bool is_surjective() const { return rank(matrix_) == target_->dim(); }
    bool is_isomorphism() const { return source_->dim() == target_->dim() && is_injective(); }

    ModuleMorphism scaled(Residue c) const;
    friend ModuleMorphism operator+(const ModuleMorphism& a, const ModuleMorphism& b);
    friend ModuleMorphism operator-(const ModuleMorphism& a, const ModuleMorphism& b);

private:
    ModulePtr source_;
    ModulePtr target_;
    Matrix matrix_;
};

/// g o f (apply f first). Throws Error(DimensionMismatch) when the
/// target of f is not the source of g.
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);

struct ModuleValidation {
    bool shape_ok = true;
    bool unit_ok = true;
    /// (i, j) pairs where rho(b_i) rho(b_j) != sum_k c[i][j][k] rho(b_k).
    std::vector<std::pair<std::size_t, std::size_t>> multiplicativity;
    bool ok() const noexcept { return shape_ok && unit_ok && multiplicativity.empty(); }
    std::string describe() const;
};

ModuleValidation validate_module(const RightModule& m);

/// Hom_A(M, N) with a canonical basis (the echelon basis of the solution
/// space of the intertwining equations, with matrices flattened row-major).
class HomSpace {
public:
    HomSpace(ModulePtr source, ModulePtr target);

    const ModulePtr& source() const noexcept { return source_; }
    const ModulePtr& target() const noexcept { return target_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<ModuleMorphism>& basis() const noexcept { return basis_; }

    /// Coordinates of a morphism matrix, or nullopt if it does not intertwine.
    std::optional<Vector> coordinates(const Matrix& f) const;
    ModuleMorphism combination(std::span<const Residue> coords) const;

private:
    ModulePtr source_;
    ModulePtr target_;
    std::vector<ModuleMorphism> basis_;
    EchelonBasis flat_;
};

/// Throws Error(AlgebraMismatch).
std::vector<ModuleMorphism> hom_basis(const ModulePtr& m, const ModulePtr& n);

/// End_A(M) as a structure-constant algebra on the hom_basis coordinates.
/// The product is composition: basis_a * basis_b = basis_a o basis_b.
class EndAlgebra {
public:
    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const HomSpace& hom() const noexcept { return hom_; }
    const ModulePtr& module() const noexcept { return hom_.source(); }
    const std::vector<ModuleMorphism>& basis() const noexcept { return hom_.basis(); }

    ModuleMorphism to_morphism(const AlgebraElement& x) const;
    /// Throws Error(InvalidArgument) when f is not an endomorphism of M.
    AlgebraElement to_element(const ModuleMorphism& f) const;

private:
    friend EndAlgebra end_algebra(const ModulePtr& m);
    EndAlgebra(HomSpace hom, AlgebraPtr algebra) : hom_(std::move(hom)), algebra_(std::move(algebra)) {}

    HomSpace hom_;
    AlgebraPtr algebra_;
};

/// Throws Error(ZeroModule) for dim 0.
EndAlgebra end_algebra(const ModulePtr& m);

struct KernelModule {
    ModulePtr kernel;
    ModuleMorphism inclusion;
};

/// Kernel of phi with the induced action; the inclusion matrix is the
/// echelon basis of {v : v * phi = 0}.
KernelModule kernel_module(const ModuleMorphism& phi);

struct SubModule {
    ModulePtr module;
    ModuleMorphism inclusion;
};
/// Smallest submodule containing the given row vectors.
SubModule generated_submodule(const ModulePtr& m, const Matrix& generators);

struct QuotientModule {
    ModulePtr module;
    ModuleMorphism projection;
};
/// M / W for a submodule W spanned by the rows of `submodule_rows`.
/// Throws Error(InvalidModule) if the span is not a submodule.
QuotientModule quotient_module(const ModulePtr& m, const Matrix& submodule_rows);

/// The module with action P rho P^-1 together with its isomorphism to m
/// (matrix P). Throws Error(Singular).
ModuleMorphism change_basis(const ModulePtr& m, const Matrix& p);

struct DirectSum {
    ModulePtr sum;
    std::vector<ModuleMorphism> injections;
    std::vector<ModuleMorphism> projections;
};

/// Block-diagonal direct sum. The empty family gives the zero module.
/// Throws Error(AlgebraMismatch).
DirectSum direct_sum(const AlgebraPtr& algebra, std::span<const ModulePtr> parts);

/// Regular right module A_A: b_i acts by right multiplication.
/// Throws Error(InvalidAlgebra) if the algebra fails validation.
ModulePtr regular_module(const AlgebraPtr& algebra);

/// The right ideal eA as a submodule of regular_module(algebra); it is the
/// fixed space of the endomorphism v -> e v.
KernelModule right_ideal(const AlgebraPtr& algebra, const AlgebraElement& e);

enum class IsoStatus { Found, NotIsomorphic, Inconclusive };

struct IsoSearch {
    IsoStatus status;
    std::optional<ModuleMorphism> iso;
};

struct IsoSearchOptions {
    std::uint64_t seed = 0;
    std::uint32_t trials = 64;
    /// Exhaust the coefficient space of Hom(M, N) when p^dim Hom is at most this.
    std::uint64_t enumeration_budget = std::uint64_t{1} << 16;
};

/// Searches for an isomorphism M -> N: pairs of Hom basis vectors whose
/// composite is invertible, then seeded random combinations, then full
/// enumeration of Hom(M, N) within budget. Throws Error(AlgebraMismatch).
IsoSearch find_isomorphism(const ModulePtr& m, const ModulePtr& n, const IsoSearchOptions& options = {});

/// Decision procedure for modules with local endomorphism rings. Non-units
/// of End(M) form an ideal, so M = N iff some composite g_b o f_a of Hom
/// basis vectors is invertible. Throws Error(AlgebraMismatch).
IsoSearch find_isomorphism_local(const ModulePtr& m, const ModulePtr& n);

struct PhiReport {
    std::size_t end_dim = 0;
    std::size_t corner_dim = 0;
    /// Row k holds the corner coordinates of Phi(h_k) = h_k(e).
    std::optional<Matrix> phi;
    bool bijective = false;
    bool multiplicative = false;
    bool unital = false;
    bool ok() const noexcept { return bijective && multiplicative && unital; }
};

/// Checks that h -> h(e) is a ring isomorphism End_A(eA) -> eAe.
/// Throws Error(NotIdempotent) or Error(ZeroIdempotent).
PhiReport phi_corner_iso(const AlgebraPtr& algebra, const AlgebraElement& e);

struct BiChainStep {
    ModuleMorphism alpha;  // X_n -> X_{n+1}, epic
    ModuleMorphism beta;   // X_{n+1} -> X_n, monic
};
using BiChain = std::vector<BiChainStep>;

/// Least N such that every step n >= N of the prefix is a pair of
/// isomorphisms; nullopt when the prefix ends before that happens.
/// Throws Error(InvalidChain).
std::optional<std::size_t> bichain_stabilize(const BiChain& chain);

}  // namespace krs

#endif  // KRS_MODULE_HPP
