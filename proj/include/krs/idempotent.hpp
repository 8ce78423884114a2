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

#ifndef KRS_IDEMPOTENT_HPP
#define KRS_IDEMPOTENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "krs/algebra.hpp"
#include "krs/module.hpp"

namespace krs {

/// An idempotent endomorphism e of X written as e = s o r with r o s = id_Y.
struct SplitDatum {
    ModuleMorphism e;  // X -> X
    ModulePtr image;   // Y
    ModuleMorphism r;  // X -> Y, surjective
    ModuleMorphism s;  // Y -> X, injective

    /// Exact check of s o r = e, r o s = id_Y and the rank conditions.
    bool holds() const;
};

/// Splits e and id - e. The first datum has Y = Ker(id - e) = Im(e), with
/// s the kernel inclusion and r the coordinates of e in that basis; the
/// second is the same construction for id - e. Throws Error(NotIdempotent).
std::pair<SplitDatum, SplitDatum> split_idempotent(const ModuleMorphism& e);

/// Element w of E with w^2 = w and w not in {0, 1}, found from a coprime
/// factorization of the minimal polynomial of left multiplication by some
/// candidate x (basis vectors, then pairwise products of basis vectors
/// when dim <= kPairSweepMaxDim, then `trials` seeded random elements).
/// Throws Error(InvalidAlgebra) if validation fails.
std::optional<AlgebraElement> find_nontrivial_idempotent(const AlgebraPtr& algebra, std::uint64_t seed,
                                                         std::uint32_t trials);

inline constexpr std::size_t kPairSweepMaxDim = 16;

/// Default exhaustive-enumeration budget (elements of the algebra).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 16;

enum class LocalityMethod { Exhaustive, MonteCarlo };

struct LocalityVerdict {
    bool local = false;
    /// A nontrivial idempotent whenever local is false.
    std::optional<AlgebraElement> witness;
    LocalityMethod method = LocalityMethod::Exhaustive;
    /// Elements visited by the exhaustive scan (0 when none was run).
    std::uint64_t elements_scanned = 0;
    /// Random draws used by the Monte Carlo search.
    std::uint32_t trials = 0;
    /// (3/4)^trials for Monte Carlo Local verdicts, else 0.
    double failure_bound = 0.0;

    /// Local with certainty (exhaustive scan) or NotLocal (verified witness).
    bool conclusive() const noexcept { return !local || method == LocalityMethod::Exhaustive; }
};

std::string to_string(LocalityMethod m);

/// Number of random draws is_local uses above the exhaustive budget.
std::uint32_t monte_carlo_trials(std::uint64_t budget) noexcept;

/// Local iff the only idempotents are 0 and 1 (E is finite-dimensional,
/// hence artinian). Exhaustive when p^dim <= budget, Monte Carlo otherwise,
/// with `trials` random draws (0 means monte_carlo_trials(budget)).
/// Throws Error(InvalidAlgebra).
LocalityVerdict is_local(const AlgebraPtr& algebra, std::uint64_t budget = kDefaultBudget, std::uint64_t seed = 0,
                         std::uint32_t trials = 0);

namespace detail {
/// is_local without the validation pass, for algebras that are valid by
/// construction (endomorphism algebras, corners).
LocalityVerdict is_local_unvalidated(const AlgebraPtr& algebra, std::uint64_t budget, std::uint64_t seed,
                                     std::uint32_t trials = 0);
}  // namespace detail

struct PrimitivityVerdict {
    bool primitive = false;
    LocalityVerdict corner;
    /// Orthogonal nonzero idempotents with e = f + g when not primitive.
    std::optional<std::pair<AlgebraElement, AlgebraElement>> witness;
};

/// Decided inside the corner eAe. Throws Error(NotIdempotent) or
/// Error(ZeroIdempotent).
PrimitivityVerdict is_primitive(const AlgebraPtr& algebra, const AlgebraElement& e,
                                std::uint64_t budget = kDefaultBudget, std::uint64_t seed = 0);

}  // namespace krs

#endif  // KRS_IDEMPOTENT_HPP
