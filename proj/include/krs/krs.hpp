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

#ifndef KRS_KRS_HPP
#define KRS_KRS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "krs/algebra.hpp"
#include "krs/idempotent.hpp"
#include "krs/module.hpp"

namespace krs {

/// X = X_1 + ... + X_n with injections i_j: X_j -> X, projections
/// p_j: X -> X_j and a locality verdict for each End(X_j).
struct Decomposition {
    ModulePtr parent;
    std::vector<ModulePtr> summands;
    std::vector<ModuleMorphism> injections;
    std::vector<ModuleMorphism> projections;
    std::vector<LocalityVerdict> locality;

    std::size_t length() const noexcept { return summands.size(); }
    /// Every verdict is Local and exhaustive.
    bool conclusive() const noexcept;
};

struct DecompositionCheck {
    bool shapes = true;
    bool intertwining = true;
    /// p_j o i_l = delta_jl id.
    bool biorthogonal = true;
    /// sum_j i_j o p_j = id.
    bool complete = true;
    bool all_local = true;
    bool ok() const noexcept { return shapes && intertwining && biorthogonal && complete && all_local; }
    std::string describe() const;
};

/// Exact recheck of the Decomposition invariants.
DecompositionCheck check_decomposition(const Decomposition& d);

/// Recursive splitting along nontrivial idempotents of End(M). Child
/// seeds are derived from the parent seed and the branch index. A Local
/// verdict above the budget is Monte Carlo and leaves conclusive() false.
/// Throws Error(InvalidModule).
Decomposition krs_decompose(const ModulePtr& m, std::uint64_t seed = 0, std::uint64_t budget = kDefaultBudget);

/// sigma is 0-based: isos[j] maps summand j of the first decomposition
/// onto summand sigma[j] of the second.
struct EquivalenceCertificate {
    std::vector<std::size_t> sigma;
    std::vector<ModuleMorphism> isos;
};

/// Throws Error(NotEquivalent) when the lengths differ,
/// Error(IsoSearchInconclusive) when an edge could not be decided and
/// Error(MatchingFailed) when no perfect matching exists.
EquivalenceCertificate check_equivalence(const Decomposition& d1, const Decomposition& d2, std::uint64_t seed = 0);

/// The e_j = i_j o p_j as elements of End(parent), with their primitivity
/// verdicts. `end` is empty for the zero module.
struct IdempotentSet {
    std::optional<EndAlgebra> end;
    std::vector<AlgebraElement> idempotents;
    std::vector<PrimitivityVerdict> primitivity;
    IdempotentSetFlags flags;
    bool all_primitive() const noexcept;
};

/// Throws Error(InvalidDecomposition) if the decomposition fails its
/// check or some verdict is not Local.
IdempotentSet idempotents_from_decomposition(const Decomposition& d, std::uint64_t budget = kDefaultBudget,
                                             std::uint64_t seed = 0);

/// f[sigma[j]] = a e[j] a_inv for all j, and a a_inv = a_inv a = 1.
struct ConjugationCertificate {
    AlgebraPtr algebra;
    std::vector<AlgebraElement> e;
    std::vector<AlgebraElement> f;
    std::vector<std::size_t> sigma;
    AlgebraElement a;
    AlgebraElement a_inv;
};

/// Exact recheck of the certificate equations.
bool check_conjugation(const ConjugationCertificate& c);

/// Matches e_j A with isomorphic f_l A, takes x_j = theta(e_j) and
/// y_j = theta^-1(f_l) for the matching iso theta, and returns
/// a = sum x_j, a_inv = sum y_j. Throws
/// Error(NotCompleteOrthogonalPrimitive) or Error(NoMatching).
ConjugationCertificate conjugator(const AlgebraPtr& algebra, std::span<const AlgebraElement> e,
                                  std::span<const AlgebraElement> f, std::uint64_t seed = 0,
                                  std::uint64_t budget = kDefaultBudget);

/// Summands X_j (j in indices) of a decomposition of X together with a
/// direct summand X' such that X = X_j1 + ... + X_jt + X' internally.
struct CancellationCertificate {
    std::vector<std::size_t> indices;
    /// Parts are the selected summands followed by X'.
    DirectSum sum;
    /// sum -> parent, built from the injections and the split inclusion.
    ModuleMorphism iso;
};

/// X' is the image of `split`; t = n - (KRS length of X'). Throws
/// Error(InvalidArgument) when the split is not on the decomposed module
/// and Error(MatchingFailed) if no complement is found.
CancellationCertificate cancel_complement(const Decomposition& d, const SplitDatum& split, std::uint64_t seed = 0,
                                          std::uint64_t budget = kDefaultBudget);

struct TheoremCheck {
    std::size_t module_index = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    bool ok() const noexcept;
};

/// Per module: a KRS decomposition exists; sampled idempotents of End
/// split and reassemble; End is local iff the KRS length is 1, for the
/// module and for each summand; the length equals the size of the
/// complete primitive orthogonal idempotent set.
TheoremReport verify_main_theorem(std::span<const ModulePtr> corpus, std::uint64_t seed = 0,
                                  std::uint64_t budget = kDefaultBudget);

}  // namespace krs

#endif  // KRS_KRS_HPP
