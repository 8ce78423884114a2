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

#ifndef KRS_ORACLE_HPP
#define KRS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "krs/algebra.hpp"
#include "krs/krs.hpp"
#include "krs/module.hpp"

namespace krs {

// Exhaustive scans over every element of an algebra. Nothing here draws
// random numbers.

struct OracleBudget {
    std::uint64_t max_elements = 65536;
};

/// All e with e^2 = e, in lexicographic order of coefficient vectors
/// (coefficient 0 most significant). Throws Error(BudgetExceeded).
std::vector<AlgebraElement> enumerate_idempotents(const AlgebraPtr& algebra, OracleBudget budget = {});

struct OraclePrimitivity {
    bool primitive = false;
    /// First orthogonal pair of nonzero idempotents with f + g = e.
    std::optional<std::pair<AlgebraElement, AlgebraElement>> witness;
};

/// Raw scan: e = 0 comes out primitive. Throws Error(NotIdempotent) or
/// Error(BudgetExceeded).
OraclePrimitivity oracle_is_primitive(const AlgebraPtr& algebra, const AlgebraElement& e, OracleBudget budget = {});

/// Splits along the first nontrivial idempotent of End(M) in enumeration
/// order until every summand has only 0 and 1. Throws
/// Error(BudgetExceeded) or Error(InvalidModule).
Decomposition oracle_decompose(const ModulePtr& m, OracleBudget budget = {});

struct Lemma3Entry {
    AlgebraElement e;
    bool primitive = false;       // no orthogonal splitting e = f + g
    bool corner_trivial = false;  // eAe has exactly the idempotents 0 and e
    bool indecomposable = false;  // eA has oracle KRS length 1
    bool agree() const noexcept { return primitive == corner_trivial && corner_trivial == indecomposable; }
};

struct Lemma3Report {
    std::vector<AlgebraElement> idempotents;
    std::vector<Lemma3Entry> entries;  // one per nonzero idempotent
    bool ok() const noexcept;
};

/// Throws Error(BudgetExceeded) or Error(InvalidAlgebra).
Lemma3Report lemma3_check(const AlgebraPtr& algebra, OracleBudget budget = {});

}  // namespace krs

#endif  // KRS_ORACLE_HPP
