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

#ifndef KRS_TESTS_CORPUS_HPP
#define KRS_TESTS_CORPUS_HPP

#include <string>
#include <vector>

#include "krs/algebra.hpp"
#include "krs/module.hpp"
#include "krs/random.hpp"

namespace krs::testing {

struct NamedAlgebra {
    std::string name;
    AlgebraPtr algebra;
};

AlgebraPtr f2_dual_numbers();       // F_2[x]/(x^2)
AlgebraPtr f2_times_f2();           // F_2 x F_2
AlgebraPtr f4_over_f2();            // F_2[t]/(t^2+t+1)
AlgebraPtr kronecker_algebra(PrimeField field);  // path algebra of 1 => 2

/// F_2, F_3, F_2[x]/(x^2), F_2 x F_2, F_4, M_2(F_2), UT_2(F_2), UT_2(F_3).
std::vector<NamedAlgebra> lemma_corpus();

/// Algebras over F_2, F_3 and F_5 used to generate random modules.
std::vector<NamedAlgebra> module_algebras();

/// Random module of dimension in [1, max_dim]: subquotients of free
/// modules, direct sums of those, and a random change of basis.
ModulePtr random_module(const AlgebraPtr& algebra, std::size_t max_dim, Rng& rng);

/// Random invertible n x n matrix.
Matrix random_invertible(PrimeField field, std::size_t n, Rng& rng);

/// One-dimensional module on which b_i acts by chi[i].
ModulePtr character_module(const AlgebraPtr& algebra, const std::vector<std::int64_t>& chi);

}  // namespace krs::testing

#endif
