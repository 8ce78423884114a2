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

#include "support/corpus.hpp"

namespace krs::testing {

AlgebraPtr f2_dual_numbers() { return quotient_polynomial_algebra(Polynomial(PrimeField(2), {0, 0, 1})); }

AlgebraPtr f2_times_f2() {
    const PrimeField f2(2);
    return direct_product(*ground_field_algebra(f2), *ground_field_algebra(f2));
}

AlgebraPtr f4_over_f2() { return quotient_polynomial_algebra(Polynomial(PrimeField(2), {1, 1, 1})); }

AlgebraPtr kronecker_algebra(PrimeField field) {
    // e1 = E11, e2 = E22 + E33, arrows E12 and E13.
    std::vector<Matrix> basis;
    basis.push_back(Matrix(field, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
    basis.push_back(Matrix(field, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    basis.push_back(Matrix(field, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
    basis.push_back(Matrix(field, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
    return algebra_from_matrices(field, basis, {"e1", "e2", "a", "b"});
}

std::vector<NamedAlgebra> lemma_corpus() {
    const PrimeField f2(2), f3(3);
    return {
        {"F2", ground_field_algebra(f2)},
        {"F3", ground_field_algebra(f3)},
        {"F2[x]/(x^2)", f2_dual_numbers()},
        {"F2xF2", f2_times_f2()},
        {"F4", f4_over_f2()},
        {"M2(F2)", full_matrix_algebra(f2, 2)},
        {"UT2(F2)", upper_triangular_algebra(f2, 2)},
        {"UT2(F3)", upper_triangular_algebra(f3, 2)},
    };
}

std::vector<NamedAlgebra> module_algebras() {
    const PrimeField f2(2), f3(3), f5(5);
    return {
        {"UT2(F2)", upper_triangular_algebra(f2, 2)},
        {"UT3(F2)", upper_triangular_algebra(f2, 3)},
        {"Kronecker(F2)", kronecker_algebra(f2)},
        {"F2[C3]", cyclic_group_algebra(f2, 3)},
        {"F2[x]/(x^2)", f2_dual_numbers()},
        {"M2(F2)", full_matrix_algebra(f2, 2)},
        {"UT2(F3)", upper_triangular_algebra(f3, 2)},
        {"F3[C3]", cyclic_group_algebra(f3, 3)},
        {"Kronecker(F3)", kronecker_algebra(f3)},
        {"UT2(F5)", upper_triangular_algebra(f5, 2)},
        {"F5[C2]", cyclic_group_algebra(f5, 2)},
        {"F5[x]/(x^2)", quotient_polynomial_algebra(Polynomial(f5, {0, 0, 1}))},
    };
}

Matrix random_invertible(PrimeField field, std::size_t n, Rng& rng) {
    for (;;) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Residue>(rng.below(field.characteristic()));
        }
        if (rank(m) == n) return m;
    }
}

namespace {

Matrix random_rows(PrimeField field, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<Residue>(rng.below(field.characteristic()));
    }
    return m;
}

// A subquotient of a free module of rank 1 or 2, of dimension in [1, max_dim],
// or nullptr when none turned up (some algebras have no small modules).
ModulePtr random_piece(const AlgebraPtr& algebra, std::size_t max_dim, Rng& rng) {
    const auto& f = algebra->field();
    const ModulePtr reg = regular_module(algebra);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const std::size_t rank = 1 + rng.below(2);
        std::vector<ModulePtr> copies(rank, reg);
        ModulePtr m = direct_sum(algebra, copies).sum;
        // Cyclic submodule, then optionally a quotient by another cyclic one.
        m = generated_submodule(m, random_rows(f, 1 + rng.below(2), m->dim(), rng)).module;
        for (int step = 0; step < 3 && m->dim() > 0; ++step) {
            if (m->dim() <= max_dim && rng.below(2) == 0) break;
            const auto sub = generated_submodule(m, random_rows(f, 1, m->dim(), rng));
            if (sub.module->dim() == m->dim() || sub.module->dim() == 0) continue;
            if (rng.below(2) == 0) {
                m = quotient_module(m, sub.inclusion.matrix()).module;
            } else {
                m = sub.module;
            }
        }
        if (m->dim() >= 1 && m->dim() <= max_dim) return m;
    }
    return nullptr;
}

}  // namespace

ModulePtr random_module(const AlgebraPtr& algebra, std::size_t max_dim, Rng& rng) {
    std::vector<ModulePtr> parts;
    std::size_t total = 0;
    const std::size_t wanted = 1 + rng.below(3);
    while (parts.size() < wanted && total < max_dim) {
        ModulePtr piece = random_piece(algebra, max_dim - total, rng);
        if (!piece) {
            if (!parts.empty()) break;
            continue;
        }
        total += piece->dim();
        parts.push_back(std::move(piece));
    }
    ModulePtr sum = direct_sum(algebra, parts).sum;
    return change_basis(sum, random_invertible(algebra->field(), sum->dim(), rng)).source();
}

ModulePtr character_module(const AlgebraPtr& algebra, const std::vector<std::int64_t>& chi) {
    std::vector<Matrix> action;
    for (auto c : chi) action.push_back(Matrix(algebra->field(), {{c}}));
    return make_module(RightModule(algebra, 1, std::move(action)));
}

}  // namespace krs::testing
