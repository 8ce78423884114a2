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

#include <doctest.h>

#include "krs/error.hpp"
#include "krs/idempotent.hpp"
#include "krs/random.hpp"
#include "support/brute.hpp"
#include "support/corpus.hpp"

using namespace krs;
using namespace krs::testing;

namespace {

ModulePtr vector_space(PrimeField f, std::size_t n) {
    return make_module(RightModule(ground_field_algebra(f), n, {Matrix::identity(f, n)}));
}

void check_round_trip(const ModuleMorphism& e) {
    const auto [first, second] = split_idempotent(e);
    CHECK(first.holds());
    CHECK(second.holds());
    const auto& m = e.source();
    CHECK(first.image->dim() + second.image->dim() == m->dim());
    const Matrix block = vstack(first.s.matrix(), second.s.matrix());
    CHECK(rank(block) == m->dim());
    const std::vector<ModulePtr> parts{first.image, second.image};
    const auto sum = direct_sum(m->algebra(), parts);
    CHECK(ModuleMorphism(sum.sum, m, block).intertwines());
}

}  // namespace

TEST_CASE("split_idempotent examples") {
    const PrimeField f2(2);
    const auto x = vector_space(f2, 2);
    auto [a, b] = split_idempotent(ModuleMorphism::zero(x, x));
    CHECK(a.image->dim() == 0);
    CHECK(b.image->dim() == 2);

    auto [c, d] = split_idempotent(ModuleMorphism::identity(x));
    CHECK(c.image->dim() == 2);
    CHECK(c.r.matrix().is_identity());
    CHECK(c.s.matrix().is_identity());
    CHECK(d.image->dim() == 0);

    const ModuleMorphism diag(x, x, Matrix(f2, {{1, 0}, {0, 0}}));
    check_round_trip(diag);
    auto [g, h] = split_idempotent(diag);
    CHECK(g.image->dim() == 1);
    CHECK(h.image->dim() == 1);

    try {
        split_idempotent(ModuleMorphism(x, x, Matrix(f2, {{0, 1}, {0, 0}})));
        FAIL("expected NotIdempotent");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotIdempotent);
    }
}

TEST_CASE("split round-trips every idempotent of small endomorphism algebras") {
    Rng rng(89);
    for (const auto& [name, a] : module_algebras()) {
        INFO(name);
        for (int trial = 0; trial < 2; ++trial) {
            const auto m = random_module(a, 5, rng);
            const auto end = end_algebra(m);
            if (end.algebra()->element_count(4097) > 4096) continue;
            for (const auto& e : brute_idempotents(*end.algebra())) {
                check_round_trip(end.to_morphism(AlgebraElement(end.algebra(), Vector(e.begin(), e.end()))));
            }
        }
    }
}

TEST_CASE("find_nontrivial_idempotent") {
    const PrimeField f2(2);
    const auto prod = f2_times_f2();
    auto w = find_nontrivial_idempotent(prod, 0, 16);
    REQUIRE(w.has_value());
    CHECK((*w == AlgebraElement(prod, Vector{1, 0}) || *w == AlgebraElement(prod, Vector{0, 1})));
    CHECK(left_mul_matrix(AlgebraElement(prod, Vector{1, 0})) == Matrix(f2, {{1, 0}, {0, 0}}));

    CHECK_FALSE(find_nontrivial_idempotent(f4_over_f2(), 0, 16).has_value());
    CHECK(brute_idempotents(*f4_over_f2()).size() == 2);

    const auto m2 = full_matrix_algebra(f2, 2);
    w = find_nontrivial_idempotent(m2, 0, 16);
    REQUIRE(w.has_value());
    CHECK(w->is_idempotent());
    CHECK(rank(Matrix(f2, 2, 2, w->coeffs())) == 1);
    CHECK(brute_idempotents(*m2).size() == 8);

    std::vector<Residue> c(8, 0);
    c[(1 * 2 + 1) * 2 + 1] = 1;
    CHECK_THROWS_AS(find_nontrivial_idempotent(make_algebra(f2, 2, c, Vector{1, 0}), 0, 4), Error);
}

TEST_CASE("is_local examples") {
    auto v = is_local(f2_dual_numbers());
    CHECK(v.local);
    CHECK(v.method == LocalityMethod::Exhaustive);
    CHECK(v.elements_scanned == 4);
    CHECK(v.conclusive());

    v = is_local(f2_times_f2());
    CHECK_FALSE(v.local);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == AlgebraElement(f2_times_f2(), Vector{1, 0}));

    for (std::uint64_t p : {2u, 3u, 7u}) CHECK(is_local(ground_field_algebra(PrimeField(p))).local);
}

TEST_CASE("is_local agrees with the idempotent count") {
    for (const auto& [name, a] : lemma_corpus()) {
        INFO(name);
        const auto v = is_local(a);
        CHECK(v.method == LocalityMethod::Exhaustive);
        CHECK(v.local == (brute_idempotents(*a).size() == 2));
        if (!v.local) {
            CHECK(v.witness->is_idempotent());
            CHECK_FALSE(v.witness->is_zero());
            CHECK_FALSE(v.witness->is_one());
        }
    }
}

TEST_CASE("Monte Carlo locality above the budget") {
    const PrimeField f5(5);
    // F_5[t]/(t^2+2) is a field with 25 elements.
    const auto field25 = quotient_polynomial_algebra(Polynomial(f5, {2, 0, 1}));
    const auto v = is_local(field25, 16, 3);
    CHECK(v.local);
    CHECK(v.method == LocalityMethod::MonteCarlo);
    CHECK_FALSE(v.conclusive());
    CHECK(v.trials == monte_carlo_trials(16));
    CHECK(v.failure_bound > 0.0);
    CHECK(v.failure_bound < 1e-3);

    const auto split = is_local(upper_triangular_algebra(f5, 3), 16, 3);
    CHECK_FALSE(split.local);
    CHECK(split.conclusive());
    CHECK(to_string(LocalityMethod::MonteCarlo) == "monte-carlo");
}

TEST_CASE("is_primitive examples") {
    const PrimeField f2(2);
    const auto dual = f2_dual_numbers();
    CHECK(is_primitive(dual, AlgebraElement::one(dual)).primitive);

    const auto prod = f2_times_f2();
    const auto v = is_primitive(prod, AlgebraElement::one(prod));
    CHECK_FALSE(v.primitive);
    REQUIRE(v.witness.has_value());
    const auto& [f, g] = *v.witness;
    CHECK(f + g == AlgebraElement::one(prod));
    CHECK((f * g).is_zero());
    CHECK((g * f).is_zero());
    CHECK_FALSE(f.is_zero());
    CHECK_FALSE(g.is_zero());

    const auto m2 = full_matrix_algebra(f2, 2);
    CHECK(is_primitive(m2, AlgebraElement::basis(m2, 0)).primitive);
    CHECK_THROWS_AS(is_primitive(m2, AlgebraElement::zero(m2)), Error);
    CHECK_THROWS_AS(is_primitive(m2, AlgebraElement::basis(m2, 1)), Error);
}

TEST_CASE("is_primitive agrees with orthogonal decompositions found by brute force") {
    for (const auto& [name, a] : lemma_corpus()) {
        const auto idems = brute_idempotents(*a);
        for (const auto& e : idems) {
            const AlgebraElement ee(a, Vector(e.begin(), e.end()));
            if (ee.is_zero()) continue;
            INFO(name);
            bool splits = false;
            for (const auto& f : idems) {
                const AlgebraElement ff(a, Vector(f.begin(), f.end()));
                const AlgebraElement gg = ee - ff;
                if (ff.is_zero() || gg.is_zero() || !gg.is_idempotent()) continue;
                if ((ff * gg).is_zero() && (gg * ff).is_zero()) splits = true;
            }
            const auto v = is_primitive(a, ee);
            CHECK(v.primitive == !splits);
            if (v.witness) {
                CHECK(v.witness->first.is_idempotent());
                CHECK(v.witness->second.is_idempotent());
                CHECK(v.witness->first + v.witness->second == ee);
            }
        }
    }
}
