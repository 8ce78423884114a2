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

#include <algorithm>

#include "krs/error.hpp"
#include "krs/krs.hpp"
#include "krs/random.hpp"
#include "support/corpus.hpp"

using namespace krs;
using namespace krs::testing;

namespace {

ModulePtr vector_space(PrimeField f, std::size_t n) {
    return make_module(RightModule(ground_field_algebra(f), n, {Matrix::identity(f, n)}));
}

std::vector<std::size_t> dims(const Decomposition& d) {
    std::vector<std::size_t> out;
    for (const auto& s : d.summands) out.push_back(s->dim());
    return out;
}

Decomposition reversed(const Decomposition& d) {
    Decomposition r = d;
    std::reverse(r.summands.begin(), r.summands.end());
    std::reverse(r.injections.begin(), r.injections.end());
    std::reverse(r.projections.begin(), r.projections.end());
    std::reverse(r.locality.begin(), r.locality.end());
    return r;
}

void check_certificate(const Decomposition& d1, const Decomposition& d2, const EquivalenceCertificate& c) {
    REQUIRE(c.sigma.size() == d1.length());
    std::vector<bool> hit(c.sigma.size(), false);
    for (std::size_t j = 0; j < c.sigma.size(); ++j) {
        REQUIRE(c.sigma[j] < hit.size());
        CHECK_FALSE(hit[c.sigma[j]]);
        hit[c.sigma[j]] = true;
        CHECK(same_module(c.isos[j].source(), d1.summands[j]));
        CHECK(same_module(c.isos[j].target(), d2.summands[c.sigma[j]]));
        CHECK(c.isos[j].intertwines());
        CHECK(c.isos[j].is_isomorphism());
    }
}

// Left multiplication by an idempotent of the algebra, as an endomorphism
// of the regular module.
ModuleMorphism left_mult(const ModulePtr& reg, const AlgebraElement& e) {
    return ModuleMorphism(reg, reg, left_mul_matrix(e).transpose());
}

}  // namespace

TEST_CASE("krs_decompose examples") {
    const PrimeField f2(2);
    const auto ut = upper_triangular_algebra(f2, 2);
    auto d = krs_decompose(make_module(RightModule::zero(ut)));
    CHECK(d.length() == 0);
    CHECK(check_decomposition(d).ok());

    d = krs_decompose(regular_module(ut));
    auto ds = dims(d);
    std::sort(ds.begin(), ds.end());
    CHECK(ds == std::vector<std::size_t>{1, 2});
    CHECK(check_decomposition(d).ok());
    CHECK(d.conclusive());

    d = krs_decompose(vector_space(f2, 2));
    CHECK(dims(d) == std::vector<std::size_t>{1, 1});
    CHECK(check_decomposition(d).ok());

    const RightModule bad(ground_field_algebra(f2), 1, {Matrix(f2, {{0}})});
    CHECK_THROWS_AS(krs_decompose(make_module(bad)), Error);
}

TEST_CASE("krs_decompose on random modules") {
    Rng rng(101);
    for (const auto& [name, a] : module_algebras()) {
        INFO(name);
        for (int trial = 0; trial < 3; ++trial) {
            const auto m = random_module(a, 8, rng);
            const auto d = krs_decompose(m, rng.next());
            CHECK(check_decomposition(d).ok());
            std::size_t total = 0;
            for (const auto& s : d.summands) total += s->dim();
            CHECK(total == m->dim());
            CHECK(d.length() <= m->dim());
        }
    }
}

TEST_CASE("check_decomposition catches broken data") {
    const auto d = krs_decompose(regular_module(upper_triangular_algebra(PrimeField(3), 2)));
    REQUIRE(d.length() == 2);
    Decomposition broken = d;
    broken.projections[0] = broken.projections[0].scaled(2);
    CHECK_FALSE(check_decomposition(broken).biorthogonal);
    broken = d;
    broken.locality.pop_back();
    CHECK_FALSE(check_decomposition(broken).shapes);
    broken = d;
    broken.locality[0].local = false;
    CHECK_FALSE(check_decomposition(broken).all_local);
}

TEST_CASE("check_equivalence examples") {
    const auto ut = upper_triangular_algebra(PrimeField(2), 2);
    const auto reg = regular_module(ut);
    const auto d = krs_decompose(reg, 1);
    auto c = check_equivalence(d, d);
    CHECK(c.sigma == std::vector<std::size_t>{0, 1});
    for (const auto& iso : c.isos) CHECK(iso.matrix().is_identity());

    const auto r = reversed(d);
    c = check_equivalence(d, r);
    CHECK(c.sigma == std::vector<std::size_t>{1, 0});
    check_certificate(d, r, c);

    const auto d2 = krs_decompose(reg, 2);
    c = check_equivalence(d, d2, 5);
    check_certificate(d, d2, c);

    const auto shorter = krs_decompose(regular_module(f2_dual_numbers()));
    try {
        check_equivalence(d, shorter);
        FAIL("expected NotEquivalent");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotEquivalent);
    }

    // Same length, non-isomorphic summands.
    const auto s1 = character_module(ut, {1, 0, 0});
    const auto s2 = character_module(ut, {0, 0, 1});
    const std::vector<ModulePtr> p1{s1, s1}, p2{s2, s2};
    const auto a = krs_decompose(direct_sum(ut, p1).sum);
    const auto b = krs_decompose(direct_sum(ut, p2).sum);
    try {
        check_equivalence(a, b);
        FAIL("expected MatchingFailed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MatchingFailed);
    }
}

TEST_CASE("decompositions from different seeds are equivalent") {
    Rng rng(103);
    for (const auto& [name, a] : module_algebras()) {
        INFO(name);
        for (int trial = 0; trial < 2; ++trial) {
            const auto m = random_module(a, 8, rng);
            const auto d1 = krs_decompose(m, 1);
            const auto d2 = krs_decompose(m, 2);
            check_certificate(d1, d2, check_equivalence(d1, d2, 3));
        }
    }
}

TEST_CASE("idempotents_from_decomposition") {
    const PrimeField f2(2);
    const auto dual = f2_dual_numbers();
    auto set = idempotents_from_decomposition(krs_decompose(regular_module(dual)));
    REQUIRE(set.idempotents.size() == 1);
    CHECK(set.idempotents[0].is_one());

    const auto plane = vector_space(f2, 2);
    const auto d = krs_decompose(plane);
    set = idempotents_from_decomposition(d);
    REQUIRE(set.idempotents.size() == 2);
    CHECK(set.flags.all());
    CHECK(set.all_primitive());
    std::vector<Matrix> ms;
    for (const auto& e : set.idempotents) ms.push_back(set.end->to_morphism(e).matrix());
    CHECK(ms[0] + ms[1] == Matrix::identity(f2, 2));
    for (const auto& m : ms) CHECK(rank(m) == 1);
    const bool diagonal = (ms[0] == Matrix(f2, {{1, 0}, {0, 0}}) && ms[1] == Matrix(f2, {{0, 0}, {0, 1}})) ||
                          (ms[1] == Matrix(f2, {{1, 0}, {0, 0}}) && ms[0] == Matrix(f2, {{0, 0}, {0, 1}}));
    CHECK(diagonal);

    set = idempotents_from_decomposition(krs_decompose(regular_module(upper_triangular_algebra(f2, 2))));
    CHECK(set.idempotents.size() == 2);
    CHECK(set.flags.all());
    CHECK(set.all_primitive());

    set = idempotents_from_decomposition(krs_decompose(make_module(RightModule::zero(dual))));
    CHECK(set.idempotents.empty());
    CHECK_FALSE(set.end.has_value());

    Decomposition broken = d;
    broken.projections.pop_back();
    CHECK_THROWS_AS(idempotents_from_decomposition(broken), Error);
}

TEST_CASE("summands with local End give primitive idempotents") {
    Rng rng(107);
    for (const auto& [name, a] : module_algebras()) {
        INFO(name);
        const auto m = random_module(a, 7, rng);
        const auto d = krs_decompose(m, rng.next());
        const auto set = idempotents_from_decomposition(d);
        CHECK(set.flags.all());
        CHECK(set.all_primitive());
        CHECK(set.idempotents.size() == d.length());
    }
}

TEST_CASE("conjugator examples") {
    const PrimeField f2(2);
    const auto m2 = full_matrix_algebra(f2, 2);
    const std::vector<AlgebraElement> e{AlgebraElement::basis(m2, 0), AlgebraElement::basis(m2, 3)};

    auto c = conjugator(m2, e, e);
    CHECK(c.sigma == std::vector<std::size_t>{0, 1});
    CHECK(c.a.is_one());
    CHECK(check_conjugation(c));

    const std::vector<AlgebraElement> swapped{e[1], e[0]};
    c = conjugator(m2, e, swapped);
    CHECK(c.sigma == std::vector<std::size_t>{1, 0});
    CHECK(c.a.is_one());
    CHECK(check_conjugation(c));

    // g = [[1,1],[0,1]] = E11 + E12 + E22 is its own inverse over F_2.
    const AlgebraElement g(m2, Vector{1, 1, 0, 1});
    REQUIRE((g * g).is_one());
    const std::vector<AlgebraElement> f{g * e[0] * g, g * e[1] * g};
    c = conjugator(m2, e, f);
    CHECK(check_conjugation(c));
    for (std::size_t j = 0; j < 2; ++j) CHECK(c.a * e[j] * c.a_inv == f[c.sigma[j]]);
    CHECK((c.a * c.a_inv).is_one());

    const std::vector<AlgebraElement> incomplete{e[0]};
    try {
        conjugator(m2, incomplete, e);
        FAIL("expected NotCompleteOrthogonalPrimitive");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::NotCompleteOrthogonalPrimitive);
    }
    const std::vector<AlgebraElement> one{AlgebraElement::one(m2)};
    CHECK_THROWS_AS(conjugator(m2, one, one), Error);

    ConjugationCertificate tampered = c;
    tampered.a_inv = tampered.a_inv + AlgebraElement::basis(m2, 1);
    CHECK_FALSE(check_conjugation(tampered));
}

TEST_CASE("conjugator on random conjugates of decomposition idempotents") {
    Rng rng(109);
    for (const auto& [name, a] : lemma_corpus()) {
        INFO(name);
        const auto set = idempotents_from_decomposition(krs_decompose(regular_module(a)));
        // Through Phi, End(A_A) = A, so the e_j transport to A as e_j(1).
        std::vector<AlgebraElement> e;
        for (const auto& x : set.idempotents) {
            e.emplace_back(a, row_times(a->unit(), set.end->to_morphism(x).matrix()));
        }
        for (int trial = 0; trial < 5; ++trial) {
            Vector v(a->dim());
            for (auto& c : v) c = static_cast<Residue>(rng.below(a->field().characteristic()));
            const AlgebraElement u(a, v);
            if (!is_unit(u)) continue;
            const AlgebraElement ui = inverse(u);
            std::vector<AlgebraElement> f;
            for (const auto& x : e) f.push_back(u * x * ui);
            const auto c = conjugator(a, e, f, rng.next());
            CHECK(check_conjugation(c));
        }
    }
}

TEST_CASE("cancel_complement") {
    const PrimeField f2(2);
    const auto ut = upper_triangular_algebra(f2, 2);
    const auto reg = regular_module(ut);
    const auto d = krs_decompose(reg);
    REQUIRE(d.length() == 2);

    // X' = E22 A, the one-dimensional projective.
    const auto [e22, rest] = split_idempotent(left_mult(reg, AlgebraElement::basis(ut, 2)));
    REQUIRE(e22.image->dim() == 1);
    auto c = cancel_complement(d, e22);
    REQUIRE(c.indices.size() == 1);
    CHECK(d.summands[c.indices[0]]->dim() == 2);
    CHECK(c.iso.is_isomorphism());
    CHECK(c.iso.intertwines());

    const auto [whole, none] = split_idempotent(ModuleMorphism::identity(reg));
    c = cancel_complement(d, whole);
    CHECK(c.indices.empty());
    CHECK(c.iso.is_isomorphism());

    c = cancel_complement(d, none);
    CHECK(c.indices == std::vector<std::size_t>{0, 1});
    CHECK(c.iso.is_isomorphism());

    const auto other = regular_module(f2_dual_numbers());
    const auto [o1, o2] = split_idempotent(ModuleMorphism::identity(other));
    CHECK_THROWS_AS(cancel_complement(d, o1), Error);
}

TEST_CASE("cancel_complement for sampled idempotents of End") {
    Rng rng(113);
    for (const auto& [name, a] : module_algebras()) {
        INFO(name);
        const auto m = random_module(a, 6, rng);
        const auto d = krs_decompose(m, rng.next());
        const auto end = end_algebra(m);
        const auto set = idempotents_from_decomposition(d);
        AlgebraElement partial = AlgebraElement::zero(end.algebra());
        for (const auto& e : set.idempotents) {
            partial = partial + e;
            const auto [x, y] = split_idempotent(end.to_morphism(partial));
            for (const SplitDatum* sd : {&x, &y}) {
                const auto c = cancel_complement(d, *sd, rng.next());
                CHECK(c.iso.is_isomorphism());
                CHECK(c.iso.intertwines());
                CHECK(c.indices.size() <= d.length());
            }
        }
    }
}

TEST_CASE("verify_main_theorem") {
    const PrimeField f2(2);
    const std::vector<ModulePtr> zero{make_module(RightModule::zero(f2_dual_numbers()))};
    auto report = verify_main_theorem(zero);
    CHECK(report.ok());

    const std::vector<ModulePtr> corpus{regular_module(f2_dual_numbers()), regular_module(f2_times_f2()),
                                        regular_module(upper_triangular_algebra(f2, 2))};
    report = verify_main_theorem(corpus);
    CHECK(report.ok());
    const std::size_t lengths[] = {1, 2, 2};
    for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(krs_decompose(corpus[i]).length() == lengths[i]);

    Rng rng(127);
    std::vector<ModulePtr> randoms;
    for (const auto& [name, a] : module_algebras()) randoms.push_back(random_module(a, 8, rng));
    report = verify_main_theorem(randoms, 9);
    for (const auto& c : report.checks) {
        INFO(c.module_index << " " << c.name << ": " << c.detail);
        CHECK(c.passed);
    }
}

TEST_CASE("regular modules of endomorphism algebras decompose") {
    Rng rng(131);
    for (const auto& [name, a] : module_algebras()) {
        INFO(name);
        const auto m = random_module(a, 4, rng);
        const auto end = end_algebra(m);
        const auto d = krs_decompose(regular_module(end.algebra()));
        CHECK(check_decomposition(d).ok());
    }
}
