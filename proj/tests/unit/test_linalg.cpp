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
#include "krs/matrix.hpp"
#include "krs/random.hpp"
#include "support/brute.hpp"

using namespace krs;
using krs::testing::annihilates;
using krs::testing::brute_min_poly;
using krs::testing::brute_rank;

namespace {

Matrix random_matrix(PrimeField f, std::size_t r, std::size_t c, Rng& rng) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Residue>(rng.below(f.characteristic()));
    }
    return m;
}

// Low-rank matrices exercise the kernel paths more than uniform ones do.
Matrix random_low_rank(PrimeField f, std::size_t r, std::size_t c, Rng& rng) {
    const std::size_t k = rng.below(std::min(r, c) + 1);
    if (k == 0) return Matrix(f, r, c);
    return random_matrix(f, r, k, rng) * random_matrix(f, k, c, rng);
}

}  // namespace

TEST_CASE("row_reduce examples") {
    const PrimeField f2(2);
    auto rr = row_reduce(Matrix::identity(f2, 3));
    CHECK(rr.rank == 3);
    CHECK(rr.kernel_basis.rows() == 0);

    rr = row_reduce(Matrix(f2, 2, 2));
    CHECK(rr.rank == 0);
    CHECK(rr.kernel_basis == Matrix::identity(f2, 2));

    rr = row_reduce(Matrix(f2, {{1, 1}, {1, 1}}));
    CHECK(rr.rank == 1);
    CHECK(rr.kernel_basis == Matrix(f2, {{1, 1}}));
    CHECK(rr.rref == Matrix(f2, {{1, 1}, {0, 0}}));
}

TEST_CASE("row_reduce properties on random matrices") {
    Rng rng(3);
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
            const Matrix m = random_low_rank(f, r, c, rng);
            const auto rr = row_reduce(m);
            CHECK(rr.rank == brute_rank(m));
            CHECK(rr.rank + rr.kernel_basis.rows() == c);
            CHECK((m * rr.kernel_basis.transpose()).is_zero());
            if (rr.kernel_basis.rows() > 0) {
                CHECK(brute_rank(rr.kernel_basis) == rr.kernel_basis.rows());
                CHECK(row_reduce(rr.kernel_basis).rref == rr.kernel_basis);
            }
            CHECK(row_reduce(rr.rref).rref == rr.rref);
        }
    }
}

TEST_CASE("solve_linear") {
    const PrimeField f2(2), f5(5);
    const Vector b{1, 0, 1};
    CHECK(solve_linear(Matrix::identity(f2, 3), b) == b);
    CHECK_FALSE(solve_linear(Matrix(f2, {{1, 1}, {0, 0}}), Vector{0, 1}).has_value());
    CHECK(solve_linear(Matrix(f5, {{2}}), Vector{1}) == Vector{3});
    CHECK_THROWS_AS(solve_linear(Matrix(f5, {{2}}), Vector{1, 1}), Error);

    Rng rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        const Matrix a = random_low_rank(f5, 1 + rng.below(4), 1 + rng.below(4), rng);
        Vector rhs(a.rows());
        for (auto& x : rhs) x = static_cast<Residue>(rng.below(5));
        const auto x = solve_linear(a, rhs);
        const Matrix augmented = [&] {
            Matrix m(f5, a.rows(), a.cols() + 1);
            for (std::size_t i = 0; i < a.rows(); ++i) {
                for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
                m(i, a.cols()) = rhs[i];
            }
            return m;
        }();
        CHECK(x.has_value() == (brute_rank(augmented) == brute_rank(a)));
        if (x) CHECK(times_column(a, *x) == rhs);
    }
}

TEST_CASE("invert") {
    const PrimeField f2(2), f7(7);
    CHECK(invert(Matrix::identity(f2, 3)) == Matrix::identity(f2, 3));
    const Matrix swap(f2, {{0, 1}, {1, 0}});
    CHECK(invert(swap) == swap);
    try {
        invert(Matrix(f2, {{1, 1}, {1, 1}}));
        FAIL("expected Singular");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Singular);
    }
    try {
        invert(Matrix(f2, 2, 3));
        FAIL("expected NotSquare");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSquare);
    }

    Rng rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const Matrix m = random_matrix(f7, n, n, rng);
        const auto inv = try_invert(m);
        CHECK(inv.has_value() == (brute_rank(m) == n));
        if (inv) {
            CHECK((*inv * m).is_identity());
            CHECK((m * *inv).is_identity());
        }
    }
}

TEST_CASE("left kernel and echelon coordinates") {
    const PrimeField f3(3);
    Rng rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix m = random_low_rank(f3, 1 + rng.below(4), 1 + rng.below(4), rng);
        const EchelonBasis k = left_kernel(m);
        CHECK(k.dim() + rank(m) == m.rows());
        if (k.dim() > 0) CHECK((k.rows * m).is_zero());
        const EchelonBasis span = row_space(m);
        CHECK(span.dim() == rank(m));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const auto c = span.coordinates(m.row(i));
            REQUIRE(c.has_value());
            CHECK(row_times(*c, span.rows) == Vector(m.row(i).begin(), m.row(i).end()));
        }
    }
    const EchelonBasis line = row_space(Matrix(f3, {{1, 2, 0}}));
    CHECK_FALSE(line.coordinates(Vector{0, 0, 1}).has_value());
}

TEST_CASE("min_poly examples") {
    const PrimeField f2(2);
    CHECK(min_poly(Matrix::identity(f2, 3)) == Polynomial(f2, {1, 1}));
    CHECK(min_poly(Matrix(f2, {{0, 1}, {0, 0}})) == Polynomial(f2, {0, 0, 1}));
    const Matrix m(f2, {{0, 0}, {1, 1}});
    CHECK((m * m + m).is_zero());
    CHECK(min_poly(m) == Polynomial(f2, {0, 1, 1}));
    CHECK_THROWS_AS(min_poly(Matrix(f2, 1, 2)), Error);
}

TEST_CASE("min_poly agrees with brute-force enumeration") {
    Rng rng(31);
    for (std::uint64_t p : {2u, 3u}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + rng.below(3);
            const Matrix m = random_matrix(f, n, n, rng);
            const Polynomial mp = min_poly(m);
            CHECK(mp == brute_min_poly(m));
            CHECK(annihilates(mp, m));
            CHECK(evaluate(mp, m).is_zero());
        }
    }
    const PrimeField f5(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng.below(5);
        const Matrix m = random_low_rank(f5, n, n, rng);
        CHECK(annihilates(min_poly(m), m));
    }
}
