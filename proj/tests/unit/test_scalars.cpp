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
#include "krs/polynomial.hpp"
#include "krs/prime_field.hpp"
#include "krs/random.hpp"
#include "support/brute.hpp"

using namespace krs;
using krs::testing::brute_inverse;
using krs::testing::brute_irreducible;

namespace {

Polynomial reassemble(const std::vector<PolyFactor>& factors, PrimeField field) {
    Polynomial out = Polynomial::constant(field, 1);
    for (const auto& f : factors) {
        for (std::size_t i = 0; i < f.multiplicity; ++i) out = out * f.irreducible;
    }
    return out;
}

Polynomial random_monic(PrimeField field, int degree, Rng& rng) {
    std::vector<std::int64_t> c;
    for (int i = 0; i < degree; ++i) c.push_back(static_cast<std::int64_t>(rng.below(field.characteristic())));
    c.push_back(1);
    return Polynomial(field, c);
}

}  // namespace

TEST_CASE("prime field construction") {
    CHECK(is_prime(2));
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(PrimeField(4), Error);
    CHECK_THROWS_AS(PrimeField(1), Error);
    CHECK_NOTHROW(PrimeField(2147483647));
}

TEST_CASE("scalar inverse") {
    const PrimeField f5(5), f7(7);
    CHECK(scalar_inverse(Scalar(f7, 1)).value() == 1);
    CHECK(scalar_inverse(Scalar(f5, 2)).value() == 3);
    CHECK(scalar_inverse(Scalar(f5, 4)).value() == 4);
    CHECK(Scalar(f5, -3).value() == 2);

    try {
        scalar_inverse(Scalar(f5, 0));
        FAIL("expected ZeroInverse");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroInverse);
    }

    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 101}) {
        const PrimeField f(static_cast<std::uint64_t>(p));
        for (std::int64_t a = 1; a < p; ++a) {
            const Scalar s(f, a);
            CHECK(scalar_inverse(s).value() == brute_inverse(a, p));
            CHECK(scalar_inverse(scalar_inverse(s)) == s);
        }
    }
}

TEST_CASE("large prime arithmetic") {
    const PrimeField f(2147483647);
    const Residue a = 2147483646;
    CHECK(f.mul(a, a) == 1);
    CHECK(f.mul(f.inv(12345), 12345) == 1);
    CHECK(f.add(a, 5) == 4);
}

TEST_CASE("polynomial gcd") {
    const PrimeField f2(2), f3(3);
    const Polynomial t = Polynomial::t(f2);
    const Polynomial f(f3, {1, 0, 2});  // 2t^2 + 1
    CHECK(poly_gcd(f, Polynomial(f3)) == f.monic());
    CHECK(poly_gcd(Polynomial(f2, {0, 1, 1}), t) == t);
    CHECK(poly_gcd(Polynomial(f2, {1, 1}), t).is_one());
    CHECK(poly_gcd(Polynomial(f2), Polynomial(f2)).is_zero());
    CHECK_THROWS_AS(poly_gcd(Polynomial(f2, {1, 1}), Polynomial(f3, {1, 1})), Error);
}

TEST_CASE("polynomial extended gcd gives a Bezout identity") {
    Rng rng(7);
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 30; ++trial) {
            const Polynomial a = random_monic(f, 1 + static_cast<int>(rng.below(5)), rng);
            const Polynomial b = random_monic(f, 1 + static_cast<int>(rng.below(5)), rng);
            const auto eg = poly_ext_gcd(a, b);
            CHECK(eg.u * a + eg.v * b == eg.gcd);
            CHECK((a % eg.gcd).is_zero());
            CHECK((b % eg.gcd).is_zero());
        }
    }
}

TEST_CASE("poly_factor examples") {
    const PrimeField f2(2), f3(3);
    auto fs = poly_factor(Polynomial(f2, {0, 1, 1}));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].irreducible == Polynomial(f2, {0, 1}));
    CHECK(fs[0].multiplicity == 1);
    CHECK(fs[1].irreducible == Polynomial(f2, {1, 1}));
    CHECK(fs[1].multiplicity == 1);

    fs = poly_factor(Polynomial(f2, {1, 0, 1}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].irreducible == Polynomial(f2, {1, 1}));
    CHECK(fs[0].multiplicity == 2);

    fs = poly_factor(Polynomial::t(f3));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].irreducible == Polynomial::t(f3));

    CHECK_THROWS_AS(poly_factor(Polynomial(f3, {1, 2})), Error);
    CHECK_THROWS_AS(poly_factor(Polynomial(f3)), Error);
    CHECK_THROWS_AS(poly_factor(Polynomial::constant(f3, 1)), Error);
}

TEST_CASE("poly_factor reassembles random inputs into sorted irreducibles") {
    Rng rng(11);
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 40; ++trial) {
            // Products of small random factors give repeated and mixed degrees.
            Polynomial g = random_monic(f, 1 + static_cast<int>(rng.below(3)), rng);
            const auto extra = rng.below(3);
            for (std::uint64_t i = 0; i < extra; ++i) g = g * random_monic(f, 1 + static_cast<int>(rng.below(3)), rng);
            const auto fs = poly_factor(g, rng.next());
            CHECK(reassemble(fs, f) == g);
            for (std::size_t i = 0; i < fs.size(); ++i) {
                CHECK(fs[i].irreducible.is_monic());
                CHECK(brute_irreducible(fs[i].irreducible));
                if (i > 0) CHECK(canonical_less(fs[i - 1].irreducible, fs[i].irreducible));
            }
        }
    }
}

TEST_CASE("poly_factor result does not depend on the seed") {
    const PrimeField f(3);
    const Polynomial g = Polynomial(f, {1, 0, 1}) * Polynomial(f, {2, 1, 1}) * Polynomial(f, {1, 1});
    const auto a = poly_factor(g, 1);
    const auto b = poly_factor(g, 99);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].irreducible == b[i].irreducible);
}

TEST_CASE("crt_split_polynomial") {
    const PrimeField f2(2), f5(5);
    const Polynomial m(f2, {0, 1, 1});  // t(t+1); factor order t, t+1
    const std::size_t second = 1, first = 0;
    CHECK(crt_split_polynomial(m, std::span<const std::size_t>(&second, 1)) == Polynomial::t(f2));
    CHECK(crt_split_polynomial(m, std::span<const std::size_t>(&first, 1)) == Polynomial(f2, {1, 1}));

    const Polynomial m5 = Polynomial(f5, {0, 1}) * Polynomial(f5, {-1, 1}) * Polynomial(f5, {-2, 1});
    const auto fs = poly_factor(m5);
    std::size_t idx = 0;
    for (; idx < fs.size(); ++idx) {
        if (fs[idx].irreducible == Polynomial(f5, {-1, 1})) break;
    }
    REQUIRE(idx < fs.size());
    const Polynomial h = crt_split_polynomial(m5, std::span<const std::size_t>(&idx, 1));
    CHECK(h.evaluate(1) == 1);
    CHECK(h.evaluate(0) == 0);
    CHECK(h.evaluate(2) == 0);
    CHECK(h.degree() < m5.degree());

    try {
        crt_split_polynomial(Polynomial(f2, {1, 0, 1}), std::span<const std::size_t>(&first, 1));
        FAIL("expected NoCoprimeSplit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoCoprimeSplit);
    }
    const std::size_t both[] = {0, 1};
    CHECK_THROWS_AS(crt_split_polynomial(m, both), Error);
    const std::size_t out_of_range = 5;
    CHECK_THROWS_AS(crt_split_polynomial(m, std::span<const std::size_t>(&out_of_range, 1)), Error);
}

TEST_CASE("crt projector is idempotent modulo m") {
    Rng rng(5);
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 30; ++trial) {
            Polynomial m = random_monic(f, 1 + static_cast<int>(rng.below(3)), rng);
            m = m * random_monic(f, 1 + static_cast<int>(rng.below(3)), rng);
            const auto fs = poly_factor(m);
            if (fs.size() < 2) continue;
            const std::size_t pick = rng.below(fs.size());
            const Polynomial h = crt_split_polynomial(m, std::span<const std::size_t>(&pick, 1));
            CHECK(((h * h - h) % m).is_zero());
            Polynomial chosen = Polynomial::constant(f, 1);
            for (std::size_t i = 0; i < fs[pick].multiplicity; ++i) chosen = chosen * fs[pick].irreducible;
            CHECK(((h - Polynomial::constant(f, 1)) % chosen).is_zero());
            CHECK((h % (m / chosen)).is_zero());
        }
    }
}
