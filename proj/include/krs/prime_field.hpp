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

#ifndef KRS_PRIME_FIELD_HPP
#define KRS_PRIME_FIELD_HPP

#include <cstdint>
#include <ostream>

#include "krs/error.hpp"

namespace krs {

/// Residue type used for all stored field elements. Values are always
/// fully reduced, i.e. in [0, p).
using Residue = std::uint32_t;

/// The prime field F_p for 2 <= p <= 2^31 - 1.
///
/// A PrimeField is a small value type; copies compare equal exactly when
/// they have the same characteristic. Every arithmetic helper expects
/// reduced inputs and returns reduced outputs.
class PrimeField {
public:
    static constexpr std::uint64_t kMaxCharacteristic = (std::uint64_t{1} << 31) - 1;

    /// Throws Error(NotPrime) unless p is a prime in the supported range.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t characteristic() const noexcept { return p_; }

    Residue reduce(std::int64_t v) const noexcept {
        const auto p = static_cast<std::int64_t>(p_);
        std::int64_t r = v % p;
        return static_cast<Residue>(r < 0 ? r + p : r);
    }
    Residue reduce_unsigned(std::uint64_t v) const noexcept { return static_cast<Residue>(v % p_); }

    Residue add(Residue a, Residue b) const noexcept {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Residue>(s >= p_ ? s - p_ : s);
    }
    Residue sub(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(a >= b ? a - b : p_ - (b - a));
    }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : static_cast<Residue>(p_ - a); }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>((std::uint64_t{a} * b) % p_);
    }
    /// a + b*c
    Residue mul_add(Residue a, Residue b, Residue c) const noexcept {
        return static_cast<Residue>((std::uint64_t{a} + std::uint64_t{b} * c) % p_);
    }
    Residue pow(Residue a, std::uint64_t e) const noexcept;
    /// Throws Error(ZeroInverse) for a == 0.
    Residue inv(Residue a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// A field element bundled with its field.
class Scalar {
public:
    Scalar(PrimeField field, std::int64_t value) : field_(field), value_(field.reduce(value)) {}

    const PrimeField& field() const noexcept { return field_; }
    Residue value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar&, const Scalar&) = default;

private:
    PrimeField field_;
    Residue value_;
};

/// Multiplicative inverse; throws Error(ZeroInverse) for zero.
Scalar scalar_inverse(const Scalar& a);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace krs

#endif  // KRS_PRIME_FIELD_HPP
