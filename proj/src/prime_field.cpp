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

#include "krs/prime_field.hpp"

#include <string>

namespace krs {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p > kMaxCharacteristic || !is_prime(p)) {
        throw Error(ErrorCode::NotPrime, "characteristic " + std::to_string(p) +
                                             " is not a prime in [2, 2^31-1]");
    }
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
    std::uint64_t base = a % p_;
    std::uint64_t acc = 1 % p_;
    while (e != 0) {
        if (e & 1U) acc = (acc * base) % p_;
        base = (base * base) % p_;
        e >>= 1U;
    }
    return static_cast<Residue>(acc);
}

Residue PrimeField::inv(Residue a) const {
    if (a % p_ == 0) throw Error(ErrorCode::ZeroInverse, "zero has no inverse");
    // Extended Euclid on signed 64-bit; p < 2^31 keeps all intermediates small.
    std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = a;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    return reduce(t0);
}

namespace {
void require_same_field(const Scalar& a, const Scalar& b) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "scalars over different fields");
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return Scalar(a.field_, a.field_.add(a.value_, b.value_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return Scalar(a.field_, a.field_.sub(a.value_, b.value_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return Scalar(a.field_, a.field_.mul(a.value_, b.value_));
}

Scalar scalar_inverse(const Scalar& a) { return Scalar(a.field(), a.field().inv(a.value())); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.value() << " (mod " << s.field().characteristic() << ")";
}

}  // namespace krs
