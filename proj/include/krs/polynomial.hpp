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

#ifndef KRS_POLYNOMIAL_HPP
#define KRS_POLYNOMIAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "krs/prime_field.hpp"

namespace krs {

/// Dense univariate polynomial over F_p; coefficient index = degree.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and has degree -1.
class Polynomial {
public:
    explicit Polynomial(PrimeField field) : field_(field) {}
    /// Coefficients are reduced mod p; trailing zeros are trimmed.
    Polynomial(PrimeField field, std::span<const std::int64_t> coeffs);
    Polynomial(PrimeField field, std::initializer_list<std::int64_t> coeffs)
        : Polynomial(field, std::span<const std::int64_t>(coeffs.begin(), coeffs.size())) {}
    Polynomial(PrimeField field, std::vector<Residue> coeffs);

    static Polynomial constant(PrimeField field, std::int64_t c);
    static Polynomial monomial(PrimeField field, std::int64_t c, std::size_t degree);
    /// The indeterminate t.
    static Polynomial t(PrimeField field) { return monomial(field, 1, 1); }

    const PrimeField& field() const noexcept { return field_; }
    const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
    Residue coefficient(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const noexcept { return leading() == 1; }

    Polynomial monic() const;
    Polynomial derivative() const;
    Residue evaluate(Residue x) const noexcept;
    Polynomial scaled(Residue c) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string(char var = 't') const;

private:
    void trim();

    PrimeField field_;
    std::vector<Residue> coeffs_;
};

/// Quotient and remainder; throws Error(ZeroPolynomial) on division by zero.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// base^e mod modulus.
Polynomial poly_pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);

/// Monic gcd; gcd(0, 0) = 0. Throws Error(FieldMismatch).
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

struct ExtendedGcd {
    Polynomial gcd;  // monic
    Polynomial u;    // u*f + v*g = gcd
    Polynomial v;
};
ExtendedGcd poly_ext_gcd(const Polynomial& f, const Polynomial& g);

/// Monic least common multiple; lcm with zero is zero.
Polynomial poly_lcm(const Polynomial& f, const Polynomial& g);

struct PolyFactor {
    Polynomial irreducible;
    std::size_t multiplicity;
    friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Canonical order on monic polynomials: by degree, then coefficients from
/// the constant term upwards.
bool canonical_less(const Polynomial& a, const Polynomial& b);

/// Complete factorization of a monic polynomial of degree >= 1 into monic
/// irreducibles (square-free, distinct-degree, then Cantor-Zassenhaus
/// equal-degree splitting). The result is sorted canonically and does not
/// depend on the seed; the seed only drives the random splitting.
/// Throws Error(ZeroPolynomial) or Error(NotMonic).
std::vector<PolyFactor> poly_factor(const Polynomial& f, std::uint64_t seed = 0);

/// Returns h with deg h < deg m, h = 1 mod the selected prime powers and
/// h = 0 mod the remaining ones. `part` indexes into poly_factor(m).
/// Throws Error(NoCoprimeSplit) when m is a power of one irreducible and
/// Error(InvalidPart) when `part` is empty, total or out of range.
Polynomial crt_split_polynomial(const Polynomial& m, std::span<const std::size_t> part);

/// Same, against an already computed factorization of m.
Polynomial crt_split_polynomial(const Polynomial& m, std::span<const PolyFactor> factors,
                                std::span<const std::size_t> part);

}  // namespace krs

#endif  // KRS_POLYNOMIAL_HPP
