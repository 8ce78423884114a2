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

#include "krs/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "krs/random.hpp"

namespace krs {

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
    }
}

}  // namespace

Polynomial::Polynomial(PrimeField field, std::span<const std::int64_t> coeffs) : field_(field) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.push_back(field_.reduce(c));
    trim();
}

Polynomial::Polynomial(PrimeField field, std::vector<Residue> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = field_.reduce_unsigned(c);
    trim();
}

Polynomial Polynomial::constant(PrimeField field, std::int64_t c) {
    return Polynomial(field, std::vector<Residue>{field.reduce(c)});
}

Polynomial Polynomial::monomial(PrimeField field, std::int64_t c, std::size_t degree) {
    std::vector<Residue> v(degree + 1, 0);
    v[degree] = field.reduce(c);
    return Polynomial(field, std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
}

Polynomial Polynomial::scaled(Residue c) const {
    std::vector<Residue> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.mul(coeffs_[i], c);
    return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial(field_);
    std::vector<Residue> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        v[i - 1] = field_.mul(coeffs_[i], field_.reduce_unsigned(i));
    }
    return Polynomial(field_, std::move(v));
}

Residue Polynomial::evaluate(Residue x) const noexcept {
    Residue acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.mul_add(*it, acc, x);
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const auto& f = a.field_;
    std::vector<Residue> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coefficient(i), b.coefficient(i));
    return Polynomial(f, std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const auto& f = a.field_;
    std::vector<Residue> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coefficient(i), b.coefficient(i));
    return Polynomial(f, std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    const auto& f = a.field_;
    std::vector<Residue> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] = f.mul_add(v[i + j], a.coeffs_[i], b.coeffs_[j]);
        }
    }
    return Polynomial(f, std::move(v));
}

std::string Polynomial::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Residue c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c != 1 || d == 0) os << c;
        if (d >= 1) os << var;
        if (d >= 2) os << '^' << d;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    const auto& f = a.field();
    if (a.degree() < b.degree()) return {Polynomial(f), a};
    std::vector<Residue> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<Residue> quo(rem.size() - db, 0);
    const Residue lead_inv = f.inv(b.leading());
    for (std::size_t k = rem.size(); k-- > db;) {
        const Residue q = f.mul(rem[k], lead_inv);
        quo[k - db] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k - db + j] = f.sub(rem[k - db + j], f.mul(q, b.coefficient(j)));
        }
    }
    rem.resize(db);
    return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return poly_divmod(a, b).first; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return poly_divmod(a, b).second; }

Polynomial poly_pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
    Polynomial acc = Polynomial::constant(base.field(), 1) % modulus;
    Polynomial b = base % modulus;
    while (e != 0) {
        if (e & 1U) acc = (acc * b) % modulus;
        e >>= 1U;
        if (e != 0) b = (b * b) % modulus;
    }
    return acc;
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    require_same_field(f, g);
    Polynomial a = f, b = g;
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd poly_ext_gcd(const Polynomial& f, const Polynomial& g) {
    require_same_field(f, g);
    const auto& F = f.field();
    Polynomial r0 = f, r1 = g;
    Polynomial u0 = Polynomial::constant(F, 1), u1(F);
    Polynomial v0(F), v1 = Polynomial::constant(F, 1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        Polynomial v2 = v0 - q * v1;
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    const Residue s = F.inv(r0.leading());
    return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

Polynomial poly_lcm(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return Polynomial(f.field());
    return ((f * g) / poly_gcd(f, g)).monic();
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
}

namespace {

// Square-free decomposition: returns pairs (square-free part, multiplicity)
// whose product of powers equals f. Parts are pairwise coprime.
void square_free_parts(const Polynomial& f, std::size_t scale,
                       std::vector<std::pair<Polynomial, std::size_t>>& out) {
    const auto& F = f.field();
    const auto p = F.characteristic();
    Polynomial c = poly_gcd(f, f.derivative());
    Polynomial w = f / c;
    std::size_t i = 1;
    while (!w.is_one()) {
        Polynomial y = poly_gcd(w, c);
        Polynomial fac = w / y;
        if (!fac.is_one()) out.emplace_back(fac.monic(), i * scale);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (!c.is_one() && !c.is_zero()) {
        // c is a p-th power; over F_p the p-th root just drops exponents.
        std::vector<Residue> root;
        for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
        square_free_parts(Polynomial(F, std::move(root)).monic(), scale * p, out);
    }
}

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<Polynomial, std::size_t>> distinct_degree(Polynomial f) {
    const auto& F = f.field();
    const auto p = F.characteristic();
    std::vector<std::pair<Polynomial, std::size_t>> out;
    const Polynomial t = Polynomial::t(F);
    Polynomial h = t % f;
    for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(f.degree()); ++d) {
        h = poly_pow_mod(h, p, f);
        Polynomial g = poly_gcd(h - t, f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() >= 1) {
        const auto d = static_cast<std::size_t>(f.degree());
        out.emplace_back(f.monic(), d);
    }
    return out;
}

Polynomial random_below(const Polynomial& g, Rng& rng) {
    const auto& F = g.field();
    std::vector<Residue> v(static_cast<std::size_t>(g.degree()));
    for (auto& c : v) c = static_cast<Residue>(rng.below(F.characteristic()));
    return Polynomial(F, std::move(v));
}

// Cantor-Zassenhaus splitting of a product of distinct irreducibles of
// degree d.
void equal_degree(const Polynomial& g, std::size_t d, Rng& rng, std::vector<Polynomial>& out) {
    if (static_cast<std::size_t>(g.degree()) == d) {
        out.push_back(g.monic());
        return;
    }
    const auto& F = g.field();
    const auto p = F.characteristic();
    const Polynomial one = Polynomial::constant(F, 1);
    for (;;) {
        const Polynomial a = random_below(g, rng);
        if (a.degree() < 1) continue;
        Polynomial b(F);
        if (p == 2) {
            // Trace map a + a^2 + ... + a^(2^(d-1)).
            Polynomial power = a;
            b = a;
            for (std::size_t i = 1; i < d; ++i) {
                power = (power * power) % g;
                b = b + power;
            }
        } else {
            // a^((p^d - 1)/2) = (prod_i a^(p^i))^((p - 1)/2).
            Polynomial frob = a;
            Polynomial norm = a;
            for (std::size_t i = 1; i < d; ++i) {
                frob = poly_pow_mod(frob, p, g);
                norm = (norm * frob) % g;
            }
            b = poly_pow_mod(norm, (p - 1) / 2, g) - one;
        }
        Polynomial h = poly_gcd(b, g);
        if (h.degree() >= 1 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<PolyFactor> poly_factor(const Polynomial& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "poly_factor expects a monic polynomial");
    if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "poly_factor expects degree >= 1");

    Rng rng(seed);
    std::vector<std::pair<Polynomial, std::size_t>> parts;
    square_free_parts(f, 1, parts);

    std::vector<PolyFactor> result;
    for (const auto& [part, mult] : parts) {
        for (const auto& [block, degree] : distinct_degree(part)) {
            std::vector<Polynomial> irreducibles;
            equal_degree(block, degree, rng, irreducibles);
            for (auto& q : irreducibles) result.push_back({std::move(q), mult});
        }
    }
    std::sort(result.begin(), result.end(), [](const PolyFactor& a, const PolyFactor& b) {
        return canonical_less(a.irreducible, b.irreducible);
    });
    // Parts are pairwise coprime, but merge defensively so the output is a
    // set of distinct irreducibles whatever route produced them.
    std::vector<PolyFactor> merged;
    for (auto& fac : result) {
        if (!merged.empty() && merged.back().irreducible == fac.irreducible) {
            merged.back().multiplicity += fac.multiplicity;
        } else {
            merged.push_back(std::move(fac));
        }
    }
    return merged;
}

Polynomial crt_split_polynomial(const Polynomial& m, std::span<const PolyFactor> factors,
                                std::span<const std::size_t> part) {
    const auto& F = m.field();
    if (factors.size() < 2) {
        throw Error(ErrorCode::NoCoprimeSplit, "minimal polynomial is a power of one irreducible");
    }
    std::vector<bool> selected(factors.size(), false);
    for (auto idx : part) {
        if (idx >= factors.size() || selected[idx]) {
            throw Error(ErrorCode::InvalidPart, "factor index out of range or repeated");
        }
        selected[idx] = true;
    }
    if (part.empty() || part.size() == factors.size()) {
        throw Error(ErrorCode::InvalidPart, "part must be a nonempty proper subset of the factors");
    }
    Polynomial chosen = Polynomial::constant(F, 1);
    Polynomial rest = Polynomial::constant(F, 1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        Polynomial power = Polynomial::constant(F, 1);
        for (std::size_t k = 0; k < factors[i].multiplicity; ++k) power = power * factors[i].irreducible;
        if (selected[i]) {
            chosen = chosen * power;
        } else {
            rest = rest * power;
        }
    }
    // u*chosen + v*rest = 1, so v*rest is 1 mod chosen and 0 mod rest.
    const ExtendedGcd eg = poly_ext_gcd(chosen, rest);
    return (eg.v * rest) % m;
}

Polynomial crt_split_polynomial(const Polynomial& m, std::span<const std::size_t> part) {
    const auto factors = poly_factor(m);
    return crt_split_polynomial(m, factors, part);
}

}  // namespace krs
