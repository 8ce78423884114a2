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

#include "krs/idempotent.hpp"

#include <bit>
#include <cmath>
#include <numeric>

#include "krs/random.hpp"

namespace krs {

bool SplitDatum::holds() const {
    if (!same_module(r.target(), image) || !same_module(s.source(), image)) return false;
    if (!(r.matrix() * s.matrix() == e.matrix())) return false;  // s o r
    if (!(s.matrix() * r.matrix()).is_identity()) return false;  // r o s
    return r.is_surjective() && s.is_injective() && r.intertwines() && s.intertwines();
}

namespace {

SplitDatum split_one(const ModuleMorphism& e) {
    const ModuleMorphism complement = ModuleMorphism::identity(e.source()) - e;
    KernelModule fixed = kernel_module(complement);
    const EchelonBasis basis = row_space(fixed.inclusion.matrix());
    Matrix r = basis.coordinates_of_rows(e.matrix());
    ModuleMorphism r_map(e.source(), fixed.kernel, std::move(r));
    return SplitDatum{e, fixed.kernel, std::move(r_map), std::move(fixed.inclusion)};
}

// h(x) in the algebra, evaluated through the left regular representation.
AlgebraElement evaluate_at(const Polynomial& h, const AlgebraElement& x, const Matrix& left) {
    const Matrix value = evaluate(h, left);
    return AlgebraElement(x.algebra(), times_column(value, x.algebra()->unit()));
}

std::optional<AlgebraElement> try_candidate(const AlgebraElement& x, std::uint64_t seed) {
    const Matrix left = left_mul_matrix(x);
    const Polynomial m = min_poly(left);
    if (m.degree() < 2) return std::nullopt;
    const auto factors = poly_factor(m, seed);
    if (factors.size() < 2) return std::nullopt;
    // All factors but the first; for m = t^a g this is the Fitting projector.
    std::vector<std::size_t> part(factors.size() - 1);
    std::iota(part.begin(), part.end(), std::size_t{1});
    const Polynomial h = crt_split_polynomial(m, factors, part);
    AlgebraElement w = evaluate_at(h, x, left);
    if (w.is_idempotent() && !w.is_zero() && !w.is_one()) return w;
    return std::nullopt;
}

std::optional<AlgebraElement> search(const AlgebraPtr& algebra, std::uint64_t seed, std::uint32_t trials) {
    const std::size_t n = algebra->dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (auto w = try_candidate(AlgebraElement::basis(algebra, i), seed)) return w;
    }
    if (n <= kPairSweepMaxDim) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto prod = AlgebraElement::basis(algebra, i) * AlgebraElement::basis(algebra, j);
                if (prod.is_zero()) continue;
                if (auto w = try_candidate(prod, seed)) return w;
            }
        }
    }
    Rng rng(seed);
    const auto p = algebra->field().characteristic();
    for (std::uint32_t t = 0; t < trials; ++t) {
        Vector v(n);
        for (auto& c : v) c = static_cast<Residue>(rng.below(p));
        if (auto w = try_candidate(AlgebraElement(algebra, std::move(v)), derive_seed(seed, t))) return w;
    }
    return std::nullopt;
}

void require_valid(const AlgebraPtr& algebra) {
    const auto report = validate_algebra(*algebra);
    if (!report.ok()) throw Error(ErrorCode::InvalidAlgebra, report.describe());
}

LocalityVerdict locality(const AlgebraPtr& algebra, std::uint64_t budget, std::uint64_t seed, std::uint32_t trials) {
    LocalityVerdict verdict;
    const bool exhaustive = algebra->element_count(budget == UINT64_MAX ? budget : budget + 1) <= budget;
    if (exhaustive) {
        verdict.method = LocalityMethod::Exhaustive;
        if (auto w = search(algebra, seed, 0)) {
            verdict.local = false;
            verdict.witness = std::move(w);
            return verdict;
        }
        const auto& f = algebra->field();
        const Vector& unit = algebra->unit();
        std::optional<AlgebraElement> found;
        verdict.elements_scanned = for_each_element(algebra, [&](const Vector& x, const Matrix& left) {
            // x^2 = L(x) x as a column.
            const std::size_t n = x.size();
            bool zero = true;
            for (std::size_t k = 0; k < n; ++k) {
                if (x[k] != 0) {
                    zero = false;
                    break;
                }
            }
            if (zero || x == unit) return true;
            for (std::size_t k = 0; k < n; ++k) {
                Residue acc = 0;
                for (std::size_t j = 0; j < n; ++j) acc = f.mul_add(acc, left(k, j), x[j]);
                if (acc != x[k]) return true;
            }
            found = AlgebraElement(algebra, x);
            return false;
        });
        verdict.local = !found.has_value();
        verdict.witness = std::move(found);
        return verdict;
    }
    verdict.method = LocalityMethod::MonteCarlo;
    verdict.trials = trials == 0 ? monte_carlo_trials(budget) : trials;
    if (auto w = search(algebra, seed, verdict.trials)) {
        verdict.local = false;
        verdict.witness = std::move(w);
        return verdict;
    }
    verdict.local = true;
    verdict.failure_bound = std::pow(0.75, static_cast<double>(verdict.trials));
    return verdict;
}

}  // namespace

std::pair<SplitDatum, SplitDatum> split_idempotent(const ModuleMorphism& e) {
    if (!same_module(e.source(), e.target())) {
        throw Error(ErrorCode::NotIdempotent, "an idempotent must be an endomorphism");
    }
    if (!(e.matrix() * e.matrix() == e.matrix())) throw Error(ErrorCode::NotIdempotent, "e o e != e");
    const ModuleMorphism complement = ModuleMorphism::identity(e.source()) - e;
    return {split_one(e), split_one(complement)};
}

std::optional<AlgebraElement> find_nontrivial_idempotent(const AlgebraPtr& algebra, std::uint64_t seed,
                                                         std::uint32_t trials) {
    require_valid(algebra);
    return search(algebra, seed, trials);
}

std::string to_string(LocalityMethod m) { return m == LocalityMethod::Exhaustive ? "exhaustive" : "monte-carlo"; }

std::uint32_t monte_carlo_trials(std::uint64_t budget) noexcept {
    const auto bits = static_cast<std::uint32_t>(std::bit_width(budget));
    return std::max<std::uint32_t>(32, 4 * bits);
}

LocalityVerdict is_local(const AlgebraPtr& algebra, std::uint64_t budget, std::uint64_t seed, std::uint32_t trials) {
    require_valid(algebra);
    return locality(algebra, budget, seed, trials);
}

namespace detail {
LocalityVerdict is_local_unvalidated(const AlgebraPtr& algebra, std::uint64_t budget, std::uint64_t seed,
                                     std::uint32_t trials) {
    return locality(algebra, budget, seed, trials);
}
}  // namespace detail

PrimitivityVerdict is_primitive(const AlgebraPtr& algebra, const AlgebraElement& e, std::uint64_t budget,
                                std::uint64_t seed) {
    if (!e.is_idempotent()) throw Error(ErrorCode::NotIdempotent, "is_primitive needs e*e = e");
    if (e.is_zero()) throw Error(ErrorCode::ZeroIdempotent, "primitivity is only defined for e != 0");
    const CornerAlgebra corner = corner_algebra(algebra, e);
    PrimitivityVerdict verdict;
    // The corner of a valid algebra is valid, so validation is skipped here.
    verdict.corner = locality(corner.algebra(), budget, seed, 0);
    verdict.primitive = verdict.corner.local;
    if (!verdict.primitive) {
        const AlgebraElement f = corner.embed(*verdict.corner.witness);
        verdict.witness.emplace(f, e - f);
    }
    return verdict;
}

}  // namespace krs
