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

#include "krs/krs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "krs/random.hpp"

namespace krs {

bool Decomposition::conclusive() const noexcept {
    return std::all_of(locality.begin(), locality.end(),
                       [](const LocalityVerdict& v) { return v.local && v.method == LocalityMethod::Exhaustive; });
}

std::string DecompositionCheck::describe() const {
    if (ok()) return "ok";
    std::ostringstream os;
    const char* sep = "";
    auto item = [&](bool good, const char* what) {
        if (!good) {
            os << sep << what;
            sep = "; ";
        }
    };
    item(shapes, "summand, injection, projection and verdict counts or endpoints disagree");
    item(intertwining, "an injection or projection is not a module map");
    item(biorthogonal, "p_j o i_l != delta_jl id");
    item(complete, "sum of i_j o p_j != id");
    item(all_local, "a summand has no Local verdict");
    return os.str();
}

DecompositionCheck check_decomposition(const Decomposition& d) {
    DecompositionCheck c;
    const std::size_t n = d.summands.size();
    if (!d.parent || d.injections.size() != n || d.projections.size() != n || d.locality.size() != n) {
        c.shapes = false;
        c.intertwining = c.biorthogonal = c.complete = false;
        return c;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const auto& i = d.injections[j];
        const auto& p = d.projections[j];
        if (!same_module(i.source(), d.summands[j]) || !same_module(i.target(), d.parent) ||
            !same_module(p.source(), d.parent) || !same_module(p.target(), d.summands[j])) {
            c.shapes = false;
        }
    }
    if (!c.shapes) {
        c.intertwining = c.biorthogonal = c.complete = false;
        return c;
    }
    const auto& f = d.parent->field();
    Matrix total(f, d.parent->dim(), d.parent->dim());
    for (std::size_t j = 0; j < n; ++j) {
        if (!d.injections[j].intertwines() || !d.projections[j].intertwines()) c.intertwining = false;
        if (!d.locality[j].local) c.all_local = false;
        total = total + d.projections[j].matrix() * d.injections[j].matrix();
        for (std::size_t l = 0; l < n; ++l) {
            const Matrix pi = d.injections[l].matrix() * d.projections[j].matrix();
            if (j == l ? !pi.is_identity() : !pi.is_zero()) c.biorthogonal = false;
        }
    }
    c.complete = total.is_identity();
    return c;
}

// ---- decomposition --------------------------------------------------------

namespace {

void decompose_into(const ModulePtr& m, std::uint64_t seed, std::uint64_t budget, Decomposition& out) {
    if (m->dim() == 0) return;
    const EndAlgebra end = end_algebra(m);
    LocalityVerdict verdict = detail::is_local_unvalidated(end.algebra(), budget, seed);
    if (verdict.local) {
        out.summands.push_back(m);
        out.injections.push_back(ModuleMorphism::identity(m));
        out.projections.push_back(ModuleMorphism::identity(m));
        out.locality.push_back(std::move(verdict));
        return;
    }
    const ModuleMorphism e = end.to_morphism(*verdict.witness);
    const auto [first, second] = split_idempotent(e);
    for (std::size_t branch = 0; branch < 2; ++branch) {
        const SplitDatum& sd = branch == 0 ? first : second;
        Decomposition part;
        decompose_into(sd.image, derive_seed(seed, branch), budget, part);
        for (std::size_t j = 0; j < part.summands.size(); ++j) {
            out.summands.push_back(part.summands[j]);
            out.injections.push_back(ModuleMorphism(part.summands[j], m, part.injections[j].matrix() * sd.s.matrix()));
            out.projections.push_back(ModuleMorphism(m, part.summands[j], sd.r.matrix() * part.projections[j].matrix()));
            out.locality.push_back(std::move(part.locality[j]));
        }
    }
}

}  // namespace

Decomposition krs_decompose(const ModulePtr& m, std::uint64_t seed, std::uint64_t budget) {
    const auto report = validate_module(*m);
    if (!report.ok()) throw Error(ErrorCode::InvalidModule, report.describe());
    Decomposition d;
    d.parent = m;
    decompose_into(m, seed, budget, d);
    return d;
}

// ---- equivalence ----------------------------------------------------------

namespace {

struct Matcher {
    const std::vector<std::vector<bool>>& adj;
    std::vector<std::optional<std::size_t>> owner;  // right vertex -> left vertex
    std::vector<bool> seen;

    bool augment(std::size_t left) {
        for (std::size_t r = 0; r < adj[left].size(); ++r) {
            if (!adj[left][r] || seen[r]) continue;
            seen[r] = true;
            if (!owner[r] || augment(*owner[r])) {
                owner[r] = left;
                return true;
            }
        }
        return false;
    }
};

// Perfect matching on an n x n bipartite graph. A greedy pass over the
// preferred edges, then over all edges, runs before augmentation.
std::optional<std::vector<std::size_t>> perfect_matching(const std::vector<std::vector<bool>>& adj,
                                                         const std::vector<std::vector<bool>>* preferred = nullptr) {
    const std::size_t n = adj.size();
    Matcher m{adj, std::vector<std::optional<std::size_t>>(n), std::vector<bool>(n)};
    std::vector<bool> matched(n, false);
    auto greedy = [&](const std::vector<std::vector<bool>>& edges) {
        for (std::size_t l = 0; l < n; ++l) {
            if (matched[l]) continue;
            for (std::size_t r = 0; r < n; ++r) {
                if (edges[l][r] && !m.owner[r]) {
                    m.owner[r] = l;
                    matched[l] = true;
                    break;
                }
            }
        }
    };
    if (preferred) greedy(*preferred);
    greedy(adj);
    for (std::size_t l = 0; l < n; ++l) {
        if (matched[l]) continue;
        std::fill(m.seen.begin(), m.seen.end(), false);
        if (!m.augment(l)) return std::nullopt;
    }
    std::vector<std::size_t> sigma(n);
    for (std::size_t r = 0; r < n; ++r) sigma[*m.owner[r]] = r;
    return sigma;
}

}  // namespace

EquivalenceCertificate check_equivalence(const Decomposition& d1, const Decomposition& d2, std::uint64_t seed) {
    const std::size_t n = d1.length();
    if (n != d2.length()) {
        throw Error(ErrorCode::NotEquivalent, "decompositions have lengths " + std::to_string(n) + " and " +
                                                  std::to_string(d2.length()));
    }
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<std::vector<std::optional<ModuleMorphism>>> isos(n, std::vector<std::optional<ModuleMorphism>>(n));
    bool undecided = false;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
            const auto& x = d1.summands[j];
            const auto& y = d2.summands[l];
            if (x->dim() != y->dim()) continue;
            IsoSearch r = find_isomorphism_local(x, y);
            // The composite test decides only when End is known to be local.
            if (r.status != IsoStatus::Found && !(d1.locality[j].conclusive() && d2.locality[l].conclusive())) {
                r = find_isomorphism(x, y, {.seed = derive_seed(seed, j * n + l)});
                if (r.status == IsoStatus::Inconclusive) undecided = true;
            }
            if (r.status == IsoStatus::Found) {
                adj[j][l] = true;
                isos[j][l] = std::move(r.iso);
            }
        }
    }
    const auto sigma = perfect_matching(adj);
    if (!sigma) {
        if (undecided) throw Error(ErrorCode::IsoSearchInconclusive, "some summand pairs could not be decided");
        throw Error(ErrorCode::MatchingFailed, "no bijection between summands by isomorphism");
    }
    EquivalenceCertificate cert;
    cert.sigma = *sigma;
    for (std::size_t j = 0; j < n; ++j) {
        ModuleMorphism iso = *isos[j][cert.sigma[j]];
        if (!iso.intertwines() || !iso.is_isomorphism()) {
            throw Error(ErrorCode::MatchingFailed, "matched map is not an isomorphism");
        }
        cert.isos.push_back(std::move(iso));
    }
    return cert;
}

// ---- idempotents ----------------------------------------------------------

bool IdempotentSet::all_primitive() const noexcept {
    return std::all_of(primitivity.begin(), primitivity.end(), [](const PrimitivityVerdict& v) { return v.primitive; });
}

IdempotentSet idempotents_from_decomposition(const Decomposition& d, std::uint64_t budget, std::uint64_t seed) {
    const auto check = check_decomposition(d);
    if (!check.ok()) throw Error(ErrorCode::InvalidDecomposition, check.describe());
    IdempotentSet out;
    if (d.parent->dim() == 0) {
        out.flags = {true, true, true};
        return out;
    }
    out.end.emplace(end_algebra(d.parent));
    const EndAlgebra& end = *out.end;
    for (std::size_t j = 0; j < d.length(); ++j) {
        out.idempotents.push_back(end.to_element(compose(d.injections[j], d.projections[j])));
    }
    out.flags = check_idempotent_set(end.algebra(), out.idempotents);
    for (std::size_t j = 0; j < d.length(); ++j) {
        out.primitivity.push_back(is_primitive(end.algebra(), out.idempotents[j], budget, derive_seed(seed, j)));
    }
    return out;
}

// ---- conjugation ----------------------------------------------------------

bool check_conjugation(const ConjugationCertificate& c) {
    const std::size_t n = c.e.size();
    if (c.f.size() != n || c.sigma.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (auto s : c.sigma) {
        if (s >= n || hit[s]) return false;
        hit[s] = true;
    }
    if (!(c.a * c.a_inv).is_one() || !(c.a_inv * c.a).is_one()) return false;
    for (std::size_t j = 0; j < n; ++j) {
        if (!(c.a * c.e[j] * c.a_inv == c.f[c.sigma[j]])) return false;
    }
    return true;
}

namespace {

void require_complete_primitive(const AlgebraPtr& algebra, std::span<const AlgebraElement> set, const char* which,
                                std::uint64_t budget, std::uint64_t seed) {
    for (const auto& x : set) {
        if (!same_algebra(x.algebra(), algebra)) throw Error(ErrorCode::AlgebraMismatch, "idempotent of another algebra");
    }
    const auto flags = check_idempotent_set(algebra, set);
    if (!flags.all()) {
        throw Error(ErrorCode::NotCompleteOrthogonalPrimitive,
                    std::string(which) + " is not a complete set of orthogonal idempotents");
    }
    for (std::size_t j = 0; j < set.size(); ++j) {
        if (set[j].is_zero() || !is_primitive(algebra, set[j], budget, derive_seed(seed, j)).primitive) {
            throw Error(ErrorCode::NotCompleteOrthogonalPrimitive,
                        std::string(which) + "[" + std::to_string(j) + "] is not primitive");
        }
    }
}

}  // namespace

ConjugationCertificate conjugator(const AlgebraPtr& algebra, std::span<const AlgebraElement> e,
                                  std::span<const AlgebraElement> f, std::uint64_t seed, std::uint64_t budget) {
    require_complete_primitive(algebra, e, "E", budget, derive_seed(seed, 0));
    require_complete_primitive(algebra, f, "F", budget, derive_seed(seed, 1));
    const std::size_t n = e.size();
    if (f.size() != n) {
        throw Error(ErrorCode::NoMatching,
                    "sets have sizes " + std::to_string(n) + " and " + std::to_string(f.size()));
    }
    std::vector<KernelModule> left, right;
    for (const auto& x : e) left.push_back(right_ideal(algebra, x));
    for (const auto& y : f) right.push_back(right_ideal(algebra, y));

    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> equal(n, std::vector<bool>(n, false));
    std::vector<std::vector<std::optional<ModuleMorphism>>> isos(n, std::vector<std::optional<ModuleMorphism>>(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
            if (left[j].inclusion.matrix() == right[l].inclusion.matrix()) {
                // e_j A = f_l A; theta is the identity.
                const std::size_t d = left[j].kernel->dim();
                adj[j][l] = equal[j][l] = true;
                isos[j][l].emplace(left[j].kernel, right[l].kernel, Matrix::identity(algebra->field(), d));
                continue;
            }
            // End(e A) = eAe is local for primitive e.
            IsoSearch r = find_isomorphism_local(left[j].kernel, right[l].kernel);
            if (r.status == IsoStatus::Found) {
                adj[j][l] = true;
                isos[j][l] = std::move(r.iso);
            }
        }
    }
    const auto sigma = perfect_matching(adj, &equal);
    if (!sigma) throw Error(ErrorCode::NoMatching, "the right ideals e_j A and f_l A do not match up");

    ConjugationCertificate cert{algebra,
                                std::vector<AlgebraElement>(e.begin(), e.end()),
                                std::vector<AlgebraElement>(f.begin(), f.end()),
                                *sigma,
                                AlgebraElement::zero(algebra),
                                AlgebraElement::zero(algebra)};
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t l = cert.sigma[j];
        const Matrix& theta = isos[j][l]->matrix();
        const Matrix theta_inv = invert(theta);
        const auto ej = row_space(left[j].inclusion.matrix()).coordinates(e[j].coeffs());
        const auto fl = row_space(right[l].inclusion.matrix()).coordinates(f[l].coeffs());
        const AlgebraElement x(algebra, row_times(row_times(*ej, theta), right[l].inclusion.matrix()));
        const AlgebraElement y(algebra, row_times(row_times(*fl, theta_inv), left[j].inclusion.matrix()));
        cert.a = cert.a + x;
        cert.a_inv = cert.a_inv + y;
    }
    if (!check_conjugation(cert)) throw Error(ErrorCode::NoMatching, "constructed conjugator fails verification");
    return cert;
}

// ---- cancellation ---------------------------------------------------------

CancellationCertificate cancel_complement(const Decomposition& d, const SplitDatum& split, std::uint64_t seed,
                                          std::uint64_t budget) {
    if (!same_module(split.e.source(), d.parent)) {
        throw Error(ErrorCode::InvalidArgument, "the split is not on the decomposed module");
    }
    if (!split.holds()) throw Error(ErrorCode::InvalidArgument, "split datum does not satisfy s r = e, r s = id");
    const std::size_t n = d.length();
    const std::size_t len_prime = krs_decompose(split.image, derive_seed(seed, 1), budget).length();
    if (len_prime > n) throw Error(ErrorCode::MatchingFailed, "X' is longer than X");
    const std::size_t t = n - len_prime;
    const std::size_t dim = d.parent->dim();

    // Lexicographic t-subsets of {0..n-1}.
    std::vector<std::size_t> pick(t);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    for (;;) {
        std::size_t total = split.image->dim();
        for (auto j : pick) total += d.summands[j]->dim();
        if (total == dim) {
            Matrix block(d.parent->field(), 0, dim);
            for (auto j : pick) block = vstack(block, d.injections[j].matrix());
            block = vstack(block, split.s.matrix());
            if (rank(block) == dim) {
                std::vector<ModulePtr> parts;
                for (auto j : pick) parts.push_back(d.summands[j]);
                parts.push_back(split.image);
                DirectSum sum = direct_sum(d.parent->algebra(), parts);
                ModuleMorphism iso(sum.sum, d.parent, std::move(block));
                if (!iso.intertwines() || !iso.is_isomorphism()) {
                    throw Error(ErrorCode::MatchingFailed, "complement block is not an isomorphism");
                }
                return {pick, std::move(sum), std::move(iso)};
            }
        }
        std::size_t k = t;
        while (k > 0 && pick[k - 1] == n - t + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t i = k; i < t; ++i) pick[i] = pick[i - 1] + 1;
    }
    throw Error(ErrorCode::MatchingFailed, "no internal complement of X' among the summands");
}

// ---- main theorem ---------------------------------------------------------

bool TheoremReport::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.passed; });
}

namespace {

std::string split_failure(const ModuleMorphism& e) {
    const auto [first, second] = split_idempotent(e);
    if (!first.holds()) return "s r = e or r s = id fails for e";
    if (!second.holds()) return "s r = e or r s = id fails for id - e";
    const std::size_t dim = e.source()->dim();
    if (first.image->dim() + second.image->dim() != dim) return "dim Ker(id - e) + dim Ker(e) != dim X";
    if (rank(vstack(first.s.matrix(), second.s.matrix())) != dim) return "block reassembly is singular";
    return {};
}

std::vector<AlgebraElement> sample_idempotents(const AlgebraPtr& end, const std::vector<AlgebraElement>& primitive,
                                               std::uint64_t seed) {
    std::vector<AlgebraElement> out{AlgebraElement::zero(end), AlgebraElement::one(end)};
    AlgebraElement partial = AlgebraElement::zero(end);
    for (const auto& e : primitive) {
        out.push_back(e);
        partial = partial + e;
        out.push_back(partial);
    }
    Rng rng(seed);
    const auto p = end->field().characteristic();
    std::size_t conjugates = 0;
    for (int draw = 0; draw < 64 && conjugates < 4; ++draw) {
        Vector v(end->dim());
        for (auto& c : v) c = static_cast<Residue>(rng.below(p));
        const AlgebraElement u(end, std::move(v));
        if (!is_unit(u)) continue;
        const AlgebraElement ui = inverse(u);
        for (const auto& e : primitive) out.push_back(u * e * ui);
        ++conjugates;
    }
    return out;
}

}  // namespace

TheoremReport verify_main_theorem(std::span<const ModulePtr> corpus, std::uint64_t seed, std::uint64_t budget) {
    TheoremReport report;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const ModulePtr& m = corpus[i];
        const std::uint64_t s = derive_seed(seed, i);
        auto add = [&](std::string name, bool passed, std::string detail) {
            report.checks.push_back({i, std::move(name), passed, std::move(detail)});
        };

        Decomposition d;
        try {
            d = krs_decompose(m, s, budget);
        } catch (const Error& err) {
            add("krs-decomposition", false, err.what());
            continue;
        }
        const auto dc = check_decomposition(d);
        add("krs-decomposition", dc.ok() && d.conclusive(),
            dc.ok() ? (d.conclusive() ? "length " + std::to_string(d.length()) : "a Local verdict is Monte Carlo")
                    : dc.describe());

        IdempotentSet set;
        try {
            set = idempotents_from_decomposition(d, budget, derive_seed(s, 1));
        } catch (const Error& err) {
            add("idempotent-set-size", false, err.what());
            continue;
        }

        if (m->dim() == 0) {
            add("split-idempotents", true, "zero module");
        } else {
            const auto samples = sample_idempotents(set.end->algebra(), set.idempotents, derive_seed(s, 2));
            std::string failure;
            for (const auto& e : samples) {
                failure = split_failure(set.end->to_morphism(e));
                if (!failure.empty()) break;
            }
            add("split-idempotents", failure.empty(),
                failure.empty() ? std::to_string(samples.size()) + " idempotents split" : failure);
        }

        bool iff = true;
        std::string iff_detail;
        if (m->dim() > 0) {
            const auto v = detail::is_local_unvalidated(end_algebra(m).algebra(), budget, derive_seed(s, 3));
            if (v.local != (d.length() == 1)) {
                iff = false;
                iff_detail = "module: End local = " + std::string(v.local ? "true" : "false") + ", length " +
                             std::to_string(d.length());
            }
        }
        for (std::size_t j = 0; j < d.length() && iff; ++j) {
            const auto& x = d.summands[j];
            const auto v = detail::is_local_unvalidated(end_algebra(x).algebra(), budget, derive_seed(s, 4 + j));
            const std::size_t len = krs_decompose(x, derive_seed(s, 100 + j), budget).length();
            if (v.local != (len == 1)) {
                iff = false;
                iff_detail = "summand " + std::to_string(j) + ": End local = " + (v.local ? "true" : "false") +
                             ", length " + std::to_string(len);
            }
        }
        add("locality-iff-indecomposable", iff, iff ? std::to_string(d.length() + 1) + " modules checked" : iff_detail);

        const bool size_ok = set.idempotents.size() == d.length() && set.flags.all() && set.all_primitive();
        add("idempotent-set-size", size_ok,
            "length " + std::to_string(d.length()) + ", set size " + std::to_string(set.idempotents.size()) +
                (set.flags.all() ? "" : ", set not complete orthogonal") +
                (set.all_primitive() ? "" : ", some e_j not primitive"));
    }
    return report;
}

}  // namespace krs
