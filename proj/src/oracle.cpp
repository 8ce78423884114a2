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

#include "krs/oracle.hpp"

#include <algorithm>

#include "krs/idempotent.hpp"

namespace krs {

namespace {

void require_budget(const StructureAlgebra& a, OracleBudget budget) {
    const std::uint64_t cap = budget.max_elements == UINT64_MAX ? UINT64_MAX : budget.max_elements + 1;
    if (a.element_count(cap) > budget.max_elements) {
        throw Error(ErrorCode::BudgetExceeded, std::to_string(a.field().characteristic()) + "^" +
                                                   std::to_string(a.dim()) + " elements exceed the oracle budget of " +
                                                   std::to_string(budget.max_elements));
    }
}

// Last coefficient varies fastest, so the visit order is lexicographic.
bool next_element(Vector& x, Residue top) {
    for (std::size_t k = x.size(); k-- > 0;) {
        if (x[k] < top) {
            ++x[k];
            return true;
        }
        x[k] = 0;
    }
    return false;
}

std::vector<AlgebraElement> scan_idempotents(const AlgebraPtr& algebra) {
    const auto top = static_cast<Residue>(algebra->field().characteristic() - 1);
    std::vector<AlgebraElement> out;
    Vector x(algebra->dim(), 0);
    do {
        if (algebra->multiply(x, x) == x) out.emplace_back(algebra, x);
    } while (next_element(x, top));
    return out;
}

void oracle_split(const ModulePtr& m, OracleBudget budget, Decomposition& out) {
    if (m->dim() == 0) return;
    const EndAlgebra end = end_algebra(m);
    require_budget(*end.algebra(), budget);
    const auto idempotents = scan_idempotents(end.algebra());
    const auto nontrivial = std::find_if(idempotents.begin(), idempotents.end(),
                                         [](const AlgebraElement& e) { return !e.is_zero() && !e.is_one(); });
    if (nontrivial == idempotents.end()) {
        LocalityVerdict v;
        v.local = true;
        v.method = LocalityMethod::Exhaustive;
        v.elements_scanned = end.algebra()->element_count();
        out.summands.push_back(m);
        out.injections.push_back(ModuleMorphism::identity(m));
        out.projections.push_back(ModuleMorphism::identity(m));
        out.locality.push_back(v);
        return;
    }
    const auto [first, second] = split_idempotent(end.to_morphism(*nontrivial));
    for (const SplitDatum* sd : {&first, &second}) {
        Decomposition part;
        oracle_split(sd->image, budget, part);
        for (std::size_t j = 0; j < part.summands.size(); ++j) {
            out.summands.push_back(part.summands[j]);
            out.injections.push_back(ModuleMorphism(part.summands[j], m, part.injections[j].matrix() * sd->s.matrix()));
            out.projections.push_back(ModuleMorphism(m, part.summands[j], sd->r.matrix() * part.projections[j].matrix()));
            out.locality.push_back(part.locality[j]);
        }
    }
}

}  // namespace

std::vector<AlgebraElement> enumerate_idempotents(const AlgebraPtr& algebra, OracleBudget budget) {
    require_budget(*algebra, budget);
    return scan_idempotents(algebra);
}

OraclePrimitivity oracle_is_primitive(const AlgebraPtr& algebra, const AlgebraElement& e, OracleBudget budget) {
    if (!same_algebra(e.algebra(), algebra)) throw Error(ErrorCode::AlgebraMismatch, "idempotent of another algebra");
    if (!e.is_idempotent()) throw Error(ErrorCode::NotIdempotent, "oracle primitivity needs e*e = e");
    OraclePrimitivity out;
    for (const auto& f : enumerate_idempotents(algebra, budget)) {
        const AlgebraElement g = e - f;
        if (f.is_zero() || g.is_zero() || !g.is_idempotent()) continue;
        if ((f * g).is_zero() && (g * f).is_zero()) {
            out.witness.emplace(f, g);
            return out;
        }
    }
    out.primitive = true;
    return out;
}

Decomposition oracle_decompose(const ModulePtr& m, OracleBudget budget) {
    const auto report = validate_module(*m);
    if (!report.ok()) throw Error(ErrorCode::InvalidModule, report.describe());
    Decomposition d;
    d.parent = m;
    oracle_split(m, budget, d);
    return d;
}

bool Lemma3Report::ok() const noexcept {
    return std::all_of(entries.begin(), entries.end(), [](const Lemma3Entry& e) { return e.agree(); });
}

Lemma3Report lemma3_check(const AlgebraPtr& algebra, OracleBudget budget) {
    const auto validation = validate_algebra(*algebra);
    if (!validation.ok()) throw Error(ErrorCode::InvalidAlgebra, validation.describe());
    Lemma3Report report;
    report.idempotents = enumerate_idempotents(algebra, budget);
    for (const auto& e : report.idempotents) {
        if (e.is_zero()) continue;
        Lemma3Entry entry{e};
        entry.primitive = oracle_is_primitive(algebra, e, budget).primitive;
        // Idempotents of eAe are the idempotents x of A with e x e = x.
        std::size_t in_corner = 0;
        for (const auto& x : report.idempotents) {
            if (e * x * e == x) ++in_corner;
        }
        entry.corner_trivial = in_corner == 2;
        entry.indecomposable = oracle_decompose(right_ideal(algebra, e).kernel, budget).length() == 1;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace krs
