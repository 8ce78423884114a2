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

#include "certificates.hpp"

#include <cmath>
#include <functional>

#include "krs/error.hpp"

namespace krs::cli {

Json make_certificate(const std::string& kind, std::uint64_t seed, Json payload) {
    return Json{{"kind", kind}, {"engine_version", kEngineVersion}, {"seed", seed}, {"payload", std::move(payload)}};
}

Json locality_to_json(const LocalityVerdict& v) {
    Json out{{"local", v.local},
             {"method", to_string(v.method)},
             {"elements_scanned", v.elements_scanned},
             {"trials", v.trials},
             {"failure_bound", v.failure_bound}};
    out["witness"] = v.witness ? vector_to_json(v.witness->coeffs()) : Json(nullptr);
    return out;
}

Json decomposition_payload(const Decomposition& d, std::uint64_t budget) {
    Json summands = Json::array();
    for (std::size_t j = 0; j < d.length(); ++j) {
        Json action = Json::array();
        for (const auto& a : d.summands[j]->action()) action.push_back(matrix_to_json(a));
        summands.push_back(Json{{"dim", d.summands[j]->dim()},
                                {"action", std::move(action)},
                                {"injection", matrix_to_json(d.injections[j].matrix())},
                                {"projection", matrix_to_json(d.projections[j].matrix())},
                                {"locality", locality_to_json(d.locality[j])}});
    }
    return Json{{"module", module_to_json(*d.parent)},
                {"budget", budget},
                {"conclusive", d.conclusive()},
                {"summands", std::move(summands)}};
}

Json equivalence_payload(const Json& first, const Json& second, const EquivalenceCertificate& cert) {
    Json isos = Json::array();
    for (const auto& f : cert.isos) isos.push_back(matrix_to_json(f.matrix()));
    return Json{{"first", first}, {"second", second}, {"sigma", cert.sigma}, {"isos", std::move(isos)}};
}

namespace {

Json element_list(std::span<const AlgebraElement> xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(vector_to_json(x.coeffs()));
    return out;
}

}  // namespace

Json conjugation_payload(const ConjugationCertificate& c) {
    return Json{{"algebra", algebra_to_json(*c.algebra)},
                {"e", element_list(c.e)},
                {"f", element_list(c.f)},
                {"sigma", c.sigma},
                {"a", vector_to_json(c.a.coeffs())},
                {"a_inv", vector_to_json(c.a_inv.coeffs())}};
}

Json locality_payload(const EndAlgebra& end, const LocalityVerdict& verdict, std::uint64_t budget) {
    Json basis = Json::array();
    for (const auto& b : end.basis()) basis.push_back(matrix_to_json(b.matrix()));
    return Json{{"module", module_to_json(*end.module())},
                {"budget", budget},
                {"end_basis", std::move(basis)},
                {"end_algebra", algebra_to_json(*end.algebra())},
                {"verdict", locality_to_json(verdict)}};
}

Json lemma3_payload(const AlgebraPtr& algebra, const Lemma3Report& report, std::uint64_t budget) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        entries.push_back(Json{{"e", vector_to_json(e.e.coeffs())},
                               {"primitive", e.primitive},
                               {"corner_trivial", e.corner_trivial},
                               {"indecomposable", e.indecomposable}});
    }
    return Json{{"algebra", algebra_to_json(*algebra)},
                {"budget", budget},
                {"idempotents", element_list(report.idempotents)},
                {"entries", std::move(entries)},
                {"all_agree", report.ok()}};
}

namespace {

Json checks_to_json(const TheoremReport& report) {
    Json out = Json::array();
    for (const auto& c : report.checks) {
        out.push_back(Json{{"module_index", c.module_index}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return out;
}

}  // namespace

Json theorem_payload(std::span<const ModulePtr> modules, std::span<const Json> decompositions,
                     const TheoremReport& report, std::uint64_t budget) {
    Json mods = Json::array();
    for (const auto& m : modules) mods.push_back(module_to_json(*m));
    Json decs = Json::array();
    for (const auto& d : decompositions) decs.push_back(d);
    return Json{{"modules", std::move(mods)},
                {"decompositions", std::move(decs)},
                {"budget", budget},
                {"checks", checks_to_json(report)},
                {"ok", report.ok()}};
}

namespace {

LocalityVerdict locality_from_json(const Json& doc, const AlgebraPtr& witness_algebra) {
    LocalityVerdict v;
    v.local = bool_from_json(member(doc, "local"), "local");
    const Json& method = member(doc, "method");
    if (method == "exhaustive") {
        v.method = LocalityMethod::Exhaustive;
    } else if (method == "monte-carlo") {
        v.method = LocalityMethod::MonteCarlo;
    } else {
        throw ParseError("method: expected \"exhaustive\" or \"monte-carlo\"");
    }
    v.elements_scanned = u64_from_json(member(doc, "elements_scanned"), "elements_scanned");
    const std::uint64_t trials = u64_from_json(member(doc, "trials"), "trials");
    if (trials > UINT32_MAX) throw ParseError("trials: out of range");
    v.trials = static_cast<std::uint32_t>(trials);
    const Json& bound = member(doc, "failure_bound");
    if (!bound.is_number()) throw ParseError("failure_bound: expected a number");
    v.failure_bound = bound.get<double>();
    if (auto it = doc.find("witness"); it != doc.end() && !it->is_null()) {
        if (!witness_algebra) throw ParseError("witness: no algebra to interpret it in");
        v.witness = AlgebraElement(witness_algebra,
                                   vector_from_json(*it, witness_algebra->field(), witness_algebra->dim()));
    }
    return v;
}

std::vector<std::size_t> index_list(const Json& doc, const char* what) {
    if (!doc.is_array()) throw ParseError(std::string(what) + ": expected an array");
    std::vector<std::size_t> out;
    for (const auto& x : doc) out.push_back(size_from_json(x, what));
    return out;
}

std::vector<AlgebraElement> elements_from_json(const AlgebraPtr& algebra, const Json& doc, const char* what) {
    if (!doc.is_array()) throw ParseError(std::string(what) + ": expected an array");
    std::vector<AlgebraElement> out;
    for (const auto& x : doc) out.emplace_back(algebra, vector_from_json(x, algebra->field(), algebra->dim()));
    return out;
}

}  // namespace

Decomposition decomposition_from_payload(const Json& payload) {
    Decomposition d;
    d.parent = module_from_json(member(payload, "module"));
    const auto& field = d.parent->field();
    const Json& summands = member(payload, "summands");
    if (!summands.is_array()) throw ParseError("summands: expected an array");
    for (const auto& s : summands) {
        ModulePtr x = module_over(d.parent->algebra(), s);
        d.injections.emplace_back(x, d.parent, matrix_from_json(member(s, "injection"), field, x->dim(), d.parent->dim()));
        d.projections.emplace_back(d.parent, x,
                                   matrix_from_json(member(s, "projection"), field, d.parent->dim(), x->dim()));
        d.locality.push_back(locality_from_json(member(s, "locality"), nullptr));
        d.summands.push_back(std::move(x));
    }
    return d;
}

namespace {

struct Failed {
    std::string what;
};

class Checker {
public:
    void require(bool ok, std::string what) {
        if (!ok) throw Failed{std::move(what)};
        checked_.push_back(std::move(what));
    }
    std::vector<std::string> take() { return std::move(checked_); }

private:
    std::vector<std::string> checked_;
};

std::string idx(std::size_t j) { return std::to_string(j); }

bool is_permutation_of_n(const std::vector<std::size_t>& sigma, std::size_t n) {
    if (sigma.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (auto s : sigma) {
        if (s >= n || hit[s]) return false;
        hit[s] = true;
    }
    return true;
}

bool bound_matches(const LocalityVerdict& v) {
    const double expected = std::pow(0.75, static_cast<double>(v.trials));
    return std::abs(v.failure_bound - expected) <= 1e-12 * expected;
}

// Local verdicts: an exhaustive one is rescanned, a Monte Carlo one must
// carry the bound for its trial count.
void check_local_verdict(const AlgebraPtr& end, const LocalityVerdict& v, std::uint64_t budget,
                         const std::string& who, Checker& c) {
    if (v.method == LocalityMethod::Exhaustive) {
        c.require(v.trials == 0 && v.failure_bound == 0.0, who + ": exhaustive verdict has no trials");
        const std::uint64_t count = end->element_count(budget == UINT64_MAX ? budget : budget + 1);
        c.require(count <= budget, who + ": exhaustive scan fits the budget");
        c.require(v.elements_scanned == count, who + ": elements_scanned = p^dim End");
        const auto idems = enumerate_idempotents(end, {budget});
        c.require(idems.size() == 2, who + ": End has only the idempotents 0 and 1");
    } else {
        c.require(v.elements_scanned == 0 && bound_matches(v), who + ": failure_bound = (3/4)^trials");
    }
}

void verify_decomposition(const Json& p, const std::string& prefix, Checker& c) {
    const Decomposition d = decomposition_from_payload(p);
    const std::uint64_t budget = u64_from_json(member(p, "budget"), "budget");
    const bool conclusive = bool_from_json(member(p, "conclusive"), "conclusive");
    const auto& algebra = d.parent->algebra();
    c.require(validate_algebra(*algebra).ok(), prefix + "algebra axioms");
    c.require(validate_module(*d.parent).ok(), prefix + "module axioms");
    const std::size_t n = d.length();
    const auto& field = d.parent->field();
    Matrix total(field, d.parent->dim(), d.parent->dim());
    for (std::size_t j = 0; j < n; ++j) {
        const std::string who = prefix + "summand " + idx(j);
        c.require(d.summands[j]->dim() > 0, who + ": nonzero");
        c.require(validate_module(*d.summands[j]).ok(), who + ": module axioms");
        c.require(d.injections[j].intertwines(), who + ": injection intertwines");
        c.require(d.projections[j].intertwines(), who + ": projection intertwines");
        for (std::size_t l = 0; l < n; ++l) {
            const Matrix pi = d.injections[l].matrix() * d.projections[j].matrix();
            c.require(j == l ? pi.is_identity() : pi.is_zero(),
                      prefix + "p_" + idx(j) + " o i_" + idx(l) + (j == l ? " = id" : " = 0"));
        }
        total = total + d.projections[j].matrix() * d.injections[j].matrix();
        c.require(d.locality[j].local, who + ": verdict is Local");
        check_local_verdict(end_algebra(d.summands[j]).algebra(), d.locality[j], budget, who, c);
    }
    c.require(total.is_identity(), prefix + "sum of i_j o p_j = id");
    c.require(conclusive == d.conclusive(), prefix + "conclusive flag");
}

void verify_equivalence(const Json& p, Checker& c) {
    const Json& first = member(p, "first");
    const Json& second = member(p, "second");
    verify_decomposition(first, "first: ", c);
    verify_decomposition(second, "second: ", c);
    const Decomposition d1 = decomposition_from_payload(first);
    const Decomposition d2 = decomposition_from_payload(second);
    c.require(*d1.parent == *d2.parent, "both decompositions are of the same module");
    const std::size_t n = d1.length();
    c.require(d2.length() == n, "equal lengths");
    const auto sigma = index_list(member(p, "sigma"), "sigma");
    c.require(is_permutation_of_n(sigma, n), "sigma is a permutation");
    const Json& isos = member(p, "isos");
    if (!isos.is_array() || isos.size() != n) throw ParseError("isos: expected one matrix per summand");
    for (std::size_t j = 0; j < n; ++j) {
        const auto& x = d1.summands[j];
        const auto& y = d2.summands[sigma[j]];
        const std::string who = "iso " + idx(j) + " -> " + idx(sigma[j]);
        c.require(x->dim() == y->dim(), who + ": equal dimensions");
        const ModuleMorphism f(x, y, matrix_from_json(isos[j], x->field(), x->dim(), y->dim()));
        c.require(f.intertwines(), who + ": intertwines");
        c.require(f.is_isomorphism(), who + ": invertible");
    }
}

void verify_conjugation(const Json& p, Checker& c) {
    const AlgebraPtr algebra = algebra_from_json(member(p, "algebra"));
    c.require(validate_algebra(*algebra).ok(), "algebra axioms");
    const auto e = elements_from_json(algebra, member(p, "e"), "e");
    const auto f = elements_from_json(algebra, member(p, "f"), "f");
    const auto sigma = index_list(member(p, "sigma"), "sigma");
    const AlgebraElement a(algebra, vector_from_json(member(p, "a"), algebra->field(), algebra->dim()));
    const AlgebraElement a_inv(algebra, vector_from_json(member(p, "a_inv"), algebra->field(), algebra->dim()));
    const std::size_t n = e.size();
    c.require(f.size() == n, "equal set sizes");
    c.require(check_idempotent_set(algebra, e).all(), "e is a complete orthogonal idempotent set");
    c.require(check_idempotent_set(algebra, f).all(), "f is a complete orthogonal idempotent set");
    for (std::size_t j = 0; j < n; ++j) {
        c.require(!e[j].is_zero() && is_primitive(algebra, e[j]).primitive, "e[" + idx(j) + "] primitive");
        c.require(!f[j].is_zero() && is_primitive(algebra, f[j]).primitive, "f[" + idx(j) + "] primitive");
    }
    c.require(is_permutation_of_n(sigma, n), "sigma is a permutation");
    c.require((a * a_inv).is_one(), "a a_inv = 1");
    c.require((a_inv * a).is_one(), "a_inv a = 1");
    for (std::size_t j = 0; j < n; ++j) {
        c.require(f[sigma[j]] == a * e[j] * a_inv,
                  "f[" + idx(sigma[j]) + "] = a e[" + idx(j) + "] a_inv");
    }
}

void verify_locality(const Json& p, Checker& c) {
    const ModulePtr m = module_from_json(member(p, "module"));
    const std::uint64_t budget = u64_from_json(member(p, "budget"), "budget");
    c.require(validate_algebra(*m->algebra()).ok(), "algebra axioms");
    c.require(validate_module(*m).ok(), "module axioms");
    const auto& field = m->field();
    const Json& basis_doc = member(p, "end_basis");
    if (!basis_doc.is_array()) throw ParseError("end_basis: expected an array");
    std::vector<Matrix> basis;
    for (const auto& b : basis_doc) basis.push_back(matrix_from_json(b, field, m->dim(), m->dim()));
    const std::size_t k = basis.size();
    for (std::size_t a = 0; a < k; ++a) {
        c.require(ModuleMorphism(m, m, basis[a]).intertwines(), "end_basis[" + idx(a) + "] intertwines");
    }
    Matrix flat(field, k, m->dim() * m->dim());
    for (std::size_t a = 0; a < k; ++a) std::copy(basis[a].data().begin(), basis[a].data().end(), flat.row(a).begin());
    c.require(rank(flat) == k, "end_basis is linearly independent");
    c.require(HomSpace(m, m).dim() == k, "end_basis spans End");

    const AlgebraPtr end = algebra_from_json(member(p, "end_algebra"));
    c.require(end->dim() == k && end->field() == field, "End has the basis dimension");
    auto combination = [&](std::span<const Residue> coeffs) {
        Matrix out(field, m->dim(), m->dim());
        for (std::size_t i = 0; i < k; ++i) out.add_scaled(basis[i], coeffs[i]);
        return out;
    };
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            Vector coeffs(k);
            for (std::size_t i = 0; i < k; ++i) coeffs[i] = end->constant(a, b, i);
            // Composition b then a.
            c.require(basis[b] * basis[a] == combination(coeffs),
                      "B_" + idx(a) + " B_" + idx(b) + " = sum c[" + idx(a) + "][" + idx(b) + "][k] B_k");
        }
    }
    c.require(combination(end->unit()).is_identity(), "unit maps to id");

    const LocalityVerdict v = locality_from_json(member(p, "verdict"), end);
    if (v.local) {
        c.require(!v.witness.has_value(), "no witness on a Local verdict");
        check_local_verdict(end, v, budget, "End", c);
    } else {
        c.require(v.witness.has_value(), "NotLocal verdict carries a witness");
        c.require(v.failure_bound == 0.0, "NotLocal verdict has no failure bound");
        const Matrix w = combination(v.witness->coeffs());
        c.require(w * w == w, "witness is idempotent");
        c.require(!w.is_zero() && !w.is_identity(), "witness is neither 0 nor id");
    }
}

Json lemma3_entries(const Lemma3Report& r) {
    Json out = Json::array();
    for (const auto& e : r.entries) {
        out.push_back(Json{{"e", vector_to_json(e.e.coeffs())},
                           {"primitive", e.primitive},
                           {"corner_trivial", e.corner_trivial},
                           {"indecomposable", e.indecomposable}});
    }
    return out;
}

void verify_lemma3(const Json& p, Checker& c) {
    const AlgebraPtr algebra = algebra_from_json(member(p, "algebra"));
    const std::uint64_t budget = u64_from_json(member(p, "budget"), "budget");
    c.require(validate_algebra(*algebra).ok(), "algebra axioms");
    const Lemma3Report report = lemma3_check(algebra, {budget});
    c.require(member(p, "idempotents") == element_list(report.idempotents), "idempotent list re-enumerated");
    const Json entries = lemma3_entries(report);
    const Json& recorded = member(p, "entries");
    c.require(recorded.is_array() && recorded.size() == entries.size(), "one entry per nonzero idempotent");
    for (std::size_t j = 0; j < entries.size(); ++j) {
        c.require(recorded[j] == entries[j], "entry " + idx(j) + " recomputed");
    }
    c.require(bool_from_json(member(p, "all_agree"), "all_agree") == report.ok(), "all_agree flag");
    c.require(report.ok(), "the three predicates agree on every idempotent");
}

void verify_theorem(const Json& p, std::uint64_t seed, Checker& c) {
    const std::uint64_t budget = u64_from_json(member(p, "budget"), "budget");
    const Json& mods = member(p, "modules");
    const Json& decs = member(p, "decompositions");
    if (!mods.is_array() || !decs.is_array()) throw ParseError("modules, decompositions: expected arrays");
    c.require(mods.size() == decs.size(), "one decomposition per module");
    std::vector<ModulePtr> modules;
    for (std::size_t i = 0; i < mods.size(); ++i) {
        modules.push_back(module_from_json(mods[i]));
        const std::string prefix = "module " + idx(i) + ": ";
        c.require(validate_module(*modules.back()).ok(), prefix + "module axioms");
        verify_decomposition(decs[i], prefix, c);
        c.require(*decomposition_from_payload(decs[i]).parent == *modules.back(), prefix + "decomposition is of it");
    }
    const TheoremReport report = verify_main_theorem(modules, seed, budget);
    const Json checks = checks_to_json(report);
    const Json& recorded = member(p, "checks");
    c.require(recorded.is_array() && recorded.size() == checks.size(), "one record per harness check");
    for (std::size_t j = 0; j < checks.size(); ++j) {
        c.require(recorded[j] == checks[j], "check " + idx(j) + " (" + report.checks[j].name + ") recomputed");
    }
    c.require(bool_from_json(member(p, "ok"), "ok") == report.ok(), "ok flag");
    c.require(report.ok(), "every harness check passed");
}

bool contains_value(const Json& haystack, const Json& needle) {
    if (haystack == needle) return true;
    if (haystack.is_structured()) {
        for (const auto& x : haystack) {
            if (contains_value(x, needle)) return true;
        }
    }
    return false;
}

}  // namespace

Verification verify_certificate(const Json& cert, std::span<const Json> inputs) {
    Verification out;
    Checker c;
    try {
        const Json& kind = member(cert, "kind");
        c.require(member(cert, "engine_version") == kEngineVersion, "engine_version");
        const std::uint64_t seed = u64_from_json(member(cert, "seed"), "seed");
        const Json& payload = member(cert, "payload");
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (inputs[i].contains("idempotents")) {
                c.require(contains_value(payload, inputs[i]["idempotents"]) &&
                              contains_value(payload, inputs[i]["algebra"]),
                          "input " + idx(i) + " is embedded in the certificate");
            } else {
                c.require(contains_value(payload, inputs[i]), "input " + idx(i) + " is embedded in the certificate");
            }
        }
        if (kind == "decomposition") {
            verify_decomposition(payload, "", c);
        } else if (kind == "equivalence") {
            verify_equivalence(payload, c);
        } else if (kind == "conjugation") {
            verify_conjugation(payload, c);
        } else if (kind == "locality") {
            verify_locality(payload, c);
        } else if (kind == "lemma3") {
            verify_lemma3(payload, c);
        } else if (kind == "main-theorem") {
            verify_theorem(payload, seed, c);
        } else {
            throw Failed{"unknown certificate kind " + kind.dump()};
        }
        out.ok = true;
    } catch (const Failed& f) {
        out.failure = f.what;
    } catch (const ParseError& e) {
        out.failure = std::string("malformed certificate: ") + e.what();
    } catch (const Error& e) {
        out.failure = std::string("recheck raised ") + e.what();
    }
    out.checked = c.take();
    return out;
}

}  // namespace krs::cli
