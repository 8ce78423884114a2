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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>

#include <CLI11.hpp>

#include "certificates.hpp"
#include "documents.hpp"
#include "krs/error.hpp"
#include "krs/random.hpp"

namespace krs::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    std::uint32_t trials = 0;
    std::string out_path;
    std::vector<std::string> paths;
};

class Session {
public:
    Session(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

    int validate();
    int decompose();
    int endo();
    int idempotents();
    int equiv();
    int conjugate();
    int oracle();
    int theorem();
    int verify();

private:
    void emit(const Json& doc) {
        if (opt_.out_path.empty()) {
            write_json(doc, out_);
            return;
        }
        std::ofstream f(opt_.out_path);
        if (!f) throw ParseError("cannot write " + opt_.out_path);
        write_json(doc, f);
    }

    ModulePtr load_module(const std::string& path) {
        const Json doc = read_json_file(path);
        if (!is_module_document(doc)) throw ParseError(path + ": not a module document");
        return module_from_json(doc, fs::path(path).parent_path());
    }

    AlgebraPtr load_algebra(const std::string& path) {
        const Json doc = read_json_file(path);
        if (!is_algebra_document(doc)) throw ParseError(path + ": not an algebra document");
        return algebra_from_json(doc);
    }

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
};

int Session::validate() {
    int code = kOk;
    for (const auto& path : opt_.paths) {
        try {
            const Json doc = read_json_file(path);
            const fs::path dir = fs::path(path).parent_path();
            std::string problem;
            std::string what;
            if (is_algebra_document(doc)) {
                const auto a = algebra_from_json(doc);
                const auto report = validate_algebra(*a);
                what = "algebra of dim " + std::to_string(a->dim()) + " over F_" + std::to_string(a->field().characteristic());
                if (!report.ok()) problem = report.describe();
            } else if (is_module_document(doc)) {
                const auto m = module_from_json(doc, dir);
                const auto ar = validate_algebra(*m->algebra());
                what = "module of dim " + std::to_string(m->dim());
                if (!ar.ok()) {
                    problem = "algebra: " + ar.describe();
                } else if (const auto mr = validate_module(*m); !mr.ok()) {
                    problem = mr.describe();
                }
            } else if (doc.is_object() && doc.contains("idempotents")) {
                const Json canon = canonical_document(doc, dir);
                const auto a = algebra_from_json(canon["algebra"]);
                const auto set = idempotents_from_json(a, canon);
                what = "idempotent set of size " + std::to_string(set.size());
                if (const auto ar = validate_algebra(*a); !ar.ok()) {
                    problem = "algebra: " + ar.describe();
                } else if (const auto flags = check_idempotent_set(a, set); !flags.all()) {
                    problem = std::string(flags.each_idempotent ? "" : "not all idempotent; ") +
                              (flags.pairwise_orthogonal ? "" : "not pairwise orthogonal; ") +
                              (flags.complete ? "" : "does not sum to 1");
                }
            } else if (doc.is_object() && doc.contains("kind")) {
                const auto v = verify_certificate(doc);
                what = doc["kind"].dump() + " certificate";
                if (!v.ok) problem = v.failure;
            } else {
                throw ParseError("not an algebra, module, idempotent-set or certificate document");
            }
            if (problem.empty()) {
                out_ << path << ": ok (" << what << ")\n";
            } else {
                out_ << path << ": invalid " << what << ": " << problem << '\n';
                code = std::max<int>(code, kSemanticFailure);
            }
        } catch (const ParseError& e) {
            out_ << path << ": parse error: " << e.what() << '\n';
            code = std::max<int>(code, kParseFailure);
        }
    }
    return code;
}

int Session::decompose() {
    const ModulePtr m = load_module(opt_.paths.at(0));
    const Decomposition d = krs_decompose(m, opt_.seed, opt_.budget);
    emit(make_certificate("decomposition", opt_.seed, decomposition_payload(d, opt_.budget)));
    if (!d.conclusive()) {
        err_ << "inconclusive: a Local verdict is Monte Carlo; certificate flagged\n";
        return kInconclusive;
    }
    return kOk;
}

int Session::endo() {
    const ModulePtr m = load_module(opt_.paths.at(0));
    if (const auto r = validate_module(*m); !r.ok()) throw Error(ErrorCode::InvalidModule, r.describe());
    const EndAlgebra end = end_algebra(m);
    const LocalityVerdict v = is_local(end.algebra(), opt_.budget, opt_.seed, opt_.trials);
    emit(make_certificate("locality", opt_.seed, locality_payload(end, v, opt_.budget)));
    if (!v.conclusive()) {
        err_ << "inconclusive: Monte Carlo Local verdict, failure bound " << v.failure_bound << '\n';
        return kInconclusive;
    }
    return kOk;
}

int Session::idempotents() {
    const std::string& path = opt_.paths.at(0);
    const Json doc = read_json_file(path);
    if (is_algebra_document(doc)) {
        const AlgebraPtr a = algebra_from_json(doc);
        const Decomposition d = krs_decompose(regular_module(a), opt_.seed, opt_.budget);
        std::vector<AlgebraElement> es;
        // i_j o p_j is left multiplication by its value at 1.
        for (std::size_t j = 0; j < d.length(); ++j) {
            es.emplace_back(a, row_times(a->unit(), d.projections[j].matrix() * d.injections[j].matrix()));
        }
        emit(idempotents_to_json(a, es));
        return d.conclusive() ? kOk : kInconclusive;
    }
    if (!is_module_document(doc)) throw ParseError(path + ": not an algebra or module document");
    const ModulePtr m = module_from_json(doc, fs::path(path).parent_path());
    const Decomposition d = krs_decompose(m, opt_.seed, opt_.budget);
    if (!d.conclusive()) {
        err_ << "inconclusive: a Local verdict is Monte Carlo\n";
        return kInconclusive;
    }
    const IdempotentSet set = idempotents_from_decomposition(d, opt_.budget, opt_.seed);
    if (!set.end) throw Error(ErrorCode::ZeroModule, "the zero module has no endomorphism algebra to list");
    Json out = idempotents_to_json(set.end->algebra(), set.idempotents);
    out["module"] = module_to_json(*m);
    emit(out);
    return kOk;
}

int Session::equiv() {
    Json payloads[2];
    Decomposition ds[2];
    for (int k = 0; k < 2; ++k) {
        const Json cert = read_json_file(opt_.paths.at(k));
        if (!cert.is_object() || cert.value("kind", "") != "decomposition") {
            throw ParseError(opt_.paths[k] + ": not a decomposition certificate");
        }
        const auto v = verify_certificate(cert);
        if (!v.ok) {
            err_ << opt_.paths[k] << ": certificate does not verify: " << v.failure << '\n';
            return kSemanticFailure;
        }
        payloads[k] = cert["payload"];
        ds[k] = decomposition_from_payload(payloads[k]);
    }
    if (!(*ds[0].parent == *ds[1].parent)) {
        err_ << "the certificates decompose different modules\n";
        return kSemanticFailure;
    }
    const EquivalenceCertificate e = check_equivalence(ds[0], ds[1], opt_.seed);
    emit(make_certificate("equivalence", opt_.seed, equivalence_payload(payloads[0], payloads[1], e)));
    return kOk;
}

int Session::conjugate() {
    const AlgebraPtr a = load_algebra(opt_.paths.at(0));
    if (const auto r = validate_algebra(*a); !r.ok()) throw Error(ErrorCode::InvalidAlgebra, r.describe());
    std::vector<AlgebraElement> sets[2];
    for (int k = 0; k < 2; ++k) {
        const std::string& path = opt_.paths.at(1 + k);
        const Json doc = read_json_file(path);
        if (doc.is_object() && doc.contains("algebra")) {
            const Json canon = canonical_document(doc, fs::path(path).parent_path());
            if (canon["algebra"] != algebra_to_json(*a)) {
                throw Error(ErrorCode::AlgebraMismatch, path + ": idempotents live in a different algebra");
            }
        }
        sets[k] = idempotents_from_json(a, doc);
    }
    const ConjugationCertificate c = conjugator(a, sets[0], sets[1], opt_.seed, opt_.budget);
    emit(make_certificate("conjugation", opt_.seed, conjugation_payload(c)));
    return kOk;
}

int Session::oracle() {
    const std::string& path = opt_.paths.at(0);
    const Json doc = read_json_file(path);
    if (is_algebra_document(doc)) {
        const AlgebraPtr a = algebra_from_json(doc);
        const Lemma3Report report = lemma3_check(a, {opt_.budget});
        emit(make_certificate("lemma3", opt_.seed, lemma3_payload(a, report, opt_.budget)));
        if (!report.ok()) {
            err_ << "the three predicates disagree on some idempotent\n";
            return kSemanticFailure;
        }
        return kOk;
    }
    if (!is_module_document(doc)) throw ParseError(path + ": not an algebra or module document");
    const ModulePtr m = module_from_json(doc, fs::path(path).parent_path());
    const Decomposition d = oracle_decompose(m, {opt_.budget});
    emit(make_certificate("decomposition", opt_.seed, decomposition_payload(d, opt_.budget)));
    return kOk;
}

int Session::theorem() {
    std::vector<ModulePtr> modules;
    for (const auto& path : opt_.paths) modules.push_back(load_module(path));
    std::vector<Json> decompositions;
    for (std::size_t i = 0; i < modules.size(); ++i) {
        decompositions.push_back(
            decomposition_payload(krs_decompose(modules[i], derive_seed(opt_.seed, i), opt_.budget), opt_.budget));
    }
    const TheoremReport report = verify_main_theorem(modules, opt_.seed, opt_.budget);
    emit(make_certificate("main-theorem", opt_.seed, theorem_payload(modules, decompositions, report, opt_.budget)));
    for (const auto& c : report.checks) {
        if (!c.passed) err_ << "module " << c.module_index << ": " << c.name << " failed: " << c.detail << '\n';
    }
    return report.ok() ? kOk : kSemanticFailure;
}

int Session::verify() {
    const Json cert = read_json_file(opt_.paths.at(0));
    std::vector<Json> inputs;
    for (std::size_t i = 1; i < opt_.paths.size(); ++i) {
        const Json doc = read_json_file(opt_.paths[i]);
        inputs.push_back(canonical_document(doc, fs::path(opt_.paths[i]).parent_path()));
    }
    const Verification v = verify_certificate(cert, inputs);
    for (const auto& c : v.checked) out_ << "checked: " << c << '\n';
    if (!v.ok) {
        out_ << "FAILED: " << v.failure << '\n';
        return kSemanticFailure;
    }
    out_ << "verified " << v.checked.size() << " equations\n";
    return kOk;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::BudgetExceeded:
            return kBudgetExceeded;
        case ErrorCode::IsoSearchInconclusive:
            return kInconclusive;
        default:
            return kSemanticFailure;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Krull-Remak-Schmidt decompositions over prime fields, with checkable certificates", "krs"};
    app.require_subcommand(1);
    Options opt;

    auto seed = [&](CLI::App* c) { c->add_option("--seed", opt.seed, "Seed for all randomized steps")->capture_default_str(); };
    auto budget = [&](CLI::App* c) {
        c->add_option("--budget", opt.budget, "Largest algebra (in elements) scanned exhaustively")->capture_default_str();
    };
    auto out_path = [&](CLI::App* c) { c->add_option("--out", opt.out_path, "Write the result here instead of stdout"); };

    std::map<CLI::App*, std::function<int(Session&)>> handlers;
    auto command = [&](const char* name, const char* help, int (Session::*fn)()) {
        CLI::App* c = app.add_subcommand(name, help);
        handlers[c] = [fn](Session& s) { return (s.*fn)(); };
        return c;
    };

    auto* validate = command("validate", "Check algebra, module, idempotent-set and certificate documents", &Session::validate);
    validate->add_option("paths", opt.paths, "Documents")->required();

    auto* decompose = command("decompose", "Krull-Remak-Schmidt decomposition certificate", &Session::decompose);
    decompose->add_option("module", opt.paths, "Module document")->required()->expected(1);
    seed(decompose), budget(decompose), out_path(decompose);

    auto* endo = command("endo", "Endomorphism algebra and its locality verdict", &Session::endo);
    endo->add_option("module", opt.paths, "Module document")->required()->expected(1);
    endo->add_option("--trials", opt.trials, "Monte Carlo draws above the budget (0: automatic)")->capture_default_str();
    seed(endo), budget(endo), out_path(endo);

    auto* idems = command("idempotents", "Complete primitive orthogonal idempotents", &Session::idempotents);
    idems->add_option("path", opt.paths, "Algebra or module document")->required()->expected(1);
    seed(idems), budget(idems), out_path(idems);

    auto* equiv = command("equiv", "Equivalence certificate for two decompositions", &Session::equiv);
    equiv->add_option("certificates", opt.paths, "Two decomposition certificates")->required()->expected(2);
    seed(equiv), out_path(equiv);

    auto* conj = command("conjugate", "Conjugating unit for two primitive idempotent sets", &Session::conjugate);
    conj->add_option("inputs", opt.paths, "Algebra document, then two idempotent-set documents")->required()->expected(3);
    seed(conj), budget(conj), out_path(conj);

    auto* orac = command("oracle", "Exhaustive enumeration report", &Session::oracle);
    orac->add_option("path", opt.paths, "Algebra or module document")->required()->expected(1);
    budget(orac), out_path(orac);

    auto* thm = command("theorem", "Run the main-theorem harness on modules", &Session::theorem);
    thm->add_option("modules", opt.paths, "Module documents")->required();
    seed(thm), budget(thm), out_path(thm);

    auto* ver = command("verify", "Recheck a certificate by exact arithmetic", &Session::verify);
    ver->add_option("certificate", opt.paths, "Certificate, then optional input documents")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kParseFailure;
    }

    CLI::App* chosen = app.get_subcommands().front();
    Session session(opt, out, err);
    try {
        return handlers.at(chosen)(session);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseFailure;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

}  // namespace krs::cli
