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

#include "documents.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "krs/error.hpp"

namespace krs::cli {

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

namespace {

bool is_flat(const Json& doc) {
    return std::all_of(doc.begin(), doc.end(), [](const Json& x) { return x.is_primitive(); });
}

// Two-space indent; arrays of scalars stay on one line.
void write_value(const Json& doc, std::ostream& os, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    if (doc.is_array()) {
        if (doc.empty() || is_flat(doc)) {
            os << doc.dump();
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < doc.size(); ++i) {
            os << pad;
            write_value(doc[i], os, depth + 1);
            os << (i + 1 < doc.size() ? ",\n" : "\n");
        }
        os << close << ']';
    } else if (doc.is_object()) {
        if (doc.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        std::size_t i = 0;
        for (auto it = doc.begin(); it != doc.end(); ++it, ++i) {
            os << pad << Json(it.key()).dump() << ": ";
            write_value(it.value(), os, depth + 1);
            os << (i + 1 < doc.size() ? ",\n" : "\n");
        }
        os << close << '}';
    } else {
        os << doc.dump();
    }
}

}  // namespace

void write_json(const Json& doc, std::ostream& os) {
    write_value(doc, os, 0);
    os << '\n';
}

const Json& member(const Json& doc, const char* key) {
    if (!doc.is_object()) throw ParseError("expected an object holding \"" + std::string(key) + "\"");
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError("missing \"" + std::string(key) + "\"");
    return *it;
}

namespace {

const Json& array_of(const Json& doc, std::size_t n, const char* what) {
    if (!doc.is_array() || doc.size() != n) {
        throw ParseError(std::string(what) + ": expected an array of length " + std::to_string(n));
    }
    return doc;
}

Residue residue(const Json& x, const PrimeField& field) {
    if (!x.is_number_integer()) throw ParseError("expected an integer, got " + x.dump());
    if (x.is_number_unsigned()) return field.reduce_unsigned(x.get<std::uint64_t>());
    return field.reduce(x.get<std::int64_t>());
}

}  // namespace

std::uint64_t u64_from_json(const Json& doc, const char* what) {
    if (!doc.is_number_unsigned() && !(doc.is_number_integer() && doc.get<std::int64_t>() >= 0)) {
        throw ParseError(std::string(what) + ": expected a non-negative integer");
    }
    return doc.get<std::uint64_t>();
}

std::size_t size_from_json(const Json& doc, const char* what) {
    return static_cast<std::size_t>(u64_from_json(doc, what));
}

bool bool_from_json(const Json& doc, const char* what) {
    if (!doc.is_boolean()) throw ParseError(std::string(what) + ": expected true or false");
    return doc.get<bool>();
}

Json vector_to_json(std::span<const Residue> v) {
    Json out = Json::array();
    for (auto x : v) out.push_back(x);
    return out;
}

Vector vector_from_json(const Json& doc, const PrimeField& field, std::size_t n) {
    array_of(doc, n, "vector");
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = residue(doc[i], field);
    return v;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
    return out;
}

Matrix matrix_from_json(const Json& doc, const PrimeField& field, std::size_t rows, std::size_t cols) {
    array_of(doc, rows, "matrix rows");
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Vector row = vector_from_json(doc[r], field, cols);
        std::copy(row.begin(), row.end(), m.row(r).begin());
    }
    return m;
}

AlgebraPtr algebra_from_json(const Json& doc) {
    const auto p = u64_from_json(member(doc, "p"), "p");
    if (!is_prime(p) || p > 2147483647ULL) throw ParseError("p = " + std::to_string(p) + " is not a prime below 2^31");
    const PrimeField field(p);
    const std::size_t n = size_from_json(member(doc, "dim"), "dim");
    if (n == 0) throw ParseError("dim: an algebra has dimension at least 1");
    const Json& sc = array_of(member(doc, "structure_constants"), n, "structure_constants");
    std::vector<Residue> constants(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& slab = array_of(sc[i], n, "structure_constants[i]");
        for (std::size_t j = 0; j < n; ++j) {
            const Vector row = vector_from_json(slab[j], field, n);
            std::copy(row.begin(), row.end(), constants.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n));
        }
    }
    Vector unit = vector_from_json(member(doc, "unit"), field, n);
    std::vector<std::string> names;
    if (auto it = doc.find("basis_names"); it != doc.end()) {
        array_of(*it, n, "basis_names");
        for (const auto& x : *it) {
            if (!x.is_string()) throw ParseError("basis_names: expected strings");
            names.push_back(x.get<std::string>());
        }
    }
    return make_algebra(field, n, std::move(constants), std::move(unit), std::move(names));
}

Json algebra_to_json(const StructureAlgebra& a) {
    const std::size_t n = a.dim();
    Json sc = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json slab = Json::array();
        for (std::size_t j = 0; j < n; ++j) {
            Json row = Json::array();
            for (std::size_t k = 0; k < n; ++k) row.push_back(a.constant(i, j, k));
            slab.push_back(std::move(row));
        }
        sc.push_back(std::move(slab));
    }
    Json out{{"p", a.field().characteristic()}, {"dim", n}, {"structure_constants", std::move(sc)},
             {"unit", vector_to_json(a.unit())}};
    if (!a.basis_names().empty()) out["basis_names"] = a.basis_names();
    return out;
}

ModulePtr module_over(const AlgebraPtr& algebra, const Json& doc) {
    const std::size_t m = size_from_json(member(doc, "dim"), "dim");
    const Json& action = array_of(member(doc, "action"), algebra->dim(), "action");
    std::vector<Matrix> mats;
    for (const auto& a : action) mats.push_back(matrix_from_json(a, algebra->field(), m, m));
    return make_module(RightModule(algebra, m, std::move(mats)));
}

ModulePtr module_from_json(const Json& doc, const std::filesystem::path& base_dir) {
    const Json& aj = member(doc, "algebra");
    AlgebraPtr algebra;
    if (aj.is_string()) {
        algebra = algebra_from_json(read_json_file(base_dir / aj.get<std::string>()));
    } else {
        algebra = algebra_from_json(aj);
    }
    return module_over(algebra, doc);
}

Json module_to_json(const RightModule& module) {
    Json action = Json::array();
    for (const auto& a : module.action()) action.push_back(matrix_to_json(a));
    return Json{{"algebra", algebra_to_json(*module.algebra())}, {"dim", module.dim()}, {"action", std::move(action)}};
}

std::vector<AlgebraElement> idempotents_from_json(const AlgebraPtr& algebra, const Json& doc) {
    const Json& list = member(doc, "idempotents");
    if (!list.is_array()) throw ParseError("idempotents: expected an array");
    std::vector<AlgebraElement> out;
    for (const auto& x : list) out.emplace_back(algebra, vector_from_json(x, algebra->field(), algebra->dim()));
    return out;
}

Json idempotents_to_json(const AlgebraPtr& algebra, std::span<const AlgebraElement> idempotents) {
    Json list = Json::array();
    for (const auto& e : idempotents) list.push_back(vector_to_json(e.coeffs()));
    return Json{{"algebra", algebra_to_json(*algebra)}, {"idempotents", std::move(list)}};
}

Json canonical_document(const Json& doc, const std::filesystem::path& base_dir) {
    if (is_algebra_document(doc)) return algebra_to_json(*algebra_from_json(doc));
    if (is_module_document(doc)) return module_to_json(*module_from_json(doc, base_dir));
    if (doc.is_object() && doc.contains("idempotents")) {
        const Json& aj = member(doc, "algebra");
        const AlgebraPtr algebra =
            aj.is_string() ? algebra_from_json(read_json_file(base_dir / aj.get<std::string>())) : algebra_from_json(aj);
        const auto idempotents = idempotents_from_json(algebra, doc);
        return idempotents_to_json(algebra, idempotents);
    }
    throw ParseError("not an algebra, module or idempotent-set document");
}

bool is_algebra_document(const Json& doc) { return doc.is_object() && doc.contains("structure_constants"); }
bool is_module_document(const Json& doc) { return doc.is_object() && doc.contains("action"); }

}  // namespace krs::cli
