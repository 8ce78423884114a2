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

#ifndef KRS_TOOLS_DOCUMENTS_HPP
#define KRS_TOOLS_DOCUMENTS_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "krs/algebra.hpp"
#include "krs/module.hpp"

namespace krs::cli {

using Json = nlohmann::json;

/// Malformed JSON or a document that does not have the expected shape.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json read_json_file(const std::filesystem::path& path);
void write_json(const Json& doc, std::ostream& os);

/// Throws ParseError; integers are reduced mod p.
AlgebraPtr algebra_from_json(const Json& doc);
Json algebra_to_json(const StructureAlgebra& algebra);

/// `algebra` may be an inline AlgebraDocument or a path relative to base_dir.
ModulePtr module_from_json(const Json& doc, const std::filesystem::path& base_dir = {});
/// Module over an already loaded algebra; any "algebra" member is ignored.
ModulePtr module_over(const AlgebraPtr& algebra, const Json& doc);
/// The algebra is written inline.
Json module_to_json(const RightModule& module);

Json vector_to_json(std::span<const Residue> v);
Vector vector_from_json(const Json& doc, const PrimeField& field, std::size_t n);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& doc, const PrimeField& field, std::size_t rows, std::size_t cols);

/// doc[key]; throws ParseError when doc is not an object or lacks key.
const Json& member(const Json& doc, const char* key);
std::size_t size_from_json(const Json& doc, const char* what);
std::uint64_t u64_from_json(const Json& doc, const char* what);
bool bool_from_json(const Json& doc, const char* what);

/// Idempotent-set document: {"algebra"?: ..., "idempotents": [[...], ...]}.
std::vector<AlgebraElement> idempotents_from_json(const AlgebraPtr& algebra, const Json& doc);
Json idempotents_to_json(const AlgebraPtr& algebra, std::span<const AlgebraElement> idempotents);

/// Algebra, module or idempotent-set document in the form the writers
/// emit: residues reduced, algebras inline. Throws ParseError.
Json canonical_document(const Json& doc, const std::filesystem::path& base_dir = {});

/// Documents that carry structure_constants are algebras; "action" marks a module.
bool is_algebra_document(const Json& doc);
bool is_module_document(const Json& doc);

}  // namespace krs::cli

#endif
