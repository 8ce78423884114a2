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

#ifndef KRS_TOOLS_CERTIFICATES_HPP
#define KRS_TOOLS_CERTIFICATES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "documents.hpp"
#include "krs/krs.hpp"
#include "krs/oracle.hpp"

namespace krs::cli {

inline constexpr const char* kEngineVersion = "0.1.0";

/// {kind, engine_version, seed, payload}. Keys serialize sorted, so equal
/// inputs give byte-identical output.
Json make_certificate(const std::string& kind, std::uint64_t seed, Json payload);

Json locality_to_json(const LocalityVerdict& v);

/// Every payload embeds the documents it was computed from.
Json decomposition_payload(const Decomposition& d, std::uint64_t budget);
Json equivalence_payload(const Json& first, const Json& second, const EquivalenceCertificate& cert);
Json conjugation_payload(const ConjugationCertificate& cert);
Json locality_payload(const EndAlgebra& end, const LocalityVerdict& verdict, std::uint64_t budget);
Json lemma3_payload(const AlgebraPtr& algebra, const Lemma3Report& report, std::uint64_t budget);
Json theorem_payload(std::span<const ModulePtr> modules, std::span<const Json> decompositions,
                     const TheoremReport& report, std::uint64_t budget);

/// Rebuilds the engine object from a decomposition payload. Shapes are
/// checked; the equations are not. Throws ParseError.
Decomposition decomposition_from_payload(const Json& payload);

struct Verification {
    bool ok = false;
    /// Equations rechecked, in order.
    std::vector<std::string> checked;
    /// First failing equation when !ok.
    std::string failure;
};

/// Exact recheck of a certificate. Each entry of `inputs` is a canonical
/// document (see canonical_document) that must be embedded in it.
Verification verify_certificate(const Json& certificate, std::span<const Json> inputs = {});

}  // namespace krs::cli

#endif
