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

#include "krs/error.hpp"

namespace krs {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ZeroInverse: return "ZeroInverse";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NoCoprimeSplit: return "NoCoprimeSplit";
        case ErrorCode::InvalidPart: return "InvalidPart";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
        case ErrorCode::InvalidModule: return "InvalidModule";
        case ErrorCode::NotIdempotent: return "NotIdempotent";
        case ErrorCode::ZeroIdempotent: return "ZeroIdempotent";
        case ErrorCode::ZeroModule: return "ZeroModule";
        case ErrorCode::InvalidChain: return "InvalidChain";
        case ErrorCode::NotEquivalent: return "NotEquivalent";
        case ErrorCode::MatchingFailed: return "MatchingFailed";
        case ErrorCode::IsoSearchInconclusive: return "IsoSearchInconclusive";
        case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
        case ErrorCode::NotCompleteOrthogonalPrimitive: return "NotCompleteOrthogonalPrimitive";
        case ErrorCode::NoMatching: return "NoMatching";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace krs
