// Copyright 2026 The esdyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "esdyn/error.hpp"

namespace esdyn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::TetrahedronViolation: return "TetrahedronViolation";
    case ErrorCode::DegenerateApex: return "DegenerateApex";
    case ErrorCode::ClassificationAmbiguous: return "ClassificationAmbiguous";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::SpectrumNotReal: return "SpectrumNotReal";
    case ErrorCode::SpectrumNegative: return "SpectrumNegative";
    case ErrorCode::ConcurrenceMismatch: return "ConcurrenceMismatch";
    case ErrorCode::WrongBranch: return "WrongBranch";
    case ErrorCode::InvalidRepresentative: return "InvalidRepresentative";
    case ErrorCode::NotEsd: return "NotEsd";
    case ErrorCode::NoInitialEntanglement: return "NoInitialEntanglement";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace esdyn
