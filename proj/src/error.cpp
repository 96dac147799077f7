// Copyright 2026 csrskit developers
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

#include "csrs/error.hpp"

namespace csrs {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Range: return "out of range";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::ResonanceProximity: return "resonance proximity";
    case ErrorCode::InfeasibleScheme: return "infeasible scheme";
    case ErrorCode::NoRoot: return "no root";
    case ErrorCode::NoResonance: return "no resonance";
    case ErrorCode::Unbounded: return "unbounded";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::NotConverged: return "not converged";
    case ErrorCode::Config: return "configuration error";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace csrs
