// Copyright 2025-2026 The compatrad developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace compatrad {

enum class ErrorCode {
    invalid_povm,
    degenerate_povm,
    out_of_range,
    too_few_effects,
    not_planar,
    infeasible,
    infeasible_weights,
    sampling_stuck,
    shape_mismatch,
    insufficient_data,
    unsupported,
    budget_exhausted,
    parse_error,
    internal,
};

/// Library error carrying a machine-readable code next to the message.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

inline const char *error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::invalid_povm:
        return "InvalidPOVM";
    case ErrorCode::degenerate_povm:
        return "DegeneratePOVM";
    case ErrorCode::out_of_range:
        return "OutOfRange";
    case ErrorCode::too_few_effects:
        return "TooFewEffects";
    case ErrorCode::not_planar:
        return "NotPlanar";
    case ErrorCode::infeasible:
        return "Infeasible";
    case ErrorCode::infeasible_weights:
        return "InfeasibleWeights";
    case ErrorCode::sampling_stuck:
        return "SamplingStuck";
    case ErrorCode::shape_mismatch:
        return "ShapeMismatch";
    case ErrorCode::insufficient_data:
        return "InsufficientData";
    case ErrorCode::unsupported:
        return "Unsupported";
    case ErrorCode::budget_exhausted:
        return "BudgetExhausted";
    case ErrorCode::parse_error:
        return "ParseError";
    case ErrorCode::internal:
        return "InternalError";
    }
    return "UnknownError";
}

} // namespace compatrad
