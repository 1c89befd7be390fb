// Copyright 2026 The pqca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PQCA_ERROR_HPP
#define PQCA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pqca {

enum class ErrorCode {
    Parse,
    Io,
    InvalidArgument,
    UnknownSpecies,
    NonClassicalPulse,
    MissingEntry,
    DissipativePulse,
    DimensionCap,
    DimensionMismatch,
    NotUnitary,
    NonAdjacentSpecies,
    CenterOfGravityViolation,
    PartialPeriodPolymer,
    CapacityExceeded,
    NonZeroInitialState,
    LayoutMismatch,
    SectionOverflow,
    NoFastDecay,
    ShiftOutOfRange,
    NoSolution,
    // A compiled routine failed its own self-check. Always a bug.
    InvariantViolation,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
    }
    ErrorCode code() const {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace pqca

#endif
