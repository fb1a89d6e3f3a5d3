// Copyright 2026 The weakreal Authors
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

#ifndef WEAKREAL_ERROR_H
#define WEAKREAL_ERROR_H

#include <stdexcept>
#include <string>

namespace weakreal {

enum class ErrorKind {
    NotHermitian,
    NotUnitary,
    NotDensityMatrix,
    DimensionTooLarge,
    DimensionMismatch,
    InvalidDimension,
    OutOfRange,
    InvalidOutcome,
    IncompleteData,
    InvalidArgument,
    Inconsistent,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers can dispatch without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace weakreal

#endif
