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

#include "weakreal/error.h"

namespace weakreal {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::NotUnitary:
            return "NotUnitary";
        case ErrorKind::NotDensityMatrix:
            return "NotDensityMatrix";
        case ErrorKind::DimensionTooLarge:
            return "DimensionTooLarge";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::InvalidDimension:
            return "InvalidDimension";
        case ErrorKind::OutOfRange:
            return "OutOfRange";
        case ErrorKind::InvalidOutcome:
            return "InvalidOutcome";
        case ErrorKind::IncompleteData:
            return "IncompleteData";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::Inconsistent:
            return "Inconsistent";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace weakreal
