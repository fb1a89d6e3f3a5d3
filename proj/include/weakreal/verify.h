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

#ifndef WEAKREAL_VERIFY_H
#define WEAKREAL_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

#include "weakreal/weakmeas.h"

namespace weakreal {

struct VerifyOptions {
    std::uint64_t seed = 1;
    /// Open-system channel exercised by the informational checks.
    NoiseSpec noise;
    /// Test hook: added to the calibrated strength 1 - cos 2 theta before
    /// the circuit is compared with the monitoring map. Nonzero values must
    /// make that check fail.
    double tamper_epsilon = 0.0;
};

struct PropertyResult {
    std::string name;
    bool passed = false;
    /// Informational entries are printed but never affect the exit status.
    bool informational = false;
    std::string detail;
};

std::vector<PropertyResult> run_verification(const VerifyOptions &options);

}  // namespace weakreal

#endif
