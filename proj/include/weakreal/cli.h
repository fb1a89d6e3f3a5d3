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

#ifndef WEAKREAL_CLI_H
#define WEAKREAL_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "weakreal/tomography.h"
#include "weakreal/weakmeas.h"

namespace weakreal {

enum class Command { SweepStrength, SweepMixing, TomoRun, Verify };
enum class Units { Nats, Bits };

const char *command_name(Command command);

/// Evenly spaced grid from start to stop inclusive.
struct RangeSpec {
    double start = 0;
    double stop = 0;
    int points = 2;

    std::vector<double> values() const;
};

struct RunConfig {
    Command command = Command::Verify;
    RangeSpec theta_deg{0.0, 45.0, 10};
    RangeSpec p{0.5, 1.0, 10};
    double theta_fixed_deg = 16.0;
    /// Meter mixing weight for tomo-run.
    double p_fixed = 1.0;
    NoiseSpec noise;
    /// 0 selects exact evaluation only.
    std::uint64_t shots = 0;
    std::uint64_t seed = 1;
    /// Independent tomography datasets per grid point.
    int repeats = 5;
    ReconstructionMethod method = ReconstructionMethod::ProjectedLinearInversion;
    Units units = Units::Nats;
    /// Empty or "-" writes to standard output.
    std::string out_path;
    /// tomo-run: reconstruct this count table instead of simulating one.
    std::string counts_in;
    double tamper_epsilon = 0.0;

    /// Throws Error(InvalidArgument / OutOfRange) on inconsistent settings.
    void validate() const;
};

/// Single-line description used as the `#` header of CSV outputs.
std::string describe(const RunConfig &cfg);

void cmd_sweep_strength(const RunConfig &cfg, std::ostream &out);
void cmd_sweep_mixing(const RunConfig &cfg, std::ostream &out);
/// Writes the count table to `table_out` (if non-null) and a summary to `report`.
void cmd_tomo_run(const RunConfig &cfg, std::ostream *table_out, std::ostream &report);
/// Returns the process exit code: 0 if every non-informational property holds.
int cmd_verify(const RunConfig &cfg, std::ostream &report);

/// Full command-line entry point. Exit codes: 0 success, 1 verification
/// failure, 2 usage or configuration error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace weakreal

#endif
