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

#ifndef WEAKREAL_MEASURES_H
#define WEAKREAL_MEASURES_H

#include <cstddef>

#include "weakreal/qcore.h"

namespace weakreal {

/// All entropic quantities are in nats. Divide by ln 2 for bits.
double nats_to_bits(double nats);

/// Values in [-1e-10, 0) produced by rounding are reported as exactly zero.
inline constexpr double kNegativeZeroFloor = -1e-10;
double clamp_negative_zero(double value);

/// -sum_i lambda_i ln lambda_i, with 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix &rho);

/// -p ln p - (1-p) ln(1-p). Throws OutOfRange outside [0, 1].
double shannon_binary_entropy(double p);

/// Phi_O(rho) = sum_k <k|rho|k> |k><k|, using the rank-1 projectors of `obs`.
DensityMatrix dephasing_map(const DensityMatrix &rho, const Observable &obs);

/// Post-measurement state for outcome k of a strength-epsilon measurement:
/// (1 - epsilon) rho + epsilon |k><k|.
DensityMatrix weak_collapse(const DensityMatrix &rho, const Observable &obs, std::size_t k, double epsilon);

/// Outcome-averaged weak measurement sum_k p_k C_k(rho). Algebraically equal
/// to (1 - epsilon) rho + epsilon Phi_O(rho).
DensityMatrix monitoring_map(const DensityMatrix &rho, const Observable &obs, double epsilon);

/// Irreality of O in rho: S(Phi_O(rho)) - S(rho), clamped at zero.
double irreality(const Observable &obs, const DensityMatrix &rho);

struct RealityReport {
    double irreality_before = 0;
    double irreality_after = 0;
    /// Entropy gained by the reduced system, S(after) - S(before).
    double delta_reality = 0;
    /// Signed change of the system's local information ln d - S. In the
    /// ideal case delta_reality + delta_information = 0.
    double delta_information = 0;
    double epsilon = 0;
    /// Lower bound on delta_reality: epsilon * irreality_before.
    double bound_rhs = 0;
};

/// Reality change under monitoring_map. Both the irreality-difference and
/// entropy-difference forms are evaluated; throws Inconsistent if they
/// disagree by more than 1e-10.
RealityReport delta_reality(const Observable &obs, const DensityMatrix &rho, double epsilon);

struct InformationLedger {
    double i_system = 0;
    double i_ancilla = 0;
    double i_mutual = 0;
    double i_total = 0;
    std::size_t d_system = 2;
    std::size_t d_ancilla = 2;
};

/// Local, ancilla, and mutual information of a two-qubit state.
InformationLedger information_ledger(const DensityMatrix &rho_sa);

struct InformationChange {
    /// Change of mutual plus ancilla information.
    double delta_context = 0;
    /// Change of system local information.
    double delta_system = 0;
};

InformationChange delta_information(const InformationLedger &before, const InformationLedger &after);

}  // namespace weakreal

#endif
