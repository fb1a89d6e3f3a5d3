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

#include "weakreal/measures.h"

#include <cmath>
#include <string>

namespace weakreal {

namespace {

void require_epsilon(double epsilon) {
    if (!(epsilon >= 0 && epsilon <= 1)) {
        throw Error(ErrorKind::OutOfRange, "measurement strength must lie in [0, 1], got " + std::to_string(epsilon));
    }
}

void require_matching(const DensityMatrix &rho, const Observable &obs) {
    if (rho.dim() != obs.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "state and observable dimensions differ");
    }
}

double xlogx(double x) {
    return x > 0 ? x * std::log(x) : 0.0;
}

}  // namespace

double nats_to_bits(double nats) {
    return nats / std::log(2.0);
}

double clamp_negative_zero(double value) {
    if (value < 0 && value >= kNegativeZeroFloor) {
        return 0.0;
    }
    return value;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    double total = 0;
    for (double lambda : rho.eigenvalues()) {
        total -= xlogx(lambda);
    }
    return std::max(total, 0.0);
}

double shannon_binary_entropy(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw Error(ErrorKind::OutOfRange, "probability must lie in [0, 1], got " + std::to_string(p));
    }
    double h = -xlogx(p) - xlogx(1 - p);
    return h > 0 ? h : 0.0;
}

DensityMatrix dephasing_map(const DensityMatrix &rho, const Observable &obs) {
    require_matching(rho, obs);
    ComplexMatrix result(rho.dim());
    for (const auto &proj : obs.projectors()) {
        result += proj * trace_product(proj, rho.matrix());
    }
    return DensityMatrix(result);
}

DensityMatrix weak_collapse(const DensityMatrix &rho, const Observable &obs, size_t k, double epsilon) {
    require_epsilon(epsilon);
    require_matching(rho, obs);
    const ComplexMatrix &proj = obs.projector(k);
    return DensityMatrix(rho.matrix() * (1 - epsilon) + proj * epsilon);
}

DensityMatrix monitoring_map(const DensityMatrix &rho, const Observable &obs, double epsilon) {
    require_epsilon(epsilon);
    require_matching(rho, obs);
    ComplexMatrix result(rho.dim());
    for (size_t k = 0; k < obs.num_outcomes(); k++) {
        double p_k = trace_product(obs.projector(k), rho.matrix());
        result += weak_collapse(rho, obs, k, epsilon).matrix() * p_k;
    }
    return DensityMatrix(result);
}

double irreality(const Observable &obs, const DensityMatrix &rho) {
    require_matching(rho, obs);
    return clamp_negative_zero(von_neumann_entropy(dephasing_map(rho, obs)) - von_neumann_entropy(rho));
}

RealityReport delta_reality(const Observable &obs, const DensityMatrix &rho, double epsilon) {
    require_epsilon(epsilon);
    DensityMatrix monitored = monitoring_map(rho, obs, epsilon);

    RealityReport report;
    report.epsilon = epsilon;
    report.irreality_before = irreality(obs, rho);
    report.irreality_after = irreality(obs, monitored);
    double by_irreality = report.irreality_before - report.irreality_after;
    double by_entropy = von_neumann_entropy(monitored) - von_neumann_entropy(rho);
    if (std::abs(by_irreality - by_entropy) > 1e-10) {
        throw Error(
            ErrorKind::Inconsistent,
            "irreality and entropy forms of the reality change disagree: " + std::to_string(by_irreality) + " vs " +
                std::to_string(by_entropy));
    }
    report.delta_reality = clamp_negative_zero(by_entropy);
    report.delta_information = -by_entropy;
    report.bound_rhs = epsilon * report.irreality_before;
    return report;
}

InformationLedger information_ledger(const DensityMatrix &rho_sa) {
    if (rho_sa.dim() != 4) {
        throw Error(ErrorKind::InvalidDimension, "information_ledger expects a two-qubit state");
    }
    double s_joint = von_neumann_entropy(rho_sa);
    double s_system = von_neumann_entropy(partial_trace(rho_sa, Subsystem::System));
    double s_ancilla = von_neumann_entropy(partial_trace(rho_sa, Subsystem::Ancilla));

    InformationLedger ledger;
    ledger.d_system = 2;
    ledger.d_ancilla = 2;
    ledger.i_system = std::max(0.0, std::log(2.0) - s_system);
    ledger.i_ancilla = std::max(0.0, std::log(2.0) - s_ancilla);
    ledger.i_mutual = std::max(0.0, s_system + s_ancilla - s_joint);
    ledger.i_total = ledger.i_system + ledger.i_ancilla + ledger.i_mutual;
    return ledger;
}

InformationChange delta_information(const InformationLedger &before, const InformationLedger &after) {
    if (before.d_system != after.d_system || before.d_ancilla != after.d_ancilla) {
        throw Error(ErrorKind::DimensionMismatch, "ledgers describe different bipartitions");
    }
    InformationChange change;
    change.delta_context = (after.i_mutual - before.i_mutual) + (after.i_ancilla - before.i_ancilla);
    change.delta_system = after.i_system - before.i_system;
    return change;
}

}  // namespace weakreal
