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

#include "weakreal/weakmeas.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace weakreal {

namespace {

// Slack on the theta domain so that values converted from degrees land
// inside [0, pi/4].
constexpr double kThetaSlack = 1e-12;

ComplexMatrix meter_projector(double angle) {
    return PureState({std::cos(angle), std::sin(angle)}).projector();
}

}  // namespace

double degrees_to_radians(double degrees) {
    return degrees * M_PI / 180.0;
}

double radians_to_degrees(double radians) {
    return radians * 180.0 / M_PI;
}

MeterSpec::MeterSpec(double theta, double mixing_p) : theta_(theta), mixing_p_(mixing_p) {
    if (!(theta >= -kThetaSlack && theta <= kQuarterPi + kThetaSlack)) {
        throw Error(ErrorKind::OutOfRange, "meter angle must lie in [0, pi/4], got " + std::to_string(theta));
    }
    if (!(mixing_p >= 0 && mixing_p <= 1)) {
        throw Error(ErrorKind::OutOfRange, "meter mixing weight must lie in [0, 1], got " + std::to_string(mixing_p));
    }
    theta_ = std::clamp(theta, 0.0, kQuarterPi);
}

MeterSpec MeterSpec::from_degrees(double theta_deg, double mixing_p) {
    return MeterSpec(degrees_to_radians(theta_deg), mixing_p);
}

double MeterSpec::epsilon() const noexcept {
    return std::clamp(1 - std::cos(2 * theta_), 0.0, 1.0);
}

double MeterSpec::s_m() const {
    return shannon_binary_entropy(mixing_p_);
}

double NoiseSpec::kappa(double epsilon) const {
    switch (kind) {
        case NoiseKind::None:
            return 0.0;
        case NoiseKind::JointLossScaling:
            return kappa0 * epsilon;
        case NoiseKind::SystemDephasing:
        case NoiseKind::SystemDepolarizing:
            return scaling == NoiseScaling::LinearInEpsilon ? kappa0 * epsilon : kappa0;
    }
    return 0.0;
}

void NoiseSpec::validate() const {
    if (!(kappa0 >= 0 && kappa0 <= 1)) {
        throw Error(ErrorKind::OutOfRange, "noise strength kappa0 must lie in [0, 1]");
    }
}

const char *noise_kind_name(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::None:
            return "none";
        case NoiseKind::SystemDephasing:
            return "dephasing";
        case NoiseKind::SystemDepolarizing:
            return "depolarizing";
        case NoiseKind::JointLossScaling:
            return "joint-loss";
    }
    return "unknown";
}

NoiseKind parse_noise_kind(const std::string &text) {
    for (auto kind :
         {NoiseKind::None, NoiseKind::SystemDephasing, NoiseKind::SystemDepolarizing, NoiseKind::JointLossScaling}) {
        if (text == noise_kind_name(kind)) {
            return kind;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown noise kind '" + text + "'");
}

DensityMatrix meter_state(const MeterSpec &spec) {
    double p = spec.mixing_p();
    ComplexMatrix m = meter_projector(spec.theta()) * p + meter_projector(spec.theta() + M_PI / 2) * (1 - p);
    return DensityMatrix(m);
}

ComplexMatrix cphase_unitary() {
    return ComplexMatrix::diagonal({1, 1, 1, -1});
}

DensityMatrix apply_noise(const DensityMatrix &rho_sa, const NoiseSpec &noise, double epsilon) {
    noise.validate();
    if (rho_sa.dim() != 4) {
        throw Error(ErrorKind::InvalidDimension, "noise channels act on two-qubit states");
    }
    double k = noise.kappa(epsilon);
    if (noise.kind == NoiseKind::None || k == 0.0) {
        return rho_sa;
    }
    const ComplexMatrix &m = rho_sa.matrix();
    ComplexMatrix replaced(4);
    if (noise.kind == NoiseKind::SystemDephasing) {
        // Keep only the blocks diagonal in the system index.
        for (size_t r = 0; r < 4; r++) {
            for (size_t c = 0; c < 4; c++) {
                if (r / 2 == c / 2) {
                    replaced(r, c) = m(r, c);
                }
            }
        }
    } else {
        replaced = tensor(ComplexMatrix::identity(2) * 0.5, partial_trace(m, Subsystem::Ancilla));
    }
    return DensityMatrix(m * (1 - k) + replaced * k);
}

ExperimentResult run_experiment(const DensityMatrix &system, const MeterSpec &spec, const NoiseSpec &noise) {
    if (system.dim() != 2) {
        throw Error(ErrorKind::InvalidDimension, "system must be a qubit");
    }
    noise.validate();
    const Observable z = Observable::pauli_z();

    ExperimentResult result;
    result.epsilon = spec.epsilon();
    result.s_m = spec.s_m();
    result.rho_sa_in = tensor(system, meter_state(spec));
    result.rho_sa_out = apply_noise(apply_unitary(result.rho_sa_in, cphase_unitary()), noise, result.epsilon);
    result.rho_s_out = partial_trace(result.rho_sa_out, Subsystem::System);

    result.ledger_before = information_ledger(result.rho_sa_in);
    result.ledger_after = information_ledger(result.rho_sa_out);
    result.info_change = delta_information(result.ledger_before, result.ledger_after);
    result.complementarity_residual = result.info_change.delta_context + result.info_change.delta_system;

    RealityReport &report = result.report;
    report.epsilon = result.epsilon;
    report.irreality_before = irreality(z, system);
    report.irreality_after = irreality(z, result.rho_s_out);
    report.delta_reality =
        clamp_negative_zero(von_neumann_entropy(result.rho_s_out) - von_neumann_entropy(system));
    report.delta_information = result.info_change.delta_system;
    report.bound_rhs = result.epsilon * report.irreality_before;

    result.information_gain = von_neumann_entropy(monitoring_map(system, z, result.epsilon)) -
                              von_neumann_entropy(result.rho_sa_out);
    return result;
}

std::vector<ExperimentResult> sweep_strength(
    const DensityMatrix &system, std::span<const double> theta_grid, const NoiseSpec &noise) {
    for (size_t k = 1; k < theta_grid.size(); k++) {
        if (!(theta_grid[k] > theta_grid[k - 1])) {
            throw Error(ErrorKind::InvalidArgument, "theta grid must be strictly increasing");
        }
    }
    std::vector<ExperimentResult> results;
    results.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        results.push_back(run_experiment(system, MeterSpec(theta), noise));
    }
    return results;
}

std::vector<ExperimentResult> sweep_meter_mixing(
    const DensityMatrix &system, double theta, std::span<const double> p_grid, const NoiseSpec &noise) {
    std::vector<ExperimentResult> results;
    results.reserve(p_grid.size());
    for (double p : p_grid) {
        results.push_back(run_experiment(system, MeterSpec(theta, p), noise));
    }
    return results;
}

double closed_form_delta_reality(double theta, double mixing_p) {
    double coherence = (2 * mixing_p - 1) * std::cos(2 * theta);
    return shannon_binary_entropy(std::clamp((1 + coherence) / 2, 0.0, 1.0));
}

std::array<ReadoutBranch, 2> readout_ancilla_pm(const DensityMatrix &rho_sa) {
    if (rho_sa.dim() != 4) {
        throw Error(ErrorKind::InvalidDimension, "readout expects a two-qubit state");
    }
    std::array<ReadoutBranch, 2> branches;
    const std::array<PureState, 2> outcomes{PureState::plus(), PureState::minus()};
    for (size_t k = 0; k < 2; k++) {
        ComplexMatrix proj = tensor(ComplexMatrix::identity(2), outcomes[k].projector());
        ComplexMatrix projected = proj * rho_sa.matrix() * proj;
        double prob = projected.trace().real();
        branches[k].probability = std::max(prob, 0.0);
        if (prob > 1e-14) {
            branches[k].system_state = DensityMatrix(partial_trace(projected * (1.0 / prob), Subsystem::System));
        }
    }
    return branches;
}

}  // namespace weakreal
