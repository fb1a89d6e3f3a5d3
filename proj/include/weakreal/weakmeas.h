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

#ifndef WEAKREAL_WEAKMEAS_H
#define WEAKREAL_WEAKMEAS_H

#include <array>
#include <span>
#include <string>
#include <vector>

#include "weakreal/measures.h"
#include "weakreal/qcore.h"

namespace weakreal {

inline constexpr double kQuarterPi = M_PI / 4;

double degrees_to_radians(double degrees);
double radians_to_degrees(double radians);

/// Meter preparation: weight `mixing_p` on |psi(theta)> and 1 - mixing_p on
/// the orthogonal |psi(theta + pi/2)>, where |psi(t)> = cos t|0> + sin t|1>.
class MeterSpec {
   public:
    /// theta in radians, [0, pi/4]; mixing_p in [0, 1]. Throws OutOfRange.
    explicit MeterSpec(double theta, double mixing_p = 1.0);
    static MeterSpec from_degrees(double theta_deg, double mixing_p = 1.0);

    double theta() const noexcept {
        return theta_;
    }
    double mixing_p() const noexcept {
        return mixing_p_;
    }
    /// 1 - cos(2 theta).
    double epsilon() const noexcept;
    /// Initial meter entropy H(mixing_p), nats.
    double s_m() const;

   private:
    double theta_;
    double mixing_p_;
};

enum class NoiseKind { None, SystemDephasing, SystemDepolarizing, JointLossScaling };
enum class NoiseScaling { Constant, LinearInEpsilon };

/// Channel applied to the joint state after the coupling unitary.
///
/// SystemDephasing: rho -> (1 - k) rho + k (Phi_Z (x) id)(rho).
/// SystemDepolarizing: rho -> (1 - k) rho + k (I/2 (x) Tr_S rho).
/// JointLossScaling: system depolarizing with k = kappa0 * epsilon regardless
/// of `scaling`; this is the stand-in for strength-dependent photon loss.
struct NoiseSpec {
    NoiseKind kind = NoiseKind::None;
    double kappa0 = 0.0;
    NoiseScaling scaling = NoiseScaling::Constant;

    static constexpr double kDefaultKappa0 = 0.1;

    static NoiseSpec none() {
        return {};
    }
    static NoiseSpec joint_loss(double kappa0 = kDefaultKappa0) {
        return {NoiseKind::JointLossScaling, kappa0, NoiseScaling::LinearInEpsilon};
    }

    /// Effective channel strength at measurement strength epsilon.
    double kappa(double epsilon) const;
    bool is_trivial() const noexcept {
        return kind == NoiseKind::None || kappa0 == 0.0;
    }
    void validate() const;
};

const char *noise_kind_name(NoiseKind kind);
NoiseKind parse_noise_kind(const std::string &text);

DensityMatrix meter_state(const MeterSpec &spec);

/// |0><0| (x) I + |1><1| (x) Z = diag(1, 1, 1, -1).
ComplexMatrix cphase_unitary();

DensityMatrix apply_noise(const DensityMatrix &rho_sa, const NoiseSpec &noise, double epsilon);

struct ExperimentResult {
    double epsilon = 0;
    double s_m = 0;
    DensityMatrix rho_sa_in = DensityMatrix::maximally_mixed(4);
    DensityMatrix rho_sa_out = DensityMatrix::maximally_mixed(4);
    DensityMatrix rho_s_out = DensityMatrix::maximally_mixed(2);
    RealityReport report;
    InformationLedger ledger_before;
    InformationLedger ledger_after;
    InformationChange info_change;
    /// S(M_Z^eps(rho_S)) - S(rho'_SA): the information estimator that assumes
    /// a pure initial joint state.
    double information_gain = 0;
    /// delta_context + delta_system. Zero for unitary coupling of pure
    /// inputs; nonzero values under noise are reported, not corrected.
    double complementarity_residual = 0;
};

/// Couples `system` to the meter with the controlled-phase gate, applies
/// `noise`, and evaluates the reality report on the reduced system.
ExperimentResult run_experiment(const DensityMatrix &system, const MeterSpec &spec, const NoiseSpec &noise);

inline ExperimentResult run_experiment(const MeterSpec &spec, const NoiseSpec &noise = {}) {
    return run_experiment(DensityMatrix(PureState::plus()), spec, noise);
}

/// theta_grid in radians, strictly increasing, within [0, pi/4]. Pure meter.
std::vector<ExperimentResult> sweep_strength(
    const DensityMatrix &system, std::span<const double> theta_grid, const NoiseSpec &noise);

/// Fixed theta (radians), varying meter mixing weight.
std::vector<ExperimentResult> sweep_meter_mixing(
    const DensityMatrix &system, double theta, std::span<const double> p_grid, const NoiseSpec &noise);

/// Closed-form reality change for system |+>, observable Z:
/// h((1 + (2p - 1) cos 2 theta) / 2).
double closed_form_delta_reality(double theta, double mixing_p = 1.0);

struct ReadoutBranch {
    double probability = 0;
    /// Conditional system state; maximally mixed when probability is zero.
    DensityMatrix system_state = DensityMatrix::maximally_mixed(2);
};

/// Measures the ancilla of a two-qubit state in the {|+>, |->} basis.
std::array<ReadoutBranch, 2> readout_ancilla_pm(const DensityMatrix &rho_sa);

}  // namespace weakreal

#endif
