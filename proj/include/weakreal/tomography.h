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

#ifndef WEAKREAL_TOMOGRAPHY_H
#define WEAKREAL_TOMOGRAPHY_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "weakreal/measures.h"
#include "weakreal/qcore.h"

namespace weakreal {

enum class Pauli { X, Y, Z };

char pauli_name(Pauli p);
Pauli parse_pauli(char c);

/// Product-basis setting: each qubit measured projectively in a Pauli basis.
struct MeasurementSetting {
    Pauli system = Pauli::Z;
    Pauli ancilla = Pauli::Z;

    /// Position in all_settings(): 3 * system + ancilla.
    std::size_t index() const noexcept;
    bool operator==(const MeasurementSetting &) const = default;
};

inline constexpr std::size_t kNumSettings = 9;
inline constexpr std::size_t kNumOutcomes = 4;

/// XX, XY, XZ, YX, ..., ZZ.
std::array<MeasurementSetting, kNumSettings> all_settings();

/// Outcome order: ++, +-, -+, -- (system sign first). `+` is the +1
/// eigenvector of the Pauli; for Z that is |0>.
ComplexMatrix outcome_projector(MeasurementSetting setting, std::size_t outcome);

struct SettingCounts {
    MeasurementSetting setting;
    std::array<std::uint64_t, kNumOutcomes> counts{};
};

struct CountTable {
    std::vector<SettingCounts> rows;
    std::uint64_t shots_per_setting = 0;
    std::uint64_t seed = 0;

    /// Throws IncompleteData unless all nine settings appear exactly once,
    /// each summing to shots_per_setting.
    void validate() const;
};

/// Relative frequencies indexed by setting index then outcome.
using FrequencyTable = std::array<std::array<double, kNumOutcomes>, kNumSettings>;

FrequencyTable frequencies(const CountTable &counts);

/// Born probabilities Tr(rho P) for every setting and outcome; the
/// infinite-shot limit of simulate_counts.
FrequencyTable exact_frequencies(const DensityMatrix &rho);

/// Draws `shots` outcomes per setting. Setting s uses the substream
/// derive_seed(seed, s), so the table is bit-for-bit reproducible.
CountTable simulate_counts(const DensityMatrix &rho, std::uint64_t shots, std::uint64_t seed);

/// (1/4) sum_ij <s_i (x) s_j> s_i (x) s_j. Hermitian with unit trace, not
/// necessarily positive.
ComplexMatrix linear_inversion(const FrequencyTable &freq);
ComplexMatrix linear_inversion(const CountTable &counts);

/// Closest density matrix in Frobenius norm to a Hermitian unit-trace input.
DensityMatrix project_to_physical(const ComplexMatrix &m);

/// Per-shot log-likelihood sum_settings sum_outcomes f ln Tr(rho P).
double log_likelihood(const FrequencyTable &freq, const DensityMatrix &rho);

enum class ReconstructionMethod { LinearInversion, ProjectedLinearInversion, MLE };

const char *reconstruction_method_name(ReconstructionMethod method);

struct ReconstructionResult {
    DensityMatrix rho_hat = DensityMatrix::maximally_mixed(4);
    ReconstructionMethod method = ReconstructionMethod::ProjectedLinearInversion;
    /// Only filled by attach_fidelity; used for testing against a known truth.
    std::optional<double> fidelity_to_truth;
    int iterations = 0;
    bool converged = true;
    double log_likelihood = 0;
    /// MLE only: log-likelihood after every accepted iterate, starting with
    /// the initial guess.
    std::vector<double> likelihood_trace;
};

/// Iterative R rho R maximum likelihood, starting from I/4. A step that would
/// lower the likelihood is diluted, (I + t R) rho (I + t R) with halving t,
/// until it does not. Stops when the per-step log-likelihood improvement
/// falls below `tol`, or when the iterate is stationary to rounding. A
/// non-positive `tol` disables the improvement test. If max_iter is reached
/// first the last iterate is returned with converged = false.
ReconstructionResult mle_reconstruct(const FrequencyTable &freq, int max_iter, double tol);
ReconstructionResult mle_reconstruct(const CountTable &counts, int max_iter, double tol);

struct MleOptions {
    int max_iter = 5000;
    double tol = 1e-10;
};

/// Throws NotDensityMatrix for plain LinearInversion when the estimate is
/// not positive semidefinite.
ReconstructionResult reconstruct(
    const CountTable &counts, ReconstructionMethod method, const MleOptions &mle = {});
ReconstructionResult reconstruct(
    const FrequencyTable &freq, ReconstructionMethod method, const MleOptions &mle = {});

void attach_fidelity(ReconstructionResult &result, const DensityMatrix &truth);

struct TomographyEstimate {
    RealityReport report;
    InformationLedger ledger;
    /// S(M_Z^eps(rho_assumed)) - S(rho_hat).
    double information_gain = 0;
};

/// Quantities derived from a reconstructed joint state, assuming the
/// prepared input `assumed_system` was pure (initial entropies zero).
/// Plugin entropies carry a positive finite-shot bias that is not corrected.
TomographyEstimate estimate_quantities(
    const ReconstructionResult &rec, double epsilon, const DensityMatrix &assumed_system);
TomographyEstimate estimate_quantities(const ReconstructionResult &rec, double epsilon);

/// CSV with header setting_s,setting_a,n_pp,n_pm,n_mp,n_mm,shots,seed.
void write_count_table_csv(std::ostream &out, const CountTable &counts);
CountTable read_count_table_csv(std::istream &in);

}  // namespace weakreal

#endif
