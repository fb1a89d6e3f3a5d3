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

#include "weakreal/tomography.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "weakreal/rng.h"

namespace weakreal {

namespace {

const ComplexMatrix &pauli_matrix(Pauli p) {
    static const ComplexMatrix x = pauli_x();
    static const ComplexMatrix y = pauli_y();
    static const ComplexMatrix z = pauli_z();
    switch (p) {
        case Pauli::X:
            return x;
        case Pauli::Y:
            return y;
        case Pauli::Z:
            break;
    }
    return z;
}

ComplexMatrix single_qubit_projector(Pauli p, bool plus) {
    ComplexMatrix result = ComplexMatrix::identity(2);
    if (plus) {
        result += pauli_matrix(p);
    } else {
        result -= pauli_matrix(p);
    }
    return result * 0.5;
}

// Outcome projectors for all settings, indexed [setting][outcome].
const std::array<std::array<ComplexMatrix, kNumOutcomes>, kNumSettings> &projector_table() {
    static const auto table = [] {
        std::array<std::array<ComplexMatrix, kNumOutcomes>, kNumSettings> t;
        for (const auto &setting : all_settings()) {
            for (size_t o = 0; o < kNumOutcomes; o++) {
                t[setting.index()][o] = tensor(
                    single_qubit_projector(setting.system, o < 2), single_qubit_projector(setting.ancilla, o % 2 == 0));
            }
        }
        return t;
    }();
    return table;
}

std::array<double, kNumOutcomes> born_probabilities(const DensityMatrix &rho, size_t setting_index) {
    std::array<double, kNumOutcomes> probs{};
    double total = 0;
    for (size_t o = 0; o < kNumOutcomes; o++) {
        probs[o] = std::max(0.0, trace_product(projector_table()[setting_index][o], rho.matrix()));
        total += probs[o];
    }
    for (auto &p : probs) {
        p /= total;
    }
    return probs;
}

ComplexMatrix rebuild(const EigenSystem &es) {
    size_t n = es.vectors.dim();
    ComplexMatrix result(n);
    for (size_t k = 0; k < n; k++) {
        if (es.values[k] == 0) {
            continue;
        }
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                result(r, c) += es.values[k] * es.vectors(r, k) * std::conj(es.vectors(c, k));
            }
        }
    }
    return (result + result.adjoint()) * 0.5;
}

// R / 9, which is the identity at a stationary point of the likelihood.
ComplexMatrix likelihood_gradient(const FrequencyTable &freq, const DensityMatrix &rho) {
    ComplexMatrix r(4);
    const auto &projectors = projector_table();
    for (size_t s = 0; s < kNumSettings; s++) {
        for (size_t o = 0; o < kNumOutcomes; o++) {
            double f = freq[s][o];
            if (f == 0) {
                continue;
            }
            double p = std::max(trace_product(projectors[s][o], rho.matrix()), 1e-300);
            r += projectors[s][o] * (f / p);
        }
    }
    return r * (1.0 / kNumSettings);
}

// Sum f ln(p_new / p_old), evaluated without cancellation so that gains far
// below the magnitude of the log-likelihood itself are resolved.
double likelihood_gain(const FrequencyTable &freq, const DensityMatrix &from, const DensityMatrix &to) {
    double total = 0;
    const auto &projectors = projector_table();
    for (size_t s = 0; s < kNumSettings; s++) {
        for (size_t o = 0; o < kNumOutcomes; o++) {
            double f = freq[s][o];
            if (f == 0) {
                continue;
            }
            double p_old = trace_product(projectors[s][o], from.matrix());
            double p_new = trace_product(projectors[s][o], to.matrix());
            if (p_new <= 0) {
                return -INFINITY;
            }
            total += f * std::log1p((p_new - p_old) / p_old);
        }
    }
    return total;
}

DensityMatrix sandwich(const ComplexMatrix &op, const DensityMatrix &rho) {
    ComplexMatrix m = op * rho.matrix() * op;
    m = (m + m.adjoint()) * 0.5;
    return DensityMatrix(m * (1.0 / m.trace().real()));
}

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) {
            field.pop_back();
        }
        fields.push_back(field);
    }
    return fields;
}

std::uint64_t parse_u64(const std::string &text, const char *what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::InvalidArgument, std::string("bad ") + what + " field '" + text + "'");
    }
    return value;
}

constexpr const char *kCsvHeader = "setting_s,setting_a,n_pp,n_pm,n_mp,n_mm,shots,seed";

}  // namespace

char pauli_name(Pauli p) {
    switch (p) {
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
    }
    return '?';
}

Pauli parse_pauli(char c) {
    switch (c) {
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw Error(ErrorKind::InvalidArgument, std::string("unknown Pauli basis '") + c + "'");
    }
}

size_t MeasurementSetting::index() const noexcept {
    return 3 * static_cast<size_t>(system) + static_cast<size_t>(ancilla);
}

std::array<MeasurementSetting, kNumSettings> all_settings() {
    std::array<MeasurementSetting, kNumSettings> result;
    const Pauli bases[] = {Pauli::X, Pauli::Y, Pauli::Z};
    size_t k = 0;
    for (Pauli s : bases) {
        for (Pauli a : bases) {
            result[k++] = {s, a};
        }
    }
    return result;
}

ComplexMatrix outcome_projector(MeasurementSetting setting, size_t outcome) {
    if (outcome >= kNumOutcomes) {
        throw Error(ErrorKind::InvalidOutcome, "tomography outcome index must be < 4");
    }
    return projector_table()[setting.index()][outcome];
}

void CountTable::validate() const {
    if (shots_per_setting == 0) {
        throw Error(ErrorKind::IncompleteData, "count table has zero shots per setting");
    }
    std::array<bool, kNumSettings> seen{};
    for (const auto &row : rows) {
        size_t idx = row.setting.index();
        if (seen[idx]) {
            throw Error(ErrorKind::IncompleteData, "duplicate setting in count table");
        }
        seen[idx] = true;
        std::uint64_t total = 0;
        for (auto c : row.counts) {
            total += c;
        }
        if (total != shots_per_setting) {
            throw Error(ErrorKind::IncompleteData, "setting counts do not sum to shots_per_setting");
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
        throw Error(ErrorKind::IncompleteData, "count table is missing settings");
    }
}

FrequencyTable frequencies(const CountTable &counts) {
    counts.validate();
    FrequencyTable freq{};
    double shots = static_cast<double>(counts.shots_per_setting);
    for (const auto &row : counts.rows) {
        for (size_t o = 0; o < kNumOutcomes; o++) {
            freq[row.setting.index()][o] = static_cast<double>(row.counts[o]) / shots;
        }
    }
    return freq;
}

FrequencyTable exact_frequencies(const DensityMatrix &rho) {
    if (rho.dim() != 4) {
        throw Error(ErrorKind::InvalidDimension, "tomography expects a two-qubit state");
    }
    FrequencyTable freq{};
    for (size_t s = 0; s < kNumSettings; s++) {
        freq[s] = born_probabilities(rho, s);
    }
    return freq;
}

CountTable simulate_counts(const DensityMatrix &rho, std::uint64_t shots, std::uint64_t seed) {
    if (rho.dim() != 4) {
        throw Error(ErrorKind::InvalidDimension, "tomography expects a two-qubit state");
    }
    if (shots == 0) {
        throw Error(ErrorKind::InvalidArgument, "shots must be >= 1");
    }
    CountTable table;
    table.shots_per_setting = shots;
    table.seed = seed;
    for (const auto &setting : all_settings()) {
        auto probs = born_probabilities(rho, setting.index());
        std::array<double, kNumOutcomes> cumulative{};
        double acc = 0;
        for (size_t o = 0; o < kNumOutcomes; o++) {
            acc += probs[o];
            cumulative[o] = acc;
        }
        cumulative[kNumOutcomes - 1] = 1.0;

        Engine engine(derive_seed(seed, setting.index()));
        SettingCounts row{setting, {}};
        for (std::uint64_t shot = 0; shot < shots; shot++) {
            double u = uniform01(engine);
            size_t o = 0;
            while (o + 1 < kNumOutcomes && !(u < cumulative[o])) {
                o++;
            }
            row.counts[o]++;
        }
        table.rows.push_back(row);
    }
    return table;
}

ComplexMatrix linear_inversion(const FrequencyTable &freq) {
    // Pauli expectation values E[i][j] with index 0 = identity, 1..3 = X,Y,Z.
    double expect[4][4] = {};
    expect[0][0] = 1;
    for (const auto &setting : all_settings()) {
        const auto &f = freq[setting.index()];
        size_t i = static_cast<size_t>(setting.system) + 1;
        size_t j = static_cast<size_t>(setting.ancilla) + 1;
        expect[i][j] = f[0] - f[1] - f[2] + f[3];
        // Marginals are averaged over the three settings that contain them.
        expect[i][0] += (f[0] + f[1] - f[2] - f[3]) / 3;
        expect[0][j] += (f[0] - f[1] + f[2] - f[3]) / 3;
    }
    const ComplexMatrix paulis[4] = {ComplexMatrix::identity(2), pauli_x(), pauli_y(), pauli_z()};
    ComplexMatrix result(4);
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            result += tensor(paulis[i], paulis[j]) * (expect[i][j] / 4);
        }
    }
    return (result + result.adjoint()) * 0.5;
}

ComplexMatrix linear_inversion(const CountTable &counts) {
    return linear_inversion(frequencies(counts));
}

DensityMatrix project_to_physical(const ComplexMatrix &m) {
    if (!m.is_hermitian(kHermitianTol)) {
        throw Error(ErrorKind::NotHermitian, "project_to_physical input is not Hermitian");
    }
    if (std::abs(m.trace() - 1.0) > kTraceTol) {
        throw Error(ErrorKind::InvalidArgument, "project_to_physical input must have unit trace");
    }
    EigenSystem es = eig_hermitian(m);
    auto &lambda = es.values;
    size_t kept = lambda.size();
    double deficit = 0;
    // Zero the most negative eigenvalues and spread their mass uniformly over
    // the rest until the remainder is non-negative.
    while (kept > 0 && lambda[kept - 1] + deficit / static_cast<double>(kept) < 0) {
        deficit += lambda[kept - 1];
        lambda[kept - 1] = 0;
        kept--;
    }
    for (size_t k = 0; k < kept; k++) {
        lambda[k] += deficit / static_cast<double>(kept);
    }
    return DensityMatrix(rebuild(es));
}

double log_likelihood(const FrequencyTable &freq, const DensityMatrix &rho) {
    double total = 0;
    const auto &projectors = projector_table();
    for (size_t s = 0; s < kNumSettings; s++) {
        for (size_t o = 0; o < kNumOutcomes; o++) {
            double f = freq[s][o];
            if (f == 0) {
                continue;
            }
            double p = trace_product(projectors[s][o], rho.matrix());
            total += p > 0 ? f * std::log(p) : -INFINITY;
        }
    }
    return total;
}

const char *reconstruction_method_name(ReconstructionMethod method) {
    switch (method) {
        case ReconstructionMethod::LinearInversion:
            return "linear";
        case ReconstructionMethod::ProjectedLinearInversion:
            return "projected";
        case ReconstructionMethod::MLE:
            return "mle";
    }
    return "unknown";
}

ReconstructionResult mle_reconstruct(const FrequencyTable &freq, int max_iter, double tol) {
    if (max_iter < 1) {
        throw Error(ErrorKind::InvalidArgument, "max_iter must be >= 1");
    }
    ReconstructionResult result;
    result.method = ReconstructionMethod::MLE;
    result.converged = false;

    DensityMatrix rho = DensityMatrix::maximally_mixed(4);
    double ll = log_likelihood(freq, rho);
    result.likelihood_trace.push_back(ll);
    const ComplexMatrix identity = ComplexMatrix::identity(4);

    // Likelihood changes below this are rounding noise.
    const double gain_floor = -1e-13;
    const double stationary = 1e-14;
    int iter = 0;
    while (iter < max_iter) {
        ComplexMatrix r = likelihood_gradient(freq, rho);
        if (max_abs_diff(r * rho.matrix(), rho.matrix()) < stationary) {
            result.converged = true;
            break;
        }
        iter++;
        DensityMatrix next = sandwich(r, rho);
        double gain = likelihood_gain(freq, rho, next);
        // Diluted steps increase the likelihood for small enough t.
        double t = 1.0;
        while (gain < gain_floor && t > 1e-12) {
            next = sandwich(identity + r * t, rho);
            gain = likelihood_gain(freq, rho, next);
            t /= 2;
        }
        if (gain < gain_floor) {
            result.converged = true;
            break;
        }
        rho = next;
        ll = log_likelihood(freq, rho);
        result.likelihood_trace.push_back(ll);
        if (tol > 0 && gain < tol) {
            result.converged = true;
            break;
        }
    }
    result.rho_hat = rho;
    result.iterations = iter;
    result.log_likelihood = ll;
    return result;
}

ReconstructionResult mle_reconstruct(const CountTable &counts, int max_iter, double tol) {
    return mle_reconstruct(frequencies(counts), max_iter, tol);
}

ReconstructionResult reconstruct(const FrequencyTable &freq, ReconstructionMethod method, const MleOptions &mle) {
    if (method == ReconstructionMethod::MLE) {
        return mle_reconstruct(freq, mle.max_iter, mle.tol);
    }
    ReconstructionResult result;
    result.method = method;
    ComplexMatrix linear = linear_inversion(freq);
    result.rho_hat = method == ReconstructionMethod::LinearInversion ? DensityMatrix(linear) : project_to_physical(linear);
    result.log_likelihood = log_likelihood(freq, result.rho_hat);
    return result;
}

ReconstructionResult reconstruct(const CountTable &counts, ReconstructionMethod method, const MleOptions &mle) {
    return reconstruct(frequencies(counts), method, mle);
}

void attach_fidelity(ReconstructionResult &result, const DensityMatrix &truth) {
    result.fidelity_to_truth = fidelity(truth, result.rho_hat);
}

TomographyEstimate estimate_quantities(
    const ReconstructionResult &rec, double epsilon, const DensityMatrix &assumed_system) {
    if (!(epsilon >= 0 && epsilon <= 1)) {
        throw Error(ErrorKind::OutOfRange, "measurement strength must lie in [0, 1]");
    }
    const Observable z = Observable::pauli_z();
    DensityMatrix rho_s = partial_trace(rec.rho_hat, Subsystem::System);

    TomographyEstimate est;
    est.ledger = information_ledger(rec.rho_hat);
    RealityReport &report = est.report;
    report.epsilon = epsilon;
    report.irreality_before = irreality(z, assumed_system);
    report.irreality_after = irreality(z, rho_s);
    // Initial entropy taken as zero.
    report.delta_reality = von_neumann_entropy(rho_s);
    report.delta_information = est.ledger.i_system - std::log(2.0);
    report.bound_rhs = epsilon * report.irreality_before;
    est.information_gain =
        von_neumann_entropy(monitoring_map(assumed_system, z, epsilon)) - von_neumann_entropy(rec.rho_hat);
    return est;
}

TomographyEstimate estimate_quantities(const ReconstructionResult &rec, double epsilon) {
    return estimate_quantities(rec, epsilon, DensityMatrix(PureState::plus()));
}

void write_count_table_csv(std::ostream &out, const CountTable &counts) {
    out << kCsvHeader << '\n';
    for (const auto &row : counts.rows) {
        out << pauli_name(row.setting.system) << ',' << pauli_name(row.setting.ancilla);
        for (auto c : row.counts) {
            out << ',' << c;
        }
        out << ',' << counts.shots_per_setting << ',' << counts.seed << '\n';
    }
}

CountTable read_count_table_csv(std::istream &in) {
    CountTable table;
    std::string line;
    bool have_header = false;
    bool first_row = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!have_header) {
            if (line != kCsvHeader) {
                throw Error(ErrorKind::InvalidArgument, "unexpected count table header '" + line + "'");
            }
            have_header = true;
            continue;
        }
        auto fields = split_csv_line(line);
        if (fields.size() != 8 || fields[0].size() != 1 || fields[1].size() != 1) {
            throw Error(ErrorKind::InvalidArgument, "malformed count table row '" + line + "'");
        }
        SettingCounts row;
        row.setting = {parse_pauli(fields[0][0]), parse_pauli(fields[1][0])};
        for (size_t o = 0; o < kNumOutcomes; o++) {
            row.counts[o] = parse_u64(fields[2 + o], "count");
        }
        std::uint64_t shots = parse_u64(fields[6], "shots");
        std::uint64_t seed = parse_u64(fields[7], "seed");
        if (first_row) {
            table.shots_per_setting = shots;
            table.seed = seed;
            first_row = false;
        } else if (shots != table.shots_per_setting || seed != table.seed) {
            throw Error(ErrorKind::InvalidArgument, "count table rows disagree on shots or seed");
        }
        table.rows.push_back(row);
    }
    if (!have_header) {
        throw Error(ErrorKind::IncompleteData, "count table is empty");
    }
    table.validate();
    return table;
}

}  // namespace weakreal
