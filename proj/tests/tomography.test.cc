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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "test_util.h"
#include "weakreal/random_states.h"
#include "weakreal/weakmeas.h"

using namespace weakreal;
using weakreal::testing::ket_bra;
using weakreal::testing::matrices_near;

namespace {

const double kLn2 = std::log(2.0);

DensityMatrix bell_state() {
    return DensityMatrix(ket_bra({M_SQRT1_2, 0, 0, M_SQRT1_2}));
}

CountTable counts_from(const FrequencyTable &freq, std::uint64_t shots) {
    CountTable table;
    table.shots_per_setting = shots;
    for (const auto &setting : all_settings()) {
        SettingCounts row{setting, {}};
        for (size_t o = 0; o < kNumOutcomes; o++) {
            row.counts[o] = static_cast<std::uint64_t>(std::llround(freq[setting.index()][o] * shots));
        }
        table.rows.push_back(row);
    }
    return table;
}

// Exact minimizer of |mu - lambda|_2 over the probability simplex, found by
// enumerating every candidate support set. For a fixed support S the optimum
// is lambda_i + (1 - sum_S lambda) / |S| on S and zero elsewhere.
std::vector<double> simplex_projection_by_enumeration(const std::vector<double> &lambda) {
    size_t n = lambda.size();
    std::vector<double> best;
    double best_dist = INFINITY;
    for (unsigned mask = 1; mask < (1u << n); mask++) {
        double sum = 0;
        int count = 0;
        for (size_t i = 0; i < n; i++) {
            if (mask & (1u << i)) {
                sum += lambda[i];
                count++;
            }
        }
        double shift = (1 - sum) / count;
        std::vector<double> mu(n, 0.0);
        bool feasible = true;
        double dist = 0;
        for (size_t i = 0; i < n; i++) {
            if (mask & (1u << i)) {
                mu[i] = lambda[i] + shift;
                feasible = feasible && mu[i] >= -1e-15;
            }
            dist += (mu[i] - lambda[i]) * (mu[i] - lambda[i]);
        }
        if (feasible && dist < best_dist) {
            best_dist = dist;
            best = mu;
        }
    }
    return best;
}

// Hermitian unit-trace matrix with prescribed spectrum in a random basis.
ComplexMatrix with_spectrum(Engine &engine, const std::vector<double> &spectrum) {
    ComplexMatrix u = random_unitary(engine, spectrum.size());
    ComplexMatrix m = u * ComplexMatrix::diagonal(spectrum) * u.adjoint();
    return (m + m.adjoint()) * 0.5;
}

}  // namespace

TEST(settings, enumerate_pauli_products) {
    auto settings = all_settings();
    for (size_t k = 0; k < kNumSettings; k++) {
        EXPECT_EQ(settings[k].index(), k);
        ComplexMatrix sum(4);
        for (size_t o = 0; o < kNumOutcomes; o++) {
            sum += outcome_projector(settings[k], o);
        }
        EXPECT_TRUE(matrices_near(sum, ComplexMatrix::identity(4), 1e-15));
    }
    // ++ for ZZ is |00><00|.
    EXPECT_TRUE(matrices_near(
        outcome_projector({Pauli::Z, Pauli::Z}, 0), ComplexMatrix::diagonal({1, 0, 0, 0}), 1e-15));
    EXPECT_EQ(parse_pauli('Y'), Pauli::Y);
    EXPECT_THROW(parse_pauli('Q'), Error);
}

TEST(simulate_counts, uniform_state) {
    std::uint64_t shots = 1000000;
    CountTable table = simulate_counts(DensityMatrix::maximally_mixed(4), shots, 2024);
    table.validate();
    double sigma = std::sqrt(0.25 * 0.75 / shots);
    for (const auto &row : table.rows) {
        for (auto c : row.counts) {
            EXPECT_LT(std::abs(static_cast<double>(c) / shots - 0.25), 5 * sigma);
        }
    }
}

TEST(simulate_counts, bell_state_perfect_zz_correlation) {
    CountTable table = simulate_counts(bell_state(), 10000, 3);
    for (const auto &row : table.rows) {
        if (row.setting == MeasurementSetting{Pauli::Z, Pauli::Z}) {
            EXPECT_EQ(row.counts[1], 0u);
            EXPECT_EQ(row.counts[2], 0u);
            EXPECT_EQ(row.counts[0] + row.counts[3], 10000u);
        }
    }
}

TEST(simulate_counts, born_rule_frequencies) {
    ExperimentResult res = run_experiment(MeterSpec(kQuarterPi));
    std::uint64_t shots = 200000;
    CountTable table = simulate_counts(res.rho_sa_out, shots, 99);
    FrequencyTable freq = frequencies(table);
    for (const auto &setting : all_settings()) {
        for (size_t o = 0; o < kNumOutcomes; o++) {
            double p = trace_product(outcome_projector(setting, o), res.rho_sa_out.matrix());
            double sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / shots);
            EXPECT_LE(std::abs(freq[setting.index()][o] - p), 5 * sigma + 1e-12);
        }
    }
}

TEST(simulate_counts, deterministic_per_seed) {
    ExperimentResult res = run_experiment(MeterSpec::from_degrees(16));
    CountTable a = simulate_counts(res.rho_sa_out, 5000, 77);
    CountTable b = simulate_counts(res.rho_sa_out, 5000, 77);
    CountTable c = simulate_counts(res.rho_sa_out, 5000, 78);
    std::ostringstream sa, sb, sc;
    write_count_table_csv(sa, a);
    write_count_table_csv(sb, b);
    write_count_table_csv(sc, c);
    EXPECT_EQ(sa.str(), sb.str());
    EXPECT_NE(sa.str(), sc.str());
    EXPECT_THROW(simulate_counts(res.rho_sa_out, 0, 1), Error);
}

TEST(count_table, csv_round_trip_and_validation) {
    CountTable table = simulate_counts(bell_state(), 321, 5);
    std::stringstream ss;
    ss << "# comment line\n";
    write_count_table_csv(ss, table);
    std::string text = ss.str();
    EXPECT_NE(text.find("setting_s,setting_a,n_pp,n_pm,n_mp,n_mm,shots,seed\n"), std::string::npos);
    EXPECT_NE(text.find("\nX,X,"), std::string::npos);
    CountTable back = read_count_table_csv(ss);
    EXPECT_EQ(back.shots_per_setting, 321u);
    EXPECT_EQ(back.seed, 5u);
    ASSERT_EQ(back.rows.size(), kNumSettings);
    for (size_t k = 0; k < kNumSettings; k++) {
        EXPECT_EQ(back.rows[k].setting, table.rows[k].setting);
        EXPECT_EQ(back.rows[k].counts, table.rows[k].counts);
    }

    CountTable missing = table;
    missing.rows.pop_back();
    try {
        linear_inversion(missing);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::IncompleteData);
    }
    std::istringstream bad_header("a,b,c\nX,X,1,0,0,0,1,0\n");
    EXPECT_THROW(read_count_table_csv(bad_header), Error);
}

TEST(linear_inversion, exact_frequencies_recover_state) {
    Engine engine(101);
    for (int trial = 0; trial < 50; trial++) {
        DensityMatrix rho = random_density_matrix(engine, 4, 1 + trial % 4);
        ComplexMatrix lin = linear_inversion(exact_frequencies(rho));
        EXPECT_TRUE(matrices_near(lin, rho.matrix(), 1e-12));
    }
}

TEST(linear_inversion, uniform_counts) {
    CountTable table;
    table.shots_per_setting = 400;
    for (const auto &setting : all_settings()) {
        table.rows.push_back({setting, {100, 100, 100, 100}});
    }
    EXPECT_TRUE(matrices_near(linear_inversion(table), ComplexMatrix::identity(4) * 0.25, 1e-15));
}

TEST(linear_inversion, finite_shot_error) {
    // Calibrated over 100 seeds at 1e5 shots: worst Frobenius error 0.0067.
    ExperimentResult res = run_experiment(MeterSpec::from_degrees(16));
    for (int seed = 0; seed < 20; seed++) {
        ComplexMatrix lin = linear_inversion(simulate_counts(res.rho_sa_out, 100000, seed));
        EXPECT_TRUE(lin.is_hermitian(1e-15));
        EXPECT_NEAR(lin.trace().real(), 1, 1e-12);
        EXPECT_LE((lin - res.rho_sa_out.matrix()).frobenius_norm(), 0.02);
    }
}

TEST(project_to_physical, fixed_point) {
    Engine engine(103);
    for (int trial = 0; trial < 20; trial++) {
        DensityMatrix rho = random_density_matrix(engine, 4, 1 + trial % 4);
        EXPECT_LE((project_to_physical(rho.matrix()).matrix() - rho.matrix()).frobenius_norm(), 1e-12);
    }
}

TEST(project_to_physical, qubit_example) {
    DensityMatrix out = project_to_physical(ComplexMatrix::diagonal({1.1, -0.1}));
    EXPECT_TRUE(matrices_near(out.matrix(), ComplexMatrix::diagonal({1, 0}), 1e-15));
    // Oracle: enumeration gives (1, 0) for lambda = (1.1, -0.1).
    auto mu = simplex_projection_by_enumeration({1.1, -0.1});
    EXPECT_NEAR(mu[0], 1, 1e-15);
    EXPECT_NEAR(mu[1], 0, 1e-15);
}

TEST(project_to_physical, matches_support_enumeration) {
    Engine engine(107);
    for (int trial = 0; trial < 50; trial++) {
        std::vector<double> spectrum(4);
        double sum = 0;
        for (auto &v : spectrum) {
            v = uniform01(engine) - 0.35;
            sum += v;
        }
        for (auto &v : spectrum) {
            v += (1 - sum) / 4;
        }
        ComplexMatrix m = with_spectrum(engine, spectrum);
        DensityMatrix out = project_to_physical(m);

        std::vector<double> sorted = spectrum;
        std::sort(sorted.rbegin(), sorted.rend());
        auto mu = simplex_projection_by_enumeration(sorted);
        for (size_t k = 0; k < 4; k++) {
            EXPECT_NEAR(out.eigenvalues()[k], mu[k], 1e-10);
        }
        double expected_dist = 0;
        for (size_t k = 0; k < 4; k++) {
            expected_dist += (mu[k] - sorted[k]) * (mu[k] - sorted[k]);
        }
        EXPECT_NEAR((out.matrix() - m).frobenius_norm(), std::sqrt(expected_dist), 1e-10);
    }
}

TEST(project_to_physical, idempotent_and_contracting) {
    Engine engine(109);
    for (int trial = 0; trial < 50; trial++) {
        ComplexMatrix m = with_spectrum(engine, {0.7, 0.4, 0.05, -0.15});
        DensityMatrix once = project_to_physical(m);
        DensityMatrix twice = project_to_physical(once.matrix());
        EXPECT_LE((once.matrix() - twice.matrix()).frobenius_norm(), 1e-12);
        for (int t = 0; t < 10; t++) {
            DensityMatrix target = random_density_matrix(engine, 4, 1 + t % 4);
            EXPECT_LE(
                (once.matrix() - target.matrix()).frobenius_norm(),
                (m - target.matrix()).frobenius_norm() + 1e-12);
        }
    }
    EXPECT_THROW(project_to_physical(ComplexMatrix{{1, 1}, {0, 0}}), Error);
}

TEST(mle_reconstruct, exact_frequencies_converge_to_truth) {
    Engine engine(113);
    for (int trial = 0; trial < 5; trial++) {
        DensityMatrix rho = random_density_matrix(engine, 4);
        ReconstructionResult rec = mle_reconstruct(exact_frequencies(rho), 100000, 0);
        EXPECT_TRUE(rec.converged);
        EXPECT_TRUE(matrices_near(rec.rho_hat.matrix(), rho.matrix(), 1e-8)) << rec.iterations;
    }
}

TEST(mle_reconstruct, likelihood_never_decreases) {
    ExperimentResult res = run_experiment(MeterSpec::from_degrees(16));
    for (int seed = 0; seed < 5; seed++) {
        CountTable counts = simulate_counts(res.rho_sa_out, 2000, seed);
        ReconstructionResult rec = mle_reconstruct(counts, 3000, 1e-12);
        ASSERT_GE(rec.likelihood_trace.size(), 2u);
        for (size_t k = 1; k < rec.likelihood_trace.size(); k++) {
            EXPECT_GE(rec.likelihood_trace[k], rec.likelihood_trace[k - 1] - 1e-9);
        }
        ReconstructionResult proj = reconstruct(counts, ReconstructionMethod::ProjectedLinearInversion);
        EXPECT_GE(rec.log_likelihood, proj.log_likelihood);
    }
}

TEST(mle_reconstruct, bell_state_fidelity) {
    // Calibrated over 100 seeds at 1e5 shots: worst fidelity 0.99999.
    for (int seed = 0; seed < 10; seed++) {
        ReconstructionResult rec = mle_reconstruct(simulate_counts(bell_state(), 100000, seed), 5000, 1e-10);
        attach_fidelity(rec, bell_state());
        ASSERT_TRUE(rec.fidelity_to_truth.has_value());
        EXPECT_GE(*rec.fidelity_to_truth, 0.995);
    }
}

TEST(mle_reconstruct, iteration_cap_is_flagged) {
    ReconstructionResult rec = mle_reconstruct(simulate_counts(bell_state(), 1000, 1), 2, 0);
    EXPECT_FALSE(rec.converged);
    EXPECT_EQ(rec.iterations, 2);
    EXPECT_THROW(mle_reconstruct(exact_frequencies(bell_state()), 0, 1e-9), Error);
}

TEST(reconstruct, plain_linear_inversion_rejects_unphysical_estimates) {
    // A pure state at low shot count almost always inverts to a matrix with
    // a negative eigenvalue.
    bool saw_rejection = false;
    for (int seed = 0; seed < 20 && !saw_rejection; seed++) {
        try {
            reconstruct(simulate_counts(bell_state(), 100, seed), ReconstructionMethod::LinearInversion);
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::NotDensityMatrix);
            saw_rejection = true;
        }
    }
    EXPECT_TRUE(saw_rejection);
    auto ok = reconstruct(exact_frequencies(DensityMatrix::maximally_mixed(4)), ReconstructionMethod::LinearInversion);
    EXPECT_TRUE(matrices_near(ok.rho_hat.matrix(), ComplexMatrix::identity(4) * 0.25, 1e-15));
}

TEST(estimate_quantities, noiseless_limit_matches_closed_form) {
    for (int k = 0; k <= 10; k++) {
        ExperimentResult res = run_experiment(MeterSpec(kQuarterPi * k / 10));
        ReconstructionResult rec =
            reconstruct(exact_frequencies(res.rho_sa_out), ReconstructionMethod::ProjectedLinearInversion);
        TomographyEstimate est = estimate_quantities(rec, res.epsilon);
        EXPECT_NEAR(est.report.delta_reality, closed_form_delta_reality(kQuarterPi * k / 10), 1e-8) << k;
        EXPECT_NEAR(est.information_gain, res.information_gain, 1e-8) << k;
    }
}

TEST(estimate_quantities, mle_approaches_closed_form_on_pure_output) {
    // The output state is pure, where R rho R converges sublinearly.
    for (int k : {0, 3, 5, 10}) {
        ExperimentResult res = run_experiment(MeterSpec(kQuarterPi * k / 10));
        double expected = closed_form_delta_reality(kQuarterPi * k / 10);
        double previous = 1.0;
        for (int budget : {100, 1000, 10000}) {
            ReconstructionResult rec = mle_reconstruct(exact_frequencies(res.rho_sa_out), budget, 0);
            double err = std::abs(estimate_quantities(rec, res.epsilon).report.delta_reality - expected);
            EXPECT_LE(err, previous) << k << " " << budget;
            previous = err;
        }
        EXPECT_LT(previous, 1e-4) << k;
    }
}

TEST(estimate_quantities, finite_shot_tolerance_at_extremes) {
    // Calibrated over 100 seeds at 1e5 shots: worst |error| 0.0093 (theta 0)
    // and 2e-5 (theta 45). The plugin estimator is biased upward at theta 0.
    ExperimentResult strong = run_experiment(MeterSpec(kQuarterPi));
    ExperimentResult none = run_experiment(MeterSpec(0));
    for (int seed = 0; seed < 10; seed++) {
        auto est_strong = estimate_quantities(
            reconstruct(simulate_counts(strong.rho_sa_out, 100000, seed), ReconstructionMethod::ProjectedLinearInversion),
            strong.epsilon);
        EXPECT_NEAR(est_strong.report.delta_reality, kLn2, 0.02);
        auto est_none = estimate_quantities(
            reconstruct(simulate_counts(none.rho_sa_out, 100000, seed), ReconstructionMethod::ProjectedLinearInversion),
            none.epsilon);
        EXPECT_GE(est_none.report.delta_reality, 0);
        EXPECT_LE(est_none.report.delta_reality, 0.02);
    }
}

TEST(estimate_quantities, error_shrinks_with_shots) {
    ExperimentResult res = run_experiment(MeterSpec::from_degrees(16));
    double prev = INFINITY;
    for (std::uint64_t shots : {1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
        std::vector<double> err;
        for (int seed = 0; seed < 50; seed++) {
            auto rec =
                reconstruct(simulate_counts(res.rho_sa_out, shots, 500 + seed), ReconstructionMethod::ProjectedLinearInversion);
            err.push_back(std::abs(estimate_quantities(rec, res.epsilon).report.delta_reality - res.report.delta_reality));
        }
        std::nth_element(err.begin(), err.begin() + 25, err.end());
        EXPECT_LT(err[25], prev) << shots;
        prev = err[25];
    }
}
