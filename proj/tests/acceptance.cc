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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <cstdarg>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "weakreal/measures.h"
#include "weakreal/qcore.h"
#include "weakreal/random_states.h"
#include "weakreal/rng.h"
#include "weakreal/tomography.h"
#include "weakreal/weakmeas.h"

using namespace weakreal;

namespace {

const double kLn2 = std::log(2.0);
const double kPi = std::acos(-1.0);

struct Outcome {
    bool passed;
    std::string detail;
};

double binary_entropy(double x) {
    double h = 0;
    for (double q : {x, 1 - x}) {
        if (q > 0) {
            h -= q * std::log(q);
        }
    }
    return h;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::string fmt(const char *format, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char *format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

Observable random_observable(Engine &engine, size_t dim) {
    return Observable(random_hermitian(engine, dim));
}

DensityMatrix random_state(Engine &engine) {
    size_t dim = 2 + static_cast<size_t>(uniform01(engine) * 3) % 3;
    return random_density_matrix(engine, dim);
}

/// Sum over the system index of a (2 x 2) (x) (2 x 2) matrix, written out.
ComplexMatrix trace_out_ancilla(const ComplexMatrix &m) {
    ComplexMatrix out(2);
    for (size_t r = 0; r < 2; r++) {
        for (size_t c = 0; c < 2; c++) {
            out(r, c) = m(2 * r, 2 * c) + m(2 * r + 1, 2 * c + 1);
        }
    }
    return out;
}

Outcome fig1_curve() {
    double worst = 0;
    for (int k = 0; k <= 100; k++) {
        double eps = k / 100.0;
        RealityReport rep = delta_reality(Observable::pauli_z(), DensityMatrix(PureState::plus()), eps);
        double expected = binary_entropy(eps / 2);
        worst = std::max(worst, std::abs(rep.delta_reality - expected));
    }
    double at0 = delta_reality(Observable::pauli_z(), DensityMatrix(PureState::plus()), 0).delta_reality;
    double at1 = delta_reality(Observable::pauli_z(), DensityMatrix(PureState::plus()), 1).delta_reality;
    bool ok = worst <= 1e-10 && std::abs(at0) <= 1e-12 && std::abs(at1 - kLn2) <= 1e-12;
    return {ok, fmt("101 points max dev %.3e; dR(0)=%.3e; dR(1)-ln2=%.3e", worst, at0, at1 - kLn2)};
}

Outcome bound() {
    Engine engine(derive_seed(2026, 1));
    double worst_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 200; k++) {
        DensityMatrix rho = random_state(engine);
        Observable obs = k % 4 == 0 && rho.dim() == 2 ? Observable::pauli_z() : random_observable(engine, rho.dim());
        double eps = uniform01(engine);
        RealityReport rep = delta_reality(obs, rho, eps);
        worst_gap = std::min(worst_gap, rep.delta_reality - eps * irreality(obs, rho));
    }
    double zero_gap = 0;
    for (int k = 0; k < 200; k++) {
        DensityMatrix rho = random_state(engine);
        Observable obs = random_observable(engine, rho.dim());
        RealityReport rep = delta_reality(obs, rho, 0);
        zero_gap = std::max({zero_gap, std::abs(rep.delta_reality), std::abs(rep.bound_rhs)});
    }
    RealityReport full = delta_reality(Observable::pauli_z(), DensityMatrix(PureState::plus()), 1);
    double full_dev = std::max(std::abs(full.delta_reality - kLn2), std::abs(full.bound_rhs - kLn2));
    bool ok = worst_gap >= -1e-10 && zero_gap <= 1e-12 && full_dev <= 1e-12;
    return {ok, fmt("min(dR - eps I) over 200 draws %.3e; eps=0 max |side| %.3e; eps=1 |+> max |side - ln2| %.3e",
                    worst_gap, zero_gap, full_dev)};
}

Outcome commutation() {
    Engine engine(derive_seed(2026, 2));
    double worst = 0;
    for (int k = 0; k < 200; k++) {
        DensityMatrix rho = random_state(engine);
        Observable obs = random_observable(engine, rho.dim());
        double eps = uniform01(engine);
        DensityMatrix a = dephasing_map(monitoring_map(rho, obs, eps), obs);
        DensityMatrix b = monitoring_map(dephasing_map(rho, obs), obs, eps);
        worst = std::max(worst, max_abs_diff(a.matrix(), b.matrix()));
    }
    return {worst <= 1e-12, fmt("max deviation over 200 draws %.3e", worst)};
}

Outcome complementarity() {
    Engine engine(derive_seed(2026, 3));
    std::vector<DensityMatrix> inputs{DensityMatrix(PureState::plus())};
    for (int k = 0; k < 20; k++) {
        inputs.emplace_back(random_pure_state(engine, 2));
    }
    double sum_dev = 0;
    double match_dev = 0;
    for (const auto &rho : inputs) {
        for (int k = 0; k <= 100; k++) {
            ExperimentResult res = run_experiment(rho, MeterSpec(kPi / 4 * k / 100), NoiseSpec::none());
            sum_dev = std::max(sum_dev, std::abs(res.info_change.delta_context + res.info_change.delta_system));
            match_dev = std::max(match_dev, std::abs(std::abs(res.info_change.delta_system) - res.report.delta_reality));
        }
    }
    bool ok = sum_dev <= 1e-10 && match_dev <= 1e-10;
    return {ok, fmt("21 pure inputs x 101 angles: max |dI_ctx + dI_sys| %.3e; max ||dI_sys| - dR| %.3e", sum_dev,
                    match_dev)};
}

Outcome circuit_calibration() {
    Engine engine(derive_seed(2026, 4));
    ComplexMatrix cp = ComplexMatrix::identity(4);
    cp(3, 3) = -1;
    double worst = 0;
    double worst_hand = 0;
    for (int s = 0; s < 50; s++) {
        DensityMatrix rho = random_density_matrix(engine, 2);
        for (int k = 0; k <= 10; k++) {
            double theta = kPi / 4 * k / 10;
            ComplexMatrix meter(2);
            meter(0, 0) = std::cos(theta) * std::cos(theta);
            meter(0, 1) = meter(1, 0) = std::cos(theta) * std::sin(theta);
            meter(1, 1) = std::sin(theta) * std::sin(theta);
            ComplexMatrix joint = cp * tensor(rho.matrix(), meter) * cp.adjoint();
            DensityMatrix circuit(trace_out_ancilla(joint));
            double eps = 1 - std::cos(2 * theta);
            DensityMatrix target = monitoring_map(rho, Observable::pauli_z(), eps);
            worst = std::max(worst, trace_distance(circuit, target));
            worst = std::max(worst,
                             trace_distance(run_experiment(rho, MeterSpec(theta), NoiseSpec::none()).rho_s_out, target));
            ComplexMatrix hand = rho.matrix();
            hand(0, 1) *= 1 - eps;
            hand(1, 0) *= 1 - eps;
            worst_hand = std::max(worst_hand, max_abs_diff(target.matrix(), hand));
        }
    }
    bool ok = worst <= 1e-12 && worst_hand <= 1e-12;
    return {ok, fmt("50 states x 11 angles: max trace distance %.3e; monitoring map vs coherence scaling %.3e", worst,
                    worst_hand)};
}

Outcome fig3_curve() {
    double theta = 16 * kPi / 180;
    std::vector<double> p_grid;
    for (int k = 0; k <= 100; k++) {
        p_grid.push_back(0.5 + 0.5 * k / 100);
    }
    auto results = sweep_meter_mixing(DensityMatrix(PureState::plus()), theta, p_grid, NoiseSpec::none());
    double worst = 0;
    bool monotone = true;
    for (size_t k = 0; k < results.size(); k++) {
        double p = p_grid[k];
        double expected = binary_entropy((1 + (2 * p - 1) * std::cos(32 * kPi / 180)) / 2);
        worst = std::max(worst, std::abs(results[k].report.delta_reality - expected));
        if (k > 0) {
            // Increasing p lowers the meter entropy, so dR must not rise.
            bool entropy_falls = results[k].s_m <= results[k - 1].s_m;
            bool dr_falls = results[k].report.delta_reality <= results[k - 1].report.delta_reality + 1e-15;
            monotone = monotone && entropy_falls && dr_falls;
        }
    }
    double pure_end = results.back().report.delta_reality;
    double mixed_end = results.front().report.delta_reality;
    bool ok = worst <= 1e-10 && std::abs(pure_end - 0.268770) <= 1e-4 && std::abs(mixed_end - kLn2) <= 1e-12 &&
              std::abs(results.back().s_m) <= 1e-12 && std::abs(results.front().s_m - kLn2) <= 1e-12 && monotone;
    return {ok, fmt("101 points max dev %.3e; dR(S_m=0)=%.10f; dR(S_m=ln2)-ln2=%.3e; monotone in S_m: %s", worst,
                    pure_end, mixed_end - kLn2, monotone ? "yes" : "no")};
}

Outcome fig2_saturation() {
    NoiseSpec noisy{NoiseKind::SystemDepolarizing, 0.1, NoiseScaling::LinearInEpsilon};
    ExperimentResult lossy = run_experiment(MeterSpec(kPi / 4), noisy);
    ExperimentResult clean = run_experiment(MeterSpec(kPi / 4), NoiseSpec::none());
    std::vector<double> tomo;
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        ReconstructionResult rec =
            reconstruct(simulate_counts(lossy.rho_sa_out, 100000, derive_seed(2026, 100 + seed)),
                        ReconstructionMethod::ProjectedLinearInversion);
        tomo.push_back(estimate_quantities(rec, lossy.epsilon).information_gain);
    }
    double tomo_gain = median(tomo);
    bool below = lossy.information_gain < kLn2 - 1e-3 && std::abs(lossy.info_change.delta_context) < kLn2 - 1e-3 &&
                 tomo_gain < kLn2 - 1e-3;
    bool reaches = std::abs(clean.information_gain - kLn2) <= 1e-10 &&
                   std::abs(std::abs(clean.info_change.delta_system) - kLn2) <= 1e-10 &&
                   std::abs(std::abs(clean.info_change.delta_context) - kLn2) <= 1e-10;
    return {below && reaches,
            fmt("eps=1, kappa0=0.1: dI %.6f (tomography median %.6f), |dI_ctx| %.6f, |dI_sys| %.6f; kappa0=0: dI-ln2 "
                "%.3e",
                lossy.information_gain, tomo_gain, std::abs(lossy.info_change.delta_context),
                std::abs(lossy.info_change.delta_system), clean.information_gain - kLn2)};
}

Outcome tomography_end_to_end() {
    const int seeds = 50;
    const int points = 10;
    double worst_fid = 1;
    double worst_err = 0;
    std::vector<double> all_fid;
    std::vector<double> all_err;
    for (int k = 0; k < points; k++) {
        double theta = kPi / 4 * k / (points - 1);
        ExperimentResult res = run_experiment(MeterSpec(theta), NoiseSpec::none());
        double exact = closed_form_delta_reality(theta);
        std::vector<double> fids;
        std::vector<double> errs;
        for (int s = 0; s < seeds; s++) {
            std::uint64_t seed = derive_seed(derive_seed(2026, 200 + k), s);
            ReconstructionResult rec =
                reconstruct(simulate_counts(res.rho_sa_out, 100000, seed), ReconstructionMethod::ProjectedLinearInversion);
            attach_fidelity(rec, res.rho_sa_out);
            fids.push_back(*rec.fidelity_to_truth);
            errs.push_back(std::abs(estimate_quantities(rec, res.epsilon).report.delta_reality - exact));
        }
        worst_fid = std::min(worst_fid, median(fids));
        worst_err = std::max(worst_err, median(errs));
        all_fid.insert(all_fid.end(), fids.begin(), fids.end());
        all_err.insert(all_err.end(), errs.begin(), errs.end());
    }
    bool ok = worst_fid >= 0.99 && worst_err <= 0.02 && median(all_fid) >= 0.99 && median(all_err) <= 0.02;
    return {ok, fmt("10 angles x 50 seeds at 1e5 shots: median fidelity %.5f (worst angle %.5f); median |dR error| "
                    "%.5f (worst angle %.5f)",
                    median(all_fid), worst_fid, median(all_err), worst_err)};
}

/// Closest point of the probability simplex to `mu` by enumerating supports.
std::vector<double> simplex_projection_by_supports(const std::vector<double> &mu) {
    size_t n = mu.size();
    std::vector<double> best;
    double best_dist = std::numeric_limits<double>::infinity();
    for (unsigned mask = 1; mask < (1u << n); mask++) {
        double sum = 0;
        int count = 0;
        for (size_t i = 0; i < n; i++) {
            if (mask >> i & 1) {
                sum += mu[i];
                count++;
            }
        }
        double shift = (1 - sum) / count;
        std::vector<double> x(n, 0.0);
        bool feasible = true;
        for (size_t i = 0; i < n; i++) {
            if (mask >> i & 1) {
                x[i] = mu[i] + shift;
                feasible = feasible && x[i] >= 0;
            }
        }
        if (!feasible) {
            continue;
        }
        double dist = 0;
        for (size_t i = 0; i < n; i++) {
            dist += (x[i] - mu[i]) * (x[i] - mu[i]);
        }
        if (dist < best_dist) {
            best_dist = dist;
            best = x;
        }
    }
    return best;
}

Outcome projection_oracle() {
    Engine engine(derive_seed(2026, 5));
    double worst = 0;
    double worst_excess = 0;
    int inputs = 0;
    while (inputs < 20) {
        ComplexMatrix h = random_hermitian(engine, 4);
        Complex tr = h.trace();
        for (size_t i = 0; i < 4; i++) {
            h(i, i) -= (tr - 1.0) / 4.0;
        }
        EigenSystem es = eig_hermitian(h);
        if (es.values.back() >= 0) {
            continue;
        }
        inputs++;
        std::vector<double> mu(es.values.begin(), es.values.end());
        std::vector<double> lambda = simplex_projection_by_supports(mu);
        ComplexMatrix oracle(4);
        for (size_t k = 0; k < 4; k++) {
            for (size_t r = 0; r < 4; r++) {
                for (size_t c = 0; c < 4; c++) {
                    oracle(r, c) += lambda[k] * es.vectors(r, k) * std::conj(es.vectors(c, k));
                }
            }
        }
        DensityMatrix projected = project_to_physical(h);
        worst = std::max(worst, (projected.matrix() - oracle).frobenius_norm());
        double own = (projected.matrix() - h).frobenius_norm();
        for (int t = 0; t < 200; t++) {
            DensityMatrix other = random_density_matrix(engine, 4, 1 + t % 4);
            worst_excess = std::max(worst_excess, own - (other.matrix() - h).frobenius_norm());
        }
    }
    bool ok = worst <= 1e-6 && worst_excess <= 0;
    return {ok, fmt("20 inputs: max Frobenius distance to support-enumeration oracle %.3e; beaten by a random state: %s",
                    worst, worst_excess > 0 ? "yes" : "no")};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
        double max_seconds;
    };
    std::vector<Criterion> criteria{
        {"reality curve for |+>, Z over 101 strengths", fig1_curve, 1.0},
        {"reality change bound dR >= eps * I", bound, 5.0},
        {"monitoring and dephasing maps commute", commutation, 0},
        {"information complementarity, unitary pure inputs", complementarity, 0},
        {"controlled-phase circuit calibration", circuit_calibration, 0},
        {"reality change versus meter entropy at 16 deg", fig3_curve, 0},
        {"information saturation under depolarizing noise", fig2_saturation, 0},
        {"tomography end to end at 1e5 shots", tomography_end_to_end, 60.0},
        {"projection to physical states matches brute force", projection_oracle, 0},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = c.run();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.max_seconds <= 0 || seconds < c.max_seconds;
        bool passed = outcome.passed && in_time;
        failures += passed ? 0 : 1;
        std::printf("%s %s: %s; %.2f s", passed ? "PASS" : "FAIL", c.name, outcome.detail.c_str(), seconds);
        if (c.max_seconds > 0) {
            std::printf(" (limit %.0f s)", c.max_seconds);
        }
        std::printf("\n");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
