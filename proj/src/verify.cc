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

#include "weakreal/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "weakreal/measures.h"
#include "weakreal/random_states.h"

namespace weakreal {

namespace {

std::string fmt(const char *format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, value);
    return buf;
}

PropertyResult check_max(const std::string &name, double worst, double tol) {
    return {name, worst <= tol, false, "max deviation " + fmt("%.3e", worst) + " (tol " + fmt("%.0e", tol) + ")"};
}

}  // namespace

std::vector<PropertyResult> run_verification(const VerifyOptions &options) {
    std::vector<PropertyResult> results;
    Engine engine(derive_seed(options.seed, 0));
    const Observable z = Observable::pauli_z();
    const DensityMatrix plus(PureState::plus());

    {
        double worst = 0;
        for (int trial = 0; trial < 200; trial++) {
            DensityMatrix rho = random_density_matrix(engine, 2, 1 + trial % 2);
            double eps = uniform01(engine);
            ComplexMatrix expected = rho.matrix() * (1 - eps) + dephasing_map(rho, z).matrix() * eps;
            worst = std::max(worst, max_abs_diff(monitoring_map(rho, z, eps).matrix(), expected));
        }
        results.push_back(check_max("monitoring map equals (1-eps) rho + eps Phi(rho)", worst, 1e-12));
    }
    {
        double worst = 0;
        for (int trial = 0; trial < 200; trial++) {
            DensityMatrix rho = random_density_matrix(engine, 2, 1 + trial % 2);
            double eps = uniform01(engine);
            ComplexMatrix a = dephasing_map(monitoring_map(rho, z, eps), z).matrix();
            ComplexMatrix b = monitoring_map(dephasing_map(rho, z), z, eps).matrix();
            worst = std::max(worst, max_abs_diff(a, b));
        }
        results.push_back(check_max("commutation of monitoring and dephasing maps", worst, 1e-12));
    }
    {
        double worst_violation = 0;
        for (int trial = 0; trial < 200; trial++) {
            DensityMatrix rho = random_density_matrix(engine, 2, 1 + trial % 2);
            RealityReport r = delta_reality(z, rho, uniform01(engine));
            worst_violation = std::max(worst_violation, r.bound_rhs - r.delta_reality);
        }
        results.push_back({"reality change bound dR >= eps * I(Z|rho)", worst_violation <= 1e-10, false,
                           "max bound excess " + fmt("%.3e", worst_violation)});
    }
    {
        bool monotone = true;
        for (int trial = 0; trial < 20 && monotone; trial++) {
            DensityMatrix rho = random_density_matrix(engine, 2, 1 + trial % 2);
            double prev = -1;
            for (int k = 0; k <= 100; k++) {
                double dr = delta_reality(z, rho, k / 100.0).delta_reality;
                if (dr < prev - 1e-12) {
                    monotone = false;
                    break;
                }
                prev = dr;
            }
        }
        results.push_back({"reality change monotone in eps", monotone, false, "20 states x 101 strengths"});
    }
    {
        double worst = 0;
        for (int trial = 0; trial < 100; trial++) {
            DensityMatrix rho = random_density_matrix(engine, 4, 1 + trial % 4);
            ComplexMatrix u = random_unitary(engine, 4);
            double before = information_ledger(rho).i_total;
            double after = information_ledger(apply_unitary(rho, u)).i_total;
            worst = std::max(worst, std::abs(after - before));
        }
        results.push_back(check_max("total information conserved under unitaries", worst, 1e-10));
    }
    {
        double worst = 0;
        for (int trial = 0; trial < 50; trial++) {
            DensityMatrix rho = random_density_matrix(engine, 2, 1 + trial % 2);
            for (int k = 0; k <= 10; k++) {
                MeterSpec spec(kQuarterPi * k / 10.0);
                ExperimentResult res = run_experiment(rho, spec, NoiseSpec::none());
                double eps = std::clamp(spec.epsilon() + options.tamper_epsilon, 0.0, 1.0);
                worst = std::max(worst, trace_distance(res.rho_s_out, monitoring_map(rho, z, eps)));
            }
        }
        results.push_back(check_max("controlled-phase circuit reproduces monitoring map", worst, 1e-12));
    }
    {
        double worst = 0;
        for (int k = 0; k <= 100; k++) {
            double eps = k / 100.0;
            double expected = shannon_binary_entropy(1 - eps / 2);
            worst = std::max(worst, std::abs(delta_reality(z, plus, eps).delta_reality - expected));
        }
        results.push_back(check_max("closed-form reality curve for |+>, Z", worst, 1e-12));
    }
    {
        double worst = 0;
        for (int k = 0; k <= 10; k++) {
            ExperimentResult res = run_experiment(plus, MeterSpec(kQuarterPi * k / 10.0), NoiseSpec::none());
            worst = std::max(worst, std::abs(res.complementarity_residual));
            worst = std::max(worst, std::abs(std::abs(res.info_change.delta_system) - res.report.delta_reality));
        }
        results.push_back(check_max("information complementarity (unitary, pure inputs)", worst, 1e-10));
    }
    {
        double worst = 0;
        double theta = degrees_to_radians(16);
        for (int k = 0; k <= 20; k++) {
            double p = k / 20.0;
            ExperimentResult res = run_experiment(plus, MeterSpec(theta, p), NoiseSpec::none());
            worst = std::max(worst, std::abs(res.report.delta_reality - closed_form_delta_reality(theta, p)));
        }
        results.push_back(check_max("mixed-meter closed form at 16 deg", worst, 1e-10));
    }
    if (!options.noise.is_trivial()) {
        double worst_gain = 0;
        double worst_residual = 0;
        for (int k = 0; k <= 10; k++) {
            ExperimentResult res = run_experiment(plus, MeterSpec(kQuarterPi * k / 10.0), options.noise);
            worst_gain = std::max(worst_gain, res.ledger_after.i_total - res.ledger_before.i_total);
            worst_residual = std::max(worst_residual, std::abs(res.complementarity_residual));
        }
        results.push_back({"open system never gains total information", worst_gain <= 1e-10, false,
                           "max gain " + fmt("%.3e", worst_gain)});
        bool violated = worst_residual > 1e-10;
        results.push_back({"information conservation under noise", true, true,
                           violated ? "expected violation, max residual " + fmt("%.6f", worst_residual)
                                    : "no violation observed"});
    }
    return results;
}

}  // namespace weakreal
