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

#include "weakreal/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weakreal/rng.h"
#include "weakreal/verify.h"

namespace weakreal {

namespace {

// Round-trip precision: a parsed value is bit-identical to the computed one.
std::string num(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

double in_units(double nats, Units units) {
    return units == Units::Bits ? nats_to_bits(nats) : nats;
}

const char *units_name(Units units) {
    return units == Units::Bits ? "bits" : "nats";
}

const char *scaling_name(NoiseScaling scaling) {
    return scaling == NoiseScaling::LinearInEpsilon ? "linear" : "constant";
}

struct TomoStats {
    double mean = 0;
    double stddev = 0;
};

// Reality change estimated from `repeats` independent simulated datasets.
TomoStats tomography_delta_reality(
    const ExperimentResult &res, const DensityMatrix &system, const RunConfig &cfg, std::uint64_t grid_index) {
    std::uint64_t point_seed = derive_seed(cfg.seed, grid_index);
    std::vector<double> values;
    for (int r = 0; r < cfg.repeats; r++) {
        CountTable counts = simulate_counts(res.rho_sa_out, cfg.shots, derive_seed(point_seed, r));
        ReconstructionResult rec = reconstruct(counts, cfg.method);
        values.push_back(estimate_quantities(rec, res.epsilon, system).report.delta_reality);
    }
    TomoStats stats;
    for (double v : values) {
        stats.mean += v;
    }
    stats.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0;
        for (double v : values) {
            ss += (v - stats.mean) * (v - stats.mean);
        }
        stats.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return stats;
}

ReconstructionMethod parse_method(const std::string &text) {
    for (auto m :
         {ReconstructionMethod::LinearInversion, ReconstructionMethod::ProjectedLinearInversion,
          ReconstructionMethod::MLE}) {
        if (text == reconstruction_method_name(m)) {
            return m;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown reconstruction method '" + text + "'");
}

}  // namespace

const char *command_name(Command command) {
    switch (command) {
        case Command::SweepStrength:
            return "sweep-strength";
        case Command::SweepMixing:
            return "sweep-mixing";
        case Command::TomoRun:
            return "tomo-run";
        case Command::Verify:
            return "verify";
    }
    return "unknown";
}

std::vector<double> RangeSpec::values() const {
    if (points < 2) {
        throw Error(ErrorKind::InvalidArgument, "grids need at least 2 points");
    }
    std::vector<double> result(points);
    for (int k = 0; k < points; k++) {
        result[k] = start + (stop - start) * k / (points - 1);
    }
    // Pin the endpoint exactly.
    result.back() = stop;
    return result;
}

void RunConfig::validate() const {
    noise.validate();
    if (repeats < 1) {
        throw Error(ErrorKind::InvalidArgument, "--repeats must be >= 1");
    }
    auto check_theta = [](double deg, const char *flag) {
        if (!(deg >= 0 && deg <= 45)) {
            throw Error(ErrorKind::OutOfRange, std::string(flag) + " must lie in [0, 45] degrees");
        }
    };
    auto check_p = [](double p, const char *flag) {
        if (!(p >= 0 && p <= 1)) {
            throw Error(ErrorKind::OutOfRange, std::string(flag) + " must lie in [0, 1]");
        }
    };
    switch (command) {
        case Command::SweepStrength:
            if (theta_deg.points < 2) {
                throw Error(ErrorKind::InvalidArgument, "--points must be >= 2");
            }
            check_theta(theta_deg.start, "--theta-start");
            check_theta(theta_deg.stop, "--theta-stop");
            if (!(theta_deg.stop > theta_deg.start)) {
                throw Error(ErrorKind::InvalidArgument, "--theta-stop must exceed --theta-start");
            }
            break;
        case Command::SweepMixing:
            if (p.points < 2) {
                throw Error(ErrorKind::InvalidArgument, "--points must be >= 2");
            }
            check_p(p.start, "--p-start");
            check_p(p.stop, "--p-stop");
            check_theta(theta_fixed_deg, "--theta-deg");
            break;
        case Command::TomoRun:
            check_theta(theta_fixed_deg, "--theta-deg");
            check_p(p_fixed, "--p");
            if (shots == 0 && counts_in.empty()) {
                throw Error(ErrorKind::InvalidArgument, "tomo-run needs --shots >= 1 or --counts-in");
            }
            break;
        case Command::Verify:
            break;
    }
}

std::string describe(const RunConfig &cfg) {
    std::ostringstream ss;
    ss << "# weakreal " << command_name(cfg.command);
    switch (cfg.command) {
        case Command::SweepStrength:
            ss << " theta_start_deg=" << num(cfg.theta_deg.start) << " theta_stop_deg=" << num(cfg.theta_deg.stop)
               << " points=" << cfg.theta_deg.points;
            break;
        case Command::SweepMixing:
            ss << " p_start=" << num(cfg.p.start) << " p_stop=" << num(cfg.p.stop) << " points=" << cfg.p.points
               << " theta_deg=" << num(cfg.theta_fixed_deg);
            break;
        case Command::TomoRun:
            ss << " theta_deg=" << num(cfg.theta_fixed_deg) << " p=" << num(cfg.p_fixed);
            break;
        case Command::Verify:
            break;
    }
    ss << " system=plus observable=Z noise=" << noise_kind_name(cfg.noise.kind) << " kappa0=" << num(cfg.noise.kappa0)
       << " scaling=" << scaling_name(cfg.noise.scaling) << " shots=" << cfg.shots << " seed=" << cfg.seed
       << " repeats=" << cfg.repeats << " method=" << reconstruction_method_name(cfg.method)
       << " units=" << units_name(cfg.units);
    return ss.str();
}

void cmd_sweep_strength(const RunConfig &cfg, std::ostream &out) {
    cfg.validate();
    const DensityMatrix system(PureState::plus());
    std::vector<double> degrees = cfg.theta_deg.values();
    std::vector<double> radians;
    for (double d : degrees) {
        radians.push_back(degrees_to_radians(d));
    }
    auto results = sweep_strength(system, radians, cfg.noise);

    out << describe(cfg) << '\n';
    out << "theta_deg,epsilon,dR_exact,dR_bound,dI_context,dI_system,dR_tomo,dR_tomo_err\n";
    for (size_t k = 0; k < results.size(); k++) {
        const ExperimentResult &res = results[k];
        out << num(degrees[k]) << ',' << num(res.epsilon) << ',' << num(in_units(res.report.delta_reality, cfg.units))
            << ',' << num(in_units(res.report.bound_rhs, cfg.units)) << ','
            << num(in_units(res.info_change.delta_context, cfg.units)) << ','
            << num(in_units(res.info_change.delta_system, cfg.units)) << ',';
        if (cfg.shots > 0) {
            TomoStats stats = tomography_delta_reality(res, system, cfg, k);
            out << num(in_units(stats.mean, cfg.units)) << ',' << num(in_units(stats.stddev, cfg.units));
        } else {
            out << ',';
        }
        out << '\n';
    }
}

void cmd_sweep_mixing(const RunConfig &cfg, std::ostream &out) {
    cfg.validate();
    const DensityMatrix system(PureState::plus());
    std::vector<double> p_grid = cfg.p.values();
    auto results = sweep_meter_mixing(system, degrees_to_radians(cfg.theta_fixed_deg), p_grid, cfg.noise);

    out << describe(cfg) << '\n';
    out << "p,s_m,epsilon,dR_exact,dR_tomo,dR_tomo_err\n";
    for (size_t k = 0; k < results.size(); k++) {
        const ExperimentResult &res = results[k];
        out << num(p_grid[k]) << ',' << num(in_units(res.s_m, cfg.units)) << ',' << num(res.epsilon) << ','
            << num(in_units(res.report.delta_reality, cfg.units)) << ',';
        if (cfg.shots > 0) {
            TomoStats stats = tomography_delta_reality(res, system, cfg, k);
            out << num(in_units(stats.mean, cfg.units)) << ',' << num(in_units(stats.stddev, cfg.units));
        } else {
            out << ',';
        }
        out << '\n';
    }
}

void cmd_tomo_run(const RunConfig &cfg, std::ostream *table_out, std::ostream &report) {
    cfg.validate();
    const DensityMatrix system(PureState::plus());
    ExperimentResult res =
        run_experiment(system, MeterSpec::from_degrees(cfg.theta_fixed_deg, cfg.p_fixed), cfg.noise);

    CountTable counts;
    if (!cfg.counts_in.empty()) {
        std::ifstream in(cfg.counts_in);
        if (!in) {
            throw Error(ErrorKind::InvalidArgument, "cannot open " + cfg.counts_in);
        }
        counts = read_count_table_csv(in);
    } else {
        counts = simulate_counts(res.rho_sa_out, cfg.shots, cfg.seed);
    }
    if (table_out != nullptr) {
        *table_out << describe(cfg) << '\n';
        write_count_table_csv(*table_out, counts);
    }

    ReconstructionResult rec = reconstruct(counts, cfg.method);
    attach_fidelity(rec, res.rho_sa_out);
    TomographyEstimate est = estimate_quantities(rec, res.epsilon, system);
    report << describe(cfg) << '\n';
    report << "method " << reconstruction_method_name(rec.method) << '\n';
    report << "shots_per_setting " << counts.shots_per_setting << '\n';
    report << "epsilon " << num(res.epsilon) << '\n';
    report << "dR_exact " << num(in_units(res.report.delta_reality, cfg.units)) << '\n';
    report << "dR_tomo " << num(in_units(est.report.delta_reality, cfg.units)) << '\n';
    report << "dI_exact " << num(in_units(res.information_gain, cfg.units)) << '\n';
    report << "dI_tomo " << num(in_units(est.information_gain, cfg.units)) << '\n';
    report << "fidelity " << num(*rec.fidelity_to_truth) << '\n';
    report << "log_likelihood " << num(rec.log_likelihood) << '\n';
    if (rec.method == ReconstructionMethod::MLE) {
        report << "iterations " << rec.iterations << (rec.converged ? "" : " (not converged)") << '\n';
    }
}

int cmd_verify(const RunConfig &cfg, std::ostream &report) {
    cfg.validate();
    VerifyOptions options;
    options.seed = cfg.seed;
    options.noise = cfg.noise;
    options.tamper_epsilon = cfg.tamper_epsilon;
    bool all_ok = true;
    for (const auto &r : run_verification(options)) {
        const char *tag = r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL");
        report << '[' << tag << "] " << r.name << ": " << r.detail << '\n';
        if (!r.informational && !r.passed) {
            all_ok = false;
        }
    }
    report << (all_ok ? "all properties hold" : "verification FAILED") << '\n';
    return all_ok ? 0 : 1;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Weak-measurement reality and information simulator"};
    app.require_subcommand(1);

    RunConfig cfg;
    int points = 0;
    std::string noise_kind = "none";
    std::string scaling = "linear";
    std::string units = "nats";
    std::string method = "projected";
    double kappa0 = -1;

    auto add_options = [&](CLI::App *sub) {
        sub->add_option("--theta-start", cfg.theta_deg.start, "First meter angle of the sweep, degrees");
        sub->add_option("--theta-stop", cfg.theta_deg.stop, "Last meter angle of the sweep, degrees");
        sub->add_option("--points", points, "Grid points (>= 2)");
        sub->add_option("--p-start", cfg.p.start, "First meter mixing weight");
        sub->add_option("--p-stop", cfg.p.stop, "Last meter mixing weight");
        sub->add_option("--theta-deg", cfg.theta_fixed_deg, "Fixed meter angle, degrees");
        sub->add_option("--p", cfg.p_fixed, "Meter mixing weight for tomo-run");
        sub->add_option("--noise-kind", noise_kind, "none | dephasing | depolarizing | joint-loss");
        sub->add_option("--kappa0", kappa0, "Noise strength (default 0.1 when a noise kind is set)");
        sub->add_option("--noise-scaling", scaling, "constant | linear (in epsilon)");
        sub->add_option("--shots", cfg.shots, "Shots per tomography setting; 0 = exact only");
        sub->add_option("--seed", cfg.seed, "Base RNG seed");
        sub->add_option("--repeats", cfg.repeats, "Tomography datasets per grid point");
        sub->add_option("--method", method, "linear | projected | mle");
        sub->add_option("--units", units, "nats | bits");
        sub->add_option("--out", cfg.out_path, "Output file (default: standard output)");
        sub->add_option("--counts-in", cfg.counts_in, "tomo-run: count table CSV to reconstruct");
        sub->add_option("--tamper-epsilon", cfg.tamper_epsilon)->group("");
    };

    auto *strength = app.add_subcommand("sweep-strength", "Reality and information change versus strength");
    auto *mixing = app.add_subcommand("sweep-mixing", "Reality change versus meter entropy");
    auto *tomo = app.add_subcommand("tomo-run", "Simulate and reconstruct one tomography dataset");
    auto *verify = app.add_subcommand("verify", "Check the invariant suite");
    for (auto *sub : {strength, mixing, tomo, verify}) {
        add_options(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::ofstream file;
    try {
        if (strength->parsed()) {
            cfg.command = Command::SweepStrength;
        } else if (mixing->parsed()) {
            cfg.command = Command::SweepMixing;
        } else if (tomo->parsed()) {
            cfg.command = Command::TomoRun;
        } else {
            cfg.command = Command::Verify;
        }
        if (points != 0) {
            cfg.theta_deg.points = points;
            cfg.p.points = points;
        }
        cfg.noise.kind = parse_noise_kind(noise_kind);
        if (scaling == "linear") {
            cfg.noise.scaling = NoiseScaling::LinearInEpsilon;
        } else if (scaling == "constant") {
            cfg.noise.scaling = NoiseScaling::Constant;
        } else {
            throw Error(ErrorKind::InvalidArgument, "unknown noise scaling '" + scaling + "'");
        }
        if (kappa0 >= 0) {
            cfg.noise.kappa0 = kappa0;
        } else if (kappa0 != -1) {
            throw Error(ErrorKind::OutOfRange, "--kappa0 must lie in [0, 1]");
        } else {
            cfg.noise.kappa0 = cfg.noise.kind == NoiseKind::None ? 0.0 : NoiseSpec::kDefaultKappa0;
        }
        if (units == "nats") {
            cfg.units = Units::Nats;
        } else if (units == "bits") {
            cfg.units = Units::Bits;
        } else {
            throw Error(ErrorKind::InvalidArgument, "unknown units '" + units + "'");
        }
        cfg.method = parse_method(method);
        cfg.validate();

        bool to_stdout = cfg.out_path.empty() || cfg.out_path == "-";
        if (!to_stdout) {
            file.open(cfg.out_path);
            if (!file) {
                throw Error(ErrorKind::InvalidArgument, "cannot open output file " + cfg.out_path);
            }
        }
        std::ostream &dest = to_stdout ? out : static_cast<std::ostream &>(file);

        switch (cfg.command) {
            case Command::SweepStrength:
                cmd_sweep_strength(cfg, dest);
                return 0;
            case Command::SweepMixing:
                cmd_sweep_mixing(cfg, dest);
                return 0;
            case Command::TomoRun:
                cmd_tomo_run(cfg, to_stdout ? nullptr : &file, out);
                return 0;
            case Command::Verify:
                return cmd_verify(cfg, dest);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace weakreal
