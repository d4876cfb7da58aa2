// Copyright 2026 The steanesim Authors
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

#include "steanesim/cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>

#include "CLI11.hpp"
#include "steanesim/experiment.h"
#include "steanesim/report.h"

namespace steanesim {

namespace {

struct Options {
    std::vector<std::string> protocols{"shor"};
    std::vector<std::string> envs{"depolarizing"};
    std::vector<double> p_values{1e-3};
    std::vector<int> q_values{50};
    long trials = 10'000;
    std::string mode = "mc";
    int max_weight = 2;
    std::uint64_t seed = 1;
    std::string sequence{kDefaultSequence};
    double alpha = 0;
    double beta = 0;
    std::string out;
    std::string format = "csv";
    int workers = 1;
    std::string theta = "unverified";
    long enum_samples = 2'000;
    std::uint64_t enum_cap = 100'000;
};

ExperimentConfig base_config(const Options& o) {
    ExperimentConfig c;
    c.sequence = o.sequence;
    c.mode = parse_run_mode(o.mode);
    c.trials = o.trials;
    c.max_weight = o.max_weight;
    c.seed = o.seed;
    c.alpha = o.alpha;
    c.beta = o.beta;
    c.workers = o.workers;
    c.theta = parse_theta_preparation(o.theta);
    c.enum_samples = o.enum_samples;
    c.enum_exact_cap = o.enum_cap;
    return c;
}

SweepSpec sweep_spec(const Options& o) {
    SweepSpec spec;
    spec.base = base_config(o);
    spec.p_values = o.p_values;
    spec.q_values = o.q_values;
    spec.envs = o.envs;
    for (const std::string& name : o.protocols) spec.protocols.push_back(SmProtocol::parse(name));
    return spec;
}

template <typename T>
void require_single(const std::vector<T>& values, const char* flag) {
    if (values.size() != 1) {
        throw std::invalid_argument(std::string("run takes exactly one value for ") + flag + "; use sweep for grids");
    }
}

// Writes to --out when given, otherwise to `out`.
class Sink {
   public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
            stream_ = file_.get();
        }
    }
    std::ostream& stream() { return *stream_; }

   private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

void print_certification(std::ostream& out, const std::vector<CertificationReport>& reports) {
    out << "gadget,locations,injections,max_residual_weight,heavy_residuals,logical_failures,"
           "worst_logical_fidelity,verdict\n";
    for (const CertificationReport& r : reports) {
        out << r.gadget << ',' << r.locations << ',' << r.injections << ',' << r.max_residual_weight << ','
            << r.heavy_residuals << ',' << r.logical_failures << ',' << format_number(r.worst_logical_fidelity) << ','
            << (r.fault_tolerant() ? "fault-tolerant" : "not-fault-tolerant") << '\n';
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Steane [[7,1,3]] syndrome-measurement simulator", "steanesim"};
    app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");
    app.require_subcommand(1, 1);
    app.fallthrough();

    Options o;
    app.add_option("--protocol", o.protocols, "single, single-repeated, shor, steane, steane-repeated")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--env", o.envs, "depolarizing, x-dominant, y-dominant, z-dominant")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--p", o.p_values, "Error strength")->delimiter(',')->capture_default_str();
    app.add_option("--q", o.q_values, "Number of syndrome measurements (0 disables them)")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--trials", o.trials, "Monte Carlo trajectories")->capture_default_str();
    app.add_option("--mode", o.mode, "mc or enum")->capture_default_str();
    app.add_option("--max-weight", o.max_weight, "Largest fault weight in enumeration mode")->capture_default_str();
    app.add_option("--seed", o.seed, "Experiment seed")->capture_default_str();
    app.add_option("--sequence", o.sequence, "Composite gates over {A,B}")->capture_default_str();
    app.add_option("--alpha", o.alpha, "Initial state cos(alpha)|0> + e^{i beta} sin(alpha)|1>")
        ->capture_default_str();
    app.add_option("--beta", o.beta, "Initial state phase")->capture_default_str();
    app.add_option("--out", o.out, "Output file (default: standard output)");
    app.add_option("--format", o.format, "csv or json")->capture_default_str();
    app.add_option("--workers", o.workers, "Worker threads")->capture_default_str();
    app.add_option("--theta", o.theta, "Magic-state preparation: unverified or verified")->capture_default_str();
    app.add_option("--enum-samples", o.enum_samples, "Samples per weight class too large to list")
        ->capture_default_str();
    app.add_option("--enum-cap", o.enum_cap, "Largest weight class listed exhaustively")->capture_default_str();

    CLI::App* run = app.add_subcommand("run", "Run a single experiment");
    CLI::App* sweep = app.add_subcommand("sweep", "Run the (env, protocol, p, q) grid");
    CLI::App* certify = app.add_subcommand("certify", "Single-fault injection over each gadget");
    CLI::App* resources = app.add_subcommand("resources", "Ancilla qubits per syndrome measurement");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        Sink sink(o.out, out);
        std::ostream& os = sink.stream();
        if (run->parsed()) {
            require_single(o.protocols, "--protocol");
            require_single(o.envs, "--env");
            require_single(o.p_values, "--p");
            require_single(o.q_values, "--q");
            ExperimentConfig c = base_config(o);
            c.protocol = SmProtocol::parse(o.protocols.front());
            c.env = o.envs.front();
            c.p = o.p_values.front();
            c.q = o.q_values.front();
            SweepRow row;
            row.result = run_experiment(c);
            if (c.q == 50) {
                row.d_log = fractional_change(1 - row.result.f_log, 1 - row.result.f_log);
                row.d_log_psm = fractional_change(1 - row.result.f_log_psm, 1 - row.result.f_log_psm);
            }
            write_rows(os, {row}, parse_output_format(o.format));
        } else if (sweep->parsed()) {
            const std::vector<SweepRow> rows = run_sweep(sweep_spec(o));
            for (const SweepRow& row : rows) {
                if (!row.error.empty()) err << "cell failed: " << row.error << '\n';
            }
            write_rows(os, rows, parse_output_format(o.format));
        } else if (certify->parsed()) {
            std::vector<CertificationReport> reports;
            for (const char* name : {"single", "single-repeated", "shor", "steane", "steane-repeated"}) {
                reports.push_back(certify_gadget(SmProtocol::parse(name), o.seed));
            }
            reports.push_back(certify_t_gadget(ThetaPreparation::kUnverified, o.seed));
            reports.push_back(certify_t_gadget(ThetaPreparation::kVerified, o.seed));
            print_certification(os, reports);
        } else if (resources->parsed()) {
            os << "protocol,ancilla_qubits_per_sm\n";
            for (const ResourceRow& row : resource_table()) os << row.label << ',' << row.ancilla_per_round << '\n';
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace steanesim
