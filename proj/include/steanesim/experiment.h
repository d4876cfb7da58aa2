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

#ifndef STEANESIM_EXPERIMENT_H
#define STEANESIM_EXPERIMENT_H

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "steanesim/logical_gates.h"
#include "steanesim/noise_model.h"
#include "steanesim/syndrome_extraction.h"

namespace steanesim {

inline constexpr const char* kEngineVersion = "0.1.0";

enum class RunMode : std::uint8_t { kMonteCarlo, kEnumeration };

std::string run_mode_name(RunMode mode);
RunMode parse_run_mode(std::string_view name);
ThetaPreparation parse_theta_preparation(std::string_view name);
std::string theta_preparation_name(ThetaPreparation prep);

struct ExperimentConfig {
    std::string sequence{kDefaultSequence};
    /// Number of syndrome measurements in the sequence; 0 disables them.
    int q = 50;
    SmProtocol protocol;
    std::string env = "depolarizing";
    double p = 1e-3;
    RunMode mode = RunMode::kMonteCarlo;
    long trials = 10'000;
    int max_weight = 2;
    std::uint64_t seed = 1;
    double alpha = 0;
    double beta = 0;
    ThetaPreparation theta = ThetaPreparation::kUnverified;
    int workers = 1;
    /// Enumeration: a weight class is listed exactly when it has at most
    /// this many configurations, otherwise it is sampled.
    std::uint64_t enum_exact_cap = 100'000;
    long enum_samples = 2'000;

    ErrorEnvironment environment() const { return ErrorEnvironment::preset(env, p); }
    void validate() const;
};

struct Resources {
    double ancilla_qubits = 0;
    double time_steps = 0;
    double sm_rounds = 0;
};

struct ExperimentResult {
    ExperimentConfig config;
    double f_phys = 0;
    double f_log = 0;
    double f_phys_psm = 0;
    double f_log_psm = 0;
    /// Monte Carlo standard errors sqrt(F(1-F)/N); zero in enumeration mode.
    double se_phys = 0;
    double se_log = 0;
    double se_phys_psm = 0;
    double se_log_psm = 0;
    /// Enumeration only: probability mass of the omitted weight classes.
    /// Every true fidelity lies in [F, F + bound].
    double truncation_bound = 0;
    /// Enumeration only: per-weight class probability and conditional mean
    /// logical fidelities (without / with perfect final SM).
    std::vector<double> class_probability;
    std::vector<double> class_f_log;
    std::vector<double> class_f_log_psm;
    std::vector<bool> class_sampled;
    Resources resources;
    long fault_locations = 0;
    std::string engine_version = kEngineVersion;

    double uncertainty() const { return config.mode == RunMode::kMonteCarlo ? se_log : truncation_bound; }
};

/// Gate counts after which a syndrome measurement runs. q equal to the gate
/// count means after every gate; otherwise q must divide the number of
/// composites and SM follows every (composites/q)-th composite.
std::vector<int> schedule_sm(std::string_view sequence, int q);

/// Cached per-class conditional means for enumeration runs that differ only
/// in p (valid when the Pauli ratios are unchanged). Thread safe.
class EnumerationCache {
   public:
    struct Entry {
        std::vector<double> f_phys, f_log, f_phys_psm, f_log_psm;
        std::vector<bool> sampled;
    };
    std::optional<Entry> find(const std::string& key) const;
    void store(const std::string& key, Entry entry);

   private:
    mutable std::mutex mutex_;
    std::map<std::string, Entry> entries_;
};

ExperimentResult run_experiment(const ExperimentConfig& config, EnumerationCache* cache = nullptr);

/// (i50 - iq) / i50, absent when i50 is not positive.
std::optional<double> fractional_change(double i50, double iq);

/// Total ancilla qubits over the observed outcomes of every SM.
long resource_count(const std::vector<SmOutcome>& outcomes);

struct ResourceRow {
    std::string label;
    long ancilla_per_round = 0;
};

/// Per-round ancilla cost measured from noiseless executions of each protocol.
std::vector<ResourceRow> resource_table();

struct SweepSpec {
    ExperimentConfig base;
    std::vector<double> p_values;
    std::vector<int> q_values;
    std::vector<SmProtocol> protocols;
    std::vector<std::string> envs;
};

struct SweepRow {
    ExperimentResult result;
    std::optional<double> d_log;
    std::optional<double> d_log_psm;
    std::string error;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Exhaustive single-fault injection into one gadget.
struct CertificationReport {
    std::string gadget;
    long locations = 0;
    long injections = 0;
    int max_residual_weight = 0;
    long heavy_residuals = 0;  // residual weight >= 2
    long logical_failures = 0;  // logical infidelity after perfect final SM
    double worst_logical_fidelity = 1;

    bool fault_tolerant() const { return max_residual_weight <= 1 && logical_failures == 0; }
};

/// One SM round, faulted at every location with X, Y and Z in turn, on
/// |0_L> and on a generic encoded state.
CertificationReport certify_gadget(const SmProtocol& protocol, std::uint64_t seed = 1);

/// The same injection sweep over the teleported T gate.
CertificationReport certify_t_gadget(ThetaPreparation prep, std::uint64_t seed = 1);

/// Minimum weight of a Pauli E (modulo stabilizers) with state = E|ideal>,
/// maximized over syndrome branches; 7 when a branch mixes logical classes.
int residual_weight(const QuantumState& state, const QuantumState& ideal);

}  // namespace steanesim

#endif
