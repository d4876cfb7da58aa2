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

#include "steanesim/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

namespace steanesim {

namespace {

struct Fidelities {
    double phys = 0;
    double log = 0;
    double phys_psm = 0;
    double log_psm = 0;

    Fidelities& operator+=(const Fidelities& o) {
        phys += o.phys;
        log += o.log;
        phys_psm += o.phys_psm;
        log_psm += o.log_psm;
        return *this;
    }
    Fidelities scaled(double s) const { return {phys * s, log * s, phys_psm * s, log_psm * s}; }
};

struct Segment {
    bool is_sm = false;
    LogicalGate gate = LogicalGate::kH;
};

struct Plan {
    std::vector<LogicalGate> gates;
    std::vector<Segment> segments;
    Qubit input{};
    Qubit target{};
    QuantumState initial;
    QuantumState encoded_target;
};

Plan build_plan(const ExperimentConfig& config) {
    Plan plan;
    plan.gates = compile_sequence(config.sequence);
    const std::vector<int> sm_after = schedule_sm(config.sequence, config.q);
    std::size_t next_sm = 0;
    for (std::size_t i = 0; i < plan.gates.size(); ++i) {
        plan.segments.push_back({false, plan.gates[i]});
        while (next_sm < sm_after.size() && sm_after[next_sm] == static_cast<int>(i) + 1) {
            plan.segments.push_back({true, LogicalGate::kH});
            ++next_sm;
        }
    }
    plan.input = {std::cos(config.alpha), std::polar(std::sin(config.alpha), config.beta)};
    plan.target = ideal_output(plan.gates, plan.input);
    plan.initial = encode_qubit(plan.input[0], plan.input[1]);
    plan.encoded_target = encode_qubit(plan.target[0], plan.target[1]);
    return plan;
}

void run_segment(QuantumState& data, const Plan& plan, std::size_t k, NoiseContext& ctx,
                 const ExperimentConfig& config) {
    ctx.begin_segment(static_cast<int>(k));
    const Segment& seg = plan.segments[k];
    if (seg.is_sm) {
        run_sm(config.protocol, data, ctx);
    } else {
        apply_logical_gate(data, seg.gate, ctx, config.theta);
    }
}

Fidelities final_fidelities(const QuantumState& data, const Plan& plan) {
    for (int j = 0; j < 7; ++j) {
        if (data.labels().at(static_cast<std::size_t>(j)) != QubitLabel{QubitRole::kData, j}) {
            throw SimulationError("final register is not the canonical data block");
        }
    }
    Fidelities f;
    f.phys = overlap_fidelity(data, plan.encoded_target);
    f.log = logical_fidelity(perfect_decode(data), plan.target);
    const Ensemble corrected = perfect_final_sm(data);
    f.phys_psm = overlap_fidelity(corrected, plan.encoded_target);
    f.log_psm = logical_fidelity(perfect_decode(corrected), plan.target);
    for (double* v : {&f.phys, &f.log, &f.phys_psm, &f.log_psm}) *v = std::clamp(*v, 0.0, 1.0);
    return f;
}

// Runs fn(i) for i in [0, n) on up to `workers` threads.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(n);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

constexpr std::size_t kChunk = 32;
constexpr std::uint64_t kReferenceStream = 0xFFFF'FFFF'FFFF'0001ULL;
constexpr std::uint64_t kSampleStream = 0xFFFF'FFFF'FFFF'0002ULL;
constexpr std::uint64_t kEnumStream = 0xFFFF'FFFF'FFFF'0003ULL;

double standard_error(double f, double n) { return std::sqrt(std::max(f * (1 - f), 0.0) / n); }

ExperimentResult run_monte_carlo(const ExperimentConfig& config, const Plan& plan) {
    const ErrorEnvironment env = config.environment();
    const auto trials = static_cast<std::size_t>(config.trials);
    const std::size_t chunks = (trials + kChunk - 1) / kChunk;
    struct ChunkSum {
        Fidelities f;
        double ancilla = 0;
        double depth = 0;
        double rounds = 0;
    };
    std::vector<ChunkSum> sums(chunks);
    parallel_for(chunks, config.workers, [&](std::size_t c) {
        ChunkSum s;
        for (std::size_t t = c * kChunk; t < std::min(trials, (c + 1) * kChunk); ++t) {
            NoiseContext ctx = NoiseContext::monte_carlo(env, Rng::for_stream(config.seed, {t}));
            QuantumState data = plan.initial;
            for (std::size_t k = 0; k < plan.segments.size(); ++k) run_segment(data, plan, k, ctx, config);
            s.f += final_fidelities(data, plan);
            s.ancilla += static_cast<double>(ctx.tally().ancilla_qubits);
            s.rounds += static_cast<double>(ctx.tally().sm_rounds);
            s.depth += static_cast<double>(ctx.time_steps());
        }
        sums[c] = s;
    });
    ChunkSum total;
    for (const ChunkSum& s : sums) {
        total.f += s.f;
        total.ancilla += s.ancilla;
        total.depth += s.depth;
        total.rounds += s.rounds;
    }
    const double n = static_cast<double>(trials);
    ExperimentResult r;
    r.config = config;
    const Fidelities mean = total.f.scaled(1.0 / n);
    r.f_phys = mean.phys;
    r.f_log = mean.log;
    r.f_phys_psm = mean.phys_psm;
    r.f_log_psm = mean.log_psm;
    r.se_phys = standard_error(mean.phys, n);
    r.se_log = standard_error(mean.log, n);
    r.se_phys_psm = standard_error(mean.phys_psm, n);
    r.se_log_psm = standard_error(mean.log_psm, n);
    r.resources = {total.ancilla / n, total.depth / n, total.rounds / n};
    return r;
}

bool same_state(const QuantumState& a, const QuantumState& b) {
    return a.labels() == b.labels() && overlap_fidelity(a, b) > 1 - 1e-12;
}

struct Reference {
    std::vector<QuantumState> boundary;  // state before segment k; last entry is the final state
    std::vector<FaultLocation> locations;
    std::map<int, int> nominal;  // locations per segment
    Fidelities fidelities;
    Resources resources;
};

Reference reference_run(const ExperimentConfig& config, const Plan& plan) {
    Reference ref;
    NoiseContext ctx = NoiseContext::noiseless(Rng::for_stream(config.seed, {kReferenceStream}));
    ctx.set_recording(true);
    QuantumState data = plan.initial;
    for (std::size_t k = 0; k < plan.segments.size(); ++k) {
        ref.boundary.push_back(data);
        run_segment(data, plan, k, ctx, config);
    }
    ref.boundary.push_back(data);
    ref.locations = ctx.recorded();
    for (const FaultLocation& loc : ref.locations) ref.nominal[loc.key.segment] += 1;
    ref.fidelities = final_fidelities(data, plan);
    ref.resources = {static_cast<double>(ctx.tally().ancilla_qubits), static_cast<double>(ctx.time_steps()),
                     static_cast<double>(ctx.tally().sm_rounds)};
    return ref;
}

Fidelities evaluate_configuration(const std::vector<FaultAssignment>& faults, const Reference& ref, const Plan& plan,
                                  const ExperimentConfig& config, Rng rng) {
    std::map<LocationKey, Pauli> script;
    std::set<int> faulted;
    for (const FaultAssignment& a : faults) {
        const LocationKey key = ref.locations[a.location].key;
        script[key] = a.pauli;
        faulted.insert(key.segment);
    }
    if (faulted.empty()) return ref.fidelities;
    const std::vector<int> order(faulted.begin(), faulted.end());
    NoiseContext ctx = NoiseContext::scripted(std::move(script), std::move(rng), ref.nominal);
    const std::size_t num_segments = plan.segments.size();
    std::size_t k = static_cast<std::size_t>(order.front());
    std::size_t pending = 0;
    QuantumState data = ref.boundary[k];
    while (k < num_segments) {
        run_segment(data, plan, k, ctx, config);
        ++k;
        while (pending < order.size() && static_cast<std::size_t>(order[pending]) < k) ++pending;
        if (same_state(data, ref.boundary[k])) {
            // Identical to the fault-free run here: skip ahead.
            if (pending == order.size()) return ref.fidelities;
            k = static_cast<std::size_t>(order[pending]);
            data = ref.boundary[k];
        }
    }
    return final_fidelities(data, plan);
}

std::string cache_key(const ExperimentConfig& c, std::size_t locations) {
    const ErrorEnvironment env = c.environment();
    const double t = env.total();
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s|%d|%s|%s|%.17g,%.17g,%.17g|%d|%llu|%.17g|%.17g|%d|%llu|%ld|%zu",
                  c.sequence.c_str(), c.q, c.protocol.name().c_str(), c.env.c_str(), env.px / t, env.py / t,
                  env.pz / t, c.max_weight, static_cast<unsigned long long>(c.seed), c.alpha, c.beta,
                  static_cast<int>(c.theta), static_cast<unsigned long long>(c.enum_exact_cap), c.enum_samples,
                  locations);
    return buf;
}

struct WeightedConfiguration {
    std::vector<FaultAssignment> faults;
    double weight = 0;
};

// All weight-w configurations with weights prod(p_i / ptot) / C(n, w).
std::vector<WeightedConfiguration> list_class(std::size_t n, int w, const ErrorEnvironment& env) {
    std::vector<std::pair<Pauli, double>> kinds;
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        if (env.rate(p) > 0) kinds.emplace_back(p, env.rate(p) / env.total());
    }
    const double norm = 1.0 / std::exp(std::lgamma(n + 1.0) - std::lgamma(w + 1.0) - std::lgamma(n - w + 1.0));
    std::vector<WeightedConfiguration> out;
    std::vector<FaultAssignment> current;
    auto recurse = [&](auto&& self, std::size_t start, double weight) -> void {
        if (static_cast<int>(current.size()) == w) {
            out.push_back({current, weight * norm});
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            for (const auto& [p, ratio] : kinds) {
                current.push_back({i, p});
                self(self, i + 1, weight * ratio);
                current.pop_back();
            }
        }
    };
    recurse(recurse, 0, 1.0);
    return out;
}

std::vector<WeightedConfiguration> sample_class(std::size_t n, int w, const ErrorEnvironment& env, long samples,
                                                std::uint64_t seed) {
    std::vector<WeightedConfiguration> out;
    const double weight = 1.0 / static_cast<double>(samples);
    for (long i = 0; i < samples; ++i) {
        Rng rng = Rng::for_stream(seed, {kSampleStream, static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(i)});
        std::vector<FaultAssignment> faults;
        std::set<std::size_t> used;
        while (static_cast<int>(faults.size()) < w) {
            const std::size_t loc = rng.below(n);
            if (!used.insert(loc).second) continue;
            const double u = rng.uniform() * env.total();
            const Pauli p = u < env.px ? Pauli::X : (u < env.px + env.py ? Pauli::Y : Pauli::Z);
            faults.push_back({loc, p});
        }
        std::sort(faults.begin(), faults.end(),
                  [](const FaultAssignment& a, const FaultAssignment& b) { return a.location < b.location; });
        out.push_back({std::move(faults), weight});
    }
    return out;
}

ExperimentResult run_enumeration(const ExperimentConfig& config, const Plan& plan, EnumerationCache* cache) {
    const ErrorEnvironment env = config.environment();
    const Reference ref = reference_run(config, plan);
    const std::size_t n = ref.locations.size();
    const int max_w = env.total() > 0 ? std::min<int>(config.max_weight, static_cast<int>(n)) : 0;

    EnumerationCache::Entry entry;
    const std::string key = cache_key(config, n);
    std::optional<EnumerationCache::Entry> cached = cache ? cache->find(key) : std::nullopt;
    if (cached && static_cast<int>(cached->f_log.size()) == max_w + 1) {
        entry = *cached;
    } else {
        entry.f_phys.push_back(ref.fidelities.phys);
        entry.f_log.push_back(ref.fidelities.log);
        entry.f_phys_psm.push_back(ref.fidelities.phys_psm);
        entry.f_log_psm.push_back(ref.fidelities.log_psm);
        entry.sampled.push_back(false);
        for (int w = 1; w <= max_w; ++w) {
            const std::uint64_t count = configuration_count(n, w);
            const bool sampled = count > config.enum_exact_cap;
            std::vector<WeightedConfiguration> configs =
                sampled ? sample_class(n, w, env, config.enum_samples, config.seed) : list_class(n, w, env);
            std::vector<Fidelities> values(configs.size());
            const std::size_t chunks = (configs.size() + kChunk - 1) / kChunk;
            parallel_for(chunks, config.workers, [&](std::size_t c) {
                for (std::size_t i = c * kChunk; i < std::min(configs.size(), (c + 1) * kChunk); ++i) {
                    Rng rng = Rng::for_stream(config.seed, {kEnumStream, static_cast<std::uint64_t>(w), i});
                    values[i] = evaluate_configuration(configs[i].faults, ref, plan, config, std::move(rng));
                }
            });
            Fidelities mean;
            for (std::size_t i = 0; i < configs.size(); ++i) mean += values[i].scaled(configs[i].weight);
            entry.f_phys.push_back(mean.phys);
            entry.f_log.push_back(mean.log);
            entry.f_phys_psm.push_back(mean.phys_psm);
            entry.f_log_psm.push_back(mean.log_psm);
            entry.sampled.push_back(sampled);
        }
        if (cache) cache->store(key, entry);
    }

    ExperimentResult r;
    r.config = config;
    for (int w = 0; w <= max_w; ++w) {
        const double pw = weight_class_probability(n, env.total(), w);
        const auto i = static_cast<std::size_t>(w);
        r.f_phys += pw * entry.f_phys[i];
        r.f_log += pw * entry.f_log[i];
        r.f_phys_psm += pw * entry.f_phys_psm[i];
        r.f_log_psm += pw * entry.f_log_psm[i];
        r.class_probability.push_back(pw);
        r.class_f_log.push_back(entry.f_log[i]);
        r.class_f_log_psm.push_back(entry.f_log_psm[i]);
        r.class_sampled.push_back(entry.sampled[i]);
    }
    r.truncation_bound = weight_tail_probability(n, env.total(), max_w);
    r.resources = ref.resources;
    r.fault_locations = static_cast<long>(n);
    return r;
}

// Weight of the lightest Pauli in each (syndrome, logical class) coset.
const std::array<std::array<int, 4>, 64>& coset_weights() {
    static const auto table = [] {
        const CodeDefinition& code = CodeDefinition::steane();
        std::vector<PauliString> generators(code.z_stabilizers().begin(), code.z_stabilizers().end());
        generators.insert(generators.end(), code.x_stabilizers().begin(), code.x_stabilizers().end());
        std::vector<PauliString> group;
        for (int mask = 0; mask < 64; ++mask) {
            PauliString s(kBlockSize);
            for (int g = 0; g < 6; ++g) {
                if ((mask >> g) & 1) s *= generators[static_cast<std::size_t>(g)];
            }
            group.push_back(s);
        }
        const std::array<PauliString, 4> logicals{PauliString(kBlockSize), code.logical_x(),
                                                  code.logical_x() * code.logical_z(), code.logical_z()};
        std::array<std::array<int, 4>, 64> out{};
        for (int idx = 0; idx < 64; ++idx) {
            const PauliString& r = decode_lookup(Syndrome::from_index(idx));
            for (std::size_t l = 0; l < 4; ++l) {
                int best = 7;
                for (const PauliString& s : group) {
                    best = std::min(best, static_cast<int>((r * logicals[l] * s).weight()));
                }
                out[static_cast<std::size_t>(idx)][l] = best;
            }
        }
        return out;
    }();
    return table;
}

}  // namespace

std::string run_mode_name(RunMode mode) { return mode == RunMode::kMonteCarlo ? "mc" : "enum"; }

RunMode parse_run_mode(std::string_view name) {
    if (name == "mc") return RunMode::kMonteCarlo;
    if (name == "enum") return RunMode::kEnumeration;
    throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected mc or enum)");
}

ThetaPreparation parse_theta_preparation(std::string_view name) {
    if (name == "unverified") return ThetaPreparation::kUnverified;
    if (name == "verified") return ThetaPreparation::kVerified;
    throw std::invalid_argument("unknown magic-state preparation '" + std::string(name) +
                                "' (expected unverified or verified)");
}

std::string theta_preparation_name(ThetaPreparation prep) {
    return prep == ThetaPreparation::kUnverified ? "unverified" : "verified";
}

void ExperimentConfig::validate() const {
    schedule_sm(sequence, q);
    protocol.validate();
    environment().validate();
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (max_weight < 0) throw std::invalid_argument("max_weight must be nonnegative");
    if (workers < 1) throw std::invalid_argument("workers must be at least 1");
    if (enum_samples < 1) throw std::invalid_argument("enum_samples must be at least 1");
    if (!std::isfinite(alpha) || !std::isfinite(beta)) throw std::invalid_argument("alpha and beta must be finite");
}

std::vector<int> schedule_sm(std::string_view sequence, int q) {
    const std::vector<int> bounds = composite_boundaries(sequence);
    if (bounds.empty()) throw std::invalid_argument("gate sequence is empty");
    const int gates = bounds.back();
    const int composites = static_cast<int>(bounds.size());
    std::vector<int> out;
    if (q == 0) return out;
    if (q == gates) {
        for (int g = 1; g <= gates; ++g) out.push_back(g);
        return out;
    }
    if (q > 0 && composites % q == 0) {
        const int step = composites / q;
        for (int k = 1; k <= q; ++k) out.push_back(bounds[static_cast<std::size_t>(k * step - 1)]);
        return out;
    }
    throw std::invalid_argument("q=" + std::to_string(q) + " does not fit a sequence of " +
                                std::to_string(composites) + " composites (" + std::to_string(gates) + " gates)");
}

std::optional<EnumerationCache::Entry> EnumerationCache::find(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void EnumerationCache::store(const std::string& key, Entry entry) {
    std::lock_guard<std::mutex> lock(mutex_);
    entries_[key] = std::move(entry);
}

ExperimentResult run_experiment(const ExperimentConfig& config, EnumerationCache* cache) {
    config.validate();
    const Plan plan = build_plan(config);
    if (config.mode == RunMode::kMonteCarlo) return run_monte_carlo(config, plan);
    return run_enumeration(config, plan, cache);
}

std::optional<double> fractional_change(double i50, double iq) {
    if (!(i50 > 0)) return std::nullopt;
    return (i50 - iq) / i50;
}

long resource_count(const std::vector<SmOutcome>& outcomes) {
    long total = 0;
    for (const SmOutcome& o : outcomes) total += o.ancilla_qubits_consumed;
    return total;
}

std::vector<ResourceRow> resource_table() {
    auto measure = [](const SmProtocol& protocol) {
        QuantumState data = encode_ideal(0, 0);
        NoiseContext ctx = NoiseContext::noiseless(Rng(0));
        return run_sm(protocol, data, ctx);
    };
    const SmOutcome single = measure(SmProtocol::parse("single"));
    const SmOutcome single_rep = measure(SmProtocol::parse("single-repeated"));
    const SmOutcome shor = measure(SmProtocol::parse("shor"));
    const SmOutcome steane = measure(SmProtocol::parse("steane"));
    const SmOutcome steane_rep = measure(SmProtocol::parse("steane-repeated"));
    return {
        {"single", single.ancilla_qubits_consumed},
        {"single-repeated", single_rep.ancilla_qubits_consumed},
        {"shor-set", shor.ancilla_qubits_consumed / shor.rounds_used},
        {"shor", shor.ancilla_qubits_consumed},
        {"steane", steane.ancilla_qubits_consumed},
        {"steane-repeated", steane_rep.ancilla_qubits_consumed},
    };
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.p_values.empty() || spec.q_values.empty() || spec.protocols.empty() || spec.envs.empty()) {
        throw std::invalid_argument("sweep grids must be nonempty");
    }
    EnumerationCache cache;
    std::vector<SweepRow> rows;
    for (const std::string& env : spec.envs) {
        for (const SmProtocol& protocol : spec.protocols) {
            for (double p : spec.p_values) {
                for (int q : spec.q_values) {
                    SweepRow row;
                    row.result.config = spec.base;
                    row.result.config.env = env;
                    row.result.config.protocol = protocol;
                    row.result.config.p = p;
                    row.result.config.q = q;
                    try {
                        row.result = run_experiment(row.result.config, &cache);
                    } catch (const std::exception& e) {
                        row.error = e.what();
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    for (SweepRow& row : rows) {
        if (!row.error.empty()) continue;
        const ExperimentConfig& c = row.result.config;
        for (const SweepRow& base : rows) {
            const ExperimentConfig& b = base.result.config;
            if (!base.error.empty() || b.q != 50 || b.env != c.env || b.protocol != c.protocol || b.p != c.p) continue;
            row.d_log = fractional_change(1 - base.result.f_log, 1 - row.result.f_log);
            row.d_log_psm = fractional_change(1 - base.result.f_log_psm, 1 - row.result.f_log_psm);
        }
    }
    return rows;
}

int residual_weight(const QuantumState& state, const QuantumState& ideal) {
    const CodeDefinition& code = CodeDefinition::steane();
    const std::array<PauliString, 4> logicals{PauliString(kBlockSize), code.logical_x(),
                                              code.logical_x() * code.logical_z(), code.logical_z()};
    std::array<QuantumState, 4> references;
    for (std::size_t l = 0; l < 4; ++l) {
        references[l] = ideal;
        apply_pauli(references[l], logicals[l]);
    }
    int worst = 0;
    for (SyndromeBranch& b : project_syndromes(state, 1e-12)) {
        apply_pauli(b.state, decode_lookup(b.syndrome));
        int best = 7;
        for (std::size_t l = 0; l < 4; ++l) {
            if (overlap_fidelity(b.state, references[l]) > 1 - 1e-9) {
                best = std::min(best, coset_weights()[static_cast<std::size_t>(b.syndrome.index())][l]);
            }
        }
        worst = std::max(worst, best);
    }
    return worst;
}

namespace {

using Gadget = std::function<void(QuantumState&, NoiseContext&)>;

CertificationReport certify_single_faults(std::string name, const Gadget& gadget,
                                          std::span<const LogicalGate> ideal_action, std::uint64_t seed) {
    CertificationReport report;
    report.gadget = std::move(name);

    NoiseContext recorder = NoiseContext::noiseless(Rng(seed));
    recorder.set_recording(true);
    QuantumState probe = encode_ideal(0, 0);
    gadget(probe, recorder);
    const std::vector<FaultLocation> locations = recorder.recorded();
    report.locations = static_cast<long>(locations.size());
    const std::map<int, int> limits{{0, static_cast<int>(locations.size())}};

    const std::array<std::pair<double, double>, 2> inputs{{{0.0, 0.0}, {0.3, 0.7}}};
    for (std::size_t in = 0; in < inputs.size(); ++in) {
        const auto [alpha, beta] = inputs[in];
        const QuantumState input = encode_ideal(alpha, beta);
        const Qubit phi = ideal_output(ideal_action, {std::cos(alpha), std::polar(std::sin(alpha), beta)});
        const QuantumState ideal = encode_qubit(phi[0], phi[1]);
        for (std::size_t i = 0; i < locations.size(); ++i) {
            for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                NoiseContext ctx = NoiseContext::scripted(
                    {{locations[i].key, p}}, Rng::for_stream(seed, {in, i, static_cast<std::uint64_t>(p)}), limits);
                QuantumState data = input;
                gadget(data, ctx);
                const int w = residual_weight(data, ideal);
                const double lf = logical_fidelity(perfect_decode(perfect_final_sm(data)), phi);
                ++report.injections;
                report.max_residual_weight = std::max(report.max_residual_weight, w);
                if (w >= 2) ++report.heavy_residuals;
                if (lf < 1 - 1e-9) ++report.logical_failures;
                report.worst_logical_fidelity = std::min(report.worst_logical_fidelity, lf);
            }
        }
    }
    return report;
}

}  // namespace

CertificationReport certify_gadget(const SmProtocol& protocol, std::uint64_t seed) {
    protocol.validate();
    return certify_single_faults(
        protocol.name(), [&](QuantumState& data, NoiseContext& ctx) { run_sm(protocol, data, ctx); }, {}, seed);
}

CertificationReport certify_t_gadget(ThetaPreparation prep, std::uint64_t seed) {
    static constexpr LogicalGate kT[] = {LogicalGate::kT};
    return certify_single_faults(
        "t-gadget-" + theta_preparation_name(prep),
        [&](QuantumState& data, NoiseContext& ctx) { apply_logical_t(data, ctx, prep); }, kT, seed);
}

}  // namespace steanesim
