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

#include "steanesim/noise_model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace steanesim {

ErrorEnvironment ErrorEnvironment::depolarizing(double p) { return {p, p, p}; }

ErrorEnvironment ErrorEnvironment::dominant(Pauli axis, double p) {
    ErrorEnvironment env{kMinorityRate, kMinorityRate, kMinorityRate};
    switch (axis) {
        case Pauli::X:
            env.px = p;
            break;
        case Pauli::Y:
            env.py = p;
            break;
        case Pauli::Z:
            env.pz = p;
            break;
        case Pauli::I:
            throw std::invalid_argument("dominant axis must be X, Y or Z");
    }
    return env;
}

ErrorEnvironment ErrorEnvironment::preset(std::string_view name, double p) {
    if (name == "depolarizing") return depolarizing(p);
    if (name == "x-dominant") return dominant(Pauli::X, p);
    if (name == "y-dominant") return dominant(Pauli::Y, p);
    if (name == "z-dominant") return dominant(Pauli::Z, p);
    throw std::invalid_argument("unknown error environment '" + std::string(name) +
                                "' (expected depolarizing, x-dominant, y-dominant or z-dominant)");
}

double ErrorEnvironment::rate(Pauli p) const {
    switch (p) {
        case Pauli::X:
            return px;
        case Pauli::Y:
            return py;
        case Pauli::Z:
            return pz;
        case Pauli::I:
            return 1.0 - total();
    }
    return 0;
}

void ErrorEnvironment::validate() const {
    for (double r : {px, py, pz}) {
        if (!(r >= 0) || !std::isfinite(r)) {
            throw std::invalid_argument("error rates must be finite and nonnegative");
        }
    }
    if (total() > 1.0 + 1e-12) {
        throw std::invalid_argument("error rates sum to more than 1");
    }
}

Pauli sample_fault(const ErrorEnvironment& env, Rng& rng) {
    const double u = rng.uniform();
    if (u < env.px) return Pauli::X;
    if (u < env.px + env.py) return Pauli::Y;
    if (u < env.px + env.py + env.pz) return Pauli::Z;
    return Pauli::I;
}

std::uint64_t configuration_count(std::uint64_t n, int w) {
    if (w < 0 || static_cast<std::uint64_t>(w) > n) return 0;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    // C(n, w) built incrementally; each partial product is itself a binomial.
    unsigned __int128 c = 1;
    for (int k = 1; k <= w; ++k) {
        c = c * (n - static_cast<std::uint64_t>(w) + static_cast<std::uint64_t>(k)) / static_cast<std::uint64_t>(k);
        if (c > kMax) return kMax;
    }
    for (int k = 0; k < w; ++k) {
        c *= 3;
        if (c > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(c);
}

namespace {

double log_binomial(std::uint64_t n, std::uint64_t k) {
    return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
           std::lgamma(static_cast<double>(n - k) + 1);
}

}  // namespace

double weight_class_probability(std::uint64_t n, double ptot, int w) {
    if (w < 0 || static_cast<std::uint64_t>(w) > n) return 0;
    if (ptot <= 0) return w == 0 ? 1.0 : 0.0;
    if (ptot >= 1) return static_cast<std::uint64_t>(w) == n ? 1.0 : 0.0;
    const double uw = static_cast<double>(w);
    return std::exp(log_binomial(n, static_cast<std::uint64_t>(w)) + uw * std::log(ptot) +
                    (static_cast<double>(n) - uw) * std::log1p(-ptot));
}

double weight_tail_probability(std::uint64_t n, double ptot, int max_weight) {
    if (max_weight < 0) return 1.0;
    if (static_cast<std::uint64_t>(max_weight) >= n || ptot <= 0) return 0.0;
    const double mean = static_cast<double>(n) * ptot;
    double sum = 0;
    for (std::uint64_t k = static_cast<std::uint64_t>(max_weight) + 1; k <= n; ++k) {
        const double term = weight_class_probability(n, ptot, static_cast<int>(k));
        sum += term;
        if (static_cast<double>(k) > mean && term <= sum * 1e-18) break;
    }
    return std::min(sum, 1.0);
}

EnumerationResult enumerate_configurations(std::span<const FaultLocation> locations, const ErrorEnvironment& env,
                                           int max_weight, std::size_t cap) {
    env.validate();
    if (max_weight < 0) {
        throw std::invalid_argument("max_weight must be nonnegative");
    }
    std::vector<Pauli> kinds;
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        if (env.rate(p) > 0) kinds.push_back(p);
    }
    const std::size_t n = locations.size();
    const double idle = 1.0 - env.total();

    EnumerationResult result;
    std::vector<FaultAssignment> current;
    auto recurse = [&](auto&& self, std::size_t start, double product) -> void {
        if (result.configurations.size() >= cap) {
            throw std::length_error("fault configuration count exceeds the cap of " + std::to_string(cap));
        }
        const std::size_t w = current.size();
        result.configurations.push_back(
            {current, product * std::pow(idle, static_cast<double>(n - w))});
        if (static_cast<int>(w) == max_weight) return;
        for (std::size_t i = start; i < n; ++i) {
            for (Pauli p : kinds) {
                current.push_back({i, p});
                self(self, i + 1, product * env.rate(p));
                current.pop_back();
            }
        }
    };
    recurse(recurse, 0, 1.0);
    result.remainder = weight_tail_probability(n, env.total(), max_weight);
    return result;
}

ResourceTally& ResourceTally::operator+=(const ResourceTally& o) {
    ancilla_qubits += o.ancilla_qubits;
    sm_rounds += o.sm_rounds;
    verification_retries += o.verification_retries;
    retry_cap_hits += o.retry_cap_hits;
    return *this;
}

NoiseContext::NoiseContext(NoiseMode mode, ErrorEnvironment env, Rng rng)
    : mode_(mode), env_(env), rng_(std::move(rng)) {}

NoiseContext NoiseContext::noiseless(Rng rng) { return NoiseContext(NoiseMode::kNoiseless, {}, std::move(rng)); }

NoiseContext NoiseContext::monte_carlo(const ErrorEnvironment& env, Rng rng) {
    env.validate();
    return NoiseContext(env.is_noiseless() ? NoiseMode::kNoiseless : NoiseMode::kMonteCarlo, env, std::move(rng));
}

NoiseContext NoiseContext::scripted(std::map<LocationKey, Pauli> faults, Rng rng, std::map<int, int> limits) {
    NoiseContext ctx(NoiseMode::kScripted, {}, std::move(rng));
    ctx.script_ = std::move(faults);
    ctx.limits_ = std::move(limits);
    return ctx;
}

void NoiseContext::begin_segment(int segment) {
    segment_ = segment;
    ordinal_ = 0;
}

long& NoiseContext::clock(QubitLabel label) {
    if (label.index < 0 || label.index >= 32) {
        throw std::out_of_range("qubit label index out of range for the depth clock");
    }
    return clocks_[static_cast<std::size_t>(label.role) * 32 + static_cast<std::size_t>(label.index)];
}

void NoiseContext::tick(std::initializer_list<QubitLabel> labels) {
    long t = 0;
    for (QubitLabel l : labels) t = std::max(t, clock(l));
    ++t;
    for (QubitLabel l : labels) clock(l) = t;
    depth_ = std::max(depth_, t);
}

void NoiseContext::inherit_clock(QubitLabel from, QubitLabel to) { clock(to) = std::max(clock(to), clock(from)); }

void NoiseContext::location(QuantumState& state, std::size_t position, QubitLabel label, LocationKind kind) {
    const LocationKey key{segment_, ordinal_++};
    ++executed_;
    if (recording_) {
        recorded_.push_back({key, label, kind});
    }
    Pauli fault = Pauli::I;
    switch (mode_) {
        case NoiseMode::kNoiseless:
            return;
        case NoiseMode::kMonteCarlo:
            fault = sample_fault(env_, rng_);
            break;
        case NoiseMode::kScripted: {
            auto limit = limits_.find(key.segment);
            if (limit != limits_.end() && key.ordinal >= limit->second) return;
            auto it = script_.find(key);
            if (it == script_.end()) return;
            fault = it->second;
            break;
        }
    }
    if (fault != Pauli::I) {
        apply_pauli(state, fault, position);
    }
}

void NoiseContext::init(QuantumState& state, std::span<const QubitLabel> labels, std::span<const BasisState> initial) {
    const std::size_t first = state.num_qubits();
    attach_qubits(state, labels, initial);
    for (std::size_t k = 0; k < labels.size(); ++k) {
        tick({labels[k]});
        location(state, first + k, labels[k], LocationKind::kInit);
    }
}

void NoiseContext::init(QuantumState& state, QubitLabel label, BasisState initial) {
    init(state, std::span<const QubitLabel>(&label, 1), std::span<const BasisState>(&initial, 1));
}

void NoiseContext::gate(QuantumState& state, GateKind kind, QubitLabel target) {
    const std::size_t pos = state.position_of(target);
    apply_gate(state, kind, pos);
    tick({target});
    location(state, pos, target, LocationKind::kGate);
}

void NoiseContext::cnot(QuantumState& state, QubitLabel control, QubitLabel target) {
    const std::size_t c = state.position_of(control);
    const std::size_t t = state.position_of(target);
    apply_cnot(state, c, t);
    tick({control, target});
    location(state, c, control, LocationKind::kGate);
    location(state, t, target, LocationKind::kGate);
}

int NoiseContext::measure(QuantumState& state, QubitLabel target) {
    const std::size_t pos = state.position_of(target);
    tick({target});
    location(state, pos, target, LocationKind::kMeasure);
    return measure_z_and_detach(state, pos, rng_.uniform());
}

}  // namespace steanesim
