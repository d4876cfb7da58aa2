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

#ifndef STEANESIM_NOISE_MODEL_H
#define STEANESIM_NOISE_MODEL_H

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "steanesim/pauli_string.h"
#include "steanesim/quantum_state.h"
#include "steanesim/rng.h"

namespace steanesim {

/// Rate given to the two minority Paulis of a dominant-axis environment.
inline constexpr double kMinorityRate = 1e-10;

/// Independent single-qubit Pauli channel applied at every fault location.
struct ErrorEnvironment {
    double px = 0;
    double py = 0;
    double pz = 0;

    static ErrorEnvironment depolarizing(double p);
    static ErrorEnvironment dominant(Pauli axis, double p);
    /// Accepts "depolarizing", "x-dominant", "y-dominant", "z-dominant".
    static ErrorEnvironment preset(std::string_view name, double p);

    double total() const { return px + py + pz; }
    double rate(Pauli p) const;
    bool is_noiseless() const { return total() == 0; }
    /// Throws std::invalid_argument for negative rates or a sum above 1.
    void validate() const;

    bool operator==(const ErrorEnvironment&) const = default;
};

Pauli sample_fault(const ErrorEnvironment& env, Rng& rng);

enum class LocationKind : std::uint8_t { kGate, kInit, kMeasure };

/// Identifies a location by circuit segment and its ordinal inside the segment.
struct LocationKey {
    int segment = 0;
    int ordinal = 0;
    auto operator<=>(const LocationKey&) const = default;
};

struct FaultLocation {
    LocationKey key;
    QubitLabel qubit;
    LocationKind kind = LocationKind::kGate;
};

struct FaultAssignment {
    std::size_t location = 0;  // index into the location list
    Pauli pauli = Pauli::I;
};

struct FaultConfiguration {
    std::vector<FaultAssignment> assignments;
    double probability = 1.0;

    std::size_t weight() const { return assignments.size(); }
};

struct EnumerationResult {
    std::vector<FaultConfiguration> configurations;
    /// Probability mass of all configurations heavier than max_weight.
    double remainder = 0;
};

/// Number of weight-w configurations over n locations: C(n, w) * 3^w,
/// saturating at UINT64_MAX.
std::uint64_t configuration_count(std::uint64_t n, int w);

/// C(n, w) * ptot^w * (1 - ptot)^(n - w).
double weight_class_probability(std::uint64_t n, double ptot, int w);

/// Sum of weight_class_probability over all weights above max_weight.
double weight_tail_probability(std::uint64_t n, double ptot, int max_weight);

/// Lists every configuration of weight <= max_weight with its exact
/// probability. Paulis with zero rate are skipped. Throws std::length_error
/// if more than `cap` configurations would be produced.
EnumerationResult enumerate_configurations(std::span<const FaultLocation> locations, const ErrorEnvironment& env,
                                           int max_weight, std::size_t cap = 10'000'000);

enum class NoiseMode : std::uint8_t { kNoiseless, kMonteCarlo, kScripted };

struct ResourceTally {
    long ancilla_qubits = 0;
    long sm_rounds = 0;
    long verification_retries = 0;
    long retry_cap_hits = 0;

    ResourceTally& operator+=(const ResourceTally& o);
};

/// Executes noisy circuit operations on a state.
///
/// Every gate participant, initialization and measurement is a fault
/// location. Faults go after gates and initializations and before
/// measurements. The context also owns the measurement randomness, the
/// circuit-depth clock and the resource tally of one trajectory.
class NoiseContext {
   public:
    static NoiseContext noiseless(Rng rng = Rng(0));
    static NoiseContext monte_carlo(const ErrorEnvironment& env, Rng rng);
    /// Faults at the listed locations only. Locations whose ordinal reaches
    /// the segment's entry in `limits` (when present) never fault.
    static NoiseContext scripted(std::map<LocationKey, Pauli> faults, Rng rng,
                                 std::map<int, int> limits = {});

    NoiseMode mode() const { return mode_; }
    const ErrorEnvironment& environment() const { return env_; }

    void begin_segment(int segment);
    int segment() const { return segment_; }
    int ordinal() const { return ordinal_; }

    void set_recording(bool on) { recording_ = on; }
    const std::vector<FaultLocation>& recorded() const { return recorded_; }

    /// Attaches qubits in basis states; each is an initialization location.
    void init(QuantumState& state, std::span<const QubitLabel> labels, std::span<const BasisState> initial);
    void init(QuantumState& state, QubitLabel label, BasisState initial);
    void gate(QuantumState& state, GateKind kind, QubitLabel target);
    void cnot(QuantumState& state, QubitLabel control, QubitLabel target);
    /// Z measurement; the qubit is removed from the register afterwards.
    int measure(QuantumState& state, QubitLabel target);

    /// Uniform draw for anything random that is not a fault.
    double draw() { return rng_.uniform(); }
    Rng& rng() { return rng_; }

    /// Carries the depth clock of one label over to another (relabelling).
    void inherit_clock(QubitLabel from, QubitLabel to);
    long time_steps() const { return depth_; }

    ResourceTally& tally() { return tally_; }
    const ResourceTally& tally() const { return tally_; }

    /// Number of fault locations executed so far.
    long locations_executed() const { return executed_; }

   private:
    NoiseContext(NoiseMode mode, ErrorEnvironment env, Rng rng);

    void location(QuantumState& state, std::size_t position, QubitLabel label, LocationKind kind);
    void tick(std::initializer_list<QubitLabel> labels);
    long& clock(QubitLabel label);

    NoiseMode mode_;
    ErrorEnvironment env_;
    Rng rng_;
    std::map<LocationKey, Pauli> script_;
    std::map<int, int> limits_;
    int segment_ = 0;
    int ordinal_ = 0;
    bool recording_ = false;
    std::vector<FaultLocation> recorded_;
    std::array<long, 5 * 32> clocks_{};
    long depth_ = 0;
    long executed_ = 0;
    ResourceTally tally_;
};

}  // namespace steanesim

#endif
