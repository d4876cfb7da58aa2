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

#ifndef STEANESIM_QUANTUM_STATE_H
#define STEANESIM_QUANTUM_STATE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "steanesim/pauli_string.h"

namespace steanesim {

using Amplitude = std::complex<double>;

/// Largest register ever held at once: data + ancilla + verification block.
inline constexpr std::size_t kMaxQubits = 21;

/// Raised when the amplitude vector has been numerically corrupted.
class SimulationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class QubitRole : std::uint8_t { kData, kAncilla, kVerify, kMagic, kCat };

struct QubitLabel {
    QubitRole role = QubitRole::kData;
    int index = 0;

    auto operator<=>(const QubitLabel&) const = default;
    std::string str() const;
};

enum class GateKind : std::uint8_t { H, P, PDag, T, TDag, CNOT, X, Y, Z };

enum class BasisState : std::uint8_t { kZero, kOne, kPlus, kMinus };

std::string gate_name(GateKind kind);

/// Pure state over a register of labelled qubits.
///
/// Position 0 is the leftmost tensor factor: basis index b has the bit of
/// position k at (n-1-k). Every operation keeps the L2 norm at 1.
class QuantumState {
   public:
    /// The zero-qubit state (a single amplitude equal to 1).
    QuantumState();

    static QuantumState from_amplitudes(std::vector<Amplitude> amplitudes, std::vector<QubitLabel> labels);
    static QuantumState basis(std::vector<QubitLabel> labels, std::uint64_t index);

    std::size_t num_qubits() const { return labels_.size(); }
    std::size_t dimension() const { return amplitudes_.size(); }
    const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
    const std::vector<QubitLabel>& labels() const { return labels_; }

    std::size_t position_of(QubitLabel label) const;
    void relabel(std::size_t position, QubitLabel label);

    double norm() const;

    // Mutation entry points used by the free functions below.
    std::vector<Amplitude>& mutable_amplitudes() { return amplitudes_; }
    void set_register(std::vector<Amplitude> amplitudes, std::vector<QubitLabel> labels);

   private:
    std::vector<Amplitude> amplitudes_;
    std::vector<QubitLabel> labels_;
};

/// A weighted collection of pure trajectories representing a mixed state.
struct WeightedState {
    double weight = 1.0;
    QuantumState state;
};
using Ensemble = std::vector<WeightedState>;

void apply_gate(QuantumState& state, GateKind kind, std::span<const std::size_t> targets);
void apply_gate(QuantumState& state, GateKind kind, std::size_t target);
void apply_cnot(QuantumState& state, std::size_t control, std::size_t target);

/// Multiplies the state by the Pauli operator, including its phase.
void apply_pauli(QuantumState& state, const PauliString& pauli);

/// Applies a single-qubit Pauli on one position.
void apply_pauli(QuantumState& state, Pauli pauli, std::size_t position);

/// Projective Z measurement. The outcome is 0 when `draw` < P(0). The qubit
/// stays in the register, collapsed to the outcome.
int measure_z(QuantumState& state, std::size_t position, double draw);

/// Measures and removes the qubit in one pass.
int measure_z_and_detach(QuantumState& state, std::size_t position, double draw);

/// Appends qubits (rightmost) prepared in product basis states.
void attach_qubits(QuantumState& state, std::span<const QubitLabel> labels, std::span<const BasisState> initial);

/// Removes qubits that are in a definite computational basis state.
void detach_measured(QuantumState& state, std::span<const std::size_t> positions);

/// Tensor product |a>|b>; b's qubits come after a's.
QuantumState tensor(const QuantumState& a, const QuantumState& b);

Amplitude inner_product(const QuantumState& a, const QuantumState& b);

/// |<a|b>|^2. Ensembles give the weighted average over their members.
double overlap_fidelity(const QuantumState& a, const QuantumState& b);
double overlap_fidelity(const Ensemble& a, const QuantumState& b);

}  // namespace steanesim

#endif
