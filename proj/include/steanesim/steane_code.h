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

#ifndef STEANESIM_STEANE_CODE_H
#define STEANESIM_STEANE_CODE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "steanesim/noise_model.h"
#include "steanesim/pauli_string.h"
#include "steanesim/quantum_state.h"

namespace steanesim {

inline constexpr std::size_t kBlockSize = 7;

/// Six syndrome bits. `z_bits` come from the Z-type generators and flag
/// bit flips; `x_bits` come from the X-type generators and flag phase flips.
/// Bit r of each half belongs to generator r.
struct Syndrome {
    std::uint8_t z_bits = 0;
    std::uint8_t x_bits = 0;

    bool is_trivial() const { return z_bits == 0 && x_bits == 0; }
    int index() const { return z_bits | (x_bits << 3); }
    static Syndrome from_index(int index);
    std::string str() const;
    bool operator==(const Syndrome&) const = default;
};

/// The [[7,1,3]] code built from the [7,4] Hamming parity checks.
///
/// Generator r acts on every qubit j whose (j+1) has bit r set:
///   r=0: XIXIXIX, r=1: IXXIIXX, r=2: IIIXXXX  (and the same supports for Z).
/// A bit flip on qubit j therefore produces the syndrome value j+1.
class CodeDefinition {
   public:
    static const CodeDefinition& steane();

    const std::array<PauliString, 3>& x_stabilizers() const { return x_stabilizers_; }
    const std::array<PauliString, 3>& z_stabilizers() const { return z_stabilizers_; }
    const PauliString& logical_x() const { return logical_x_; }
    const PauliString& logical_z() const { return logical_z_; }

    /// Qubits in the support of generator r (both types share supports).
    const std::array<int, 4>& support(int r) const { return supports_[static_cast<std::size_t>(r)]; }

    /// Human-readable table of generators and logical operators.
    std::string table() const;

   private:
    CodeDefinition();

    std::array<PauliString, 3> x_stabilizers_;
    std::array<PauliString, 3> z_stabilizers_;
    std::array<std::array<int, 4>, 3> supports_;
    PauliString logical_x_;
    PauliString logical_z_;
};

Syndrome ideal_syndrome(const PauliString& error);

/// Syndrome (0..7) of 7 classical bits, bit j holding qubit j.
std::uint8_t hamming_syndrome(std::uint8_t bits);

/// Corrects at most one flipped bit and returns the parity of the result.
int decode_logical_readout(std::uint8_t bits);

/// Recovery for a syndrome: weight-1 errors invert exactly; any other
/// syndrome decodes each half independently (X on qubit z_bits-1, Z on
/// qubit x_bits-1).
const PauliString& decode_lookup(Syndrome s);

enum class LogicalAncillaKind : std::uint8_t { kZeroL, kPlusL, kTheta };

/// Labels role-first .. role-(first+6).
std::array<QubitLabel, kBlockSize> block_labels(QubitRole role, int first = 0);

/// Noiseless encoder acting on seven register positions; the input qubit
/// sits at positions[0].
void apply_encoder(QuantumState& state, std::span<const std::size_t, kBlockSize> positions);
void apply_inverse_encoder(QuantumState& state, std::span<const std::size_t, kBlockSize> positions);

/// cos(alpha)|0_L> + e^{i beta} sin(alpha)|1_L> on data-0..data-6.
QuantumState encode_ideal(double alpha, double beta);
QuantumState encode_qubit(Amplitude a0, Amplitude a1);

/// Non-fault-tolerant noisy preparation in a fresh register.
QuantumState prepare_logical_noisy(LogicalAncillaKind kind, NoiseContext& ctx, QubitRole role = QubitRole::kAncilla,
                                   int first_index = 0);

struct SyndromeBranch {
    Syndrome syndrome;
    double weight = 0;
    QuantumState state;  // normalized projection, before recovery
};

/// Splits a 7-qubit state over the 64 syndrome subspaces. Branches below
/// `min_weight` are dropped; the remaining weights are renormalized.
std::vector<SyndromeBranch> project_syndromes(const QuantumState& state, double min_weight = 1e-15);

/// Noiseless projection onto every syndrome subspace followed by the
/// decoded recovery. Branches below `min_weight` are dropped and the rest
/// renormalized.
Ensemble perfect_final_sm(const QuantumState& state, double min_weight = 1e-15);

/// 2x2 density matrix in row-major order.
using Matrix2 = std::array<Amplitude, 4>;
using Qubit = std::array<Amplitude, 2>;

/// Inverts the encoder and returns the reduced state of position 0.
Matrix2 perfect_decode(const QuantumState& state);
Matrix2 perfect_decode(const Ensemble& ensemble);

/// <phi| rho |phi>.
double logical_fidelity(const Matrix2& rho, const Qubit& phi);

}  // namespace steanesim

#endif
