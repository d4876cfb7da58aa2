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

#ifndef STEANESIM_LOGICAL_GATES_H
#define STEANESIM_LOGICAL_GATES_H

#include <string>
#include <string_view>
#include <vector>

#include "steanesim/noise_model.h"
#include "steanesim/steane_code.h"

namespace steanesim {

enum class LogicalGate : std::uint8_t { kH, kP, kT };

std::string logical_gate_name(LogicalGate g);

/// The 20-composite benchmark sequence; A = HPT and B = HT as operator products.
inline constexpr std::string_view kDefaultSequence = "ABBBAAAABBABABABBBAA";

struct GateCounts {
    int t = 0;
    int h = 0;
    int p = 0;

    constexpr int total() const { return t + h + p; }
    constexpr bool operator==(const GateCounts&) const = default;
};

/// Gate counts of a composite string; characters other than A/B make the
/// result invalid (all counts -1).
constexpr GateCounts count_gates(std::string_view sequence) {
    GateCounts c;
    for (char ch : sequence) {
        if (ch == 'A') {
            ++c.t;
            ++c.p;
            ++c.h;
        } else if (ch == 'B') {
            ++c.t;
            ++c.h;
        } else {
            return {-1, -1, -1};
        }
    }
    return c;
}

static_assert(count_gates(kDefaultSequence) == GateCounts{20, 20, 10});
static_assert(count_gates(kDefaultSequence).total() == 50);

/// Gates in application order: A expands to T, P, H and B to T, H.
std::vector<LogicalGate> compile_sequence(std::string_view sequence);

/// Number of gates executed after each composite (cumulative).
std::vector<int> composite_boundaries(std::string_view sequence);

/// Transversal H (bitwise H) or P (bitwise P-dagger) on data-0..6.
void apply_logical_clifford(QuantumState& data, LogicalGate gate, NoiseContext& ctx);

enum class ThetaPreparation : std::uint8_t { kUnverified, kVerified };

/// Magic state (|0_L> + e^{i pi/4}|1_L>)/sqrt(2) on magic-0..6 in a fresh
/// register. The verified variant measures e^{-i pi/4} S_L X_L on a
/// verified |0_L> with a checked cat state, repeating until two readings
/// agree.
QuantumState prepare_theta(NoiseContext& ctx, ThetaPreparation prep);

struct TGadgetOutcome {
    int logical_outcome = 0;
};

/// Teleported T: transversal CNOT from the magic block into the data,
/// Z readout of the data, and a noiseless X_L then S_L correction when the
/// decoded outcome is 1. The magic block becomes data-0..6.
TGadgetOutcome apply_logical_t(QuantumState& data, NoiseContext& ctx,
                               ThetaPreparation prep = ThetaPreparation::kUnverified);

void apply_logical_gate(QuantumState& data, LogicalGate gate, NoiseContext& ctx,
                        ThetaPreparation prep = ThetaPreparation::kUnverified);

using Matrix2x2 = std::array<Amplitude, 4>;

Matrix2x2 ideal_gate_matrix(LogicalGate gate);

/// U|psi> for the compiled sequence, computed on a single qubit.
Qubit ideal_output(std::span<const LogicalGate> gates, const Qubit& input);

}  // namespace steanesim

#endif
