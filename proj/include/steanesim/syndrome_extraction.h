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

#ifndef STEANESIM_SYNDROME_EXTRACTION_H
#define STEANESIM_SYNDROME_EXTRACTION_H

#include <string>
#include <string_view>

#include "steanesim/noise_model.h"
#include "steanesim/steane_code.h"

namespace steanesim {

/// Maximum number of full syndrome sets for repeat-until-agree.
inline constexpr int kRepeatCap = 3;
/// Maximum number of rebuilds after failed ancilla verification.
inline constexpr int kVerifyRetryCap = 5;

enum class SmMethod : std::uint8_t { kSingleQubit, kShorState, kSteaneState };

struct SmProtocol {
    SmMethod method = SmMethod::kShorState;
    bool repeated = true;

    /// Accepts "single", "single-repeated", "shor", "steane", "steane-repeated".
    static SmProtocol parse(std::string_view name);
    std::string name() const;
    /// Rejects Shor-state extraction without repetition.
    void validate() const;

    bool operator==(const SmProtocol&) const = default;
};

struct SmOutcome {
    Syndrome syndrome;
    int rounds_used = 0;
    long ancilla_qubits_consumed = 0;
    int verification_retries = 0;
    /// True when a repeat or verification cap was reached.
    bool cap_hit = false;
};

/// Pending recovery on data-0..data-6.
struct PauliFrame {
    PauliString recovery = PauliString(kBlockSize);

    void update(const PauliString& correction) { recovery *= correction; }
    bool empty() const { return recovery.is_identity(); }
};

/// Applies the frame to the block qubits noiselessly and clears it.
void interpret_and_recover(PauliFrame& frame, QuantumState& state, QubitRole role = QubitRole::kData);

/// One ancilla per generator, coupled to all four qubits of its support.
/// Every extraction acts on the block labelled role-0..6 (the data block by default).
SmOutcome sm_single_qubit(QuantumState& data, NoiseContext& ctx, bool repeated, PauliFrame& frame,
                          QubitRole role = QubitRole::kData);

struct AncillaBlock {
    QuantumState state;
    int retries = 0;
    bool cap_hit = false;
};

/// Verified four-qubit GHZ state on ancilla-0..3, built in its own register.
/// With `hadamards` the final H layer turns it into a Shor state.
AncillaBlock build_shor_state(NoiseContext& ctx, bool hadamards = true);

SmOutcome sm_shor(QuantumState& data, NoiseContext& ctx, PauliFrame& frame, QubitRole role = QubitRole::kData);

/// Two noisy copies of |0_L> or |+_L>, checked against each other. The kept
/// copy lives on keep-0..6 in its own register; the checker uses check-0..6.
AncillaBlock prepare_verified_block(LogicalAncillaKind kind, NoiseContext& ctx, QubitRole keep = QubitRole::kAncilla,
                                    QubitRole check = QubitRole::kVerify);

SmOutcome sm_steane(QuantumState& data, NoiseContext& ctx, bool repeated, PauliFrame& frame,
                    QubitRole role = QubitRole::kData);

/// Runs the selected protocol and folds the recovery into the data.
SmOutcome run_sm(const SmProtocol& protocol, QuantumState& data, NoiseContext& ctx,
                 QubitRole role = QubitRole::kData);

/// Ancilla qubits consumed by one extraction without retries.
long nominal_ancilla_per_sm(const SmProtocol& protocol);

}  // namespace steanesim

#endif
