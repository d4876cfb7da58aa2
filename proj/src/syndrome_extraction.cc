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

#include "steanesim/syndrome_extraction.h"

#include <bit>
#include <optional>
#include <stdexcept>

namespace steanesim {

namespace {

constexpr QubitLabel ancilla_label(int j) { return {QubitRole::kAncilla, j}; }
constexpr QubitLabel verify_label(int j) { return {QubitRole::kVerify, j}; }

struct SetResult {
    Syndrome syndrome;
    long ancilla = 0;
    int retries = 0;
    bool cap_hit = false;
};

SetResult single_qubit_set(QuantumState& data, NoiseContext& ctx, QubitRole role) {
    auto data_label = [role](int j) { return QubitLabel{role, j}; };
    const CodeDefinition& code = CodeDefinition::steane();
    const QubitLabel anc = ancilla_label(0);
    SetResult out;
    for (int r = 0; r < 3; ++r) {
        ctx.init(data, anc, BasisState::kZero);
        for (int j : code.support(r)) ctx.cnot(data, data_label(j), anc);
        out.syndrome.z_bits |= static_cast<std::uint8_t>(ctx.measure(data, anc) << r);
    }
    for (int r = 0; r < 3; ++r) {
        ctx.init(data, anc, BasisState::kZero);
        ctx.gate(data, GateKind::H, anc);
        for (int j : code.support(r)) ctx.cnot(data, anc, data_label(j));
        ctx.gate(data, GateKind::H, anc);
        out.syndrome.x_bits |= static_cast<std::uint8_t>(ctx.measure(data, anc) << r);
    }
    out.ancilla = 6;
    return out;
}

SetResult shor_set(QuantumState& data, NoiseContext& ctx, QubitRole role) {
    auto data_label = [role](int j) { return QubitLabel{role, j}; };
    const CodeDefinition& code = CodeDefinition::steane();
    SetResult out;
    auto absorb = [&](AncillaBlock& block) {
        out.retries += block.retries;
        out.cap_hit = out.cap_hit || block.cap_hit;
        out.ancilla += 5L * (block.retries + 1);
        data = tensor(data, block.state);
    };
    for (int r = 0; r < 3; ++r) {
        AncillaBlock block = build_shor_state(ctx, true);
        absorb(block);
        int parity = 0;
        for (int k = 0; k < 4; ++k) {
            ctx.cnot(data, data_label(code.support(r)[static_cast<std::size_t>(k)]), ancilla_label(k));
            parity ^= ctx.measure(data, ancilla_label(k));
        }
        out.syndrome.z_bits |= static_cast<std::uint8_t>(parity << r);
    }
    for (int r = 0; r < 3; ++r) {
        AncillaBlock block = build_shor_state(ctx, false);
        absorb(block);
        int parity = 0;
        for (int k = 0; k < 4; ++k) {
            ctx.cnot(data, ancilla_label(k), data_label(code.support(r)[static_cast<std::size_t>(k)]));
            ctx.gate(data, GateKind::H, ancilla_label(k));
            parity ^= ctx.measure(data, ancilla_label(k));
        }
        out.syndrome.x_bits |= static_cast<std::uint8_t>(parity << r);
    }
    return out;
}

// Bit-flip half from a |+_L> block, phase-flip half from a |0_L> block.
SetResult steane_set(QuantumState& data, NoiseContext& ctx, QubitRole role) {
    auto data_label = [role](int j) { return QubitLabel{role, j}; };
    SetResult out;
    auto absorb = [&](AncillaBlock& block) {
        out.retries += block.retries;
        out.cap_hit = out.cap_hit || block.cap_hit;
        out.ancilla += 14L * (block.retries + 1);
        data = tensor(data, block.state);
    };

    AncillaBlock plus = prepare_verified_block(LogicalAncillaKind::kPlusL, ctx);
    absorb(plus);
    std::uint8_t bits = 0;
    for (int j = 0; j < 7; ++j) {
        ctx.cnot(data, data_label(j), ancilla_label(j));
        bits |= static_cast<std::uint8_t>(ctx.measure(data, ancilla_label(j)) << j);
    }
    out.syndrome.z_bits = hamming_syndrome(bits);

    AncillaBlock zero = prepare_verified_block(LogicalAncillaKind::kZeroL, ctx);
    absorb(zero);
    bits = 0;
    for (int j = 0; j < 7; ++j) {
        ctx.cnot(data, ancilla_label(j), data_label(j));
        ctx.gate(data, GateKind::H, ancilla_label(j));
        bits |= static_cast<std::uint8_t>(ctx.measure(data, ancilla_label(j)) << j);
    }
    out.syndrome.x_bits = hamming_syndrome(bits);
    return out;
}

void absorb_set(SmOutcome& outcome, const SetResult& set, NoiseContext& ctx) {
    outcome.syndrome = set.syndrome;
    outcome.rounds_used += 1;
    outcome.ancilla_qubits_consumed += set.ancilla;
    outcome.verification_retries += set.retries;
    outcome.cap_hit = outcome.cap_hit || set.cap_hit;
    ctx.tally().ancilla_qubits += set.ancilla;
    ctx.tally().sm_rounds += 1;
    ctx.tally().verification_retries += set.retries;
}

template <typename SetFn>
SmOutcome repeat_until_agree(QuantumState& data, NoiseContext& ctx, QubitRole role, SetFn&& extract_set) {
    SmOutcome outcome;
    std::optional<Syndrome> previous;
    while (true) {
        SetResult set = extract_set(data, ctx, role);
        absorb_set(outcome, set, ctx);
        if (previous && *previous == set.syndrome) break;
        if (outcome.rounds_used >= kRepeatCap) {
            outcome.cap_hit = true;
            break;
        }
        previous = set.syndrome;
    }
    if (outcome.cap_hit) ctx.tally().retry_cap_hits += 1;
    return outcome;
}

}  // namespace

SmProtocol SmProtocol::parse(std::string_view name) {
    if (name == "single") return {SmMethod::kSingleQubit, false};
    if (name == "single-repeated") return {SmMethod::kSingleQubit, true};
    if (name == "shor") return {SmMethod::kShorState, true};
    if (name == "steane") return {SmMethod::kSteaneState, false};
    if (name == "steane-repeated") return {SmMethod::kSteaneState, true};
    throw std::invalid_argument("unknown protocol '" + std::string(name) +
                                "' (expected single, single-repeated, shor, steane or steane-repeated)");
}

std::string SmProtocol::name() const {
    switch (method) {
        case SmMethod::kSingleQubit:
            return repeated ? "single-repeated" : "single";
        case SmMethod::kShorState:
            return repeated ? "shor" : "shor-unrepeated";
        case SmMethod::kSteaneState:
            return repeated ? "steane-repeated" : "steane";
    }
    return "?";
}

void SmProtocol::validate() const {
    if (method == SmMethod::kShorState && !repeated) {
        throw std::invalid_argument("Shor-state extraction is only fault tolerant when repeated");
    }
}

void interpret_and_recover(PauliFrame& frame, QuantumState& state, QubitRole role) {
    if (frame.empty()) return;
    PauliString full(state.num_qubits());
    for (int j = 0; j < 7; ++j) {
        full.set(state.position_of({role, j}), frame.recovery[static_cast<std::size_t>(j)]);
    }
    apply_pauli(state, full);
    frame = PauliFrame{};
}

SmOutcome sm_single_qubit(QuantumState& data, NoiseContext& ctx, bool repeated, PauliFrame& frame, QubitRole role) {
    SmOutcome outcome;
    if (repeated) {
        outcome = repeat_until_agree(data, ctx, role, single_qubit_set);
    } else {
        absorb_set(outcome, single_qubit_set(data, ctx, role), ctx);
    }
    frame.update(decode_lookup(outcome.syndrome));
    return outcome;
}

AncillaBlock build_shor_state(NoiseContext& ctx, bool hadamards) {
    const std::array<QubitLabel, 5> labels{ancilla_label(0), ancilla_label(1), ancilla_label(2), ancilla_label(3),
                                           verify_label(0)};
    const std::array<BasisState, 5> zeros{};
    AncillaBlock block;
    while (true) {
        QuantumState s;
        ctx.init(s, labels, zeros);
        ctx.gate(s, GateKind::H, labels[0]);
        for (int k = 0; k < 3; ++k) ctx.cnot(s, labels[static_cast<std::size_t>(k)], labels[static_cast<std::size_t>(k + 1)]);
        ctx.cnot(s, labels[0], labels[4]);
        ctx.cnot(s, labels[3], labels[4]);
        const int flag = ctx.measure(s, labels[4]);
        if (flag == 0 || block.retries >= kVerifyRetryCap) {
            block.cap_hit = flag != 0;
            if (block.cap_hit) ctx.tally().retry_cap_hits += 1;
            if (hadamards) {
                for (int k = 0; k < 4; ++k) ctx.gate(s, GateKind::H, labels[static_cast<std::size_t>(k)]);
            }
            block.state = std::move(s);
            return block;
        }
        ++block.retries;
    }
}

SmOutcome sm_shor(QuantumState& data, NoiseContext& ctx, PauliFrame& frame, QubitRole role) {
    SmOutcome outcome = repeat_until_agree(data, ctx, role, shor_set);
    frame.update(decode_lookup(outcome.syndrome));
    return outcome;
}

AncillaBlock prepare_verified_block(LogicalAncillaKind kind, NoiseContext& ctx, QubitRole keep, QubitRole check) {
    if (kind == LogicalAncillaKind::kTheta) {
        throw std::invalid_argument("verified blocks are only defined for |0_L> and |+_L>");
    }
    const bool plus = kind == LogicalAncillaKind::kPlusL;
    AncillaBlock block;
    while (true) {
        QuantumState a = prepare_logical_noisy(kind, ctx, keep, 0);
        QuantumState b = prepare_logical_noisy(kind, ctx, check, 0);
        QuantumState s = tensor(a, b);
        std::uint8_t bits = 0;
        for (int j = 0; j < 7; ++j) {
            const QubitLabel kept{keep, j};
            const QubitLabel checker{check, j};
            if (plus) {
                // Z errors on the kept copy are copied onto the checker.
                ctx.cnot(s, checker, kept);
                ctx.gate(s, GateKind::H, checker);
            } else {
                ctx.cnot(s, kept, checker);
            }
            bits |= static_cast<std::uint8_t>(ctx.measure(s, checker) << j);
        }
        const bool ok = hamming_syndrome(bits) == 0 && (std::popcount(static_cast<unsigned>(bits)) & 1) == 0;
        if (ok || block.retries >= kVerifyRetryCap) {
            block.cap_hit = !ok;
            if (block.cap_hit) ctx.tally().retry_cap_hits += 1;
            block.state = std::move(s);
            return block;
        }
        ++block.retries;
    }
}

SmOutcome sm_steane(QuantumState& data, NoiseContext& ctx, bool repeated, PauliFrame& frame, QubitRole role) {
    SmOutcome outcome;
    absorb_set(outcome, steane_set(data, ctx, role), ctx);
    if (repeated) {
        // The later extraction reflects the current error state, so it wins.
        absorb_set(outcome, steane_set(data, ctx, role), ctx);
    }
    frame.update(decode_lookup(outcome.syndrome));
    return outcome;
}

SmOutcome run_sm(const SmProtocol& protocol, QuantumState& data, NoiseContext& ctx, QubitRole role) {
    protocol.validate();
    PauliFrame frame;
    SmOutcome outcome;
    switch (protocol.method) {
        case SmMethod::kSingleQubit:
            outcome = sm_single_qubit(data, ctx, protocol.repeated, frame, role);
            break;
        case SmMethod::kShorState:
            outcome = sm_shor(data, ctx, frame, role);
            break;
        case SmMethod::kSteaneState:
            outcome = sm_steane(data, ctx, protocol.repeated, frame, role);
            break;
    }
    interpret_and_recover(frame, data, role);
    return outcome;
}

long nominal_ancilla_per_sm(const SmProtocol& protocol) {
    switch (protocol.method) {
        case SmMethod::kSingleQubit:
            return protocol.repeated ? 12 : 6;
        case SmMethod::kShorState:
            return 60;
        case SmMethod::kSteaneState:
            return protocol.repeated ? 56 : 28;
    }
    return 0;
}

}  // namespace steanesim
