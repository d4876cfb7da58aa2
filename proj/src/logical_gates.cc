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

#include "steanesim/logical_gates.h"

#include <cmath>
#include <stdexcept>

#include "steanesim/syndrome_extraction.h"

namespace steanesim {

namespace {

constexpr QubitLabel data_label(int j) { return {QubitRole::kData, j}; }
constexpr QubitLabel magic_label(int j) { return {QubitRole::kMagic, j}; }
constexpr QubitLabel cat_label(int j) { return {QubitRole::kCat, j}; }
constexpr QubitLabel kCatCheck{QubitRole::kVerify, 7};

void transversal_noiseless(QuantumState& state, GateKind kind, QubitRole role) {
    for (int j = 0; j < 7; ++j) apply_gate(state, kind, state.position_of({role, j}));
}

// Cat state on cat-0..6, checked by comparing the two chain ends.
QuantumState build_cat(NoiseContext& ctx) {
    std::array<QubitLabel, 8> labels;
    for (int j = 0; j < 7; ++j) labels[static_cast<std::size_t>(j)] = cat_label(j);
    labels[7] = kCatCheck;
    const std::array<BasisState, 8> zeros{};
    for (int attempt = 0;; ++attempt) {
        QuantumState s;
        ctx.init(s, labels, zeros);
        ctx.gate(s, GateKind::H, cat_label(0));
        for (int j = 0; j < 6; ++j) ctx.cnot(s, cat_label(j), cat_label(j + 1));
        ctx.cnot(s, cat_label(0), kCatCheck);
        ctx.cnot(s, cat_label(6), kCatCheck);
        const int flag = ctx.measure(s, kCatCheck);
        if (flag == 0) return s;
        ctx.tally().verification_retries += 1;
        if (attempt >= kVerifyRetryCap) {
            ctx.tally().retry_cap_hits += 1;
            return s;
        }
    }
}

// One noisy reading of e^{-i pi/4} S_L X_L on the magic block.
int measure_magic_operator(QuantumState& block, NoiseContext& ctx) {
    block = tensor(block, build_cat(ctx));
    int parity = 0;
    for (int j = 0; j < 7; ++j) {
        const QubitLabel c = cat_label(j);
        const QubitLabel t = magic_label(j);
        // Controlled (S^dagger X), up to the global phase fixed on cat-0.
        ctx.gate(block, GateKind::T, t);
        ctx.cnot(block, c, t);
        ctx.gate(block, GateKind::TDag, t);
        ctx.gate(block, GateKind::TDag, c);
        if (j == 0) ctx.gate(block, GateKind::TDag, c);
        ctx.gate(block, GateKind::H, c);
        parity ^= ctx.measure(block, c);
    }
    return parity;
}

}  // namespace

std::string logical_gate_name(LogicalGate g) {
    switch (g) {
        case LogicalGate::kH:
            return "H";
        case LogicalGate::kP:
            return "P";
        case LogicalGate::kT:
            return "T";
    }
    return "?";
}

std::vector<LogicalGate> compile_sequence(std::string_view sequence) {
    if (sequence.empty()) {
        throw std::invalid_argument("gate sequence is empty");
    }
    std::vector<LogicalGate> gates;
    for (char ch : sequence) {
        switch (ch) {
            case 'A':
                gates.insert(gates.end(), {LogicalGate::kT, LogicalGate::kP, LogicalGate::kH});
                break;
            case 'B':
                gates.insert(gates.end(), {LogicalGate::kT, LogicalGate::kH});
                break;
            default:
                throw std::invalid_argument(std::string("invalid composite gate '") + ch + "' (expected A or B)");
        }
    }
    return gates;
}

std::vector<int> composite_boundaries(std::string_view sequence) {
    std::vector<int> out;
    int total = 0;
    for (char ch : sequence) {
        const GateCounts c = count_gates(std::string_view(&ch, 1));
        if (c.total() < 0) {
            throw std::invalid_argument(std::string("invalid composite gate '") + ch + "' (expected A or B)");
        }
        total += c.total();
        out.push_back(total);
    }
    return out;
}

void apply_logical_clifford(QuantumState& data, LogicalGate gate, NoiseContext& ctx) {
    GateKind physical;
    switch (gate) {
        case LogicalGate::kH:
            physical = GateKind::H;
            break;
        case LogicalGate::kP:
            physical = GateKind::PDag;
            break;
        default:
            throw std::invalid_argument("apply_logical_clifford takes H or P");
    }
    for (int j = 0; j < 7; ++j) ctx.gate(data, physical, data_label(j));
}

QuantumState prepare_theta(NoiseContext& ctx, ThetaPreparation prep) {
    if (prep == ThetaPreparation::kUnverified) {
        return prepare_logical_noisy(LogicalAncillaKind::kTheta, ctx, QubitRole::kMagic, 0);
    }
    // Ancillas spent here belong to the magic state, not to data SM.
    const ResourceTally saved = ctx.tally();
    const SmProtocol correction{SmMethod::kSteaneState, false};
    AncillaBlock zero = prepare_verified_block(LogicalAncillaKind::kZeroL, ctx, QubitRole::kMagic, QubitRole::kCat);
    QuantumState block = std::move(zero.state);
    // A stray Z on the block anticommutes with the measured operator, so the
    // block is corrected before the first reading and after every reading.
    run_sm(correction, block, ctx, QubitRole::kMagic);
    int previous = -1;
    int reading = 0;
    for (int round = 0; round < kRepeatCap; ++round) {
        reading = measure_magic_operator(block, ctx);
        run_sm(correction, block, ctx, QubitRole::kMagic);
        if (reading == previous) break;
        previous = reading;
    }
    if (reading == 1) transversal_noiseless(block, GateKind::Z, QubitRole::kMagic);
    ctx.tally() = saved;
    return block;
}

TGadgetOutcome apply_logical_t(QuantumState& data, NoiseContext& ctx, ThetaPreparation prep) {
    data = tensor(data, prepare_theta(ctx, prep));
    std::uint8_t bits = 0;
    for (int j = 0; j < 7; ++j) {
        ctx.cnot(data, magic_label(j), data_label(j));
        bits |= static_cast<std::uint8_t>(ctx.measure(data, data_label(j)) << j);
    }
    TGadgetOutcome outcome;
    outcome.logical_outcome = decode_logical_readout(bits);
    if (outcome.logical_outcome == 1) {
        transversal_noiseless(data, GateKind::X, QubitRole::kMagic);
        transversal_noiseless(data, GateKind::PDag, QubitRole::kMagic);
    }
    for (int j = 0; j < 7; ++j) {
        data.relabel(data.position_of(magic_label(j)), data_label(j));
        ctx.inherit_clock(magic_label(j), data_label(j));
    }
    return outcome;
}

void apply_logical_gate(QuantumState& data, LogicalGate gate, NoiseContext& ctx, ThetaPreparation prep) {
    if (gate == LogicalGate::kT) {
        apply_logical_t(data, ctx, prep);
    } else {
        apply_logical_clifford(data, gate, ctx);
    }
}

Matrix2x2 ideal_gate_matrix(LogicalGate gate) {
    constexpr double r = 0.70710678118654752440;
    switch (gate) {
        case LogicalGate::kH:
            return {r, r, r, -r};
        case LogicalGate::kP:
            return {1.0, 0.0, 0.0, Amplitude(0.0, 1.0)};
        case LogicalGate::kT:
            return {1.0, 0.0, 0.0, Amplitude(r, r)};
    }
    return {};
}

Qubit ideal_output(std::span<const LogicalGate> gates, const Qubit& input) {
    Qubit v = input;
    for (LogicalGate g : gates) {
        const Matrix2x2 m = ideal_gate_matrix(g);
        v = {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
    }
    return v;
}

}  // namespace steanesim
