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

#include "steanesim/quantum_state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace steanesim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kBasisTolerance = 1e-12;

std::size_t bit_of(std::size_t num_qubits, std::size_t position) {
    return std::size_t{1} << (num_qubits - 1 - position);
}

void check_position(const QuantumState& state, std::size_t position) {
    if (position >= state.num_qubits()) {
        throw std::out_of_range("qubit position " + std::to_string(position) + " out of range for " +
                                std::to_string(state.num_qubits()) + "-qubit register");
    }
}

// Calls f(i0, i1) for every pair of indices differing only in `bit`, with i0 having it clear.
template <typename F>
void for_each_pair(std::size_t dim, std::size_t bit, F&& f) {
    for (std::size_t hi = 0; hi < dim; hi += 2 * bit) {
        for (std::size_t lo = hi; lo < hi + bit; ++lo) {
            f(lo, lo | bit);
        }
    }
}

void phase_on_one(std::vector<Amplitude>& amps, std::size_t bit, Amplitude phase) {
    for_each_pair(amps.size(), bit, [&](std::size_t, std::size_t i1) { amps[i1] *= phase; });
}

std::vector<Amplitude> basis_amplitudes(BasisState b) {
    switch (b) {
        case BasisState::kZero:
            return {1.0, 0.0};
        case BasisState::kOne:
            return {0.0, 1.0};
        case BasisState::kPlus:
            return {kInvSqrt2, kInvSqrt2};
        case BasisState::kMinus:
            return {kInvSqrt2, -kInvSqrt2};
    }
    return {};
}

// Removes qubit `position`, keeping only the branch where it equals `value`.
std::vector<Amplitude> drop_qubit(const std::vector<Amplitude>& amps, std::size_t num_qubits, std::size_t position,
                                  int value, double scale) {
    const std::size_t bit = bit_of(num_qubits, position);
    std::vector<Amplitude> out(amps.size() / 2);
    const std::size_t offset = value ? bit : 0;
    std::size_t k = 0;
    for (std::size_t hi = 0; hi < amps.size(); hi += 2 * bit) {
        for (std::size_t lo = hi; lo < hi + bit; ++lo) {
            out[k++] = amps[lo + offset] * scale;
        }
    }
    return out;
}

}  // namespace

std::string QubitLabel::str() const {
    static constexpr const char* kNames[] = {"data", "ancilla", "verify", "magic", "cat"};
    return std::string(kNames[static_cast<int>(role)]) + "-" + std::to_string(index);
}

std::string gate_name(GateKind kind) {
    static constexpr const char* kNames[] = {"H", "P", "PDag", "T", "TDag", "CNOT", "X", "Y", "Z"};
    return kNames[static_cast<int>(kind)];
}

QuantumState::QuantumState() : amplitudes_{1.0} {}

QuantumState QuantumState::from_amplitudes(std::vector<Amplitude> amplitudes, std::vector<QubitLabel> labels) {
    QuantumState state;
    state.set_register(std::move(amplitudes), std::move(labels));
    return state;
}

QuantumState QuantumState::basis(std::vector<QubitLabel> labels, std::uint64_t index) {
    if (labels.size() > kMaxQubits) {
        throw std::length_error("register exceeds the qubit cap");
    }
    std::vector<Amplitude> amps(std::size_t{1} << labels.size());
    if (index >= amps.size()) {
        throw std::out_of_range("basis index out of range");
    }
    amps[index] = 1.0;
    return from_amplitudes(std::move(amps), std::move(labels));
}

void QuantumState::set_register(std::vector<Amplitude> amplitudes, std::vector<QubitLabel> labels) {
    if (labels.size() > kMaxQubits) {
        throw std::length_error("register of " + std::to_string(labels.size()) + " qubits exceeds the cap of " +
                                std::to_string(kMaxQubits));
    }
    if (amplitudes.size() != (std::size_t{1} << labels.size())) {
        throw std::invalid_argument("amplitude count does not match 2^(number of labels)");
    }
    amplitudes_ = std::move(amplitudes);
    labels_ = std::move(labels);
}

std::size_t QuantumState::position_of(QubitLabel label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw std::out_of_range("no qubit labelled " + label.str());
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

void QuantumState::relabel(std::size_t position, QubitLabel label) {
    check_position(*this, position);
    labels_[position] = label;
}

double QuantumState::norm() const {
    double total = 0;
    for (const Amplitude& a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void apply_gate(QuantumState& state, GateKind kind, std::size_t target) {
    if (kind == GateKind::CNOT) {
        throw std::invalid_argument("CNOT needs a control and a target");
    }
    check_position(state, target);
    auto& amps = state.mutable_amplitudes();
    const std::size_t bit = bit_of(state.num_qubits(), target);
    const std::size_t dim = amps.size();
    switch (kind) {
        case GateKind::H:
            for_each_pair(dim, bit, [&](std::size_t i0, std::size_t i1) {
                Amplitude a = amps[i0];
                Amplitude b = amps[i1];
                amps[i0] = (a + b) * kInvSqrt2;
                amps[i1] = (a - b) * kInvSqrt2;
            });
            break;
        case GateKind::P:
            phase_on_one(amps, bit, {0.0, 1.0});
            break;
        case GateKind::PDag:
            phase_on_one(amps, bit, {0.0, -1.0});
            break;
        case GateKind::T:
            phase_on_one(amps, bit, {kInvSqrt2, kInvSqrt2});
            break;
        case GateKind::TDag:
            phase_on_one(amps, bit, {kInvSqrt2, -kInvSqrt2});
            break;
        case GateKind::X:
            for_each_pair(dim, bit, [&](std::size_t i0, std::size_t i1) { std::swap(amps[i0], amps[i1]); });
            break;
        case GateKind::Y:
            for_each_pair(dim, bit, [&](std::size_t i0, std::size_t i1) {
                Amplitude a = amps[i0];
                Amplitude b = amps[i1];
                amps[i0] = Amplitude(b.imag(), -b.real());  // -i b
                amps[i1] = Amplitude(-a.imag(), a.real());  // i a
            });
            break;
        case GateKind::Z:
            phase_on_one(amps, bit, -1.0);
            break;
        case GateKind::CNOT:
            break;
    }
}

void apply_cnot(QuantumState& state, std::size_t control, std::size_t target) {
    check_position(state, control);
    check_position(state, target);
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    auto& amps = state.mutable_amplitudes();
    const std::size_t cbit = bit_of(state.num_qubits(), control);
    const std::size_t tbit = bit_of(state.num_qubits(), target);
    for_each_pair(amps.size(), tbit, [&](std::size_t i0, std::size_t i1) {
        if (i0 & cbit) {
            std::swap(amps[i0], amps[i1]);
        }
    });
}

void apply_gate(QuantumState& state, GateKind kind, std::span<const std::size_t> targets) {
    if (kind == GateKind::CNOT) {
        if (targets.size() != 2) {
            throw std::invalid_argument("CNOT needs exactly two targets");
        }
        apply_cnot(state, targets[0], targets[1]);
        return;
    }
    if (targets.size() != 1) {
        throw std::invalid_argument(gate_name(kind) + " needs exactly one target");
    }
    apply_gate(state, kind, targets[0]);
}

void apply_pauli(QuantumState& state, const PauliString& pauli) {
    if (pauli.size() != state.num_qubits()) {
        throw std::invalid_argument("Pauli length " + std::to_string(pauli.size()) + " does not match " +
                                    std::to_string(state.num_qubits()) + "-qubit register");
    }
    const std::uint64_t xmask = pauli.x_mask();
    const std::uint64_t zmask = pauli.z_mask();
    const unsigned num_y = static_cast<unsigned>(std::popcount(xmask & zmask));
    PauliString phase_only;
    phase_only.set_phase(static_cast<std::uint8_t>(pauli.phase() + num_y));
    const Amplitude global = phase_only.phase_factor();

    auto& amps = state.mutable_amplitudes();
    if (xmask == 0) {
        for (std::size_t i = 0; i < amps.size(); ++i) {
            Amplitude s = (std::popcount(i & zmask) & 1) ? -global : global;
            amps[i] *= s;
        }
        return;
    }
    // Pairs (i, i ^ xmask) with i the smaller index are swapped together.
    const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(xmask));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & top) {
            continue;
        }
        const std::size_t j = i ^ xmask;
        Amplitude si = (std::popcount(i & zmask) & 1) ? -global : global;
        Amplitude sj = (std::popcount(j & zmask) & 1) ? -global : global;
        Amplitude ai = amps[i];
        amps[i] = sj * amps[j];
        amps[j] = si * ai;
    }
}

void apply_pauli(QuantumState& state, Pauli pauli, std::size_t position) {
    switch (pauli) {
        case Pauli::I:
            check_position(state, position);
            return;
        case Pauli::X:
            apply_gate(state, GateKind::X, position);
            return;
        case Pauli::Y:
            apply_gate(state, GateKind::Y, position);
            return;
        case Pauli::Z:
            apply_gate(state, GateKind::Z, position);
            return;
    }
}

namespace {

struct BranchNorms {
    double zero = 0;
    double one = 0;
};

BranchNorms branch_norms(const QuantumState& state, std::size_t position) {
    BranchNorms n;
    const auto& amps = state.amplitudes();
    for_each_pair(amps.size(), bit_of(state.num_qubits(), position), [&](std::size_t i0, std::size_t i1) {
        n.zero += std::norm(amps[i0]);
        n.one += std::norm(amps[i1]);
    });
    return n;
}

int choose_outcome(const BranchNorms& n, double draw) {
    const double total = n.zero + n.one;
    if (!(total > 0) || !std::isfinite(total)) {
        throw SimulationError("cannot measure a state with zero or non-finite norm");
    }
    int outcome = (n.zero > 0 && draw * total < n.zero) ? 0 : 1;
    double kept = outcome ? n.one : n.zero;
    if (kept < 1e-300) {
        throw SimulationError("measurement selected a zero-norm branch");
    }
    return outcome;
}

}  // namespace

int measure_z(QuantumState& state, std::size_t position, double draw) {
    check_position(state, position);
    BranchNorms n = branch_norms(state, position);
    int outcome = choose_outcome(n, draw);
    const double scale = 1.0 / std::sqrt(outcome ? n.one : n.zero);
    auto& amps = state.mutable_amplitudes();
    for_each_pair(amps.size(), bit_of(state.num_qubits(), position), [&](std::size_t i0, std::size_t i1) {
        if (outcome) {
            amps[i0] = 0;
            amps[i1] *= scale;
        } else {
            amps[i0] *= scale;
            amps[i1] = 0;
        }
    });
    return outcome;
}

int measure_z_and_detach(QuantumState& state, std::size_t position, double draw) {
    check_position(state, position);
    BranchNorms n = branch_norms(state, position);
    int outcome = choose_outcome(n, draw);
    const double scale = 1.0 / std::sqrt(outcome ? n.one : n.zero);
    std::vector<Amplitude> out = drop_qubit(state.amplitudes(), state.num_qubits(), position, outcome, scale);
    std::vector<QubitLabel> labels = state.labels();
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(position));
    state.set_register(std::move(out), std::move(labels));
    return outcome;
}

void attach_qubits(QuantumState& state, std::span<const QubitLabel> labels, std::span<const BasisState> initial) {
    if (labels.size() != initial.size()) {
        throw std::invalid_argument("attach_qubits needs one initial state per label");
    }
    if (state.num_qubits() + labels.size() > kMaxQubits) {
        throw std::length_error("attaching " + std::to_string(labels.size()) + " qubits to a " +
                                std::to_string(state.num_qubits()) + "-qubit register exceeds the cap of " +
                                std::to_string(kMaxQubits));
    }
    std::vector<Amplitude> block{1.0};
    for (BasisState b : initial) {
        std::vector<Amplitude> single = basis_amplitudes(b);
        std::vector<Amplitude> next(block.size() * 2);
        for (std::size_t i = 0; i < block.size(); ++i) {
            next[2 * i] = block[i] * single[0];
            next[2 * i + 1] = block[i] * single[1];
        }
        block = std::move(next);
    }
    const auto& amps = state.amplitudes();
    std::vector<Amplitude> out(amps.size() * block.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (amps[i] == Amplitude{}) {
            continue;
        }
        for (std::size_t j = 0; j < block.size(); ++j) {
            out[i * block.size() + j] = amps[i] * block[j];
        }
    }
    std::vector<QubitLabel> all = state.labels();
    all.insert(all.end(), labels.begin(), labels.end());
    state.set_register(std::move(out), std::move(all));
}

void detach_measured(QuantumState& state, std::span<const std::size_t> positions) {
    std::vector<std::size_t> order(positions.begin(), positions.end());
    std::sort(order.begin(), order.end(), std::greater<>());
    if (std::adjacent_find(order.begin(), order.end()) != order.end()) {
        throw std::invalid_argument("duplicate positions in detach_measured");
    }
    for (std::size_t position : order) {
        check_position(state, position);
        BranchNorms n = branch_norms(state, position);
        const double total = n.zero + n.one;
        int value;
        if (n.one <= kBasisTolerance * total) {
            value = 0;
        } else if (n.zero <= kBasisTolerance * total) {
            value = 1;
        } else {
            throw std::invalid_argument("qubit " + state.labels()[position].str() +
                                        " is not in a computational basis state and cannot be detached");
        }
        const double scale = 1.0 / std::sqrt(value ? n.one : n.zero);
        std::vector<Amplitude> out = drop_qubit(state.amplitudes(), state.num_qubits(), position, value, scale);
        std::vector<QubitLabel> labels = state.labels();
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(position));
        state.set_register(std::move(out), std::move(labels));
    }
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
    if (a.num_qubits() + b.num_qubits() > kMaxQubits) {
        throw std::length_error("tensor product exceeds the qubit cap");
    }
    const auto& aa = a.amplitudes();
    const auto& bb = b.amplitudes();
    std::vector<Amplitude> out(aa.size() * bb.size());
    for (std::size_t i = 0; i < aa.size(); ++i) {
        if (aa[i] == Amplitude{}) {
            continue;
        }
        for (std::size_t j = 0; j < bb.size(); ++j) {
            out[i * bb.size() + j] = aa[i] * bb[j];
        }
    }
    std::vector<QubitLabel> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    return QuantumState::from_amplitudes(std::move(out), std::move(labels));
}

Amplitude inner_product(const QuantumState& a, const QuantumState& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner product of registers with different sizes");
    }
    Amplitude total{};
    const auto& aa = a.amplitudes();
    const auto& bb = b.amplitudes();
    for (std::size_t i = 0; i < aa.size(); ++i) {
        total += std::conj(aa[i]) * bb[i];
    }
    return total;
}

double overlap_fidelity(const QuantumState& a, const QuantumState& b) { return std::norm(inner_product(a, b)); }

double overlap_fidelity(const Ensemble& a, const QuantumState& b) {
    double total = 0;
    for (const WeightedState& member : a) {
        total += member.weight * overlap_fidelity(member.state, b);
    }
    return total;
}

}  // namespace steanesim
