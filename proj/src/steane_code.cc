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

#include "steanesim/steane_code.h"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace steanesim {

namespace {

struct EncoderOp {
    GateKind kind;
    int a;
    int b;
};

// Input qubit 0 fans out to {0,5,6} (logical X representative); qubits 1..3
// seed the three Hamming rows.
constexpr EncoderOp kEncoder[] = {
    {GateKind::CNOT, 0, 5}, {GateKind::CNOT, 0, 6}, {GateKind::H, 1, -1},   {GateKind::H, 2, -1},
    {GateKind::H, 3, -1},   {GateKind::CNOT, 1, 0}, {GateKind::CNOT, 1, 4}, {GateKind::CNOT, 1, 5},
    {GateKind::CNOT, 2, 0}, {GateKind::CNOT, 2, 4}, {GateKind::CNOT, 2, 6}, {GateKind::CNOT, 3, 4},
    {GateKind::CNOT, 3, 5}, {GateKind::CNOT, 3, 6},
};

void apply_op(QuantumState& state, const EncoderOp& op, std::span<const std::size_t, kBlockSize> positions) {
    const std::size_t a = positions[static_cast<std::size_t>(op.a)];
    if (op.kind == GateKind::CNOT) {
        apply_cnot(state, a, positions[static_cast<std::size_t>(op.b)]);
    } else {
        apply_gate(state, op.kind, a);
    }
}

std::array<PauliString, 64> build_lookup() {
    std::array<PauliString, 64> table;
    std::array<bool, 64> filled{};
    table[0] = PauliString(kBlockSize);
    filled[0] = true;
    for (std::size_t q = 0; q < kBlockSize; ++q) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            PauliString e = PauliString::single(kBlockSize, q, p);
            const int idx = ideal_syndrome(e).index();
            if (filled[static_cast<std::size_t>(idx)]) {
                throw std::logic_error("weight-1 syndromes collide");
            }
            table[static_cast<std::size_t>(idx)] = e;
            filled[static_cast<std::size_t>(idx)] = true;
        }
    }
    for (int idx = 0; idx < 64; ++idx) {
        if (filled[static_cast<std::size_t>(idx)]) continue;
        const Syndrome s = Syndrome::from_index(idx);
        PauliString r(kBlockSize);
        if (s.z_bits) r.set(static_cast<std::size_t>(s.z_bits - 1), Pauli::X);
        if (s.x_bits) r.set(static_cast<std::size_t>(s.x_bits - 1), Pauli::Z);
        table[static_cast<std::size_t>(idx)] = r;
    }
    return table;
}

}  // namespace

Syndrome Syndrome::from_index(int index) {
    if (index < 0 || index >= 64) {
        throw std::out_of_range("syndrome index must be in [0, 64)");
    }
    return {static_cast<std::uint8_t>(index & 7), static_cast<std::uint8_t>(index >> 3)};
}

std::string Syndrome::str() const {
    std::string out;
    for (int r = 0; r < 3; ++r) out += ((z_bits >> r) & 1) ? '1' : '0';
    out += ',';
    for (int r = 0; r < 3; ++r) out += ((x_bits >> r) & 1) ? '1' : '0';
    return out;
}

CodeDefinition::CodeDefinition() : logical_x_(kBlockSize), logical_z_(kBlockSize) {
    for (int r = 0; r < 3; ++r) {
        PauliString x(kBlockSize);
        PauliString z(kBlockSize);
        int k = 0;
        for (int j = 0; j < 7; ++j) {
            if (((j + 1) >> r) & 1) {
                x.set(static_cast<std::size_t>(j), Pauli::X);
                z.set(static_cast<std::size_t>(j), Pauli::Z);
                supports_[static_cast<std::size_t>(r)][static_cast<std::size_t>(k++)] = j;
            }
        }
        x_stabilizers_[static_cast<std::size_t>(r)] = x;
        z_stabilizers_[static_cast<std::size_t>(r)] = z;
    }
    for (std::size_t j = 0; j < kBlockSize; ++j) {
        logical_x_.set(j, Pauli::X);
        logical_z_.set(j, Pauli::Z);
    }
}

const CodeDefinition& CodeDefinition::steane() {
    static const CodeDefinition code;
    return code;
}

std::string CodeDefinition::table() const {
    std::ostringstream out;
    for (int r = 0; r < 3; ++r) out << "gx" << r << "  " << x_stabilizers_[static_cast<std::size_t>(r)].str() << '\n';
    for (int r = 0; r < 3; ++r) out << "gz" << r << "  " << z_stabilizers_[static_cast<std::size_t>(r)].str() << '\n';
    out << "XL   " << logical_x_.str() << '\n';
    out << "ZL   " << logical_z_.str() << '\n';
    return out.str();
}

Syndrome ideal_syndrome(const PauliString& error) {
    if (error.size() != kBlockSize) {
        throw std::invalid_argument("ideal_syndrome expects a 7-qubit Pauli");
    }
    Syndrome s;
    for (std::size_t j = 0; j < kBlockSize; ++j) {
        const Pauli p = error[j];
        const auto column = static_cast<std::uint8_t>(j + 1);
        if (p == Pauli::X || p == Pauli::Y) s.z_bits ^= column;
        if (p == Pauli::Z || p == Pauli::Y) s.x_bits ^= column;
    }
    return s;
}

std::uint8_t hamming_syndrome(std::uint8_t bits) {
    std::uint8_t s = 0;
    for (int j = 0; j < 7; ++j) {
        if ((bits >> j) & 1) s ^= static_cast<std::uint8_t>(j + 1);
    }
    return s;
}

int decode_logical_readout(std::uint8_t bits) {
    const std::uint8_t s = hamming_syndrome(bits);
    if (s) bits ^= static_cast<std::uint8_t>(1u << (s - 1));
    return std::popcount(static_cast<unsigned>(bits & 0x7F)) & 1;
}

const PauliString& decode_lookup(Syndrome s) {
    static const std::array<PauliString, 64> table = build_lookup();
    return table[static_cast<std::size_t>(s.index())];
}

std::array<QubitLabel, kBlockSize> block_labels(QubitRole role, int first) {
    std::array<QubitLabel, kBlockSize> labels;
    for (std::size_t j = 0; j < kBlockSize; ++j) labels[j] = {role, first + static_cast<int>(j)};
    return labels;
}

void apply_encoder(QuantumState& state, std::span<const std::size_t, kBlockSize> positions) {
    for (const EncoderOp& op : kEncoder) apply_op(state, op, positions);
}

void apply_inverse_encoder(QuantumState& state, std::span<const std::size_t, kBlockSize> positions) {
    for (auto it = std::rbegin(kEncoder); it != std::rend(kEncoder); ++it) apply_op(state, *it, positions);
}

QuantumState encode_qubit(Amplitude a0, Amplitude a1) {
    const auto labels = block_labels(QubitRole::kData);
    std::vector<Amplitude> amps(std::size_t{1} << kBlockSize);
    amps[0] = a0;
    amps[std::size_t{1} << (kBlockSize - 1)] = a1;
    QuantumState state =
        QuantumState::from_amplitudes(std::move(amps), std::vector<QubitLabel>(labels.begin(), labels.end()));
    static constexpr std::array<std::size_t, kBlockSize> kPositions{0, 1, 2, 3, 4, 5, 6};
    apply_encoder(state, kPositions);
    return state;
}

QuantumState encode_ideal(double alpha, double beta) {
    return encode_qubit(std::cos(alpha), std::polar(std::sin(alpha), beta));
}

QuantumState prepare_logical_noisy(LogicalAncillaKind kind, NoiseContext& ctx, QubitRole role, int first_index) {
    const auto labels = block_labels(role, first_index);
    const std::array<BasisState, kBlockSize> zeros{};
    QuantumState state;
    ctx.init(state, labels, zeros);
    std::size_t first_op = 0;
    switch (kind) {
        case LogicalAncillaKind::kZeroL:
            first_op = 2;  // the input fan-out acts on |0> and is skipped
            break;
        case LogicalAncillaKind::kPlusL:
            ctx.gate(state, GateKind::H, labels[0]);
            break;
        case LogicalAncillaKind::kTheta:
            ctx.gate(state, GateKind::H, labels[0]);
            ctx.gate(state, GateKind::T, labels[0]);
            break;
    }
    for (std::size_t i = first_op; i < std::size(kEncoder); ++i) {
        const EncoderOp& op = kEncoder[i];
        const QubitLabel a = labels[static_cast<std::size_t>(op.a)];
        if (op.kind == GateKind::CNOT) {
            ctx.cnot(state, a, labels[static_cast<std::size_t>(op.b)]);
        } else {
            ctx.gate(state, op.kind, a);
        }
    }
    return state;
}

std::vector<SyndromeBranch> project_syndromes(const QuantumState& state, double min_weight) {
    if (state.num_qubits() != kBlockSize) {
        throw std::invalid_argument("syndrome projection expects a 7-qubit data register");
    }
    const CodeDefinition& code = CodeDefinition::steane();
    std::vector<const PauliString*> generators;
    for (const auto& g : code.z_stabilizers()) generators.push_back(&g);
    for (const auto& g : code.x_stabilizers()) generators.push_back(&g);

    // Generators are split in z-then-x order, which matches Syndrome::index().
    std::vector<std::pair<QuantumState, int>> branches{{state, 0}};
    const double total = std::norm(state.norm());
    for (std::size_t g = 0; g < generators.size(); ++g) {
        std::vector<std::pair<QuantumState, int>> next;
        for (auto& [psi, index] : branches) {
            QuantumState flipped = psi;
            apply_pauli(flipped, *generators[g]);
            std::vector<Amplitude> plus = psi.amplitudes();
            std::vector<Amplitude> minus = psi.amplitudes();
            const auto& f = flipped.amplitudes();
            double np = 0;
            double nm = 0;
            for (std::size_t i = 0; i < plus.size(); ++i) {
                plus[i] = 0.5 * (plus[i] + f[i]);
                minus[i] = 0.5 * (minus[i] - f[i]);
                np += std::norm(plus[i]);
                nm += std::norm(minus[i]);
            }
            if (np > min_weight * total) {
                QuantumState s = psi;
                s.mutable_amplitudes() = std::move(plus);
                next.emplace_back(std::move(s), index);
            }
            if (nm > min_weight * total) {
                QuantumState s = psi;
                s.mutable_amplitudes() = std::move(minus);
                next.emplace_back(std::move(s), index | (1 << g));
            }
        }
        branches = std::move(next);
    }

    double kept = 0;
    for (const auto& b : branches) kept += std::norm(b.first.norm());
    std::vector<SyndromeBranch> out;
    for (auto& [psi, index] : branches) {
        const double weight = std::norm(psi.norm());
        const double scale = 1.0 / std::sqrt(weight);
        for (Amplitude& a : psi.mutable_amplitudes()) a *= scale;
        out.push_back({Syndrome::from_index(index), weight / kept, std::move(psi)});
    }
    return out;
}

Ensemble perfect_final_sm(const QuantumState& state, double min_weight) {
    Ensemble out;
    for (SyndromeBranch& b : project_syndromes(state, min_weight)) {
        apply_pauli(b.state, decode_lookup(b.syndrome));
        out.push_back({b.weight, std::move(b.state)});
    }
    return out;
}

Matrix2 perfect_decode(const QuantumState& state) {
    if (state.num_qubits() != kBlockSize) {
        throw std::invalid_argument("perfect_decode expects a 7-qubit register");
    }
    QuantumState work = state;
    static constexpr std::array<std::size_t, kBlockSize> kPositions{0, 1, 2, 3, 4, 5, 6};
    apply_inverse_encoder(work, kPositions);
    const auto& a = work.amplitudes();
    const std::size_t half = a.size() / 2;
    Matrix2 rho{};
    for (std::size_t r = 0; r < half; ++r) {
        rho[0] += std::norm(a[r]);
        rho[1] += a[r] * std::conj(a[half + r]);
        rho[3] += std::norm(a[half + r]);
    }
    rho[2] = std::conj(rho[1]);
    return rho;
}

Matrix2 perfect_decode(const Ensemble& ensemble) {
    Matrix2 rho{};
    for (const WeightedState& m : ensemble) {
        const Matrix2 part = perfect_decode(m.state);
        for (std::size_t k = 0; k < 4; ++k) rho[k] += m.weight * part[k];
    }
    return rho;
}

double logical_fidelity(const Matrix2& rho, const Qubit& phi) {
    const Amplitude v = std::conj(phi[0]) * (rho[0] * phi[0] + rho[1] * phi[1]) +
                        std::conj(phi[1]) * (rho[2] * phi[0] + rho[3] * phi[1]);
    return v.real();
}

}  // namespace steanesim
