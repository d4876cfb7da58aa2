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

#include <cmath>

#include "gtest/gtest.h"
#include "steanesim/experiment.h"

using namespace steanesim;

namespace {

const char* const kProtocols[] = {"single", "single-repeated", "shor", "steane", "steane-repeated"};

QuantumState with_error(QuantumState s, const PauliString& e) {
    apply_pauli(s, e);
    return s;
}

std::vector<PauliString> weight_one_errors() {
    std::vector<PauliString> out;
    for (std::size_t q = 0; q < kBlockSize; ++q) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) out.push_back(PauliString::single(kBlockSize, q, p));
    }
    return out;
}

QuantumState ideal_shor_state() {
    std::vector<Amplitude> amps(16);
    for (std::size_t i = 0; i < 16; ++i) amps[i] = std::popcount(i) % 2 == 0 ? 1 / std::sqrt(8.0) : 0.0;
    std::vector<QubitLabel> labels;
    for (int k = 0; k < 4; ++k) labels.push_back({QubitRole::kAncilla, k});
    return QuantumState::from_amplitudes(amps, labels);
}

}  // namespace

TEST(SmProtocol, parse_and_name) {
    for (const char* name : kProtocols) EXPECT_EQ(SmProtocol::parse(name).name(), name);
    EXPECT_THROW(SmProtocol::parse("surface"), std::invalid_argument);
    EXPECT_THROW((SmProtocol{SmMethod::kShorState, false}).validate(), std::invalid_argument);
}

TEST(SingleQubitSm, noiseless_trivial_syndrome) {
    QuantumState data = encode_ideal(0, 0);
    NoiseContext ctx = NoiseContext::noiseless();
    PauliFrame frame;
    SmOutcome out = sm_single_qubit(data, ctx, false, frame);
    EXPECT_TRUE(out.syndrome.is_trivial());
    EXPECT_EQ(out.ancilla_qubits_consumed, 6);
    EXPECT_EQ(out.rounds_used, 1);
    EXPECT_TRUE(frame.empty());
    EXPECT_EQ(data.num_qubits(), kBlockSize);
}

TEST(SingleQubitSm, detects_and_corrects_x4) {
    const PauliString x4 = PauliString::single(kBlockSize, 4, Pauli::X);
    QuantumState data = with_error(encode_ideal(0, 0), x4);
    NoiseContext ctx = NoiseContext::noiseless();
    PauliFrame frame;
    SmOutcome out = sm_single_qubit(data, ctx, false, frame);
    EXPECT_EQ(out.syndrome, ideal_syndrome(x4));
    interpret_and_recover(frame, data);
    EXPECT_NEAR(overlap_fidelity(data, encode_ideal(0, 0)), 1, 1e-12);
}

TEST(SingleQubitSm, some_single_fault_causes_logical_error) {
    // Count fault locations of one unrepeated round on |0_L>.
    NoiseContext probe = NoiseContext::noiseless();
    probe.set_recording(true);
    QuantumState data = encode_ideal(0, 0);
    PauliFrame unused;
    sm_single_qubit(data, probe, false, unused);
    const int n = static_cast<int>(probe.recorded().size());
    EXPECT_EQ(n, 6 * (1 + 8 + 1) + 3 * 2);

    int heavy = 0;
    for (int loc = 0; loc < n; ++loc) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            QuantumState d = encode_ideal(0, 0);
            NoiseContext ctx = NoiseContext::scripted({{{0, loc}, p}}, Rng(3));
            PauliFrame frame;
            sm_single_qubit(d, ctx, false, frame);
            interpret_and_recover(frame, d);
            Ensemble final = perfect_final_sm(d);
            if (logical_fidelity(perfect_decode(final), {1, 0}) < 1 - 1e-9) ++heavy;
        }
    }
    EXPECT_GT(heavy, 0);
}

TEST(ShorState, noiseless_build_is_exact) {
    NoiseContext ctx = NoiseContext::noiseless();
    AncillaBlock block = build_shor_state(ctx);
    EXPECT_EQ(block.retries, 0);
    EXPECT_FALSE(block.cap_hit);
    EXPECT_NEAR(overlap_fidelity(block.state, ideal_shor_state()), 1, 1e-12);
}

TEST(ShorState, correlated_flip_is_caught) {
    // Ordinal 7 is the target of the first fan-out CNOT (ancilla 1).
    NoiseContext ctx = NoiseContext::scripted({{{0, 7}, Pauli::X}}, Rng(1));
    AncillaBlock block = build_shor_state(ctx);
    EXPECT_EQ(block.retries, 1);
    EXPECT_NEAR(overlap_fidelity(block.state, ideal_shor_state()), 1, 1e-12);
}

TEST(ShorState, late_phase_fault_becomes_single_flip) {
    NoiseContext probe = NoiseContext::noiseless();
    probe.set_recording(true);
    build_shor_state(probe);
    // Last location on ancilla 3 before the closing Hadamards: its verification CNOT.
    const auto& rec = probe.recorded();
    int site = -1;
    for (std::size_t k = 0; k + 4 < rec.size(); ++k) {
        if (rec[k].qubit == QubitLabel{QubitRole::kAncilla, 3}) site = static_cast<int>(k);
    }
    ASSERT_GE(site, 0);
    NoiseContext ctx = NoiseContext::scripted({{{0, site}, Pauli::Z}}, Rng(1));
    AncillaBlock block = build_shor_state(ctx);
    EXPECT_EQ(block.retries, 0);
    QuantumState expected = ideal_shor_state();
    apply_pauli(expected, PauliString::from_str("IIIX"));
    EXPECT_NEAR(overlap_fidelity(block.state, expected), 1, 1e-12);
}

TEST(ShorSm, noiseless_uses_two_sets) {
    QuantumState data = encode_ideal(0, 0);
    NoiseContext ctx = NoiseContext::noiseless();
    PauliFrame frame;
    SmOutcome out = sm_shor(data, ctx, frame);
    EXPECT_TRUE(out.syndrome.is_trivial());
    EXPECT_EQ(out.rounds_used, 2);
    EXPECT_EQ(out.ancilla_qubits_consumed, 60);
    EXPECT_FALSE(out.cap_hit);
}

TEST(ShorSm, detects_and_corrects_z2) {
    const PauliString z2 = PauliString::single(kBlockSize, 2, Pauli::Z);
    QuantumState data = with_error(encode_ideal(0, 0), z2);
    NoiseContext ctx = NoiseContext::noiseless();
    PauliFrame frame;
    SmOutcome out = sm_shor(data, ctx, frame);
    EXPECT_EQ(out.syndrome.x_bits, ideal_syndrome(z2).x_bits);
    EXPECT_EQ(out.syndrome.z_bits, 0);
    interpret_and_recover(frame, data);
    EXPECT_NEAR(overlap_fidelity(data, encode_ideal(0, 0)), 1, 1e-12);
}

TEST(SteaneSm, noiseless_costs) {
    for (bool repeated : {false, true}) {
        QuantumState data = encode_ideal(0, 0);
        NoiseContext ctx = NoiseContext::noiseless();
        PauliFrame frame;
        SmOutcome out = sm_steane(data, ctx, repeated, frame);
        EXPECT_TRUE(out.syndrome.is_trivial());
        EXPECT_EQ(out.ancilla_qubits_consumed, repeated ? 56 : 28);
        EXPECT_EQ(out.verification_retries, 0);
    }
}

TEST(SteaneSm, bit_flip_half_identifies_qubit_6) {
    const PauliString x6 = PauliString::single(kBlockSize, 6, Pauli::X);
    QuantumState data = with_error(encode_ideal(0, 0), x6);
    NoiseContext ctx = NoiseContext::noiseless();
    PauliFrame frame;
    SmOutcome out = sm_steane(data, ctx, false, frame);
    EXPECT_EQ(out.syndrome.z_bits, 7);
    EXPECT_EQ(out.syndrome.x_bits, 0);
    interpret_and_recover(frame, data);
    EXPECT_NEAR(overlap_fidelity(data, encode_ideal(0, 0)), 1, 1e-12);
}

TEST(SteaneSm, verification_rejects_bad_block) {
    // An X fault on the kept copy's qubit 0 is copied onto the check copy.
    NoiseContext probe = NoiseContext::noiseless();
    probe.set_recording(true);
    prepare_verified_block(LogicalAncillaKind::kZeroL, probe);
    const auto& rec = probe.recorded();
    int site = -1;
    for (std::size_t k = 0; k < rec.size() && site < 0; ++k) {
        if (rec[k].qubit == QubitLabel{QubitRole::kAncilla, 0}) site = static_cast<int>(k);
    }
    ASSERT_GE(site, 0);
    NoiseContext ctx = NoiseContext::scripted({{{0, site}, Pauli::X}}, Rng(1));
    AncillaBlock block = prepare_verified_block(LogicalAncillaKind::kZeroL, ctx);
    EXPECT_EQ(block.retries, 1);
    EXPECT_NEAR(overlap_fidelity(block.state, prepare_logical_noisy(LogicalAncillaKind::kZeroL, probe)), 1, 1e-12);
}

TEST(AllProtocols, weight_one_errors_round_trip) {
    for (const char* name : kProtocols) {
        const SmProtocol protocol = SmProtocol::parse(name);
        for (double alpha : {0.0, M_PI / 4}) {
            const QuantumState psi = encode_ideal(alpha, 0);
            for (const PauliString& e : weight_one_errors()) {
                QuantumState data = with_error(psi, e);
                NoiseContext ctx = NoiseContext::noiseless();
                SmOutcome out = run_sm(protocol, data, ctx);
                EXPECT_EQ(out.syndrome, ideal_syndrome(e)) << name << " " << e.str();
                EXPECT_NEAR(overlap_fidelity(data, psi), 1, 1e-10) << name << " " << e.str();
            }
        }
    }
}

TEST(AllProtocols, nominal_ancilla_costs) {
    EXPECT_EQ(nominal_ancilla_per_sm(SmProtocol::parse("single")), 6);
    EXPECT_EQ(nominal_ancilla_per_sm(SmProtocol::parse("single-repeated")), 12);
    EXPECT_EQ(nominal_ancilla_per_sm(SmProtocol::parse("shor")), 60);
    EXPECT_EQ(nominal_ancilla_per_sm(SmProtocol::parse("steane")), 28);
    EXPECT_EQ(nominal_ancilla_per_sm(SmProtocol::parse("steane-repeated")), 56);
}

TEST(PauliFrame, fold_into_state) {
    const QuantumState zero_l = encode_ideal(0, 0);
    PauliFrame empty;
    QuantumState s = zero_l;
    interpret_and_recover(empty, s);
    EXPECT_NEAR(overlap_fidelity(s, zero_l), 1, 1e-14);

    const PauliString x3 = PauliString::single(kBlockSize, 3, Pauli::X);
    PauliFrame frame;
    frame.update(x3);
    QuantumState t = with_error(zero_l, x3);
    interpret_and_recover(frame, t);
    EXPECT_NEAR(overlap_fidelity(t, zero_l), 1, 1e-14);
    EXPECT_TRUE(frame.empty());
    interpret_and_recover(frame, t);
    EXPECT_NEAR(overlap_fidelity(t, zero_l), 1, 1e-14);

    PauliFrame xz;
    xz.update(x3);
    xz.update(PauliString::single(kBlockSize, 3, Pauli::Z));
    EXPECT_TRUE(xz.recovery.same_up_to_phase(PauliString::single(kBlockSize, 3, Pauli::Y)));
}

TEST(Certification, single_qubit_gadget_is_not_fault_tolerant) {
    CertificationReport r = certify_gadget(SmProtocol::parse("single"));
    EXPECT_GE(r.max_residual_weight, 2);
    EXPECT_GT(r.logical_failures, 0);
    EXPECT_FALSE(r.fault_tolerant());
}

TEST(Certification, residual_weight_modulo_stabilizer) {
    const QuantumState zero_l = encode_ideal(0, 0);
    EXPECT_EQ(residual_weight(zero_l, zero_l), 0);
    QuantumState s = zero_l;
    apply_pauli(s, CodeDefinition::steane().z_stabilizers()[1]);
    EXPECT_EQ(residual_weight(s, zero_l), 0);
    apply_pauli(s, PauliString::single(kBlockSize, 2, Pauli::Y));
    EXPECT_EQ(residual_weight(s, zero_l), 1);
    apply_pauli(s, PauliString::single(kBlockSize, 5, Pauli::X));
    EXPECT_EQ(residual_weight(s, zero_l), 2);
}
