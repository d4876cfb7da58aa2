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

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"

using namespace steanesim;

namespace {

using G = LogicalGate;

// Reference values from tests/oracle/dense_oracle.py.
const Qubit kSequenceOnZero{Amplitude(0.35715413, -0.11538713), Amplitude(-0.88212256, -0.2845813)};
const Qubit kTOnGeneric{Amplitude(0.95533649, 0), Amplitude(0.02520622, 0.29444327)};

Qubit apply_matrix(const Matrix2x2& m, const Qubit& v) { return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]}; }

QuantumState encoded(const Qubit& v) { return encode_qubit(v[0], v[1]); }

double qubit_fidelity(const Qubit& a, const Qubit& b) { return std::norm(std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]); }

const Qubit kPlus{M_SQRT1_2, M_SQRT1_2};

}  // namespace

TEST(CompileSequence, composites_expand_in_application_order) {
    EXPECT_EQ(compile_sequence("A"), (std::vector<G>{G::kT, G::kP, G::kH}));
    EXPECT_EQ(compile_sequence("B"), (std::vector<G>{G::kT, G::kH}));
    const auto gates = compile_sequence(kDefaultSequence);
    EXPECT_EQ(gates.size(), 50u);
    EXPECT_EQ(std::count(gates.begin(), gates.end(), G::kT), 20);
    EXPECT_EQ(std::count(gates.begin(), gates.end(), G::kH), 20);
    EXPECT_EQ(std::count(gates.begin(), gates.end(), G::kP), 10);
    EXPECT_THROW(compile_sequence("AC"), std::invalid_argument);
    EXPECT_THROW(compile_sequence(""), std::invalid_argument);
}

TEST(CompileSequence, composite_boundaries) {
    EXPECT_EQ(composite_boundaries("ABBA"), (std::vector<int>{3, 5, 7, 10}));
    const auto b = composite_boundaries(kDefaultSequence);
    ASSERT_EQ(b.size(), 20u);
    EXPECT_EQ(b[9], 25);
    EXPECT_EQ(b.back(), 50);
}

TEST(LogicalClifford, transversal_action_on_code_basis) {
    const Qubit inputs[] = {{1, 0}, {0, 1}, kPlus, {M_SQRT1_2, Amplitude(0, M_SQRT1_2)}, {0.6, Amplitude(0.48, 0.64)}};
    for (G g : {G::kH, G::kP}) {
        for (const Qubit& in : inputs) {
            QuantumState data = encoded(in);
            NoiseContext ctx = NoiseContext::noiseless();
            apply_logical_clifford(data, g, ctx);
            QuantumState want = encoded(apply_matrix(ideal_gate_matrix(g), in));
            EXPECT_NEAR(overlap_fidelity(data, want), 1, 1e-10) << logical_gate_name(g);
        }
    }
}

TEST(LogicalClifford, examples) {
    NoiseContext ctx = NoiseContext::noiseless();
    QuantumState s = encode_ideal(0, 0);
    apply_logical_clifford(s, G::kH, ctx);
    EXPECT_NEAR(overlap_fidelity(s, encode_ideal(M_PI / 4, 0)), 1, 1e-10);
    apply_logical_clifford(s, G::kP, ctx);
    EXPECT_NEAR(overlap_fidelity(s, encode_ideal(M_PI / 4, M_PI / 2)), 1, 1e-10);

    QuantumState g = encode_ideal(0.3, 0.7);
    apply_logical_clifford(g, G::kH, ctx);
    apply_logical_clifford(g, G::kH, ctx);
    EXPECT_NEAR(overlap_fidelity(g, encode_ideal(0.3, 0.7)), 1, 1e-10);
    EXPECT_THROW(apply_logical_clifford(g, G::kT, ctx), std::invalid_argument);
}

TEST(LogicalClifford, weight_one_errors_stay_weight_one) {
    const QuantumState psi = encode_ideal(0.3, 0.7);
    for (G g : {G::kH, G::kP}) {
        QuantumState clean = psi;
        NoiseContext ctx = NoiseContext::noiseless();
        apply_logical_clifford(clean, g, ctx);
        for (std::size_t q = 0; q < kBlockSize; ++q) {
            for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                QuantumState s = psi;
                apply_pauli(s, PauliString::single(kBlockSize, q, p));
                apply_logical_clifford(s, g, ctx);
                bool found = false;
                for (Pauli r : {Pauli::X, Pauli::Y, Pauli::Z}) {
                    QuantumState t = clean;
                    apply_pauli(t, PauliString::single(kBlockSize, q, r));
                    found = found || overlap_fidelity(s, t) > 1 - 1e-10;
                }
                EXPECT_TRUE(found) << logical_gate_name(g) << " qubit " << q;
            }
        }
    }
}

TEST(LogicalT, fixes_zero) {
    QuantumState data = encode_ideal(0, 0);
    NoiseContext ctx = NoiseContext::noiseless(Rng(5));
    apply_logical_t(data, ctx);
    EXPECT_EQ(data.num_qubits(), kBlockSize);
    EXPECT_NEAR(overlap_fidelity(data, encode_ideal(0, 0)), 1, 1e-10);
    for (std::size_t k = 0; k < kBlockSize; ++k) EXPECT_EQ(data.labels()[k].role, QubitRole::kData);
}

TEST(LogicalT, both_branches_match_t_on_plus) {
    const Qubit want{M_SQRT1_2, std::polar(M_SQRT1_2, M_PI / 4)};
    for (ThetaPreparation prep : {ThetaPreparation::kUnverified, ThetaPreparation::kVerified}) {
        bool seen[2] = {false, false};
        for (std::uint64_t seed = 0; seed < 40 && !(seen[0] && seen[1]); ++seed) {
            QuantumState data = encode_ideal(M_PI / 4, 0);
            NoiseContext ctx = NoiseContext::noiseless(Rng(seed));
            const TGadgetOutcome out = apply_logical_t(data, ctx, prep);
            seen[out.logical_outcome] = true;
            EXPECT_NEAR(overlap_fidelity(data, encoded(want)), 1, 1e-10) << "outcome " << out.logical_outcome;
            EXPECT_NEAR(logical_fidelity(perfect_decode(data), want), 1, 1e-10);
        }
        EXPECT_TRUE(seen[0] && seen[1]);
    }
}

TEST(LogicalT, generic_input) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        QuantumState data = encode_ideal(0.3, 0.7);
        NoiseContext ctx = NoiseContext::noiseless(Rng(seed));
        apply_logical_t(data, ctx);
        EXPECT_NEAR(logical_fidelity(perfect_decode(data), kTOnGeneric), 1, 1e-7);
    }
}

TEST(LogicalT, twice_equals_p) {
    QuantumState tt = encode_ideal(M_PI / 4, 0);
    NoiseContext ctx = NoiseContext::noiseless(Rng(2));
    apply_logical_t(tt, ctx);
    apply_logical_t(tt, ctx);
    QuantumState p = encode_ideal(M_PI / 4, 0);
    apply_logical_clifford(p, G::kP, ctx);
    EXPECT_NEAR(overlap_fidelity(tt, p), 1, 1e-10);
}

TEST(LogicalT, verified_magic_state_noiseless) {
    NoiseContext ctx = NoiseContext::noiseless(Rng(9));
    const long before = ctx.tally().ancilla_qubits;
    QuantumState theta = prepare_theta(ctx, ThetaPreparation::kVerified);
    EXPECT_NEAR(overlap_fidelity(theta, encode_ideal(M_PI / 4, M_PI / 4)), 1, 1e-10);
    EXPECT_EQ(ctx.tally().ancilla_qubits, before);
}

TEST(Sequence, ideal_product_matches_reference) {
    const auto gates = compile_sequence(kDefaultSequence);
    const Qubit out = ideal_output(gates, {1, 0});
    EXPECT_NEAR(qubit_fidelity(out, kSequenceOnZero), 1, 1e-7);
}

TEST(Sequence, noiseless_encoded_run_decodes_to_product) {
    const auto gates = compile_sequence(kDefaultSequence);
    QuantumState data = encode_ideal(0, 0);
    NoiseContext ctx = NoiseContext::noiseless(Rng(1));
    for (G g : gates) apply_logical_gate(data, g, ctx);
    EXPECT_NEAR(logical_fidelity(perfect_decode(data), ideal_output(gates, {1, 0})), 1, 1e-9);
    EXPECT_NEAR(overlap_fidelity(data, encoded(ideal_output(gates, {1, 0}))), 1, 1e-9);
}
