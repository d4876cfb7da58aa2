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


#include "steanesim/noise_model.h"

#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "steanesim/rng.h"

using namespace steanesim;

namespace {

std::vector<FaultLocation> locations(int n) {
    std::vector<FaultLocation> out;
    for (int k = 0; k < n; ++k) out.push_back({{0, k}, {QubitRole::kData, k}, LocationKind::kGate});
    return out;
}

QuantumState zeros(int n) {
    std::vector<QubitLabel> labels;
    for (int k = 0; k < n; ++k) labels.push_back({QubitRole::kData, k});
    return QuantumState::basis(labels, 0);
}

}  // namespace

TEST(ErrorEnvironment, presets) {
    EXPECT_EQ(ErrorEnvironment::preset("depolarizing", 0.01), (ErrorEnvironment{0.01, 0.01, 0.01}));
    ErrorEnvironment x = ErrorEnvironment::preset("x-dominant", 1e-3);
    EXPECT_EQ(x.px, 1e-3);
    EXPECT_EQ(x.py, kMinorityRate);
    EXPECT_EQ(x.pz, kMinorityRate);
    EXPECT_EQ(ErrorEnvironment::preset("z-dominant", 1e-3).pz, 1e-3);
    EXPECT_EQ(ErrorEnvironment::preset("y-dominant", 1e-3).py, 1e-3);
    EXPECT_THROW(ErrorEnvironment::preset("amplitude-damping", 1e-3), std::invalid_argument);
    EXPECT_THROW((ErrorEnvironment{0.5, 0.4, 0.2}).validate(), std::invalid_argument);
    EXPECT_THROW((ErrorEnvironment{-0.1, 0, 0}).validate(), std::invalid_argument);
}

TEST(SampleFault, degenerate_environments) {
    Rng rng(1);
    for (int k = 0; k < 1000; ++k) {
        ASSERT_EQ(sample_fault({0, 0, 0}, rng), Pauli::I);
        ASSERT_EQ(sample_fault({1, 0, 0}, rng), Pauli::X);
    }
}

TEST(SampleFault, depolarizing_frequencies) {
    Rng rng(2024);
    const ErrorEnvironment env = ErrorEnvironment::depolarizing(0.01);
    const int n = 1'000'000;
    int counts[4] = {};
    for (int k = 0; k < n; ++k) ++counts[static_cast<int>(sample_fault(env, rng))];
    const double sigma = std::sqrt(n * 0.01 * 0.99);
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        EXPECT_LT(std::abs(counts[static_cast<int>(p)] - n * 0.01), 5 * sigma) << pauli_char(p);
    }
}

TEST(Enumeration, empty_location_list) {
    EnumerationResult r = enumerate_configurations({}, ErrorEnvironment::depolarizing(0.01), 2);
    ASSERT_EQ(r.configurations.size(), 1u);
    EXPECT_EQ(r.configurations[0].weight(), 0u);
    EXPECT_DOUBLE_EQ(r.configurations[0].probability, 1.0);
    EXPECT_DOUBLE_EQ(r.remainder, 0.0);
}

TEST(Enumeration, two_locations_weight_one) {
    auto locs = locations(2);
    EnumerationResult r = enumerate_configurations(locs, ErrorEnvironment::depolarizing(0.01), 1);
    EXPECT_EQ(r.configurations.size(), 7u);
    std::set<std::pair<std::size_t, Pauli>> seen;
    for (const auto& c : r.configurations) {
        if (c.weight() == 1) seen.insert({c.assignments[0].location, c.assignments[0].pauli});
    }
    EXPECT_EQ(seen.size(), 6u);
}

TEST(Enumeration, closed_form_weight_two_mass) {
    for (int n : {1, 5, 12}) {
        for (double p : {1e-3, 1e-2, 0.05}) {
            auto locs = locations(n);
            EnumerationResult r = enumerate_configurations(locs, ErrorEnvironment::depolarizing(p), 2);
            double sum = 0;
            for (const auto& c : r.configurations) sum += c.probability;
            const double q = 1 - 3 * p;
            const double want = std::pow(q, n) + n * 3 * p * std::pow(q, n - 1) +
                                n * (n - 1) / 2.0 * 9 * p * p * std::pow(q, n - 2);
            EXPECT_NEAR(sum, want, 1e-13) << "n=" << n << " p=" << p;
            EXPECT_NEAR(r.remainder, 1 - want, 1e-12);
            EXPECT_NEAR(weight_tail_probability(n, 3 * p, 2), 1 - want, 1e-12);
        }
    }
}

TEST(Enumeration, configuration_cap) {
    auto locs = locations(30);
    EXPECT_THROW(enumerate_configurations(locs, ErrorEnvironment::depolarizing(0.01), 2, 100), std::length_error);
}

TEST(Enumeration, counting_helpers) {
    EXPECT_EQ(configuration_count(10, 0), 1u);
    EXPECT_EQ(configuration_count(10, 1), 30u);
    EXPECT_EQ(configuration_count(10, 2), 45u * 9u);
    EXPECT_EQ(configuration_count(3, 4), 0u);
    EXPECT_EQ(configuration_count(1'000'000, 40), std::numeric_limits<std::uint64_t>::max());

    double total = 0;
    for (int w = 0; w <= 20; ++w) total += weight_class_probability(20, 0.1, w);
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_NEAR(weight_class_probability(20, 0.1, 1), 20 * 0.1 * std::pow(0.9, 19), 1e-14);
}

TEST(NoiseContext, noiseless_gate_matches_ideal) {
    NoiseContext ctx = NoiseContext::noiseless();
    QuantumState a = zeros(2);
    QuantumState b = zeros(2);
    ctx.gate(a, GateKind::H, {QubitRole::kData, 0});
    ctx.cnot(a, {QubitRole::kData, 0}, {QubitRole::kData, 1});
    apply_gate(b, GateKind::H, 0);
    apply_cnot(b, 0, 1);
    EXPECT_NEAR(overlap_fidelity(a, b), 1, 1e-14);
    EXPECT_EQ(ctx.locations_executed(), 3);
}

TEST(NoiseContext, cnot_under_certain_x_faults) {
    NoiseContext ctx = NoiseContext::monte_carlo({1, 0, 0}, Rng(4));
    QuantumState s = zeros(2);
    ctx.gate(s, GateKind::H, {QubitRole::kData, 0});
    ctx.cnot(s, {QubitRole::kData, 0}, {QubitRole::kData, 1});
    // H then X on qubit 0 leaves |+>; CNOT builds a Bell pair; X on both keeps it.
    const double r = std::sqrt(0.5);
    QuantumState bell = QuantumState::from_amplitudes({r, 0, 0, r}, s.labels());
    EXPECT_NEAR(overlap_fidelity(s, bell), 1, 1e-14);

    NoiseContext ctx2 = NoiseContext::monte_carlo({1, 0, 0}, Rng(4));
    QuantumState t = zeros(2);
    ctx2.cnot(t, {QubitRole::kData, 0}, {QubitRole::kData, 1});
    EXPECT_NEAR(std::norm(t.amplitudes()[3]), 1, 1e-14);
}

TEST(NoiseContext, scripted_fault_lands_on_its_location) {
    NoiseContext ctx = NoiseContext::scripted({{{0, 1}, Pauli::X}}, Rng(1));
    ctx.set_recording(true);
    QuantumState s = zeros(2);
    ctx.gate(s, GateKind::X, {QubitRole::kData, 0});  // ordinal 0
    ctx.gate(s, GateKind::X, {QubitRole::kData, 1});  // ordinal 1, faulted back to |0>
    EXPECT_NEAR(std::norm(s.amplitudes()[0b10]), 1, 1e-14);
    ASSERT_EQ(ctx.recorded().size(), 2u);
    EXPECT_EQ(ctx.recorded()[1].key, (LocationKey{0, 1}));
    EXPECT_EQ(ctx.recorded()[1].qubit, (QubitLabel{QubitRole::kData, 1}));
}

TEST(NoiseContext, scripted_limit_suppresses_extra_locations) {
    NoiseContext ctx = NoiseContext::scripted({{{3, 1}, Pauli::X}}, Rng(1), {{3, 1}});
    ctx.begin_segment(3);
    QuantumState s = zeros(1);
    ctx.gate(s, GateKind::Z, {QubitRole::kData, 0});
    ctx.gate(s, GateKind::Z, {QubitRole::kData, 0});
    EXPECT_NEAR(std::norm(s.amplitudes()[0]), 1, 1e-14);
}

TEST(NoiseContext, depth_counts_parallel_gates_once) {
    NoiseContext ctx = NoiseContext::noiseless();
    QuantumState s = zeros(3);
    for (int k = 0; k < 3; ++k) ctx.gate(s, GateKind::H, {QubitRole::kData, k});
    EXPECT_EQ(ctx.time_steps(), 1);
    ctx.cnot(s, {QubitRole::kData, 0}, {QubitRole::kData, 1});
    ctx.gate(s, GateKind::H, {QubitRole::kData, 2});
    EXPECT_EQ(ctx.time_steps(), 2);
    ctx.cnot(s, {QubitRole::kData, 1}, {QubitRole::kData, 2});
    EXPECT_EQ(ctx.time_steps(), 3);
}

TEST(Rng, streams_are_reproducible_and_distinct) {
    Rng a = Rng::for_stream(42, {7});
    Rng b = Rng::for_stream(42, {7});
    Rng c = Rng::for_stream(42, {8});
    Rng d = Rng::for_stream(43, {7});
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
    EXPECT_NE(x, d.next());
    for (int k = 0; k < 1000; ++k) {
        double u = a.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        ASSERT_LT(a.below(7), 7u);
    }
}
