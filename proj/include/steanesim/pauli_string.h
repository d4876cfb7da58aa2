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

#ifndef STEANESIM_PAULI_STRING_H
#define STEANESIM_PAULI_STRING_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace steanesim {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Tensor product of single-qubit Paulis with an overall phase i^k.
///
/// Qubit 0 is the leftmost tensor factor, matching the register ordering of
/// QuantumState.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t num_qubits);

    /// Parses strings like "XIZY", "+XX", "-iZ_Z" ('_' and 'I' are identity).
    static PauliString from_str(std::string_view text);
    static PauliString single(std::size_t num_qubits, std::size_t qubit, Pauli p);

    std::size_t size() const { return ops_.size(); }
    Pauli operator[](std::size_t q) const { return ops_[q]; }
    void set(std::size_t q, Pauli p);

    /// Exponent k of the phase i^k, in [0, 4).
    std::uint8_t phase() const { return phase_; }
    void set_phase(std::uint8_t k) { phase_ = k & 3; }
    std::complex<double> phase_factor() const;

    std::size_t weight() const;
    bool is_identity() const { return weight() == 0; }
    bool commutes_with(const PauliString& other) const;

    /// True when the operators agree up to the phase.
    bool same_up_to_phase(const PauliString& other) const { return ops_ == other.ops_; }

    PauliString& operator*=(const PauliString& rhs);
    friend PauliString operator*(PauliString lhs, const PauliString& rhs) {
        lhs *= rhs;
        return lhs;
    }
    bool operator==(const PauliString& other) const = default;

    /// Bit masks over a register of the same size; position k maps to bit (n-1-k).
    std::uint64_t x_mask() const;
    std::uint64_t z_mask() const;

    std::string str() const;

   private:
    std::vector<Pauli> ops_;
    std::uint8_t phase_ = 0;
};

}  // namespace steanesim

#endif
