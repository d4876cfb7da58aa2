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

#include "steanesim/pauli_string.h"

#include <stdexcept>

namespace steanesim {

namespace {

struct Product {
    Pauli result;
    std::uint8_t phase;
};

// a * b = i^phase * result
constexpr Product kProductTable[4][4] = {
    {{Pauli::I, 0}, {Pauli::X, 0}, {Pauli::Y, 0}, {Pauli::Z, 0}},
    {{Pauli::X, 0}, {Pauli::I, 0}, {Pauli::Z, 1}, {Pauli::Y, 3}},
    {{Pauli::Y, 0}, {Pauli::Z, 3}, {Pauli::I, 0}, {Pauli::X, 1}},
    {{Pauli::Z, 0}, {Pauli::Y, 1}, {Pauli::X, 3}, {Pauli::I, 0}},
};

bool has_x(Pauli p) { return p == Pauli::X || p == Pauli::Y; }
bool has_z(Pauli p) { return p == Pauli::Z || p == Pauli::Y; }

}  // namespace

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli label: '") + c + "'");
    }
}

PauliString::PauliString(std::size_t num_qubits) : ops_(num_qubits, Pauli::I) {}

PauliString PauliString::from_str(std::string_view text) {
    std::uint8_t phase = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        if (text.front() == '-') {
            phase = 2;
        }
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        phase = (phase + 1) & 3;
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    for (std::size_t k = 0; k < text.size(); ++k) {
        result.ops_[k] = pauli_from_char(text[k]);
    }
    result.phase_ = phase;
    return result;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, Pauli p) {
    if (qubit >= num_qubits) {
        throw std::out_of_range("Pauli qubit index out of range");
    }
    PauliString result(num_qubits);
    result.ops_[qubit] = p;
    return result;
}

void PauliString::set(std::size_t q, Pauli p) {
    if (q >= ops_.size()) {
        throw std::out_of_range("Pauli qubit index out of range");
    }
    ops_[q] = p;
}

std::complex<double> PauliString::phase_factor() const {
    constexpr std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPhases[phase_];
}

std::size_t PauliString::weight() const {
    std::size_t w = 0;
    for (Pauli p : ops_) {
        w += p != Pauli::I;
    }
    return w;
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("Pauli length mismatch");
    }
    bool anti = false;
    for (std::size_t k = 0; k < ops_.size(); ++k) {
        Pauli a = ops_[k];
        Pauli b = other.ops_[k];
        anti ^= a != Pauli::I && b != Pauli::I && a != b;
    }
    return !anti;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
    if (rhs.size() != size()) {
        throw std::invalid_argument("Pauli length mismatch");
    }
    unsigned phase = phase_ + rhs.phase_;
    for (std::size_t k = 0; k < ops_.size(); ++k) {
        const Product& prod = kProductTable[static_cast<int>(ops_[k])][static_cast<int>(rhs.ops_[k])];
        ops_[k] = prod.result;
        phase += prod.phase;
    }
    phase_ = phase & 3;
    return *this;
}

std::uint64_t PauliString::x_mask() const {
    std::uint64_t mask = 0;
    const std::size_t n = ops_.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (has_x(ops_[k])) {
            mask |= std::uint64_t{1} << (n - 1 - k);
        }
    }
    return mask;
}

std::uint64_t PauliString::z_mask() const {
    std::uint64_t mask = 0;
    const std::size_t n = ops_.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (has_z(ops_[k])) {
            mask |= std::uint64_t{1} << (n - 1 - k);
        }
    }
    return mask;
}

std::string PauliString::str() const {
    static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (Pauli p : ops_) {
        out.push_back(pauli_char(p));
    }
    return out;
}

}  // namespace steanesim
