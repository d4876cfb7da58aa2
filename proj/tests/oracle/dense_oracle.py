# Copyright 2026 The steanesim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Dense-matrix reference values frozen into the C++ unit tests.

Everything here is built from 128x128 matrices with numpy, independently of
the C++ engine. Qubit 0 is the most significant bit of the basis index.
Run with `python3 tests/oracle/dense_oracle.py`.
"""

import itertools

import numpy as np

N = 7
I2 = np.eye(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.diag([1, -1]).astype(complex)
Y = 1j * X @ Z
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
P = np.diag([1, 1j])
T = np.diag([1, np.exp(1j * np.pi / 4)])
PAULI = {"I": I2, "X": X, "Y": Y, "Z": Z}


def op(single, q):
    mats = [I2] * N
    mats[q] = single
    out = np.array([[1.0 + 0j]])
    for m in mats:
        out = np.kron(out, m)
    return out


def pauli(text):
    out = np.array([[1.0 + 0j]])
    for c in text:
        out = np.kron(out, PAULI[c])
    return out


def cnot(c, t):
    dim = 2**N
    m = np.zeros((dim, dim), dtype=complex)
    for b in range(dim):
        bits = [(b >> (N - 1 - k)) & 1 for k in range(N)]
        if bits[c]:
            bits[t] ^= 1
        m[sum(bit << (N - 1 - k) for k, bit in enumerate(bits)), b] = 1
    return m


ENCODER = [("CNOT", 0, 5), ("CNOT", 0, 6), ("H", 1), ("H", 2), ("H", 3),
           ("CNOT", 1, 0), ("CNOT", 1, 4), ("CNOT", 1, 5),
           ("CNOT", 2, 0), ("CNOT", 2, 4), ("CNOT", 2, 6),
           ("CNOT", 3, 4), ("CNOT", 3, 5), ("CNOT", 3, 6)]


def gate_matrix(g):
    return cnot(g[1], g[2]) if g[0] == "CNOT" else op(H, g[1])


U_ENC = np.eye(2**N, dtype=complex)
for g in ENCODER:
    U_ENC = gate_matrix(g) @ U_ENC


def encode(a0, a1):
    v = np.zeros(2**N, dtype=complex)
    v[0] = a0
    v[1 << (N - 1)] = a1
    return U_ENC @ v


def decode_rho(psi):
    w = U_ENC.conj().T @ psi
    half = 2 ** (N - 1)
    a, b = w[:half], w[half:]
    return np.array([[a @ a.conj(), a @ b.conj()], [b @ a.conj(), b @ b.conj()]])


def supports():
    return [[j for j in range(N) if ((j + 1) >> r) & 1] for r in range(3)]


def generator(kind, r):
    return pauli("".join(kind if j in supports()[r] else "I" for j in range(N)))


def recovery(zs, xs):
    ops = ["I"] * N
    if zs:
        ops[zs - 1] = "X"
    if xs:
        ops[xs - 1] = "Y" if ops[xs - 1] == "X" else "Z"
    return pauli("".join(ops))


def perfect_sm(psi):
    gens = [generator("Z", r) for r in range(3)] + [generator("X", r) for r in range(3)]
    out = []
    for bits in itertools.product([0, 1], repeat=6):
        proj = np.eye(2**N, dtype=complex)
        for g, s in zip(gens, bits):
            proj = proj @ (np.eye(2**N) + (-1) ** s * g) / 2
        v = proj @ psi
        w = np.vdot(v, v).real
        if w < 1e-15:
            continue
        zs = bits[0] | bits[1] << 1 | bits[2] << 2
        xs = bits[3] | bits[4] << 1 | bits[5] << 2
        out.append((w, recovery(zs, xs) @ v / np.sqrt(w)))
    return out


def logical_fid(rho, phi):
    return (phi.conj() @ rho @ phi).real


zero_l = encode(1, 0)
print("decoded <0|rho|0> for X_j|0_L>:", [float(round(logical_fid(decode_rho(op(X, j) @ zero_l), np.array([1, 0])), 12)) for j in range(N)])
print("decoded <0|rho|0> for Z_j|0_L>:", [float(round(logical_fid(decode_rho(op(Z, j) @ zero_l), np.array([1, 0])), 12)) for j in range(N)])
plus_l = encode(1 / np.sqrt(2), 1 / np.sqrt(2))
plus = np.array([1, 1]) / np.sqrt(2)
print("decoded <+|rho|+> for Z_j|+_L>:", [float(round(logical_fid(decode_rho(op(Z, j) @ plus_l), plus), 12)) for j in range(N)])

ens = perfect_sm(op(X, 1) @ op(X, 5) @ zero_l)
rho = sum(w * np.outer(v, v.conj()) for w, v in ens)
rho_l = sum(w * decode_rho(v) for w, v in ens)
print("X1 X5 |0_L> after perfect SM: logical fidelity",
      float(round(logical_fid(rho_l, np.array([1, 0])), 12)),
      "physical fidelity", float(round(abs(np.vdot(zero_l, rho @ zero_l)), 12)))

seq = "ABBBAAAABBABABABBBAA"
phi = np.array([1, 0], dtype=complex)
for ch in seq:
    for m in ([T, P, H] if ch == "A" else [T, H]):
        phi = m @ phi
print("U|0> =", np.round(phi, 15))
prefix = 0
positions = []
for k, ch in enumerate(seq):
    prefix += 3 if ch == "A" else 2
    if (k + 1) % 10 == 0:
        positions.append(prefix)
print("q=2 positions:", positions)
alpha, beta = 0.3, 0.7
psi = np.array([np.cos(alpha), np.exp(1j * beta) * np.sin(alpha)])
print("T psi(0.3,0.7) =", np.round(T @ psi, 15))
