"""Independent reference implementations used only by the test suite."""

from __future__ import annotations

from itertools import combinations

import numpy as np
from hypothesis import strategies as st

from qcpart.circuit import Circuit, Gate, GateKind


def _gate_matrix(g: Gate) -> np.ndarray:
    kind = g.kind
    if kind is GateKind.H:
        return np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    if kind is GateKind.X:
        return np.array([[0, 1], [1, 0]], dtype=complex)
    if kind is GateKind.RZ:
        t = g.angle
        return np.diag([np.exp(-0.5j * t), np.exp(0.5j * t)])
    if kind is GateKind.CNOT:
        m = np.eye(4, dtype=complex)
        m[[2, 3]] = m[[3, 2]]
        return m
    if kind is GateKind.CP:
        return np.diag([1, 1, 1, np.exp(1j * g.angle)])
    if kind is GateKind.SWAP:
        m = np.eye(4, dtype=complex)
        m[[1, 2]] = m[[2, 1]]
        return m
    if kind is GateKind.TOFFOLI:
        m = np.eye(8, dtype=complex)
        m[[6, 7]] = m[[7, 6]]
        return m
    if kind is GateKind.FREDKIN:
        m = np.eye(8, dtype=complex)
        m[[5, 6]] = m[[6, 5]]
        return m
    raise ValueError(f"no matrix for {kind}")


def unitary(circuit: Circuit) -> np.ndarray:
    """Dense unitary; qubit 0 is the most significant bit of the basis index."""
    n = circuit.num_qubits
    assert n <= 4, "test oracle only"
    dim = 2 ** n
    total = np.eye(dim, dtype=complex)
    for g in circuit.gates:
        local = _gate_matrix(g)
        ops = g.operands
        full = np.zeros((dim, dim), dtype=complex)
        for col in range(dim):
            bits = [(col >> (n - 1 - q)) & 1 for q in range(n)]
            sub = 0
            for q in ops:
                sub = (sub << 1) | bits[q]
            for sub_out in range(2 ** len(ops)):
                amp = local[sub_out, sub]
                if amp == 0:
                    continue
                out_bits = list(bits)
                for i, q in enumerate(ops):
                    out_bits[q] = (sub_out >> (len(ops) - 1 - i)) & 1
                row = sum(b << (n - 1 - q) for q, b in enumerate(out_bits))
                full[row, col] += amp
        total = full @ total
    return total


def equal_up_to_phase(u: np.ndarray, v: np.ndarray, atol: float = 1e-9) -> bool:
    idx = np.unravel_index(np.argmax(np.abs(v)), v.shape)
    if abs(u[idx]) < atol:
        return False
    phase = u[idx] / v[idx]
    return np.allclose(u, phase * v, atol=atol)


def pair_weights(circuit: Circuit) -> dict[tuple[int, int], int]:
    """Edge weights by direct counting over the gate list."""
    out: dict[tuple[int, int], int] = {}
    for g in circuit.gates:
        for u, v in combinations(sorted(g.operands), 2):
            out[(u, v)] = out.get((u, v), 0) + 1
    return out


def all_bisection_cuts(w: np.ndarray) -> list[int]:
    """Cut of every balanced bisection (first part of size ceil(n/2))."""
    n = w.shape[0]
    cuts = []
    for a in combinations(range(n), (n + 1) // 2):
        mask = np.zeros(n, dtype=bool)
        mask[list(a)] = True
        cuts.append(int(w[np.ix_(mask, ~mask)].sum()))
    return cuts


def mean_random_cut(w: np.ndarray) -> float:
    cuts = all_bisection_cuts(w)
    return sum(cuts) / len(cuts)


KINDS = list(GateKind)


@st.composite
def circuits(draw, max_qubits: int = 8, max_gates: int = 30) -> Circuit:
    n = draw(st.integers(1, max_qubits))
    kinds = [k for k in KINDS if k.arity <= n]
    gates = []
    for _ in range(draw(st.integers(0, max_gates))):
        kind = draw(st.sampled_from(kinds))
        ops = draw(st.permutations(range(n)))[: kind.arity]
        angle = None
        if kind.parameterized:
            angle = draw(st.floats(-2 * np.pi, 2 * np.pi, allow_nan=False))
        gates.append(Gate(kind, tuple(ops), angle))
    name = draw(st.text("abcdefgh0123456789_", min_size=1, max_size=8))
    return Circuit(n, tuple(gates), name)


@st.composite
def weight_matrices(draw, min_n: int = 2, max_n: int = 10, max_w: int = 6) -> np.ndarray:
    n = draw(st.integers(min_n, max_n))
    vals = draw(st.lists(st.integers(0, max_w), min_size=n * (n - 1) // 2,
                         max_size=n * (n - 1) // 2))
    w = np.zeros((n, n), dtype=np.int64)
    w[np.triu_indices(n, 1)] = vals
    return w + w.T


def random_circuit(rng: np.random.Generator, max_qubits: int = 10, max_gates: int = 40) -> Circuit:
    """Seeded random circuit over every gate kind (numpy-driven counterpart of ``circuits``)."""
    n = int(rng.integers(1, max_qubits + 1))
    kinds = [k for k in KINDS if k.arity <= n]
    gates = []
    for _ in range(int(rng.integers(0, max_gates + 1))):
        kind = kinds[int(rng.integers(len(kinds)))]
        ops = tuple(int(q) for q in rng.permutation(n)[: kind.arity])
        angle = float(rng.uniform(-np.pi, np.pi)) if kind.parameterized else None
        gates.append(Gate(kind, ops, angle))
    return Circuit(n, tuple(gates), f"rand{n}")


def random_weights(rng: np.random.Generator, min_n: int = 2, max_n: int = 10, max_w: int = 6) -> np.ndarray:
    n = int(rng.integers(min_n, max_n + 1))
    w = np.triu(rng.integers(0, max_w + 1, size=(n, n)), 1)
    return (w + w.T).astype(np.int64)
