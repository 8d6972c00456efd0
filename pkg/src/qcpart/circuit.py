"""Circuit model, QFT generation and lowering to {1-qubit, CNOT}.

Qubits are 0-based. ``Gate`` and ``Circuit`` are immutable value objects;
every constructor validates its invariants so an invalid circuit can never
be observed downstream.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArgumentError


class GateKind(enum.Enum):
    """Gate families. The value is the serialised name."""

    H = "h"
    X = "x"
    RZ = "rz"
    GENERIC1 = "generic1"
    CNOT = "cnot"
    CP = "cp"
    SWAP = "swap"
    GENERIC2 = "generic2"
    TOFFOLI = "toffoli"
    FREDKIN = "fredkin"
    GENERIC3 = "generic3"

    @property
    def arity(self) -> int:
        return _ARITY[self]

    @property
    def parameterized(self) -> bool:
        return self in (GateKind.RZ, GateKind.CP)


_ARITY = {
    GateKind.H: 1,
    GateKind.X: 1,
    GateKind.RZ: 1,
    GateKind.GENERIC1: 1,
    GateKind.CNOT: 2,
    GateKind.CP: 2,
    GateKind.SWAP: 2,
    GateKind.GENERIC2: 2,
    GateKind.TOFFOLI: 3,
    GateKind.FREDKIN: 3,
    GateKind.GENERIC3: 3,
}

# Kinds that ``decompose`` leaves untouched. Generic multi-qubit gates are
# opaque (no matrix attached), so they pass through as well.
BASIC_KINDS = frozenset(
    {GateKind.H, GateKind.X, GateKind.RZ, GateKind.GENERIC1, GateKind.CNOT,
     GateKind.GENERIC2, GateKind.GENERIC3}
)


@dataclass(frozen=True)
class Gate:
    """One circuit operation.

    For controlled kinds the controls come first: ``CNOT(c, t)``,
    ``CP(c, t)``, ``TOFFOLI(c1, c2, t)``, ``FREDKIN(c, t1, t2)``.
    """

    kind: GateKind
    operands: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self):
        if not isinstance(self.kind, GateKind):
            raise InvalidArgumentError(f"unknown gate kind {self.kind!r}")
        ops = tuple(self.operands)
        object.__setattr__(self, "operands", ops)
        if len(ops) != self.kind.arity:
            raise InvalidArgumentError(
                f"{self.kind.value} takes {self.kind.arity} operand(s), got {len(ops)}"
            )
        for q in ops:
            if isinstance(q, bool) or not isinstance(q, int) or q < 0:
                raise InvalidArgumentError(f"invalid qubit index {q!r}")
        if len(set(ops)) != len(ops):
            raise InvalidArgumentError(f"duplicate operand in {self.kind.value}{ops}")
        if self.kind.parameterized:
            if self.angle is None:
                raise InvalidArgumentError(f"{self.kind.value} requires an angle")
            object.__setattr__(self, "angle", float(self.angle))
        elif self.angle is not None:
            raise InvalidArgumentError(f"{self.kind.value} takes no angle")

    @property
    def arity(self) -> int:
        return len(self.operands)

    def __str__(self) -> str:
        ops = ",".join(f"q{q}" for q in self.operands)
        if self.angle is not None:
            return f"{self.kind.name}({self.angle:.6g}) {ops}"
        return f"{self.kind.name} {ops}"


def h(q: int) -> Gate:
    return Gate(GateKind.H, (q,))


def x(q: int) -> Gate:
    return Gate(GateKind.X, (q,))


def rz(q: int, angle: float) -> Gate:
    return Gate(GateKind.RZ, (q,), angle)


def cnot(control: int, target: int) -> Gate:
    return Gate(GateKind.CNOT, (control, target))


def cp(control: int, target: int, angle: float) -> Gate:
    return Gate(GateKind.CP, (control, target), angle)


def swap(a: int, b: int) -> Gate:
    return Gate(GateKind.SWAP, (a, b))


def toffoli(c1: int, c2: int, target: int) -> Gate:
    return Gate(GateKind.TOFFOLI, (c1, c2, target))


def fredkin(control: int, t1: int, t2: int) -> Gate:
    return Gate(GateKind.FREDKIN, (control, t1, t2))


@dataclass(frozen=True)
class Circuit:
    """A monolithic circuit: qubit count plus an ordered gate sequence."""

    num_qubits: int
    gates: tuple[Gate, ...] = ()
    name: str = "circuit"

    def __post_init__(self):
        n = self.num_qubits
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise InvalidArgumentError(f"num_qubits must be a positive integer, got {n!r}")
        gates = tuple(self.gates)
        object.__setattr__(self, "gates", gates)
        for i, g in enumerate(gates):
            if not isinstance(g, Gate):
                raise InvalidArgumentError(f"gate {i} is not a Gate: {g!r}")
            for q in g.operands:
                if q >= n:
                    raise InvalidArgumentError(
                        f"gate {i} ({g}) addresses qubit {q} outside [0, {n})"
                    )

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def count(self, kind: GateKind) -> int:
        return sum(1 for g in self.gates if g.kind is kind)

    def counts(self) -> Counter:
        """Gate counts keyed by kind."""
        return Counter(g.kind for g in self.gates)

    def with_gates(self, gates: Iterable[Gate], name: str | None = None) -> "Circuit":
        return Circuit(self.num_qubits, tuple(gates), self.name if name is None else name)


def generate_qft(n: int, decomposed: bool = True) -> Circuit:
    """Build the n-qubit quantum Fourier transform, terminal swaps included.

    Parameters
    ----------
    n : int
        Number of qubits, at least 1.
    decomposed : bool
        If true, controlled phases and swaps are lowered to CNOT plus
        single-qubit rotations (2 CNOTs per CP, 3 per SWAP).

    Returns
    -------
    Circuit
        Named ``qft{n}``.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f"QFT size must be a positive integer, got {n!r}")
    gates: list[Gate] = []
    for i in range(n):
        gates.append(h(i))
        for j in range(i + 1, n):
            gates.append(cp(j, i, math.pi / 2 ** (j - i)))
    for i in range(n // 2):
        gates.append(swap(i, n - 1 - i))
    circuit = Circuit(n, tuple(gates), f"qft{n}")
    return decompose(circuit) if decomposed else circuit


def _lower_cp(g: Gate) -> list[Gate]:
    a, b = g.operands
    theta = g.angle
    return [rz(a, theta / 2), cnot(a, b), rz(b, -theta / 2), cnot(a, b), rz(b, theta / 2)]


def _lower_swap(g: Gate) -> list[Gate]:
    a, b = g.operands
    return [cnot(a, b), cnot(b, a), cnot(a, b)]


def _lower_toffoli(c1: int, c2: int, t: int) -> list[Gate]:
    # T = Rz(pi/4) up to global phase.
    q = math.pi / 4
    return [
        h(t),
        cnot(c2, t), rz(t, -q),
        cnot(c1, t), rz(t, q),
        cnot(c2, t), rz(t, -q),
        cnot(c1, t), rz(c2, q), rz(t, q),
        h(t),
        cnot(c1, c2), rz(c1, q), rz(c2, -q),
        cnot(c1, c2),
    ]


def _lower(g: Gate) -> list[Gate]:
    kind = g.kind
    if kind in BASIC_KINDS:
        return [g]
    if kind is GateKind.CP:
        return _lower_cp(g)
    if kind is GateKind.SWAP:
        return _lower_swap(g)
    if kind is GateKind.TOFFOLI:
        return _lower_toffoli(*g.operands)
    if kind is GateKind.FREDKIN:
        c, t1, t2 = g.operands
        return [cnot(t2, t1), *_lower_toffoli(c, t1, t2), cnot(t2, t1)]
    raise AssertionError(f"no lowering for {kind}")  # pragma: no cover


def decompose(circuit: Circuit) -> Circuit:
    """Lower every non-basic gate to CNOT plus single-qubit gates.

    No ancillae are introduced, so ``num_qubits`` is unchanged. Generic
    multi-qubit gates carry no matrix and are passed through as-is.
    """
    out: list[Gate] = []
    for g in circuit.gates:
        out.extend(_lower(g))
    return circuit.with_gates(out)


def is_basic(circuit: Circuit) -> bool:
    return all(g.kind in BASIC_KINDS for g in circuit.gates)


def multi_qubit_gates(gates: Sequence[Gate]) -> list[Gate]:
    return [g for g in gates if g.arity >= 2]
