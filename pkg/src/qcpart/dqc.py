"""Distributed circuit view: gate locality, teleportation cost, reports."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations

from .circuit import Circuit, Gate
from .errors import InvalidArgumentError, UndefinedImprovementError
from .graph import build_graph, cut_weight
from .io import circuit_to_dict
from .partitioning import Partitioning


def round_half_away(x: float) -> int:
    """Round to the nearest integer, halves away from zero."""
    return int(math.copysign(math.floor(abs(x) + 0.5), x))


def improvement_percent(proposed: int, baseline: float) -> int:
    """Percentage reduction of ``proposed`` relative to ``baseline``, rounded."""
    if baseline == 0:
        if proposed == 0:
            return 0
        raise UndefinedImprovementError(
            f"improvement over a zero baseline is undefined (proposed={proposed})"
        )
    if baseline < 0:
        raise InvalidArgumentError(f"baseline must be non-negative, got {baseline}")
    return round_half_away((baseline - proposed) / baseline * 100.0)


@dataclass(frozen=True)
class ScheduledGate:
    gate: Gate
    parts: tuple[int, ...]  # ascending part ids touched by the gate
    crossing: int  # crossing qubit-pair count contributed to the cut

    @property
    def is_global(self) -> bool:
        return len(self.parts) > 1

    @property
    def locality(self) -> str:
        return "global" if self.is_global else "local"


@dataclass
class CostReport:
    """Communication metrics of a distributed circuit.

    ``teleportation_cost`` counts crossing qubit pairs (cut weight);
    ``global_gate_count`` counts gates. They differ only when a 3-qubit
    gate is split, which adds 2 or 3 to the former but 1 to the latter.
    """

    global_gate_count: int
    teleportation_cost: int
    per_pair_traffic: dict[tuple[int, int], int]
    part_sizes: list[int]
    local_gate_count: int = 0

    def to_dict(self) -> dict:
        return {
            "global_gate_count": self.global_gate_count,
            "teleportation_cost": self.teleportation_cost,
            "local_gate_count": self.local_gate_count,
            "part_sizes": list(self.part_sizes),
            "per_pair_traffic": [{"parts": list(pq), "weight": w}
                                 for pq, w in sorted(self.per_pair_traffic.items())],
        }


@dataclass
class DistributedCircuit:
    circuit: Circuit
    partitioning: Partitioning
    schedule: list[ScheduledGate] = field(default_factory=list)
    metrics: CostReport | None = None

    @property
    def partitions(self) -> list[tuple[int, tuple[int, ...]]]:
        return list(enumerate(self.partitioning.parts))

    def global_gates(self) -> list[ScheduledGate]:
        return [s for s in self.schedule if s.is_global]

    def to_dict(self) -> dict:
        gates = circuit_to_dict(self.circuit)["gates"]
        return {
            "name": self.circuit.name,
            "qubits": self.circuit.num_qubits,
            "partitions": [{"id": i, "qubits": list(p)} for i, p in self.partitions],
            "schedule": [{"gate": g, "locality": s.locality, "parts": list(s.parts)}
                         for g, s in zip(gates, self.schedule)],
            "metrics": self.metrics.to_dict(),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def render_text(self) -> str:
        """Plain-text listing: one block per partition, then global gates."""
        m = self.metrics
        lines = [f"{self.circuit.name}: {self.circuit.num_qubits} qubits, "
                 f"{len(self.circuit)} gates, {self.partitioning.k} partitions"]
        for pid, qubits in self.partitions:
            local = [s for s in self.schedule if not s.is_global and s.parts == (pid,)]
            lines.append(f"[P{pid}] qubits: {' '.join(f'q{q}' for q in qubits)}")
            lines.append(f"  local gates: {len(local)}")
            for s in local:
                lines.append(f"    {s.gate}")
        lines.append(f"global gates: {m.global_gate_count}")
        for s in self.global_gates():
            lines.append(f"    {s.gate}  parts={'|'.join(f'P{p}' for p in s.parts)}")
        lines.append(f"teleportations: {m.teleportation_cost}")
        return "\n".join(lines)


def distribute(circuit: Circuit, partitioning: Partitioning) -> DistributedCircuit:
    """Annotate every gate with its locality and compute the cost report."""
    n = circuit.num_qubits
    if not partitioning.covers(n):
        raise InvalidArgumentError(
            f"partitioning covers {partitioning.num_vertices} qubits, circuit has {n}"
        )
    where = partitioning.assignment().tolist()
    schedule = []
    traffic: dict[tuple[int, int], int] = {}
    for g in circuit.gates:
        crossing = 0
        for u, v in combinations(g.operands, 2):
            pu, pv = where[u], where[v]
            if pu != pv:
                crossing += 1
                key = (min(pu, pv), max(pu, pv))
                traffic[key] = traffic.get(key, 0) + 1
        parts = tuple(sorted({where[q] for q in g.operands}))
        schedule.append(ScheduledGate(g, parts, crossing))

    n_global = sum(1 for s in schedule if s.is_global)
    report = CostReport(
        global_gate_count=n_global,
        teleportation_cost=sum(s.crossing for s in schedule),
        per_pair_traffic=traffic,
        part_sizes=list(partitioning.sizes),
        local_gate_count=len(schedule) - n_global,
    )
    if __debug__:
        assert report.teleportation_cost == cut_weight(build_graph(circuit), partitioning)
    return DistributedCircuit(circuit, partitioning, schedule, report)
