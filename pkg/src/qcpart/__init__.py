"""Partition monolithic quantum circuits into distributed circuits.

Circuits become weighted qubit-interaction graphs whose cut weight is the
number of teleportations; recursive Kernighan-Lin bisection minimises it.
"""

from .circuit import Circuit, Gate, GateKind, decompose, generate_qft
from .dqc import CostReport, DistributedCircuit, distribute, improvement_percent
from .errors import (InvalidArgumentError, ParseError, QCPartError, SizeLimitError,
                     UndefinedImprovementError, UnsupportedGateError)
from .graph import InteractionGraph, build_graph, cut_weight, internal_weight, total_weight
from .io import parse_json, parse_real, read_circuit, write_json
from .partitioner import (brute_force_optimum, expected_random_cut, kl_bipartition,
                          random_baseline, random_partition, recursive_kway)
from .partitioning import Partitioning

__version__ = "0.1.0"

__all__ = [
    "Circuit", "Gate", "GateKind", "decompose", "generate_qft",
    "CostReport", "DistributedCircuit", "distribute", "improvement_percent",
    "InvalidArgumentError", "ParseError", "QCPartError", "SizeLimitError",
    "UndefinedImprovementError", "UnsupportedGateError",
    "InteractionGraph", "build_graph", "cut_weight", "internal_weight", "total_weight",
    "parse_json", "parse_real", "read_circuit", "write_json",
    "brute_force_optimum", "expected_random_cut", "kl_bipartition", "random_baseline",
    "random_partition", "recursive_kway", "Partitioning",
]
