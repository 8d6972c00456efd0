import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qcpart.circuit import Circuit, cnot, generate_qft, toffoli
from qcpart.errors import InvalidArgumentError
from qcpart.graph import (InteractionGraph, build_graph, cut_weight, internal_weight,
                          total_weight)
from qcpart.partitioning import Partitioning

from oracles import circuits, pair_weights


def test_repeated_cnot():
    g = build_graph(Circuit(2, (cnot(0, 1),) * 3))
    assert list(g.edges()) == [(0, 1, 3)]


def test_native_toffoli_three_edges():
    g = build_graph(Circuit(3, (toffoli(0, 1, 2),)))
    assert list(g.edges()) == [(0, 1, 1), (0, 2, 1), (1, 2, 1)]
    assert total_weight(g) == 3


def test_qft8():
    g = build_graph(generate_qft(8, True))
    for u, v, w in g.edges():
        assert w == (5 if u + v == 7 else 2)
    assert len(list(g.edges())) == 28
    assert total_weight(g) == 68


def test_qft16_total():
    assert total_weight(build_graph(generate_qft(16, True))) == math.comb(16, 2) * 2 + 8 * 3 == 264


def test_empty_graph():
    assert total_weight(InteractionGraph.empty(3)) == 0
    assert total_weight(build_graph(Circuit(4))) == 0


class TestCut:
    qft4 = build_graph(generate_qft(4, True))

    def test_single_part(self):
        assert cut_weight(self.qft4, Partitioning.single(range(4))) == 0

    def test_mirror_split(self):
        assert cut_weight(self.qft4, Partitioning(((0, 3), (1, 2)))) == 8

    def test_singletons(self):
        p = Partitioning(((0,), (1,), (2,), (3,)))
        assert cut_weight(self.qft4, p) == 18 == total_weight(self.qft4)

    def test_vertex_count_mismatch(self):
        with pytest.raises(InvalidArgumentError):
            cut_weight(self.qft4, Partitioning(((0, 1), (2,))))


def test_json_export_sorted():
    g = build_graph(Circuit(3, (cnot(2, 0), cnot(1, 0), cnot(2, 1), cnot(0, 2))))
    doc = json.loads(g.to_json())
    assert doc == {"n": 3, "edges": [{"u": 0, "v": 1, "w": 1}, {"u": 0, "v": 2, "w": 2},
                                     {"u": 1, "v": 2, "w": 1}]}


def test_graph_is_read_only():
    g = build_graph(generate_qft(4))
    with pytest.raises(ValueError):
        g.matrix[0, 1] = 7


def _random_partitioning(n, data):
    k = data.draw(st.integers(1, n))
    labels = data.draw(st.permutations(list(range(k)) + data.draw(
        st.lists(st.integers(0, k - 1), min_size=n - k, max_size=n - k))))
    return Partitioning.from_assignment(labels, k)


@settings(max_examples=200, deadline=None)
@given(circuits(), st.data())
def test_conservation_and_cut_identity(c, data):
    g = build_graph(c)
    assert total_weight(g) == sum(math.comb(gate.arity, 2) for gate in c)
    assert {(u, v): w for u, v, w in g.edges()} == pair_weights(c)
    p = _random_partitioning(c.num_qubits, data)
    assert cut_weight(g, p) + internal_weight(g, p) == total_weight(g)
    order = data.draw(st.permutations(range(p.k)))
    assert cut_weight(g, p.relabeled(order)) == cut_weight(g, p)


@settings(max_examples=100, deadline=None)
@given(circuits(), st.randoms())
def test_gate_order_invariance(c, rnd):
    gates = list(c.gates)
    rnd.shuffle(gates)
    assert build_graph(c.with_gates(gates)) == build_graph(c)


@settings(max_examples=100, deadline=None)
@given(circuits(), st.data())
def test_adding_two_qubit_gate_adds_one(c, data):
    if c.num_qubits < 2:
        return
    a, b = data.draw(st.permutations(range(c.num_qubits)))[:2]
    bigger = c.with_gates(c.gates + (cnot(a, b),))
    assert total_weight(build_graph(bigger)) == total_weight(build_graph(c)) + 1
