import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from qcpart.circuit import Circuit, cnot, generate_qft, h, toffoli
from qcpart.dqc import distribute, improvement_percent, round_half_away
from qcpart.errors import InvalidArgumentError, UndefinedImprovementError
from qcpart.graph import build_graph, cut_weight
from qcpart.partitioning import Partitioning

from oracles import circuits


def test_single_part_all_local():
    c = generate_qft(4)
    d = distribute(c, Partitioning.single(range(4)))
    assert d.metrics.global_gate_count == 0
    assert d.metrics.teleportation_cost == 0
    assert all(s.locality == "local" for s in d.schedule)


def test_qft4_mirror_split():
    c = generate_qft(4)
    d = distribute(c, Partitioning(((0, 3), (1, 2))))
    assert d.metrics.global_gate_count == d.metrics.teleportation_cost == 8
    assert d.metrics.per_pair_traffic == {(0, 1): 8}


def test_toffoli_split():
    c = Circuit(3, (toffoli(0, 1, 2),))
    d = distribute(c, Partitioning(((0, 1), (2,))))
    assert d.metrics.global_gate_count == 1
    assert d.metrics.teleportation_cost == 2


def test_toffoli_three_way():
    c = Circuit(3, (toffoli(0, 1, 2),))
    d = distribute(c, Partitioning(((0,), (1,), (2,))))
    assert (d.metrics.global_gate_count, d.metrics.teleportation_cost) == (1, 3)
    assert d.schedule[0].parts == (0, 1, 2)


def test_mismatch():
    with pytest.raises(InvalidArgumentError):
        distribute(generate_qft(4), Partitioning(((0, 1), (2,))))


def test_schedule_order_and_json():
    c = Circuit(3, (h(0), cnot(0, 2), cnot(0, 1)))
    d = distribute(c, Partitioning(((0, 1), (2,))))
    assert [s.gate for s in d.schedule] == list(c.gates)
    doc = json.loads(d.to_json())
    assert [s["locality"] for s in doc["schedule"]] == ["local", "global", "local"]
    assert doc["schedule"][1]["parts"] == [0, 1]
    assert doc["partitions"] == [{"id": 0, "qubits": [0, 1]}, {"id": 1, "qubits": [2]}]
    assert doc["metrics"]["teleportation_cost"] == 1


def test_render_text():
    d = distribute(generate_qft(4), Partitioning(((0, 3), (1, 2))))
    text = d.render_text()
    assert "[P0] qubits: q0 q3" in text
    assert "[P1] qubits: q1 q2" in text
    assert "teleportations: 8" in text


class TestImprovement:
    @pytest.mark.parametrize("p, b, want", [(8, 12, 33), (18, 18, 0), (9, 17, 47), (0, 0, 0),
                                            (13, 15, 13), (32, 39, 18)])
    def test_values(self, p, b, want):
        assert improvement_percent(p, b) == want

    def test_zero_baseline(self):
        with pytest.raises(UndefinedImprovementError):
            improvement_percent(3, 0)

    def test_half_away(self):
        assert round_half_away(2.5) == 3
        assert round_half_away(-2.5) == -3
        assert round_half_away(2.4999) == 2
        assert improvement_percent(1, 200 / 199 * 1) == 0


@settings(max_examples=150, deadline=None)
@given(circuits(), st.data())
def test_metric_identities(c, data):
    n = c.num_qubits
    k = data.draw(st.integers(1, n))
    labels = list(range(k)) + data.draw(st.lists(st.integers(0, k - 1), min_size=n - k,
                                                 max_size=n - k))
    p = Partitioning.from_assignment(data.draw(st.permutations(labels)), k)
    d = distribute(c, p)
    m = d.metrics
    assert m.teleportation_cost == cut_weight(build_graph(c), p)
    assert m.teleportation_cost == sum(m.per_pair_traffic.values())
    assert m.teleportation_cost == sum(s.crossing for s in d.schedule)
    assert m.global_gate_count <= m.teleportation_cost <= 3 * m.global_gate_count
    for s in d.schedule:
        assert (s.crossing > 0) == s.is_global
        assert 0 <= s.crossing <= math.comb(s.gate.arity, 2)
    if all(g.arity <= 2 for g in c):
        assert m.global_gate_count == m.teleportation_cost
    order = data.draw(st.permutations(range(k)))
    m2 = distribute(c, p.relabeled(order)).metrics
    assert (m2.global_gate_count, m2.teleportation_cost) == (m.global_gate_count,
                                                            m.teleportation_cost)
