import json
from pathlib import Path

import pytest

from qcpart.bench import plot_data, qft_circuits, run_suite, to_csv, write_plot_data
from qcpart.circuit import generate_qft
from qcpart.dqc import improvement_percent, round_half_away
from qcpart.graph import build_graph, cut_weight

DATA = Path(__file__).parent / "data"


def test_empty_suite():
    assert run_suite([], [2, 3]) == []
    assert to_csv([]) == "circuit,qubits,k,P,RS50,RS100,RS200,improvement\n"


def test_qft4_row():
    rows = run_suite(qft_circuits([4]), [2], rs_reps=[200], seed=0)
    csv = to_csv(rows, [200]).splitlines()
    assert csv[0] == "circuit,qubits,k,P,RS200,improvement"
    assert csv[1] == "qft4,4,2,8,12,33"


def test_rows_consistent():
    rows = run_suite(qft_circuits([8]), [2, 3, 4], seed=7, restarts=5)
    assert [r.k for r in rows] == [2, 3, 4]
    graph = build_graph(generate_qft(8))
    for r in rows:
        assert r.ok and r.proposed_cut >= 0
        assert r.proposed_cut == cut_weight(graph, r.partitioning)
        assert r.improvement_percent == improvement_percent(r.proposed_cut, round_half_away(r.rs_means[200]))
        assert r.wall_time_ms >= 0


@pytest.mark.parametrize("seed", [0, 1, 2, 123])
def test_qft8_rs200(seed):
    (row,) = run_suite(qft_circuits([8]), [2], rs_reps=[200], seed=seed)
    assert round_half_away(row.rs_means[200]) in (38, 39, 40)
    assert abs(row.rs_means[200] - 68 * 16 / 28) <= 0.03 * 68 * 16 / 28


def test_row_independent_of_suite_order():
    a = run_suite(qft_circuits([4, 8]), [2], seed=3, restarts=3)
    b = run_suite(qft_circuits([8, 4]), [2], seed=3, restarts=3)
    assert a[1].rs_means == b[0].rs_means
    assert a[1].partitioning == b[0].partitioning


def test_bad_sources_reported_per_row(tmp_path):
    bad = tmp_path / "broken.real"
    bad.write_text(".numvars 2\n.variables a b\n.begin\nt4 a b a b\n.end\n")
    rows = run_suite([bad, DATA / "real" / "adder_like.real", generate_qft(4)], [2, 5],
                     rs_reps=[50], restarts=2)
    assert [(r.circuit_name, r.k, r.ok) for r in rows] == [
        ("broken", 2, False), ("broken", 5, False),
        ("adder_like", 2, True), ("adder_like", 5, False),
        ("qft4", 2, True), ("qft4", 5, False),
    ]
    assert "t4" in rows[0].error
    assert len(to_csv(rows, [50]).splitlines()) == 3


def test_revlib_decomposed_vs_native():
    path = DATA / "real" / "adder_like.real"
    (dec,) = run_suite([path], [2], rs_reps=[50], restarts=3)
    (nat,) = run_suite([path], [2], rs_reps=[50], restarts=3, decompose_circuits=False)
    assert dec.ok and nat.ok
    assert nat.proposed_cut <= dec.proposed_cut


def test_plot_data(tmp_path):
    rows = run_suite(qft_circuits([4]) + [DATA / "real" / "swaps.real"], [2, 3],
                     rs_reps=[50, 200], restarts=2)
    data = plot_data(rows)
    assert [s["circuit"] for s in data["global_gates_qft"]] == ["qft4"]
    assert [s["circuit"] for s in data["global_gates_other"]] == ["swaps"]
    assert data["global_gates_qft"][0]["k"] == [2, 3]
    assert data["global_gates_qft"][0]["P"] == [8, 13]
    out = tmp_path / "plots.json"
    write_plot_data(rows, out)
    assert json.loads(out.read_text()) == data


def test_rs_stability():
    (row,) = run_suite(qft_circuits([16]), [3], seed=5, restarts=2)
    assert abs(row.rs_means[50] - row.rs_means[200]) <= 0.05 * row.rs_means[200]
