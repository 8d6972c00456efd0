"""
From a RevLib circuit to a distributed circuit
==============================================

Parse a ``.real`` document, partition its qubits and list which gates
stay local and which need teleportation. Three-qubit gates show the
difference between counting global gates and counting teleportations.
"""

from qcpart import distribute, parse_real, recursive_kway
from qcpart.circuit import decompose
from qcpart.graph import build_graph

REAL = """\
.version 1.0
.numvars 5
.variables a b c d e
.begin
t3 a b c
t2 c d
t3 -b d e
f3 a d e
t2 e a
t1 b
.end
"""

circuit = parse_real(REAL, name="toy")
print(circuit.name, circuit.num_qubits, "qubits", {k.value: v for k, v in circuit.counts().items()})

# Native mode: every 3-qubit gate contributes three unit edges.
for label, c in (("native", circuit), ("decomposed", decompose(circuit))):
    graph = build_graph(c)
    part = recursive_kway(graph, 2, restarts=10, seed=0)
    dqc = distribute(c, part)
    m = dqc.metrics
    print(f"\n{label}: parts={part.parts} global gates={m.global_gate_count} "
          f"teleportations={m.teleportation_cost}")

# The text rendering has one block per partition and lists the global gates.
print()
print(distribute(circuit, recursive_kway(build_graph(circuit), 2, seed=0)).render_text())
