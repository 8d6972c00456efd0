"""
The interaction graph of a QFT circuit
======================================

Every multi-qubit gate adds one unit of weight to each qubit pair it
touches. After lowering to CNOTs, the QFT graph is almost uniform, with
extra weight on the qubit pairs that the final swap stage exchanges.
"""

import numpy as np

from qcpart import build_graph, generate_qft
from qcpart.circuit import GateKind

# Generate the 8-qubit QFT, once with native controlled phases and swaps,
# once lowered to CNOT + single-qubit rotations.
native = generate_qft(8, decomposed=False)
lowered = generate_qft(8, decomposed=True)
print("native gates :", dict((k.value, v) for k, v in native.counts().items()))
print("lowered gates:", dict((k.value, v) for k, v in lowered.counts().items()))
print("CNOTs        :", lowered.count(GateKind.CNOT))

# Each controlled phase becomes 2 CNOTs, each swap 3 CNOTs: weight 2 on
# every pair, and 2 + 3 = 5 on the mirror pairs (i, 7 - i).
graph = build_graph(lowered)
np.set_printoptions(linewidth=120)
print(graph.matrix)
print("total weight:", graph.total_weight())

# The native circuit has the same pairs but unit weights (one CP or one
# SWAP per pair).
print(build_graph(native).matrix)

# Graphs export to a small JSON document with sorted edges.
print(graph.to_json()[:120], "...")
