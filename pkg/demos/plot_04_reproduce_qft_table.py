"""
Recursive K-L against random search on QFT circuits
===================================================

Runs the benchmark for QFT-4 to QFT-64 with k = 2, 3, 4 and prints it
next to the published values. The proposed cuts match exactly; the
random-search means agree to within sampling noise.
"""

import time

from qcpart.bench import plot_data, qft_circuits, run_suite, to_csv

PUBLISHED = {  # (n, k): (P, RS200, improvement %)
    (4, 2): (8, 12, 33), (4, 3): (13, 15, 13), (4, 4): (18, 18, 0),
    (8, 2): (32, 39, 18), (8, 3): (40, 51, 22), (8, 4): (48, 58, 17),
    (16, 2): (128, 141, 9), (16, 3): (160, 187, 14), (16, 4): (192, 211, 9),
    (32, 2): (512, 536, 4), (32, 3): (640, 715, 10), (32, 4): (768, 806, 5),
    (64, 2): (2048, 2097, 2), (64, 3): (2560, 2796, 8), (64, 4): (3072, 3145, 2),
}

t0 = time.perf_counter()
rows = run_suite(qft_circuits([4, 8, 16, 32, 64]), [2, 3, 4], seed=0)
print(f"suite ran in {time.perf_counter() - t0:.2f}s\n")

print(f"{'circuit':>8} {'k':>2} {'P':>5} {'pub':>5} {'RS200':>8} {'pub':>5} {'impr':>5} {'pub':>4}")
for r in rows:
    p, rs, imp = PUBLISHED[(r.num_qubits, r.k)]
    print(f"{r.circuit_name:>8} {r.k:>2} {r.proposed_cut:>5} {p:>5} "
          f"{r.rs_means[200]:>8.2f} {rs:>5} {r.improvement_percent:>4}% {imp:>3}%")

# The CSV is what ``qcpart bench`` writes; plot_data() gives the series
# behind the P-vs-RS and improvement figures.
print()
print(to_csv(rows))
series = plot_data(rows)["global_gates_qft"][1]
print(series["circuit"], series["k"], series["P"], [round(x, 1) for x in series["RS"]])
