"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 on input errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import bench
from .circuit import Circuit, decompose, generate_qft
from .dqc import distribute
from .errors import InvalidArgumentError, QCPartError
from .graph import build_graph, cut_weight
from .io import read_circuit, write_json
from .partitioner import DEFAULT_RESTARTS, recursive_kway

EXIT_OK, EXIT_USAGE, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _default_seed() -> int:
    env = os.environ.get("QCPART_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"QCPART_SEED must be an integer, got {env!r}")


def _load(path: str, fmt: str | None, do_decompose: bool) -> Circuit:
    p = Path(path)
    if not p.is_file():
        raise FileNotFoundError(f"no such file: {path}")
    circuit = read_circuit(p, fmt)
    return decompose(circuit) if do_decompose else circuit


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        print(text)


def cmd_parse(args) -> int:
    c = _load(args.file, args.format, False)
    counts = ", ".join(f"{k.value}={v}" for k, v in sorted(c.counts().items(), key=lambda kv: kv[0].value))
    print(f"name: {c.name}")
    print(f"qubits: {c.num_qubits}")
    print(f"gates: {len(c)}")
    print(f"multi-qubit gates: {sum(1 for g in c if g.arity > 1)}")
    print(f"kinds: {counts or '-'}")
    return EXIT_OK


def cmd_qft(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    print(write_json(generate_qft(args.n, decomposed=not args.no_decompose)))
    return EXIT_OK


def cmd_graph(args) -> int:
    g = build_graph(_load(args.file, args.format, args.decompose))
    _emit(g.to_json(indent=2), args.output)
    return EXIT_OK


def cmd_partition(args) -> int:
    if args.k < 1:
        raise UsageError("-k must be >= 1")
    if args.restarts < 1:
        raise UsageError("--restarts must be >= 1")
    c = _load(args.file, args.format, args.decompose)
    if args.k > c.num_qubits:
        raise UsageError(f"-k {args.k} exceeds the qubit count {c.num_qubits}")
    seed = _default_seed() if args.seed is None else args.seed
    part = recursive_kway(build_graph(c), args.k, restarts=args.restarts, seed=seed)
    dqc = distribute(c, part)
    m = dqc.metrics
    print(f"circuit: {c.name} ({c.num_qubits} qubits, {len(c)} gates)")
    print(f"k: {part.k}")
    print(f"cut: {cut_weight(build_graph(c), part)}")
    print(f"global gates: {m.global_gate_count}")
    print(f"teleportations: {m.teleportation_cost}")
    for pid, qubits in dqc.partitions:
        print(f"P{pid}: {' '.join(f'q{q}' for q in qubits)}")
    if args.output:
        _emit(dqc.to_json(), args.output)
    if args.text:
        print(dqc.render_text())
    return EXIT_OK


def cmd_bench(args) -> int:
    sources: list = bench.qft_circuits(args.qft or [])
    if args.circuits:
        d = Path(args.circuits)
        if not d.is_dir():
            raise FileNotFoundError(f"no such directory: {d}")
        sources.extend(sorted(p for p in d.iterdir() if p.suffix.lower() in (".real", ".json")))
    for k in args.k:
        if k < 1:
            raise UsageError("--k values must be >= 1")
    if any(r < 1 for r in args.rs_reps):
        raise UsageError("--rs-reps values must be >= 1")
    seed = _default_seed() if args.seed is None else args.seed
    rows = bench.run_suite(sources, args.k, args.rs_reps, seed=seed, restarts=args.restarts,
                           decompose_circuits=not args.native)
    for row in rows:
        if not row.ok:
            print(f"warning: {row.circuit_name} k={row.k}: {row.error}", file=sys.stderr)
    _emit(bench.to_csv(rows, args.rs_reps).rstrip("\n"), args.output)
    if args.plot_data:
        bench.write_plot_data(rows, args.plot_data)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qcpart", description="Partition quantum circuits for distributed execution.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    sp = sub.add_parser("parse", help="validate a circuit file and print a summary")
    sp.add_argument("file")
    sp.add_argument("--format", choices=("real", "json"))
    sp.set_defaults(func=cmd_parse)

    sp = sub.add_parser("qft", help="emit a QFT circuit as JSON")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--no-decompose", action="store_true")
    sp.set_defaults(func=cmd_qft)

    sp = sub.add_parser("graph", help="export the interaction graph as JSON")
    sp.add_argument("file")
    sp.add_argument("--format", choices=("real", "json"))
    sp.add_argument("--decompose", action="store_true")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("partition", help="partition a circuit into k parts")
    sp.add_argument("file")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--format", choices=("real", "json"))
    sp.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--decompose", action="store_true")
    sp.add_argument("--text", action="store_true", help="print the per-partition listing")
    sp.add_argument("-o", "--output", help="write the distributed circuit as JSON")
    sp.set_defaults(func=cmd_partition)

    sp = sub.add_parser("bench", help="K-L versus random search table")
    sp.add_argument("--qft", type=_int_list, help="QFT sizes, e.g. 4,8,16")
    sp.add_argument("--circuits", help="directory of .real/.json circuits")
    sp.add_argument("--k", type=_int_list, default=[2, 3, 4])
    sp.add_argument("--rs-reps", type=_int_list, default=list(bench.DEFAULT_RS_REPS))
    sp.add_argument("--seed", type=int)
    sp.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    sp.add_argument("--native", action="store_true",
                    help="keep 3-qubit gates instead of lowering to CNOT")
    sp.add_argument("-o", "--output")
    sp.add_argument("--plot-data")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except InvalidArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QCPartError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
