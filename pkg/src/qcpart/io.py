"""Reading and writing circuits: RevLib ``.real`` subset and a JSON gate list."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .circuit import Circuit, Gate, GateKind
from .errors import InvalidArgumentError, ParseError, UnsupportedGateError

MAX_GATE_QUBITS = 3

_HEADER_DIRECTIVES = {".version", ".numvars", ".variables", ".inputs", ".outputs",
                      ".constants", ".garbage"}
_GATE_TOKEN = re.compile(r"^(t|f)(\d+)$")

_KIND_ALIASES = {"cx": GateKind.CNOT, "ccx": GateKind.TOFFOLI, "cswap": GateKind.FREDKIN}


@dataclass
class RealHeader:
    """Header block of a ``.real`` document.

    ``extra`` keeps ``.inputs``/``.outputs``/``.constants``/``.garbage``
    lines verbatim (without the directive); they are not used for
    partitioning.
    """

    version: str = ""
    numvars: int = 0
    variables: list[str] = field(default_factory=list)
    extra: dict[str, str] = field(default_factory=dict)


def _resolve(label: str, index: dict[str, int], token: str, lineno: int,
             allow_negative: bool) -> int:
    if label.startswith("-"):
        if not allow_negative:
            raise ParseError(f"negative marker on target operand {label!r} of {token!r}",
                             line=lineno)
        label = label[1:]
    if label not in index:
        raise ParseError(f"undeclared variable {label!r} in {token!r}", line=lineno)
    return index[label]


def _real_gate(token: str, labels: list[str], index: dict[str, int], lineno: int) -> Gate:
    m = _GATE_TOKEN.match(token)
    if m:
        family, size = m.group(1), int(m.group(2))
        if size > MAX_GATE_QUBITS:
            raise UnsupportedGateError(
                token,
                f"gate {token!r} acts on {size} qubits; at most {MAX_GATE_QUBITS} are "
                f"supported (--decompose lowers Toffoli/Fredkin only; wider gates must "
                f"be decomposed before import)",
                line=lineno,
            )
        if family == "t":
            kinds = {1: GateKind.X, 2: GateKind.CNOT, 3: GateKind.TOFFOLI}
        else:
            kinds = {2: GateKind.SWAP, 3: GateKind.FREDKIN}
        if size not in kinds:
            raise ParseError(f"unknown gate token {token!r}", line=lineno)
        kind = kinds[size]
        # t-gates: all but the last operand are controls; f-gates: all but the last two.
        n_controls = size - 1 if family == "t" else size - 2
    elif token in ("v", "v+"):
        kind, size, n_controls = GateKind.GENERIC2, 2, 1
    else:
        raise ParseError(f"unknown gate token {token!r}", line=lineno)

    if len(labels) != size:
        raise ParseError(f"{token!r} expects {size} operand(s), got {len(labels)}",
                         line=lineno)
    ops = tuple(_resolve(lab, index, token, lineno, i < n_controls)
                for i, lab in enumerate(labels))
    if len(set(ops)) != len(ops):
        raise ParseError(f"duplicate operand in {token} {' '.join(labels)}", line=lineno)
    return Gate(kind, ops)


def parse_real_document(text: str, name: str = "circuit") -> tuple[RealHeader, Circuit]:
    """Parse a ``.real`` document into its header and circuit."""
    header = RealHeader()
    seen_numvars = seen_variables = False
    index: dict[str, int] = {}
    gates: list[Gate] = []
    state = "header"  # -> "body" -> "done"
    lineno = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        token, *args = line.split()

        if state == "body":
            if token == ".end":
                state = "done"
                continue
            if token.startswith("."):
                raise ParseError(f"directive {token!r} inside gate block", line=lineno)
            gates.append(_real_gate(token, args, index, lineno))
            continue

        if state == "done":
            raise ParseError(f"content after .end: {token!r}", line=lineno)

        if token == ".begin":
            if not (seen_numvars and seen_variables):
                raise ParseError(".begin before .numvars/.variables", line=lineno)
            state = "body"
        elif token == ".version":
            header.version = " ".join(args)
        elif token == ".numvars":
            if len(args) != 1 or not args[0].isdigit() or int(args[0]) < 1:
                raise ParseError(".numvars needs one positive integer", line=lineno)
            header.numvars = int(args[0])
            seen_numvars = True
        elif token == ".variables":
            if not seen_numvars:
                raise ParseError(".variables before .numvars", line=lineno)
            if len(args) != header.numvars:
                raise ParseError(
                    f".variables lists {len(args)} labels but .numvars is {header.numvars}",
                    line=lineno,
                )
            if len(set(args)) != len(args):
                raise ParseError("duplicate label in .variables", line=lineno)
            header.variables = list(args)
            index = {lab: i for i, lab in enumerate(args)}
            seen_variables = True
        elif token in _HEADER_DIRECTIVES:
            header.extra[token[1:]] = " ".join(args)
        else:
            raise ParseError(f"unknown directive {token!r}", line=lineno)

    if state != "done":
        what = ".begin" if state == "header" else ".end"
        raise ParseError(f"missing {what}", line=lineno + 1)
    return header, Circuit(header.numvars, tuple(gates), name)


def parse_real(text: str, name: str = "circuit") -> Circuit:
    """Parse a RevLib ``.real`` document.

    Supported gate tokens: ``t1``/``t2``/``t3`` (NOT/CNOT/Toffoli),
    ``f2``/``f3`` (SWAP/Fredkin), ``v``/``v+`` (opaque two-qubit gate).
    Negative controls (``-a``) are read as ordinary controls.
    """
    return parse_real_document(text, name)[1]


def _fail(path: str, message: str):
    raise ParseError(message, path=path)


def _is_int(v: Any) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def circuit_from_dict(doc: Any) -> Circuit:
    """Validate a decoded JSON object and build a ``Circuit`` from it."""
    if not isinstance(doc, dict):
        _fail("$", "document must be an object")
    unknown = set(doc) - {"name", "qubits", "gates"}
    if unknown:
        _fail("$", f"unexpected key(s) {sorted(unknown)}")
    name = doc.get("name", "circuit")
    if not isinstance(name, str):
        _fail("$.name", "must be a string")
    if "qubits" not in doc:
        _fail("$", "missing required key 'qubits'")
    n = doc["qubits"]
    if not _is_int(n) or n < 1:
        _fail("$.qubits", "must be a positive integer")
    raw_gates = doc.get("gates", [])
    if not isinstance(raw_gates, list):
        _fail("$.gates", "must be an array")

    gates = []
    for i, g in enumerate(raw_gates):
        path = f"$.gates[{i}]"
        if not isinstance(g, dict):
            _fail(path, "gate must be an object")
        unknown = set(g) - {"kind", "operands", "angle"}
        if unknown:
            _fail(path, f"unexpected key(s) {sorted(unknown)}")
        kind_name = g.get("kind")
        if not isinstance(kind_name, str):
            _fail(f"{path}.kind", "must be a string")
        key = kind_name.lower()
        try:
            kind = _KIND_ALIASES.get(key) or GateKind(key)
        except ValueError:
            _fail(f"{path}.kind", f"unknown gate kind {kind_name!r}")
        ops = g.get("operands")
        if not isinstance(ops, list) or not all(_is_int(q) for q in ops):
            _fail(f"{path}.operands", "must be an array of integers")
        if len(ops) != kind.arity:
            _fail(f"{path}.operands", f"{kind.value} takes {kind.arity} operand(s), got {len(ops)}")
        for j, q in enumerate(ops):
            if not 0 <= q < n:
                _fail(f"{path}.operands[{j}]", f"qubit {q} outside [0, {n})")
        if len(set(ops)) != len(ops):
            _fail(f"{path}.operands", "duplicate operand")
        angle = g.get("angle")
        if kind.parameterized:
            if angle is None:
                _fail(f"{path}.angle", f"{kind.value} requires an angle")
            if isinstance(angle, bool) or not isinstance(angle, (int, float)):
                _fail(f"{path}.angle", "must be a number")
        elif angle is not None:
            _fail(f"{path}.angle", f"{kind.value} takes no angle")
        gates.append(Gate(kind, tuple(ops), angle))
    return Circuit(n, tuple(gates), name)


def parse_json(text: str) -> Circuit:
    """Parse the circuit JSON format::

        {"name": str, "qubits": n,
         "gates": [{"kind": str, "operands": [int, ...], "angle"?: number}]}
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON ({exc.msg} at line {exc.lineno} col {exc.colno})",
                         path="$") from exc
    return circuit_from_dict(doc)


def circuit_to_dict(circuit: Circuit) -> dict:
    gates = []
    for g in circuit.gates:
        d: dict[str, Any] = {"kind": g.kind.value, "operands": list(g.operands)}
        if g.angle is not None:
            d["angle"] = g.angle
        gates.append(d)
    return {"name": circuit.name, "qubits": circuit.num_qubits, "gates": gates}


def write_json(circuit: Circuit, indent: int | None = None) -> str:
    return json.dumps(circuit_to_dict(circuit), indent=indent)


def read_circuit(path: str | Path, fmt: str | None = None) -> Circuit:
    """Load a circuit file; the format is taken from the suffix unless given.

    The circuit is named after the file stem for ``.real`` input.
    """
    path = Path(path)
    if fmt is None:
        suffix = path.suffix.lower()
        if suffix == ".real":
            fmt = "real"
        elif suffix == ".json":
            fmt = "json"
        else:
            raise InvalidArgumentError(f"cannot infer format of {path.name}; pass fmt")
    text = path.read_text(encoding="utf-8")
    if fmt == "real":
        return parse_real(text, name=path.stem)
    if fmt == "json":
        return parse_json(text)
    raise InvalidArgumentError(f"unknown format {fmt!r}")
