"""Command-line front end: ``cp2arr COMMAND FILE ...``.

Exit codes: 0 success (and "isomorphic" for ``compare``), 1 "not isomorphic"
for ``compare`` or a failed ``roundtrip``, 2 input or usage error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import corpus
from .blowup import STRICT, WeightedIncidenceGraph, blow_down, blow_up, theorem5_check
from .compare import ComparisonVerdict, compare
from .geometry import Arrangement, ArrangementError, DuplicateLine, ZeroVector, build_arrangement
from .lattice import (
    IntersectionLattice,
    betti,
    build_lattice,
    classify,
    is_lattice_isomorphism,
    lattice_isomorphic,
    poincare,
)

SCHEMA_VERSION = "1"


class ParseError(ValueError):
    def __init__(self, lineno: int, reason: str, path: str = ""):
        self.lineno = lineno
        self.reason = reason
        self.path = path
        where = f"{path}:{lineno}: " if lineno else (f"{path}: " if path else "")
        super().__init__(where + reason)


@dataclass
class ArrangementFile:
    path: str
    lines: list[tuple[int, int, int]]
    linenos: list[int]
    name: Optional[str] = None


def read_arrangement_file(path) -> ArrangementFile:
    text = Path(path).read_text(encoding="utf-8")
    triples, linenos = [], []
    name = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        body, _, comment = line.partition("#")
        if name is None and comment.strip() and not triples:
            name = comment.strip()
        if not body.strip():
            continue
        fields = body.split()
        if len(fields) != 3:
            raise ParseError(lineno, f"expected 3 integers, found {len(fields)} fields", str(path))
        try:
            triple = tuple(int(f) for f in fields)
        except ValueError:
            raise ParseError(lineno, f"not an integer triple: {body.strip()!r}", str(path)) from None
        if triple == (0, 0, 0):
            raise ZeroVector(f"{path}:{lineno}: the zero triple is not a line")
        triples.append(triple)
        linenos.append(lineno)
    if not triples:
        raise ParseError(0, "file contains no lines", str(path))
    return ArrangementFile(str(path), triples, linenos, name)


def parse_file(path) -> Arrangement:
    f = read_arrangement_file(path)
    try:
        return build_arrangement(f.lines)
    except DuplicateLine as e:
        raise DuplicateLine(f.linenos[e.first], f.linenos[e.second]) from None


# ------------------------------------------------------------------ output


def emit_dot(g: WeightedIncidenceGraph) -> str:
    out = ["graph G {"]
    for v, vert in enumerate(g.vertices):
        kind = "line" if vert.kind == STRICT else "exceptional"
        out.append(f'  v{v} [label="{vert.name} {kind} w={vert.weight}"];')
    for u, v, k in sorted(g.edges):
        out.append(f'  v{u} -- v{v} [label="p{k}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def lattice_json(arr: Arrangement, lat: IntersectionLattice) -> dict:
    return {
        "n_lines": lat.n_lines,
        "lines": [list(l.coeffs) for l in arr.lines],
        "line_weights": list(lat.line_weights),
        "points": [
            {"coords": list(p.coords), "lines": list(inc), "multiplicity": len(inc)}
            for p, inc in arr.points
        ],
    }


def graph_json(g: WeightedIncidenceGraph) -> dict:
    return {
        "vertices": [{"id": i, "kind": v.kind, "ref": v.ref, "weight": v.weight} for i, v in enumerate(g.vertices)],
        "edges": [[u, v, k] for u, v, k in g.edges],
    }


def full_report(arr: Arrangement) -> dict:
    lat = build_lattice(arr)
    pd = poincare(lat)
    cls = classify(lat)
    return {
        "schema_version": SCHEMA_VERSION,
        "lattice": lattice_json(arr, lat),
        "poincare": {"central": list(pd.central_poincare), "projective": list(pd.projective_poincare)},
        "class": {"tag": cls.tag, "witness": cls.witness, "p": cls.p, "q": cls.q},
        "graph": graph_json(blow_up(lat)),
    }


def verdict_json(v: ComparisonVerdict) -> dict:
    return {
        "outcome": v.outcome,
        "bijection": None if v.bijection is None else list(v.bijection),
        "reason": None if v.reason is None else v.reason.to_json(),
        "trace": list(v.trace),
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def lattice_text(arr: Arrangement, lat: IntersectionLattice) -> str:
    out = [f"lines {lat.n_lines}"]
    for i, l in enumerate(arr.lines):
        out.append(f"line {i} {l} weight {lat.line_weights[i]}")
    out.append(f"points {len(arr.points)}")
    for k, (p, inc) in enumerate(arr.points):
        out.append(f"point {k} {p} mult {len(inc)} lines {' '.join(map(str, inc))}")
    return "\n".join(out) + "\n"


def graph_text(g: WeightedIncidenceGraph) -> str:
    out = [f"vertices {len(g.vertices)}"]
    for v, vert in enumerate(g.vertices):
        out.append(f"vertex {v} {vert.name} weight {vert.weight}")
    out.append(f"edges {len(g.edges)}")
    for u, v, k in g.edges:
        out.append(f"edge {g.vertices[u].name} {g.vertices[v].name} point {k}")
    return "\n".join(out) + "\n"


def verdict_text(v: ComparisonVerdict) -> str:
    out = [str(v)]
    if v.bijection is not None:
        out.append("bijection " + " ".join(f"{i}->{j}" for i, j in enumerate(v.bijection)))
    out.extend(f"trace {t}" for t in v.trace)
    return "\n".join(out) + "\n"


# ------------------------------------------------------------------ commands


def _cmd_lattice(args) -> int:
    arr = parse_file(args.file)
    if args.json:
        args.out.write(dumps(full_report(arr)))
    else:
        args.out.write(lattice_text(arr, build_lattice(arr)))
    return 0


def _cmd_poincare(args) -> int:
    arr = parse_file(args.file)
    if args.json:
        args.out.write(dumps(full_report(arr)))
        return 0
    pd = poincare(build_lattice(arr))
    args.out.write("central " + " ".join(map(str, pd.central_poincare)) + "\n")
    args.out.write("projective " + " ".join(map(str, pd.projective_poincare)) + "\n")
    return 0


def _cmd_betti(args) -> int:
    arr = parse_file(args.file)
    value = betti(build_lattice(arr), args.k)
    if args.json:
        args.out.write(dumps({"schema_version": SCHEMA_VERSION, "betti": {"k": args.k, "value": value}}))
    else:
        args.out.write(f"{value}\n")
    return 0


def _cmd_classify(args) -> int:
    arr = parse_file(args.file)
    if args.json:
        args.out.write(dumps(full_report(arr)))
    else:
        args.out.write(f"{classify(build_lattice(arr))}\n")
    return 0


def _cmd_blowup(args) -> int:
    arr = parse_file(args.file)
    g = blow_up(build_lattice(arr))
    if args.dot:
        args.out.write(emit_dot(g))
    elif args.json:
        args.out.write(dumps(full_report(arr)))
    else:
        args.out.write(graph_text(g))
    return 0


def _cmd_compare(args) -> int:
    a, b = parse_file(args.file1), parse_file(args.file2)
    v = compare(a, b)
    if args.json:
        args.out.write(dumps({"schema_version": SCHEMA_VERSION, "verdict": verdict_json(v)}))
    else:
        args.out.write(verdict_text(v))
    return 0 if v.isomorphic else 1


def _cmd_roundtrip(args) -> int:
    arr = parse_file(args.file)
    lat = build_lattice(arr)
    back = blow_down(blow_up(lat))
    perm = lattice_isomorphic(lat, back)
    ok = (
        perm is not None
        and is_lattice_isomorphism(lat, back, perm)
        and all(lat.line_weights[i] == back.line_weights[perm[i]] for i in range(lat.n_lines))
        and theorem5_check(lat, back)
    )
    if args.json:
        args.out.write(dumps({"schema_version": SCHEMA_VERSION, "roundtrip": {
            "ok": ok, "bijection": None if perm is None else list(perm)}}))
    else:
        args.out.write("roundtrip ok\n" if ok else "roundtrip FAILED\n")
    return 0 if ok else 1


def _cmd_gen(args) -> int:
    need = {"pencil": 1, "nearpencil": 1, "generic": 1, "cased": 2}[args.family]
    if len(args.params) != need:
        raise ParseError(0, f"gen {args.family} takes {need} integer parameter(s)")
    try:
        params = [int(x) for x in args.params]
    except ValueError:
        raise ParseError(0, f"gen parameters must be integers: {args.params}") from None
    if args.family == "pencil":
        lines = corpus.pencil(*params)
    elif args.family == "nearpencil":
        lines = corpus.near_pencil(*params)
    elif args.family == "generic" and args.seed is not None:
        lines = corpus.random_generic(random.Random(args.seed), *params)
    elif args.family == "generic":
        lines = corpus.generic(*params)
    else:
        lines = corpus.case_d(*params)
    header = f"# {args.family} {' '.join(args.params)}"
    if args.seed is not None and args.family == "generic":
        header += f" seed {args.seed}"
    text = header + "\n" + "".join(f"{a} {b} {c}\n" for a, b, c in lines)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        args.out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON report")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized generation")

    parser = argparse.ArgumentParser(prog="cp2arr", description="Intersection lattices of line arrangements in CP^2.")
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized generation")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("lattice", _cmd_lattice, "points, multiplicities and line weights").add_argument("file")
    add("poincare", _cmd_poincare, "Poincare polynomials of the complement").add_argument("file")
    p = add("betti", _cmd_betti, "one Betti number of the central complement")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    add("classify", _cmd_classify, "exceptional / nonexceptional case").add_argument("file")
    p = add("blowup", _cmd_blowup, "weighted graph of the blown-up arrangement")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p = add("compare", _cmd_compare, "decide lattice isomorphism")
    p.add_argument("file1")
    p.add_argument("file2")
    add("roundtrip", _cmd_roundtrip, "blow up, blow down and check the result").add_argument("file")
    p = add("gen", _cmd_gen, "emit a corpus arrangement file")
    p.add_argument("family", choices=["pencil", "nearpencil", "generic", "cased"])
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    args.out = out
    try:
        return args.func(args)
    except (ArrangementError, OSError, ValueError, IndexError) as e:
        err.write(f"cp2arr: error: {e}\n")
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
