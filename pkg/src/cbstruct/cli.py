"""Command-line front end.

Exit codes: 0 success, 1 semantic failure (violation, disagreement, failed
verification), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import nullcontext
from itertools import chain
from collections.abc import Iterable, Iterator
from typing import TextIO

from .classifier import (
    classification_from_record,
    classification_to_record,
    classify,
    verify_certificate,
)
from .enumeration import run_lemma_suite, verify_order
from .errors import CBStructError, InvalidInput, SchemaError
from .forbidden import find_witness, witness_to_record
from .formats import detect_format, graph6_decode, graph6_encode, parse_edgelist
from .generate import (
    GenConfig,
    derive_seed,
    gen_co_triangle_free,
    gen_cycle_expansion,
    gen_gnp,
    gen_path_expansion,
)
from .graph import Graph, components, induced_subgraph, is_connected

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
MAX_LEMMA_N = 7

_ENV_FLAGS = {
    "alpha_cap": "CBSTRUCT_ALPHA_CAP",
    "cycle_cap": "CBSTRUCT_CYCLE_CAP",
    "max_retries": "CBSTRUCT_MAX_RETRIES",
}


def _dump(rec: dict, out: TextIO) -> None:
    out.write(json.dumps(rec, separators=(",", ":")) + "\n")


def _open_input(path: str | None):
    if path is None or path == "-":
        return nullcontext(sys.stdin)
    return open(path, encoding="ascii")


def iter_inputs(lines: Iterable[str], fmt: str | None) -> Iterator[tuple[int, Graph | None, str | None]]:
    """Yield ``(line, graph, error)``; bad graph6 lines are reported and
    skipped, a bad edge-list block ends the stream."""
    it = iter(lines)
    head = []
    for raw in it:
        head.append(raw)
        if raw.split("#", 1)[0].strip():
            break
    else:
        return
    if fmt is None:
        fmt = detect_format(head[-1])
    stream = chain(head, it)
    if fmt == "edgelist":
        try:
            for sg in parse_edgelist(stream):
                yield sg.line, sg.graph, None
        except InvalidInput as exc:
            yield 0, None, str(exc)
        return
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield lineno, graph6_decode(line), None
        except InvalidInput as exc:
            yield lineno, None, f"line {lineno}: {exc}"


# -- subcommands -----------------------------------------------------------------

def cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    status = EXIT_OK
    with _open_input(args.input) as fh:
        for lineno, g, err in iter_inputs(fh, args.format):
            if err is not None:
                _dump({"line": lineno, "error": "parse", "message": err}, out)
                status = EXIT_INPUT
                continue
            if g.n == 0:
                _dump({"line": lineno, "error": "empty", "message": "graph has no vertices"}, out)
                status = EXIT_INPUT
                continue
            if args.per_component:
                for comp in components(g):
                    h = induced_subgraph(g, comp)
                    rec = {"line": lineno, "component": comp, "graph6": graph6_encode(h).decode()}
                    rec.update(classification_to_record(classify(h)))
                    _dump(rec, out)
            elif not is_connected(g):
                _dump({"line": lineno, "error": "disconnected",
                       "message": "graph is disconnected; use --per-component"}, out)
                status = EXIT_INPUT
            else:
                rec = {"line": lineno, "graph6": graph6_encode(g).decode()}
                rec.update(classification_to_record(classify(g)))
                _dump(rec, out)
    return status


def cmd_witness(args: argparse.Namespace, out: TextIO) -> int:
    status = EXIT_OK
    with _open_input(args.input) as fh:
        for lineno, g, err in iter_inputs(fh, args.format):
            if err is not None:
                _dump({"line": lineno, "error": "parse", "message": err}, out)
                status = EXIT_INPUT
                continue
            w = find_witness(g)
            _dump({"line": lineno, "witness": None if w is None else witness_to_record(w)}, out)
    return status


_GENERATORS = {
    "path": lambda cfg: gen_path_expansion(cfg)[0],
    "cycle": lambda cfg: gen_cycle_expansion(cfg)[0],
    "co-triangle-free": gen_co_triangle_free,
    "gnp": gen_gnp,
}


def cmd_generate(args: argparse.Namespace, out: TextIO) -> int:
    gen = _GENERATORS[args.kind]
    for i in range(args.count):
        cfg = GenConfig(
            seed=derive_seed(args.seed, i), size=args.size, max_bag=args.max_bag,
            edge_prob=args.edge_prob, shuffle=args.shuffle,
        )
        out.write(graph6_encode(gen(cfg)).decode() + "\n")
    return EXIT_OK


def format_enumeration(summary) -> list[str]:
    rec = summary.to_record()
    lines = [f"n\t{rec['n']}", f"total\t{rec['total']}"]
    for label, count in rec["class_counts"].items():
        lines.append(f"class:{label}\t{count}")
    lines.append(f"agreements\t{rec['agreements']}")
    for key in ("disagreements", "theorem_violations", "overlaps", "certificate_failures"):
        lines.append(f"{key}\t{len(rec[key])}")
    return lines


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    summary = verify_order(args.n)
    for line in format_enumeration(summary):
        out.write(line + "\n")
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(summary.to_record(), fh, indent=2)
            fh.write("\n")
    return EXIT_OK if summary.ok else EXIT_FAIL


def cmd_lemmas(args: argparse.Namespace, out: TextIO) -> int:
    tallies = run_lemma_suite(args.n_max, cap=MAX_LEMMA_N)
    out.write("lemma_id\tinstances\tholds\tviolations\n")
    for t in tallies.values():
        out.write(f"{t.lemma_id}\t{t.instances}\t{t.holds}\t{len(t.violations)}\n")
    if args.report:
        with open(args.report, "w") as fh:
            json.dump({"n_max": args.n_max, "lemmas": [t.to_record() for t in tallies.values()]}, fh, indent=2)
            fh.write("\n")
    return EXIT_FAIL if any(t.violations for t in tallies.values()) else EXIT_OK


def _load_cert(raw: str, index: int) -> dict:
    try:
        rec = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not JSON: {exc}", index) from None
    if not isinstance(rec, dict) or not isinstance(rec.get("line"), int):
        raise SchemaError("record must be an object with an integer 'line'", index)
    return rec


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    with _open_input(args.input) as fh:
        graphs = {}
        for lineno, g, err in iter_inputs(fh, args.format):
            if err is None:
                graphs[lineno] = g
    status = EXIT_OK
    with open(args.certificates, encoding="utf-8") as fh:
        for index, raw in enumerate(line for line in fh if line.strip()):
            rec = _load_cert(raw, index)
            if "error" in rec:
                _dump({"index": index, "line": rec["line"], "status": "skip"}, out)
                continue
            try:
                c = classification_from_record(rec)
            except ValueError as exc:
                raise SchemaError(str(exc), index) from None
            g = graphs.get(rec["line"])
            if g is None:
                raise SchemaError(f"no input graph on line {rec['line']}", index)
            if "component" in rec:
                comp = rec["component"]
                if not isinstance(comp, list) or not all(isinstance(v, int) and 0 <= v < g.n for v in comp):
                    raise SchemaError("'component' must list vertices of the graph", index)
                g = induced_subgraph(g, comp)
            ok = verify_certificate(g, c)
            _dump({"index": index, "line": rec["line"], "status": "pass" if ok else "fail"}, out)
            if not ok:
                status = EXIT_FAIL
    return status


# -- argument parsing ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cbstruct",
        description="Classify, certify and exhaustively check connected (claw, bull)-free graphs.",
    )
    p.add_argument("--alpha-cap", type=int, help="max n for the independence-number oracle (env CBSTRUCT_ALPHA_CAP)")
    p.add_argument("--cycle-cap", type=int, help="max n for the induced-cycle oracle (env CBSTRUCT_CYCLE_CAP)")
    p.add_argument("--max-retries", type=int, help="resampling bound for generators (env CBSTRUCT_MAX_RETRIES)")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("input", nargs="?", help="input file (default: stdin)")
        sp.add_argument("--format", choices=("graph6", "edgelist"), help="force the input format")

    sp = sub.add_parser("classify", help="classify each input graph")
    with_input(sp)
    sp.add_argument("--per-component", action="store_true", help="classify each connected component")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("witness", help="report an induced claw or bull for each input graph")
    with_input(sp)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("generate", help="emit seeded random graphs as graph6 lines")
    sp.add_argument("--kind", choices=sorted(_GENERATORS), required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--size", type=int, required=True,
                    help="skeleton length (path: edges, cycle: vertices) or vertex count")
    sp.add_argument("--max-bag", type=int, default=1)
    sp.add_argument("--edge-prob", type=float, default=0.5)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--shuffle", action="store_true", help="randomly relabel expansion vertices")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("enumerate", help="classify all connected labeled graphs of order n against the oracle")
    sp.add_argument("n", type=int)
    sp.add_argument("--report", help="write a JSON report here")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("lemmas", help="run the lemma checkers over all small (claw, bull)-free graphs")
    sp.add_argument("n_max", type=int)
    sp.add_argument("--report", help="write a JSON report here")
    sp.set_defaults(func=cmd_lemmas)

    sp = sub.add_parser("verify", help="check classify output against its input graphs")
    with_input(sp)
    sp.add_argument("--certificates", required=True, help="newline-delimited classify records")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    for attr, env in _ENV_FLAGS.items():
        value = getattr(args, attr)
        if value is not None:
            os.environ[env] = str(value)
    try:
        return args.func(args, out)
    except CBStructError as exc:
        print(f"cbstruct: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT if isinstance(exc, InvalidInput) else EXIT_FAIL
    except OSError as exc:
        print(f"cbstruct: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
