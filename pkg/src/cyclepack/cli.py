"""Command-line interface.

Exit codes: 0 success, 1 negative answer (invalid certificate, failed
check), 2 packing stuck, 64 malformed input or usage, 66 unreadable file.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from . import generators, ineq, lemma_suite
from .certificate import PackingCertificate, certificate_problems
from .engine import EngineError, PackConfig
from .graph import Graph, GraphError, format_edge_list, parse_edge_list
from .minimalize import minimalize
from .pipeline import solve

EXIT_OK = 0
EXIT_NO = 1
EXIT_STUCK = 2
EXIT_USAGE = 64
EXIT_NOINPUT = 66


class UsageError(Exception):
    pass


class InputFileError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_text(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fp:
            return fp.read()
    except OSError as exc:
        raise InputFileError(f"cannot read {path}: {exc.strerror or exc}") from None


def _read_graph(path: str, stdin: TextIO) -> Graph:
    text = _read_text(path, stdin)
    try:
        return parse_edge_list(text)
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _int_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if not sep or a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"expected 1 <= A <= B, got {text!r}")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    p = _Parser(prog="cyclepack", description="Disjoint long-cycle packing toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("pack", parents=[common], help="find k disjoint cycles of order >= r")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--no-minimalize", action="store_true", help="run on the input graph directly")
    sp.add_argument("--max-iterations", type=int, default=1_000_000)
    sp.add_argument("file")

    sp = sub.add_parser("verify", parents=[common], help="check a packing certificate against a graph")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--cert", required=True)
    sp.add_argument("file")

    sp = sub.add_parser("minimalize", parents=[common], help="reduce to a minimal minor")
    sp.add_argument("--history", help="write the contraction history here instead of to stdout")
    sp.add_argument("file")

    sp = sub.add_parser("gen", parents=[common], help="emit a generated graph as an edge list")
    sp.add_argument("family", choices=sorted(generators.FAMILIES))
    sp.add_argument("params", nargs="*")
    sp.add_argument("--seed", type=int, default=0, help="random seed (gnp only)")

    sp = sub.add_parser("lemma-check", parents=[common], help="run a path-lemma guarantee sweep")
    sp.add_argument("--lemma", type=int, choices=(1, 2, 3, 4), required=True)
    sp.add_argument("--exhaustive-up-to", type=int, default=12, metavar="N")
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("ineq-check", parents=[common], help="feasibility table for the cycle-type systems")
    sp.add_argument("--kminus1-range", type=_int_range, required=True, metavar="A..B")
    return p


def _cmd_pack(args, stdin, out) -> int:
    g = _read_graph(args.file, stdin)
    if g.n == 0:
        raise UsageError(f"{args.file}: graph has no vertices")
    try:
        cfg = PackConfig(args.k, args.r, max_iterations=args.max_iterations)
    except EngineError as exc:
        raise UsageError(str(exc)) from None
    res = solve(g, cfg, use_minor=not args.no_minimalize)
    trace = [e.to_dict() for e in res.run.trace]
    if res.success:
        cert = res.certificate
        if args.format == "json":
            doc = json.loads(cert.to_json())
            doc.update(outcome="success", trace=trace)
            out.write(json.dumps(doc) + "\n")
        else:
            out.write(f"success: {len(cert.cycles)} disjoint cycles of order >= {cert.r}\n")
            for cyc in cert.cycles:
                out.write(" ".join(map(str, cyc)) + "\n")
        return EXIT_OK
    diag = res.run.diagnostics
    if args.format == "json":
        out.write(json.dumps({"outcome": "stuck", "diagnostics": diag.to_dict(), "trace": trace}) + "\n")
    else:
        out.write(f"stuck: {diag.reason}\n")
        out.write(f"potential (|C(r)| .. |C(1)|): {list(diag.potential)}\n")
        out.write(f"density and minimality conditions hold: {'yes' if diag.hypotheses_hold else 'no'}\n")
        for w in diag.missed_improvements:
            out.write(f"missed improvement: {w}\n")
    return EXIT_STUCK


def _cmd_verify(args, stdin, out) -> int:
    g = _read_graph(args.file, stdin)
    text = _read_text(args.cert, stdin)
    try:
        cert = PackingCertificate.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{args.cert}: malformed certificate ({exc})") from None
    problems = certificate_problems(g, PackingCertificate(args.k, args.r, cert.cycles))
    if args.format == "json":
        out.write(json.dumps({"valid": not problems, "problems": problems}) + "\n")
    else:
        out.write("valid\n" if not problems else "invalid\n" + "".join(f"  {p}\n" for p in problems))
    return EXIT_OK if not problems else EXIT_NO


def _cmd_minimalize(args, stdin, out) -> int:
    g = _read_graph(args.file, stdin)
    if g.n == 0:
        raise UsageError(f"{args.file}: graph has no vertices")
    res = minimalize(g)
    history = res.history.to_text()
    if args.history:
        try:
            with open(args.history, "w", encoding="utf-8") as fp:
                fp.write(history)
        except OSError as exc:
            raise InputFileError(f"cannot write {args.history}: {exc.strerror or exc}") from None
    if args.format == "json":
        out.write(json.dumps({
            "minor": format_edge_list(res.minor),
            "history": history,
            "original_d": str(res.original_d),
            "final_d": str(res.final_d),
        }) + "\n")
        return EXIT_OK
    out.write(format_edge_list(res.minor))
    if not args.history:
        # as comments, so stdout still parses as an edge list
        out.write(f"# average degree {res.original_d} -> {res.final_d}\n")
        out.write("".join(f"# {line}\n" for line in history.splitlines()))
    return EXIT_OK


def _cmd_gen(args, stdin, out) -> int:
    fn, types = generators.FAMILIES[args.family]
    if len(args.params) != len(types):
        raise UsageError(f"gen {args.family} takes {len(types)} parameter(s), got {len(args.params)}")
    try:
        params = [t(x) for t, x in zip(types, args.params)]
        g = fn(*params, args.seed) if args.family == "gnp" else fn(*params)
    except ValueError as exc:
        raise UsageError(f"gen {args.family}: {exc}") from None
    if args.format == "json":
        out.write(json.dumps({"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges()],
                              "vertices": list(g.vertices())}) + "\n")
    else:
        out.write(format_edge_list(g))
    return EXIT_OK


def _cmd_lemma_check(args, stdin, out) -> int:
    if args.exhaustive_up_to < 1 or args.samples < 1:
        raise UsageError("--exhaustive-up-to and --samples must be positive")
    reports = lemma_suite.run_sweep(args.lemma, args.exhaustive_up_to, args.samples, args.seed)
    ok = all(rep.ok for rep in reports)
    if args.format == "json":
        out.write(json.dumps({"ok": ok, "reports": [
            {"lemma": rep.lemma, "instances": rep.instances, "witnesses": rep.witnesses,
             "missing": rep.missing, "unsound": rep.unsound, "examples": [str(e) for e in rep.examples]}
            for rep in reports]}) + "\n")
    else:
        for rep in reports:
            out.write(rep.summary() + "\n")
    return EXIT_OK if ok else EXIT_NO


def _cmd_ineq_check(args, stdin, out) -> int:
    lo, hi = args.kminus1_range
    rows = [ineq.feasibility_row(km1) for km1 in range(lo, hi + 1)]
    ok = all(row["feasible"] == row["expected_feasible"] for row in rows)
    if args.format == "json":
        out.write(json.dumps({"ok": ok, "rows": rows}) + "\n")
        return EXIT_OK if ok else EXIT_NO
    out.write(f"{'k-1':>5}  {'system':<9}  {'feasible':<8}  {'expected':<8}  witnesses\n")
    for row in rows:
        out.write(f"{row['k_minus_1']:>5}  {row['system']:<9}  {str(row['feasible']).lower():<8}  "
                  f"{str(row['expected_feasible']).lower():<8}  {len(row['witnesses'])}\n")
    return EXIT_OK if ok else EXIT_NO


COMMANDS = {
    "pack": _cmd_pack,
    "verify": _cmd_verify,
    "minimalize": _cmd_minimalize,
    "gen": _cmd_gen,
    "lemma-check": _cmd_lemma_check,
    "ineq-check": _cmd_ineq_check,
}


def run(argv: Sequence[str], stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        return COMMANDS[args.command](args, stdin, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except InputFileError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NOINPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
