"""``nl``: evaluate, condition and analyse NL models from the command line.

Exit codes: 0 success, 1 verification or internal failure, 2 a standing
assumption or precondition failed (named in the output), 64 usage or
parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import logging
import random
import sys
from fractions import Fraction
from typing import Optional

from . import dilation as dil
from .conditioning import condition_vbm, natural_extension, regular_differs, regular_extension
from .errors import (
    AssumptionError,
    CapacityError,
    InternalInconsistencyError,
    InvalidParameterError,
    PreconditionError,
    UnsupportedModelError,
    UsageError,
)
from .model import Family, check_two_monotone, recognize_submodel
from .modelfile import ModelFile, from_model, load
from .oracle import envelope_check, oracle_natural_extension, permutation_vertices
from .sampling import random_space, random_vbm

log = logging.getLogger("nldilation.cli")

EXIT_OK, EXIT_FAIL, EXIT_ASSUMPTION, EXIT_USAGE = 0, 1, 2, 64


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- rendering -----------------------------------------------------------------


def decimal(x: Fraction) -> str:
    return f"{float(x):.6g}"


def number(x: Fraction) -> dict:
    return {"exact": str(x), "decimal": decimal(x)}


def _jsonable(value):
    if isinstance(value, Fraction):
        return number(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _text_cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, Fraction):
        return str(value) if value.denominator == 1 else f"{value} ({decimal(value)})"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return ", ".join(_text_cell(v) for v in value)
    if isinstance(value, dict):
        return ", ".join(f"{k}={_text_cell(v)}" for k, v in value.items())
    return str(value)


def _text_table(header, rows) -> str:
    cells = [[str(h) for h in header]] + [[_text_cell(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _csv_table(header, rows) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    wide = []
    for i, h in enumerate(header):
        wide.append(h)
        if any(isinstance(row[i], Fraction) for row in rows):
            wide.append(f"{h}_decimal")
    writer.writerow(wide)
    for row in rows:
        line = []
        for i, v in enumerate(row):
            numeric = any(isinstance(r[i], Fraction) for r in rows)
            if isinstance(v, Fraction):
                line += [str(v), decimal(v)]
            else:
                text = "" if v is None else _text_cell(v) if not isinstance(v, str) else v
                line += [text, ""] if numeric else [text]
        writer.writerow(line)
    return out.getvalue()


class Report:
    """One run's output: summary fields plus named tables."""

    def __init__(self, command: list, model: Optional[ModelFile]):
        self.doc = {"command": command}
        if model is not None:
            m = model.model
            self.doc["model"] = {
                "atoms": list(m.space.atoms),
                "family": m.family.value,
                "submodel": str(recognize_submodel(m)),
                "a": m.a,
                "b": m.b,
                "c": m.c,
            }
        self.doc["results"] = {}
        self.tables = []

    def set(self, key, value):
        self.doc["results"][key] = value

    def table(self, name, header, rows):
        self.tables.append((name, header, rows))
        self.doc["results"][name] = [dict(zip(header, row)) for row in rows]

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(_jsonable(self.doc), indent=2, ensure_ascii=False) + "\n"
        if fmt == "csv":
            return "\n".join(_csv_table(h, r) for _, h, r in self.tables)
        out = []
        if "model" in self.doc:
            m = self.doc["model"]
            out.append(
                f"model: {m['family']} ({m['submodel']}), a = {_text_cell(m['a'])}, "
                f"b = {_text_cell(m['b'])}, c = {_text_cell(m['c'])}"
            )
        tabled = {name for name, _, _ in self.tables}
        for key, value in self.doc["results"].items():
            if key not in tabled:
                out.append(f"{key}: {_text_cell(value)}")
        for name, header, rows in self.tables:
            out.append("")
            out.append(f"[{name}]")
            out.append(_text_table(header, rows))
        return "\n".join(out) + "\n"


# -- commands ------------------------------------------------------------------


def _model(args) -> ModelFile:
    if not args.model:
        raise UsageError("--model FILE is required")
    return load(args.model)


def cmd_eval(args, report: Report) -> int:
    mf = _model(args)
    rows = []
    for expr in args.events:
        E = mf.event(expr)
        rows.append([expr, str(E), mf.model.lower(E), mf.model.upper(E)])
    report.table("events", ["expression", "event", "lower", "upper"], rows)
    return EXIT_OK


def cmd_condition(args, report: Report) -> int:
    mf = _model(args)
    m = mf.model
    B = mf.event(args.B)
    if B.is_empty:
        raise UsageError("cannot condition on the impossible event")
    report.set("conditioning_event", str(B))
    report.set("lower_B", m.lower(B))
    report.set("method", args.method)
    if args.emit in ("table", "both"):
        if args.events == "named":
            targets = [(name, E) for name, E in mf.events.items()]
        else:
            targets = [(str(E), E) for E in m.space.events()]
        header = ["event", "lower", "upper", "lower_case", "upper_case"]
        if args.method == "regular":
            header.append("differs_from_natural")
        rows = []
        for name, A in targets:
            ext = (regular_extension if args.method == "regular" else natural_extension)(m, A, B)
            row = [name, ext.lower, ext.upper, *ext.case_label]
            if args.method == "regular":
                row.append(regular_differs(m, A, B))
            rows.append(row)
        report.table("conditionals", header, rows)
    if args.emit in ("params", "both"):
        if m.family is not Family.VBM:
            if args.emit == "params":
                raise UnsupportedModelError("conditioned parameters exist for VBMs only")
        else:
            cond = condition_vbm(m, B)
            report.set("conditioned_params", {"a_B": cond.a, "b_B": cond.b, "c_B": cond.c})
            report.set("conditioned_submodel", str(recognize_submodel(cond)))
    return EXIT_OK


def _dilation_block_rows(rep: dil.DilationReport):
    return [
        [str(b.block), b.lower, b.upper, b.labels[0], b.labels[1], b.satisfied]
        for b in rep.per_block
    ]


_BLOCK_HEADER = ["block", "lower", "upper", "label_a", "label_b", "satisfied"]


def _add_dilation(report: Report, m, A, P, mode: str, characterize: bool) -> None:
    rep = dil.characterize_dilation(m, A, P) if characterize else dil.check_dilation(m, A, P, mode)
    report.set("event", str(A))
    report.set("partition", str(P))
    report.set("lower", rep.lower)
    report.set("upper", rep.upper)
    report.set("method", "characterization" if characterize else f"direct ({mode})")
    report.set("verdict", rep.verdict)
    report.set("dilates", rep.dilates)
    report.set("assumptions", rep.assumptions)
    if characterize:
        direct = dil.check_dilation(m, A, P)
        if direct.dilates != (rep.verdict != dil.NONE):
            raise InternalInconsistencyError(
                f"characterization says {rep.verdict}, direct check says {direct.verdict}"
            )
    report.table("blocks", _BLOCK_HEADER, _dilation_block_rows(rep))


def _add_extent(report: Report, m, A, P) -> None:
    e = dil.extent(m, A, P)
    report.set("extent", e.value)
    report.set("extent_brute_force", e.brute_force)
    report.set("extent_argmin", str(e.argmin))
    report.set("b_star", None if e.b_star is None else str(e.b_star))
    report.set("m0", e.m0)
    report.set("m1", e.m1)
    report.set("extent_terms", list(e.terms))
    classes = []
    for B in P:
        if B in e.null_blocks:
            cls = "null"
        elif B in e.plus:
            cls = "plus"
        elif B in e.zero:
            cls = "zero"
        elif B in e.one:
            cls = "one"
        else:
            cls = "positive"
        classes.append([str(B), cls, dil.imprecision_variation(m, A, B)])
    report.table("extent_blocks", ["block", "class", "imprecision_variation"], classes)
    if e.value != e.brute_force:
        raise InternalInconsistencyError(f"extent {e.value} != brute-force minimum {e.brute_force}")


def _add_coarsen(report: Report, m, A, P, mode: str) -> None:
    rows = [[str(c), r.verdict, r.dilates] for c, r in dil.dilating_coarsenings(m, A, P, mode)]
    report.table("coarsenings", ["partition", "verdict", "dilates"], rows)
    found = dil.find_dilating_coarser(m, A, P, mode)
    report.set("first_dilating_coarser", None if found is None else str(found))
    try:
        hyp = dil.coarsening_hypotheses(m, A, P)
        report.set("coarsening_theorem", "applies" if hyp.holds else "does not apply")
        report.set("coarsening_conditions", hyp.labels)
    except (PreconditionError, UnsupportedModelError) as exc:
        report.set("coarsening_theorem", f"not applicable: {exc}")


def _add_constrict(report: Report, m, A, P) -> None:
    c = dil.check_constriction(m, A, P)
    report.set("constricts", c.verdict)
    report.set("constriction_witness", None if c.witness is None else str(c.witness))
    report.set("constriction_shortcut", c.proposition)
    report.set("constriction_shortcut_verdict", c.shortcut_verdict)
    rows = [[str(B), ne.lower, ne.upper] for B, ne in c.per_block]
    report.table("constriction_blocks", ["block", "lower", "upper"], rows)


def cmd_dilation(args, report: Report) -> int:
    mf = _model(args)
    m, A, P = mf.model, mf.event(args.A), mf.partition(args.partition)
    _add_dilation(report, m, A, P, args.mode, args.characterize)
    if args.extent:
        _add_extent(report, m, A, P)
    if args.coarsen:
        _add_coarsen(report, m, A, P, args.mode)
    if args.constrict:
        _add_constrict(report, m, A, P)
    return EXIT_OK


def cmd_extent(args, report: Report) -> int:
    mf = _model(args)
    m, A, P = mf.model, mf.event(args.A), mf.partition(args.partition)
    report.set("event", str(A))
    report.set("partition", str(P))
    _add_extent(report, m, A, P)
    return EXIT_OK


def cmd_coarsen(args, report: Report) -> int:
    mf = _model(args)
    m, A, P = mf.model, mf.event(args.A), mf.partition(args.partition)
    report.set("event", str(A))
    report.set("partition", str(P))
    _add_coarsen(report, m, A, P, args.mode)
    return EXIT_OK


def cmd_constrict(args, report: Report) -> int:
    mf = _model(args)
    m, A, P = mf.model, mf.event(args.A), mf.partition(args.partition)
    report.set("event", str(A))
    report.set("partition", str(P))
    _add_constrict(report, m, A, P)
    return EXIT_OK


def cmd_verify(args, report: Report) -> int:
    rng = random.Random(args.seed)
    report.set("seed", args.seed)
    if args.random_vbm is not None:
        if args.model:
            raise UsageError("give either --model or --random-vbm, not both")
        mf = from_model(random_vbm(rng, random_space(args.random_vbm)))
        report.doc = {"command": report.doc["command"], "model": Report([], mf).doc["model"],
                      "results": report.doc["results"]}
        report.set("generated_p0", list(mf.model.p0))
    else:
        mf = _model(args)
    m = mf.model
    log.info("verify: seed %s, model %s", args.seed, m)

    env = envelope_check(m)
    report.set("envelope_check", "pass" if env else f"fail at {env.witness[0]}")
    two = check_two_monotone(m)
    report.set("two_monotone", "pass" if two else "fail at " + ", ".join(map(str, two.witness)))
    if not env:
        report.set("status", "fail")
        return EXIT_FAIL

    vertices = permutation_vertices(m)
    report.set("vertices", len(vertices))
    events = list(m.space.events())
    conditioning = [B for B in events if m.lower(B) > 0]
    pairs = list(itertools.product(events, conditioning))
    if args.pairs == "sample" and len(pairs) > args.samples:
        pairs = rng.sample(pairs, args.samples)
    checked = 0
    for A, B in pairs:
        closed = natural_extension(m, A, B)
        oracle = oracle_natural_extension(m, A, B, vertices)
        checked += 1
        if (closed.lower, closed.upper) != (oracle.lower, oracle.upper):
            report.set("pairs_checked", checked)
            report.set("counterexample", {
                "A": str(A), "B": str(B),
                "closed_form": [closed.lower, closed.upper],
                "oracle": [oracle.lower, oracle.upper],
            })
            report.set("status", "fail")
            return EXIT_FAIL
    report.set("pairs_checked", checked)
    report.set("status", "pass" if two else "fail")
    return EXIT_OK if two else EXIT_FAIL


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", metavar="FILE", help="JSON model file")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _ArgumentParser(prog="nl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("eval", parents=[common], help="lower and upper probability of events")
    p.add_argument("events", nargs="+", metavar="EVENT")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("condition", parents=[common], help="condition on an event")
    p.add_argument("B", metavar="EVENT")
    p.add_argument("--method", choices=("natural", "regular"), default="natural")
    p.add_argument("--emit", choices=("table", "params", "both"), default="both")
    p.add_argument("--events", choices=("all", "named"), default="all")
    p.set_defaults(func=cmd_condition)

    def analysis(name, func, help, flags=False):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("A", metavar="EVENT")
        p.add_argument("partition", metavar="PARTITION",
                       help="partition name from the model file, or blocks separated by ';'")
        p.add_argument("--mode", choices=("weak", "strict"), default="weak")
        if flags:
            p.add_argument("--characterize", action="store_true")
            p.add_argument("--coarsen", action="store_true")
            p.add_argument("--extent", action="store_true")
            p.add_argument("--constrict", action="store_true")
        p.set_defaults(func=func)

    analysis("dilation", cmd_dilation, "dilation report", flags=True)
    analysis("extent", cmd_extent, "extent of dilation")
    analysis("coarsen", cmd_coarsen, "coarser partitions that dilate")
    analysis("constrict", cmd_constrict, "constriction report")

    p = sub.add_parser("verify", parents=[common], help="check closed forms against the vertex oracle")
    p.add_argument("--pairs", choices=("all", "sample"), default="all")
    p.add_argument("--samples", type=int, default=200, help="pairs drawn with --pairs sample")
    p.add_argument("--random-vbm", type=int, metavar="N", help="verify a random VBM on N atoms")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[list] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")

    model = None
    report = Report(argv, None)
    try:
        if args.model:
            model = load(args.model)
            report = Report(argv, model)
        code = args.func(args, report)
    except AssumptionError as exc:
        return _fail(report, args.format, exc, EXIT_ASSUMPTION, assumption=exc.assumption)
    except PreconditionError as exc:
        return _fail(report, args.format, exc, EXIT_ASSUMPTION)
    except InternalInconsistencyError as exc:
        return _fail(report, args.format, exc, EXIT_FAIL)
    except (UsageError, InvalidParameterError, CapacityError, UnsupportedModelError) as exc:
        return _fail(report, args.format, exc, EXIT_USAGE)
    sys.stdout.write(report.render(args.format))
    return code


def _fail(report: Report, fmt: str, exc: Exception, code: int, assumption=None) -> int:
    print(f"nl: {exc}", file=sys.stderr)
    report.doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
    if assumption:
        report.doc["error"]["assumption"] = assumption
    if fmt == "json":
        sys.stdout.write(report.render("json"))
    elif fmt == "text":
        sys.stdout.write(f"error: {exc}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
