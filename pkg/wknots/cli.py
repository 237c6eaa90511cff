# wknots/cli.py
"""
Command-line entry point: python -m wknots.cli <command> ...

Exit codes: 0 success, 1 failed check or computation error, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel, ValidationError

from wknots.alexander import alexander_poly
from wknots.arrows import EnumerationCapError, Skeleton, SpaceKind, graded_dimension, wheels_coordinates
from wknots.arrows.coproduct import primitive_dimension
from wknots.at import TrElement
from wknots.at.lie import bracketing_string
from wknots.at.words import format_word
from wknots.config import OUTPUT_FORMATS, RANK_MODES, configure, settings
from wknots.corpus import load_corpus
from wknots.errors import WKnotsError
from wknots.expansions import (
    BraidInvariantLog,
    braid_z_log,
    check_action_relations,
    check_alexander_theorem,
    check_relations,
    knot_z,
)
from wknots.knots import BraidError, BraidWord, FreeWord, FreeWordError, GaussCodeError, braid_act, parse_gauss_code
from wknots.kv import duflo_even_part, solve_kv_full, verify_kv
from wknots.logging_config import configure_logging
from wknots.schemas import (
    AlexanderCheckModel,
    BraidRelationReportModel,
    CombinationModel,
    DimensionRowModel,
    KVReportModel,
    KVSolutionModel,
    WheelsPolynomialModel,
)

logger = logging.getLogger("wknots.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class CheckFailed(Exception):
    """A computation finished but its report did not pass."""


# -------------------------------
# Output helpers
# -------------------------------


def _emit(payload, text: Optional[str] = None) -> None:
    if settings.output_format == "json":
        if isinstance(payload, BaseModel):
            print(payload.model_dump_json(indent=2))
        else:
            print(json.dumps(payload, indent=2))
    else:
        print(text if text is not None else _text_map(payload))


def _text_map(data: Dict[str, str]) -> str:
    return "\n".join(f"{k}: {v}" for k, v in data.items()) or "0"


def _read_diagram(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GaussCodeError(f"cannot read {path}: {exc}") from exc
    return parse_gauss_code(text)


def _signed(coef, body: str) -> str:
    if coef == 1:
        return body
    if coef == -1:
        return f"-{body}"
    return f"{coef}·{body}"


def format_log(log: BraidInvariantLog) -> str:
    """Degree-one tder terms print as arrows a_ij; longer ones as t_j[bracket]."""
    parts: List[str] = []
    for j, comp in enumerate(log.log.D.components, start=1):
        for w, c in sorted(comp.coeffs.items(), key=lambda t: (len(t[0]), t[0])):
            body = f"a{w[0]}{j}" if len(w) == 1 else f"t{j}{bracketing_string(w)}"
            parts.append(_signed(c, body))
    for w, c in log.log.w.terms.items():
        parts.append(_signed(c, f"tr({format_word(w)})"))
    return " + ".join(parts).replace("+ -", "- ") or "0"


def _relation_text(model: BraidRelationReportModel) -> str:
    lines = []
    for c in model.checks:
        state = "holds" if c.holds else f"fails ({c.witness})"
        flag = "" if c.as_expected else "  <-- unexpected"
        lines.append(f"{c.name}: {state}{flag}")
    verdict = "all relations behave as expected" if model.passed else "relation check FAILED"
    lines.append(f"{model.kind}, n={model.n_strands}: {verdict}")
    return "\n".join(lines)


# -------------------------------
# Commands
# -------------------------------


def cmd_dims(args) -> int:
    sk = Skeleton.parse(args.skeleton)
    space = SpaceKind.parse(args.space)
    row = DimensionRowModel(space=space.value, skeleton=str(sk))
    for m in range(args.max_degree + 1):
        try:
            row.dims.append(graded_dimension(sk, space, m, settings.rank_mode))
        except EnumerationCapError as exc:
            logger.warning("Stopping at degree %d: %s", m, exc)
            row.capped_at = m
            break
    if args.primitives:
        row.primitives = []
        for m in range(1, len(row.dims)):
            row.primitives.append(primitive_dimension(sk, space, m))
    _emit(row, row.text())
    return EXIT_OK


def cmd_alexander(args) -> int:
    poly = alexander_poly(_read_diagram(args.file))
    _emit({"alexander": str(poly)}, str(poly))
    return EXIT_OK


def cmd_expand(args) -> int:
    k = _read_diagram(args.file)
    z = knot_z(k, args.degree)
    if args.wheels or args.check_alexander:
        model = WheelsPolynomialModel.from_wheels(wheels_coordinates(z.value, z.degree, SpaceKind.SW))
    else:
        model = CombinationModel.from_combination(z.value)
    if not args.check_alexander:
        _emit(model, _text_map(model.terms))
        return EXIT_OK
    report = AlexanderCheckModel.from_report(check_alexander_theorem(k, z.degree, euler=args.euler))
    verdict = "pass" if report.passed else "fail"
    lines = [_text_map(model.terms), f"alexander check: {verdict}"]
    for p in report.parts:
        if not p.passed:
            lines.append(f"  {p.name} fails at degree {p.first_failing_degree}: expected {p.expected}, got {p.actual}")
    _emit({"wheels": model.model_dump(), "alexander_check": report.model_dump()}, "\n".join(lines))
    if not report.passed:
        raise CheckFailed("Alexander check failed")
    return EXIT_OK


def _duflo_line(a: TrElement, n: int) -> str:
    coeffs = a.power_coefficients()
    even = {k: coeffs.get(k, 0) for k in range(2, n + 1, 2)}
    oracle = duflo_even_part(n)
    if any(even[k] != oracle[k] for k in even):
        logger.warning("Even part of a differs from the closed form: %s vs %s", even, oracle)
    return ", ".join(f"x^{k}: {v}" for k, v in even.items())


def cmd_kv_solve(args) -> int:
    n = args.degree if args.degree is not None else settings.default_kv_degree
    sol = solve_kv_full(n)
    model = KVSolutionModel.from_solution(sol)
    if args.out:
        Path(args.out).write_text(model.model_dump_json(indent=2), encoding="utf-8")
        logger.info("KV solution written to %s", args.out)
    duflo = _duflo_line(sol.a, n)
    _emit(
        {"solution": model.model_dump(), "duflo_even_part": duflo},
        "\n".join(filter(None, [None if args.out else model.model_dump_json(indent=2), duflo])),
    )
    return EXIT_OK


def cmd_kv_verify(args) -> int:
    try:
        raw = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        logger.error("Cannot read %s: %s", args.file, exc)
        return EXIT_USAGE
    sol = KVSolutionModel.model_validate_json(raw).to_solution()
    report = KVReportModel.from_report(verify_kv(sol))
    lines = []
    for c in report.checks:
        lines.append(f"{c.equation} degree {c.degree}: {'pass' if c.passed else 'FAIL ' + str(c.residual)}")
    lines.append("all pass" if report.passed else "verification FAILED")
    _emit(report, "\n".join(lines))
    if not report.passed:
        raise CheckFailed("KV verification failed")
    return EXIT_OK


def cmd_braid(args) -> int:
    if args.braid_command == "act":
        b = BraidWord.parse(args.n, args.word)
        image = braid_act(FreeWord.parse(args.n, args.on), b)
        _emit({"image": str(image)}, str(image))
        return EXIT_OK
    if args.braid_command == "z-log":
        inv = braid_z_log(BraidWord.parse(args.n, args.word), args.degree, split=args.split)
        text = f"{format_log(inv)}\nperm: {' '.join(map(str, inv.perm))}"
        _emit(inv.to_dict(), text)
        return EXIT_OK
    reports = [BraidRelationReportModel.from_report(check_action_relations(args.n))]
    reports.append(BraidRelationReportModel.from_report(check_relations(args.n, args.degree)))
    _emit([r.model_dump() for r in reports], "\n".join(_relation_text(r) for r in reports))
    if not all(r.passed for r in reports):
        raise CheckFailed("braid relation check failed")
    return EXIT_OK


def cmd_corpus(args) -> int:
    entries = load_corpus(Path(args.dir) if args.dir else None)
    rows, ok = [], True
    for e in entries:
        poly = alexander_poly(e.diagram)
        match = None if e.alexander is None else poly.normalized() == e.alexander
        ok = ok and match is not False
        rows.append({
            "name": e.name,
            "crossings": e.diagram.n_crossings,
            "alexander": str(poly),
            "matches_expected": match,
        })
    text = "\n".join(
        f"{r['name']}: {r['crossings']} crossings, A = {r['alexander']}"
        + ("" if r["matches_expected"] is None else (" (ok)" if r["matches_expected"] else " (MISMATCH)"))
        for r in rows
    )
    _emit(rows, text)
    if args.verify and not ok:
        raise CheckFailed("corpus does not match expected.yaml")
    return EXIT_OK


# -------------------------------
# Parser
# -------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wknots", description="Exact computations for w-knotted objects.")
    parser.add_argument("--config", help="key=value settings file (also WKNOTS_CONFIG).")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, help="Output format.")
    parser.add_argument("--rank-mode", choices=RANK_MODES, help="Rank computation mode.")
    parser.add_argument("--log-level", help="Level for the wknots loggers, e.g. DEBUG.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="Graded dimensions of an arrow-diagram space.")
    p.add_argument("--space", required=True, help="v, sv, rv, w, sw or rw.")
    p.add_argument("--skeleton", default="line", help="line, circle or strands:<n>.")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--primitives", action="store_true", help="Also compute primitive dimensions.")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("alexander", help="Alexander polynomial of a Gauss-code file.")
    p.add_argument("file")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("expand", help="The expansion Z of a Gauss-code file.")
    p.add_argument("file")
    p.add_argument("--degree", type=int)
    p.add_argument("--wheels", action="store_true", help="Print wheels coordinates.")
    p.add_argument("--check-alexander", action="store_true")
    p.add_argument("--euler", action="store_true", help="Include the Euler-operator identity in the check.")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("kv-solve", help="Solve the KV equations up to a degree.")
    p.add_argument("--degree", type=int)
    p.add_argument("--out", help="Write the solution JSON here.")
    p.set_defaults(func=cmd_kv_solve)

    p = sub.add_parser("kv-verify", help="Verify a KV solution file.")
    p.add_argument("file")
    p.set_defaults(func=cmd_kv_verify)

    p = sub.add_parser("braid", help="w-braid computations.")
    bsub = p.add_subparsers(dest="braid_command", required=True)
    b = bsub.add_parser("act")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--word", required=True)
    b.add_argument("--on", required=True, help="Free-group word, e.g. 'x1 x2^-1'.")
    b = bsub.add_parser("z-log")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--word", required=True)
    b.add_argument("--degree", type=int)
    b.add_argument("--split", choices=("u", "l"), default="u")
    b = bsub.add_parser("check-relations")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--degree", type=int)
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("corpus", help="List the bundled corpus.")
    p.add_argument("--dir", help="Corpus directory (default from settings).")
    p.add_argument("--verify", action="store_true", help="Fail unless every polynomial matches expected.yaml.")
    p.set_defaults(func=cmd_corpus)
    return parser


USAGE_ERRORS = (GaussCodeError, BraidError, FreeWordError, ValidationError)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        configure(args.config, output_format=args.format, rank_mode=args.rank_mode, log_level=args.log_level)
    except ValidationError as exc:
        print(f"invalid settings: {exc}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(settings.log_level)

    handler: Callable = args.func
    try:
        return handler(args)
    except CheckFailed as exc:
        logger.info("%s", exc)
        return EXIT_FAILED
    except USAGE_ERRORS as exc:
        logger.error("%s", exc)
        return EXIT_USAGE
    except WKnotsError as exc:
        logger.error("%s failed: %s", args.command, exc)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
