"""Command-line front end.

Verbs: ``validate``, ``classify``, ``group``, ``similar``, ``enumerate``,
``example``. Every verb prints a report: ``key: value`` lines in a fixed key
order, or with ``--machine`` a single JSON object on one line.

Exit codes: 0 success, 1 usage error, 2 parse/validation/file error,
3 degree cap exceeded, 4 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import classifier as C
from .census import run_census
from .errors import (
    CombsimError,
    DegreeTooLarge,
    InvariantViolation,
    ParseError,
    ValidationError,
)
from .generators import discrete_space, pseudolinear, rectangle_example, strongly_rigid_space
from .perm import default_cap, is_symmetric_group
from .similarity import (
    EXHAUSTIVE,
    MODES,
    are_combinatorially_similar,
    self_isometry_group,
    self_similarity_group,
)
from .space import SemimetricSpace, format_value, is_metric, parse_space, serialize_space, value_set

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_INVARIANT = 4

DEFAULT_MAX_ELEMENTS = 720


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    status: str = "ok"
    message: str = ""
    exit_code: int = EXIT_OK

    def fail(self, message: str, code: int) -> "Report":
        self.status = "error"
        self.message = message
        self.exit_code = code
        return self

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        lines += [f"input.{k}: {_fmt(v)}" for k, v in self.inputs.items()]
        lines.append(f"status: {self.status}")
        if self.message:
            lines.append(f"message: {self.message}")
        lines += [f"{k}: {_fmt(v)}" for k, v in self.results.items()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        record = {
            "command": self.command,
            "inputs": self.inputs,
            "status": self.status,
            "message": self.message,
            "results": self.results,
        }
        return json.dumps(record, separators=(",", ":")) + "\n"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return "; ".join(_fmt(x) for x in v)
    return str(v)


def _load(path):
    return parse_space(Path(path).read_text(encoding="utf-8"))


def _guard(report: Report, fn):
    """Run ``fn()`` and turn package errors into an error report."""
    try:
        fn()
    except DegreeTooLarge as exc:
        report.fail(str(exc), EXIT_CAP)
    except InvariantViolation as exc:
        report.fail(f"invariant violated: {exc}", EXIT_INVARIANT)
    except (ParseError, ValidationError) as exc:
        kind = "parse error" if isinstance(exc, ParseError) else "validation error"
        report.fail(f"{kind}: {exc}", EXIT_INPUT)
    except OSError as exc:
        report.fail(f"cannot read input: {exc.strerror or exc}", EXIT_INPUT)
    except CombsimError as exc:
        report.fail(str(exc), EXIT_USAGE)
    return report


def cmd_validate(path) -> Report:
    rep = Report("validate", {"path": str(path)})

    def run():
        space = _load(path)
        vals = value_set(space)
        rep.results.update(
            n=space.n,
            values=len(vals),
            value_set=", ".join(format_value(v) for v in vals),
            metric=is_metric(space),
        )

    return _guard(rep, run)


def cmd_classify(path, cap=None, mode=EXHAUSTIVE) -> Report:
    rep = Report("classify", {"path": str(path), "mode": mode})
    cap = default_cap() if cap is None else cap

    def run():
        space = _load(path)
        rep.results["n"] = space.n
        rep.results.update(C.classify(space).as_dict())
        if mode == EXHAUSTIVE and space.n > cap:
            rep.results["notice"] = (
                f"brute-force cross-check skipped: {space.n} points exceeds cap {cap}"
            )
            return
        check = C.theorem_crosscheck(space, mode, cap)
        rep.results.update(brute_force=check.brute_force, agree=check.agree)
        if not check.agree:
            raise InvariantViolation("structural and brute-force verdicts disagree")

    return _guard(rep, run)


def cmd_group(path, which="cs", cap=None, mode=EXHAUSTIVE, max_elements=DEFAULT_MAX_ELEMENTS) -> Report:
    rep = Report("group", {"path": str(path), "which": which, "mode": mode})
    if which not in ("cs", "iso"):
        return rep.fail(f"unknown group {which!r}; expected cs or iso", EXIT_USAGE)

    def run():
        space = _load(path)
        build = self_similarity_group if which == "cs" else self_isometry_group
        g = build(space, mode, cap)
        rep.results.update(n=space.n, order=g.order, full=is_symmetric_group(g))
        if g.order <= max_elements:
            rep.results["elements"] = [str(p) for p in g.sorted_elements()]
        else:
            rep.results["elements"] = f"suppressed (order {g.order} > {max_elements})"

    return _guard(rep, run)


def cmd_similar(path_a, path_b) -> Report:
    rep = Report("similar", {"path_a": str(path_a), "path_b": str(path_b)})

    def run():
        a, b = _load(path_a), _load(path_b)
        w = are_combinatorially_similar(a, b)
        if w is None:
            rep.results["similar"] = "no"
            return
        if not w.verify(a, b):
            raise InvariantViolation("returned witness fails verification")
        rep.results.update(similar="yes", psi=str(w.psi), f=str(w.f))

    return _guard(rep, run)


def cmd_enumerate(n: int) -> Report:
    rep = Report("enumerate", {"n": n})
    if not 3 <= n:
        return rep.fail(f"n must be between 3 and 5, got {n}", EXIT_USAGE)

    def run():
        census = run_census(n)
        rep.results.update(census.summary())
        if census.disagreements:
            rep.results["disagreement_ids"] = ",".join(census.disagreement_ids)
            raise InvariantViolation(f"{census.disagreements} crosscheck disagreements")

    return _guard(rep, run)


def build_example(name: str, params) -> SemimetricSpace:
    params = list(params)
    if name == "rectangle":
        _arity(name, params, 0)
        return rectangle_example()
    if name == "pseudolinear":
        _arity(name, params, 2)
        return pseudolinear(*params)
    if name == "discrete":
        _arity(name, params, 2)
        return discrete_space(_int(params[0]), params[1])
    if name == "rigid":
        _arity(name, params, 1)
        return strongly_rigid_space(_int(params[0]))
    raise ValueError(f"unknown example {name!r}; expected rectangle, pseudolinear, discrete or rigid")


def _arity(name, params, k):
    if len(params) != k:
        raise ValueError(f"example {name} takes {k} parameter(s), got {len(params)}")


def _int(s) -> int:
    try:
        return int(s)
    except ValueError:
        raise ValueError(f"expected an integer, got {s!r}") from None


def cmd_example(name: str, params=(), metric=False, output=None) -> tuple[Report, str]:
    """Build a named example; returns the report and the matrix text."""
    rep = Report("example", {"name": name, "params": " ".join(str(p) for p in params)})
    text = ""
    try:
        if name == "rigid":
            _arity(name, list(params), 1)
            space = strongly_rigid_space(_int(params[0]), metric_mode=metric)
        else:
            space = build_example(name, params)
    except (ValueError, CombsimError) as exc:
        return rep.fail(str(exc), EXIT_USAGE), text
    text = serialize_space(space)
    rep.results.update(
        n=space.n, value_set=", ".join(format_value(v) for v in value_set(space))
    )
    if output is not None:
        try:
            Path(output).write_text(text, encoding="utf-8")
        except OSError as exc:
            return rep.fail(f"cannot write {output}: {exc.strerror or exc}", EXIT_INPUT), text
        rep.results["output"] = str(output)
    return rep, text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _common(suppress: bool) -> argparse.ArgumentParser:
    # subparsers get SUPPRESS defaults so flags given before the verb survive
    dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=_positive_int, default=dflt(None),
                        help="brute-force degree cap (default: $COMBSIM_CAP or 8)")
    common.add_argument("--machine", action="store_true", default=dflt(False),
                        help="emit one JSON record")
    common.add_argument("--output", "-o", default=dflt(None), help="write output to this file")
    common.add_argument("--mode", choices=MODES, default=dflt(EXHAUSTIVE),
                        help="group search: exhaustive filter or pruned backtracking")
    return common


def make_parser() -> argparse.ArgumentParser:
    common = _common(suppress=True)
    parser = _Parser(prog="combsim", description=__doc__.splitlines()[0], parents=[_common(False)])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="check a matrix file")
    p.add_argument("path")
    p = sub.add_parser("classify", parents=[common], help="structural flags and cross-check")
    p.add_argument("path")
    p = sub.add_parser("group", parents=[common], help="compute Cs or Iso")
    p.add_argument("path")
    p.add_argument("which", nargs="?", choices=("cs", "iso"), default="cs")
    p.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS,
                   help="omit the element list above this group order")
    p = sub.add_parser("similar", parents=[common], help="decide combinatorial similarity")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p = sub.add_parser("enumerate", parents=[common], help="exhaustive pattern census")
    p.add_argument("n", type=int)
    p = sub.add_parser("example", parents=[common], help="write a named example matrix")
    p.add_argument("name", choices=("rectangle", "pseudolinear", "discrete", "rigid"))
    p.add_argument("params", nargs="*")
    p.add_argument("--metric", action="store_true", help="rigid: values in [1, 2]")
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    cap = args.cap
    if args.verb == "validate":
        rep = cmd_validate(args.path)
    elif args.verb == "classify":
        rep = cmd_classify(args.path, cap, args.mode)
    elif args.verb == "group":
        rep = cmd_group(args.path, args.which, cap, args.mode, args.max_elements)
    elif args.verb == "similar":
        rep = cmd_similar(args.path_a, args.path_b)
    elif args.verb == "enumerate":
        rep = cmd_enumerate(args.n)
    else:
        rep, text = cmd_example(args.name, args.params, args.metric, args.output)
        if args.output is None and rep.status == "ok":
            sys.stdout.write(text)
            return rep.exit_code
        _emit(rep, args.machine, None)
        return rep.exit_code
    _emit(rep, args.machine, args.output)
    return rep.exit_code


def _emit(rep: Report, machine: bool, output):
    out = rep.to_json() if machine else rep.to_text()
    if output is None:
        sys.stdout.write(out)
    else:
        Path(output).write_text(out, encoding="utf-8")
