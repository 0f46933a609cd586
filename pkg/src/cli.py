#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrix Subring Lab — Command-Line Driver

    python -m src validate SPEC
    python -m src build {lambda,sigma,gamma,block,tiled} SPEC
    python -m src dims SPEC
    python -m src verify-thm1 SPEC
    python -m src verify-bounds SPEC [NAME ...]
    python -m src verify-prop412 SPEC
    python -m src report-all [SPEC]
    python -m src --list-corpus

SPEC is a path to a spec file or `corpus:<name>`. Every command writes a
JSON ReportFile (sorted keys, two-space indent) to standard output or to
--out, and exits with

    0  every requested check passed
    1  input or validation error
    2  at least one check failed
    3  nothing failed but something was cut off by --depth or --budget

Two runs with the same spec, options and seed produce the same report up to
the wall_time field.
"""

import argparse
import hashlib
import json
import logging
import sys
import time
from dataclasses import dataclass, field as dataclass_field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .algebra import validate_algebra
from .constants import (DEFAULT_DEPTH, DEFAULT_SEED, EXIT_CHECK_FAILED, EXIT_INCONCLUSIVE,
                        EXIT_INPUT_ERROR, EXIT_OK, FORMAT_VERSION, MAX_BUILT_DIM,
                        STATUS_FAIL, STATUS_INCONCLUSIVE, STATUS_PASS, TOOL_NAME,
                        TOOL_VERSION)
from .corpus import CORPUS_PREFIX, corpus, corpus_entry, corpus_names
from .dimensions import (BLOCK_CHECKS, LAMBDA_CHECKS, Budget, check_bound,
                         check_prop_4_12_hypotheses, findim_estimate, is_self_injective)
from .errors import AlgebraError, ParseError, ZeroRingError
from .field import FieldSpec
from .resolutions import AT_LEAST
from .rings import (build_block_extension, build_full_matrix, build_lambda, build_sigma,
                    build_tiled_triangular, validate_block_spec, validate_lambda_spec,
                    validate_tiled_spec)
from .specfile import SpecFile, load, serialize
from .tilting import verify_theorem

logger = logging.getLogger(__name__)

COMMANDS = ("validate", "build", "dims", "verify-thm1", "verify-bounds",
            "verify-prop412", "report-all")
BUILD_KINDS = ("lambda", "sigma", "gamma", "block", "tiled")


# =============================================================================
# OPTIONS AND REPORTS
# =============================================================================

@dataclass
class RunOptions:
    """
    Engine knobs for one run. None means "take the spec file's option line,
    then the library default".
    """

    seed: Optional[int] = None
    depth: Optional[int] = None
    budget: Optional[Budget] = None
    max_dim: Optional[int] = None
    field: Optional[FieldSpec] = None
    kind: str = ""
    bounds: Tuple[str, ...] = ()

    def resolved(self, spec: Optional[SpecFile]) -> "RunOptions":
        opts = spec.options if spec is not None else None

        def pick(value, key, default):
            if value is not None:
                return value
            if opts is not None and getattr(opts, key) is not None:
                return getattr(opts, key)
            return default

        budget = self.budget
        if budget is None:
            budget = Budget.parse(opts.budget) if opts is not None and opts.budget else Budget()
        return RunOptions(pick(self.seed, "seed", DEFAULT_SEED),
                          pick(self.depth, "depth", DEFAULT_DEPTH), budget,
                          pick(self.max_dim, "max_dim", MAX_BUILT_DIM),
                          self.field, self.kind, tuple(self.bounds))

    def to_dict(self) -> Dict:
        return {
            "seed": self.seed,
            "depth": self.depth,
            "budget": str(self.budget) if self.budget is not None else None,
            "max_dim": self.max_dim,
            "field": self.field.descriptor if self.field is not None else None,
        }


@dataclass
class CheckRecord:
    """One line of a report: a named check, its status and the numbers behind it."""

    name: str
    status: str
    data: Dict = dataclass_field(default_factory=dict)
    validation: bool = False

    def to_dict(self) -> Dict:
        return {"name": self.name, "status": self.status, "data": self.data}


def exit_code_for(records: Sequence[CheckRecord]) -> int:
    if any(r.validation and r.status == STATUS_FAIL for r in records):
        return EXIT_INPUT_ERROR
    if any(r.status == STATUS_FAIL for r in records):
        return EXIT_CHECK_FAILED
    if any(r.status == STATUS_INCONCLUSIVE for r in records):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


@dataclass
class ReportFile:
    """The machine-readable outcome of one command."""

    command: str
    subject: str
    input_digest: str
    options: Dict
    records: List[CheckRecord] = dataclass_field(default_factory=list)
    wall_time: float = 0.0

    @property
    def exit_code(self) -> int:
        return exit_code_for(self.records)

    @property
    def status(self) -> str:
        return {EXIT_OK: STATUS_PASS, EXIT_INCONCLUSIVE: STATUS_INCONCLUSIVE}.get(
            self.exit_code, STATUS_FAIL)

    def to_dict(self) -> Dict:
        return {
            "format_version": FORMAT_VERSION,
            "tool": TOOL_NAME,
            "version": TOOL_VERSION,
            "command": self.command,
            "subject": self.subject,
            "input_digest": self.input_digest,
            "options": self.options,
            "status": self.status,
            "exit_code": self.exit_code,
            "records": [r.to_dict() for r in self.records],
            "wall_time": round(self.wall_time, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, default=str) + "\n"

    def summary(self) -> str:
        counts = {s: sum(r.status == s for r in self.records)
                  for s in (STATUS_PASS, STATUS_FAIL, STATUS_INCONCLUSIVE)}
        return (f"{self.command} {self.subject}: {self.status} "
                f"({counts[STATUS_PASS]} pass, {counts[STATUS_FAIL]} fail, "
                f"{counts[STATUS_INCONCLUSIVE]} inconclusive)")


def input_digest(texts: Sequence[str]) -> str:
    h = hashlib.sha256()
    for text in texts:
        h.update(text.encode("utf-8"))
    return h.hexdigest()


# =============================================================================
# COMMANDS
# =============================================================================

def _report_status(ok: bool) -> str:
    return STATUS_PASS if ok else STATUS_FAIL


def _validate(spec: SpecFile, opts: RunOptions) -> List[CheckRecord]:
    reports = [validate_algebra(spec.algebra)]
    if spec.lam is not None:
        reports.append(validate_lambda_spec(spec.lambda_spec()))
    if spec.block is not None:
        reports.append(spec.idempotents().check(spec.algebra))
        reports.append(validate_block_spec(spec.block_spec()))
    if spec.tiled is not None:
        reports.append(validate_tiled_spec(spec.tiled_spec()))
    records = []
    for report in reports:
        if not report.ok:
            logger.warning(report.summary())
        records.append(CheckRecord(f"validate:{report.subject}", _report_status(report.ok),
                                   report.to_dict(), validation=True))
    return records


def _builder(spec: SpecFile, kind: str, max_dim: int):
    if kind == "lambda":
        return build_lambda(spec.lambda_spec(), max_dim)
    if kind == "sigma":
        return build_sigma(spec.lambda_spec(), max_dim)
    if kind == "gamma":
        return build_full_matrix(spec.algebra, spec.lam.n if spec.lam else 2, max_dim)
    if kind == "block":
        return build_block_extension(spec.block_spec(), max_dim)
    if kind == "tiled":
        return build_tiled_triangular(spec.tiled_spec(), max_dim)
    raise KeyError(f"unknown ring kind {kind!r}; choose from {', '.join(BUILD_KINDS)}")


def _build(spec: SpecFile, opts: RunOptions) -> List[CheckRecord]:
    ring = _builder(spec, opts.kind, opts.max_dim)
    report = validate_algebra(ring.algebra)
    data = ring.to_dict()
    data["validation"] = report.to_dict()
    return [CheckRecord(f"build:{opts.kind}", _report_status(report.ok), data)]


def _rings_for_dims(spec: SpecFile) -> List[str]:
    kinds = []
    if spec.lam is not None:
        kinds += ["lambda", "sigma"]
    if spec.block is not None:
        kinds.append("block")
    if spec.tiled is not None:
        kinds.append("tiled")
    return kinds


def _dims_record(name: str, algebra, opts: RunOptions) -> CheckRecord:
    report = findim_estimate(algebra, opts.budget, opts.seed, opts.depth)
    data = report.to_dict()
    data["dim"] = algebra.dim
    data["self_injective"] = is_self_injective(algebra, opts.depth)
    cut = report.gldim.tag == AT_LEAST or report.cutoffs > 0
    return CheckRecord(f"dims:{name}", STATUS_INCONCLUSIVE if cut else STATUS_PASS, data)


def _dims(spec: SpecFile, opts: RunOptions) -> List[CheckRecord]:
    records = [_dims_record("base", spec.algebra, opts)]
    for kind in _rings_for_dims(spec):
        try:
            ring = _builder(spec, kind, opts.max_dim)
        except ZeroRingError as exc:
            records.append(CheckRecord(f"dims:{kind}", STATUS_INCONCLUSIVE,
                                       {"note": f"not built: {exc}"}))
            continue
        records.append(_dims_record(kind, ring.algebra, opts))
    return records


def _verify_thm1(spec: SpecFile, opts: RunOptions) -> List[CheckRecord]:
    if spec.lam is None:
        raise LookupError(f"{spec.name} has no lambda section")
    try:
        report = verify_theorem(spec.lambda_spec(), depth=opts.depth, seed=opts.seed)
    except ZeroRingError as exc:
        return [CheckRecord("verify-thm1", STATUS_INCONCLUSIVE,
                            {"note": f"degenerate spec, Σ is not defined: {exc}"})]
    return [CheckRecord("verify-thm1", _report_status(report.ok), report.to_dict())]


def applicable_bounds(spec: SpecFile) -> List[str]:
    names = []
    if spec.lam is not None:
        names += list(LAMBDA_CHECKS)
    if spec.block is not None:
        names += list(BLOCK_CHECKS)
    return names


def _verify_bounds(spec: SpecFile, opts: RunOptions) -> List[CheckRecord]:
    names = list(opts.bounds) or applicable_bounds(spec)
    records = []
    for name in names:
        if name in LAMBDA_CHECKS:
            subject = spec.lambda_spec() if spec.lam is not None else None
        elif name in BLOCK_CHECKS:
            subject = spec.block_spec() if spec.block is not None else None
        else:
            raise KeyError(f"unknown bound {name!r}")
        if subject is None:
            raise LookupError(f"{name} needs a "
                              f"{'lambda' if name in LAMBDA_CHECKS else 'block'} section")
        check = check_bound(name, subject, depth=opts.depth, budget=opts.budget, seed=opts.seed)
        records.append(CheckRecord(f"verify-bounds:{name}", check.status, check.to_dict()))
    return records


def _verify_prop412(spec: SpecFile, opts: RunOptions) -> List[CheckRecord]:
    report = check_prop_4_12_hypotheses(spec.tiled_spec(), depth=opts.depth,
                                        budget=opts.budget, seed=opts.seed)
    return [CheckRecord("verify-prop412", report.status, report.to_dict())]


def _report_all_one(spec: SpecFile, opts: RunOptions) -> List[CheckRecord]:
    records = _validate(spec, opts)
    if any(r.status == STATUS_FAIL for r in records):
        return records
    if spec.lam is not None:
        records += _verify_thm1(spec, opts)
    records += _verify_bounds(spec, opts)
    if spec.tiled is not None:
        records += _verify_prop412(spec, opts)
    return records


RUNNERS: Dict[str, Callable[[SpecFile, RunOptions], List[CheckRecord]]] = {
    "validate": _validate,
    "build": _build,
    "dims": _dims,
    "verify-thm1": _verify_thm1,
    "verify-bounds": _verify_bounds,
    "verify-prop412": _verify_prop412,
    "report-all": _report_all_one,
}


def _error_record(exc: Exception) -> CheckRecord:
    return CheckRecord("error", STATUS_FAIL, {"error": type(exc).__name__, "message": str(exc)},
                       validation=True)


def run(command: str, spec: Optional[SpecFile], options: Optional[RunOptions] = None
        ) -> Tuple[ReportFile, int]:
    """
    Execute one command and assemble its report.

    `report-all` with spec=None runs over the whole corpus, entries in name
    order, each with its own option lines. Lab errors (invalid specs, caps,
    missing sections) become an `error` record with exit code 1.
    """
    if command not in RUNNERS:
        raise KeyError(f"unknown command {command!r}; choose from {', '.join(COMMANDS)}")
    options = options or RunOptions()
    start = time.perf_counter()
    if spec is None:
        if command != "report-all":
            raise ValueError(f"{command} needs a spec")
        entries = corpus(options.field) if options.field is not None else corpus()
        subject = "corpus"
    else:
        entries = [spec]
        subject = spec.name
    records: List[CheckRecord] = []
    for entry in entries:
        opts = options.resolved(entry)
        logger.info("%s on %s (depth %d, seed %d, budget %s)", command, entry.name,
                    opts.depth, opts.seed, opts.budget)
        try:
            produced = RUNNERS[command](entry, opts)
        except (AlgebraError, LookupError) as exc:
            logger.error("%s: %s", entry.name, exc)
            produced = [_error_record(exc)]
        if len(entries) > 1:
            for r in produced:
                r.name = f"{entry.name}/{r.name}"
        records.extend(produced)
    report = ReportFile(command, subject, input_digest([serialize(e) for e in entries]),
                        options.resolved(spec).to_dict(), records,
                        time.perf_counter() - start)
    logger.info(report.summary())
    return report, report.exit_code


# =============================================================================
# ARGUMENT PARSING
# =============================================================================

def _budget(text: str) -> Budget:
    try:
        return Budget.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.from_descriptor(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of standard output")
    common.add_argument("--seed", type=int, help=f"random seed (default {DEFAULT_SEED})")
    common.add_argument("--depth", type=int,
                        help=f"resolution depth cutoff (default {DEFAULT_DEPTH})")
    common.add_argument("--budget", type=_budget,
                        help="findim estimator budget 'cap,samples,depth' (default 24,6,6)")
    common.add_argument("--field", type=_field, help="re-read literals over Q or Fp:p")
    common.add_argument("--max-dim", dest="max_dim", type=int,
                        help=f"largest ring dimension to build (default {MAX_BUILT_DIM})")
    noise = common.add_mutually_exclusive_group()
    noise.add_argument("--verbose", "-v", action="store_true", help="log progress")
    noise.add_argument("--quiet", "-q", action="store_true", help="log errors only")

    parser = argparse.ArgumentParser(
        prog="python -m src",
        description="Exact computations on matrix subrings and their derived equivalences.")
    parser.add_argument("--list-corpus", action="store_true",
                        help="print the bundled corpus entry names and exit")
    sub = parser.add_subparsers(dest="command")
    spec_help = "spec file path or corpus:<name>"
    sub.add_parser("validate", parents=[common], help="check every spec condition") \
        .add_argument("spec", help=spec_help)
    build = sub.add_parser("build", parents=[common], help="build one ring")
    build.add_argument("kind", choices=BUILD_KINDS)
    build.add_argument("spec", help=spec_help)
    sub.add_parser("dims", parents=[common], help="gldim and findim evidence") \
        .add_argument("spec", help=spec_help)
    sub.add_parser("verify-thm1", parents=[common], help="tilting pipeline for Λ and Σ") \
        .add_argument("spec", help=spec_help)
    bounds = sub.add_parser("verify-bounds", parents=[common], help="dimension inequalities")
    bounds.add_argument("spec", help=spec_help)
    bounds.add_argument("bounds", nargs="*", help="check names (default: all applicable)")
    sub.add_parser("verify-prop412", parents=[common], help="tiled-ring hypotheses") \
        .add_argument("spec", help=spec_help)
    sub.add_parser("report-all", parents=[common], help="everything, on a spec or the corpus") \
        .add_argument("spec", nargs="?", help=spec_help + " (default: whole corpus)")
    return parser.parse_args(argv)


def _configure_logging(args: argparse.Namespace) -> None:
    verbose, quiet = getattr(args, "verbose", False), getattr(args, "quiet", False)
    level = logging.DEBUG if verbose else logging.ERROR if quiet else logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def load_spec(ref: str, field: Optional[FieldSpec] = None,
              max_dim: Optional[int] = None) -> SpecFile:
    if ref.startswith(CORPUS_PREFIX):
        return corpus_entry(ref, field) if field is not None else corpus_entry(ref)
    return load(ref, field, max_dim or MAX_BUILT_DIM)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parse_args(argv)
    _configure_logging(args)
    if args.list_corpus:
        print("\n".join(corpus_names()))
        return EXIT_OK
    if not args.command:
        print("a command is required (see --help)", file=sys.stderr)
        return EXIT_INPUT_ERROR

    spec = None
    if getattr(args, "spec", None):
        try:
            spec = load_spec(args.spec, args.field, args.max_dim)
        except ParseError as exc:
            print(f"{args.spec}: {exc}", file=sys.stderr)
            return EXIT_INPUT_ERROR
        except (OSError, KeyError, AlgebraError) as exc:
            print(f"{args.spec}: {exc}", file=sys.stderr)
            return EXIT_INPUT_ERROR

    options = RunOptions(args.seed, args.depth, args.budget, args.max_dim, args.field,
                         getattr(args, "kind", ""), tuple(getattr(args, "bounds", ()) or ()))
    report, code = run(args.command, spec, options)
    for record in report.records:
        if record.name.endswith("error"):
            print(f"{report.subject}: {record.data['message']}", file=sys.stderr)
        elif record.validation and record.status == STATUS_FAIL:
            failures = record.data.get("failures", [])
            print(f"{record.name}: " + "; ".join(f["message"] for f in failures),
                  file=sys.stderr)
    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
