"""Command-line interface.

Exit codes: 0 success, 1 input parse error, 2 unknown semantics /
principle / task or bad usage, 3 size-limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import principles, semantics
from .core import SizeLimitError
from .fixtures import run_fixture_checks
from .formats import ParseError, parse
from .semantics import TABLE_SEMANTICS

TASKS = ("SE", "EE", "DC", "DS")


class UsageError(Exception):
    pass


def _load(path):
    suffix = Path(path).suffix.lower().lstrip(".")
    if suffix not in ("apx", "tgf"):
        raise UsageError(f"cannot infer format from file name: {path}")
    try:
        text = Path(path).read_bytes()
    except OSError as exc:
        raise ParseError(str(exc), 0) from exc
    return parse(text, suffix)


def _cmd_solve(args, out):
    try:
        task, sem_text = args.problem.split("-", 1)
    except ValueError:
        raise UsageError(f"malformed problem: {args.problem!r} (expected TASK-SEM)")
    if task not in TASKS:
        raise UsageError(f"unknown task: {task!r}")
    try:
        sem = semantics.SemanticsId.parse(sem_text)
    except ValueError as exc:
        raise UsageError(str(exc))
    if task in ("DC", "DS") and args.argument is None:
        raise UsageError(f"task {task} requires -a ARG")
    if task in ("SE", "EE") and args.argument is not None:
        raise UsageError(f"task {task} does not take -a")
    F = _load(args.file)
    if task == "EE":
        for line in semantics.extensions(F, sem).lines():
            print(line, file=out)
    elif task == "SE":
        fam = semantics.extensions(F, sem)
        print(fam.lines()[0] if len(fam) else "NO", file=out)
    else:
        mode = "credulous" if task == "DC" else "skeptical"
        try:
            accepted = semantics.decide(F, sem, args.argument, mode)
        except ValueError as exc:
            raise UsageError(str(exc))
        print("YES" if accepted else "NO", file=out)
    return 0


def _cmd_check(args, out):
    if args.principle not in principles.PRINCIPLES + principles.RICHNESS_KINDS:
        raise UsageError(f"unknown principle: {args.principle!r}")
    try:
        sem = semantics.SemanticsId.parse(args.semantics)
    except ValueError as exc:
        raise UsageError(str(exc))
    F = _load(args.file)
    try:
        cx = principles.run_check(F, sem, args.principle)
    except ValueError as exc:
        raise UsageError(str(exc))
    if cx is None:
        print(f"no {args.principle} violation found for {sem}", file=out)
    else:
        print(f"{sem} violates {args.principle}:", file=out)
        for key, value in cx.witness.items():
            print(f"  {key}: {value}", file=out)
    return 0


def _cmd_survey(args, out):
    sems = [s.strip() for s in args.semantics.split(",")]
    prins = [p.strip() for p in args.principles.split(",")]
    for s in sems:
        try:
            semantics.SemanticsId.parse(s)
        except ValueError as exc:
            raise UsageError(str(exc))
    for p in prins:
        if p not in principles.PRINCIPLES:
            raise UsageError(f"unknown principle: {p!r}")
    scope = principles.SurveyScope(
        max_n=args.max_n,
        samples=args.samples,
        seed=args.seed,
        workers=args.workers,
    )
    report = principles.survey(sems, prins, scope)
    text = report.to_json() if args.format == "json" else report.to_text()
    out.write(text)
    return 0


def _cmd_fixtures(args, out):
    rows = run_fixture_checks()
    failed = 0
    for label, ok, detail in rows:
        status = "pass" if ok else "FAIL"
        suffix = f" ({detail})" if detail else ""
        print(f"{status}  {label}{suffix}", file=out)
        failed += not ok
    print(f"{len(rows) - failed}/{len(rows)} fixture expectations passed", file=out)
    return 0 if failed == 0 else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="afsem",
        description="Extension semantics and principle checks for "
        "abstract argumentation frameworks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve a reasoning task on one framework")
    solve.add_argument("-p", "--problem", required=True, metavar="TASK-SEM",
                       help="task (SE|EE|DC|DS) and semantics, e.g. EE-stable")
    solve.add_argument("-f", "--file", required=True, help="framework file (.apx or .tgf)")
    solve.add_argument("-a", "--argument", help="query argument (DC/DS only)")
    solve.set_defaults(func=_cmd_solve)

    check = sub.add_parser("check", help="check one principle on one framework")
    check.add_argument("-P", "--principle", required=True)
    check.add_argument("-s", "--semantics", required=True)
    check.add_argument("-f", "--file", required=True)
    check.set_defaults(func=_cmd_check)

    survey = sub.add_parser("survey", help="survey semantics against principles")
    survey.add_argument("--semantics", default=",".join(TABLE_SEMANTICS))
    survey.add_argument("--principles", default=",".join(principles.PRINCIPLES))
    survey.add_argument("--max-n", type=int, default=4)
    survey.add_argument("--samples", type=int, default=10000)
    survey.add_argument("--seed", type=int, default=0)
    survey.add_argument("--workers", type=int, default=1)
    survey.add_argument("--format", choices=("text", "json"), default="text")
    survey.set_defaults(func=_cmd_survey)

    fixtures = sub.add_parser("fixtures", help="run the built-in corpus expectations")
    fixtures.set_defaults(func=_cmd_fixtures)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except SizeLimitError as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
