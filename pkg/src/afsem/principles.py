"""Principle checks on single frameworks and counterexample surveys over
framework spaces."""

from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import core
from .core import Framework, SizeLimitError
from .semantics import as_semantics, family_masks

PRINCIPLES = ("directionality", "inra", "scooc")
RICHNESS_KINDS = ("scc-rich", "semi-rich", "scc-semi-rich")

ARG_NAMES = tuple("abcdefghijklmnopqrstuvwxyz")

VIOLATED = "violated-with-counterexample"
NO_VIOLATION = "no-violation-found"


@dataclass(frozen=True)
class Counterexample:
    """A replayable witness that a semantics violates a principle on a
    framework; re-running the corresponding check reproduces it."""

    framework: Framework
    semantics: str
    principle: str
    witness: dict = field(hash=False)

    def to_dict(self):
        F = self.framework
        return {
            "framework": {
                "arguments": list(F.names),
                "attacks": sorted([F.names[s], F.names[t]] for s, t in F.attacks),
            },
            "semantics": self.semantics,
            "principle": self.principle,
            "witness": self.witness,
        }


def _family_names(F, masks):
    return sorted(sorted(F.names_of(m)) for m in masks)


def check_directionality(F, sem):
    """First (canonical order) unattacked set on which restricting does not
    commute with taking extensions, or None."""
    sem = as_semantics(sem)
    fam = family_masks(F, sem)
    for U in core.unattacked_sets(F):
        sub, kept = core.restriction(F, U)
        restricted = {core.lift_mask(m, kept) for m in family_masks(sub, sem)}
        projected = {m & U for m in fam}
        if restricted != projected:
            return Counterexample(
                F,
                str(sem),
                "directionality",
                {
                    "unattacked": list(F.names_of(U)),
                    "restricted_family": _family_names(F, restricted),
                    "projected_family": _family_names(F, projected),
                },
            )
    return None


def check_inra(F, sem):
    """First argument attacked by every extension whose deletion changes the
    extension family, or None.  With no extensions at all the guard holds
    vacuously for every argument."""
    sem = as_semantics(sem)
    fam = family_masks(F, sem)
    fam_names = {frozenset(F.names_of(m)) for m in fam}
    for a in range(F.n):
        if not all((core.attacked_by(F, m) >> a) & 1 for m in fam):
            continue
        name = F.names[a]
        reduced = core.remove_argument(F, name)
        reduced_names = {
            frozenset(reduced.names_of(m)) for m in family_masks(reduced, sem)
        }
        if fam_names != reduced_names:
            return Counterexample(
                F,
                str(sem),
                "inra",
                {
                    "argument": name,
                    "family": sorted(sorted(s) for s in fam_names),
                    "family_without": sorted(sorted(s) for s in reduced_names),
                },
            )
    return None


def check_scooc_principle(F, sem):
    """First extension that is not strongly complete outside odd cycles,
    with its witnessing arguments, or None."""
    sem = as_semantics(sem)
    for m in family_masks(F, sem):
        failed = core.scooc_failures(F, m)
        if failed:
            return Counterexample(
                F,
                str(sem),
                "scooc",
                {
                    "extension": list(F.names_of(m)),
                    "witnesses": list(F.names_of(failed)),
                },
            )
    return None


def check_richness(F, sem, kind):
    """An argument attacked by every extension (non-self-attacking for the
    semi variants), or None.  The scc-* kinds require a single-SCC framework."""
    if kind not in RICHNESS_KINDS:
        raise ValueError(f"unknown richness kind: {kind!r}")
    if kind.startswith("scc-") and len(F.scc_list) != 1:
        raise ValueError(f"{kind} requires a single-SCC framework")
    sem = as_semantics(sem)
    fam = family_masks(F, sem)
    for a in range(F.n):
        if kind.endswith("semi-rich") and (F.targets[a] >> a) & 1:
            continue
        if all((core.attacked_by(F, m) >> a) & 1 for m in fam):
            return Counterexample(F, str(sem), kind, {"argument": F.names[a]})
    return None


_CHECKS = {
    "directionality": check_directionality,
    "inra": check_inra,
    "scooc": check_scooc_principle,
}


def run_check(F, sem, principle):
    if principle in _CHECKS:
        return _CHECKS[principle](F, sem)
    return check_richness(F, sem, principle)


def replay(cx):
    """Re-run the stored check; True iff it reproduces the counterexample."""
    return run_check(cx.framework, cx.semantics, cx.principle) == cx


# --- framework spaces -------------------------------------------------------


def framework_from_code(n, code):
    """The labeled digraph on n arguments whose attack set is encoded bitwise
    as attacker*n + target."""
    attacks = frozenset((k // n, k % n) for k in core.bits(code))
    return Framework(ARG_NAMES[:n], attacks)


def enumerate_frameworks(n, max_n=4):
    """All labeled digraphs on n arguments, in encoding order."""
    if n > max_n:
        raise SizeLimitError(f"n={n} exceeds the exhaustive bound {max_n}")
    for code in range(1 << (n * n)):
        yield framework_from_code(n, code)


def sample_frameworks(n, edge_probability, count, seed):
    """A reproducible pseudo-random digraph stream; equal seeds yield equal
    streams."""
    if not 0 <= edge_probability <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    names = ARG_NAMES[:n]
    for _ in range(count):
        attacks = frozenset(
            (s, t)
            for s in range(n)
            for t in range(n)
            if rng.random() < edge_probability
        )
        yield Framework(names, attacks)


# --- surveys ----------------------------------------------------------------


@dataclass(frozen=True)
class SurveyScope:
    max_n: int = 4
    samples: int = 10000
    sample_sizes: tuple = (5, 6, 7)
    edge_probs: tuple = (0.15, 0.3, 0.5)
    seed: int = 0
    workers: int = 1
    use_fixtures: bool = True

    def to_dict(self):
        return {
            "max_n": self.max_n,
            "samples": self.samples,
            "sample_sizes": list(self.sample_sizes),
            "edge_probs": list(self.edge_probs),
            "seed": self.seed,
        }


@dataclass(frozen=True)
class CellResult:
    semantics: str
    principle: str
    counterexample: Counterexample | None
    searched: dict = field(hash=False)

    @property
    def verdict(self):
        return VIOLATED if self.counterexample else NO_VIOLATION


@dataclass(frozen=True)
class SurveyReport:
    """Verdict grid over (semantics, principle) cells; every violated cell
    carries a concrete counterexample, every clean cell records the search
    bound that was reached."""

    cells: tuple[CellResult, ...]
    scope: SurveyScope

    def cell(self, sem, principle):
        for c in self.cells:
            if c.semantics == str(sem) and c.principle == principle:
                return c
        raise KeyError((str(sem), principle))

    def grid(self):
        return {
            (c.semantics, c.principle): c.verdict for c in self.cells
        }

    def to_text(self):
        sems = list(dict.fromkeys(c.semantics for c in self.cells))
        principles = list(dict.fromkeys(c.principle for c in self.cells))
        marks = {
            (c.semantics, c.principle): ("x" if c.counterexample else "ok")
            for c in self.cells
        }
        width = max(len(s) for s in sems) + 2
        cols = [max(len(p), 2) + 2 for p in principles]
        lines = []
        header = "semantics".ljust(width) + "".join(
            p.ljust(w) for p, w in zip(principles, cols)
        )
        lines.append(header.rstrip())
        for s in sems:
            row = s.ljust(width) + "".join(
                marks.get((s, p), "-").ljust(w) for p, w in zip(principles, cols)
            )
            lines.append(row.rstrip())
        lines.append("")
        lines.append(
            "searched: exhaustive n<=%d, samples=%d sizes=%s probs=%s seed=%d"
            % (
                self.scope.max_n,
                self.scope.samples,
                list(self.scope.sample_sizes),
                list(self.scope.edge_probs),
                self.scope.seed,
            )
        )
        hits = [c for c in self.cells if c.counterexample]
        if hits:
            lines.append("counterexamples:")
            for c in hits:
                cx = c.counterexample
                atts = ",".join(
                    f"{a}>{b}" for a, b in cx.to_dict()["framework"]["attacks"]
                )
                lines.append(
                    f"  {c.semantics} / {c.principle}: "
                    f"args={','.join(cx.framework.names)} attacks={atts} "
                    f"witness={json.dumps(cx.witness, sort_keys=True)}"
                )
        return "\n".join(lines) + "\n"

    def to_json(self):
        doc = {
            "scope": self.scope.to_dict(),
            "cells": [
                {
                    "semantics": c.semantics,
                    "principle": c.principle,
                    "verdict": c.verdict,
                    "counterexample": (
                        c.counterexample.to_dict() if c.counterexample else None
                    ),
                    "searched": c.searched,
                }
                for c in self.cells
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _scan_chunk(frameworks, check):
    for i, F in enumerate(frameworks):
        cx = check(F)
        if cx is not None:
            return i, cx
    return None


def _scan_min(frameworks, check, workers):
    """Minimal-index counterexample in a framework list, independent of the
    worker count."""
    if workers <= 1:
        hit = _scan_chunk(frameworks, check)
        return hit[1] if hit else None
    chunk = 2048
    best_idx = None
    best = None
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {
            pool.submit(_scan_chunk, frameworks[off : off + chunk], check): off
            for off in range(0, len(frameworks), chunk)
        }
        for fut, off in futures.items():
            hit = fut.result()
            if hit is not None:
                idx = off + hit[0]
                if best_idx is None or idx < best_idx:
                    best_idx = idx
                    best = hit[1]
    return best


def survey(semantics, principles, scope=None):
    """Verdict grid over semantics x principles, searching the built-in
    fixture corpus first, then all digraphs up to the exhaustive bound, then
    the seeded random sample stream.

    Searches certify bounded exhaustiveness only; a clean cell means no
    violation was found within the recorded scope, not a universal claim.
    """
    scope = scope or SurveyScope()
    sems = [as_semantics(s) for s in semantics]
    for p in principles:
        if p not in PRINCIPLES:
            raise ValueError(f"unknown principle: {p!r}")

    fixture_pool = []
    if scope.use_fixtures:
        from .fixtures import FIXTURES

        fixture_pool = [fx.framework for fx in FIXTURES]
        # canonical order: smallest n first, then attack encoding
        fixture_pool.sort(key=lambda F: F.skey)

    pools = {}

    def pool_for(n):
        if n not in pools:
            pools[n] = [
                framework_from_code(n, code) for code in range(1 << (n * n))
            ]
        return pools[n]

    sample_pool = None

    def samples():
        nonlocal sample_pool
        if sample_pool is None:
            rng = random.Random(scope.seed)
            sizes = scope.sample_sizes
            probs = scope.edge_probs
            sample_pool = []
            for i in range(scope.samples):
                n = sizes[i % len(sizes)]
                p = probs[(i // len(sizes)) % len(probs)]
                attacks = frozenset(
                    (s, t)
                    for s in range(n)
                    for t in range(n)
                    if rng.random() < p
                )
                sample_pool.append(Framework(ARG_NAMES[:n], attacks))
        return sample_pool

    cells = []
    for sem in sems:
        for principle in principles:
            check = lambda F, s=sem, p=principle: _CHECKS[p](F, s)
            searched = {"fixtures": len(fixture_pool)}
            cx = None
            hits = [c for c in map(check, fixture_pool) if c is not None]
            if hits:
                cx = min(hits, key=lambda c: c.framework.skey)
            if cx is None:
                for n in range(1, scope.max_n + 1):
                    cx = _scan_min(pool_for(n), check, scope.workers)
                    searched["exhaustive_max_n"] = n
                    if cx is not None:
                        break
            if cx is None and scope.samples:
                cx = _scan_min(samples(), check, scope.workers)
                searched["samples"] = scope.samples
                searched["seed"] = scope.seed
            cells.append(CellResult(str(sem), principle, cx, searched))
    return SurveyReport(tuple(cells), scope)
