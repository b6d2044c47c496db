"""Built-in corpus of small benchmark frameworks with frozen expectations.

Family expectations carry a provenance tag: "stated" values are the
documented results the framework was constructed to exhibit, "derived"
values were computed with the brute-force oracle and frozen.  Violation
expectations name the principle, semantics and key witness data.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Framework


def _fw(names, attacks):
    pairs = [tuple(a.split(">")) for a in attacks.split()]
    return Framework.of(names.split(), pairs)


@dataclass(frozen=True)
class ExpectedFamily:
    semantics: str
    family: tuple[tuple[str, ...], ...]
    provenance: str  # "stated" | "derived"


@dataclass(frozen=True)
class ExpectedViolation:
    principle: str
    semantics: str
    witness_key: str
    witness_value: object
    provenance: str


@dataclass(frozen=True)
class FixtureEntry:
    name: str
    framework: Framework
    families: tuple[ExpectedFamily, ...] = ()
    violations: tuple[ExpectedViolation, ...] = ()


def _fam(sem, sets, provenance):
    return ExpectedFamily(sem, tuple(tuple(s.split(",")) if s else () for s in sets), provenance)


FIXTURES = (
    FixtureEntry(
        "fig1",
        _fw("a b c", "a>b b>c c>a a>c"),
        families=(
            _fam("stable", ["a"], "stated"),
            _fam("preferred", ["a"], "derived"),
            _fam("scf2", ["a", "b", "c"], "derived"),
        ),
        violations=(
            ExpectedViolation("inra", "stable", "argument", "b", "stated"),
        ),
    ),
    FixtureEntry(
        "fig2",
        _fw("a b c", "a>b b>c c>a a>c c>c"),
        families=(
            _fam("cf2", ["a", "b"], "stated"),
            _fam("scf2", ["a"], "derived"),
        ),
        violations=(
            ExpectedViolation("inra", "cf2", "argument", "c", "stated"),
        ),
    ),
    FixtureEntry(
        "fig3",
        _fw("a b c", "a>a a>b b>c"),
        families=(
            _fam("grounded", [""], "stated"),
            _fam("scf2", ["b"], "derived"),
        ),
        violations=(
            ExpectedViolation("scooc", "grounded", "witnesses", ("c",), "stated"),
            ExpectedViolation("scooc", "complete", "witnesses", ("c",), "stated"),
        ),
    ),
    FixtureEntry(
        "fig4",
        _fw("a b c d e f", "a>b b>c c>d d>e e>f f>a"),
        families=(
            _fam("naive", ["a,c,e", "a,d", "b,d,f", "b,e", "c,f"], "derived"),
            _fam("cf2", ["a,c,e", "a,d", "b,d,f", "b,e", "c,f"], "derived"),
            _fam("scooc-naive", ["a,c,e", "b,d,f"], "derived"),
            _fam("scf2", ["a,c,e", "b,d,f"], "derived"),
        ),
        violations=(
            ExpectedViolation("scooc", "naive", "extension", ("a", "d"), "stated"),
            ExpectedViolation("scooc", "cf2", "extension", ("a", "d"), "stated"),
            ExpectedViolation("scooc", "nsa(cf2)", "extension", ("a", "d"), "stated"),
        ),
    ),
    FixtureEntry(
        "fig5",
        _fw("a b c", "a>b b>c c>c"),
        families=(
            _fam("stage", ["a", "b"], "derived"),
            _fam("naive", ["a", "b"], "derived"),
        ),
        violations=(
            ExpectedViolation("scooc", "stage", "witnesses", ("a",), "stated"),
            ExpectedViolation("scooc", "naive", "witnesses", ("a",), "stated"),
        ),
    ),
    FixtureEntry(
        "fig6",
        _fw("a b c d e f", "a>b b>c c>d d>e e>f f>a a>f e>e f>f"),
        families=(
            _fam("stage2", ["a,c", "a,d", "b,d"], "derived"),
        ),
        violations=(
            ExpectedViolation("scooc", "stage2", "extension", ("a", "d"), "stated"),
        ),
    ),
    FixtureEntry(
        "fig7",
        _fw("a b", "a>b"),
        families=(
            _fam("naive", ["a", "b"], "derived"),
        ),
        violations=(
            ExpectedViolation("directionality", "naive", "unattacked", ("a",), "stated"),
        ),
    ),
    FixtureEntry(
        "fig8",
        _fw("a b c d", "a>b b>a b>c c>d b>b"),
        families=(
            _fam("scooc-naive", ["a,c", "a,d"], "stated"),
        ),
        violations=(
            ExpectedViolation(
                "directionality", "scooc-naive", "unattacked", ("a", "b", "c"), "stated"
            ),
            ExpectedViolation("inra", "scooc-naive", "argument", "b", "stated"),
        ),
    ),
    FixtureEntry(
        "fig9",
        _fw("a b c d e", "a>b b>c c>a c>d d>e"),
        families=(
            _fam(
                "nsa(scooc-naive)",
                ["a,d", "a,e", "b,d", "b,e", "c,e"],
                "derived",
            ),
        ),
        violations=(
            ExpectedViolation(
                "directionality",
                "nsa(scooc-naive)",
                "unattacked",
                ("a", "b", "c", "d"),
                "stated",
            ),
        ),
    ),
    FixtureEntry(
        "fig10",
        _fw("a b c d", "a>b b>c c>d d>b"),
        families=(
            _fam("scooc-naive", ["a,c", "a,d"], "derived"),
            _fam("nsa(scooc-naive)", ["a,c", "a,d"], "derived"),
            _fam("scf2", ["a,c"], "derived"),
        ),
        violations=(
            ExpectedViolation("inra", "nsa(scooc-naive)", "argument", "b", "stated"),
        ),
    ),
    FixtureEntry(
        "fig11",
        _fw("a b c", "a>b b>a b>c c>a a>a"),
        families=(
            _fam("scc(scooc-naive)", ["b", "c"], "derived"),
            _fam("scf2", ["b"], "derived"),
        ),
        violations=(
            ExpectedViolation("inra", "scc(scooc-naive)", "argument", "a", "stated"),
        ),
    ),
)

# (semantics, principle) pairs expected to produce no violation on any
# fixture framework.
CLEAN_EXPECTATIONS = (
    ("scf2", "directionality"),
    ("scf2", "inra"),
    ("scf2", "scooc"),
    ("stable", "scooc"),
    ("grounded", "inra"),
    ("complete", "inra"),
    ("naive", "inra"),
    ("nsa(cf2)", "inra"),
    ("cf2", "directionality"),
    ("nsa(cf2)", "directionality"),
    ("scc(scooc-naive)", "directionality"),
    ("scooc-naive", "scooc"),
    ("nsa(scooc-naive)", "scooc"),
    ("scc(scooc-naive)", "scooc"),
)


def fixture(name):
    for fx in FIXTURES:
        if fx.name == name:
            return fx
    raise KeyError(name)


def run_fixture_checks():
    """Evaluate every frozen expectation; returns (label, ok, detail) rows."""
    from . import principles, semantics

    rows = []
    for fx in FIXTURES:
        for fam in fx.families:
            got = semantics.extensions(fx.framework, fam.semantics).sets()
            want = tuple(sorted(fam.family, key=lambda s: tuple(s)))
            ok = got == want
            rows.append(
                (
                    f"{fx.name} {fam.semantics} extensions [{fam.provenance}]",
                    ok,
                    "" if ok else f"expected {want}, got {got}",
                )
            )
        for v in fx.violations:
            cx = principles.run_check(fx.framework, v.semantics, v.principle)
            if cx is None:
                ok = False
                detail = "no violation found"
            else:
                value = cx.witness.get(v.witness_key)
                if v.witness_key == "witnesses":
                    ok = set(v.witness_value) <= set(value or ())
                elif isinstance(value, list):
                    ok = tuple(value) == tuple(v.witness_value)
                else:
                    ok = value == v.witness_value
                detail = "" if ok else f"expected {v.witness_value}, got {value}"
            rows.append(
                (f"{fx.name} {v.semantics} violates {v.principle} [{v.provenance}]", ok, detail)
            )
    for sem, principle in CLEAN_EXPECTATIONS:
        bad = [
            fx.name
            for fx in FIXTURES
            if principles.run_check(fx.framework, sem, principle) is not None
        ]
        ok = not bad
        rows.append(
            (
                f"corpus {sem} satisfies {principle}",
                ok,
                "" if ok else f"violated on {', '.join(bad)}",
            )
        )
    return rows
