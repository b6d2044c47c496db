"""Extension semantics: the seven base enumerators, the combinator term
language (``nsa(...)``, ``scc(...)``) and the shared evaluation cache."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import core, scheme, scooc

BASE_TAGS = frozenset(
    {
        "grounded",
        "complete",
        "preferred",
        "stable",
        "semi-stable",
        "stage",
        "naive",
        "scooc-naive",
    }
)

# Named shorthands for combinator terms.
ALIASES = {
    "cf2": ("scc", ("base", "naive")),
    "stage2": ("scc", ("base", "stage")),
    "scf2": ("nsa", ("scc", ("base", "scooc-naive"))),
}

TABLE_SEMANTICS = (
    "naive",
    "scooc-naive",
    "nsa(scooc-naive)",
    "cf2",
    "nsa(cf2)",
    "scc(scooc-naive)",
    "scf2",
)


def _parse_term(text):
    text = text.strip()
    for outer in ("nsa", "scc"):
        if text.startswith(outer + "(") and text.endswith(")"):
            return (outer, _parse_term(text[len(outer) + 1 : -1]))
    if text in BASE_TAGS:
        return ("base", text)
    if text in ALIASES:
        return ALIASES[text]
    raise ValueError(f"unknown semantics: {text!r}")


def _term_text(term):
    if term[0] == "base":
        return term[1]
    return f"{term[0]}({_term_text(term[1])})"


@dataclass(frozen=True)
class SemanticsId:
    """A semantics tag or combinator term; parsing round-trips the text."""

    text: str

    @classmethod
    def parse(cls, text):
        text = text.strip().lower()
        _parse_term(text)  # validate
        return cls(text)

    @cached_property
    def term(self):
        return _parse_term(self.text)

    def canonical(self):
        """Alias-free form, e.g. scf2 -> nsa(scc(scooc-naive))."""
        return _term_text(self.term)

    def __str__(self):
        return self.text


def as_semantics(sem):
    if isinstance(sem, SemanticsId):
        return sem
    return SemanticsId.parse(sem)


# --- base semantics ---------------------------------------------------------


def grounded_fixpoint(F):
    """Least fixpoint of the characteristic function: repeatedly add every
    argument whose attackers are all attacked by the current set."""
    s = 0
    while True:
        plus = core.attacked_by(F, s)
        nxt = 0
        for a in range(F.n):
            if F.attackers[a] & ~plus == 0:
                nxt |= 1 << a
        if nxt == s:
            return s
        s = nxt


def _complete_masks(F):
    out = []
    for m in core.conflict_free_masks(F):
        plus = core.attacked_by(F, m)
        defended = 0
        for a in range(F.n):
            if F.attackers[a] & ~plus == 0:
                defended |= 1 << a
        if defended == m:
            out.append(m)
    return out


def _stable_masks(F):
    full = F.full_mask
    return [
        m
        for m in core.conflict_free_masks(F)
        if m | core.attacked_by(F, m) == full
    ]


def _range_maximal(F, masks):
    ranged = [(m, m | core.attacked_by(F, m)) for m in masks]
    return [
        m
        for m, r in ranged
        if not any(r != r2 and r & ~r2 == 0 for _, r2 in ranged)
    ]


_BASE_FNS = {
    "grounded": lambda F: [grounded_fixpoint(F)],
    "complete": _complete_masks,
    "preferred": lambda F: core.subset_maximal(_complete_masks(F)),
    "stable": _stable_masks,
    "semi-stable": lambda F: _range_maximal(F, _complete_masks(F)),
    "stage": lambda F: _range_maximal(F, core.conflict_free_masks(F)),
    "naive": lambda F: core.subset_maximal(core.conflict_free_masks(F)),
    "scooc-naive": scooc.scooc_naive_masks,
}


# --- evaluation -------------------------------------------------------------

# Keyed by (framework structural key, canonical term text); extensions are
# name-independent, so structurally equal frameworks share entries.
_CACHE = {}


def clear_cache():
    _CACHE.clear()


def family_masks(F, sem):
    """Canonically ordered extension masks for a semantics term."""
    term = sem if isinstance(sem, tuple) else as_semantics(sem).term
    key = (F.skey, _term_text(term))
    hit = _CACHE.get(key)
    if hit is None:
        hit = _CACHE[key] = core.sort_family(_eval(F, term))
    return hit


def _eval(F, term):
    kind = term[0]
    if kind == "base":
        return _BASE_FNS[term[1]](F)
    if kind == "scc":
        inner = term[1]
        return scheme.scc_extensions(
            F,
            base=lambda G: family_masks(G, inner),
            recurse=lambda G: family_masks(G, term),
        )
    # nsa: evaluate on the self-attacker-free restriction and lift back.
    return scheme.nsa_extensions(F, lambda G: family_masks(G, term[1]))


@dataclass(frozen=True)
class ExtensionFamily:
    """A canonically ordered, duplicate-free family of extensions."""

    framework: core.Framework
    masks: tuple[int, ...]

    def __len__(self):
        return len(self.masks)

    def __iter__(self):
        return iter(self.masks)

    def sets(self):
        return tuple(self.framework.names_of(m) for m in self.masks)

    def name_sets(self):
        return frozenset(frozenset(self.framework.names_of(m)) for m in self.masks)

    def lines(self):
        return ["[" + ",".join(self.framework.names_of(m)) + "]" for m in self.masks]

    @property
    def fingerprint(self):
        return self.framework.skey


def extensions(F, sem):
    """All extensions of a framework under a semantics."""
    return ExtensionFamily(F, family_masks(F, sem))


def decide(F, sem, name, mode):
    """Credulous (some extension) or skeptical (every extension) acceptance.

    Skeptical acceptance is vacuously true when there are no extensions.
    """
    a = F.index(name)
    fam = family_masks(F, sem)
    if mode == "credulous":
        return any((m >> a) & 1 for m in fam)
    if mode == "skeptical":
        return all((m >> a) & 1 for m in fam)
    raise ValueError(f"unknown acceptance mode: {mode!r}")
