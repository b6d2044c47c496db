"""SCOOC-naive semantics and violation witnesses.

An extension candidate qualifies when it is conflict-free and strongly
complete outside odd cycles; the SCOOC-naive extensions are the
subset-maximal candidates.  The SCOOC condition is not downward closed, so
candidates cannot be pruned by inclusion: all conflict-free sets are
enumerated first and filtered afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core

OMITTED = "unattacked-outside-odd-cycles-omitted"


@dataclass(frozen=True)
class ScoocWitness:
    argument: str
    reason: str = OMITTED


def scooc_naive_masks(F):
    odd = core.odd_cycle_members(F)
    good = [
        m
        for m in core.conflict_free_masks(F)
        if core.scooc_failures(F, m, odd=odd) == 0
    ]
    return core.subset_maximal(good)


def scooc_violations(F, mask):
    """Witnesses for every argument at which the set fails to be strongly
    complete outside odd cycles; empty iff the set satisfies the condition."""
    core._check_subset(F, mask)
    fail = core.scooc_failures(F, mask)
    return [ScoocWitness(F.names[a]) for a in core.bits(fail)]


def scooc_naive_extensions(F):
    from . import semantics

    return semantics.extensions(F, "scooc-naive")


def scf2_extensions(F):
    from . import semantics

    return semantics.extensions(F, "scf2")
