"""Combinators that lift a base semantics to a new one: the SCC-recursive
scheme and the self-attacker-removal wrapper."""

from __future__ import annotations

from . import core


def scc_extensions(F, base, recurse):
    """Extensions under the SCC-recursive scheme.

    ``base`` enumerates the underlying semantics on a framework, ``recurse``
    enumerates the scheme itself on sub-frameworks (the two differ so callers
    can route recursion through a cache).

    Single-SCC frameworks fall through to ``base``; otherwise SCCs are
    processed in condensation order, and after each choice the arguments it
    attacks in later SCCs are removed before recursing there.  The empty
    framework has exactly the empty extension.
    """
    if F.n == 0:
        return (0,)
    comps = F.scc_list
    if len(comps) == 1:
        return tuple(base(F))
    partials = [0]
    for comp in comps:
        nxt = []
        for chosen in partials:
            # chosen lies in earlier SCCs, so every attack from it into
            # comp crosses SCCs.
            removed = core.attacked_by(F, chosen) & comp
            sub, kept = core.restriction(F, comp & ~removed)
            for ext in recurse(sub):
                nxt.append(chosen | core.lift_mask(ext, kept))
        partials = nxt
    return tuple(partials)


def nsa_extensions(F, base):
    """Apply a semantics after deleting all self-attacking arguments.

    Extensions of the restriction are returned as masks over the original
    framework.
    """
    sub, kept = core.restriction(F, core.non_self_attacking(F))
    return tuple(core.lift_mask(m, kept) for m in base(sub))


def verify_scc_fixpoints(F):
    """True iff the SCC-recursive scheme is the identity on the grounded and
    complete semantics for this framework."""
    from . import semantics

    return all(
        semantics.family_masks(F, f"scc({tag})") == semantics.family_masks(F, tag)
        for tag in ("grounded", "complete")
    )
