"""Literal-definition brute-force oracle, independent of the package.

Everything here works on plain name sets and name-pair attack relations,
filters all 2^n subsets directly against the defining clauses, and finds
odd cycles by checking every vertex permutation.  Deliberately slow and
deliberately unrelated to the bitmask implementation under test.
"""

import functools
import itertools


def from_framework(F):
    args = frozenset(F.names)
    att = frozenset((F.names[s], F.names[t]) for s, t in F.attacks)
    return args, att


def subsets(args):
    items = sorted(args)
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


def is_conflict_free(att, S):
    return not any((a, b) in att for a in S for b in S)


def attacks(att, S, a):
    return any((b, a) in att for b in S)


def defended_by(args, att, S):
    return {
        a
        for a in args
        if all(attacks(att, S, b) for b in args if (b, a) in att)
    }


def set_range(args, att, S):
    return set(S) | {a for a in args if attacks(att, S, a)}


@functools.lru_cache(maxsize=None)
def complete_sets(args, att):
    out = set()
    for S in subsets(args):
        if not is_conflict_free(att, S):
            continue
        d = defended_by(args, att, S)
        if all(a in d for a in S) and all(a in S for a in d):
            out.add(S)
    return out


def stable_sets(args, att):
    return {
        S
        for S in subsets(args)
        if is_conflict_free(att, S) and all(attacks(att, S, a) for a in args - S)
    }


def grounded_sets(args, att):
    comp = complete_sets(args, att)
    return {S for S in comp if not any(T < S for T in comp)}


def preferred_sets(args, att):
    comp = complete_sets(args, att)
    return {S for S in comp if not any(S < T for T in comp)}


def semi_stable_sets(args, att):
    comp = complete_sets(args, att)
    return {
        S
        for S in comp
        if not any(set_range(args, att, S) < set_range(args, att, T) for T in comp)
    }


@functools.lru_cache(maxsize=None)
def stage_sets(args, att):
    cf = [S for S in subsets(args) if is_conflict_free(att, S)]
    return {
        S
        for S in cf
        if not any(set_range(args, att, S) < set_range(args, att, T) for T in cf)
    }


@functools.lru_cache(maxsize=None)
def naive_sets(args, att):
    cf = [S for S in subsets(args) if is_conflict_free(att, S)]
    return {S for S in cf if not any(S < T for T in cf)}


@functools.lru_cache(maxsize=None)
def odd_cycle_members(args, att):
    """Members of odd simple cycles, by checking every vertex permutation."""
    marked = set()
    names = sorted(args)
    for length in range(1, len(names) + 1, 2):
        for tup in itertools.permutations(names, length):
            if all((tup[i], tup[(i + 1) % length]) in att for i in range(length)):
                marked.update(tup)
    return marked


def is_scooc(args, att, A):
    odd = odd_cycle_members(args, att)
    for a in args:
        attackers = {b for b in args if (b, a) in att}
        if ({a} | attackers) & odd:
            continue
        if A & attackers:
            continue
        if a not in A:
            return False
    return True


@functools.lru_cache(maxsize=None)
def scooc_naive_sets(args, att):
    good = [
        S
        for S in subsets(args)
        if is_conflict_free(att, S) and is_scooc(args, att, S)
    ]
    return {S for S in good if not any(S < T for T in good)}


def unattacked_sets(args, att):
    return {
        U
        for U in subsets(args)
        if not any((a, b) in att for a in args - U for b in U)
    }


def restrict(args, att, keep):
    keep = frozenset(keep)
    return keep, frozenset((a, b) for a, b in att if a in keep and b in keep)


def scc_partition(args, att):
    reach = {a: {a} for a in args}
    changed = True
    while changed:
        changed = False
        for a, b in att:
            new = reach[b] - reach[a]
            if new:
                reach[a] |= new
                changed = True
    comps = set()
    for a in args:
        comps.add(frozenset(b for b in args if b in reach[a] and a in reach[b]))
    return comps


BASE_ORACLES = {
    "grounded": grounded_sets,
    "complete": complete_sets,
    "preferred": preferred_sets,
    "stable": stable_sets,
    "semi-stable": semi_stable_sets,
    "stage": stage_sets,
    "naive": naive_sets,
    "scooc-naive": scooc_naive_sets,
}


def is_scc_extension(args, att, S, base_name, _memo=None):
    """The self-referential SCC-recursive membership condition, checked
    literally on the candidate set."""
    if _memo is None:
        _memo = {}
    key = (args, att, S, base_name)
    if key in _memo:
        return _memo[key]
    if not S <= args:
        result = False
    elif not args:
        result = S == frozenset()
    else:
        comps = scc_partition(args, att)
        if len(comps) == 1:
            result = S in BASE_ORACLES[base_name](args, att)
        else:
            comp_of = {}
            for C in comps:
                for a in C:
                    comp_of[a] = C
            result = True
            for C in comps:
                D = {
                    b
                    for b in args
                    if any(
                        (a, b) in att and comp_of[a] is not comp_of[b] for a in S
                    )
                }
                sub_args, sub_att = restrict(args, att, C - D)
                if not is_scc_extension(sub_args, sub_att, S & C, base_name, _memo):
                    result = False
                    break
    _memo[key] = result
    return result


def scc_sets(args, att, base_name):
    memo = {}
    return {
        S
        for S in subsets(args)
        if is_scc_extension(args, att, S, base_name, memo)
    }


def nsa_sets(args, att, inner):
    keep = {a for a in args if (a, a) not in att}
    sub_args, sub_att = restrict(args, att, keep)
    return inner(sub_args, sub_att)


@functools.lru_cache(maxsize=None)
def term_sets(args, att, term):
    kind = term[0]
    if kind == "base":
        return BASE_ORACLES[term[1]](args, att)
    if kind == "scc":
        inner = term[1]
        if inner[0] != "base":
            raise NotImplementedError("oracle handles scc over base tags only")
        return scc_sets(args, att, inner[1])
    if kind == "nsa":
        return nsa_sets(args, att, lambda a, t: term_sets(a, t, term[1]))
    raise ValueError(term)


def extension_sets(F, sem_text):
    """Oracle extension family for a framework, as a set of name frozensets."""
    from afsem.semantics import SemanticsId

    args, att = from_framework(F)
    return term_sets(args, att, SemanticsId.parse(sem_text).term)
