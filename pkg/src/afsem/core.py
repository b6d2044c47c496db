"""Immutable argumentation frameworks and the graph primitives built on them.

Arguments are identified by dense indices 0..n-1 assigned in declaration
order; names appear only at I/O boundaries.  Sets of arguments are plain
int bit masks over those indices, which keeps the enumeration loops fast
and makes set algebra one-liners.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property

# Exact odd-cycle search is exponential in the worst case; refuse rather
# than approximate beyond this per-SCC bound.
ODD_CYCLE_SCC_LIMIT = 20

# Subset enumeration bound for extension semantics.
ENUMERATION_LIMIT = 22


class SizeLimitError(Exception):
    """An exact search would exceed its configured size bound."""


def bits(mask):
    """Iterate over the set bits of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def family_key(mask):
    return tuple(bits(mask))


def sort_family(masks):
    """Canonical family order: lexicographic on the sorted index tuples."""
    return tuple(sorted(masks, key=family_key))


def subset_maximal(masks):
    """The subset-maximal elements of a collection of masks."""
    result = []
    for m in sorted(set(masks), key=lambda m: -m.bit_count()):
        if not any(m & ~kept == 0 for kept in result):
            result.append(m)
    return result


@dataclass(frozen=True)
class Framework:
    """A finite directed attack graph over named arguments.

    Immutable; every derived operation returns a new value, so frameworks
    and argument masks are safe to share across threads.
    """

    names: tuple[str, ...]
    attacks: frozenset[tuple[int, int]]

    @classmethod
    def of(cls, names, attacks=()):
        """Build a framework from argument names and (attacker, target) name pairs."""
        names = tuple(names)
        index = {}
        for i, name in enumerate(names):
            if not name:
                raise ValueError("empty argument name")
            if name in index:
                raise ValueError(f"duplicate argument name: {name!r}")
            index[name] = i
        pairs = set()
        for src, dst in attacks:
            if src not in index:
                raise ValueError(f"unknown argument: {src!r}")
            if dst not in index:
                raise ValueError(f"unknown argument: {dst!r}")
            pairs.add((index[src], index[dst]))
        return cls(names, frozenset(pairs))

    @property
    def n(self):
        return len(self.names)

    @cached_property
    def full_mask(self):
        return (1 << self.n) - 1

    @cached_property
    def _index(self):
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown argument: {name!r}") from None

    def mask_of(self, names):
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return mask

    def names_of(self, mask):
        return tuple(self.names[i] for i in bits(mask))

    @cached_property
    def targets(self):
        """targets[i] = mask of arguments attacked by i."""
        out = [0] * self.n
        for s, t in self.attacks:
            out[s] |= 1 << t
        return tuple(out)

    @cached_property
    def attackers(self):
        """attackers[i] = mask of arguments attacking i."""
        out = [0] * self.n
        for s, t in self.attacks:
            out[t] |= 1 << s
        return tuple(out)

    @cached_property
    def skey(self):
        """Structural key: equal for frameworks that differ only in names."""
        code = 0
        for s, t in self.attacks:
            code |= 1 << (s * self.n + t)
        return (self.n, code)

    @cached_property
    def scc_list(self):
        """SCC masks in topological order of the condensation (attackers
        before targets), ties broken by smallest member index."""
        return _tarjan_sccs(self)

    @cached_property
    def comp_of(self):
        """comp_of[i] = position of i's SCC in scc_list."""
        out = [0] * self.n
        for c, comp in enumerate(self.scc_list):
            for i in bits(comp):
                out[i] = c
        return tuple(out)

    def __repr__(self):
        atts = sorted(self.attacks)
        return f"Framework({list(self.names)!r}, {atts!r})"


def _tarjan_sccs(F):
    n = F.n
    order = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    comps = []
    counter = 0
    for root in range(n):
        if order[root] != -1:
            continue
        work = [(root, iter(bits(F.targets[root])))]
        order[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if order[w] == -1:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(bits(F.targets[w]))))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], order[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == order[v]:
                comp = 0
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp |= 1 << w
                    if w == v:
                        break
                comps.append(comp)

    # Topological order over the condensation, smallest member index first.
    comp_of = [0] * n
    for c, comp in enumerate(comps):
        for i in bits(comp):
            comp_of[i] = c
    k = len(comps)
    succs = [set() for _ in range(k)]
    indeg = [0] * k
    for s, t in F.attacks:
        cs, ct = comp_of[s], comp_of[t]
        if cs != ct and ct not in succs[cs]:
            succs[cs].add(ct)
            indeg[ct] += 1
    heap = [(bits(comps[c]).__next__(), c) for c in range(k) if indeg[c] == 0]
    heapq.heapify(heap)
    ordered = []
    while heap:
        _, c = heapq.heappop(heap)
        ordered.append(comps[c])
        for t in succs[c]:
            indeg[t] -= 1
            if indeg[t] == 0:
                heapq.heappush(heap, (bits(comps[t]).__next__(), t))
    return tuple(ordered)


def _check_subset(F, mask):
    if mask & ~F.full_mask:
        raise ValueError("argument set not within framework")


def restriction(F, mask):
    """Restrict to the arguments in ``mask``; also return the kept original
    indices so sub-framework masks can be lifted back."""
    _check_subset(F, mask)
    kept = tuple(bits(mask))
    pos = {orig: j for j, orig in enumerate(kept)}
    names = tuple(F.names[i] for i in kept)
    atts = frozenset(
        (pos[s], pos[t]) for (s, t) in F.attacks if s in pos and t in pos
    )
    return Framework(names, atts), kept


def restrict(F, mask):
    return restriction(F, mask)[0]


def lift_mask(mask, kept):
    out = 0
    for j in bits(mask):
        out |= 1 << kept[j]
    return out


def remove_argument(F, name):
    """The framework with one argument (and its incident attacks) deleted."""
    i = F.index(name)
    return restrict(F, F.full_mask & ~(1 << i))


def non_self_attacking(F):
    mask = 0
    for a in range(F.n):
        if not (F.targets[a] >> a) & 1:
            mask |= 1 << a
    return mask


def nsa_restrict(F):
    """Delete every self-attacking argument."""
    return restrict(F, non_self_attacking(F))


def is_conflict_free(F, mask):
    """True iff no attack has both endpoints in the set (self-attacks included)."""
    _check_subset(F, mask)
    for i in bits(mask):
        if F.targets[i] & mask:
            return False
    return True


def attacked_by(F, mask):
    """S+: every argument attacked by some member of the set."""
    out = 0
    for i in bits(mask):
        out |= F.targets[i]
    return out


def attacking(F, mask):
    """S-: every argument attacking some member of the set."""
    out = 0
    for i in bits(mask):
        out |= F.attackers[i]
    return out


def range_and_attackers(F, mask):
    _check_subset(F, mask)
    return attacked_by(F, mask), attacking(F, mask)


def defends(F, mask, name):
    """True iff every attacker of the argument is attacked by the set."""
    _check_subset(F, mask)
    a = F.index(name)
    return F.attackers[a] & ~attacked_by(F, mask) == 0


def sccs(F):
    return F.scc_list


def d_f(F, mask):
    """Arguments attacked by a member of the set from a different SCC."""
    _check_subset(F, mask)
    comp_of = F.comp_of
    out = 0
    for a in bits(mask):
        for b in bits(F.targets[a]):
            if comp_of[a] != comp_of[b]:
                out |= 1 << b
    return out


_ODD_CACHE = {}


def odd_cycle_members(F, scc_limit=ODD_CYCLE_SCC_LIMIT, cache=True):
    """The arguments lying on at least one odd-length simple cycle.

    A self-loop counts as a cycle of length 1.  Computed exactly by DFS
    enumeration of simple cycles within each SCC; raises SizeLimitError
    when an SCC exceeds ``scc_limit``.  Pass ``cache=False`` in bulk scans
    over throwaway frameworks to keep the memo table bounded.
    """
    if not cache:
        return _odd_cycle_members(F, scc_limit)
    key = (F.skey, scc_limit)
    cached = _ODD_CACHE.get(key)
    if cached is None:
        cached = _ODD_CACHE[key] = _odd_cycle_members(F, scc_limit)
    return cached


def _odd_cycle_members(F, scc_limit):
    result = 0
    for comp in F.scc_list:
        size = comp.bit_count()
        if size == 1:
            v = comp.bit_length() - 1
            if (F.targets[v] >> v) & 1:
                result |= comp
            continue
        if size > scc_limit:
            raise SizeLimitError(
                f"SCC of size {size} exceeds odd-cycle search bound {scc_limit}"
            )
        result |= _odd_members_in_component(F, comp)
    return result


def _odd_members_in_component(F, comp):
    # Enumerate each simple cycle once, rooted at its smallest vertex.
    marked = 0
    for v in bits(comp):
        if (F.targets[v] >> v) & 1:
            marked |= 1 << v
    targets = F.targets
    for start in bits(comp):
        if marked == comp:
            break
        allowed = comp & ~((1 << start) - 1)
        path = [start]
        onpath = 1 << start

        def walk(v):
            nonlocal marked, onpath
            if marked == comp:
                return
            for w in bits(targets[v] & allowed):
                if w == start:
                    if len(path) % 2 == 1:
                        marked |= onpath
                        if marked == comp:
                            return
                elif not (onpath >> w) & 1:
                    path.append(w)
                    onpath |= 1 << w
                    walk(w)
                    path.pop()
                    onpath ^= 1 << w

        walk(start)
    return marked


def scooc_failures(F, mask, scc_limit=ODD_CYCLE_SCC_LIMIT, odd=None):
    """Mask of arguments witnessing that the set is not strongly complete
    outside odd cycles: attacker-free (w.r.t. the set) arguments whose
    neighbourhood avoids odd cycles but which the set omits."""
    if odd is None:
        odd = odd_cycle_members(F, scc_limit)
    out = 0
    for a in range(F.n):
        if ((1 << a) | F.attackers[a]) & odd:
            continue
        if F.attackers[a] & mask:
            continue
        if not (mask >> a) & 1:
            out |= 1 << a
    return out


def is_scooc_set(F, mask, scc_limit=ODD_CYCLE_SCC_LIMIT):
    """True iff the set is strongly complete outside odd cycles."""
    _check_subset(F, mask)
    return scooc_failures(F, mask, scc_limit) == 0


def unattacked_sets(F):
    """All subsets receiving no attack from outside, in canonical order.

    Unattacked sets are exactly the predecessor-closed unions of SCCs, so
    enumeration is over SCC subsets rather than argument subsets.
    """
    comps = F.scc_list
    k = len(comps)
    if k > ENUMERATION_LIMIT:
        raise SizeLimitError(f"{k} SCCs exceed the enumeration bound")
    comp_of = F.comp_of
    preds = [0] * k
    for s, t in F.attacks:
        cs, ct = comp_of[s], comp_of[t]
        if cs != ct:
            preds[ct] |= 1 << cs
    out = []
    for choice in range(1 << k):
        if all(preds[c] & ~choice == 0 for c in bits(choice)):
            mask = 0
            for c in bits(choice):
                mask |= comps[c]
            out.append(mask)
    return sort_family(out)


def conflict_free_masks(F):
    """All conflict-free subsets, pruning branches whose next argument is
    already in conflict with the current set."""
    if F.n > ENUMERATION_LIMIT:
        raise SizeLimitError(
            f"{F.n} arguments exceed the enumeration bound {ENUMERATION_LIMIT}"
        )
    out = []
    targets = F.targets
    attackers = F.attackers
    n = F.n

    def rec(i, cur):
        if i == n:
            out.append(cur)
            return
        rec(i + 1, cur)
        bit = 1 << i
        if targets[i] & bit:
            return
        if (targets[i] | attackers[i]) & cur:
            return
        rec(i + 1, cur | bit)

    rec(0, 0)
    return out
