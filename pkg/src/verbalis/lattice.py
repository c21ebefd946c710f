"""Subgroup lattice machinery: enumeration, quotients, composition series."""

from __future__ import annotations

import itertools
from typing import Callable, TypeVar

from .config import get_caps
from .errors import EnumerationExceedsCap, InvalidParameter, NotNormal, NotSubgroup, OrderExceedsCap
from .group import (
    CompositionSeries,
    FiniteGroup,
    GroupHom,
    SubgroupSet,
    elements_of,
    popcount,
)

T = TypeVar("T")


def memo(G: FiniteGroup, key, fn: Callable[[], T]) -> T:
    """Per-group cache; groups are immutable so results never go stale."""
    cache = G.__dict__.setdefault("_memo", {})
    if key not in cache:
        cache[key] = fn()
    return cache[key]


def _check_enum(G: FiniteGroup) -> None:
    cap = get_caps().enumeration
    if G.order > cap:
        raise EnumerationExceedsCap(f"order {G.order} exceeds enumeration cap {cap}")


def _canonical(masks) -> list[int]:
    return sorted(masks, key=lambda m: (popcount(m), elements_of(m)))


def _join_closure(G: FiniteGroup, atoms: dict[int, list[int]]) -> list[int]:
    """All joins of the given subgroups (mask -> generators), plus the trivial one."""
    found: dict[int, list[int]] = {1: []}
    found.update(atoms)
    atom_items = list(atoms.items())
    frontier = list(found.items())
    while frontier:
        nxt = []
        for mask, gens in frontier:
            for amask, agens in atom_items:
                if amask & ~mask == 0:
                    continue
                new_gens = gens + agens
                j = G.generate(new_gens)
                if j not in found:
                    found[j] = new_gens
                    nxt.append((j, new_gens))
        frontier = nxt
    return _canonical(found)


def subgroup_masks(G: FiniteGroup) -> list[int]:
    _check_enum(G)

    def compute():
        atoms = {}
        for a in range(1, G.order):
            m = G.cyclic_masks[a]
            atoms.setdefault(m, [a])
        return _join_closure(G, atoms)

    return memo(G, "subgroups", compute)


def normal_subgroup_masks(G: FiniteGroup) -> list[int]:
    _check_enum(G)

    def compute():
        atoms: dict[int, list[int]] = {}
        for cls in G.conjugacy_classes[1:]:
            m = G.normal_closure([cls[0]])
            atoms.setdefault(m, list(cls))
        return _join_closure(G, atoms)

    return memo(G, "normal_subgroups", compute)


def subgroups(G: FiniteGroup) -> list[SubgroupSet]:
    """All subgroups of G, sorted by order then element set."""
    return [SubgroupSet.from_mask(G, m) for m in subgroup_masks(G)]


def normal_subgroups(G: FiniteGroup) -> list[SubgroupSet]:
    """All normal subgroups, built as joins of normal closures of conjugacy
    classes (independently of :func:`subgroups`)."""
    return [SubgroupSet.from_mask(G, m, normal=True) for m in normal_subgroup_masks(G)]


def maximal_subgroup_masks(G: FiniteGroup) -> list[int]:
    def compute():
        proper = [m for m in subgroup_masks(G) if m != G.full_mask]
        out = []
        for h in proper:
            if not any(k != h and h & ~k == 0 for k in proper):
                out.append(h)
        return out

    return memo(G, "maximal", compute)


def maximal_subgroups(G: FiniteGroup) -> list[SubgroupSet]:
    return [SubgroupSet.from_mask(G, m) for m in maximal_subgroup_masks(G)]


def count_subgroups_of_index(G: FiniteGroup, n: int) -> int:
    if n < 1:
        raise InvalidParameter("index must be positive")
    if G.order % n:
        return 0
    target = G.order // n
    return sum(1 for m in subgroup_masks(G) if popcount(m) == target)


# -- quotients ---------------------------------------------------------------

def quotient_by_mask(G: FiniteGroup, mask: int, label: str | None = None) -> tuple[FiniteGroup, GroupHom]:
    t = G.table
    elems = elements_of(mask)
    coset = [-1] * G.order
    reps = []
    for a in range(G.order):
        if coset[a] >= 0:
            continue
        idx = len(reps)
        reps.append(a)
        row = t[a]
        for n in elems:
            coset[row[n]] = idx
    table = [[coset[t[r][s]] for s in reps] for r in reps]
    names = None
    if G.names:
        names = [G.name(r) + "N" if r else "N" for r in reps]
    Q = FiniteGroup(table, label=label, names=names)
    return Q, GroupHom(G, Q, tuple(coset))


def quotient(G: FiniteGroup, N: SubgroupSet, label: str | None = None) -> tuple[FiniteGroup, GroupHom]:
    """The coset group G/N and the projection G -> G/N."""
    if N.parent is not G:
        raise NotSubgroup("subgroup belongs to a different group")
    if not G.is_normal_mask(N.mask):
        raise NotNormal("quotient needs a normal subgroup")
    if label is None and G.label:
        label = f"{G.label}/N{N.order}" if N.order > 1 else G.label
    return quotient_by_mask(G, N.mask, label)


# -- structure ---------------------------------------------------------------

def is_simple(G: FiniteGroup) -> bool:
    if G.order == 1:
        return False
    return all(G.normal_closure([cls[0]]) == G.full_mask for cls in G.conjugacy_classes[1:])


def _maximal_normal(G: FiniteGroup, choice: str) -> int:
    proper = [m for m in normal_subgroup_masks(G) if m != G.full_mask]
    maximal = [h for h in proper if not any(k != h and h & ~k == 0 for k in proper)]
    return maximal[0] if choice == "first" else maximal[-1]


def composition_series(G: FiniteGroup, choice: str = "first") -> CompositionSeries:
    """Top-down series: repeatedly take a maximal normal subgroup of the current
    term.  ``choice`` ("first" or "last" in canonical order) selects among
    several maximal normal subgroups, giving two independent runs."""
    if choice not in ("first", "last"):
        raise InvalidParameter("choice must be 'first' or 'last'")
    _check_enum(G)
    chain_masks = [G.full_mask]
    current = G.full_mask
    while current != 1:
        H, inc = SubgroupSet.from_mask(G, current).as_group()
        m = _maximal_normal(H, choice)
        current = 0
        for i in elements_of(m):
            current |= 1 << inc.map[i]
        chain_masks.append(current)
    chain_masks.reverse()
    chain = tuple(SubgroupSet.from_mask(G, m) for m in chain_masks)
    factors = []
    for lo, hi in zip(chain, chain[1:]):
        H, inc = hi.as_group()
        pos = {e: i for i, e in enumerate(inc.map)}
        inner = 0
        for e in lo.elements:
            inner |= 1 << pos[e]
        Q, _ = quotient_by_mask(H, inner)
        factors.append(Q)
    return CompositionSeries(G, chain, tuple(factors))


def restrict_mask(inclusion: GroupHom, mask: int) -> int:
    """Mask inside the subgroup-as-group of the elements of ``mask`` (a mask of
    the ambient group) that lie in the image of ``inclusion``."""
    out = 0
    for i, e in enumerate(inclusion.map):
        if (mask >> e) & 1:
            out |= 1 << i
    return out


def lift_mask(inclusion: GroupHom, mask: int) -> int:
    out = 0
    for i in elements_of(mask):
        out |= 1 << inclusion.map[i]
    return out


def core(G: FiniteGroup, H: SubgroupSet) -> SubgroupSet:
    """Largest normal subgroup of G inside H: the intersection of all conjugates."""
    if not G.is_subgroup_mask(H.mask):
        raise NotSubgroup("core needs a subgroup")
    mask = H.mask
    elems = H.elements
    for g in range(G.order):
        conj = 0
        for a in elems:
            conj |= 1 << G.conj(a, g)
        mask &= conj
    return SubgroupSet.from_mask(G, mask, normal=True)


def min_generators(G: FiniteGroup) -> int:
    """Smallest size of a generating set (0 for the trivial group)."""
    cap = get_caps().generation
    if G.order > cap:
        raise OrderExceedsCap(f"order {G.order} exceeds generation cap {cap}")
    return memo(G, "min_generators", lambda: _min_generators(G))


def _min_generators(G: FiniteGroup) -> int:
    if G.order == 1:
        return 0
    # Any generator can be swapped for a generator of a maximal cyclic subgroup
    # containing it, so only those need trying.
    cyc: dict[int, int] = {}
    for a in range(1, G.order):
        cyc.setdefault(G.cyclic_masks[a], a)
    maximal = [a for m, a in cyc.items() if not any(k != m and m & ~k == 0 for k in cyc)]
    maximal.sort()
    # The first generator may be taken up to conjugacy.
    firsts = []
    seen_classes = set()
    for a in maximal:
        cm = G.class_masks[a]
        if cm not in seen_classes:
            seen_classes.add(cm)
            firsts.append(a)

    full = G.full_mask
    k = 1
    while True:
        for a in firsts:
            if _extends(G, G.cyclic_masks[a], maximal, 0, k - 1, full, a):
                return k
        k += 1


def _extends(G, mask, cands, start, remaining, full, first) -> bool:
    if mask == full:
        return True
    if remaining == 0:
        return False
    for i in range(start, len(cands)):
        c = cands[i]
        if c == first or (mask >> c) & 1:
            continue
        if _extends(G, G.generate([c], mask), cands, i + 1, remaining - 1, full, first):
            return True
    return False


def generating_set(G: FiniteGroup) -> list[int]:
    """A small (greedy, not necessarily minimal) generating set favouring
    elements of large order."""
    by_order = sorted(range(1, G.order), key=lambda a: (-G.element_orders[a], a))
    mask, gens = 1, []
    while mask != G.full_mask:
        best, best_mask = None, mask
        for a in by_order:
            if (mask >> a) & 1:
                continue
            m = G.generate([a], mask)
            if popcount(m) > popcount(best_mask):
                best, best_mask = a, m
                if m == G.full_mask:
                    break
        gens.append(best)
        mask = best_mask
    return gens


def brute_min_generators(G: FiniteGroup) -> int:
    """Oracle: try every k-subset of elements."""
    if G.order == 1:
        return 0
    for k in itertools.count(1):
        for combo in itertools.combinations(range(1, G.order), k):
            if G.generate(combo) == G.full_mask:
                return k
    raise AssertionError("unreachable")
