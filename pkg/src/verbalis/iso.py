"""Isomorphism testing by backtracking over generator images."""

from __future__ import annotations

from collections import Counter
from typing import Optional

from .config import get_caps
from .errors import OrderExceedsCap
from .group import FiniteGroup, GroupHom
from .lattice import generating_set, memo, min_generators


def profile(G: FiniteGroup) -> tuple:
    """Multiset of (element order, class size); an isomorphism invariant.
    For abelian groups it is complete (order statistics fix the invariant
    factors)."""
    def compute():
        c = Counter(zip(G.element_orders, G.class_size))
        return (G.order, G.is_abelian, tuple(sorted(c.items())))

    return memo(G, "profile", compute)


def _check_cap(*groups: FiniteGroup) -> None:
    cap = get_caps().isomorphism
    for G in groups:
        if G.order > cap:
            raise OrderExceedsCap(f"order {G.order} exceeds isomorphism cap {cap}")


def _gen_data(G: FiniteGroup):
    """Greedy generators and, for each prefix, the BFS tree of the subgroup it
    generates: list of (element, parent, generator index)."""
    def compute():
        gens = generating_set(G)
        trees = []
        t = G.table
        for i in range(1, len(gens) + 1):
            pref = gens[:i]
            seen = {0}
            tree = [(0, -1, -1)]
            k = 0
            while k < len(tree):
                x = tree[k][0]
                for j, g in enumerate(pref):
                    y = t[x][g]
                    if y not in seen:
                        seen.add(y)
                        tree.append((y, x, j))
                k += 1
            trees.append(tree)
        return gens, trees

    return memo(G, "gen_data", compute)


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> Optional[GroupHom]:
    """An isomorphism G -> H, or None."""
    _check_cap(G, H)
    if profile(G) != profile(H):
        return None
    if G.order == 1:
        return GroupHom(G, H, (0,))
    gens, trees = _gen_data(G)
    inv_H = [(o, c) for o, c in zip(H.element_orders, H.class_size)]
    cands = [
        [h for h in range(1, H.order) if inv_H[h] == (G.element_orders[g], G.class_size[g])]
        for g in gens
    ]
    tg, th = G.table, H.table
    images: list[int] = []

    def partial_map(i: int) -> Optional[dict[int, int]]:
        tree = trees[i]
        f = {0: 0}
        used = {0}
        for x, parent, j in tree[1:]:
            y = th[f[parent]][images[j]]
            if y in used:
                return None
            f[x] = y
            used.add(y)
        pref = gens[: i + 1]
        for x, _, _ in tree:
            fx = f[x]
            for j, g in enumerate(pref):
                if f[tg[x][g]] != th[fx][images[j]]:
                    return None
        return f

    def search(i: int) -> Optional[dict[int, int]]:
        for h in cands[i]:
            images.append(h)
            f = partial_map(i)
            if f is not None:
                if i == len(gens) - 1:
                    return f
                found = search(i + 1)
                if found is not None:
                    return found
            images.pop()
        return None

    f = search(0)
    if f is None or len(f) != G.order:
        return None
    return GroupHom(G, H, tuple(f[a] for a in range(G.order)))


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    _check_cap(G, H)
    if profile(G) != profile(H):
        return False
    if G.is_abelian:
        return True
    return find_isomorphism(G, H) is not None


def canonical_form(G: FiniteGroup) -> tuple:
    """A complete isomorphism invariant usable as a dictionary key.

    Abelian groups: the order profile.  Otherwise, for order up to the
    ``canonical`` cap: the lexicographically least relabelled table over all
    minimal generating tuples whose invariant sequence is maximal.  Larger
    nonabelian groups raise :class:`OrderExceedsCap`; callers fall back to
    bucketing by :func:`profile` plus :func:`is_isomorphic`.
    """
    if G.is_abelian:
        return ("abelian",) + profile(G)
    cap = get_caps().canonical
    if G.order > cap:
        raise OrderExceedsCap(f"order {G.order} exceeds canonical-form cap {cap}")
    return memo(G, "canonical", lambda: ("table", _min_table(G)))


def _min_table(G: FiniteGroup) -> tuple:
    d = min_generators(G)
    inv = [(G.element_orders[a], G.class_size[a]) for a in range(G.order)]
    t = G.table
    full = G.full_mask
    # Collect generating d-tuples with the largest invariant sequence.
    best_key = None
    tuples: list[tuple[int, ...]] = []

    def rec(prefix: list[int], mask: int):
        nonlocal best_key, tuples
        if len(prefix) == d:
            if mask != full:
                return
            key = tuple(inv[a] for a in prefix)
            if best_key is None or key > best_key:
                best_key, tuples = key, [tuple(prefix)]
            elif key == best_key:
                tuples.append(tuple(prefix))
            return
        for a in range(1, G.order):
            if (mask >> a) & 1:
                continue
            prefix.append(a)
            rec(prefix, G.generate([a], mask))
            prefix.pop()

    rec([], 1)
    best = None
    for gens in tuples:
        label = {0: 0}
        order = [0]
        k = 0
        while k < len(order):
            x = order[k]
            for g in gens:
                y = t[x][g]
                if y not in label:
                    label[y] = len(order)
                    order.append(y)
            k += 1
        table = tuple(tuple(label[t[x][y]] for y in order) for x in order)
        if best is None or table < best:
            best = table
    return best


class IsoClasses:
    """Deduplicates groups up to isomorphism, in order of first insertion."""

    def __init__(self):
        self.reps: list[FiniteGroup] = []
        self._exact: dict[tuple, int] = {}
        self._buckets: dict[tuple, list[int]] = {}

    def __len__(self) -> int:
        return len(self.reps)

    def find(self, G: FiniteGroup) -> Optional[int]:
        try:
            return self._exact.get(canonical_form(G))
        except OrderExceedsCap:
            pass
        for i in self._buckets.get(profile(G), []):
            if is_isomorphic(G, self.reps[i]):
                return i
        return None

    def add(self, G: FiniteGroup) -> tuple[int, bool]:
        """Index of G's class and whether it was new."""
        i = self.find(G)
        if i is not None:
            return i, False
        i = len(self.reps)
        self.reps.append(G)
        try:
            self._exact[canonical_form(G)] = i
        except OrderExceedsCap:
            self._buckets.setdefault(profile(G), []).append(i)
        return i, True
