"""The shipped corpus of small groups used by tests, reports and the CLI."""

from __future__ import annotations

import functools
import itertools

from .group import FiniteGroup, direct_product
from .iso import IsoClasses, is_isomorphic, profile
from .named import alternating, cyclic, dihedral, elementary_abelian, is_prime, quaternion, symmetric

MAX_ORDER = 48


@functools.lru_cache(maxsize=None)
def named_groups(max_order: int = MAX_ORDER) -> tuple[FiniteGroup, ...]:
    """Cyclic, dihedral, symmetric, alternating, quaternion and elementary
    abelian groups of order at most ``max_order``."""
    out = [cyclic(n) for n in range(1, max_order + 1)]
    out += [dihedral(n) for n in range(3, max_order // 2 + 1)]
    out += [G for G in (symmetric(3), symmetric(4), alternating(4), quaternion()) if G.order <= max_order]
    for p, k in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2)]:
        if p ** k <= max_order:
            out.append(elementary_abelian(p, k))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def product_groups(max_order: int = MAX_ORDER) -> tuple[FiniteGroup, ...]:
    """A x B for unordered pairs of nontrivial named groups with |A||B| <= max_order."""
    base = [G for G in named_groups(max_order) if G.order > 1]
    out = []
    for A, B in itertools.combinations_with_replacement(base, 2):
        if A.order * B.order <= max_order:
            out.append(direct_product(A, B, label=f"{A.label} x {B.label}"))
    return tuple(out)


def corpus(max_order: int = MAX_ORDER) -> tuple[FiniteGroup, ...]:
    return named_groups(max_order) + product_groups(max_order)


@functools.lru_cache(maxsize=None)
def simple_groups(max_order: int = 60) -> tuple[FiniteGroup, ...]:
    out = [cyclic(p) for p in range(2, max_order + 1) if is_prime(p)]
    if max_order >= 60:
        out.append(alternating(5))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def quotient_targets(max_order: int = 24) -> tuple[FiniteGroup, ...]:
    """One representative per isomorphism class among corpus groups of order
    at most ``max_order``, in corpus order."""
    classes = IsoClasses()
    for G in corpus():
        if G.order <= max_order:
            classes.add(G)
    return tuple(classes.reps)


@functools.lru_cache(maxsize=None)
def _by_order() -> dict[int, list[FiniteGroup]]:
    table: dict[int, list[FiniteGroup]] = {}
    for G in corpus():
        table.setdefault(G.order, []).append(G)
    return table


def identify(G: FiniteGroup) -> str:
    """Label of the first corpus group isomorphic to G, else a profile tag."""
    if G.order == 1:
        return "1"
    for H in _by_order().get(G.order, []):
        if profile(H) == profile(G) and is_isomorphic(G, H):
            return H.label
    return G.label or f"<order {G.order}>"
