"""Finite groups as dense multiplication tables.

Elements are the integers ``0 .. order-1`` and element ``0`` is always the
identity.  Subgroups are element sets; internally they are handled as Python
int bitmasks, which makes containment and intersection single operations.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .config import get_caps
from .errors import ClosureExceedsCap, InvalidGroup, InvalidParameter, NotSubgroup

Perm = tuple[int, ...]


# -- bitmask helpers ---------------------------------------------------------

def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


# -- the group ---------------------------------------------------------------

class FiniteGroup:
    """A finite group given by its Cayley table.

    ``table[a][b]`` is the index of ``a*b``.  Instances are treated as
    immutable; equality is identity, use :func:`verbalis.iso.is_isomorphic`
    for structural comparison.
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        label: str | None = None,
        names: Sequence[str] | None = None,
    ):
        n = len(table)
        if n == 0:
            raise InvalidGroup("a group has at least one element")
        ints = list(range(n))
        self.table: tuple[tuple[int, ...], ...] = tuple(
            tuple(ints[v] for v in row) for row in table
        )
        self.order = n
        self.identity = 0
        self.label = label
        self.names = tuple(names) if names is not None else None
        inv = [0] * n
        for a in range(n):
            row = self.table[a]
            for b in range(n):
                if row[b] == 0:
                    inv[a] = b
                    break
            else:
                raise InvalidGroup(f"element {a} has no inverse")
        self.inverse: tuple[int, ...] = tuple(inv)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label or '?'}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def prod(self, elems: Iterable[int]) -> int:
        t = self.table
        acc = 0
        for x in elems:
            acc = t[acc][x]
        return acc

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        acc, base = 0, a
        t = self.table
        while k:
            if k & 1:
                acc = t[acc][base]
            base = t[base][base]
            k >>= 1
        return acc

    def conj(self, a: int, g: int) -> int:
        """``g^-1 a g``."""
        t = self.table
        return t[t[self.inverse[g]][a]][g]

    def commutator(self, a: int, b: int) -> int:
        """``a^-1 b^-1 a b``."""
        t, inv = self.table, self.inverse
        return t[t[t[inv[a]][inv[b]]][a]][b]

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    @cached_property
    def np_table(self) -> np.ndarray:
        dtype = np.int16 if self.order < 2**15 else np.int32
        return np.asarray(self.table, dtype=dtype)

    @cached_property
    def np_inverse(self) -> np.ndarray:
        return np.asarray(self.inverse, dtype=self.np_table.dtype)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        t = self.table
        out = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = t[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def exponent(self) -> int:
        from math import lcm

        return lcm(*self.element_orders)

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes in order of their smallest element."""
        seen = [False] * self.order
        classes = []
        for a in range(self.order):
            if seen[a]:
                continue
            cls = {self.conj(a, g) for g in range(self.order)}
            for c in cls:
                seen[c] = True
            classes.append(tuple(sorted(cls)))
        return tuple(classes)

    @cached_property
    def class_size(self) -> tuple[int, ...]:
        out = [0] * self.order
        for cls in self.conjugacy_classes:
            for c in cls:
                out[c] = len(cls)
        return tuple(out)

    @cached_property
    def cyclic_masks(self) -> tuple[int, ...]:
        """Mask of ``<a>`` for every element ``a``."""
        t = self.table
        out = []
        for a in range(self.order):
            m, x = 1, a
            while x != 0:
                m |= 1 << x
                x = t[x][a]
            out.append(m)
        return tuple(out)

    # -- subgroup generation --------------------------------------------------

    def generate(self, gens: Iterable[int], start: int = 1) -> int:
        """Mask of the subgroup generated by ``gens`` and the subgroup with
        mask ``start`` (default: trivial)."""
        new = list(dict.fromkeys(g for g in gens if not (start >> g) & 1))
        if not new:
            return start
        # closure of {e} under right multiplication by start ∪ new
        right = new + [x for x in elements_of(start) if x != 0]
        t = self.table
        mask = start
        frontier = list(elements_of(start))
        while frontier:
            nxt = []
            for x in frontier:
                row = t[x]
                for g in right:
                    y = row[g]
                    if not (mask >> y) & 1:
                        mask |= 1 << y
                        nxt.append(y)
            frontier = nxt
        return mask

    def is_subgroup_mask(self, mask: int) -> bool:
        if not mask & 1:
            return False
        elems = elements_of(mask)
        t = self.table
        for a in elems:
            row = t[a]
            for b in elems:
                if not (mask >> row[b]) & 1:
                    return False
        return True

    @cached_property
    def class_masks(self) -> tuple[int, ...]:
        """Mask of the conjugacy class of every element."""
        out = [0] * self.order
        for cls in self.conjugacy_classes:
            m = mask_of(cls)
            for c in cls:
                out[c] = m
        return tuple(out)

    def is_normal_mask(self, mask: int) -> bool:
        cm = self.class_masks
        return all(cm[a] & ~mask == 0 for a in elements_of(mask))

    def normal_closure(self, gens: Iterable[int], start: int = 1) -> int:
        """Smallest normal subgroup containing ``gens`` and ``start``."""
        cm = self.class_masks
        mask = start
        pending = list(gens) + list(elements_of(start))
        while True:
            closure = 0
            for a in pending:
                closure |= cm[a]
            missing = elements_of(closure & ~mask)
            if not missing:
                return mask
            new = self.generate(missing, mask)
            pending = elements_of(new & ~mask)
            mask = new

    def subgroup(self, elements: Iterable[int]) -> "SubgroupSet":
        return SubgroupSet.from_mask(self, mask_of(elements))

    def subgroup_generated(self, gens: Iterable[int]) -> "SubgroupSet":
        return SubgroupSet.from_mask(self, self.generate(gens))

    @cached_property
    def whole(self) -> "SubgroupSet":
        return SubgroupSet.from_mask(self, self.full_mask)

    @cached_property
    def trivial(self) -> "SubgroupSet":
        return SubgroupSet.from_mask(self, 1)

    def check_axioms(self) -> None:
        """Raise :class:`InvalidGroup` unless the table is a group with
        identity 0.  Cubic in the order."""
        n, t = self.order, self.table
        for row in t:
            if sorted(row) != list(range(n)):
                raise InvalidGroup("table rows are not permutations")
        for a in range(n):
            if t[0][a] != a or t[a][0] != a:
                raise InvalidGroup("element 0 is not a two-sided identity")
            if t[a][self.inverse[a]] != 0 or t[self.inverse[a]][a] != 0:
                raise InvalidGroup(f"bad inverse for {a}")
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = t[ta[b]]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise InvalidGroup(f"not associative at ({a},{b},{c})")


# -- subgroups and homomorphisms --------------------------------------------

@dataclass(frozen=True, eq=False)
class SubgroupSet:
    """A subgroup of ``parent`` as a sorted tuple of element indices."""

    parent: FiniteGroup
    elements: tuple[int, ...]
    normal: bool

    @classmethod
    def from_mask(cls, parent: FiniteGroup, mask: int, normal: bool | None = None) -> "SubgroupSet":
        if normal is None:
            normal = parent.is_normal_mask(mask)
        sub = cls(parent, elements_of(mask), normal)
        object.__setattr__(sub, "_mask", mask)
        return sub

    @property
    def mask(self) -> int:
        m = self.__dict__.get("_mask")
        if m is None:
            m = mask_of(self.elements)
            object.__setattr__(self, "_mask", m)
        return m

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return bool((self.mask >> g) & 1)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubgroupSet):
            return NotImplemented
        return self.parent is other.parent and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __le__(self, other: "SubgroupSet") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "SubgroupSet") -> bool:
        return self <= other and self.mask != other.mask

    def __and__(self, other: "SubgroupSet") -> "SubgroupSet":
        return SubgroupSet.from_mask(self.parent, self.mask & other.mask)

    def __repr__(self) -> str:
        return f"SubgroupSet(order={self.order}, normal={self.normal}, elements={list(self.elements)})"

    def sort_key(self) -> tuple:
        return (self.order, self.elements)

    def is_normal_in(self, other: "SubgroupSet") -> bool:
        """Whether self is a normal subgroup of ``other`` (both in the same parent)."""
        if not self <= other:
            return False
        G = self.parent
        m = self.mask
        return all((m >> G.conj(a, g)) & 1 for g in other.elements for a in self.elements)

    def is_valid(self) -> bool:
        return self.parent.is_subgroup_mask(self.mask)

    def as_group(self, label: str | None = None) -> tuple[FiniteGroup, "GroupHom"]:
        """The subgroup as a group in its own right, with its inclusion map."""
        G = self.parent
        elems = self.elements
        pos = {e: i for i, e in enumerate(elems)}
        table = [[pos[G.table[a][b]] for b in elems] for a in elems]
        names = [G.name(e) for e in elems] if G.names else None
        H = FiniteGroup(table, label=label, names=names)
        return H, GroupHom(H, G, elems)


def subgroup_checked(G: FiniteGroup, elements: Iterable[int]) -> SubgroupSet:
    mask = mask_of(elements)
    if not G.is_subgroup_mask(mask):
        raise NotSubgroup("element set is not closed under the group operation")
    return SubgroupSet.from_mask(G, mask)


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        if len(self.map) != self.source.order:
            raise InvalidParameter("homomorphism map must cover every source element")

    def __call__(self, a: int) -> int:
        return self.map[a]

    def is_homomorphism(self) -> bool:
        m, ts, tt = self.map, self.source.table, self.target.table
        n = self.source.order
        if m[0] != 0:
            return False
        return all(m[ts[a][b]] == tt[m[a]][m[b]] for a in range(n) for b in range(n))

    @cached_property
    def image_mask(self) -> int:
        return mask_of(self.map)

    def image(self) -> SubgroupSet:
        return SubgroupSet.from_mask(self.target, self.image_mask)

    @property
    def is_surjective(self) -> bool:
        return self.image_mask == self.target.full_mask

    @property
    def is_injective(self) -> bool:
        return len(set(self.map)) == self.source.order

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective

    def kernel(self) -> SubgroupSet:
        return SubgroupSet.from_mask(
            self.source, mask_of(a for a, b in enumerate(self.map) if b == 0), normal=True
        )

    def then(self, other: "GroupHom") -> "GroupHom":
        """Composite ``other ∘ self``."""
        if other.source is not self.target:
            raise InvalidParameter("homomorphisms are not composable")
        return GroupHom(self.source, other.target, tuple(other.map[x] for x in self.map))

    def inverse(self) -> "GroupHom":
        if not self.is_bijective:
            raise InvalidParameter("only bijections have inverses")
        inv = [0] * self.source.order
        for a, b in enumerate(self.map):
            inv[b] = a
        return GroupHom(self.target, self.source, tuple(inv))


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, tuple(range(G.order)))


@dataclass(frozen=True, eq=False)
class CompositionSeries:
    """``chain`` ascends from the trivial subgroup to the whole group;
    ``factors[k]`` is ``chain[k+1] / chain[k]``."""

    group: FiniteGroup
    chain: tuple[SubgroupSet, ...]
    factors: tuple[FiniteGroup, ...] = field(default=())

    @property
    def length(self) -> int:
        return len(self.factors)


# -- constructors ------------------------------------------------------------

def from_table(table: Sequence[Sequence[int]], label: str | None = None, check: bool = True) -> FiniteGroup:
    """Build a group from an arbitrary table, relabelling so the identity is 0."""
    n = len(table)
    if any(len(row) != n for row in table):
        raise InvalidGroup("table must be square")
    if any(not (0 <= v < n) for row in table for v in row):
        raise InvalidGroup("table entries out of range")
    e = None
    for a in range(n):
        if all(table[a][b] == b for b in range(n)):
            e = a
            break
    if e is None:
        raise InvalidGroup("no identity element")
    if e != 0:
        order = [e] + [a for a in range(n) if a != e]
        pos = {a: i for i, a in enumerate(order)}
        table = [[pos[table[a][b]] for b in order] for a in order]
    G = FiniteGroup(table, label=label)
    if check:
        G.check_axioms()
    return G


def compose_perms(p: Perm, q: Perm) -> Perm:
    """Product ``p*q`` acting on the right: apply p first, then q."""
    return tuple(q[i] for i in p)


def from_permutations(degree: int, generators: Sequence[Perm], label: str | None = None) -> FiniteGroup:
    """Closure of 0-based permutations, elements in breadth-first order."""
    if degree < 1:
        raise InvalidParameter("degree must be positive")
    for g in generators:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise InvalidParameter(f"{g} is not a permutation of degree {degree}")
    cap = get_caps().closure
    ident = tuple(range(degree))
    perms = [ident]
    index = {ident: 0}
    gens = list(dict.fromkeys(tuple(g) for g in generators))
    i = 0
    while i < len(perms):
        p = perms[i]
        for g in gens:
            q = compose_perms(p, g)
            if q not in index:
                if len(perms) >= cap:
                    raise ClosureExceedsCap(f"generated group exceeds closure cap {cap}")
                index[q] = len(perms)
                perms.append(q)
        i += 1
    return _perm_table(perms, label)


def _perm_table(perms: Sequence[Perm], label: str | None) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[compose_perms(p, q)] for q in perms] for p in perms]
    G = FiniteGroup(table, label=label, names=[format_cycles(p) for p in perms])
    G.perms = tuple(perms)
    return G


def direct_product(*factors: FiniteGroup, label: str | None = None) -> FiniteGroup:
    """Elements are tuples in mixed radix, last factor fastest."""
    if not factors:
        return FiniteGroup([[0]], label=label or "1")
    order = 1
    for F in factors:
        order *= F.order
    cap = get_caps().closure
    if order > cap:
        raise ClosureExceedsCap(f"product of order {order} exceeds closure cap {cap}")
    tuples = list(itertools.product(*(range(F.order) for F in factors)))
    radix = []
    acc = 1
    for F in reversed(factors):
        radix.append(acc)
        acc *= F.order
    radix.reverse()

    def encode(t):
        return sum(x * r for x, r in zip(t, radix))

    table = [
        [encode(tuple(F.table[x][y] for F, x, y in zip(factors, s, t))) for t in tuples]
        for s in tuples
    ]
    if label is None:
        label = " x ".join(F.label or "?" for F in factors)
    names = None
    if all(F.names for F in factors) or len(factors) > 1:
        names = ["(" + ",".join(F.name(x) for F, x in zip(factors, t)) + ")" for t in tuples]
    G = FiniteGroup(table, label=label, names=names)
    G.factors = tuple(factors)
    return G


def product_hom(homs: Sequence[GroupHom], source: FiniteGroup, target: FiniteGroup) -> GroupHom:
    """Componentwise map between two products built by :func:`direct_product`."""
    src_t = list(itertools.product(*(range(h.source.order) for h in homs)))
    radix = []
    acc = 1
    for h in reversed(homs):
        radix.append(acc)
        acc *= h.target.order
    radix.reverse()
    m = [sum(h.map[x] * r for h, x, r in zip(homs, t, radix)) for t in src_t]
    return GroupHom(source, target, tuple(m))


def embedding(product: FiniteGroup, k: int) -> GroupHom:
    """Inclusion of the k-th factor into a product built by :func:`direct_product`."""
    factors = product.factors
    stride = 1
    for F in factors[k + 1:]:
        stride *= F.order
    return GroupHom(factors[k], product, tuple(x * stride for x in range(factors[k].order)))


def projection(product: FiniteGroup, k: int) -> GroupHom:
    factors = product.factors
    stride = 1
    for F in factors[k + 1:]:
        stride *= F.order
    n = factors[k].order
    return GroupHom(product, factors[k], tuple((a // stride) % n for a in range(product.order)))


# -- cycle notation ----------------------------------------------------------

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation such as ``"(1 2)(3 4)"`` into a 0-based
    permutation.  Commas are accepted as separators."""
    perm = list(range(degree))
    stripped = text.strip()
    if stripped in ("", "()", "1", "e"):
        return tuple(perm)
    if _CYCLE.sub("", stripped).strip():
        raise InvalidParameter(f"bad cycle notation: {text!r}")
    # cycles compose left to right
    result = tuple(perm)
    for body in _CYCLE.findall(stripped):
        pts = [int(x) - 1 for x in body.replace(",", " ").split()]
        if any(not 0 <= p < degree for p in pts) or len(set(pts)) != len(pts):
            raise InvalidParameter(f"bad cycle {body!r} for degree {degree}")
        c = list(range(degree))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            c[a] = b
        result = compose_perms(result, tuple(c))
    return result


def format_cycles(p: Perm) -> str:
    seen = set()
    parts = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        parts.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) or "()"
