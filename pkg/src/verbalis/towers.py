"""Finite truncations of inverse systems of finite groups.

A :class:`Tower` is a chain ``G_1 <- G_2 <- ... <- G_k`` of surjections.  Its
fingerprint collects the isomorphism classes of all quotients of bounded order
seen at any level.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence, Union

from .errors import InvalidParameter, UnknownName, UnknownSupport
from .group import FiniteGroup, GroupHom, direct_product, identity_hom, popcount, product_hom
from .iso import IsoClasses, profile
from .lattice import min_generators, normal_subgroup_masks, quotient_by_mask, subgroup_masks
from .named import cyclic, group_from_spec, group_to_spec, is_prime, prime_factors
from .srank import check_frattini_cover


@dataclass(frozen=True, eq=False)
class Tower:
    """levels[0] is the smallest quotient; maps[i]: levels[i+1] -> levels[i]."""

    levels: tuple[FiniteGroup, ...]
    maps: tuple[GroupHom, ...]
    label: Optional[str] = None

    def __post_init__(self):
        if not self.levels:
            raise InvalidParameter("a tower needs at least one level")
        if len(self.maps) != len(self.levels) - 1:
            raise InvalidParameter("need exactly one map between consecutive levels")
        for i, f in enumerate(self.maps):
            if f.source is not self.levels[i + 1] or f.target is not self.levels[i]:
                raise InvalidParameter(f"map {i} does not go from level {i + 1} to level {i}")
            if not f.is_homomorphism():
                raise InvalidParameter(f"map {i} is not a homomorphism")
            if not f.is_surjective:
                raise InvalidParameter(f"map {i} is not surjective")

    @property
    def depth(self) -> int:
        return len(self.levels)

    def truncate(self, depth: int) -> "Tower":
        if not 1 <= depth <= self.depth:
            raise InvalidParameter(f"depth must lie in 1..{self.depth}")
        return Tower(self.levels[:depth], self.maps[:depth - 1], self.label)

    def projection_to(self, i: int, j: int) -> GroupHom:
        """Composite map levels[j] -> levels[i] for i <= j."""
        if not 0 <= i <= j < self.depth:
            raise InvalidParameter("need 0 <= i <= j < depth")
        f = identity_hom(self.levels[j])
        for k in range(j - 1, i - 1, -1):
            f = f.then(self.maps[k])
        return f

    def describe(self) -> str:
        return " <- ".join(G.label or f"<{G.order}>" for G in self.levels)


def _reduction(source: FiniteGroup, target: FiniteGroup) -> GroupHom:
    return GroupHom(source, target, tuple(a % target.order for a in range(source.order)))


def canonical_map(source: FiniteGroup, target: FiniteGroup) -> GroupHom:
    """The evident surjection source -> target: identity on equal tables,
    reduction modulo |target| when that is a homomorphism (cyclic chains), or
    componentwise for products with matching factor counts."""
    if source.table == target.table:
        return GroupHom(source, target, tuple(range(source.order)))
    sf, tf = getattr(source, "factors", None), getattr(target, "factors", None)
    if sf and tf and len(sf) == len(tf):
        return product_hom([canonical_map(a, b) for a, b in zip(sf, tf)], source, target)
    if source.order % target.order == 0:
        f = _reduction(source, target)
        if f.is_homomorphism() and f.is_surjective:
            return f
    raise InvalidParameter(f"no canonical map from {source.label or source.order} to {target.label or target.order}")


def tower_from_levels(levels: Sequence[FiniteGroup], maps: Optional[Sequence] = None,
                      label: Optional[str] = None) -> Tower:
    built = []
    for i in range(len(levels) - 1):
        spec = maps[i] if maps is not None else "canonical"
        if spec == "canonical":
            built.append(canonical_map(levels[i + 1], levels[i]))
        elif isinstance(spec, GroupHom):
            built.append(spec)
        else:
            built.append(GroupHom(levels[i + 1], levels[i], tuple(int(x) for x in spec)))
    return Tower(tuple(levels), tuple(built), label)


def constant_tower(G: FiniteGroup, depth: int) -> Tower:
    _check_depth(depth)
    ident = GroupHom(G, G, tuple(range(G.order)))
    return Tower((G,) * depth, (ident,) * (depth - 1), label=f"const({G.label})")


def padic_tower(p: int, depth: int, power: int = 1) -> Tower:
    """C_p <- C_{p^2} <- ... (or their ``power``-fold products) with reduction maps."""
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    _check_depth(depth)
    if power < 1:
        raise InvalidParameter("power must be positive")
    levels = []
    for i in range(1, depth + 1):
        C = cyclic(p ** i)
        levels.append(C if power == 1 else direct_product(*([C] * power), label=f"C{p ** i}^{power}"))
    label = f"Z{p}" if power == 1 else f"Z{p}^{power}"
    return tower_from_levels(levels, label=label)


def _check_depth(depth: int) -> None:
    if depth < 1:
        raise InvalidParameter("depth must be at least 1")


def tower_from_family(spec: Mapping[str, Any], depth: Optional[int] = None) -> Tower:
    """Build a tower from a family spec; ``depth`` overrides the spec's own."""
    family = spec.get("family")
    d = depth if depth is not None else spec.get("depth")
    if d is None:
        raise InvalidParameter("family spec needs a depth")
    d = int(d)
    if family == "Zp":
        power = spec.get("power", 1)
        p = int(spec["p"])
        if power == "p":
            power = p
        return padic_tower(p, d, int(power))
    if family == "constant":
        return constant_tower(group_from_spec(spec["group"]), d)
    if family == "product":
        return product_tower([factor_from_spec(f, d) for f in spec.get("factors", [])], d)
    raise UnknownName(f"unknown tower family {family!r}")


def factor_from_spec(spec, depth: int) -> Union[Tower, FiniteGroup]:
    if isinstance(spec, Mapping) and "family" in spec:
        return tower_from_family(spec, depth)
    if isinstance(spec, Mapping) and "levels" in spec:
        return tower_from_json(spec)
    return group_from_spec(spec)


def product_tower(factors: Sequence[Union[Tower, FiniteGroup]], depth: int) -> Tower:
    """Levelwise direct product; finite groups act as constant towers."""
    _check_depth(depth)
    if not factors:
        raise InvalidParameter("product needs at least one factor")
    towers = [f if isinstance(f, Tower) else constant_tower(f, depth) for f in factors]
    for T in towers:
        if T.depth < depth:
            raise InvalidParameter(f"factor tower {T.label} has only {T.depth} levels")
    if len(towers) == 1:
        return towers[0].truncate(depth)
    levels = [direct_product(*(T.levels[i] for T in towers)) for i in range(depth)]
    maps = [product_hom([T.maps[i] for T in towers], levels[i + 1], levels[i]) for i in range(depth - 1)]
    label = " x ".join(T.label or "?" for T in towers)
    return Tower(tuple(levels), tuple(maps), label)


def tower_from_json(data: Mapping[str, Any]) -> Tower:
    if "family" in data:
        return tower_from_family(data)
    levels = [group_from_spec(s) for s in data["levels"]]
    return tower_from_levels(levels, data.get("maps"), data.get("label"))


def tower_to_json(T: Tower) -> dict:
    out: dict[str, Any] = {
        "levels": [group_to_spec(G) for G in T.levels],
        "maps": [list(f.map) for f in T.maps],
    }
    if T.label:
        out["label"] = T.label
    return out


def load_tower(arg: str) -> Tower:
    text = arg.strip()
    if text.startswith("{"):
        return tower_from_json(json.loads(text))
    with open(Path(arg), encoding="utf-8") as fh:
        return tower_from_json(json.load(fh))


# -- fingerprints --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Fingerprint:
    entries: tuple[FiniteGroup, ...]   # one representative per class, by order
    index_bound: int
    classes: IsoClasses = field(repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, G: FiniteGroup) -> bool:
        return G.order <= self.index_bound and self.classes.find(G) is not None

    def orders(self) -> list[int]:
        return [G.order for G in self.entries]

    def same_classes(self, other: "Fingerprint") -> bool:
        return len(self) == len(other) and all(G in other for G in self.entries)


def quotients_up_to(G: FiniteGroup, bound: int) -> list[FiniteGroup]:
    """G/N for every normal N of index at most ``bound``."""
    out = []
    for n in normal_subgroup_masks(G):
        if G.order // popcount(n) <= bound:
            out.append(quotient_by_mask(G, n)[0])
    return out


def fingerprint(T: Tower, index_bound: int) -> Fingerprint:
    if index_bound < 1:
        raise InvalidParameter("index bound must be positive")
    classes = IsoClasses()
    for G in T.levels:
        for Q in quotients_up_to(G, index_bound):
            classes.add(Q)
    reps = sorted(classes.reps, key=lambda G: (G.order, profile(G)))
    return Fingerprint(tuple(reps), index_bound, classes)


def compare_fingerprints(A: Tower, B: Tower, index_bound: int) -> bool:
    return fingerprint(A, index_bound).same_classes(fingerprint(B, index_bound))


def quotient_class_counts(T: Tower, max_order: int) -> list[dict[int, int]]:
    """Per truncation depth, the number of quotient classes of each order <= max_order."""
    out = []
    for d in range(1, T.depth + 1):
        fp = fingerprint(T.truncate(d), max_order)
        counts: dict[int, int] = {}
        for G in fp.entries:
            counts[G.order] = counts.get(G.order, 0) + 1
        out.append(counts)
    return out


def is_frattini_tower(T: Tower) -> bool:
    return all(check_frattini_cover(f).is_cover for f in T.maps)


def rank_profile(T: Tower) -> list[int]:
    return [min_generators(G) for G in T.levels]


# -- prime support ---------------------------------------------------------------

INFINITE = "infinite"


@dataclass(frozen=True)
class SupportReport:
    prime_bound: int
    per_prime: dict   # p -> list of factor descriptors, or INFINITE
    passed: bool

    def as_json(self) -> dict:
        return {
            "prime_bound": self.prime_bound,
            "primes": {str(p): v for p, v in self.per_prime.items()},
            "pass": self.passed,
        }


def _support(spec) -> tuple[str, Any]:
    """("finite", primes) for a single factor, ("indexed", None) for a family
    whose p-th member is supported at p only, ("repeated", primes) for
    infinitely many copies of one factor."""
    if isinstance(spec, FiniteGroup):
        return "finite", set(prime_factors(spec.order))
    if isinstance(spec, Tower):
        return "finite", set().union(*(prime_factors(G.order) for G in spec.levels))
    if isinstance(spec, str):
        return "finite", set(prime_factors(group_from_spec(spec).order))
    if not isinstance(spec, Mapping):
        raise UnknownSupport(f"cannot read prime support of {spec!r}")
    declared = spec.get("support")
    family = spec.get("family")
    if declared == "index" or (family == "Zp" and spec.get("p") == "all"):
        return "indexed", None
    if family is None and declared is None:
        group = {k: v for k, v in spec.items() if k != "copies"}
        primes = set(prime_factors(group_from_spec(group).order))
    elif isinstance(declared, list):
        primes = {int(p) for p in declared}
    elif family == "Zp":
        primes = {int(spec["p"])}
    elif family == "constant":
        primes = set(prime_factors(group_from_spec(spec["group"]).order))
    elif family == "product" and "factors" in spec:
        primes = set()
        for f in spec["factors"]:
            kind, ps = _support(f)
            if kind != "finite":
                raise UnknownSupport("a product of infinite families needs a declared support")
            primes |= ps
    else:
        raise UnknownSupport(f"family {family!r} declares no prime support")
    copies = spec.get("copies", 1)
    if copies == INFINITE:
        return "repeated", primes
    return "finite", primes


def prime_support_check(factors: Sequence[Any], prime_bound: int) -> SupportReport:
    """For each prime p <= prime_bound, the factors with order divisible by p.

    Passes iff every list is finite.  Infinite families are read from their
    declarations, never materialised.
    """
    if prime_bound < 2:
        raise InvalidParameter("prime bound must be at least 2")
    supports = [_support(f) for f in factors]
    per_prime: dict[int, Any] = {}
    for p in range(2, prime_bound + 1):
        if not is_prime(p):
            continue
        hits: list = []
        for i, (kind, primes) in enumerate(supports):
            if kind == "indexed":
                hits.append(f"{i}[p={p}]")
            elif p in primes:
                if kind == "repeated":
                    hits = INFINITE
                    break
                hits.append(str(i))
        per_prime[p] = hits
    passed = all(v != INFINITE for v in per_prime.values())
    return SupportReport(prime_bound, per_prime, passed)


# -- decomposition -------------------------------------------------------------

@dataclass(frozen=True)
class DecompositionCheck:
    holds: bool
    subgroups_checked: int

    def __bool__(self) -> bool:
        return self.holds


def decomposition_check(G: FiniteGroup, n: int) -> DecompositionCheck:
    """For G = K0 x Kn and gcd(n, |K0|) = 1: every subgroup H of index n
    contains K0 x (H ∩ Kn)."""
    factors = getattr(G, "factors", None)
    if not factors or len(factors) != 2:
        raise InvalidParameter("group must be built as an explicit product K0 x Kn")
    if n < 1:
        raise InvalidParameter("n must be positive")
    K0, Kn = factors
    if math.gcd(n, K0.order) != 1:
        raise InvalidParameter(f"gcd({n}, |K0| = {K0.order}) is not 1")
    # element (a, b) has index a * |Kn| + b
    k0_elems = [a * Kn.order for a in range(K0.order)]
    checked = 0
    if G.order % n:
        return DecompositionCheck(True, 0)
    target = G.order // n
    for h in subgroup_masks(G):
        if popcount(h) != target:
            continue
        checked += 1
        inter = [b for b in range(Kn.order) if (h >> b) & 1]
        for a in k0_elems:
            for b in inter:
                if not (h >> G.mul(a, b)) & 1:
                    return DecompositionCheck(False, checked)
    return DecompositionCheck(True, checked)
