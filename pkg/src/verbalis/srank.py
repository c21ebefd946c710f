"""S-ranks, quotient counting, Frattini subgroups and Frattini covers."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameter, NotNormal, NotSimple
from .group import FiniteGroup, GroupHom, SubgroupSet, direct_product, elements_of, popcount
from .iso import find_isomorphism, is_isomorphic
from .lattice import (
    composition_series,
    is_simple,
    lift_mask,
    maximal_subgroup_masks,
    memo,
    min_generators,
    normal_subgroup_masks,
    quotient_by_mask,
    subgroup_masks,
)


# -- Frattini ------------------------------------------------------------------

def frattini_subgroup(G: FiniteGroup) -> SubgroupSet:
    """Intersection of the maximal subgroups (G itself when G is trivial)."""
    mask = G.full_mask
    for m in maximal_subgroup_masks(G):
        mask &= m
    return SubgroupSet.from_mask(G, mask, normal=True)


def non_generators(G: FiniteGroup) -> SubgroupSet:
    """Elements g such that <X, g> = G always implies <X> = G.

    Checked over all subgroups H: g is a generator-contributor iff some proper
    H has <H, g> = G.  Independent of the maximal-subgroup route.
    """
    proper = [m for m in subgroup_masks(G) if m != G.full_mask]
    mask = 0
    for g in range(G.order):
        if not any(G.generate([g], h) == G.full_mask for h in proper if not (h >> g) & 1):
            mask |= 1 << g
    return SubgroupSet.from_mask(G, mask)


@dataclass(frozen=True, eq=False)
class FrattiniCoverCheck:
    cover: GroupHom
    kernel: SubgroupSet
    frattini: SubgroupSet  # of the source
    is_cover: bool

    @property
    def is_surjective(self) -> bool:
        return self.cover.is_surjective


def check_frattini_cover(phi: GroupHom) -> FrattiniCoverCheck:
    """Surjective with kernel inside the Frattini subgroup of the source."""
    if not phi.is_homomorphism():
        raise InvalidParameter("map is not a homomorphism")
    kernel = phi.kernel()
    frat = frattini_subgroup(phi.source)
    ok = phi.is_surjective and kernel <= frat
    return FrattiniCoverCheck(phi, kernel, frat, ok)


# -- S-rank --------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SRankReport:
    group: FiniteGroup
    S: FiniteGroup
    M: SubgroupSet
    rank: int
    witnesses: tuple[SubgroupSet, ...]
    isomorphism: GroupHom  # G/M -> S^rank

    def as_json(self) -> dict:
        return {"rank": self.rank, "witnesses": len(self.witnesses), "M_order": self.M.order}


def _require_simple(S: FiniteGroup) -> None:
    if not memo(S, "is_simple", lambda: is_simple(S)):
        raise NotSimple(f"{S.label or 'group'} is not simple")


def s_witness_masks(G: FiniteGroup, S: FiniteGroup) -> list[int]:
    """Normal subgroups N of G with G/N ≅ S."""
    _require_simple(S)

    def compute():
        if G.order % S.order:
            return []
        target = G.order // S.order
        out = []
        for n in normal_subgroup_masks(G):
            if popcount(n) != target:
                continue
            # a quotient of prime order p is C_p; anything else needs a test
            if S.is_abelian or is_isomorphic(quotient_by_mask(G, n)[0], S):
                out.append(n)
        return out

    return memo(G, ("s_witnesses", S), compute)


def power(S: FiniteGroup, k: int) -> FiniteGroup:
    if k == 0:
        return FiniteGroup([[0]], label="1")
    if k == 1:
        return S
    return direct_product(*([S] * k), label=f"{S.label}^{k}")


def s_rank(G: FiniteGroup, S: FiniteGroup) -> SRankReport:
    """M_S(G) and r_S(G), with G/M_S(G) ≅ S^r verified by an explicit isomorphism.

    With no witnesses, M_S(G) = G and the rank is 0.
    """
    witnesses = s_witness_masks(G, S)
    M = G.full_mask
    for n in witnesses:
        M &= n
    index = G.order // popcount(M)
    rank = round(math.log(index, S.order)) if index > 1 else 0
    if S.order ** rank != index:
        raise AssertionError(f"|G/M| = {index} is not a power of |S| = {S.order}")
    Q, _ = quotient_by_mask(G, M)
    iso = find_isomorphism(Q, power(S, rank))
    if iso is None:
        raise AssertionError("G/M_S(G) is not isomorphic to a power of S")
    return SRankReport(
        G, S,
        SubgroupSet.from_mask(G, M, normal=True),
        rank,
        tuple(SubgroupSet.from_mask(G, n, normal=True) for n in witnesses),
        iso,
    )


def s_rank_value(G: FiniteGroup, S: FiniteGroup) -> int:
    """r_S(G) without constructing the verifying isomorphism."""
    M = G.full_mask
    for n in s_witness_masks(G, S):
        M &= n
    index = G.order // popcount(M)
    return round(math.log(index, S.order)) if index > 1 else 0


# -- counting quotients ----------------------------------------------------------

def count_quotients_brute(G: FiniteGroup, F: FiniteGroup) -> int:
    """|{N normal in G : G/N ≅ F}| by enumeration and isomorphism tests."""
    if G.order % F.order:
        return 0
    target = G.order // F.order
    return sum(
        1
        for n in normal_subgroup_masks(G)
        if popcount(n) == target and is_isomorphic(quotient_by_mask(G, n)[0], F)
    )


def count_quotients_via_series(G: FiniteGroup, F: FiniteGroup) -> int:
    """Count normal N with G/N ≅ F by induction along a composition series of F.

    For each term F_k of the series and each subgroup H reached, the normal
    subgroups N of H with H/N ≅ F_k are found among the N_ij: K_i runs over the
    normal subgroups of H with H/K_i ≅ F_k/F_{k-1}, and N_ij over the normal
    subgroups of K_i with K_i/N_ij ≅ F_{k-1} (recursively).  Candidates are
    kept when normal in H with H/N ≅ F_k.
    """
    return len(quotient_kernels_via_series(G, F))


def quotient_kernels_via_series(G: FiniteGroup, F: FiniteGroup) -> list[int]:
    series = composition_series(F)
    terms = [sub.as_group()[0] for sub in series.chain]   # F_0 .. F_n as groups
    simple = list(series.factors)                           # F_k / F_{k-1}
    cache: dict[tuple[int, int], frozenset[int]] = {}     # per invocation
    groups: dict[int, tuple[FiniteGroup, GroupHom]] = {}

    def as_group(mask: int):
        if mask not in groups:
            groups[mask] = SubgroupSet.from_mask(G, mask, normal=False).as_group()
        return groups[mask]

    def kernels(hmask: int, k: int) -> frozenset[int]:
        key = (hmask, k)
        if key in cache:
            return cache[key]
        if k == 0:
            result = frozenset([hmask])
        elif popcount(hmask) % terms[k].order:
            result = frozenset()
        else:
            H, inc = as_group(hmask)
            S = simple[k - 1]
            found = set()
            for kmask_local in s_witness_masks(H, S):
                kmask = lift_mask(inc, kmask_local)
                for nmask in kernels(kmask, k - 1):
                    if nmask in found:
                        continue
                    if _normal_in(G, nmask, hmask) and _quotient_iso(G, hmask, nmask, terms[k], as_group):
                        found.add(nmask)
            result = frozenset(found)
        cache[key] = result
        return result

    return sorted(kernels(G.full_mask, len(simple)))


def _normal_in(G: FiniteGroup, nmask: int, hmask: int) -> bool:
    if nmask & ~hmask:
        return False
    elems = elements_of(nmask)
    for h in elements_of(hmask):
        for a in elems:
            if not (nmask >> G.conj(a, h)) & 1:
                return False
    return True


def _quotient_iso(G, hmask, nmask, target, as_group) -> bool:
    if popcount(hmask) != popcount(nmask) * target.order:
        return False
    H, inc = as_group(hmask)
    local = 0
    for i, e in enumerate(inc.map):
        if (nmask >> e) & 1:
            local |= 1 << i
    Q, _ = quotient_by_mask(H, local)
    return is_isomorphic(Q, target)


# -- property checks ----------------------------------------------------------

def s_rank_subadditivity_check(H: FiniteGroup, H0: SubgroupSet, S: FiniteGroup) -> bool:
    """r_S(H) <= r_S(H0) + r_S(H/H0)."""
    if not H.is_normal_mask(H0.mask):
        raise NotNormal("H0 must be normal in H")
    _require_simple(S)
    sub, _ = H0.as_group()
    Q, _ = quotient_by_mask(H, H0.mask)
    return s_rank_value(H, S) <= s_rank_value(sub, S) + s_rank_value(Q, S)


def image_of_power_check(S: FiniteGroup, k: int, phi: GroupHom) -> int:
    """For a homomorphism from S^k, return m with image(phi) ≅ S^m.

    Also asserts r_S(image) = m and, for nonabelian S, the sanity bound
    d(S^m) <= d(S) * m.
    """
    _require_simple(S)
    if phi.source.order != S.order ** k:
        raise InvalidParameter("phi must be defined on S^k")
    if not phi.is_homomorphism():
        raise InvalidParameter("phi is not a homomorphism")
    image, _ = phi.image().as_group()
    index = image.order
    m = round(math.log(index, S.order)) if index > 1 else 0
    if S.order ** m != index or m > k:
        raise AssertionError("image order is not a power of |S| bounded by |S|^k")
    if find_isomorphism(image, power(S, m)) is None:
        raise AssertionError("image is not isomorphic to a power of S")
    if s_rank_value(image, S) != m:
        raise AssertionError("S-rank of the image differs from m")
    if not S.is_abelian and m > 0:
        Sm = power(S, m)
        if Sm.order <= 512 and min_generators(Sm) > min_generators(S) * m:
            raise AssertionError("generator bound violated")
    return m
