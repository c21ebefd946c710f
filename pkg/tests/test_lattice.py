import math
from collections import Counter

import pytest

import oracles
from verbalis.config import caps
from verbalis.corpus import corpus
from verbalis.errors import EnumerationExceedsCap, NotNormal, OrderExceedsCap
from verbalis.group import SubgroupSet, elements_of, popcount
from verbalis.iso import canonical_form, is_isomorphic
from verbalis.lattice import (
    brute_min_generators,
    composition_series,
    core,
    count_subgroups_of_index,
    is_simple,
    min_generators,
    normal_subgroup_masks,
    normal_subgroups,
    quotient,
    quotient_by_mask,
    subgroup_masks,
    subgroups,
)
from verbalis.named import alternating, cyclic, dihedral, parse_group_name, quaternion, symmetric, trivial

S3 = symmetric(3)
SMALL = [trivial(), cyclic(4), cyclic(6), S3, dihedral(4), quaternion(), alternating(4),
         parse_group_name("C2^2"), parse_group_name("C2 x C4"), dihedral(5), cyclic(12)]


def as_sets(masks):
    return {frozenset(elements_of(m)) for m in masks}


@pytest.mark.parametrize("G", SMALL, ids=lambda G: G.label)
def test_subgroups_match_subset_oracle(G):
    expected = oracles.subset_subgroups(G) if G.order <= 12 else oracles.all_subgroups(G)
    assert as_sets(subgroup_masks(G)) == expected


@pytest.mark.parametrize("G", SMALL, ids=lambda G: G.label)
def test_normal_subgroups_match_oracle(G):
    assert as_sets(normal_subgroup_masks(G)) == oracles.normal_subgroups(G)


def test_subgroup_examples():
    assert [H.order for H in subgroups(S3)] == [1, 2, 2, 2, 3, 6]
    assert len(subgroups(cyclic(4))) == 3
    assert len(subgroups(trivial())) == 1
    assert [H.order for H in normal_subgroups(S3)] == [1, 3, 6]
    assert len(normal_subgroups(parse_group_name("C2^2"))) == 5
    assert len(normal_subgroups(quaternion())) == 6


def test_subgroup_order_is_canonical():
    masks = subgroup_masks(symmetric(4))
    keys = [(popcount(m), elements_of(m)) for m in masks]
    assert keys == sorted(keys)


def test_enumeration_cap():
    with caps(enumeration=10):
        with pytest.raises(EnumerationExceedsCap):
            subgroups(cyclic(12))


def test_normal_flags_agree_for_corpus_up_to_48():
    for G in corpus():
        normal = set(normal_subgroup_masks(G))
        flagged = {m for m in subgroup_masks(G) if G.is_normal_mask(m)}
        assert flagged == normal, G.label


def test_subgroups_are_closed_and_lagrange():
    for G in SMALL:
        for H in subgroups(G):
            elems = set(H.elements)
            assert 0 in elems
            assert all(G.mul(a, b) in elems for a in elems for b in elems)
            assert G.order % H.order == 0
            assert H.normal == oracles.is_normal(G, elems)


def test_quotient_examples():
    A3 = SubgroupSet.from_mask(S3, [m for m in subgroup_masks(S3) if popcount(m) == 3][0])
    Q, pi = quotient(S3, A3)
    assert Q.order == 2 and pi.is_homomorphism() and pi.is_surjective
    Q, _ = quotient(S3, S3.trivial)
    assert is_isomorphic(Q, S3)
    C6 = cyclic(6)
    C3 = SubgroupSet.from_mask(C6, C6.generate([2]))
    Q, _ = quotient(C6, C3)
    assert Q.order == 2
    with pytest.raises(NotNormal):
        quotient(S3, SubgroupSet.from_mask(S3, S3.generate([1])))


def test_quotient_matches_coset_oracle():
    for G in SMALL:
        for n in normal_subgroup_masks(G):
            N = elements_of(n)
            Q, pi = quotient_by_mask(G, n)
            table, where = oracles.quotient_table(G, N)
            assert Q.order == len(table) == oracles.cosets_quotient_order(G, N)
            assert [pi.map[g] for g in range(G.order)] == where
            assert [list(r) for r in Q.table] == table


def test_third_isomorphism_theorem():
    for G in corpus():
        if G.order > 24:
            continue
        normals = normal_subgroup_masks(G)
        for n in normals:
            Q, pi = quotient_by_mask(G, n)
            for k in normals:
                if n & ~k:
                    continue
                image = 0
                for x in elements_of(k):
                    image |= 1 << pi.map[x]
                QQ, _ = quotient_by_mask(Q, image)
                direct, _ = quotient_by_mask(G, k)
                assert is_isomorphic(QQ, direct), (G.label, n, k)


def _factor_key(Q):
    return canonical_form(Q)


def test_composition_series_examples():
    cs = composition_series(S3)
    assert [Q.order for Q in cs.factors] == [3, 2]
    assert [Q.order for Q in composition_series(cyclic(4)).factors] == [2, 2]
    cs = composition_series(alternating(5))
    assert cs.length == 1 and cs.factors[0].order == 60
    assert composition_series(trivial()).length == 0


@pytest.mark.parametrize("G", [G for G in corpus() if G.order <= 48][::3], ids=lambda G: G.label)
def test_composition_series_valid_and_jordan_holder(G):
    runs = [composition_series(G, "first"), composition_series(G, "last")]
    for cs in runs:
        chain = cs.chain
        assert chain[0].order == 1 and chain[-1].order == G.order
        for lo, hi, F in zip(chain, chain[1:], cs.factors):
            assert lo <= hi
            H, inc = hi.as_group()
            assert all(
                (lo.mask >> G.conj(a, inc.map[h])) & 1 for a in lo.elements for h in range(H.order)
            )
            assert is_simple(F)
            assert F.order == hi.order // lo.order
    keys = [Counter(_factor_key(F) for F in cs.factors) for cs in runs]
    assert keys[0] == keys[1]


def test_is_simple_examples():
    assert is_simple(cyclic(5))
    assert not is_simple(S3)
    assert not is_simple(trivial())
    assert is_simple(alternating(5))
    assert not is_simple(alternating(4))


def test_core_examples_and_properties():
    H = SubgroupSet.from_mask(S3, S3.generate([1]))
    assert core(S3, H).order == 1
    assert core(S3, S3.whole).order == 6
    C6 = cyclic(6)
    C3 = SubgroupSet.from_mask(C6, C6.generate([2]))
    assert core(C6, C3).mask == C3.mask
    for G in SMALL:
        normals = normal_subgroup_masks(G)
        for h in subgroup_masks(G):
            C = core(G, SubgroupSet.from_mask(G, h))
            assert G.is_normal_mask(C.mask) and C.mask & ~h == 0
            assert all(n & ~C.mask == 0 for n in normals if n & ~h == 0)
            index_h = G.order // popcount(h)
            assert G.order // C.order <= math.factorial(index_h)


def test_min_generators_examples_and_oracle():
    assert min_generators(cyclic(6)) == 1
    assert min_generators(S3) == 2
    assert min_generators(quaternion()) == 2
    assert min_generators(trivial()) == 0
    assert min_generators(parse_group_name("C2^4")) == 4
    for G in SMALL:
        assert min_generators(G) == oracles.min_generators_subsets(G) == brute_min_generators(G)


def test_min_generators_cap():
    with caps(generation=10):
        with pytest.raises(OrderExceedsCap):
            min_generators(cyclic(12))


def test_count_subgroups_of_index():
    assert count_subgroups_of_index(S3, 2) == 1
    assert count_subgroups_of_index(S3, 3) == 3
    assert count_subgroups_of_index(S3, 4) == 0
    for G in SMALL:
        assert count_subgroups_of_index(G, 1) == 1
        subs = oracles.all_subgroups(G)
        for n in range(1, G.order + 1):
            assert count_subgroups_of_index(G, n) == sum(1 for H in subs if len(H) * n == G.order)
