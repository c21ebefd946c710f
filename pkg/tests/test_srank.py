import pytest

import oracles
from verbalis.corpus import corpus, quotient_targets, simple_groups
from verbalis.errors import InvalidParameter, NotNormal, NotSimple
from verbalis.group import GroupHom, SubgroupSet, direct_product, elements_of, projection
from verbalis.iso import is_isomorphic
from verbalis.lattice import min_generators, normal_subgroup_masks, quotient_by_mask
from verbalis.named import alternating, cyclic, parse_group_name, quaternion, symmetric
from verbalis.srank import (
    check_frattini_cover,
    count_quotients_brute,
    count_quotients_via_series,
    frattini_subgroup,
    image_of_power_check,
    non_generators,
    power,
    s_rank,
    s_rank_subadditivity_check,
    s_witness_masks,
)

S3, Q8, C2, C3 = symmetric(3), quaternion(), cyclic(2), cyclic(3)
V4 = parse_group_name("C2^2")


# -- Frattini ------------------------------------------------------------------

def test_frattini_examples():
    assert frattini_subgroup(cyclic(4)).elements == (0, 2)
    assert frattini_subgroup(S3).order == 1
    assert [Q8.name(a) for a in frattini_subgroup(Q8).elements] == ["1", "-1"]


@pytest.mark.parametrize("G", [G for G in corpus() if G.order <= 16], ids=lambda G: G.label)
def test_frattini_equals_non_generators(G):
    phi = frattini_subgroup(G)
    assert phi.mask == non_generators(G).mask
    assert G.is_normal_mask(phi.mask)
    if G.order <= 12:
        assert set(phi.elements) == oracles.frattini_by_generation(G)


def test_frattini_cover_examples():
    C4 = cyclic(4)
    chk = check_frattini_cover(GroupHom(C4, C2, (0, 1, 0, 1)))
    assert chk.is_cover and chk.kernel.elements == (0, 2)
    chk = check_frattini_cover(projection(V4, 0))
    assert not chk.is_cover and chk.is_surjective
    center = SubgroupSet.from_mask(Q8, 0b11)
    Q, pi = quotient_by_mask(Q8, center.mask)
    assert is_isomorphic(Q, V4)
    assert check_frattini_cover(pi).is_cover


def test_frattini_cover_rejects_non_homomorphism():
    with pytest.raises(InvalidParameter):
        check_frattini_cover(GroupHom(cyclic(4), C2, (0, 1, 1, 0)))


def test_frattini_covers_preserve_rank():
    found = 0
    for G in [G for G in corpus() if G.order <= 32]:
        phi = frattini_subgroup(G)
        for n in normal_subgroup_masks(G):
            if n & ~phi.mask:
                continue
            Q, pi = quotient_by_mask(G, n)
            assert check_frattini_cover(pi).is_cover
            assert min_generators(G) == min_generators(Q)
            found += 1
    assert found > 100


# -- S-rank ------------------------------------------------------------------------

def test_s_rank_examples():
    r = s_rank(V4, C2)
    assert r.rank == 2 and r.M.order == 1 and len(r.witnesses) == 3
    r = s_rank(S3, C2)
    assert r.rank == 1 and r.M.order == 3
    r = s_rank(S3, C3)
    assert r.rank == 0 and r.M.order == 6 and r.witnesses == ()
    assert r.as_json() == {"rank": 0, "witnesses": 0, "M_order": 6}


def test_s_rank_requires_simple():
    with pytest.raises(NotSimple):
        s_rank(S3, S3)


@pytest.mark.parametrize("G", [G for G in corpus() if G.order <= 24][::2], ids=lambda G: G.label)
def test_witnesses_match_bijection_oracle(G):
    for S in [C2, C3, cyclic(5)]:
        expected = set()
        for N in oracles.normal_subgroups(G):
            if len(N) * S.order == G.order:
                table, _ = oracles.quotient_table(G, N)
                if oracles.brute_isomorphic(table, S.table):
                    expected.add(N)
        assert {frozenset(elements_of(m)) for m in s_witness_masks(G, S)} == expected
        r = s_rank(G, S)
        M = frozenset(range(G.order))
        for N in expected:
            M &= N
        assert set(r.M.elements) == set(M)
        assert r.isomorphism.is_bijective and r.isomorphism.is_homomorphism()


def test_s_rank_with_a5():
    G = direct_product(alternating(5), cyclic(2))
    r = s_rank(G, alternating(5))
    assert r.rank == 1 and r.M.order == 2


def test_m_s_invariant_under_overgroup_conjugation():
    for G in [G for G in corpus() if G.order <= 24][::3]:
        for n in normal_subgroup_masks(G):
            H0, inc = SubgroupSet.from_mask(G, n).as_group()
            for S in (C2, C3):
                M_local = s_rank(H0, S).M
                M = 0
                for a in M_local.elements:
                    M |= 1 << inc.map[a]
                for g in range(G.order):
                    conj = 0
                    for a in elements_of(M):
                        conj |= 1 << G.conj(a, g)
                    assert conj == M


# -- counting quotients ----------------------------------------------------------

def test_count_examples():
    assert count_quotients_brute(V4, C2) == 3 == count_quotients_via_series(V4, C2)
    assert count_quotients_brute(S3, S3) == 1 == count_quotients_via_series(S3, S3)
    assert count_quotients_via_series(Q8, C2) == 3
    assert count_quotients_brute(cyclic(6), cyclic(4)) == 0 == count_quotients_via_series(cyclic(6), cyclic(4))


def test_count_matches_bijection_oracle_small():
    targets = [F for F in quotient_targets() if F.order <= 8]
    for G in [G for G in corpus() if G.order <= 16][::2]:
        for F in targets:
            if G.order % F.order:
                continue
            expected = 0
            for N in oracles.normal_subgroups(G):
                if len(N) * F.order == G.order:
                    table, _ = oracles.quotient_table(G, N)
                    expected += oracles.brute_isomorphic(table, F.table)
            assert count_quotients_via_series(G, F) == expected, (G.label, F.label)


def test_series_matches_brute_on_mixed_products():
    G = parse_group_name("C2^2 x S3")
    for F in [C2, V4, S3, parse_group_name("C2 x S3"), cyclic(6), parse_group_name("C2^3"), G]:
        assert count_quotients_via_series(G, F) == count_quotients_brute(G, F)


# -- rank inequalities ---------------------------------------------------------------

def test_subadditivity_examples():
    diag = SubgroupSet.from_mask(V4, V4.generate([3]))
    assert s_rank_subadditivity_check(V4, diag, C2)
    A3 = SubgroupSet.from_mask(S3, S3.generate([S3.perms.index((1, 2, 0))]))
    assert s_rank_subadditivity_check(S3, A3, C2)
    assert s_rank_subadditivity_check(S3, S3.whole, C2)
    with pytest.raises(NotNormal):
        s_rank_subadditivity_check(S3, SubgroupSet.from_mask(S3, S3.generate([1])), C2)


def test_subadditivity_on_corpus():
    for G in [G for G in corpus() if G.order <= 24]:
        for n in normal_subgroup_masks(G):
            for S in simple_groups(5):
                assert s_rank_subadditivity_check(G, SubgroupSet.from_mask(G, n, normal=True), S)


def test_image_of_power_examples():
    P = power(C2, 3)
    # (a, b, c) -> (a, b): coordinates in mixed radix, last fastest
    proj = GroupHom(P, power(C2, 2), tuple(x >> 1 for x in range(8)))
    assert image_of_power_check(C2, 3, proj) == 2
    P = power(C3, 2)
    add = GroupHom(P, C3, tuple((x // 3 + x % 3) % 3 for x in range(9)))
    assert image_of_power_check(C3, 2, add) == 1
    P = power(C2, 2)
    assert image_of_power_check(C2, 2, GroupHom(P, C2, (0,) * 4)) == 0


def test_image_of_power_nonabelian():
    A5 = alternating(5)
    P = power(A5, 2)
    assert image_of_power_check(A5, 2, projection(P, 0)) == 1
