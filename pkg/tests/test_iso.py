import itertools
import random

import pytest

import oracles
from verbalis.config import caps
from verbalis.corpus import corpus, quotient_targets
from verbalis.errors import OrderExceedsCap
from verbalis.group import from_table
from verbalis.iso import IsoClasses, canonical_form, find_isomorphism, is_isomorphic, profile
from verbalis.named import cyclic, dihedral, parse_group_name, quaternion, symmetric


def test_examples():
    C6, C2xC3 = cyclic(6), parse_group_name("C2 x C3")
    f = find_isomorphism(C6, C2xC3)
    assert f is not None and f.is_homomorphism() and f.is_bijective
    # CRT oracle: a -> (a mod 2, a mod 3) is an isomorphism onto the product
    crt = [(a % 2) * 3 + (a % 3) for a in range(6)]
    assert all(crt[C6.mul(a, b)] == C2xC3.mul(crt[a], crt[b]) for a in range(6) for b in range(6))
    assert not is_isomorphic(cyclic(4), parse_group_name("C2^2"))
    S3 = symmetric(3)
    assert is_isomorphic(S3, S3)
    assert not is_isomorphic(dihedral(4), quaternion())
    assert is_isomorphic(dihedral(3), S3)


def test_agrees_with_bijection_oracle():
    groups = [G for G in corpus() if G.order in (4, 6, 8)]
    for G, H in itertools.combinations(groups, 2):
        assert is_isomorphic(G, H) == oracles.brute_isomorphic(G.table, H.table), (G.label, H.label)


def _relabel(G, seed):
    rng = random.Random(seed)
    perm = list(range(1, G.order))
    rng.shuffle(perm)
    perm = [0] + perm
    inv = {p: i for i, p in enumerate(perm)}
    table = [[perm[G.table[inv[a]][inv[b]]] for b in range(G.order)] for a in range(G.order)]
    return from_table(table)


@pytest.mark.parametrize("G", [G for G in corpus() if not G.is_abelian][::4], ids=lambda G: G.label)
def test_relabelled_copy_is_found(G):
    H = _relabel(G, G.order)
    f = find_isomorphism(G, H)
    assert f is not None and f.is_bijective and f.is_homomorphism()


def test_equivalence_relation_on_sampled_triples():
    groups = [G for G in corpus() if G.order in (8, 12, 16)]
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = rng.sample(groups, 3)
        assert is_isomorphic(a, a)
        assert is_isomorphic(a, b) == is_isomorphic(b, a)
        if is_isomorphic(a, b) and is_isomorphic(b, c):
            assert is_isomorphic(a, c)


def test_canonical_form_is_complete_invariant_up_to_16():
    groups = [G for G in corpus() if G.order <= 16]
    for G, H in itertools.combinations(groups, 2):
        if G.order != H.order:
            continue
        assert (canonical_form(G) == canonical_form(H)) == is_isomorphic(G, H), (G.label, H.label)


def test_canonical_form_relabel_invariant():
    for G in [quaternion(), dihedral(6), symmetric(3), parse_group_name("C2 x D4")]:
        assert canonical_form(_relabel(G, 3)) == canonical_form(G)


def test_canonical_cap():
    with pytest.raises(OrderExceedsCap):
        canonical_form(symmetric(4))
    assert canonical_form(cyclic(30))  # abelian groups need no search


def test_isomorphism_cap():
    with caps(isomorphism=5):
        with pytest.raises(OrderExceedsCap):
            is_isomorphic(cyclic(6), cyclic(6))


def test_isoclasses_dedupes():
    classes = IsoClasses()
    for G in [cyclic(6), parse_group_name("C2 x C3"), symmetric(3), dihedral(3), symmetric(4),
              parse_group_name("C2 x A4"), parse_group_name("C2 x A4")]:
        classes.add(G)
    assert len(classes) == 4
    assert classes.find(_relabel(symmetric(4), 1)) == 2


def test_targets_pairwise_distinct():
    reps = quotient_targets()
    for G, H in itertools.combinations(reps, 2):
        assert not is_isomorphic(G, H)


def test_profile_is_invariant():
    assert profile(cyclic(6)) == profile(parse_group_name("C2 x C3"))
    assert profile(cyclic(4)) != profile(parse_group_name("C2^2"))
