"""Slow, obviously-correct reference computations used to check the library.

Nothing here calls the enumeration, isomorphism or width code under test; only
the raw multiplication table of a group is used.
"""

from __future__ import annotations

import itertools
from collections import Counter


def table_mul(G, a, b):
    return G.table[a][b]


def inverse(G, a):
    return next(b for b in range(G.order) if G.table[a][b] == 0)


def element_order(G, a):
    k, x = 1, a
    while x != 0:
        x = G.table[x][a]
        k += 1
    return k


def closure(G, elems):
    """Subgroup generated by elems, by repeated products of everything found."""
    found = {0} | set(elems)
    while True:
        new = {G.table[a][b] for a in found for b in found} | {inverse(G, a) for a in found}
        if new <= found:
            return frozenset(found)
        found |= new


def all_subgroups(G):
    """Every subgroup: closures of subsets of size <= 2, then pairwise joins
    until nothing new appears."""
    subs = set()
    for k in range(0, 3):
        for combo in itertools.combinations(range(G.order), k):
            subs.add(closure(G, combo))
    while True:
        new = {closure(G, A | B) for A in subs for B in subs} - subs
        if not new:
            return subs
        subs |= new


def subset_subgroups(G):
    """Every subgroup by testing all subsets containing the identity (|G| <= 12)."""
    out = set()
    rest = list(range(1, G.order))
    for k in range(len(rest) + 1):
        for combo in itertools.combinations(rest, k):
            s = {0, *combo}
            if all(G.table[a][b] in s for a in s for b in s):
                out.add(frozenset(s))
    return out


def is_normal(G, H):
    return all(G.table[G.table[inverse(G, g)][h]][g] in H for g in range(G.order) for h in H)


def normal_subgroups(G):
    return {H for H in all_subgroups(G) if is_normal(G, H)}


def cosets_quotient_order(G, N):
    return len({frozenset(G.table[g][n] for n in N) for g in range(G.order)})


def quotient_table(G, N):
    """Coset group as (table, coset-of-element list) without using library code."""
    cosets = []
    where = {}
    for g in range(G.order):
        if g in where:
            continue
        c = frozenset(G.table[g][n] for n in N)
        for x in c:
            where[x] = len(cosets)
        cosets.append(min(c))
    table = [[where[G.table[a][b]] for b in cosets] for a in cosets]
    return table, [where[g] for g in range(G.order)]


def brute_isomorphic(T1, T2):
    """Isomorphism of two small tables by trying every bijection fixing 0 (n <= 8)."""
    n = len(T1)
    if n != len(T2):
        return False
    for perm in itertools.permutations(range(1, n)):
        f = (0,) + perm
        if all(f[T1[a][b]] == T2[f[a]][f[b]] for a in range(n) for b in range(n)):
            return True
    return False


def order_profile(G):
    return Counter(element_order(G, a) for a in range(G.order))


def power_set_products(G, values, r):
    """All products of exactly r factors from values ∪ values^-1 ∪ {e}."""
    steps = set(values) | {inverse(G, v) for v in values} | {0}
    layer = {0}
    for _ in range(r):
        layer = {G.table[x][s] for x in layer for s in steps}
    return layer


def brute_width(G, values):
    """Least r with every element of <values> a product of r values or inverses."""
    H = closure(G, values)
    r = 0
    while power_set_products(G, values, r) != H:
        r += 1
    return r


def frattini_by_generation(G):
    """Elements that can be dropped from every generating set containing them."""
    full = frozenset(range(G.order))
    subsets = []
    for k in range(0, 4):
        subsets.extend(itertools.combinations(range(G.order), k))
    out = set()
    for g in range(G.order):
        if all(closure(G, s + (g,)) != full or closure(G, s) == full for s in subsets):
            out.add(g)
    return frozenset(out)


def min_generators_subsets(G):
    for k in range(0, G.order + 1):
        for combo in itertools.combinations(range(G.order), k):
            if len(closure(G, combo)) == G.order:
                return k
    raise AssertionError


def word_values_brute(G, func, nvars):
    """Value set of a word given as a Python function of table-level elements."""
    return {func(*t) for t in itertools.product(range(G.order), repeat=nvars)}


def mul_all(G, *xs):
    out = 0
    for x in xs:
        out = G.table[out][x]
    return out


def comm(G, a, b):
    return mul_all(G, inverse(G, a), inverse(G, b), a, b)


def power(G, a, k):
    if k < 0:
        a, k = inverse(G, a), -k
    out = 0
    for _ in range(k):
        out = G.table[out][a]
    return out
