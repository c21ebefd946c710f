"""Named group families and the JSON group-spec format.

Short names accepted by :func:`parse_group_name`::

    C6   D4   S3   A4   Q8   C2^3   E(3,2)   S3 x C5   1

``D<n>`` is the dihedral group of order ``2n``.
"""

from __future__ import annotations

import functools
import itertools
import json
import re
from pathlib import Path
from typing import Any, Mapping

from .errors import InvalidParameter, UnknownName
from .group import (
    FiniteGroup,
    _perm_table,
    direct_product,
    from_permutations,
    from_table,
    parse_cycles,
)
from .config import get_caps
from .errors import ClosureExceedsCap


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _check_order(n: int) -> None:
    cap = get_caps().closure
    if n > cap:
        raise ClosureExceedsCap(f"group of order {n} exceeds closure cap {cap}")


@functools.lru_cache(maxsize=None)
def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidParameter("C_n needs n >= 1")
    _check_order(n)
    return FiniteGroup(
        [[(a + b) % n for b in range(n)] for a in range(n)],
        label=f"C{n}" if n > 1 else "1",
    )


@functools.lru_cache(maxsize=None)
def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n; element ``i + n*j`` is r^i s^j."""
    if n < 1:
        raise InvalidParameter("D_n needs n >= 1")
    _check_order(2 * n)
    elems = [(i, j) for j in range(2) for i in range(n)]

    def mul(x, y):
        (i, a), (k, b) = x, y
        return ((i + (k if a == 0 else -k)) % n, (a + b) % 2)

    index = {x: t for t, x in enumerate(elems)}
    table = [[index[mul(x, y)] for y in elems] for x in elems]
    names = [("r^%d" % i if i else "1") if j == 0 else ("r^%d s" % i if i else "s") for i, j in elems]
    return FiniteGroup(table, label=f"D{n}", names=names)


@functools.lru_cache(maxsize=None)
def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidParameter("S_n needs n >= 1")
    _check_order(_factorial(n))
    G = _perm_table(list(itertools.permutations(range(n))), f"S{n}")
    return G


@functools.lru_cache(maxsize=None)
def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidParameter("A_n needs n >= 1")
    _check_order(max(1, _factorial(n) // 2))
    perms = [p for p in itertools.permutations(range(n)) if _parity(p) == 0]
    return _perm_table(perms, f"A{n}")


@functools.lru_cache(maxsize=None)
def quaternion() -> FiniteGroup:
    """Q8 with elements 1, -1, i, -i, j, -j, k, -k in that order."""
    units = "1ijk"
    # unit products: (unit, unit) -> (sign, unit)
    rule = {
        ("1", u): (1, u) for u in units
    }
    rule.update({(u, "1"): (1, u) for u in units})
    rule.update({
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    })
    elems = [(s, u) for u in units for s in (1, -1)]
    index = {x: t for t, x in enumerate(elems)}

    def mul(x, y):
        s, u = rule[(x[1], y[1])]
        return (x[0] * y[0] * s, u)

    table = [[index[mul(x, y)] for y in elems] for x in elems]
    names = [("" if s == 1 else "-") + u for s, u in elems]
    return FiniteGroup(table, label="Q8", names=names)


@functools.lru_cache(maxsize=None)
def elementary_abelian(p: int, k: int) -> FiniteGroup:
    if not is_prime(p):
        raise InvalidParameter(f"E_(p,k) needs p prime, got {p}")
    if k < 1:
        raise InvalidParameter("E_(p,k) needs k >= 1")
    if k == 1:
        return cyclic(p)
    return direct_product(*([cyclic(p)] * k), label=f"C{p}^{k}")


def trivial() -> FiniteGroup:
    return cyclic(1)


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _parity(p) -> int:
    seen, par = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        par ^= (length - 1) & 1
    return par


def named_group(name: str, **params: int) -> FiniteGroup:
    """Canonical group of a named family: ``named_group("S", n=3)``,
    ``named_group("E", p=2, k=3)``, ``named_group("Q8")``."""
    key = name.strip()
    try:
        if key in ("C", "Z"):
            return cyclic(int(params["n"]))
        if key == "D":
            return dihedral(int(params["n"]))
        if key == "S":
            return symmetric(int(params["n"]))
        if key == "A":
            return alternating(int(params["n"]))
        if key == "E":
            return elementary_abelian(int(params["p"]), int(params["k"]))
    except KeyError as exc:
        raise InvalidParameter(f"missing parameter {exc.args[0]!r} for family {name!r}") from None
    if key == "Q8":
        return quaternion()
    if key in ("1", "trivial"):
        return trivial()
    raise UnknownName(f"unknown group family {name!r}")


_TOKEN = re.compile(r"^(?:(?P<fam>[CDSAZ])(?P<n>\d+)|(?P<q>Q8)|E\((?P<p>\d+),\s*(?P<k>\d+)\)|(?P<one>1))(?:\^(?P<pow>\d+))?$")


@functools.lru_cache(maxsize=None)
def parse_group_name(text: str) -> FiniteGroup:
    parts = [t for t in re.split(r"\s*[x×]\s*", text.strip()) if t]
    if not parts:
        raise UnknownName(f"empty group name {text!r}")
    factors = []
    for part in parts:
        m = _TOKEN.match(part)
        if not m:
            raise UnknownName(f"cannot parse group name {part!r}")
        if m["fam"]:
            G = named_group(m["fam"], n=int(m["n"]))
        elif m["q"]:
            G = quaternion()
        elif m["p"]:
            G = named_group("E", p=int(m["p"]), k=int(m["k"]))
        else:
            G = trivial()
        power = int(m["pow"] or 1)
        if power < 1:
            raise InvalidParameter("power must be positive")
        if power == 1:
            factors.append(G)
        elif m["fam"] == "C" and is_prime(int(m["n"])):
            factors.append(elementary_abelian(int(m["n"]), power))
        else:
            factors.append(direct_product(*([G] * power), label=f"{G.label}^{power}"))
    if len(factors) == 1:
        return factors[0]
    return direct_product(*factors, label=" x ".join(parts))


# -- JSON specs ---------------------------------------------------------------

def group_from_spec(spec: Any) -> FiniteGroup:
    """Build a group from a JSON-style spec (dict or short-name string)."""
    if isinstance(spec, str):
        return parse_group_name(spec)
    if not isinstance(spec, Mapping):
        raise InvalidParameter(f"group spec must be an object or a name, got {type(spec).__name__}")
    kind = spec.get("kind", "named")
    if kind == "named":
        params = {k: v for k, v in spec.items() if k not in ("kind", "name")}
        if "name" not in spec:
            raise InvalidParameter("named group spec needs 'name'")
        return named_group(str(spec["name"]), **params)
    if kind == "perm":
        degree = int(spec["degree"])
        gens = [_parse_generator(g, degree) for g in spec.get("generators", [])]
        return from_permutations(degree, gens, label=spec.get("label"))
    if kind == "table":
        table = spec["table"]
        if "order" in spec and int(spec["order"]) != len(table):
            raise InvalidParameter("declared order does not match table size")
        return from_table(table, label=spec.get("label"))
    if kind == "product":
        factors = [group_from_spec(f) for f in spec.get("factors", [])]
        return direct_product(*factors, label=spec.get("label"))
    raise UnknownName(f"unknown group spec kind {kind!r}")


def _parse_generator(g: Any, degree: int):
    if isinstance(g, str):
        return parse_cycles(g, degree)
    # list of cycles, each a list of 1-based points
    text = "".join("(" + " ".join(str(int(x)) for x in cyc) + ")" for cyc in g)
    return parse_cycles(text, degree)


def group_to_spec(G: FiniteGroup) -> dict:
    out: dict[str, Any] = {"kind": "table", "order": G.order, "table": [list(r) for r in G.table]}
    if G.label:
        out["label"] = G.label
    return out


def load_group(arg: str) -> FiniteGroup:
    """Group from a CLI argument: inline JSON, a path to a JSON file, or a short name."""
    text = arg.strip()
    if text.startswith("{") or text.startswith('"'):
        return group_from_spec(json.loads(text))
    path = Path(arg)
    if path.suffix == ".json" or path.exists():
        with open(path, encoding="utf-8") as fh:
            return group_from_spec(json.load(fh))
    return parse_group_name(text)
