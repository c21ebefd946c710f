"""Size caps.

Caps are configuration, not constants.  They live in a context variable so a
caller (or the CLI) can override them for a block of work without touching
global state seen by other threads::

    with caps(enumeration=512):
        subgroups(G)

Each cap can also be set from the environment as ``VERBALIS_<NAME>``, e.g.
``VERBALIS_ENUMERATION=512``.
"""

from __future__ import annotations

import contextlib
import dataclasses
import os
from contextvars import ContextVar
from typing import Iterator


@dataclasses.dataclass(frozen=True)
class Caps:
    closure: int = 5040        # largest group built from permutations / named families
    enumeration: int = 256     # subgroup and normal-subgroup enumeration
    isomorphism: int = 2000    # is_isomorphic
    generation: int = 512      # min_generators
    evaluation: int = 10**8    # table lookups for word maps / formula expansion
    canonical: int = 16        # exact canonical-form search (fingerprints)
    width_r: int = 8           # largest r for membership formulas (2**r disjuncts)


CAP_NAMES = tuple(f.name for f in dataclasses.fields(Caps))


def _from_env() -> Caps:
    values = {}
    for name in CAP_NAMES:
        raw = os.environ.get(f"VERBALIS_{name.upper()}")
        if raw is not None:
            values[name] = int(raw)
    return Caps(**values)


_current: ContextVar[Caps] = ContextVar("verbalis_caps", default=_from_env())


def get_caps() -> Caps:
    return _current.get()


@contextlib.contextmanager
def caps(**overrides: int) -> Iterator[Caps]:
    unknown = set(overrides) - set(CAP_NAMES)
    if unknown:
        raise TypeError(f"unknown caps: {sorted(unknown)}")
    new = dataclasses.replace(_current.get(), **overrides)
    token = _current.set(new)
    try:
        yield new
    finally:
        _current.reset(token)
