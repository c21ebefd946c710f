"""Finite group computations around verbal subgroups, word width and quotients."""

from .config import Caps, caps, get_caps
from .errors import VerbalisError
from .group import FiniteGroup, GroupHom, SubgroupSet, direct_product, from_permutations, from_table
from .named import group_from_spec, load_group, named_group, parse_group_name

__version__ = "0.1.0"

__all__ = [
    "Caps",
    "FiniteGroup",
    "GroupHom",
    "SubgroupSet",
    "VerbalisError",
    "caps",
    "direct_product",
    "from_permutations",
    "from_table",
    "get_caps",
    "group_from_spec",
    "load_group",
    "named_group",
    "parse_group_name",
]
