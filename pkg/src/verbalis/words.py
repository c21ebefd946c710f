"""Group words: parsing, evaluation, verbal subgroups, width and laws.

Grammar::

    word    := product
    product := power ('*' power)*
    power   := atom ('^' INT)?
    atom    := NAME | 'e' | '(' product ')' | '[' product ',' product ']'

``NAME`` is a letter optionally followed by digits (``x``, ``x1``, ``h12``);
``e`` is reserved for the identity.  ``[a,b]`` means ``a^-1 b^-1 a b``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .config import get_caps
from .errors import EvaluationExceedsCap, InvalidParameter, UnboundVariable, WordSyntaxError
from .group import FiniteGroup, SubgroupSet
from .lattice import generating_set, normal_subgroup_masks, quotient_by_mask


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Ident:
    pass


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


@dataclass(frozen=True)
class Comm:
    left: "Node"
    right: "Node"


Node = Union[Var, Ident, Mul, Pow, Comm]
Letter = tuple[str, int]  # (variable, +1 or -1)


def node_vars(node: Node) -> list[str]:
    """Variables in order of first occurrence."""
    out: dict[str, None] = {}

    def walk(n):
        if isinstance(n, Var):
            out.setdefault(n.name)
        elif isinstance(n, Mul):
            for f in n.factors:
                walk(f)
        elif isinstance(n, Pow):
            walk(n.base)
        elif isinstance(n, Comm):
            walk(n.left)
            walk(n.right)

    walk(node)
    return list(out)


def render(node: Node) -> str:
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Ident):
        return "e"
    if isinstance(node, Mul):
        return "*".join(
            f"({render(f)})" if isinstance(f, Mul) else render(f) for f in node.factors
        )
    if isinstance(node, Pow):
        base = render(node.base)
        if isinstance(node.base, (Mul, Pow)):
            base = f"({base})"
        return f"{base}^{node.exp}"
    if isinstance(node, Comm):
        return f"[{render(node.left)},{render(node.right)}]"
    raise TypeError(node)


def letters(node: Node) -> list[Letter]:
    """Expansion into signed letters (not yet reduced)."""
    if isinstance(node, Var):
        return [(node.name, 1)]
    if isinstance(node, Ident):
        return []
    if isinstance(node, Mul):
        return [x for f in node.factors for x in letters(f)]
    if isinstance(node, Pow):
        base = letters(node.base)
        if node.exp < 0:
            base = invert_letters(base)
        return base * abs(node.exp)
    if isinstance(node, Comm):
        a, b = letters(node.left), letters(node.right)
        return invert_letters(a) + invert_letters(b) + a + b
    raise TypeError(node)


def invert_letters(ls: Sequence[Letter]) -> list[Letter]:
    return [(v, -s) for v, s in reversed(ls)]


def free_reduce(ls: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for v, s in ls:
        if stack and stack[-1] == (v, -s):
            stack.pop()
        else:
            stack.append((v, s))
    return tuple(stack)


def node_from_letters(ls: Sequence[Letter]) -> Node:
    """Compact AST: runs of the same letter become powers."""
    if not ls:
        return Ident()
    factors = []
    for (v, s), run in itertools.groupby(ls):
        k = len(list(run)) * s
        factors.append(Var(v) if k == 1 else Pow(Var(v), k))
    return factors[0] if len(factors) == 1 else Mul(tuple(factors))


# -- the Word type -----------------------------------------------------------

@dataclass(frozen=True)
class Word:
    ast: Node
    variables: tuple[str, ...]

    def __post_init__(self):
        missing = set(node_vars(self.ast)) - set(self.variables)
        if missing:
            raise InvalidParameter(f"variables {sorted(missing)} occur but are not declared")
        if len(set(self.variables)) != len(self.variables):
            raise InvalidParameter("variables must be distinct")

    @classmethod
    def of(cls, ast: Node) -> "Word":
        return cls(ast, tuple(node_vars(ast)))

    def __str__(self) -> str:
        return render(self.ast)

    @cached_property
    def normal_form(self) -> tuple[Letter, ...]:
        return free_reduce(letters(self.ast))

    def equivalent(self, other: "Word") -> bool:
        """Equal as elements of the free group."""
        return self.normal_form == other.normal_form

    @property
    def length(self) -> int:
        return len(self.normal_form)

    def rename(self, mapping: Mapping[str, str]) -> "Word":
        return Word(substitute(self.ast, {k: Var(v) for k, v in mapping.items()}),
                    tuple(mapping.get(v, v) for v in self.variables))


def substitute(node: Node, sub: Mapping[str, Node]) -> Node:
    if isinstance(node, Var):
        return sub.get(node.name, node)
    if isinstance(node, Ident):
        return node
    if isinstance(node, Mul):
        return Mul(tuple(substitute(f, sub) for f in node.factors))
    if isinstance(node, Pow):
        return Pow(substitute(node.base, sub), node.exp)
    if isinstance(node, Comm):
        return Comm(substitute(node.left, sub), substitute(node.right, sub))
    raise TypeError(node)


# -- parser ------------------------------------------------------------------

_TOKENS = re.compile(r"\s*(?:(?P<name>[A-Za-z][0-9]*)|(?P<int>-?\d+)|(?P<op>[*^(),\[\]]))")


class _WordParser:
    """Recursive descent over a token list; shared with the formula parser."""

    error = WordSyntaxError

    def __init__(self, text: str, tokens=None, pos: int = 0):
        self.text = text
        self.toks = tokens if tokens is not None else tokenize_word(text)
        self.i = pos

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            want = f"{value!r}" if value else "a token"
            raise self.error(f"expected {want}", self.text, tok[2])
        self.i += 1
        return tok

    def product(self) -> Node:
        factors = [self.power()]
        while self.peek()[1] == "*":
            self.take("*")
            factors.append(self.power())
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def power(self) -> Node:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take("^")
            kind, value, pos = self.take()
            if kind != "int":
                raise self.error("expected integer exponent", self.text, pos)
            return Pow(base, int(value))
        return base

    def atom(self) -> Node:
        kind, value, pos = self.peek()
        if kind == "name":
            self.take()
            return Ident() if value == "e" else Var(value)
        if value == "(":
            self.take("(")
            inner = self.product()
            self.take(")")
            return inner
        if value == "[":
            self.take("[")
            left = self.product()
            self.take(",")
            right = self.product()
            self.take("]")
            return Comm(left, right)
        if kind is None:
            raise self.error("unexpected end of input", self.text, pos)
        raise self.error(f"unexpected {value!r}", self.text, pos)


def tokenize_word(text: str, extra: str = ""):
    """Tokens as (kind, value, position)."""
    pattern = _TOKENS if not extra else re.compile(
        r"\s*(?:(?P<name>[A-Za-z][0-9]*)|(?P<int>-?\d+)|(?P<op>" + extra + r"|[*^(),\[\]]))"
    )
    toks = []
    pos = 0
    text_len = len(text)
    while pos < text_len:
        if text[pos:].strip() == "":
            break
        m = pattern.match(text, pos)
        if not m or m.end() == pos:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise WordSyntaxError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    return toks


def parse_word(text: str) -> Word:
    p = _WordParser(text)
    if not p.toks:
        raise WordSyntaxError("empty word", text, 0)
    ast = p.product()
    if p.i != len(p.toks):
        raise WordSyntaxError(f"unexpected {p.peek()[1]!r}", text, p.peek()[2])
    return Word.of(ast)


# -- evaluation --------------------------------------------------------------

def eval_node(node: Node, G: FiniteGroup, assignment: Mapping[str, int]) -> int:
    t = G.table
    if isinstance(node, Var):
        try:
            return assignment[node.name]
        except KeyError:
            raise UnboundVariable(f"no value for variable {node.name!r}") from None
    if isinstance(node, Ident):
        return 0
    if isinstance(node, Mul):
        acc = 0
        for f in node.factors:
            acc = t[acc][eval_node(f, G, assignment)]
        return acc
    if isinstance(node, Pow):
        return G.power(eval_node(node.base, G, assignment), node.exp)
    if isinstance(node, Comm):
        return G.commutator(eval_node(node.left, G, assignment), eval_node(node.right, G, assignment))
    raise TypeError(node)


def eval_word(w: Word, G: FiniteGroup, assignment: Mapping[str, int]) -> int:
    for v in w.variables:
        if v not in assignment:
            raise UnboundVariable(f"no value for variable {v!r}")
    return eval_node(w.ast, G, assignment)


def eval_array(node: Node, G: FiniteGroup, env: Mapping[str, np.ndarray]) -> np.ndarray:
    """Vectorised evaluation; ``env`` maps variables to broadcastable index arrays."""
    T = G.np_table
    if isinstance(node, Var):
        try:
            return env[node.name]
        except KeyError:
            raise UnboundVariable(f"no value for variable {node.name!r}") from None
    if isinstance(node, Ident):
        return np.zeros((), dtype=T.dtype)
    if isinstance(node, Mul):
        acc = eval_array(node.factors[0], G, env)
        for f in node.factors[1:]:
            acc = T[acc, eval_array(f, G, env)]
        return acc
    if isinstance(node, Pow):
        base = eval_array(node.base, G, env)
        k = node.exp
        if k < 0:
            base, k = G.np_inverse[base], -k
        acc = np.zeros((), dtype=T.dtype)
        while k:
            if k & 1:
                acc = T[acc, base]
            base = T[base, base]
            k >>= 1
        return acc
    if isinstance(node, Comm):
        a = eval_array(node.left, G, env)
        b = eval_array(node.right, G, env)
        inv = G.np_inverse
        return T[T[T[inv[a], inv[b]], a], b]
    raise TypeError(node)


def grid_env(names: Sequence[str], n: int, dtype=np.int32) -> dict[str, np.ndarray]:
    """One axis per variable, in odometer order."""
    k = len(names)
    env = {}
    for axis, name in enumerate(names):
        shape = [1] * k
        shape[axis] = n
        env[name] = np.arange(n, dtype=dtype).reshape(shape)
    return env


def check_eval_cap(G: FiniteGroup, nvars: int, cost: int = 1) -> None:
    cap = get_caps().evaluation
    total = G.order ** nvars * max(1, cost)
    if total > cap:
        raise EvaluationExceedsCap(
            f"|G|^{nvars} * {max(1, cost)} = {total} table lookups exceeds evaluation cap {cap}"
        )


def word_values(w: Word, G: FiniteGroup) -> np.ndarray:
    """Values of w at every assignment, one axis per variable."""
    check_eval_cap(G, len(w.variables), len(letters(w.ast)))
    env = grid_env(w.variables, G.order, G.np_table.dtype)
    out = eval_array(w.ast, G, env)
    return np.broadcast_to(out, (G.order,) * len(w.variables))


def value_set(w: Word, G: FiniteGroup) -> tuple[int, ...]:
    return tuple(int(x) for x in np.unique(word_values(w, G)))


# -- verbal subgroups ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class VerbalResult:
    subgroup: SubgroupSet
    width: int
    value_set: tuple[int, ...]
    layers: tuple[int, ...]  # BFS layer sizes, layers[0] == 1

    @property
    def order(self) -> int:
        return self.subgroup.order


def width_bfs(G: FiniteGroup, values: Iterable[int]) -> tuple[int, int, tuple[int, ...]]:
    """BFS from the identity, one step = right multiplication by a value or the
    inverse of a value.  Returns (subgroup mask, eccentricity, layer sizes)."""
    steps = sorted({v for v in values} | {G.inverse[v] for v in values})
    steps = [s for s in steps if s != 0]
    t = G.table
    mask = 1
    frontier = [0]
    layers = [1]
    while True:
        nxt = []
        for x in frontier:
            row = t[x]
            for s in steps:
                y = row[s]
                if not (mask >> y) & 1:
                    mask |= 1 << y
                    nxt.append(y)
        if not nxt:
            break
        layers.append(len(nxt))
        frontier = nxt
    return mask, len(layers) - 1, tuple(layers)


def verbal_subgroup(w: Word, G: FiniteGroup) -> VerbalResult:
    """w(G), its width, and the value set."""
    values = value_set(w, G)
    mask, width, layers = width_bfs(G, values)
    return VerbalResult(SubgroupSet.from_mask(G, mask), width, values, layers)


def is_law(w: Word, A: FiniteGroup) -> bool:
    return bool(np.all(word_values(w, A) == 0))


def combine_words(ws: Sequence[Word]) -> Word:
    """Product of the words over disjoint variable tuples ``x1, x2, ...``."""
    if not ws:
        raise InvalidParameter("combine_words needs at least one word")
    if len(ws) == 1:
        return ws[0]
    asts = []
    names: list[str] = []
    k = 1
    for w in ws:
        mapping = {}
        for v in w.variables:
            mapping[v] = f"x{k}"
            k += 1
        names.extend(mapping.values())
        asts.append(substitute(w.ast, {a: Var(b) for a, b in mapping.items()}))
    return Word(Mul(tuple(asts)), tuple(names))


# -- laws --------------------------------------------------------------------

def enumerate_laws(A: FiniteGroup, max_vars: int, max_length: int) -> list[Word]:
    """Freely reduced words that are laws of A.

    Variables are ``x1..x<max_vars>`` and, to remove renamings, must first occur
    in increasing order (``x1`` first).  The empty word is excluded.  Output is
    sorted by length, then by letters.
    """
    if max_vars < 1 or max_length < 1:
        raise InvalidParameter("bounds must be positive")
    n = A.order
    alphabet = [(f"x{i}", s) for i in range(1, max_vars + 1) for s in (1, -1)]
    # words explored ~ (2v)(2v-1)^(L-1), each costs |A|^v lookups
    est = sum(2 * max_vars * (2 * max_vars - 1) ** (L - 1) for L in range(1, max_length + 1))
    check_eval_cap(A, max_vars, est)
    T = A.np_table
    inv = A.np_inverse
    env = grid_env([f"x{i}" for i in range(1, max_vars + 1)], n, T.dtype)
    gens = {(v, 1): env[v] for v in env}
    gens.update({(v, -1): inv[env[v]] for v in env})
    found: list[tuple[Letter, ...]] = []

    def dfs(prefix: list[Letter], value: np.ndarray, used: int):
        if prefix and np.all(value == 0):
            found.append(tuple(prefix))
        if len(prefix) == max_length:
            return
        for v, s in alphabet:
            idx = int(v[1:])
            if idx > used + 1:
                continue
            if prefix and prefix[-1] == (v, -s):
                continue
            prefix.append((v, s))
            dfs(prefix, T[value, gens[(v, s)]], max(used, idx))
            prefix.pop()

    dfs([], np.zeros((), dtype=T.dtype), 0)
    order = {a: i for i, a in enumerate(alphabet)}
    found.sort(key=lambda ls: (len(ls), [order[x] for x in ls]))
    return [Word.of(node_from_letters(ls)) for ls in found]


def variety_verbal_subgroup(G: FiniteGroup, A: FiniteGroup, max_vars: int, max_length: int) -> SubgroupSet:
    """Subgroup of G generated by w(G) over the laws of A within the bounds."""
    laws = enumerate_laws(A, max_vars, max_length)
    vals: set[int] = set()
    for w in laws:
        vals.update(value_set(w, G))
    return SubgroupSet.from_mask(G, G.generate(vals))


# -- Birkhoff oracle -----------------------------------------------------------

def in_variety(Q: FiniteGroup, A: FiniteGroup) -> bool:
    """Whether Q satisfies every law of A.

    Independent of word enumeration: with generators q_1..q_d of Q, the
    relatively free group F of var(A) on d generators sits inside
    A^(A^d) as the subgroup generated by the coordinate tuples.  Q is in
    var(A) iff q_i extends to a well-defined map F -> Q, i.e. iff the
    subgroup of F x Q generated by (x_i, q_i) projects injectively to F.
    """
    if Q.order == 1:
        return True
    qgens = generating_set(Q)
    d = len(qgens)
    coords = list(itertools.product(range(A.order), repeat=d))
    limit = get_caps().evaluation // max(1, len(coords))
    xs = [tuple(c[i] for c in coords) for i in range(d)]
    TA, TQ = A.table, Q.table
    start = (tuple([0] * len(coords)), 0)
    seen_f: dict[tuple, int] = {start[0]: 0}
    frontier = [start]
    gens = list(zip(xs, qgens))
    while frontier:
        nxt = []
        for f, q in frontier:
            for x, g in gens:
                f2 = tuple(TA[a][b] for a, b in zip(f, x))
                q2 = TQ[q][g]
                prev = seen_f.get(f2)
                if prev is None:
                    if len(seen_f) >= limit:
                        raise EvaluationExceedsCap("relatively free group search exceeds evaluation cap")
                    seen_f[f2] = q2
                    nxt.append((f2, q2))
                elif prev != q2:
                    return False
        frontier = nxt
    return True


def birkhoff_verbal_subgroup(G: FiniteGroup, A: FiniteGroup) -> SubgroupSet:
    """Exact verbal subgroup of G for var(A): the intersection of all normal N
    with G/N in var(A)."""
    mask = G.full_mask
    for n in normal_subgroup_masks(G):
        if mask & ~n == 0 and n != mask:
            continue  # already inside n
        Q, _ = quotient_by_mask(G, n)
        if in_variety(Q, A):
            mask &= n
    return SubgroupSet.from_mask(G, mask, normal=True)


def word_from_spec(spec) -> Word:
    if isinstance(spec, Word):
        return spec
    if isinstance(spec, Mapping):
        spec = spec["word"]
    return parse_word(str(spec))
