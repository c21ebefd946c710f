"""First-order logic over the language of groups.

Formula grammar::

    formula := disj ('->' formula)?
    disj    := conj ('|' conj)*
    conj    := unary ('&' unary)*
    unary   := '!' unary | ('forall' | 'exists') NAME '.' formula | '(' formula ')' | atom
    atom    := word '=' word | word '!=' word

Quantifiers extend as far right as possible.  Terms are words (see
:mod:`verbalis.words`) and ``e`` is the identity constant.

Evaluation expands quantifiers exhaustively over the finite group, using numpy
arrays with one axis per variable in scope.  Two exact shortcuts apply to
blocks of quantifiers whose body only sees the bound variables through a
product term (see :class:`_Evaluator`); ``evaluate_naive`` is a plain
recursive checker kept as an oracle.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .config import get_caps
from .errors import EvaluationExceedsCap, FormulaSyntaxError, InvalidParameter, UnboundVariable
from .group import FiniteGroup
from .words import (
    Comm,
    Ident,
    Mul,
    Node,
    Pow,
    Var,
    Word,
    _WordParser,
    eval_array,
    eval_node,
    node_vars,
    render,
    substitute,
    verbal_subgroup,
)


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Eq:
    left: Node
    right: Node


@dataclass(frozen=True)
class Not:
    body: "FNode"


@dataclass(frozen=True)
class And:
    parts: tuple


@dataclass(frozen=True)
class Or:
    parts: tuple


@dataclass(frozen=True)
class Implies:
    left: "FNode"
    right: "FNode"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "FNode"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "FNode"


FNode = Union[Eq, Not, And, Or, Implies, Forall, Exists]
Quant = (Forall, Exists)


def free_vars(node: FNode, bound: frozenset = frozenset()) -> list[str]:
    out: dict[str, None] = {}

    def walk(n, bound):
        if isinstance(n, Eq):
            for v in node_vars(n.left) + node_vars(n.right):
                if v not in bound:
                    out.setdefault(v)
        elif isinstance(n, Not):
            walk(n.body, bound)
        elif isinstance(n, (And, Or)):
            for p in n.parts:
                walk(p, bound)
        elif isinstance(n, Implies):
            walk(n.left, bound)
            walk(n.right, bound)
        elif isinstance(n, Quant):
            walk(n.body, bound | {n.var})
        else:
            raise TypeError(n)

    walk(node, bound)
    return list(out)


def all_vars(node: FNode) -> set[str]:
    if isinstance(node, Eq):
        return set(node_vars(node.left)) | set(node_vars(node.right))
    if isinstance(node, Not):
        return all_vars(node.body)
    if isinstance(node, (And, Or)):
        return set().union(*(all_vars(p) for p in node.parts))
    if isinstance(node, Implies):
        return all_vars(node.left) | all_vars(node.right)
    if isinstance(node, Quant):
        return all_vars(node.body) | {node.var}
    raise TypeError(node)


def quantifier_depth(node: FNode) -> int:
    if isinstance(node, Eq):
        return 0
    if isinstance(node, Not):
        return quantifier_depth(node.body)
    if isinstance(node, (And, Or)):
        return max(quantifier_depth(p) for p in node.parts)
    if isinstance(node, Implies):
        return max(quantifier_depth(node.left), quantifier_depth(node.right))
    return 1 + quantifier_depth(node.body)


@dataclass(frozen=True)
class Formula:
    ast: FNode
    free_vars: tuple[str, ...]

    def __post_init__(self):
        actual = set(free_vars(self.ast))
        if not actual <= set(self.free_vars):
            raise InvalidParameter(f"free variables {sorted(actual - set(self.free_vars))} not declared")

    @classmethod
    def of(cls, ast: FNode) -> "Formula":
        return cls(ast, tuple(free_vars(ast)))

    def __str__(self) -> str:
        return render_formula(self.ast)

    @property
    def is_sentence(self) -> bool:
        return not self.free_vars

    @property
    def depth(self) -> int:
        return quantifier_depth(self.ast)


Sentence = Formula  # a Formula with no free variables


def sentence(ast: FNode) -> Formula:
    f = Formula.of(ast)
    if f.free_vars:
        raise InvalidParameter(f"not a sentence: free variables {list(f.free_vars)}")
    return f


def render_formula(node: FNode) -> str:
    def wrap(n, allow=(Eq,)):
        s = render_formula(n)
        return s if isinstance(n, allow) else f"({s})"

    if isinstance(node, Eq):
        return f"{render(node.left)} = {render(node.right)}"
    if isinstance(node, Not):
        return "!" + wrap(node.body, (Not,))
    if isinstance(node, And):
        return " & ".join(wrap(p, (Eq, Not)) for p in node.parts)
    if isinstance(node, Or):
        return " | ".join(wrap(p, (Eq, Not, And)) for p in node.parts)
    if isinstance(node, Implies):
        right = render_formula(node.right)
        if not isinstance(node.right, (Eq, Not, And, Or, Implies) + Quant):
            right = f"({right})"
        return f"{wrap(node.left, (Eq, Not, And, Or))} -> {right}"
    if isinstance(node, Quant):
        kw = "forall" if isinstance(node, Forall) else "exists"
        return f"{kw} {node.var}. {render_formula(node.body)}"
    raise TypeError(node)


# -- parser ------------------------------------------------------------------

_FTOKENS = re.compile(
    r"\s*(?:(?P<kw>forall|exists)(?![A-Za-z0-9])|(?P<name>[A-Za-z][0-9]*)|(?P<int>-?\d+)"
    r"|(?P<op>->|!=|[*^(),\[\]=&|!.]))"
)


def _tokenize_formula(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _FTOKENS.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise FormulaSyntaxError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return toks


class _FormulaParser(_WordParser):
    error = FormulaSyntaxError

    def formula(self) -> FNode:
        left = self.disj()
        if self.peek()[1] == "->":
            self.take("->")
            return Implies(left, self.formula())
        return left

    def disj(self) -> FNode:
        parts = [self.conj()]
        while self.peek()[1] == "|":
            self.take("|")
            parts.append(self.conj())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conj(self) -> FNode:
        parts = [self.unary()]
        while self.peek()[1] == "&":
            self.take("&")
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def unary(self) -> FNode:
        kind, value, pos = self.peek()
        if value == "!":
            self.take("!")
            return Not(self.unary())
        if kind == "kw":
            self.take()
            vkind, var, vpos = self.take()
            if vkind != "name" or var == "e":
                raise self.error("expected a variable after quantifier", self.text, vpos)
            self.take(".")
            body = self.formula()
            return Forall(var, body) if value == "forall" else Exists(var, body)
        if value == "(":
            save = self.i
            try:
                return self.atom_formula()
            except FormulaSyntaxError:
                self.i = save
            self.take("(")
            inner = self.formula()
            self.take(")")
            return inner
        return self.atom_formula()

    def atom_formula(self) -> FNode:
        left = self.product()
        kind, value, pos = self.peek()
        if value == "=":
            self.take("=")
            return Eq(left, self.product())
        if value == "!=":
            self.take("!=")
            return Not(Eq(left, self.product()))
        raise self.error("expected '=' in atom", self.text, pos)


def parse_formula(text: str) -> Formula:
    p = _FormulaParser(text, _tokenize_formula(text))
    if not p.toks:
        raise FormulaSyntaxError("empty formula", text, 0)
    ast = p.formula()
    if p.i != len(p.toks):
        raise FormulaSyntaxError(f"unexpected {p.peek()[1]!r}", text, p.peek()[2])
    return Formula.of(ast)


def formula_from_spec(spec) -> Formula:
    if isinstance(spec, Formula):
        return spec
    if isinstance(spec, Mapping):
        spec = spec["formula"]
    return parse_formula(str(spec))


# -- evaluation --------------------------------------------------------------

def _flatten(node: Node) -> list[Node]:
    if isinstance(node, Mul):
        return [x for f in node.factors for x in _flatten(f)]
    return [node]


class _Evaluator:
    """Vectorised model checker for one group.

    Arrays are either 0-d or have one axis per variable in scope.  With
    ``optimize`` on, two patterns are evaluated from value sets instead of by
    adding axes:

    * ``exists V. s1 = u1 | ... | sk = uk`` where each ``u_i`` only uses V and
      ``s_i`` avoids V: true iff some ``s_i`` lies in the value set of ``u_i``;
    * ``forall/exists V'. P`` where P is the pattern above with a single term
      ``s`` whose variables all lie in V': decided on the value set of ``s``.

    Value sets of products split into variable-disjoint blocks are computed
    blockwise and multiplied as sets.
    """

    def __init__(self, G: FiniteGroup, optimize: bool = True):
        self.G = G
        self.optimize = optimize
        self.cap = get_caps().evaluation
        self._images: dict = {}

    # env: name -> array (axis arrays or 0-d scalars); ndim: number of axes
    def run(self, node: FNode, env: dict, ndim: int) -> np.ndarray:
        if isinstance(node, Eq):
            left = eval_array(node.left, self.G, env)
            right = eval_array(node.right, self.G, env)
            return np.asarray(left == right)
        if isinstance(node, Not):
            return ~self.run(node.body, env, ndim)
        if isinstance(node, And):
            out = self.run(node.parts[0], env, ndim)
            for p in node.parts[1:]:
                out = out & self.run(p, env, ndim)
            return out
        if isinstance(node, Or):
            out = self.run(node.parts[0], env, ndim)
            for p in node.parts[1:]:
                out = out | self.run(p, env, ndim)
            return out
        if isinstance(node, Implies):
            return ~self.run(node.left, env, ndim) | self.run(node.right, env, ndim)
        if isinstance(node, Quant):
            if self.optimize:
                fast = self._quantifier_shortcut(node, env, ndim)
                if fast is not None:
                    return fast
            return self._expand(node, env, ndim)
        raise TypeError(node)

    def _expand(self, node, env: dict, ndim: int) -> np.ndarray:
        n = self.G.order
        if n ** (ndim + 1) > self.cap:
            raise EvaluationExceedsCap(f"{n}^{ndim + 1} assignments exceed evaluation cap {self.cap}")
        new_env = {}
        for name, arr in env.items():
            new_env[name] = arr[..., None] if arr.ndim else arr
        shape = [1] * (ndim + 1)
        shape[-1] = n
        new_env[node.var] = np.arange(n, dtype=self.G.np_table.dtype).reshape(shape)
        body = self.run(node.body, new_env, ndim + 1)
        if body.ndim == 0:
            return body
        if body.ndim != ndim + 1:
            body = np.broadcast_to(body, body.shape[:-1] + (n,))
        return body.any(axis=-1) if isinstance(node, Exists) else body.all(axis=-1)

    # -- shortcuts -------------------------------------------------------------

    @staticmethod
    def _block(node):
        kind = type(node)
        names = []
        while isinstance(node, kind):
            names.append(node.var)
            node = node.body
        return kind, names, node

    def _membership_pattern(self, node) -> Optional[list[tuple[Node, np.ndarray]]]:
        """For ``exists V. OR (s_i = u_i)``: the list of (s_i, value-set mask of u_i)."""
        if not isinstance(node, Exists):
            return None
        _, names, body = self._block(node)
        bound = set(names)
        atoms = body.parts if isinstance(body, Or) else (body,)
        out = []
        for a in atoms:
            if not isinstance(a, Eq):
                return None
            lv, rv = set(node_vars(a.left)), set(node_vars(a.right))
            if not (lv & bound) and rv <= bound:
                s, u = a.left, a.right
            elif not (rv & bound) and lv <= bound:
                s, u = a.right, a.left
            else:
                return None
            out.append((s, self.image_mask(u)))
        return out

    def _quantifier_shortcut(self, node, env: dict, ndim: int) -> Optional[np.ndarray]:
        pattern = self._membership_pattern(node)
        if pattern is not None:
            out = None
            for s, mask in pattern:
                hit = mask[eval_array(s, self.G, env)]
                out = hit if out is None else (out | hit)
            return np.asarray(out)
        kind, names, body = self._block(node)
        inner = self._membership_pattern(body)
        if inner is None:
            return None
        terms = {s for s, _ in inner}
        if len(terms) != 1:
            return None
        (s,) = terms
        if not set(node_vars(s)) <= set(names):
            return None
        union = np.zeros(self.G.order, dtype=bool)
        for _, mask in inner:
            union |= mask
        values = self.image_mask(s)
        sat = union[values]
        return np.asarray(sat.any() if kind is Exists else sat.all())

    def image_mask(self, term: Node) -> np.ndarray:
        """Boolean mask of {term(assignment)} over all assignments of its variables."""
        key = term
        if key in self._images:
            return self._images[key]
        G = self.G
        factors = _flatten(term)
        fvars = [set(node_vars(f)) for f in factors]
        # merge factors into blocks whose variable sets are disjoint
        blocks: list[list[int]] = []
        span_end = -1
        for i, vs in enumerate(fvars):
            last = i
            for v in vs:
                last = max(last, max(j for j, ws in enumerate(fvars) if v in ws))
            if blocks and i <= span_end:
                blocks[-1].append(i)
            else:
                blocks.append([i])
            span_end = max(span_end, last)
        T = G.np_table
        acc = np.zeros(G.order, dtype=bool)
        acc[0] = True
        for block in blocks:
            node = factors[block[0]] if len(block) == 1 else Mul(tuple(factors[i] for i in block))
            names = node_vars(node)
            if G.order ** len(names) > self.cap:
                raise EvaluationExceedsCap(f"{G.order}^{len(names)} assignments exceed evaluation cap")
            env = {}
            for axis, name in enumerate(names):
                shape = [1] * len(names)
                shape[axis] = G.order
                env[name] = np.arange(G.order, dtype=T.dtype).reshape(shape)
            vals = np.unique(eval_array(node, G, env))
            cur = np.flatnonzero(acc)
            prod = np.unique(T[np.ix_(cur, vals)])
            acc = np.zeros(G.order, dtype=bool)
            acc[prod] = True
        self._images[key] = acc
        return acc


def _check_assignment(phi: Formula, G: FiniteGroup, assignment: Mapping[str, int]) -> None:
    for v in phi.free_vars:
        if v not in assignment:
            raise UnboundVariable(f"no value for free variable {v!r}")
        if not 0 <= assignment[v] < G.order:
            raise InvalidParameter(f"{assignment[v]} is not an element of the group")


def evaluate(phi: Formula, G: FiniteGroup, assignment: Mapping[str, int] | None = None,
             optimize: bool = True) -> bool:
    """Truth of phi in G under the assignment of its free variables."""
    assignment = dict(assignment or {})
    _check_assignment(phi, G, assignment)
    env = {v: np.asarray(assignment[v], dtype=G.np_table.dtype) for v in phi.free_vars}
    return bool(_Evaluator(G, optimize).run(phi.ast, env, 0))


def truth_table(phi: Formula, G: FiniteGroup, order: Sequence[str] | None = None,
                optimize: bool = True) -> np.ndarray:
    """Boolean array over all assignments of the free variables (axis per variable)."""
    names = list(order) if order is not None else list(phi.free_vars)
    missing = set(phi.free_vars) - set(names)
    if missing:
        raise UnboundVariable(f"free variables {sorted(missing)} not in axis order")
    k = len(names)
    if G.order ** k > get_caps().evaluation:
        raise EvaluationExceedsCap("truth table exceeds evaluation cap")
    env = {}
    for axis, name in enumerate(names):
        shape = [1] * k
        shape[axis] = G.order
        env[name] = np.arange(G.order, dtype=G.np_table.dtype).reshape(shape)
    out = _Evaluator(G, optimize).run(phi.ast, env, k)
    return np.broadcast_to(out, (G.order,) * k)


def evaluate_naive(phi: Formula, G: FiniteGroup, assignment: Mapping[str, int] | None = None) -> bool:
    """Direct recursive model checking; slow, used as an oracle."""
    assignment = dict(assignment or {})
    _check_assignment(phi, G, assignment)

    def ev(n, a):
        if isinstance(n, Eq):
            return eval_node(n.left, G, a) == eval_node(n.right, G, a)
        if isinstance(n, Not):
            return not ev(n.body, a)
        if isinstance(n, And):
            return all(ev(p, a) for p in n.parts)
        if isinstance(n, Or):
            return any(ev(p, a) for p in n.parts)
        if isinstance(n, Implies):
            return (not ev(n.left, a)) or ev(n.right, a)
        if isinstance(n, Forall):
            return all(ev(n.body, {**a, n.var: g}) for g in range(G.order))
        if isinstance(n, Exists):
            return any(ev(n.body, {**a, n.var: g}) for g in range(G.order))
        raise TypeError(n)

    return ev(phi.ast, assignment)


# -- constructions -----------------------------------------------------------

def fresh_names(avoid: Iterable[str], count: int, prefix: str = "h") -> list[str]:
    avoid = set(avoid)
    out = []
    k = 1
    while len(out) < count:
        name = f"{prefix}{k}"
        if name not in avoid:
            out.append(name)
        k += 1
    return out


def _check_r(r: int) -> None:
    if r < 1:
        raise InvalidParameter("r must be at least 1")
    cap = get_caps().width_r
    if r > cap:
        raise InvalidParameter(f"r = {r} exceeds the membership-formula cap {cap}")


def _signs(r: int) -> list[tuple[int, ...]]:
    return list(itertools.product((1, -1), repeat=r))


def _word_product(w: Word, tuples: Sequence[Sequence[str]], signs: Sequence[int]) -> Node:
    factors = []
    for names, eps in zip(tuples, signs):
        inst = substitute(w.ast, {v: Var(n) for v, n in zip(w.variables, names)})
        factors.append(inst if eps == 1 else Pow(inst, -1))
    return factors[0] if len(factors) == 1 else Mul(tuple(factors))


def membership_node(w: Word, r: int, term: Node, avoid: Iterable[str] = ()) -> FNode:
    """``exists h_1..h_r. OR_eps  term = w(h_1)^eps_1 ... w(h_r)^eps_r``."""
    _check_r(r)
    n = len(w.variables)
    avoid = set(avoid) | set(node_vars(term)) | set(w.variables)
    names = fresh_names(avoid, n * r, "h")
    tuples = [names[j * n:(j + 1) * n] for j in range(r)]
    body = Or(tuple(Eq(term, _word_product(w, tuples, eps)) for eps in _signs(r)))
    for name in reversed(names):
        body = Exists(name, body)
    return body


def membership_formula(w: Word, r: int, var: str = "x") -> Formula:
    """phi(x) defining w(G) in every G of w-width at most r."""
    return Formula(membership_node(w, r, Var(var)), (var,))


def length_bound_sentence(w: Word, r: int, s: int, delta: Sequence[int]) -> Formula:
    """``forall g_1..g_s. phi(w(g_1)^d_1 ... w(g_s)^d_s)`` with phi the membership formula."""
    _check_r(r)
    if s <= r:
        raise InvalidParameter("s must exceed r")
    if len(delta) != s or any(d not in (1, -1) for d in delta):
        raise InvalidParameter("delta must be a sign vector of length s")
    n = len(w.variables)
    gnames = fresh_names(set(w.variables), n * s, "g")
    tuples = [gnames[j * n:(j + 1) * n] for j in range(s)]
    term = _word_product(w, tuples, delta)
    body = membership_node(w, r, term, avoid=gnames)
    for name in reversed(gnames):
        body = Forall(name, body)
    return sentence(body)


def relativize(phi: Formula, w: Word, r: int) -> Formula:
    """phi' with G |= phi'(g) iff G/w(G) |= phi(g w(G)), for G of w-width <= r.

    Each atom ``t1 = t2`` becomes the membership formula applied to
    ``t1 * t2^-1``; connectives and quantifiers are kept.
    """
    _check_r(r)
    avoid = all_vars(phi.ast) | set(w.variables)

    def go(n):
        if isinstance(n, Eq):
            term = n.left if isinstance(n.right, Ident) else Mul((n.left, Pow(n.right, -1)))
            return membership_node(w, r, term, avoid)
        if isinstance(n, Not):
            return Not(go(n.body))
        if isinstance(n, And):
            return And(tuple(go(p) for p in n.parts))
        if isinstance(n, Or):
            return Or(tuple(go(p) for p in n.parts))
        if isinstance(n, Implies):
            return Implies(go(n.left), go(n.right))
        if isinstance(n, Forall):
            return Forall(n.var, go(n.body))
        if isinstance(n, Exists):
            return Exists(n.var, go(n.body))
        raise TypeError(n)

    return Formula(go(phi.ast), phi.free_vars)


def relativize_for(phi: Formula, w: Word, G: FiniteGroup) -> tuple[Formula, int]:
    """Relativise with r taken from the computed width of w in G (at least 1)."""
    r = max(1, verbal_subgroup(w, G).width)
    return relativize(phi, w, r), r


# -- bounded elementary equivalence -------------------------------------------

def _partial_iso(G: FiniteGroup, H: FiniteGroup, pairs: Sequence[tuple[int, int]]) -> Optional[frozenset]:
    """Extend a_i -> b_i to an isomorphism <a> -> <b>; None if impossible."""
    fwd = {0: 0}
    back = {0: 0}
    frontier = [(0, 0)]
    tg, th = G.table, H.table
    while frontier:
        nxt = []
        for x, y in frontier:
            for a, b in pairs:
                x2, y2 = tg[x][a], th[y][b]
                fx, by = fwd.get(x2), back.get(y2)
                if fx is None and by is None:
                    fwd[x2] = y2
                    back[y2] = x2
                    nxt.append((x2, y2))
                elif fx != y2 or by != x2:
                    return None
        frontier = nxt
    return frozenset(fwd.items())


def bounded_elementary_equivalence(G: FiniteGroup, H: FiniteGroup, depth: int) -> bool:
    """Whether the duplicator wins the ``depth``-round back-and-forth game on
    (G, H), positions being isomorphisms between generated subgroups.

    A win implies G and H agree on all sentences of quantifier depth at most
    ``depth``.  Moves inside the current subgroups never help the spoiler, so
    each useful move enlarges a subgroup and the game stabilises after about
    log2 of the larger order rounds; at that depth the answer is isomorphism.
    """
    if depth < 1:
        raise InvalidParameter("depth must be positive")
    cap = get_caps().evaluation
    if (G.order * H.order) ** min(depth, 2) > cap:
        raise EvaluationExceedsCap("back-and-forth search exceeds evaluation cap")
    og, oh = G.element_orders, H.element_orders
    memo: dict = {}

    def duplicator_wins(picks: tuple, state: frozenset, rounds: int) -> bool:
        if rounds == 0:
            return True
        key = (state, rounds)
        if key in memo:
            return memo[key]
        dom = {x for x, _ in state}
        rng = {y for _, y in state}
        result = True
        # spoiler plays in G
        for g in range(G.order):
            if g in dom:
                continue
            if not any(
                (new := _partial_iso(G, H, picks + ((g, h),))) is not None
                and duplicator_wins(picks + ((g, h),), new, rounds - 1)
                for h in range(H.order) if h not in rng and oh[h] == og[g]
            ):
                result = False
                break
        if result:
            for h in range(H.order):
                if h in rng:
                    continue
                if not any(
                    (new := _partial_iso(G, H, picks + ((g, h),))) is not None
                    and duplicator_wins(picks + ((g, h),), new, rounds - 1)
                    for g in range(G.order) if g not in dom and og[g] == oh[h]
                ):
                    result = False
                    break
        memo[key] = result
        return result

    return duplicator_wins((), frozenset({(0, 0)}), depth)


# -- formula families ---------------------------------------------------------

def generate_formulas(count: int, free: Sequence[str] = ("y1", "y2"), max_depth: int = 2,
                      seed: int = 0) -> list[Formula]:
    """Deterministic pseudo-random formulas with quantifier depth <= max_depth
    and free variables among ``free``; duplicates removed."""
    rng = random.Random(seed)
    bound_names = ["u", "v", "z"][:max_depth]

    def term(vs: list[str]) -> Node:
        kind = rng.randrange(7)
        a = Var(rng.choice(vs))
        b = Var(rng.choice(vs))
        if kind == 0:
            return a
        if kind == 1:
            return Pow(a, rng.choice([2, 3, -1, 4, 6]))
        if kind == 2:
            return Mul((a, b))
        if kind == 3:
            return Comm(a, b)
        if kind == 4:
            return Mul((a, b, Pow(a, -1)))
        if kind == 5:
            return Ident()
        return Mul((Pow(a, 2), b))

    def atom(vs):
        left = term(vs)
        right = term(vs) if rng.random() < 0.6 else Ident()
        return Eq(left, right)

    def form(vs: list[str], depth: int, size: int) -> FNode:
        choice = rng.random()
        if size <= 0 or choice < 0.25:
            return atom(vs)
        if choice < 0.4:
            return Not(form(vs, depth, size - 1))
        if choice < 0.55:
            return And((form(vs, depth, size - 1), form(vs, depth, size - 1)))
        if choice < 0.65:
            return Or((form(vs, depth, size - 1), form(vs, depth, size - 1)))
        if choice < 0.72:
            return Implies(form(vs, depth, size - 1), form(vs, depth, size - 1))
        if depth >= max_depth:
            return atom(vs)
        v = bound_names[depth]
        body = form(vs + [v], depth + 1, size - 1)
        return Forall(v, body) if rng.random() < 0.5 else Exists(v, body)

    out: list[Formula] = []
    seen = set()
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 100 * count:
            break
        nfree = rng.randrange(len(free) + 1)
        vs = list(free[:max(1, nfree)])
        ast = form(vs, 0, 4)
        if quantifier_depth(ast) > max_depth:
            continue
        key = render_formula(ast)
        if key in seen:
            continue
        seen.add(key)
        f = Formula.of(ast)
        if len(f.free_vars) <= len(free):
            out.append(f)
    return out
