"""Command-line interface.

Every command prints one report.  JSON reports carry ``"schema": "verbalis/1"``
and are written with sorted keys, so identical invocations give identical
bytes.  Exit status: 0 on success, 1 on a domain error (the error class name is
reported), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from . import plots
from .config import CAP_NAMES, caps, get_caps
from .corpus import corpus, identify
from .errors import InvalidParameter, NotSubgroup, VerbalisError
from .folog import (
    bounded_elementary_equivalence,
    evaluate,
    length_bound_sentence,
    membership_formula,
    parse_formula,
    relativize,
    truth_table,
)
from .group import FiniteGroup, GroupHom, SubgroupSet, direct_product, elements_of, mask_of
from .iso import find_isomorphism
from .lattice import (
    composition_series,
    core,
    count_subgroups_of_index,
    min_generators,
    normal_subgroup_masks,
    subgroup_masks,
)
from .named import load_group
from .srank import (
    check_frattini_cover,
    count_quotients_brute,
    count_quotients_via_series,
    frattini_subgroup,
    s_rank,
)
from .towers import (
    canonical_map,
    compare_fingerprints,
    decomposition_check,
    factor_from_spec,
    fingerprint,
    prime_support_check,
    product_tower,
    quotient_class_counts,
    tower_from_family,
    tower_from_json,
    tower_to_json,
)
from .words import (
    birkhoff_verbal_subgroup,
    combine_words,
    enumerate_laws,
    eval_word,
    parse_word,
    variety_verbal_subgroup,
    verbal_subgroup,
)

SCHEMA = "verbalis/1"


class UsageError(Exception):
    """Bad command-line input detected after argparse (exit status 2)."""


# -- input helpers ---------------------------------------------------------------

def _json_arg(text: str) -> Any:
    """Inline JSON or a path to a JSON file."""
    stripped = text.strip()
    if stripped[:1] in "[{\"" or stripped[:1].isdigit():
        try:
            return json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise UsageError(f"invalid JSON: {exc}") from None
    path = Path(text)
    if not path.exists():
        raise UsageError(f"no such file: {text}")
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _group(text: str) -> FiniteGroup:
    try:
        return load_group(text)
    except FileNotFoundError:
        raise UsageError(f"no such file: {text}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {text}: {exc}") from None


def _tower(text: str):
    data = _json_arg(text)
    if isinstance(data, dict) and "tower" in data:
        data = data["tower"]
    return tower_from_json(data)


def _assignment(text: str | None) -> dict[str, int]:
    if not text:
        return {}
    out = {}
    for part in text.split(","):
        if "=" not in part:
            raise UsageError(f"assignment {part!r} is not of the form name=element")
        name, value = part.split("=", 1)
        try:
            out[name.strip()] = int(value)
        except ValueError:
            raise UsageError(f"element {value!r} is not an integer") from None
    return out


def _signs(text: str) -> list[int]:
    out = []
    for tok in text.replace(" ", "").split(","):
        if tok in ("+", "+1", "1"):
            out.append(1)
        elif tok in ("-", "-1"):
            out.append(-1)
        else:
            raise UsageError(f"sign {tok!r} must be + or -")
    return out


def _subgroup(G: FiniteGroup, text: str) -> SubgroupSet:
    elems = _json_arg(text)
    if not isinstance(elems, list) or not all(isinstance(x, int) for x in elems):
        raise UsageError("subgroup must be a JSON list of element indices")
    if any(not 0 <= x < G.order for x in elems):
        raise InvalidParameter("element index out of range")
    mask = mask_of(elems)
    if not G.is_subgroup_mask(mask):
        raise NotSubgroup("the given elements do not form a subgroup")
    return SubgroupSet.from_mask(G, mask)


def _sub_json(G: FiniteGroup, mask: int, normal: bool | None = None) -> dict:
    out = {"order": bin(mask).count("1"), "elements": list(elements_of(mask))}
    if normal is not None:
        out["normal"] = normal
    return out


# -- group ---------------------------------------------------------------------

def cmd_group_info(a) -> dict:
    G = _group(a.g)
    hist: dict[str, int] = {}
    for o in G.element_orders:
        hist[str(o)] = hist.get(str(o), 0) + 1
    return {
        "label": G.label,
        "name": identify(G),
        "order": G.order,
        "abelian": G.is_abelian,
        "exponent": G.exponent,
        "class_sizes": sorted(len(c) for c in G.conjugacy_classes),
        "element_orders": hist,
    }


def cmd_group_subgroups(a) -> dict:
    G = _group(a.g)
    masks = subgroup_masks(G)
    normal = set(normal_subgroup_masks(G))
    out = {
        "count": len(masks),
        "subgroups": [_sub_json(G, m, m in normal) for m in masks],
    }
    if a.figure:
        out["figure"] = str(plots.lattice_figure(G, masks, normal, a.figure))
    return out


def cmd_group_normal(a) -> dict:
    G = _group(a.g)
    masks = normal_subgroup_masks(G)
    return {"count": len(masks), "normal_subgroups": [_sub_json(G, m) for m in masks]}


def cmd_group_series(a) -> dict:
    G = _group(a.g)
    cs = composition_series(G, a.choice)
    return {
        "length": cs.length,
        "orders": [H.order for H in cs.chain],
        "factors": [identify(Q) for Q in cs.factors],
    }


def cmd_group_iso(a) -> dict:
    G, H = _group(a.a), _group(a.b)
    f = find_isomorphism(G, H)
    out: dict[str, Any] = {"isomorphic": f is not None}
    if a.show_map and f is not None:
        out["map"] = list(f.map)
    return out


def cmd_group_core(a) -> dict:
    G = _group(a.g)
    H = _subgroup(G, a.h)
    C = core(G, H)
    return {"subgroup_order": H.order, "core": _sub_json(G, C.mask)}


def cmd_group_mingen(a) -> dict:
    return {"min_generators": min_generators(_group(a.g))}


def cmd_group_count_index(a) -> dict:
    G = _group(a.g)
    return {"index": a.n, "count": count_subgroups_of_index(G, a.n)}


# -- word ------------------------------------------------------------------------

def cmd_word_eval(a) -> dict:
    G = _group(a.g)
    w = parse_word(a.w)
    value = eval_word(w, G, _assignment(a.assign))
    return {"word": str(w), "value": value, "name": G.name(value)}


def _verbal(a):
    G = _group(a.g)
    w = parse_word(a.w)
    return G, w, verbal_subgroup(w, G)


def cmd_word_verbal(a) -> dict:
    G, w, res = _verbal(a)
    out = {
        "word": str(w),
        "subgroup_order": res.order,
        "elements": list(res.subgroup.elements),
        "value_count": len(res.value_set),
        "width": res.width,
        "layers": list(res.layers),
    }
    if a.figure:
        out["figure"] = str(plots.layers_figure(res.layers, f"{w} in {G.label or 'G'}", a.figure))
    return out


def cmd_word_width(a) -> dict:
    G, w, res = _verbal(a)
    out = {"width": res.width, "subgroup_order": res.order}
    if a.figure:
        out["figure"] = str(plots.layers_figure(res.layers, f"{w} in {G.label or 'G'}", a.figure))
    return out


def cmd_word_laws(a) -> dict:
    A = _group(a.a)
    laws = enumerate_laws(A, a.vars, a.length)
    return {"count": len(laws), "laws": [str(w) for w in laws]}


def cmd_word_combine(a) -> dict:
    words = [parse_word(t) for t in a.w]
    c = combine_words(words)
    out: dict[str, Any] = {"combined": str(c), "variables": list(c.variables)}
    if a.g:
        G = _group(a.g)
        combined = verbal_subgroup(c, G).subgroup
        join = G.generate([x for w in words for x in verbal_subgroup(w, G).subgroup.elements])
        out.update(subgroup_order=combined.order, join_order=bin(join).count("1"),
                   equal=combined.mask == join)
    return out


def cmd_word_variety_verbal(a) -> dict:
    G, A = _group(a.g), _group(a.a)
    V = variety_verbal_subgroup(G, A, a.vars, a.length)
    out: dict[str, Any] = {"order": V.order, "elements": list(V.elements)}
    if not a.no_oracle:
        B = birkhoff_verbal_subgroup(G, A)
        out.update(birkhoff_elements=list(B.elements), agree=B.mask == V.mask)
    return out


# -- srank / quotients / frattini --------------------------------------------------

def cmd_srank(a) -> dict:
    report = s_rank(_group(a.g), _group(a.s))
    return {"s_rank": report.as_json()}


def cmd_count_quotients(a) -> dict:
    G, F = _group(a.g), _group(a.f)
    out: dict[str, Any] = {}
    if a.method in ("series", "both"):
        out["series"] = count_quotients_via_series(G, F)
    if a.method in ("brute", "both"):
        out["brute"] = count_quotients_brute(G, F)
    if a.method == "both":
        out["agree"] = out["series"] == out["brute"]
    return out


def cmd_frattini(a) -> dict:
    G = _group(a.g)
    return {"frattini": _sub_json(G, frattini_subgroup(G).mask)}


def cmd_frattini_cover(a) -> dict:
    src, tgt = _group(a.source), _group(a.target)
    if a.map == "canonical":
        phi = canonical_map(src, tgt)
    else:
        data = _json_arg(a.map)
        if not isinstance(data, list) or len(data) != src.order:
            raise UsageError("--map must list one image per source element")
        phi = GroupHom(src, tgt, tuple(int(x) for x in data))
    chk = check_frattini_cover(phi)
    return {
        "frattini_cover": {
            "is_cover": chk.is_cover,
            "surjective": chk.is_surjective,
            "kernel_order": chk.kernel.order,
            "frattini_order": chk.frattini.order,
        },
        "min_generators": [min_generators(src), min_generators(tgt)],
    }


# -- fo ---------------------------------------------------------------------------

def cmd_fo_eval(a) -> dict:
    G = _group(a.g)
    phi = parse_formula(a.phi)
    assign = _assignment(a.assign)
    free = [v for v in phi.free_vars if v not in assign]
    if not free:
        return {"formula": str(phi), "value": evaluate(phi, G, assign)}
    # unassigned free variables: list the satisfying assignments
    fixed = {v: assign[v] for v in phi.free_vars if v in assign}
    table = truth_table(phi, G, list(phi.free_vars))
    rows = []
    for idx in zip(*table.nonzero()):
        row = dict(zip(phi.free_vars, (int(i) for i in idx)))
        if all(row[k] == v for k, v in fixed.items()):
            rows.append([row[v] for v in free])
    return {"formula": str(phi), "free": free, "satisfying": rows, "count": len(rows)}


def _width_for(a, w) -> int:
    if a.r is not None:
        return a.r
    if not a.g:
        raise UsageError("give either --r or --g")
    return max(1, verbal_subgroup(w, _group(a.g)).width)


def cmd_fo_relativize(a) -> dict:
    w = parse_word(a.w)
    r = _width_for(a, w)
    phi = parse_formula(a.phi)
    return {"r": r, "formula": str(relativize(phi, w, r))}


def cmd_fo_membership(a) -> dict:
    w = parse_word(a.w)
    r = _width_for(a, w)
    phi = membership_formula(w, r)
    out: dict[str, Any] = {"r": r, "formula": str(phi)}
    if a.g:
        G = _group(a.g)
        sat = [int(x) for x in truth_table(phi, G).nonzero()[0]]
        out.update(satisfying=sat, defines_verbal=sat == list(verbal_subgroup(w, G).subgroup.elements))
    return out


def cmd_fo_length_sentence(a) -> dict:
    w = parse_word(a.w)
    delta = _signs(a.delta) if a.delta else [1] * a.s
    sent = length_bound_sentence(w, a.r, a.s, delta)
    out: dict[str, Any] = {"sentence": str(sent)}
    if a.g:
        out["value"] = evaluate(sent, _group(a.g))
    return out


def cmd_fo_equiv(a) -> dict:
    return {"equivalent": bounded_elementary_equivalence(_group(a.a), _group(a.b), a.depth), "depth": a.depth}


# -- tower ------------------------------------------------------------------------

def _tower_report(T) -> dict:
    return {
        "depth": T.depth,
        "orders": [G.order for G in T.levels],
        "levels": [identify(G) for G in T.levels] if max(G.order for G in T.levels) <= 48
        else [G.label for G in T.levels],
        "tower": tower_to_json(T),
    }


def cmd_tower_build(a) -> dict:
    data = _json_arg(a.spec)
    if isinstance(data, dict) and "family" in data:
        return _tower_report(tower_from_family(data, a.depth))
    T = _tower(a.spec)
    return _tower_report(T.truncate(a.depth) if a.depth else T)


def cmd_tower_fingerprint(a) -> dict:
    T = _tower(a.t)
    fp = fingerprint(T, a.bound)
    out = {
        "bound": a.bound,
        "count": len(fp),
        "entries": [{"order": G.order, "name": identify(G)} for G in fp.entries],
    }
    if a.figure:
        counts = quotient_class_counts(T, a.bound)
        out["figure"] = str(plots.class_counts_figure(counts, T.label or "tower", a.figure))
    return out


def cmd_tower_compare(a) -> dict:
    A, B = _tower(a.a), _tower(a.b)
    return {"bound": a.bound, "equal": compare_fingerprints(A, B, a.bound)}


def cmd_tower_product(a) -> dict:
    factors = _json_arg(a.factors)
    if not isinstance(factors, list):
        raise UsageError("--factors must be a JSON list")
    return _tower_report(product_tower([factor_from_spec(f, a.depth) for f in factors], a.depth))


def cmd_tower_support_check(a) -> dict:
    factors = _json_arg(a.factors)
    if not isinstance(factors, list):
        raise UsageError("--factors must be a JSON list")
    return prime_support_check(factors, a.prime_bound).as_json()


def cmd_tower_decomp_check(a) -> dict:
    K0, Kn = _group(a.k0), _group(a.kn)
    G = direct_product(K0, Kn)
    res = decomposition_check(G, a.n)
    return {"holds": res.holds, "subgroups_checked": res.subgroups_checked, "n": a.n}


# -- report -------------------------------------------------------------------------

REPORT_FIELDS = [
    "label", "order", "abelian", "subgroups", "normal_subgroups", "min_generators",
    "frattini_order", "commutator_order", "commutator_width", "series_length",
]


def corpus_rows(max_order: int) -> list[dict]:
    comm = parse_word("[x1,x2]")
    rows = []
    for G in corpus():
        if G.order > max_order:
            continue
        res = verbal_subgroup(comm, G)
        rows.append({
            "label": G.label,
            "order": G.order,
            "abelian": G.is_abelian,
            "subgroups": len(subgroup_masks(G)),
            "normal_subgroups": len(normal_subgroup_masks(G)),
            "min_generators": min_generators(G),
            "frattini_order": frattini_subgroup(G).order,
            "commutator_order": res.order,
            "commutator_width": res.width,
            "series_length": composition_series(G).length,
        })
    return rows


def cmd_report(a) -> dict:
    out_dir = Path(a.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = corpus_rows(a.max_order)
    csv_path = out_dir / "corpus.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=REPORT_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    fig = plots.corpus_figure(rows, out_dir / "corpus.png")
    return {"rows": len(rows), "csv": str(csv_path), "figure": str(fig)}


# -- parser -----------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["json", "text"], default=argparse.SUPPRESS,
                   help="output format (default json)")
    for name in CAP_NAMES:
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=argparse.SUPPRESS,
                       metavar="N", help=f"cap override (default {getattr(get_caps(), name)})")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="verbalis",
        description="Finite group computations: verbal subgroups, S-ranks, quotient counts, "
                    "first-order checks and finite towers.",
        parents=[common],
    )
    top = parser.add_subparsers(dest="command", required=True, metavar="command")

    def leaf(sub, name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(func=func)
        return p

    # group
    grp = top.add_parser("group", help="basic group structure").add_subparsers(
        dest="action", required=True, metavar="action")
    p = leaf(grp, "info", cmd_group_info, "order, exponent, class sizes")
    p.add_argument("--g", required=True, help="group: name, inline JSON or JSON file")
    p = leaf(grp, "subgroups", cmd_group_subgroups, "all subgroups")
    p.add_argument("--g", required=True)
    p.add_argument("--figure", help="write the subgroup lattice to this image file")
    p = leaf(grp, "normal", cmd_group_normal, "normal subgroups")
    p.add_argument("--g", required=True)
    p = leaf(grp, "series", cmd_group_series, "a composition series")
    p.add_argument("--g", required=True)
    p.add_argument("--choice", choices=["first", "last"], default="first")
    p = leaf(grp, "iso", cmd_group_iso, "isomorphism test")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--show-map", action="store_true")
    p = leaf(grp, "core", cmd_group_core, "normal core of a subgroup")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True, help="JSON list of the subgroup's elements")
    p = leaf(grp, "mingen", cmd_group_mingen, "minimal number of generators")
    p.add_argument("--g", required=True)
    p = leaf(grp, "count-index", cmd_group_count_index, "number of subgroups of an index")
    p.add_argument("--g", required=True)
    p.add_argument("--n", type=int, required=True)

    # word
    wrd = top.add_parser("word", help="word maps and verbal subgroups").add_subparsers(
        dest="action", required=True, metavar="action")
    p = leaf(wrd, "eval", cmd_word_eval, "evaluate a word")
    p.add_argument("--g", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--assign", help="e.g. x1=2,x2=5")
    for name, func, text in [("verbal", cmd_word_verbal, "verbal subgroup"),
                             ("width", cmd_word_width, "width of a word")]:
        p = leaf(wrd, name, func, text)
        p.add_argument("--g", required=True)
        p.add_argument("--w", required=True)
        p.add_argument("--figure", help="write the layer sizes to this image file")
    p = leaf(wrd, "laws", cmd_word_laws, "laws of a group up to bounds")
    p.add_argument("--a", required=True)
    p.add_argument("--vars", type=int, default=2)
    p.add_argument("--length", type=int, default=4)
    p = leaf(wrd, "combine", cmd_word_combine, "product of words in disjoint variables")
    p.add_argument("--w", required=True, action="append")
    p.add_argument("--g", help="also compare verbal subgroups in this group")
    p = leaf(wrd, "variety-verbal", cmd_word_variety_verbal, "verbal subgroup for the laws of A")
    p.add_argument("--g", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--vars", type=int, default=2)
    p.add_argument("--length", type=int, default=4)
    p.add_argument("--no-oracle", action="store_true", help="skip the exact cross-check")

    p = leaf(top, "srank", cmd_srank, "S-rank for a simple group S")
    p.add_argument("--g", required=True)
    p.add_argument("--s", required=True)
    p = leaf(top, "count-quotients", cmd_count_quotients, "count normal N with G/N isomorphic to F")
    p.add_argument("--g", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--method", choices=["series", "brute", "both"], default="series")
    p = leaf(top, "frattini", cmd_frattini, "Frattini subgroup")
    p.add_argument("--g", required=True)
    p = leaf(top, "frattini-cover", cmd_frattini_cover, "check a Frattini cover")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--map", required=True, help="JSON list of images, or 'canonical'")

    # fo
    fo = top.add_parser("fo", help="first-order formulas").add_subparsers(
        dest="action", required=True, metavar="action")
    p = leaf(fo, "eval", cmd_fo_eval, "evaluate a formula")
    p.add_argument("--g", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--assign")
    p = leaf(fo, "relativize", cmd_fo_relativize, "relativise a formula to the quotient by w(G)")
    p.add_argument("--phi", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--g", help="take r from the width of w in this group")
    p = leaf(fo, "membership", cmd_fo_membership, "formula defining w(G)")
    p.add_argument("--w", required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--g")
    p = leaf(fo, "length-sentence", cmd_fo_length_sentence, "sentence bounding the width")
    p.add_argument("--w", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--delta", help="comma-separated signs, e.g. +,-,+ (default all +)")
    p.add_argument("--g")
    p = leaf(fo, "equiv", cmd_fo_equiv, "bounded elementary equivalence")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--depth", type=int, required=True)

    # tower
    tw = top.add_parser("tower", help="finite towers of quotients").add_subparsers(
        dest="action", required=True, metavar="action")
    p = leaf(tw, "build", cmd_tower_build, "build a tower from a family or file")
    p.add_argument("--spec", required=True)
    p.add_argument("--depth", type=int)
    p = leaf(tw, "fingerprint", cmd_tower_fingerprint, "quotient classes up to an order")
    p.add_argument("--t", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--figure", help="write class counts per depth to this image file")
    p = leaf(tw, "compare", cmd_tower_compare, "compare fingerprints")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--bound", type=int, required=True)
    p = leaf(tw, "product", cmd_tower_product, "levelwise product")
    p.add_argument("--factors", required=True, help="JSON list of family specs or groups")
    p.add_argument("--depth", type=int, required=True)
    p = leaf(tw, "support-check", cmd_tower_support_check, "primes dividing factor orders")
    p.add_argument("--factors", required=True)
    p.add_argument("--prime-bound", type=int, default=7)
    p = leaf(tw, "decomp-check", cmd_tower_decomp_check, "index-n subgroups of K0 x Kn")
    p.add_argument("--k0", required=True)
    p.add_argument("--kn", required=True)
    p.add_argument("--n", type=int, required=True)

    p = leaf(top, "report", cmd_report, "corpus table (CSV) and figure")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--max-order", type=int, default=24)
    return parser


# -- output ------------------------------------------------------------------------

def to_json(report: dict) -> str:
    return json.dumps({"schema": SCHEMA, **report}, sort_keys=True, indent=2) + "\n"


def to_text(report: dict) -> str:
    lines = []
    for key in sorted(report):
        value = report[key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "json")
    overrides = {name: getattr(args, name) for name in CAP_NAMES if hasattr(args, name)}
    try:
        with caps(**overrides):
            report = args.func(args)
    except UsageError as exc:
        err.write(f"verbalis: usage error: {exc}\n")
        return 2
    except VerbalisError as exc:
        name = type(exc).__name__
        err.write(f"verbalis: {name}: {exc}\n")
        if fmt == "json":
            out.write(to_json({"error": name, "message": str(exc)}))
        return 1
    out.write(to_json(report) if fmt == "json" else to_text(report))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
