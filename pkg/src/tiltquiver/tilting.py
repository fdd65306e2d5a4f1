"""Tilting modules of type A/D quivers and the quiver they span.

A basic tilting module is recorded as the strictly increasing tuple of ids of
its indecomposable summands; over a hereditary Dynkin algebra a set of ids of
size #vertices with pairwise two-sided Ext vanishing is exactly a tilting
module.  Arrows of the tilting quiver come from the exchange of a summand, and
the whole graph is checked to be the Hasse diagram of the order
t <= u  iff  Ext^1(u, t) = 0 summandwise.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from . import models, rep
from .quiver import Quiver, classify_tree, quiver_to_json

RANK_GUARD = {"A": 12, "D": 9}


@dataclass
class ExtTable:
    """Pairwise hom/ext dimensions over the indecomposables of one quiver."""

    quiver: Quiver
    indecs: tuple
    hom: tuple
    ext: tuple
    compat: tuple = field(default=())  # bitmask per id: two-sided ext vanishing
    ext_zero: tuple = field(default=())  # bitmask per id i: {j : ext[i][j] == 0}
    id_by_dim: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.indecs)

    def dim_tuple(self, i):
        return self.indecs[i].rep.dim_tuple()

    def label(self, i):
        ind = self.indecs[i]
        if ind.model is not None:
            return models.render(ind.model)
        return "(" + ",".join(str(d) for d in self.dim_tuple(i)) + ")"


def _worker_count():
    try:
        return max(1, int(os.environ.get("TQ_THREADS", "1")))
    except ValueError:
        return 1


@lru_cache(maxsize=None)
def ext_table(q):
    """Full hom/ext tables; rows may be computed by a small thread pool."""
    indecs = rep.indecomposables(q)
    k = len(indecs)
    reps = [ind.rep for ind in indecs]

    def hom_row(i):
        return tuple(rep.hom_dim(reps[i], reps[j]) for j in range(k))

    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hom = tuple(pool.map(hom_row, range(k)))
    else:
        hom = tuple(hom_row(i) for i in range(k))
    ext_rows = []
    for i in range(k):
        row = []
        for j in range(k):
            val = hom[i][j] - rep.euler_form(q, indecs[i].dim, indecs[j].dim)
            if val < 0:
                raise RuntimeError("negative Ext dimension: invariant violation")
            row.append(val)
        ext_rows.append(tuple(row))
    ext = tuple(ext_rows)
    for i in range(k):
        if hom[i][i] != 1 or ext[i][i] != 0:
            raise RuntimeError("indecomposable is not exceptional: invariant violation")
    compat = tuple(
        sum(
            1 << j
            for j in range(k)
            if j != i and ext[i][j] == 0 and ext[j][i] == 0
        )
        for i in range(k)
    )
    ext_zero = tuple(
        sum(1 << j for j in range(k) if ext[i][j] == 0) for i in range(k)
    )
    id_by_dim = {ind.rep.dim_tuple(): ind.id for ind in indecs}
    return ExtTable(q, indecs, hom, ext, compat, ext_zero, id_by_dim)


@dataclass(frozen=True, order=True)
class TiltingModule:
    """Strictly increasing tuple of summand ids, one per vertex."""

    summands: tuple

    def mask(self):
        m = 0
        for s in self.summands:
            m |= 1 << s
        return m


def module_dim(table, t):
    """Dimension vector of the whole module (sum over summands)."""
    verts = table.quiver.vertices
    total = [0] * len(verts)
    for s in t.summands:
        for i, d in enumerate(table.dim_tuple(s)):
            total[i] += d
    return dict(zip(verts, total))


def is_tilting(table, ids):
    ids = tuple(sorted(ids))
    if len(ids) != len(table.quiver.vertices) or len(set(ids)) != len(ids):
        return False
    for a in ids:
        for b in ids:
            if a < b and not (table.compat[a] >> b) & 1:
                return False
    return True


def _guard(q):
    kind, _ = classify_tree(q)
    if len(q.vertices) > RANK_GUARD[kind]:
        raise ValueError(
            f"rank guard exceeded: type {kind} is capped at {RANK_GUARD[kind]} vertices"
        )
    return kind


@lru_cache(maxsize=None)
def enumerate_tilting(q):
    """All basic tilting modules, lexicographically sorted summand tuples."""
    _guard(q)
    table = ext_table(q)
    n_ind = len(table)
    need = len(q.vertices)
    compat = table.compat
    out = []

    def walk(chosen, cand):
        if len(chosen) == need:
            out.append(TiltingModule(tuple(chosen)))
            return
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c &= c - 1
            walk(chosen + [v], cand & compat[v] & ~((low << 1) - 1))
            if c.bit_count() + len(chosen) < need:
                return

    walk([], (1 << n_ind) - 1)
    return tuple(sorted(out))


def leq(table, t, u):
    """t <= u iff Ext^1 from every summand of u to every summand of t vanishes."""
    tm = t.mask()
    return all(tm & ~table.ext_zero[i] == 0 for i in u.summands)


def completions(table, part):
    """All ids completing the almost complete module `part` to a tilting module."""
    mask = (1 << len(table)) - 1
    for s in part:
        mask &= table.compat[s]
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask &= mask - 1
    return out


@dataclass
class TiltingQuiver:
    """Tilting modules as nodes, exchange arrows pointing larger -> smaller."""

    quiver: Quiver
    nodes: tuple
    arrows: tuple
    out_deg: tuple
    in_deg: tuple

    @property
    def delta(self):
        return tuple(s + e for s, e in zip(self.out_deg, self.in_deg))


@lru_cache(maxsize=None)
def tilting_quiver(q):
    """Build the exchange quiver on all tilting modules of q."""
    table = ext_table(q)
    nodes = enumerate_tilting(q)
    index = {t: i for i, t in enumerate(nodes)}
    arrows = set()
    for ti, t in enumerate(nodes):
        for x in t.summands:
            part = tuple(s for s in t.summands if s != x)
            comp = completions(table, part)
            if len(comp) > 2:
                raise RuntimeError(
                    "more than two completions of an almost complete module"
                )
            others = [y for y in comp if y != x]
            if not others:
                continue
            y = others[0]
            u = index[TiltingModule(tuple(sorted(part + (y,))))]
            fwd = table.ext[y][x] != 0
            bwd = table.ext[x][y] != 0
            if fwd == bwd:
                raise RuntimeError("exchange pair is not oriented by a unique Ext")
            if fwd:
                arrows.add((ti, u))
            else:
                arrows.add((u, ti))
    arrows = tuple(sorted(arrows))
    out_deg = [0] * len(nodes)
    in_deg = [0] * len(nodes)
    for a, b in arrows:
        out_deg[a] += 1
        in_deg[b] += 1
    return TiltingQuiver(q, nodes, arrows, tuple(out_deg), tuple(in_deg))


@dataclass
class HasseReport:
    ok: bool
    missing: tuple = ()
    extra: tuple = ()


def hasse_check(table, tq):
    """Arrows must equal the covers of <=, pointing from larger to smaller."""
    nodes = tq.nodes
    k = len(nodes)
    below = [0] * k  # below[u]: strictly smaller nodes
    for u in range(k):
        for t in range(k):
            if t != u and leq(table, nodes[t], nodes[u]):
                if leq(table, nodes[u], nodes[t]):
                    return HasseReport(False, extra=((u, t),))
                below[u] |= 1 << t
    above = [0] * k
    for u in range(k):
        rest = below[u]
        while rest:
            low = rest & -rest
            above[low.bit_length() - 1] |= 1 << u
            rest &= rest - 1
    covers = set()
    for u in range(k):
        rest = below[u]
        while rest:
            low = rest & -rest
            t = low.bit_length() - 1
            rest &= rest - 1
            if below[u] & above[t] == 0:
                covers.add((u, t))
    arrows = set(tq.arrows)
    missing = tuple(sorted(covers - arrows))
    extra = tuple(sorted(arrows - covers))
    return HasseReport(not missing and not extra, missing, extra)


@dataclass
class DegreeReport:
    """Per-node (out, in, total) degrees plus the dim-vector cross-check."""

    stats: tuple
    histogram: dict
    formula_ok: bool
    mismatches: tuple


def degree_stats(tq):
    table = ext_table(tq.quiver)
    n_vert = len(tq.quiver.vertices)
    stats = []
    mismatches = []
    hist = {}
    for i, t in enumerate(tq.nodes):
        s, e = tq.out_deg[i], tq.in_deg[i]
        delta = s + e
        stats.append((s, e, delta))
        hist[delta] = hist.get(delta, 0) + 1
        dims = module_dim(table, t)
        predicted = n_vert - sum(1 for v in dims.values() if v == 1)
        if predicted != delta:
            mismatches.append((i, delta, predicted))
    return DegreeReport(
        tuple(stats), dict(sorted(hist.items())), not mismatches, tuple(mismatches)
    )


def closed_form_counts(kind, rank):
    """Exact vertex/arrow counts of the tilting quiver from the closed forms."""
    if kind == "A":
        if rank < 1:
            raise ValueError("type A needs rank >= 1")
        n = rank
        return comb(2 * n, n) // (n + 1), comb(2 * n - 1, n + 1)
    if kind == "D":
        # rank 3 is accepted as an alias of A_3; both formulas agree there.
        if rank < 3:
            raise ValueError("type D needs rank >= 3")
        m = rank
        return (3 * m - 4) * comb(2 * (m - 1), m - 1) // (2 * m), (3 * m - 4) * comb(
            2 * (m - 2), m - 3
        )
    raise ValueError(f"unknown kind {kind!r}")


def tilting_quiver_json(tq):
    """Fixed field order: quiver, nodes, arrows, delta."""
    return {
        "quiver": quiver_to_json(tq.quiver),
        "nodes": [list(t.summands) for t in tq.nodes],
        "arrows": [list(a) for a in tq.arrows],
        "delta": list(tq.delta),
    }


def tilting_quiver_dot(tq):
    """Graphviz digraph, one node statement and one edge statement per line."""
    table = ext_table(tq.quiver)
    lines = ["digraph tilting {"]
    for i, t in enumerate(tq.nodes):
        label = "|".join(table.label(s) for s in t.summands)
        lines.append(f'  t{i} [label="{label}", delta={tq.delta[i]}];')
    for a, b in tq.arrows:
        lines.append(f"  t{a} -> t{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
