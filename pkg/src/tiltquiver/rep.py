"""Exact quiver representations: Hom/Ext dimensions and the standard functors.

A representation assigns a dimension to every vertex and an exact rational
matrix to every arrow (shape target-dim x source-dim).  Hom dimensions come
from the nullity of the assembled intertwiner system; Ext dimensions follow
from hom - euler, valid because path algebras of trees are hereditary.
Indecomposables over a reference orientation are instantiated from the
combinatorial models and pushed to any other orientation with reflection
functors at sinks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import linalg, models
from .quiver import (
    Quiver,
    canonical_form,
    classify_tree,
    d_quiver,
    delete_vertex,
    path_quiver,
    reflect,
    sink_reflection_sequence,
    vertex_key,
)


@dataclass
class Rep:
    """Representation: dims per vertex, one matrix (rows of tuples) per arrow."""

    quiver: Quiver
    dims: dict
    maps: dict

    def __post_init__(self):
        if set(self.dims) != set(self.quiver.vertices):
            raise ValueError("dimension vector must cover exactly the vertices")
        for a, b in self.quiver.arrows:
            mat = self.maps.get((a, b))
            if mat is None:
                raise ValueError(f"missing matrix for arrow ({a},{b})")
            if len(mat) != self.dims[b] or any(len(r) != self.dims[a] for r in mat):
                raise ValueError(f"matrix shape mismatch on arrow ({a},{b})")

    def dim_tuple(self):
        return tuple(self.dims[v] for v in self.quiver.vertices)

    def is_zero(self):
        return all(d == 0 for d in self.dims.values())


def _zeros(r, c):
    return tuple(tuple(0 for _ in range(c)) for _ in range(r))


def zero_rep(q):
    dims = {v: 0 for v in q.vertices}
    return Rep(q, dims, {ar: () for ar in q.arrows})


def simple_rep(q, x):
    dims = {v: 1 if v == x else 0 for v in q.vertices}
    return Rep(q, dims, {(a, b): _zeros(dims[b], dims[a]) for a, b in q.arrows})


def euler_form(q, d, e):
    """<d,e> = sum_v d_v e_v - sum_{a->b} d_a e_b; equals hom - ext here."""
    if set(d) != set(q.vertices) or set(e) != set(q.vertices):
        raise ValueError("dimension vectors must be indexed by the vertices")
    total = sum(d[v] * e[v] for v in q.vertices)
    total -= sum(d[a] * e[b] for a, b in q.arrows)
    return total


def hom_dim(m, n):
    """dim Hom(m, n): nullity of the intertwiner system f_b M_ab = N_ab f_a."""
    if m.quiver != n.quiver:
        raise ValueError("representations live over different quivers")
    q = m.quiver
    offsets = {}
    total = 0
    for v in q.vertices:
        offsets[v] = total
        total += m.dims[v] * n.dims[v]
    if total == 0:
        return 0
    rows = []
    for a, b in q.arrows:
        mab, nab = m.maps[(a, b)], n.maps[(a, b)]
        da, db = m.dims[a], m.dims[b]
        for r in range(n.dims[b]):
            for c in range(da):
                row = [0] * total
                for k in range(db):
                    row[offsets[b] + r * db + k] += mab[k][c]
                for l in range(n.dims[a]):
                    row[offsets[a] + l * da + c] -= nab[r][l]
                if any(row):
                    rows.append(row)
    return total - linalg.rank(rows)


def ext_dim(m, n):
    """dim Ext^1(m, n) = hom(m, n) - <dim m, dim n>, nonnegative by heredity."""
    value = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)
    if value < 0:
        raise RuntimeError("negative Ext dimension: invariant violation")
    return value


def reflection_plus(q, x, m):
    """Reflection functor at a sink: new space at x is ker(sum of incoming maps)."""
    if not q.is_sink(x):
        raise ValueError(f"{x!r} is not a sink")
    q2 = reflect(q, x)
    ins = sorted((a for a, b in q.arrows if b == x), key=vertex_key)
    widths = [m.dims[y] for y in ins]
    total = sum(widths)
    rows = []
    for r in range(m.dims[x]):
        row = []
        for y in ins:
            row.extend(m.maps[(y, x)][r])
        rows.append(row)
    kernel = linalg.nullspace(rows, total)
    k = len(kernel)
    dims2 = dict(m.dims)
    dims2[x] = k
    maps2 = {ar: m.maps[ar] for ar in q.arrows if x not in ar}
    off = 0
    for y, dy in zip(ins, widths):
        maps2[(x, y)] = tuple(
            tuple(kernel[c][off + r] for c in range(k)) for r in range(dy)
        )
        off += dy
    return Rep(q2, dims2, maps2)


def reflection_minus(q, x, m):
    """Reflection functor at a source: new space at x is coker(sum of outgoing maps)."""
    if not q.is_source(x):
        raise ValueError(f"{x!r} is not a source")
    q2 = reflect(q, x)
    outs = sorted((b for a, b in q.arrows if a == x), key=vertex_key)
    rows = []
    blocks = []
    for y in outs:
        blocks.append(len(rows))
        rows.extend(list(r) for r in m.maps[(x, y)])
    proj = linalg.left_nullspace(rows, m.dims[x]) if rows else []
    c = len(proj)
    dims2 = dict(m.dims)
    dims2[x] = c
    maps2 = {ar: m.maps[ar] for ar in q.arrows if x not in ar}
    for y, off in zip(outs, blocks):
        dy = m.dims[y]
        maps2[(y, x)] = tuple(
            tuple(proj[r][off + col] for col in range(dy)) for r in range(c)
        )
    return Rep(q2, dims2, maps2)


def restrict(q, x, m):
    """Drop the data at a leaf vertex; exact componentwise."""
    small = delete_vertex(q, x)
    dims = {v: m.dims[v] for v in small.vertices}
    maps = {ar: m.maps[ar] for ar in small.arrows}
    return Rep(small, dims, maps)


def extend(q, x, n_rep):
    """Extend over a leaf: the new space copies the unique neighbour.

    For a source leaf this is the right-adjoint extension (projection shape);
    for a sink leaf the dual construction with injections.  With one neighbour
    both reduce to the identity structure map.
    """
    small = delete_vertex(q, x)
    if n_rep.quiver != small:
        raise ValueError("representation must live over the deleted quiver")
    incident = [ar for ar in q.arrows if x in ar]
    (a, b) = incident[0]
    y = b if a == x else a
    dims = dict(n_rep.dims)
    dims[x] = n_rep.dims[y]
    ident = tuple(
        tuple(1 if i == j else 0 for j in range(dims[x])) for i in range(dims[x])
    )
    maps = dict(n_rep.maps)
    maps[(a, b)] = ident
    return Rep(q, dims, maps)


@dataclass
class Indec:
    """Indecomposable with its canonical id and optional combinatorial model."""

    id: int
    rep: Rep
    dim: dict
    model: object = None


def build_model_rep(kind, x, n):
    """Instantiate a model indecomposable over the reference orientation."""
    if kind == "A":
        q = path_quiver(n)
        return Rep(q, models.a_dim(x, n), models.a_matrices(x, n))
    if kind == "D":
        q = d_quiver(n)
        return Rep(q, models.d_dim(x, n), models.d_matrices(x, n))
    raise ValueError(f"unknown kind {kind!r}")


def _reference_models(kind, n):
    xs = models.a_indecs(n) if kind == "A" else models.d_indecs(n)
    return [(x, build_model_rep(kind, x, n)) for x in xs]


def _transport(ref, goal, reps):
    """Push every representation along a sink-reflection walk from ref to goal."""
    seq = sink_reflection_sequence(ref, goal)
    cur = ref
    out = list(reps)
    for x in seq:
        nxt = reflect(cur, x)
        moved = []
        for r in out:
            if r.dims[x] == 1 and sum(r.dims.values()) == 1:
                moved.append(simple_rep(nxt, x))
            else:
                moved.append(reflection_plus(cur, x, r))
        cur = nxt
        out = moved
    return out


@lru_cache(maxsize=None)
def indecomposables(q):
    """All indecomposables of an A- or D-type quiver, ids ordered by dim vector.

    Over the reference orientation the explicit models are instantiated and kept
    as tags; any other orientation is reached by reflection functors along a
    shortest sink-reflection walk.
    """
    canon, mapping = canonical_form(q)
    kind, param = classify_tree(q)
    ref = path_quiver(param) if kind == "A" else d_quiver(param)
    at_reference = q == ref
    if canon == ref:
        tagged = _reference_models(kind, param)
        tags = [x for x, _ in tagged]
        reps = [r for _, r in tagged]
    else:
        tagged = _reference_models(kind, param)
        reps = _transport(ref, canon, [r for _, r in tagged])
        tags = [None] * len(reps)
    if canon != q:
        inverse = {new: old for old, new in mapping.items()}
        reps = [_relabel(r, q, inverse) for r in reps]
        tags = [None] * len(reps)
    order = sorted(range(len(reps)), key=lambda i: reps[i].dim_tuple())
    out = []
    for new_id, i in enumerate(order):
        model = tags[i] if at_reference else None
        out.append(Indec(new_id, reps[i], dict(reps[i].dims), model))
    return tuple(out)


def _relabel(r, q, inverse):
    dims = {inverse[v]: d for v, d in r.dims.items()}
    maps = {}
    for a, b in r.quiver.arrows:
        maps[(inverse[a], inverse[b])] = r.maps[(a, b)]
    return Rep(q, dims, maps)


def simple_reflection_dims(q, x, d):
    """Simple reflection of a dimension vector at x on the underlying tree."""
    out = dict(d)
    out[x] = -d[x] + sum(d[w] for w in q.neighbor_map()[x])
    return out


@lru_cache(maxsize=None)
def positive_roots(q):
    """Positive roots of the underlying tree by reflection closure of the simples."""
    verts = q.vertices
    idx = {v: i for i, v in enumerate(verts)}
    adj = q.neighbor_map()
    simples = [tuple(1 if i == j else 0 for j in range(len(verts))) for i in range(len(verts))]
    seen = set(simples)
    queue = list(simples)
    while queue:
        d = queue.pop()
        for x in verts:
            new = list(d)
            new[idx[x]] = -d[idx[x]] + sum(d[idx[w]] for w in adj[x])
            t = tuple(new)
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return frozenset(t for t in seen if all(c >= 0 for c in t) and any(t))


def rep_to_json(r):
    """Debug serialization: dims map plus row-major matrices as "p/q" strings."""
    from fractions import Fraction

    return {
        "dims": {v: r.dims[v] for v in r.quiver.vertices},
        "maps": {
            f"{a}->{b}": [[str(Fraction(x)) for x in row] for row in r.maps[(a, b)]]
            for a, b in r.quiver.arrows
        },
    }


def projective_dim_vectors(q):
    """P(x) is supported on the vertices reachable from x (trees: multiplicity one)."""
    out = {}
    for x in q.vertices:
        reach = {x}
        stack = [x]
        while stack:
            v = stack.pop()
            for a, b in q.arrows:
                if a == v and b not in reach:
                    reach.add(b)
                    stack.append(b)
        out[x] = {v: 1 if v in reach else 0 for v in q.vertices}
    return out
