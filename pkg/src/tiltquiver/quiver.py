"""Tree-shaped quivers: construction, reflection, leaf deletion, orientation scans.

Vertex labels are strings.  The canonical families use "1", "2", ... for path
vertices and "n+"/"n-" for the two fork tips of the D-type quiver.  A quiver is
always connected, loop-free and cycle-free, i.e. its underlying graph is a tree.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import product

_LABEL = re.compile(r"^(\d+)([+-]?)$")
_SUFFIX_ORDER = {"": 0, "+": 1, "-": 2}


def vertex_key(label):
    """Sort key: numeric labels in order, fork tips after their number, + before -."""
    m = _LABEL.match(label)
    if m:
        return (0, int(m.group(1)), _SUFFIX_ORDER[m.group(2)], "")
    return (1, 0, 0, label)


@dataclass(frozen=True)
class Quiver:
    """Finite connected acyclic quiver whose underlying graph is a tree."""

    vertices: tuple
    arrows: tuple

    def __post_init__(self):
        verts = tuple(sorted(self.vertices, key=vertex_key))
        arrows = tuple(sorted(self.arrows))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", arrows)
        if len(set(verts)) != len(verts):
            raise ValueError("vertex labels must be unique")
        vset = set(verts)
        edges = set()
        for a, b in arrows:
            if a not in vset or b not in vset:
                raise ValueError(f"arrow ({a},{b}) uses unknown vertex")
            if a == b:
                raise ValueError("loops are not allowed")
            e = frozenset((a, b))
            if e in edges:
                raise ValueError("multiple edges are not allowed")
            edges.add(e)
        if len(arrows) != len(verts) - 1:
            raise ValueError("underlying graph must be a tree")
        if verts and self._reachable(verts[0]) != vset:
            raise ValueError("quiver must be connected")

    def _reachable(self, start):
        adj = self.neighbor_map()
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def neighbor_map(self):
        adj = {v: [] for v in self.vertices}
        for a, b in self.arrows:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def out_arrows(self, v):
        return [ar for ar in self.arrows if ar[0] == v]

    def in_arrows(self, v):
        return [ar for ar in self.arrows if ar[1] == v]

    def sinks(self):
        outgoing = {a for a, _ in self.arrows}
        return tuple(v for v in self.vertices if v not in outgoing)

    def sources(self):
        incoming = {b for _, b in self.arrows}
        return tuple(v for v in self.vertices if v not in incoming)

    def is_sink(self, v):
        return v in self.vertices and all(a != v for a, _ in self.arrows)

    def is_source(self, v):
        return v in self.vertices and all(b != v for _, b in self.arrows)

    def is_leaf(self, v):
        return sum(1 for a, b in self.arrows if v in (a, b)) == 1

    def degree(self, v):
        return sum(1 for a, b in self.arrows if v in (a, b))


def path_quiver(n, orientation=None):
    """Path quiver on vertices 1..n; orientation bit i set means arrow i -> i+1."""
    if n < 1:
        raise ValueError("path quiver needs rank >= 1")
    if orientation is None:
        orientation = [True] * (n - 1)
    if len(orientation) != n - 1:
        raise ValueError(f"orientation needs {n - 1} bits, got {len(orientation)}")
    verts = tuple(str(i) for i in range(1, n + 1))
    arrows = []
    for i, fwd in enumerate(orientation, start=1):
        a, b = str(i), str(i + 1)
        arrows.append((a, b) if fwd else (b, a))
    return Quiver(verts, tuple(arrows))


def d_quiver(n, orientation=None):
    """D-type quiver: stem 1..n-1 plus fork tips n+/n- attached at n-1.

    The default orientation points every edge away from vertex 1, so the fork
    tips are the sinks.  Edge order for orientation bits: stem edges
    (1,2)..(n-2,n-1), then (n-1,n+), then (n-1,n-).
    """
    if n < 2:
        raise ValueError("d quiver needs fork parameter >= 2")
    if orientation is None:
        orientation = [True] * n
    if len(orientation) != n:
        raise ValueError(f"orientation needs {n} bits, got {len(orientation)}")
    verts = tuple(str(i) for i in range(1, n)) + (f"{n}+", f"{n}-")
    edges = [(str(i), str(i + 1)) for i in range(1, n - 1)]
    edges.append((str(n - 1), f"{n}+"))
    edges.append((str(n - 1), f"{n}-"))
    arrows = [(a, b) if fwd else (b, a) for (a, b), fwd in zip(edges, orientation)]
    return Quiver(verts, tuple(arrows))


def reflect(q, x):
    """Reverse every arrow incident to x."""
    if x not in q.vertices:
        raise ValueError(f"unknown vertex {x!r}")
    arrows = tuple((b, a) if x in (a, b) else (a, b) for a, b in q.arrows)
    return Quiver(q.vertices, arrows)


def delete_vertex(q, x):
    """Remove a leaf vertex; deleting an interior vertex would disconnect."""
    if x not in q.vertices:
        raise ValueError(f"unknown vertex {x!r}")
    if not q.is_leaf(x):
        raise ValueError(f"deleting {x!r} would disconnect the quiver")
    verts = tuple(v for v in q.vertices if v != x)
    arrows = tuple(ar for ar in q.arrows if x not in ar)
    return Quiver(verts, arrows)


def sinks_sources(q):
    return set(q.sinks()), set(q.sources())


def tree_edges(q):
    """Underlying edges as frozensets, orientation forgotten."""
    return frozenset(frozenset(ar) for ar in q.arrows)


def all_orientations(kind, rank):
    """Yield (bits, quiver) over every orientation of the A_rank path or Q_rank tree."""
    if kind == "A":
        nbits = rank - 1
        build = lambda bits: path_quiver(rank, bits)
    elif kind == "D":
        nbits = rank
        build = lambda bits: d_quiver(rank, bits)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    for bits in product((True, False), repeat=nbits):
        yield bits, build(bits)


def sink_reflection_sequence(start, goal):
    """Shortest sequence of sink reflections turning start into goal.

    BFS over orientations of the shared underlying tree; ties are broken by
    reflecting smaller vertices first, so the result is deterministic.
    """
    if start.vertices != goal.vertices or tree_edges(start) != tree_edges(goal):
        raise ValueError("quivers must share the same underlying tree")
    order = sorted(start.vertices, key=vertex_key)
    initial = start.arrows
    target = goal.arrows
    seen = {initial: ()}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        path = seen[q.arrows]
        if q.arrows == target:
            return list(path)
        for x in order:
            if q.is_sink(x):
                nq = reflect(q, x)
                if nq.arrows not in seen:
                    seen[nq.arrows] = path + (x,)
                    queue.append(nq)
    raise RuntimeError("orientation unreachable by sink reflections")


def admissible_sink_order(q):
    """Total order on vertices reflecting each exactly once, sinks first."""
    order = []
    cur = q
    remaining = set(q.vertices)
    while remaining:
        x = min((v for v in remaining if cur.is_sink(v)), key=vertex_key)
        order.append(x)
        remaining.discard(x)
        cur = reflect(cur, x)
    return order


def classify_tree(q):
    """Classify the underlying tree: ("A", n) for a path, ("D", n) for Q_n.

    For D the returned parameter is the fork parameter, so the quiver has n+1
    vertices.  Raises on any other tree shape.
    """
    kind, positions = _canonical_positions(q)
    if kind == "A":
        return "A", len(q.vertices)
    return "D", len(q.vertices) - 1


def canonical_form(q):
    """Relabel onto the canonical vertex names; returns (quiver, old->new map)."""
    _, mapping = _canonical_positions(q)
    verts = tuple(mapping[v] for v in q.vertices)
    arrows = tuple((mapping[a], mapping[b]) for a, b in q.arrows)
    return Quiver(verts, arrows), mapping


def _canonical_positions(q):
    n = len(q.vertices)
    adj = q.neighbor_map()
    degs = {v: len(adj[v]) for v in q.vertices}
    if any(d > 3 for d in degs.values()):
        raise ValueError("underlying tree is not of type A or D")
    forks = [v for v, d in degs.items() if d == 3]
    if len(forks) > 1:
        raise ValueError("underlying tree is not of type A or D")

    tips = _labeled_fork_tips(q, adj)
    if tips is not None:
        return "D", _d_positions(q, adj, tips)
    if not forks:
        return "A", _path_positions(q, adj)
    fork = forks[0]
    branches = []
    for w in adj[fork]:
        branch = [w]
        prev = fork
        while degs[branch[-1]] == 2:
            nxt = next(u for u in adj[branch[-1]] if u != prev)
            prev = branch[-1]
            branch.append(nxt)
        branches.append(branch)
    short = [b for b in branches if len(b) == 1]
    if len(short) < 2:
        raise ValueError("underlying tree is not of type A or D")
    if len(short) == 3:
        stem_leaf = min((b[0] for b in short), key=vertex_key)
        short = [b for b in short if b[0] != stem_leaf]
    tips = tuple(sorted((b[0] for b in short), key=vertex_key))
    return "D", _d_positions(q, adj, tips)


def _labeled_fork_tips(q, adj):
    # Canonical labels make the fork explicit even when the tree degenerates
    # to a path (the smallest D shape has no degree-3 vertex).
    plus = [v for v in q.vertices if v.endswith("+")]
    minus = [v for v in q.vertices if v.endswith("-")]
    if len(plus) != 1 or len(minus) != 1:
        return None
    p, m = plus[0], minus[0]
    if p[:-1] != m[:-1]:
        return None
    if len(adj[p]) != 1 or len(adj[m]) != 1 or adj[p][0] != adj[m][0]:
        return None
    return (p, m)


def _path_positions(q, adj):
    ends = [v for v in q.vertices if len(adj[v]) <= 1]
    if len(q.vertices) == 1:
        return {q.vertices[0]: "1"}
    start = min(ends, key=vertex_key)
    order = [start]
    prev = None
    while len(order) < len(q.vertices):
        nxt = next(u for u in adj[order[-1]] if u != prev)
        prev = order[-1]
        order.append(nxt)
    return {v: str(i) for i, v in enumerate(order, start=1)}


def _d_positions(q, adj, tips):
    fork = adj[tips[0]][0]
    n = len(q.vertices) - 1
    mapping = {tips[0]: f"{n}+", tips[1]: f"{n}-"}
    stem = [fork]
    prev_set = set(tips)
    while True:
        nxt = [u for u in adj[stem[-1]] if u not in prev_set]
        if not nxt:
            break
        if len(nxt) > 1:
            raise ValueError("underlying tree is not of type A or D")
        prev_set.add(stem[-1])
        stem.append(nxt[0])
    # stem runs fork -> leaf; canonical positions count from the leaf end
    for pos, v in enumerate(reversed(stem), start=1):
        mapping[v] = str(pos)
    if len(mapping) != len(q.vertices):
        raise ValueError("underlying tree is not of type A or D")
    return mapping


def quiver_to_json(q):
    """JSON-ready dict with fixed field order and sorted vertices."""
    return {"vertices": list(q.vertices), "arrows": [list(ar) for ar in q.arrows]}


def quiver_from_json(data):
    return Quiver(tuple(data["vertices"]), tuple(tuple(ar) for ar in data["arrows"]))
