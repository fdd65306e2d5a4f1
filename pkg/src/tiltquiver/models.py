"""Combinatorial models for the indecomposables over the reference orientations.

Type A (path 1 -> 2 -> ... -> n): interval modules L(i,j) with 0 <= i < j <= n,
supported on vertices i+1..j.  Type D (stem 1 -> ... -> n-1 forking to n+/n-):
three families L(a,b), L+/-(a,n) and M(a,b), the last with a two-dimensional
stretch.  Alongside the dimension vectors and explicit matrices this module
carries the AR translate and the closed-interval criterion for two-sided
Ext vanishing; both act as an independent oracle against the linear algebra.
"""

from __future__ import annotations

from typing import NamedTuple, Optional


class AInterval(NamedTuple):
    lo: int
    hi: int

    def render(self):
        return f"L({self.lo},{self.hi})"


class DIndec(NamedTuple):
    kind: str  # "L", "L+", "L-" or "M"
    a: int
    b: int  # upper index for L/M; the fork parameter n for L+/-

    def render(self):
        return f"{self.kind}({self.a},{self.b})"


def compatible(p, q):
    """Closed integer intervals are compatible when disjoint or nested."""
    (i, j), (k, l) = p, q
    if j < k or l < i:
        return True
    return (k <= i and j <= l) or (i <= k and l <= j)


# ---------------------------------------------------------------- type A

def a_indecs(n):
    return [AInterval(i, j) for i in range(n) for j in range(i + 1, n + 1)]


def a_dim(x, n):
    """Dimension vector of L(i,j): the indicator of vertices i+1..j."""
    return {str(v): 1 if x.lo < v <= x.hi else 0 for v in range(1, n + 1)}


def a_tau(x, n) -> Optional[AInterval]:
    """AR translate: shift the interval up by one, zero on projectives."""
    if x.hi == n:
        return None
    return AInterval(x.lo + 1, x.hi + 1)


def a_ext_vanish(x, y):
    """Ext vanishes both ways iff the closed intervals are compatible."""
    return compatible((x.lo, x.hi), (y.lo, y.hi))


def a_hom_nonzero(x, y):
    """Nonzero Hom L(i,j) -> L(i',j') iff i' <= i < j' <= j (strict at i)."""
    return y.lo <= x.lo < y.hi <= x.hi


# ---------------------------------------------------------------- type D

def d_indecs(n):
    out = [DIndec("L", a, b) for a in range(n - 1) for b in range(a + 1, n)]
    out += [DIndec("L+", a, n) for a in range(n)]
    out += [DIndec("L-", a, n) for a in range(n)]
    out += [DIndec("M", a, b) for a in range(n - 1) for b in range(a + 1, n)]
    return out


def d_dim(x, n):
    dims = {str(v): 0 for v in range(1, n)}
    dims[f"{n}+"] = 0
    dims[f"{n}-"] = 0
    if x.kind == "L":
        for v in range(x.a + 1, x.b + 1):
            dims[str(v)] = 1
    elif x.kind in ("L+", "L-"):
        for v in range(x.a + 1, n):
            dims[str(v)] = 1
        dims[f"{n}{x.kind[1]}"] = 1
    else:
        for v in range(x.a + 1, x.b + 1):
            dims[str(v)] = 1
        for v in range(x.b + 1, n):
            dims[str(v)] = 2
        dims[f"{n}+"] = 1
        dims[f"{n}-"] = 1
    return dims


def d_tau(x, n) -> Optional[DIndec]:
    """AR translate on model tags; zero exactly on projectives."""
    if x.kind == "L":
        if x.b < n - 1:
            return DIndec("L", x.a + 1, x.b + 1)
        return DIndec("M", 0, x.a + 1)
    if x.kind == "L+":
        return DIndec("L-", x.a + 1, n) if x.a < n - 1 else None
    if x.kind == "L-":
        return DIndec("L+", x.a + 1, n) if x.a < n - 1 else None
    if x.b < n - 1:
        return DIndec("M", x.a + 1, x.b + 1)
    return None


def d_ext_vanish(x, y, n):
    """Two-sided Ext vanishing via the seven-case closed-interval criterion."""
    kx, ky = x.kind, y.kind
    if kx == "L" and ky == "L":
        return compatible((x.a, x.b), (y.a, y.b))
    if kx == "L" and ky in ("L+", "L-"):
        return compatible((x.a, x.b), (y.a, n))
    if kx in ("L+", "L-") and ky == "L":
        return d_ext_vanish(y, x, n)
    if kx == "L" and ky == "M":
        return compatible((x.a, x.b), (y.a, n)) and compatible((x.a, x.b), (y.b, n))
    if kx == "M" and ky == "L":
        return d_ext_vanish(y, x, n)
    if kx == "M" and ky in ("L+", "L-"):
        return x.a <= y.a <= x.b
    if kx in ("L+", "L-") and ky == "M":
        return d_ext_vanish(y, x, n)
    if kx in ("L+", "L-") and ky in ("L+", "L-"):
        if kx == ky:
            return True
        return x.a == y.a
    # M against M: nested
    return (y.a <= x.a and x.b <= y.b) or (x.a <= y.a and y.b <= x.b)


def ext_vanish_pair(kind, x, y, n):
    """Dispatch the type-A / type-D Ext-vanishing predicate."""
    if kind == "A":
        return a_ext_vanish(x, y)
    if kind == "D":
        return d_ext_vanish(x, y, n)
    raise ValueError(f"unknown kind {kind!r}")


def ar_translate(kind, x, n):
    """AR translate of a model indecomposable, None for projectives."""
    if kind == "A":
        return a_tau(x, n)
    if kind == "D":
        return d_tau(x, n)
    raise ValueError(f"unknown kind {kind!r}")


def model_dim(kind, x, n):
    if kind == "A":
        return a_dim(x, n)
    if kind == "D":
        return d_dim(x, n)
    raise ValueError(f"unknown kind {kind!r}")


def _zeros(r, c):
    return tuple(tuple(0 for _ in range(c)) for _ in range(r))


def a_matrices(x, n):
    """Structure maps of L(i,j) on the reference path: identities on the support."""
    dims = a_dim(x, n)
    maps = {}
    for i in range(1, n):
        a, b = str(i), str(i + 1)
        if dims[a] and dims[b]:
            maps[(a, b)] = ((1,),)
        else:
            maps[(a, b)] = _zeros(dims[b], dims[a])
    return maps


def d_matrices(x, n):
    """Explicit structure maps on the reference Q_n, one matrix per arrow."""
    dims = d_dim(x, n)
    maps = {}
    for i in range(1, n - 1):
        a, b = str(i), str(i + 1)
        da, db = dims[a], dims[b]
        if da == 0 or db == 0:
            maps[(a, b)] = _zeros(db, da)
        elif da == 1 and db == 1:
            maps[(a, b)] = ((1,),)
        elif da == 1 and db == 2:
            maps[(a, b)] = ((1,), (1,))
        else:
            maps[(a, b)] = ((1, 0), (0, 1))
    stem_end = str(n - 1)
    for tip, row2 in ((f"{n}+", (1, 0)), (f"{n}-", (0, 1))):
        da, db = dims[stem_end], dims[tip]
        if da == 0 or db == 0:
            maps[(stem_end, tip)] = _zeros(db, da)
        elif da == 2:
            maps[(stem_end, tip)] = (row2,)
        else:
            maps[(stem_end, tip)] = ((1,),)
    return maps


def render(x):
    return x.render()
