"""Exact linear algebra over the rationals.

Matrices are lists of rows with int or Fraction entries.  Everything in this
package stays tiny (intertwiner systems below ~40 unknowns), so dense cubic
elimination is the right tool.  Ranks use fraction-free (Bareiss) elimination
on integer-cleared rows; nullspaces use reduced echelon form over Fraction and
return integer-primitive basis vectors.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _lcm(a, b):
    return a * b // gcd(a, b)


def integer_rows(rows):
    """Scale each row by its common denominator so every entry is an int."""
    out = []
    for row in rows:
        denom = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                denom = _lcm(denom, x.denominator)
        out.append([int(x * denom) for x in row])
    return out


def rank(rows):
    """Exact rank via fraction-free Gaussian elimination (Bareiss)."""
    if not rows or not rows[0]:
        return 0
    m = integer_rows(rows)
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            head = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (pivot * row_i[j] - head * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        r += 1
        if r == nrows:
            break
    return r


def rref(rows, ncols):
    """Reduced row echelon form over Fraction; returns (rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def primitive(vec):
    """Clear denominators and divide by the content; exact and growth-free."""
    denom = 1
    for x in vec:
        if isinstance(x, Fraction) and x.denominator != 1:
            denom = _lcm(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def nullspace(rows, ncols):
    """Basis of {x : A x = 0}, one integer-primitive vector per free column."""
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(primitive(v))
    return basis


def transpose(rows, ncols):
    return [[row[i] for row in rows] for i in range(ncols)]


def left_nullspace(rows, ncols):
    """Basis of {y : y A = 0} for A with the given number of columns."""
    return nullspace(transpose(rows, ncols), len(rows))
