import random
from fractions import Fraction

from tiltquiver import linalg


def test_rank_basic():
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.rank([[1, 0], [0, 1]]) == 2
    assert linalg.rank([[0, 0], [0, 0]]) == 0
    assert linalg.rank([]) == 0
    assert linalg.rank([[1, 2, 3]]) == 1


def test_rank_with_fractions():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 2), Fraction(1, 1)]]
    assert linalg.rank(rows) == 2
    rows = [[Fraction(1, 2), Fraction(1, 4)], [Fraction(2), Fraction(1)]]
    assert linalg.rank(rows) == 1


def test_rank_matches_rref_pivots_on_random_matrices():
    rng = random.Random(7)
    for _ in range(50):
        nr, nc = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-3, 3) for _ in range(nc)] for _ in range(nr)]
        _, pivots = linalg.rref(rows, nc)
        assert linalg.rank(rows) == len(pivots)


def test_nullspace_annihilates():
    rng = random.Random(11)
    for _ in range(30):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-2, 2) for _ in range(nc)] for _ in range(nr)]
        basis = linalg.nullspace(rows, nc)
        assert len(basis) == nc - linalg.rank(rows)
        for vec in basis:
            assert any(vec)
            for row in rows:
                assert sum(r * v for r, v in zip(row, vec)) == 0


def test_left_nullspace_annihilates():
    rows = [[1, 1], [2, 2], [0, 1]]
    basis = linalg.left_nullspace(rows, 2)
    assert len(basis) == 1
    (y,) = basis
    for c in range(2):
        assert sum(y[i] * rows[i][c] for i in range(3)) == 0


def test_primitive_scaling():
    assert linalg.primitive([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]
    assert linalg.primitive([Fraction(2), Fraction(4)]) == [1, 2]
    assert linalg.primitive([Fraction(0), Fraction(0)]) == [0, 0]
