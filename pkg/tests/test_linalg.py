import random
from fractions import Fraction

import pytest

from bootperc.linalg import mat_rank, nullspace, rref


def random_matrix(rng, max_dim=6):
    rows = rng.randint(1, max_dim)
    cols = rng.randint(1, max_dim)
    return [
        [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
        for _ in range(rows)
    ]


class TestRank:
    def test_known_values(self):
        assert mat_rank([[1, 0], [0, 1]]) == 2
        assert mat_rank([[1, 2], [2, 4]]) == 1
        assert mat_rank([[0, 0], [0, 0]]) == 0
        assert mat_rank([]) == 0
        assert mat_rank([[1, 2, 3]]) == 1

    def test_exact_fractions(self):
        # rows are dependent only under exact arithmetic
        m = [
            [Fraction(1, 3), Fraction(1, 7)],
            [Fraction(2, 3), Fraction(2, 7)],
        ]
        assert mat_rank(m) == 1

    def test_invariant_under_permutations(self):
        rng = random.Random(2024)
        for _ in range(100):
            m = random_matrix(rng)
            base = mat_rank(m)
            rows = m[:]
            rng.shuffle(rows)
            perm = list(range(len(m[0])))
            rng.shuffle(perm)
            shuffled = [[row[j] for j in perm] for row in rows]
            assert mat_rank(shuffled) == base

    def test_transposition_invariance(self):
        rng = random.Random(99)
        for _ in range(30):
            m = random_matrix(rng)
            t = [list(col) for col in zip(*m)]
            assert mat_rank(m) == mat_rank(t)


class TestRref:
    def test_pivot_columns(self):
        m = [[0, 1, 2], [0, 2, 4]]
        reduced, pivots = rref(m)
        assert pivots == [1]
        assert reduced[0] == [Fraction(0), Fraction(1), Fraction(2)]

    def test_leading_ones(self):
        rng = random.Random(8)
        for _ in range(20):
            m = random_matrix(rng)
            reduced, pivots = rref(m)
            for row_idx, pc in enumerate(pivots):
                assert reduced[row_idx][pc] == 1
                for other in range(len(m)):
                    if other != row_idx:
                        assert reduced[other][pc] == 0


class TestNullspace:
    def test_defining_property(self):
        rng = random.Random(55)
        for _ in range(40):
            m = random_matrix(rng)
            cols = len(m[0])
            basis = nullspace(m, cols)
            assert len(basis) == cols - mat_rank(m)
            for vec in basis:
                for row in m:
                    assert sum(a * b for a, b in zip(row, vec)) == 0
            # basis vectors are independent
            assert mat_rank(basis) == len(basis)

    def test_no_rows_gives_standard_basis(self):
        basis = nullspace([], 3)
        assert basis == [
            [Fraction(1), Fraction(0), Fraction(0)],
            [Fraction(0), Fraction(1), Fraction(0)],
            [Fraction(0), Fraction(0), Fraction(1)],
        ]

    def test_rejects_ragged_input(self):
        with pytest.raises(ValueError):
            nullspace([[1, 2]], 3)
