import random
from fractions import Fraction

from gradedpi.fields import Field
from gradedpi.linalg import RowReducer, fraction_free_rank, nullspace, rank, row_space

from oracles import brute_force_rank

Q = Field.rationals()


def _sparse(row):
    return {i: Fraction(v) for i, v in enumerate(row) if v}


def test_row_reducer_basic():
    red = RowReducer(Q)
    assert red.add(_sparse([1, 2, 0]))
    assert red.add(_sparse([0, 1, 1]))
    assert not red.add(_sparse([1, 3, 1]))  # dependent
    assert red.rank == 2
    assert red.contains(_sparse([2, 5, 1]))
    assert not red.contains(_sparse([0, 0, 1]))


def test_row_reducer_produces_rref():
    red = RowReducer(Q)
    red.add(_sparse([2, 4, 2]))
    red.add(_sparse([1, 1, 1]))
    rows = red.rows()
    # leading ones at distinct pivots, zeros above and below
    assert rows[0] == {0: Fraction(1)} or rows[0].get(0) == Fraction(1)
    for i, row in enumerate(rows):
        piv = min(row)
        assert row[piv] == 1
        for j, other in enumerate(rows):
            if i != j:
                assert piv not in other


def test_rank_matches_brute_force_on_random_matrices():
    rng = random.Random(3)
    for _ in range(40):
        nrows, ncols = rng.randrange(1, 6), rng.randrange(1, 6)
        dense = [
            [Fraction(rng.randrange(-4, 5), rng.choice([1, 2, 3])) for _ in range(ncols)]
            for _ in range(nrows)
        ]
        expected = brute_force_rank(dense)
        assert rank(Q, [_sparse(r) for r in dense]) == expected
        assert fraction_free_rank(dense) == expected


def test_fraction_free_rank_handles_fractions_and_zeros():
    assert fraction_free_rank([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3), Fraction(2)]]) == 1
    assert fraction_free_rank([[0, 0], [0, 0]]) == 0
    assert fraction_free_rank([]) == 0


def test_nullspace_canonical():
    # x + y + z = 0, y - z = 0  ->  one free column (z), vector (-2, 1, 1)
    rows = [[Fraction(1), Fraction(1), Fraction(1)], [Fraction(0), Fraction(1), Fraction(-1)]]
    basis = nullspace(Q, rows, 3)
    assert basis == [[Fraction(-2), Fraction(1), Fraction(1)]]


def test_nullspace_orthogonal_to_rows():
    rng = random.Random(17)
    for _ in range(25):
        nrows, ncols = rng.randrange(1, 5), rng.randrange(1, 6)
        rows = [[Fraction(rng.randrange(-3, 4)) for _ in range(ncols)] for _ in range(nrows)]
        basis = nullspace(Q, rows, ncols)
        assert len(basis) == ncols - brute_force_rank(rows) if any(any(r) for r in rows) else ncols
        for x in basis:
            for row in rows:
                assert sum(a * b for a, b in zip(row, x)) == 0


def test_prime_field_reduction():
    f3 = Field.prime(3)
    red = RowReducer(f3)
    red.add({0: 2, 1: 1})
    red.add({0: 1, 1: 2})
    # over GF(3) the second row = 2 * first, so rank stays 1
    assert red.rank == 1
    assert red.contains({0: 1, 1: 2})


def test_row_space_helper():
    vecs = [_sparse([1, 0, 1]), _sparse([0, 1, 0]), _sparse([1, 1, 1])]
    assert row_space(Q, vecs).rank == 2
