from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from sharedorbits import linalg

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_n=5):
    m = draw(st.integers(1, max_n))
    n = draw(st.integers(1, max_n))
    return [[draw(small) for _ in range(n)] for _ in range(m)]


@given(matrices())
def test_rank_nullity(rows):
    m = linalg.matrix(rows)
    ker = linalg.nullspace(m)
    assert linalg.rank(m) + len(ker) == m.ncols()
    for v in ker:
        assert all(x == 0 for x in linalg.mat_vec(m, v))


@given(matrices(), st.data())
def test_solve_consistent_systems(rows, data):
    m = linalg.matrix(rows)
    x = [data.draw(small) for _ in range(m.ncols())]
    b = linalg.mat_vec(m, x)
    sol = linalg.solve(m, b)
    assert sol is not None
    assert linalg.mat_vec(m, sol) == b


def test_solve_inconsistent():
    m = linalg.matrix([[1, 1], [2, 2]])
    assert linalg.solve(m, [1, 3]) is None


def test_exact_fractions():
    m = linalg.matrix([[Fraction(1, 3), Fraction(2, 3)]])
    assert linalg.to_fraction(m[0, 0]) == Fraction(1, 3)
    assert linalg.span_rank([(1, 2), (2, 4), (0, 1)]) == 2


def test_stacks():
    a = linalg.identity(2)
    assert linalg.vstack([a, a]).nrows() == 4
    assert linalg.hstack([a, a]).ncols() == 4
    assert linalg.is_zero(linalg.zeros(2, 3))
