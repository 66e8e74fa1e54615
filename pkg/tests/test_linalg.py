"""
Tests for exact sparse row reduction.
"""

from fractions import Fraction

from hypothesis import given, strategies as st

from unitri.algebra.linalg import EchelonSpace, dense_rank, rank


def test_rank_of_dependent_vectors():
    vectors = [{0: 1, 1: 2}, {0: 2, 1: 4}, {1: Fraction(1, 3)}]
    assert rank(vectors) == 2


def test_zero_vectors_do_not_count():
    space = EchelonSpace()
    assert space.add({}) is False
    assert space.add({0: 0}) is False
    assert space.rank == 0
    assert space.basis() == []


def test_reduced_basis_is_canonical():
    space = EchelonSpace()
    space.extend([{1: 1, 2: 1}, {0: 2, 1: 2}, {0: 1, 2: 3}])
    # span is all of Q^3
    assert space.rank == 3
    assert space.basis() == [{0: 1}, {1: 1}, {2: 1}]


def test_basis_independent_of_insertion_order():
    vectors = [{0: 1, 1: 1, 3: 2}, {1: 3, 2: -1}, {0: 2, 1: 5, 2: -1, 3: 4}]
    forward = EchelonSpace()
    forward.extend(vectors)
    backward = EchelonSpace()
    backward.extend(reversed(vectors))
    assert forward.rank == 2
    assert forward.basis() == backward.basis()


def test_contains_and_pivots():
    space = EchelonSpace(key=lambda c: -c)
    space.extend([{0: 1, 1: 1}, {1: 1}])
    assert space.pivots() == [1, 0]
    assert space.contains({0: 5, 1: -2})
    assert not EchelonSpace().contains({0: 1})


def test_dense_rank():
    assert dense_rank([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 2
    assert dense_rank([[Fraction(1, 2), 0], [0, Fraction(1, 3)]]) == 2
    assert dense_rank([]) == 0


@given(
    st.lists(
        st.lists(st.integers(min_value=-4, max_value=4), min_size=4, max_size=4),
        max_size=6,
    )
)
def test_rank_matches_fraction_elimination(rows):
    # plain Gauss-Jordan over Fractions as the reference
    matrix = [[Fraction(v) for v in row] for row in rows]
    expected = 0
    for col in range(4):
        pivot = next((r for r in range(expected, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[expected], matrix[pivot] = matrix[pivot], matrix[expected]
        for r in range(len(matrix)):
            if r != expected and matrix[r][col]:
                factor = matrix[r][col] / matrix[expected][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[expected])]
        expected += 1
    assert dense_rank(rows) == expected
