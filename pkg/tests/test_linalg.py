from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from covres.linalg import ExactMatrix, SparseEchelon, rank_of_vectors, sparse_kernel

small_matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=5)
)


def test_rank_and_kernel_examples():
    m = ExactMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.rank() == 2
    (k,) = m.kernel()
    assert (m @ ExactMatrix([[x] for x in k], 1)).is_zero()


def test_solve():
    m = ExactMatrix([[2, 1], [1, 3]])
    assert m.solve([3, 4]) == [Fraction(1), Fraction(1)]
    assert ExactMatrix([[1, 1], [1, 1]]).solve([1, 2]) is None


@settings(max_examples=100, deadline=None)
@given(small_matrices)
def test_rank_nullity(rows):
    m = ExactMatrix(rows)
    ker = m.kernel()
    assert m.rank() + len(ker) == m.ncols
    for k in ker:
        assert all(sum(a * b for a, b in zip(row, k)) == 0 for row in rows)
    assert m.rank() == m.transpose().rank()


@settings(max_examples=100, deadline=None)
@given(small_matrices)
def test_sparse_echelon_agrees_with_dense(rows):
    vecs = [{j: x for j, x in enumerate(r) if x} for r in rows]
    assert rank_of_vectors(vecs) == ExactMatrix(rows).rank()
    ech = SparseEchelon()
    for v in vecs:
        ech.add(v)
    # any combination is expressible and reconstructs exactly
    target: dict = {}
    for i, v in enumerate(vecs):
        for k, x in v.items():
            target[k] = target.get(k, 0) + (i + 1) * x
    coeffs = ech.express(target)
    assert coeffs is not None
    rebuilt: dict = {}
    for i, c in coeffs.items():
        for k, x in vecs[i].items():
            rebuilt[k] = rebuilt.get(k, 0) + c * x
    assert {k: v for k, v in rebuilt.items() if v} == {k: v for k, v in target.items() if v}


def test_sparse_echelon_tuple_keys_and_outside_span():
    ech = SparseEchelon()
    assert ech.add({("a", 1): 1, ("b", 2): 1})
    assert not ech.add({("a", 1): 2, ("b", 2): 2})
    assert ech.express({("a", 1): 1}) is None
    assert ech.contains({("a", 1): 3, ("b", 2): 3})


def test_sparse_kernel():
    cols = [{0: 1}, {0: 1}, {1: 1}]
    (k,) = sparse_kernel(cols)
    assert k in ([1, -1, 0], [-1, 1, 0])
