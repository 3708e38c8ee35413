import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covres.partitions import (
    EMPTY,
    FrobeniusCoords,
    Partition,
    conjugate,
    enumerate_box,
    enumerate_q_minus1,
    from_frobenius,
    in_q_minus1,
    is_admissible,
    is_border_strip,
    is_subset2,
    is_subset2_diagram,
    parse_partition,
    partitions_of,
    remove_border_strip,
    sigma_conjugate,
    to_frobenius,
)

partitions = st.lists(st.integers(1, 8), max_size=8).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_partition_rejects_increasing_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_parse_partition_empty_spellings():
    assert parse_partition("0") == EMPTY
    assert parse_partition("") == EMPTY
    assert parse_partition("3,1,1") == (3, 1, 1)


def test_conjugate_examples():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate(EMPTY) == EMPTY
    assert conjugate((3, 1)) == (2, 1, 1)


@given(partitions)
def test_conjugate_is_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size


def test_frobenius_examples():
    assert to_frobenius((1, 1)) == FrobeniusCoords((1,), (2,))
    assert to_frobenius((2, 1, 1)) == FrobeniusCoords((2,), (3,))
    assert to_frobenius((2, 2, 2)) == FrobeniusCoords((2, 1), (3, 2))


def test_frobenius_round_trip_exhaustive():
    for n in range(31):
        for p in partitions_of(n):
            assert from_frobenius(to_frobenius(p)) == p


def test_from_frobenius_rejects_bad_coordinates():
    with pytest.raises(ValueError):
        FrobeniusCoords((1, 2), (2, 1))
    with pytest.raises(ValueError):
        FrobeniusCoords((2,), (2, 1))


def test_enumerate_box():
    assert enumerate_box(1, 1) == [EMPTY, (1,)]
    assert enumerate_box(2, 2) == [EMPTY, (1,), (2,), (1, 1), (2, 1), (2, 2)]
    assert len(enumerate_box(2, 3)) == 10


def test_enumerate_q_minus1():
    assert enumerate_q_minus1(2, 2) == [(1, 1)]
    assert enumerate_q_minus1(4, 3) == [(2, 1, 1)]
    assert enumerate_q_minus1(6, 3) == [(2, 2, 2)]
    assert enumerate_q_minus1(6) == [(3, 1, 1, 1), (2, 2, 2)]
    assert enumerate_q_minus1(0) == [EMPTY]
    assert enumerate_q_minus1(5) == []


def test_q_minus1_matches_definition():
    for m in range(0, 15, 2):
        brute = [p for p in partitions_of(m) if in_q_minus1(p)]
        assert sorted(enumerate_q_minus1(m)) == sorted(brute)


def test_border_strip_examples():
    rest, strip = remove_border_strip((2, 2, 2, 2, 2, 2), 4)
    assert rest == (2, 2, 2, 1, 1) and strip.columns == 2
    for a in range(1, 4):
        for b in range(1, a + 1):
            rest, strip = remove_border_strip((a, b, 1, 1), 2)
            assert rest == (a, b) and strip.columns == 1
    assert remove_border_strip((3,), 5) is None
    with pytest.raises(ValueError):
        remove_border_strip((3,), 0)


def _brute_force_strip(p, size):
    """All rim strips of the given size whose lowest-leftmost cell is (l(p), 1)."""
    out = []
    cells = set(p.cells())
    for q in partitions_of(p.size - size):
        if not p.contains(q):
            continue
        skew = cells - set(q.cells())
        if (len(p), 1) in skew and is_border_strip(skew):
            out.append(q)
    return out


@settings(max_examples=200, deadline=None)
@given(partitions, st.integers(1, 10))
def test_border_strip_against_brute_force(p, size):
    res = remove_border_strip(p, size)
    brute = _brute_force_strip(p, size) if p else []
    if res is None:
        assert brute == []
    else:
        rest, strip = res
        assert brute == [rest]
        assert is_border_strip(strip.cells)
        assert all(a >= b for a, b in zip(rest, rest[1:]))


def test_subset2_examples():
    assert is_subset2((1, 1), (2, 1, 1))
    assert is_subset2((2, 1, 1), (2, 2, 2))
    with pytest.raises(ValueError):
        is_subset2((1, 1), (2, 2))


def test_subset2_agrees_with_diagram():
    for k in range(1, 7):
        for alpha in enumerate_q_minus1(2 * k, 6):
            for beta in enumerate_q_minus1(2 * k - 2, 6):
                assert is_subset2(beta, alpha) == is_subset2_diagram(beta, alpha), (beta, alpha)


def test_admissible_and_sigma():
    assert is_admissible((1, 1, 1), 4)
    assert sigma_conjugate(EMPTY, 4) == (1, 1, 1, 1)
    assert sigma_conjugate(sigma_conjugate((2, 1), 4), 4) == (2, 1)
    with pytest.raises(ValueError):
        sigma_conjugate((1, 1, 1, 1, 1), 4)


def test_sigma_is_involution_on_admissible():
    for r in (3, 4, 5, 6):
        for p in enumerate_box(r, 6):
            if is_admissible(p, r):
                q = sigma_conjugate(p, r)
                assert is_admissible(q, r)
                assert sigma_conjugate(q, r) == p
