import copy
from fractions import Fraction
from math import comb

import pytest

from covres.characters import gl_dim
from covres.partitions import Partition, enumerate_q_minus1
from covres.pieri import (
    composite_on_hw,
    hw_vector,
    koszul_phi,
    nonvanishing_pairs,
    lower_wedge,
    middle_sets,
    project_isotypic,
    raise_wedge,
    solve_pieri_system,
    verify_complex_homology,
    verify_nonvanishing,
    verify_system,
    verify_uniqueness,
    wedge_decomposition,
    wedge_multiply,
    wedge_weight,
)


def P(*xs):
    return Partition(xs)


def test_hw_vector_examples():
    assert hw_vector((1, 1), 2) == {(0,): 1}
    # pairs of k^4 in lex order: 01 02 03 12 13 23
    assert hw_vector((2, 1, 1), 4) == {(0, 1): 1}
    # pairs of k^6: 01=0 02=1 ... 12=5
    assert hw_vector((2, 2, 2), 6) == {(0, 1, 5): 1}
    with pytest.raises(ValueError):
        hw_vector((2, 2), 4)
    with pytest.raises(ValueError):
        hw_vector((2, 1, 1), 2)


def test_hw_vectors_are_highest():
    for n in range(2, 7):
        for k in range(5):
            for alpha in enumerate_q_minus1(2 * k, n):
                u = hw_vector(alpha, n)
                assert all(not raise_wedge(u, a, n) for a in range(n - 1))
                assert wedge_weight(next(iter(u)), n) == alpha.padded(n)


def test_koszul_examples():
    # pairs of k^3: 01=0 02=1 12=2;  v12 ^ v13 is (0, 1) in 1-indexed notation
    assert koszul_phi({(0, 1): 1}) == {(0, (1,)): 1, (1, (0,)): -1}
    assert koszul_phi({(2,): 1}) == {(2, ()): 1}


def test_koszul_identity():
    from itertools import combinations

    for n in range(2, 6):
        npairs = n * (n - 1) // 2
        for k in range(1, min(4, npairs) + 1):
            for subset in combinations(range(npairs), k):
                vec = {subset: Fraction(1)}
                assert wedge_multiply(koszul_phi(vec)) == {subset: k}


def test_wedge_decomposition_dimensions():
    for n in range(2, 7):
        for k in range(5):
            labels = enumerate_q_minus1(2 * k, n)
            assert sum(gl_dim(a, n) for a in labels) == comb(n * (n - 1) // 2, k)


def test_project_isotypic():
    n = 4
    u = hw_vector((2, 1, 1), n)
    assert project_isotypic(u, (2, 1, 1), n) == 1
    # weight (1,1,1,1) in the exterior square of wedge2: S^(2,1,1) part and nothing else,
    # while v01 ^ v23 - v02 ^ v13 style vectors are checked through the decomposition
    dec = wedge_decomposition(1, n)
    low = lower_wedge(hw_vector((1, 1), n), 1, n)
    assert set(dec.decompose(low)) == {P(1, 1)}
    with pytest.raises(ValueError):
        project_isotypic(low, (1, 1), n)


def test_project_other_summand_is_zero():
    n = 6
    dec = wedge_decomposition(3, n)
    weight = (2, 2, 2, 0, 0, 0)
    for v in dec.summand_basis(P(3, 1, 1, 1), weight):
        assert project_isotypic(v, (2, 2, 2), n) == 0


def test_nonvanishing_examples():
    assert verify_nonvanishing((2, 1, 1), (1, 1), 4)
    assert verify_nonvanishing((2, 2, 2), (2, 1, 1), 6)
    with pytest.raises(ValueError):
        verify_nonvanishing((2, 2, 2), (1, 1), 6)


def test_distinguished_term_is_plus_minus_u_beta():
    # removing the box strictly below the diagonal that ends the last arm gives u_beta
    for alpha, beta, n in nonvanishing_pairs(8, 6):
        u_beta = hw_vector(beta, n)
        found = False
        for (p, rest), c in koszul_phi(hw_vector(alpha, n)).items():
            if rest in u_beta:
                found = True
        assert found, (alpha, beta, n)


def test_single_edge_systems():
    for chi in ((1, 1), (2, 1), (3, 3)):
        s = solve_pieri_system(chi, 4)
        assert len(s.edges) == 1 and verify_system(s)


def test_rejects_outside_hypothesis():
    with pytest.raises(ValueError):
        solve_pieri_system((1,), 4)
    with pytest.raises(ValueError):
        solve_pieri_system((1, 1), 5)


def test_uniqueness_examples():
    s = solve_pieri_system((2, 2, 2), 6)
    scaled = copy.copy(s)
    scaled.edges = {e: 7 * v for e, v in s.edges.items()}
    assert verify_uniqueness((2, 2, 2), 6, s, scaled)
    negated = copy.copy(s)
    negated.edges = dict(s.edges)
    first = next(iter(negated.edges))
    negated.edges[first] = -negated.edges[first]
    assert verify_uniqueness((2, 2, 2), 6, s, negated)
    assert verify_uniqueness((2, 2, 2), 6, s, solve_pieri_system((2, 2, 2), 6, seed=11))


def test_set_a2_singletons_vanish():
    s = solve_pieri_system((2, 2, 2), 6)
    for (pi, sigma), mids in middle_sets(s.chi, 6).items():
        assert len(mids) == 1
        assert composite_on_hw(pi, mids[0], sigma, s.maps, 6) == {}


def test_homology_examples():
    rep = verify_complex_homology((1, 1), 4, 6)
    assert rep.passed
    assert [d.detail.split()[0] for d in rep.degrees][2] == "H=[6,"
    assert verify_complex_homology((2, 1), 4, 6).passed
    with pytest.raises(ValueError):
        verify_complex_homology((1, 1), 4, 9)


def test_json_scalars_are_strings():
    doc = solve_pieri_system((1, 1), 4).to_json()
    assert doc["edges"][0]["scalar"] == "1/1"


@pytest.mark.slow
def test_square_relations_r8():
    chi = (3, 3, 3, 3)
    s = solve_pieri_system(chi, 8)
    squares = {k: v for k, v in middle_sets(P(*chi), 8).items() if len(v) == 2}
    assert len(squares) == 1
    assert verify_system(s)
    assert verify_uniqueness(chi, 8, s, solve_pieri_system(chi, 8, seed=5))
    broken = copy.copy(s)
    broken.edges = dict(s.edges)
    off_tree = next(e for e in s.edges if e not in s.tree)
    broken.edges[off_tree] = -broken.edges[off_tree]
    assert not verify_system(broken)
    assert not verify_uniqueness(chi, 8, s, broken)
