import random
from itertools import combinations, combinations_with_replacement
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covres.characters import (
    LaurentCharacter,
    NotACharacter,
    SchurExpansion,
    char_so,
    char_sp,
    gl_dim,
    kostka,
    o_dimension,
    peel,
    schur_monomials,
    sp_dimension,
    sym_algebra_slice,
    sym_algebra_support,
    wedge_of_wedge2_character,
)
from covres.partitions import EMPTY, Partition, conjugate, enumerate_q_minus1, partitions_of


def P(*xs):
    return Partition(xs)


def test_schur_monomials_examples():
    assert schur_monomials(P(1), 3).terms == {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}
    assert schur_monomials(P(1, 1), 2).terms == {(1, 1): 1}
    assert schur_monomials(P(2, 1, 1), 4).evaluate_at_one() == 15
    assert not schur_monomials(P(1, 1, 1), 2)


def test_gl_dim_matches_monomial_count():
    for n in range(1, 5):
        for lam in partitions_of(5, n):
            assert gl_dim(lam, n) == schur_monomials(lam, n).evaluate_at_one()


def test_kostka_small():
    assert kostka(P(2, 1), (1, 1, 1)) == 2
    assert kostka(P(3), (1, 1, 1)) == 1
    assert kostka(P(1, 1, 1), (2, 1)) == 0


def test_char_sp_examples():
    assert char_sp(EMPTY, 2).terms == {(0, 0): 1}
    assert char_sp(P(1, 1), 2).evaluate_at_one() == 5
    assert char_sp(P(2), 2).evaluate_at_one() == 10
    with pytest.raises(ValueError):
        char_sp(P(1, 1, 1), 2)


def test_char_sp_weyl_symmetry():
    for m in range(1, 4):
        for size in range(7):
            for mu in partitions_of(size, m):
                ch = char_sp(mu, m)
                assert ch.evaluate_at_one() == sp_dimension(mu, m)
                assert ch.substitute(inverted=(0,)) == ch
                if m > 1:
                    perm = list(range(m))
                    perm[0], perm[1] = 1, 0
                    assert ch.substitute(perm) == ch


def test_char_so_dimensions():
    # SO(3): V has dim 3, S^2_0 V dim 5; SO(4) vector dim 4
    assert char_so((1,), 3).evaluate_at_one() == 3
    assert char_so((2,), 3).evaluate_at_one() == 5
    assert char_so((1, 0), 4).evaluate_at_one() == 4
    assert char_so((1, 1), 4).evaluate_at_one() == 3


def test_o_dimensions():
    assert o_dimension(EMPTY, 3) == 1
    assert o_dimension(P(1, 1, 1), 3) == 1
    assert o_dimension(P(1, 1), 4) == 6
    assert o_dimension(P(1, 1, 1, 1), 4) == 1


def test_peel_examples():
    assert peel(char_sp(P(2, 1), 2), "sp", 2) == {P(2, 1): 1}
    restricted = LaurentCharacter(2, {})
    # s_(1,1)(z1, 1/z1, z2, 1/z2)
    for w, c in schur_monomials(P(1, 1), 4).terms.items():
        e = (w[0] - w[1], w[2] - w[3])
        restricted = restricted + LaurentCharacter(2, {e: c})
    assert peel(restricted, "sp", 2) == {P(1, 1): 1, EMPTY: 1}


def test_peel_rejects_non_characters():
    with pytest.raises(NotACharacter):
        peel(LaurentCharacter(2, {(1, 0): 1}), "sp", 2)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_peel_recovers_random_combinations(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 3)
    labels = [mu for size in range(7) for mu in partitions_of(size, m)]
    combo = {mu: rng.randint(1, 3) for mu in rng.sample(labels, rng.randint(1, 4))}
    total = LaurentCharacter(m, {})
    for mu, c in combo.items():
        total = total + char_sp(mu, m).scale(c)
    assert peel(total, "sp", m) == combo


def test_wedge_of_wedge2_examples():
    assert wedge_of_wedge2_character(1, 3) == {P(1, 1): 1}
    assert wedge_of_wedge2_character(2, 4) == {P(2, 1, 1): 1}
    assert wedge_of_wedge2_character(3, 6) == {P(2, 2, 2): 1, P(3, 1, 1, 1): 1}


def test_wedge_of_wedge2_dimension_bookkeeping():
    for n in range(1, 7):
        for k in range(5):
            exp = wedge_of_wedge2_character(k, n)
            assert exp.dimension(n) == comb(n * (n - 1) // 2, k)
            assert set(exp) == set(enumerate_q_minus1(2 * k, n))


def _brute_sym_slice(gen, d, n):
    """Character of Sym^d of the quadratic monomials, by listing multisets."""
    gens = list(combinations(range(n), 2)) if gen == "wedge2" else list(combinations_with_replacement(range(n), 2))
    terms: dict = {}
    for multiset in combinations_with_replacement(gens, d):
        w = [0] * n
        for i, j in multiset:
            w[i] += 1
            w[j] += 1
        terms[tuple(w)] = terms.get(tuple(w), 0) + 1
    return SchurExpansion(peel(LaurentCharacter(n, terms), "gl", n))


def test_sym_algebra_examples():
    assert sym_algebra_slice("wedge2", 1, 4) == {P(1, 1): 1}
    assert sym_algebra_slice("wedge2", 2, 4) == {P(2, 2): 1, P(1, 1, 1, 1): 1}
    assert sym_algebra_slice("sym2", 2, 2) == {P(4): 1, P(2, 2): 1}


def test_sym_algebra_against_brute_force():
    for gen in ("wedge2", "sym2"):
        for n in range(2, 5):
            for d in range(4):
                assert sym_algebra_slice(gen, d, n) == _brute_sym_slice(gen, d, n)


def test_sym_algebra_support():
    for d in range(7):
        got = set(sym_algebra_slice("wedge2", d, 2 * d or 1))
        assert got == {p for p in partitions_of(2 * d) if all(x % 2 == 0 for x in conjugate(p))}
        assert got == set(sym_algebra_support("wedge2", d, 2 * d or 1))


def test_schur_expansion_json_and_arith():
    a = SchurExpansion({(2,): 1, (1, 1): 2})
    b = SchurExpansion({(1, 1): 2})
    assert (a - b) == {P(2): 1}
    assert a.to_json() == [{"partition": [2], "mult": 1}, {"partition": [1, 1], "mult": 2}]
    assert a.dimension(3) == 6 + 2 * 3
