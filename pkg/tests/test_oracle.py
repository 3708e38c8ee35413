import pytest

from covres.oracle import (
    EnvelopeError,
    FormSpace,
    cross_check,
    invariant_dimension,
    orthogonal_irrep,
    schur_module,
    symplectic_irrep,
    trivial_closed_form,
)
from covres.partitions import EMPTY


def test_schur_module_dims():
    assert schur_module((1, 1), 2).dimension == 1
    assert schur_module((2, 1), 3).dimension == 8
    assert schur_module((1, 1, 1), 2).dimension == 0


def test_symplectic_irrep_dims():
    assert symplectic_irrep((1, 1), 4).dimension == 5
    assert symplectic_irrep((1,), 4).dimension == 4
    assert symplectic_irrep((2, 1), 4).dimension == 16


def test_orthogonal_irrep_dims():
    assert orthogonal_irrep((2,), 3).dimension == 5
    assert orthogonal_irrep((1, 1), 3).dimension == 3


def test_form_space_roots_preserve_form():
    for r, kind in ((2, "sp"), (4, "sp"), (3, "o"), (4, "o")):
        assert FormSpace(r, kind).roots


def test_invariant_dimension_examples():
    assert invariant_dimension(EMPTY, 4, 2, "skew") == 6
    assert invariant_dimension((1,), 4, 1, "skew") == 4
    assert invariant_dimension((1,), 4, 2, "skew") == 0


def test_trivial_degree_four_is_21():
    assert invariant_dimension(EMPTY, 4, 4, "skew") == 21
    report = cross_check(EMPTY, 4, 4, "skew")
    assert report.passed
    assert [d.detail for d in report.degrees][4] == "oracle=21 predicted=21"


def test_trivial_closed_form():
    for flavor, r in (("skew", 2), ("skew", 4), ("symmetric", 2), ("symmetric", 3)):
        for d in range(5):
            assert invariant_dimension(EMPTY, r, d, flavor) == trivial_closed_form(r, d, flavor)


def test_weight_zero_restriction_is_harmless():
    for chi, r, d, flavor in ((EMPTY, 2, 2, "skew"), ((1,), 2, 1, "skew"), ((1,), 3, 1, "symmetric")):
        assert invariant_dimension(chi, r, d, flavor, weight_zero=True) == invariant_dimension(
            chi, r, d, flavor, weight_zero=False
        )


def test_cross_check_examples():
    assert cross_check((1, 1), 4, 3, "skew").passed
    assert cross_check((1,), 3, 3, "symmetric").passed


def test_envelope():
    with pytest.raises(EnvelopeError):
        invariant_dimension(EMPTY, 6, 2, "skew")
    with pytest.raises(EnvelopeError):
        invariant_dimension(EMPTY, 4, 5, "skew")
