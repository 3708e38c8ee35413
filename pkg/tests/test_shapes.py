import json
from pathlib import Path

import pytest

from covres.partitions import EMPTY, Partition, enumerate_box, is_admissible
from covres.shapes import (
    UNDEFINED,
    Flavor,
    closed_form_shape,
    resolution_shape,
    tau,
    tau_skew,
    tau_sym,
    tilting_summands,
)

FIXTURES = Path(__file__).parent / "fixtures"


def P(*xs):
    return Partition(xs)


def test_tau_skew_examples():
    for a in range(1, 4):
        for b in range(1, a + 1):
            res = tau_skew((a, b, 1, 1), 4)
            assert (res.tau, res.i) == ((a, b), 1)
    res = tau_skew((2, 2, 2, 2, 2, 2), 6)
    assert (res.tau, res.i) == ((2, 2, 2), 3)
    assert [s.columns for s in res.strips] == [2, 1]
    res = tau_skew((1, 1, 1), 4)
    assert res.tau is None and res.i == UNDEFINED


def test_tau_rejects_bad_input():
    with pytest.raises(ValueError):
        tau_skew((1,), 3)
    with pytest.raises(ValueError):
        tau_skew((1, 1, 1, 1, 1), 4)


def test_tau_sym_examples():
    res = tau_sym((1, 1, 1, 1), 4)
    assert res.tau == (1, 1, 1, 1) and len(res.strips) == 1
    for r in (3, 4, 5):
        assert tau_sym((2, 1), r).tau == (2, 1) and tau_sym((2, 1), r).i == 0


def _tau_sym_literal(lam, r):
    """Stepwise transcription of the symmetric rules: strip 2l-r, columns-1, flip on odd count."""
    lam = list(lam)
    count = i = 0
    while 2 * len(lam) > r:
        size = 2 * len(lam) - r
        # walk the rim from the first cell of the bottom row
        row, col, cells = len(lam), 1, []
        while len(cells) < size:
            cells.append((row, col))
            if len(cells) == size:
                break
            if col < lam[row - 1]:
                col += 1
            else:
                row -= 1
                if row == 0:
                    return None, UNDEFINED
        new = list(lam)
        for rr, _ in cells:
            new[rr - 1] -= 1
        if any(c <= new[rr - 1] for rr, c in cells) or any(x < y for x, y in zip(new, new[1:])):
            return None, UNDEFINED
        lam = [x for x in new if x]
        count += 1
        i += len({c for _, c in cells}) - 1
    if count % 2:
        cols = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
        first = r - (cols[0] if cols else 0)
        cols = [first] + cols[1:]
        lam = [sum(1 for x in cols if x > j) for j in range(max(cols))] if any(cols) else []
    return Partition(lam), i


def test_tau_sym_against_literal_transcription():
    res = tau_sym((2, 1, 1), 3)
    assert (res.tau, res.i) == _tau_sym_literal((2, 1, 1), 3)
    for r in (3, 4, 5):
        for lam in enumerate_box(r, 3):
            res = tau_sym(lam, r)
            assert (res.tau, res.i) == _tau_sym_literal(lam, r), lam


def test_shapes_r4():
    for a in range(1, 4):
        for b in range(1, a + 1):
            assert resolution_shape((a, b), 4).terms == {0: [P(a, b)], 1: [P(a, b, 1, 1)]}
        assert resolution_shape((a,), 4).terms == {0: [P(a)]}


def test_shapes_r6():
    for a in range(1, 5):
        for b in range(0, a + 1):
            for c in range(0, b + 1):
                got = resolution_shape((a, b, c), 6).terms
                if c >= 2:
                    want = {0: [P(a, b, c)], 1: [P(a, b, c, 1, 1)], 2: [P(a, b, c, 2, 1, 1)], 3: [P(a, b, c, 2, 2, 2)]}
                elif c == 1:
                    want = {0: [P(a, b, 1)], 1: [P(a, b, 1, 1, 1)]}
                elif b >= 1:
                    want = {0: [P(a, b)], 1: [P(a, b, 1, 1, 1, 1)]}
                else:
                    want = {0: [P(a)]}
                assert got == want, (a, b, c)


def test_resolution_round_trip_and_first_rows():
    for flavor, rs in ((Flavor.SKEW, (2, 4, 6)), (Flavor.SYMMETRIC, (2, 3, 4, 5))):
        for r in rs:
            for chi in enumerate_box(r // 2 if flavor is Flavor.SKEW else r, 3):
                if flavor is Flavor.SYMMETRIC and not is_admissible(chi, r):
                    continue
                shape = resolution_shape(chi, r, flavor)
                assert shape.terms[0] == [chi]
                for t, lam in shape.summands():
                    res = tau(lam, r, flavor)
                    assert (res.tau, res.i) == (chi, t)
                    assert lam.part(1) == chi.part(1)
                    if flavor is Flavor.SKEW:
                        assert lam.part(2) == chi.part(2)


def test_resolution_shape_rejects_bad_chi():
    with pytest.raises(ValueError):
        resolution_shape((1, 1, 1), 4)
    with pytest.raises(ValueError):
        resolution_shape((2, 2), 3, "symmetric")


def test_closed_form_shape():
    assert closed_form_shape((2, 1), 4).terms == {0: [P(2, 1)], 1: [P(2, 1, 1, 1)]}
    assert closed_form_shape((2, 2, 2), 6).terms == resolution_shape((2, 2, 2), 6).terms
    assert closed_form_shape((1,), 2).terms == {0: [P(1)]}
    with pytest.raises(ValueError):
        closed_form_shape((1, 1), 6)


def test_closed_form_agrees_with_resolution():
    for r in (4, 6):
        for chi in enumerate_box(r // 2, 4):
            if chi.part(r // 2) >= r // 2 - 1:
                assert closed_form_shape(chi, r).terms == resolution_shape(chi, r).terms


def test_tilting_examples():
    assert tilting_summands(5, 2, "skew", "main") == [EMPTY, P(1)]
    assert tilting_summands(5, 2, "skew", "big") == [EMPTY, P(1), P(2), P(3)]
    assert tilting_summands(4, 2, "symmetric", "main") == [EMPTY, P(1), P(2), P(1, 1)]
    with pytest.raises(ValueError):
        tilting_summands(4, 4)


def test_tilting_fixture():
    data = json.loads((FIXTURES / "tilting.json").read_text())
    for flavor, cases in data.items():
        for case in cases:
            for variant in ("main", "big"):
                got = [p.to_json() for p in tilting_summands(case["n"], case["r"], flavor, variant)]
                assert got == case[variant], (flavor, case["n"], case["r"], variant)


def test_shape_json():
    doc = resolution_shape((3, 1), 4).to_json()
    assert doc == {"chi": [3, 1], "r": 4, "flavor": "skew", "terms": {"0": [[3, 1]], "1": [[3, 1, 1, 1]]}}
