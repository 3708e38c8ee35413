"""Border-strip reduction and the resolution shapes it produces.

A partition lam with ``l(lam) > r/2`` is reduced by repeatedly peeling the rim
strip that starts at the first box of its bottom row; the strip size is a
function of the current length only.  The reduction ends at a partition
``tau`` of length at most ``r/2`` (or fails), and the summed strip
contributions give the homological degree ``i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .partitions import (
    BorderStrip,
    Partition,
    enumerate_box,
    enumerate_q_minus1,
    is_admissible,
    remove_border_strip,
    sigma_conjugate,
    sort_canonical,
)


class Flavor(str, Enum):
    SKEW = "skew"
    SYMMETRIC = "symmetric"

    @classmethod
    def parse(cls, value) -> "Flavor":
        return value if isinstance(value, cls) else cls(str(value).lower())


@dataclass(frozen=True)
class TauResult:
    tau: Partition | None
    i: float
    strips: tuple[BorderStrip, ...] = ()

    @property
    def defined(self) -> bool:
        return self.tau is not None


UNDEFINED = math.inf


def _check_r(r: int, flavor: Flavor):
    if r < 1:
        raise ValueError("r must be positive")
    if flavor is Flavor.SKEW and r % 2:
        raise ValueError(f"skew flavor needs r even, got r={r}")


def tau_skew(lam: Iterable[int], r: int) -> TauResult:
    _check_r(r, Flavor.SKEW)
    lam = Partition(lam)
    if lam.length > r:
        raise ValueError(f"l({lam}) exceeds r={r}")
    strips, i = [], 0
    while 2 * lam.length > r:
        size = 2 * lam.length - r - 2
        if size <= 0:
            return TauResult(None, UNDEFINED, tuple(strips))
        res = remove_border_strip(lam, size)
        if res is None:
            return TauResult(None, UNDEFINED, tuple(strips))
        lam, strip = res
        strips.append(strip)
        i += strip.columns
    return TauResult(lam, i, tuple(strips))


def tau_sym(lam: Iterable[int], r: int) -> TauResult:
    """Symmetric-matrix variant: strips of size 2l-r, columns-1 per strip, final sigma flip on odd count."""
    _check_r(r, Flavor.SYMMETRIC)
    lam = Partition(lam)
    if lam.length > r:
        raise ValueError(f"l({lam}) exceeds r={r}")
    strips, i = [], 0
    while 2 * lam.length > r:
        res = remove_border_strip(lam, 2 * lam.length - r)
        if res is None:
            return TauResult(None, UNDEFINED, tuple(strips))
        lam, strip = res
        strips.append(strip)
        i += strip.columns - 1
    if len(strips) % 2:
        lam = sigma_conjugate(lam, r)
    assert is_admissible(lam, r), (lam, r)
    return TauResult(lam, i, tuple(strips))


def tau(lam: Iterable[int], r: int, flavor) -> TauResult:
    return tau_skew(lam, r) if Flavor.parse(flavor) is Flavor.SKEW else tau_sym(lam, r)


@dataclass
class ResolutionShape:
    """Homological degree -> summands S^lam Q of the free module in that degree."""

    chi: Partition
    r: int
    flavor: Flavor
    terms: dict[int, list[Partition]] = field(default_factory=dict)
    t_max: int | None = None

    def summands(self):
        for t in sorted(self.terms):
            for lam in self.terms[t]:
                yield t, lam

    def to_json(self) -> dict:
        return {
            "chi": self.chi.to_json(),
            "r": self.r,
            "flavor": self.flavor.value,
            "terms": {str(t): [p.to_json() for p in self.terms[t]] for t in sorted(self.terms)},
        }


def _strip_additions(mu: Partition, length: int, size: int) -> list[Partition]:
    """Partitions lam of the given length whose forced strip removal gives back mu."""
    found = []

    def extend(rows: list[int], budget: int):
        i = len(rows) + 1
        if i > length:
            if budget == 0:
                lam = Partition(rows)
                res = remove_border_strip(lam, size)
                if res is not None and res[0] == mu:
                    found.append(lam)
            return
        base = mu.part(i)
        # rows below mu's length need one new box each
        reserve = sum(1 for k in range(i + 1, length + 1) if mu.part(k) == 0)
        lo = max(base, 1)
        hi = base + budget - reserve
        if rows:
            hi = min(hi, rows[-1])
        for v in range(lo, hi + 1):
            extend(rows + [v], budget - (v - base))

    extend([], size)
    return found


def _chains(base: Partition, r: int, flavor: Flavor):
    """Everything that reduces to ``base``, with (degree, number of strips)."""
    frontier = [(base, 0, 0)]
    seen = []
    while frontier:
        mu, t, n = frontier.pop()
        seen.append((mu, t, n))
        start = max(mu.length, r // 2) + 1
        for length in range(start, r + 1):
            if flavor is Flavor.SKEW:
                size = 2 * length - r - 2
            else:
                size = 2 * length - r
            if size <= 0:
                continue
            for lam in _strip_additions(mu, length, size):
                strip = remove_border_strip(lam, size)[1]
                gain = strip.columns if flavor is Flavor.SKEW else strip.columns - 1
                frontier.append((lam, t + gain, n + 1))
    return seen


def resolution_shape(chi: Iterable[int], r: int, flavor="skew", t_max: int | None = None) -> ResolutionShape:
    """The lam with (tau(lam), i(lam)) = (chi, t), grouped by t.

    Computed by inverse search from the base partition and re-checked by
    forward reduction of every candidate.
    """
    flavor = Flavor.parse(flavor)
    _check_r(r, flavor)
    chi = Partition(chi)
    bases: list[tuple[Partition, int]] = []
    if flavor is Flavor.SKEW:
        if 2 * chi.length > r:
            raise ValueError(f"skew flavor needs l(chi) <= r/2, got {chi} with r={r}")
        bases.append((chi, 0))
    else:
        if chi.length > r or not is_admissible(chi, r):
            raise ValueError(f"{chi} is not admissible for r={r}")
        if 2 * chi.length <= r:
            bases.append((chi, 0))
        flipped = sigma_conjugate(chi, r)
        if 2 * flipped.length <= r:
            bases.append((flipped, 1))

    terms: dict[int, set[Partition]] = {}
    for base, parity in bases:
        for lam, t, n in _chains(base, r, flavor):
            if n % 2 != parity and flavor is Flavor.SYMMETRIC:
                continue
            if t_max is not None and t > t_max:
                continue
            terms.setdefault(t, set()).add(lam)

    for t, lams in terms.items():
        for lam in lams:
            res = tau(lam, r, flavor)
            if res.tau != chi or res.i != t:
                raise AssertionError(f"round trip failed for {lam}: {res.tau}, {res.i} != {chi}, {t}")
            if lam.part(1) != chi.part(1):
                raise AssertionError(f"{lam} breaks lam_1 = chi_1 for chi={chi}")
            if flavor is Flavor.SKEW and lam.part(2) != chi.part(2):
                raise AssertionError(f"{lam} breaks lam_2 = chi_2 for chi={chi}")
    return ResolutionShape(chi, r, flavor, {t: sort_canonical(terms[t]) for t in sorted(terms)}, t_max)


def weight_concat(delta: Partition, mu: Partition, r: int) -> tuple[int, ...]:
    """(delta|mu): the two halves padded to r/2 entries each."""
    half = r // 2
    return Partition(delta).padded(half) + Partition(mu).padded(half)


def closed_form_check(chi: Partition, r: int):
    if r % 2:
        raise ValueError("closed-form shape needs r even")
    half = r // 2
    if chi.length > half:
        raise ValueError(f"l({chi}) exceeds r/2={half}")
    if chi.part(half) < half - 1:
        raise ValueError(
            f"closed-form shape needs chi_{half} >= {half - 1}; {chi} has chi_{half} = {chi.part(half)}"
        )


def closed_form_shape(chi: Iterable[int], r: int) -> ResolutionShape:
    """Shape with k-th term {(chi|mu) : mu in Q_-1(2k), l(mu) <= r/2}."""
    chi = Partition(chi)
    closed_form_check(chi, r)
    half = r // 2
    terms = {}
    kmax = half * (half - 1) // 2
    for k in range(kmax + 1):
        members = []
        for mu in enumerate_q_minus1(2 * k, half):
            w = weight_concat(chi, mu, r)
            assert all(a >= b for a, b in zip(w, w[1:])), w
            members.append(Partition(w))
        if members:
            terms[k] = sort_canonical(members)
    return ResolutionShape(chi, r, Flavor.SKEW, terms)


def tilting_summands(n: int, r: int, flavor="skew", variant: str = "main") -> list[Partition]:
    flavor = Flavor.parse(flavor)
    _check_r(r, flavor)
    if n <= r:
        raise ValueError(f"need n > r, got n={n}, r={r}")
    if variant not in ("main", "big"):
        raise ValueError(f"variant must be 'main' or 'big', got {variant!r}")
    if flavor is Flavor.SKEW:
        cols = n // 2 - r // 2 if variant == "main" else n - r
        return enumerate_box(r // 2, cols)
    cols = (n - r) // 2 + 1 if variant == "main" else n - r
    return [p for p in enumerate_box(r, cols) if is_admissible(p, r)]
