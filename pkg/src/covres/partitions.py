"""Partitions, Frobenius coordinates, border strips and the index sets built from them.

Rows and columns of Young diagrams are 1-indexed throughout; a cell is a
``(row, col)`` pair in English notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.  The empty partition is ``Partition()``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (1-indexed), zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i, row in enumerate(self) for j in range(row)]

    def contains(self, other: "Partition") -> bool:
        other = Partition(other)
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def to_json(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")" if self else "∅"

    __str__ = __repr__


EMPTY = Partition()


def canonical_key(p: Partition):
    """Sort key: graded by size, then lexicographically descending."""
    return (sum(p), tuple(-x for x in p))


def sort_canonical(parts: Iterable[Partition]) -> list[Partition]:
    return sorted((Partition(p) for p in parts), key=canonical_key)


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1,1"``; ``""`` and ``"0"`` give the empty partition."""
    text = text.strip()
    if text in ("", "0", "()", "[]"):
        return EMPTY
    return Partition(int(x) for x in text.strip("()[]").split(",") if x.strip())


def conjugate(p: Iterable[int]) -> Partition:
    p = Partition(p)
    if not p:
        return EMPTY
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def partitions_of(n: int, max_len: int | None = None, max_part: int | None = None) -> list[Partition]:
    """All partitions of n within the bounds, lexicographically descending."""
    return [Partition(p) for p in _partitions_of(n, max_len, max_part if max_part is not None else n)]


@lru_cache(maxsize=None)
def _partitions_of(n: int, max_len: int | None, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    rest_len = None if max_len is None else max_len - 1
    for first in range(min(n, max_part), 0, -1):
        for tail in _partitions_of(n - first, rest_len, first):
            out.append((first,) + tail)
    return tuple(out)


def enumerate_box(rows: int, cols: int) -> list[Partition]:
    """B_{rows,cols}: partitions with at most ``rows`` parts, each at most ``cols``."""
    if rows < 0 or cols < 0:
        raise ValueError("box dimensions must be nonnegative")
    out = []
    for n in range(rows * cols + 1):
        out.extend(partitions_of(n, rows, cols))
    return out


# --- Frobenius coordinates -------------------------------------------------


@dataclass(frozen=True)
class FrobeniusCoords:
    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self):
        if len(self.arms) != len(self.legs):
            raise ValueError("arms and legs must have equal length")
        for seq in (self.arms, self.legs):
            if any(a <= b for a, b in zip(seq, seq[1:])) or any(x < 1 for x in seq):
                raise ValueError(f"coordinates must be strictly decreasing positive: {seq}")


def to_frobenius(p: Iterable[int]) -> FrobeniusCoords:
    p = Partition(p)
    pt = conjugate(p)
    u = sum(1 for i, x in enumerate(p, start=1) if x >= i)
    return FrobeniusCoords(
        tuple(p[i] - i for i in range(u)),
        tuple(pt[i] - i for i in range(u)),
    )


def from_frobenius(f: FrobeniusCoords) -> Partition:
    # Rebuild row by row: the first u rows come from the arms, the rest from
    # counting legs that reach below the diagonal.
    u = len(f.arms)
    rows = [f.arms[i] + i for i in range(u)]
    depth = f.legs[0] if u else 0
    for i in range(u + 1, depth + 1):
        rows.append(sum(1 for t in range(u) if f.legs[t] + t >= i))
    p = Partition(rows)
    if to_frobenius(p) != f:
        raise ValueError(f"{f} does not describe a partition")
    return p


def in_q_minus1(p: Iterable[int]) -> bool:
    f = to_frobenius(p)
    return all(b == a + 1 for a, b in zip(f.arms, f.legs))


def enumerate_q_minus1(m: int, max_len: int | None = None) -> list[Partition]:
    """Q_{-1}(m) filtered by length; these have Frobenius form (a; a+1)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m % 2:
        return []
    out = []
    for arms in _strict_partitions(m // 2):
        p = from_frobenius(FrobeniusCoords(arms, tuple(a + 1 for a in arms)))
        if max_len is None or len(p) <= max_len:
            out.append(p)
    return sort_canonical(out)


def _strict_partitions(n: int, bound: int | None = None) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    top = n if bound is None else min(n, bound - 1)
    for first in range(top, 0, -1):
        for rest in _strict_partitions(n - first, first):
            yield (first,) + rest


# --- border strips ---------------------------------------------------------


@dataclass(frozen=True)
class BorderStrip:
    cells: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def columns(self) -> int:
        return len({c for _, c in self.cells})

    @property
    def rows(self) -> int:
        return len({r for r, _ in self.cells})


def is_border_strip(cells: Iterable[tuple[int, int]]) -> bool:
    """Connected (edge-adjacent) and free of 2x2 squares."""
    cells = set(cells)
    if not cells:
        return False
    for r, c in cells:
        if {(r, c + 1), (r + 1, c), (r + 1, c + 1)} <= cells:
            return False
    start = next(iter(cells))
    seen, stack = {start}, [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def remove_border_strip(p: Iterable[int], strip_size: int) -> tuple[Partition, BorderStrip] | None:
    """Remove the rim path of ``strip_size`` cells starting at the first box of the bottom row.

    Returns None when the path runs off the diagram or its removal does not
    leave a partition.
    """
    if strip_size <= 0:
        raise ValueError("strip_size must be positive")
    p = Partition(p)
    if not p:
        return None
    i, j = len(p), 1
    cells = []
    while True:
        cells.append((i, j))
        if len(cells) == strip_size:
            break
        if j < p[i - 1]:
            j += 1
        else:
            i -= 1
            if i < 1:
                return None
    removed = [0] * len(p)
    for r, c in cells:
        removed[r - 1] += 1
    rest = [a - b for a, b in zip(p, removed)]
    # each row must lose a suffix of its cells
    for r, c in cells:
        if c <= rest[r - 1]:
            return None
    if any(a < b for a, b in zip(rest, rest[1:])):
        return None
    return Partition(rest), BorderStrip(tuple(cells))


# --- the subset-by-two relation ---------------------------------------------


def is_subset2(beta: Iterable[int], alpha: Iterable[int]) -> bool:
    """beta ⊂₂ alpha for alpha in Q_{-1}(2k), beta in Q_{-1}(2k-2), via Frobenius arms."""
    alpha, beta = Partition(alpha), Partition(beta)
    if not in_q_minus1(alpha) or not in_q_minus1(beta):
        raise ValueError(f"{beta}, {alpha} must both lie in the Q_-1 family")
    if alpha.size != beta.size + 2:
        raise ValueError(f"sizes {beta.size}, {alpha.size} are not consecutive in Q_-1")
    a = to_frobenius(alpha).arms
    b = to_frobenius(beta).arms
    if len(a) == len(b):
        diff = [x - y for x, y in zip(a, b)]
        return sorted(diff) == [0] * (len(a) - 1) + [1]
    if len(a) == len(b) + 1:
        return a == b + (1,)
    return False


def is_subset2_diagram(beta: Iterable[int], alpha: Iterable[int]) -> bool:
    """Diagrammatic form: beta ⊆ alpha and alpha/beta is not a horizontal domino."""
    alpha, beta = Partition(alpha), Partition(beta)
    if not alpha.contains(beta) or alpha.size != beta.size + 2:
        return False
    skew = sorted(set(alpha.cells()) - set(beta.cells()))
    (r1, c1), (r2, c2) = skew
    return not (r1 == r2 and abs(c1 - c2) == 1)


# --- orthogonal labels --------------------------------------------------------


def is_admissible(p: Iterable[int], r: int) -> bool:
    pt = conjugate(p)
    return pt.part(1) + pt.part(2) <= r


def sigma_conjugate(p: Iterable[int], r: int) -> Partition:
    """Replace the first column length c by r - c."""
    p = Partition(p)
    pt = conjugate(p)
    if pt.part(1) > r:
        raise ValueError(f"{p} has first column longer than r={r}")
    new_first = r - pt.part(1)
    if pt.length > 1 and new_first < pt[1]:
        raise ValueError(f"{p} is not admissible for r={r}")
    cols = [new_first] + list(pt[1:])
    return conjugate(Partition(cols))
