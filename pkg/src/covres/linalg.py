"""Exact linear algebra over the rationals.

Elimination is fraction-free: every row is scaled to a primitive integer
vector and rows are combined by integer cross-multiplication, so entries stay
integral and small.  Rationals appear only when a kernel basis or a solution
is normalised.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g > 1:
        row = [x // g for x in row]
    # normalise so the leading nonzero entry is positive
    for x in row:
        if x:
            if x < 0:
                row = [-y for y in row]
            break
    return row


def _to_int_row(row: Sequence) -> list[int]:
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    return [int(x * den) for x in row]


class ExactMatrix:
    """Dense rational matrix; ``rows`` is a list of lists of ints or Fractions."""

    def __init__(self, rows: Iterable[Sequence], ncols: int | None = None):
        self.rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_sparse(cls, rows: Iterable[Mapping[int, object]], ncols: int) -> "ExactMatrix":
        dense = []
        for r in rows:
            row = [0] * ncols
            for j, v in r.items():
                row[j] = v
            dense.append(row)
        return cls(dense, ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def __repr__(self):
        return f"ExactMatrix({len(self.rows)}x{self.ncols})"

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != len(other.rows):
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows)) if other.rows else []
        return ExactMatrix(
            [[sum(a * b for a, b in zip(row, col) if a and b) for col in cols] for row in self.rows],
            other.ncols,
        )

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(c) for c in zip(*self.rows)], len(self.rows)) if self.rows else ExactMatrix([], 0)

    def echelon(self) -> tuple[list[list[int]], list[int]]:
        """Fraction-free reduced row echelon form (integer rows) and pivot columns."""
        work = [_primitive(_to_int_row(r)) for r in self.rows]
        work = [r for r in work if any(r)]
        pivots: list[int] = []
        basis: list[list[int]] = []
        for col in range(self.ncols):
            pick = next((i for i, r in enumerate(work) if r[col]), None)
            if pick is None:
                continue
            prow = work.pop(pick)
            p = prow[col]
            nxt = []
            for r in work:
                if r[col]:
                    c = r[col]
                    r = _primitive([p * x - c * y for x, y in zip(r, prow)])
                    if any(r):
                        nxt.append(r)
                else:
                    nxt.append(r)
            work = nxt
            # clear the column in rows already placed
            for k, b in enumerate(basis):
                if b[col]:
                    c = b[col]
                    basis[k] = _primitive([p * x - c * y for x, y in zip(b, prow)])
            basis.append(prow)
            pivots.append(col)
        return basis, pivots

    def rank(self) -> int:
        return len(self.echelon()[1])

    def kernel(self) -> list[list[int]]:
        """Basis of the right kernel as primitive integer vectors."""
        basis, pivots = self.echelon()
        free = [c for c in range(self.ncols) if c not in set(pivots)]
        out = []
        for f in free:
            vec = [Fraction(0)] * self.ncols
            vec[f] = Fraction(1)
            for row, pc in zip(basis, pivots):
                vec[pc] = Fraction(-row[f], row[pc])
            out.append(_primitive(_to_int_row(vec)))
        return out

    def solve(self, rhs: Sequence) -> list[Fraction] | None:
        """One solution of A x = rhs, or None if inconsistent."""
        aug = ExactMatrix([list(r) + [b] for r, b in zip(self.rows, rhs)], self.ncols + 1)
        basis, pivots = aug.echelon()
        if pivots and pivots[-1] == self.ncols:
            return None
        x = [Fraction(0)] * self.ncols
        for row, pc in zip(basis, pivots):
            x[pc] = Fraction(row[-1], row[pc])
        return x


def rank_of_vectors(vectors: Iterable[Mapping]) -> int:
    """Rank of a family of sparse vectors keyed by arbitrary hashable coordinates."""
    ech = SparseEchelon()
    return sum(1 for v in vectors if ech.add(v))


class SparseEchelon:
    """Incrementally maintained echelon basis of sparse rational vectors.

    Vectors are dicts from comparable coordinates (ints or tuples) to numbers.
    Each stored row is the smallest-coordinate pivot form of one inserted
    vector minus earlier ones, and remembers that combination, so a vector in
    the span can be written in terms of the inserted vectors.
    """

    def __init__(self):
        self.rows: list[tuple[object, dict, dict]] = []  # (pivot, row, combination of inputs)
        self.pivot_index: dict = {}
        self.inserted = 0

    def __len__(self):
        return len(self.rows)

    def _reduce(self, vec: Mapping):
        """Return (residual, coeffs) with vec = residual + sum coeffs[i] * input_i."""
        v = {k: Fraction(x) for k, x in vec.items() if x}
        coeffs: dict = {}
        while True:
            hits = [k for k in v if k in self.pivot_index]
            if not hits:
                return v, coeffs
            k = min(hits)
            pivot, row, rc = self.rows[self.pivot_index[k]]
            c = v[k] / row[pivot]
            for kk, x in row.items():
                y = v.get(kk, 0) - c * x
                if y:
                    v[kk] = y
                else:
                    v.pop(kk, None)
            for i, x in rc.items():
                y = coeffs.get(i, 0) + c * x
                if y:
                    coeffs[i] = y
                else:
                    coeffs.pop(i, None)

    def add(self, vec: Mapping) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        idx = self.inserted
        self.inserted += 1
        v, coeffs = self._reduce(vec)
        if not v:
            return False
        combo = {i: -c for i, c in coeffs.items()}
        combo[idx] = Fraction(1)
        pivot = min(v)
        self.pivot_index[pivot] = len(self.rows)
        self.rows.append((pivot, v, combo))
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self._reduce(vec)[0]

    def residual(self, vec: Mapping) -> dict:
        return self._reduce(vec)[0]

    def express(self, vec: Mapping) -> dict | None:
        """Coefficients over the inserted vectors (by insertion index), or None outside the span."""
        v, coeffs = self._reduce(vec)
        return None if v else coeffs


def sparse_kernel(columns: Sequence[Mapping]) -> list[list[int]]:
    """Kernel of the matrix whose j-th column is the sparse vector columns[j]."""
    coords: dict = {}
    for col in columns:
        for k in col:
            if k not in coords:
                coords[k] = len(coords)
    rows = [[0] * len(columns) for _ in range(len(coords))]
    for j, col in enumerate(columns):
        for k, v in col.items():
            rows[coords[k]][j] = v
    return ExactMatrix(rows, len(columns)).kernel()
