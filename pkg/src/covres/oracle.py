"""Brute-force ground truth inside tensor powers, over exact integers.

V has a hyperbolic basis e_1..e_m, f_1..f_m (plus e_0 when r is odd), stored
as indices 0..m-1, m..2m-1 and 2m.  Tensors are sparse dicts word -> int,
where a word is a tuple of basis indices; polynomial functions on
Hom(V, Q) are sparse dicts keyed by one sorted index tuple per Q-coordinate.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .characters import gl_dim, o_dimension, sp_dimension
from .euler import VerificationReport, DegreeResult, covariant_character
from .linalg import SparseEchelon, sparse_kernel
from .partitions import Partition, conjugate, is_admissible, partitions_of
from .shapes import Flavor

MAX_SCHUR_SIZE = 8
MAX_IRREP_SIZE = 6
ENVELOPE = {"r": 4, "d": 4, "chi": 4}


class EnvelopeError(ValueError):
    pass


# --- the defining representation ---------------------------------------------------


class FormSpace:
    """V with its invariant form, torus weights and positive root operators."""

    def __init__(self, r: int, kind: str):
        if kind not in ("sp", "o"):
            raise ValueError(kind)
        if kind == "sp" and r % 2:
            raise ValueError("symplectic space needs even dimension")
        self.r, self.kind = r, kind
        m = self.m = r // 2
        self.weights = []
        for i in range(r):
            w = [0] * m
            if i < m:
                w[i] = 1
            elif i < 2 * m:
                w[i - m] = -1
            self.weights.append(tuple(w))
        e = lambda i: i  # noqa: E731
        f = lambda i: m + i  # noqa: E731
        form = {}
        for i in range(m):
            form[(e(i), f(i))] = 1
            form[(f(i), e(i))] = -1 if kind == "sp" else 1
        if r % 2:
            form[(2 * m, 2 * m)] = 1
        self.form = form
        roots = {}
        for i in range(m):
            for j in range(i + 1, m):
                roots[("-", i, j)] = {(e(i), e(j)): 1, (f(j), f(i)): -1}
                if kind == "sp":
                    roots[("+", i, j)] = {(e(i), f(j)): 1, (e(j), f(i)): 1}
                else:
                    roots[("+", i, j)] = {(e(i), f(j)): 1, (e(j), f(i)): -1}
            if kind == "sp":
                roots[("2", i)] = {(e(i), f(i)): 1}
            elif r % 2:
                roots[("1", i)] = {(e(i), 2 * m): 1, (2 * m, f(i)): -1}
        self.roots = roots
        for name, mat in roots.items():
            self._check_in_algebra(name, mat)
        # column-indexed view: col -> [(row, coef)], and row-indexed view for the dual
        self.by_col = {n: self._index(mat, 1) for n, mat in roots.items()}
        self.by_row = {n: self._index(mat, 0) for n, mat in roots.items()}

    @staticmethod
    def _index(mat, axis):
        out: dict = {}
        for (a, b), c in mat.items():
            key, other = ((b, a) if axis == 1 else (a, b))
            out.setdefault(key, []).append((other, c))
        return out

    def _check_in_algebra(self, name, mat):
        # X^T B + B X = 0
        r = self.r
        for a in range(r):
            for b in range(r):
                s = 0
                for k in range(r):
                    s += mat.get((k, a), 0) * self.form.get((k, b), 0)
                    s += self.form.get((a, k), 0) * mat.get((k, b), 0)
                if s:
                    raise AssertionError(f"root operator {name} does not preserve the form")

    def weight_of(self, word) -> tuple:
        w = [0] * self.m
        for x in word:
            for i, v in enumerate(self.weights[x]):
                w[i] += v
        return tuple(w)

    def reflection(self):
        """A determinant -1 isometry as a signed permutation index -> (index, sign)."""
        if self.kind != "o":
            raise ValueError("only the orthogonal group is disconnected here")
        g = {i: (i, 1) for i in range(self.r)}
        if self.r % 2:
            g[2 * self.m] = (2 * self.m, -1)
        else:
            a, b = self.m - 1, 2 * self.m - 1
            g[a], g[b] = (b, 1), (a, 1)
        return g


def _add(acc: dict, key, val):
    v = acc.get(key, 0) + val
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def act_tensor(space: FormSpace, root, vec: dict) -> dict:
    out: dict = {}
    cols = space.by_col[root]
    for word, c in vec.items():
        for p, x in enumerate(word):
            for a, coef in cols.get(x, ()):
                _add(out, word[:p] + (a,) + word[p + 1 :], c * coef)
    return out


def act_poly(space: FormSpace, root, poly: dict) -> dict:
    """Derivation action on polynomials in the dual coordinates: X.v^a = -sum_b X_ab v^b."""
    out: dict = {}
    rows = space.by_row[root]
    for mono, c in poly.items():
        for q, factor in enumerate(mono):
            for p, a in enumerate(factor):
                for b, coef in rows.get(a, ()):
                    new = tuple(sorted(factor[:p] + (b,) + factor[p + 1 :]))
                    _add(out, mono[:q] + (new,) + mono[q + 1 :], -c * coef)
    return out


def reflect_tensor(g, vec: dict) -> dict:
    out: dict = {}
    for word, c in vec.items():
        s = 1
        new = []
        for x in word:
            y, sign = g[x]
            new.append(y)
            s *= sign
        _add(out, tuple(new), s * c)
    return out


def reflect_poly(g, poly: dict) -> dict:
    out: dict = {}
    for mono, c in poly.items():
        s = 1
        new = []
        for factor in mono:
            nf = []
            for x in factor:
                y, sign = g[x]
                nf.append(y)
                s *= sign
            new.append(tuple(sorted(nf)))
        _add(out, tuple(new), s * c)
    return out


# --- Schur modules and irreducibles --------------------------------------------------------


@dataclass
class IrrepRealization:
    """Basis vectors of a representation inside V^{(x)k}, in torus-stable blocks.

    Schur modules are blocked by the content of the words (GL weight),
    form-group irreducibles by their weight for the form group's torus.
    """

    label: Partition
    ambient_dim: int
    degree: int
    description: str
    blocks: dict = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return sum(len(v) for v in self.blocks.values())

    def vectors(self):
        for key in sorted(self.blocks):
            yield from self.blocks[key]


def _content(word, dim):
    c = [0] * dim
    for x in word:
        c[x] += 1
    return tuple(c)


@lru_cache(maxsize=None)
def _column_group(lam: Partition):
    """Signed position permutations generated by the columns of the row-major filling."""
    pos, k = {}, 0
    for i, row in enumerate(lam):
        for j in range(row):
            pos[(i, j)] = k
            k += 1
    cols = [[pos[(i, j)] for i in range(len(lam)) if lam[i] > j] for j in range(lam[0] if lam else 0)]
    out = [(tuple(range(k)), 1)]
    for col in cols:
        nxt = []
        for perm in itertools.permutations(range(len(col))):
            inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
            for base, s in out:
                new = list(base)
                for a, b in enumerate(perm):
                    new[col[a]] = base[col[b]]
                nxt.append((tuple(new), s * (-1) ** inv))
        out = nxt
    return tuple(out), tuple(pos[(i, 0)] for i in range(len(lam)))


def _row_arrangements(word, lam):
    """Distinct words obtained by permuting letters within each row of the filling."""
    rows, start = [], 0
    for row in lam:
        rows.append(word[start : start + row])
        start += row
    choices = [sorted(set(itertools.permutations(r))) for r in rows]
    for combo in itertools.product(*choices):
        yield tuple(x for part in combo for x in part)


def young_symmetrize(word, lam: Partition) -> dict:
    """Column antisymmetrizer applied after the row symmetrizer (up to a positive scalar)."""
    group, _ = _column_group(lam)
    out: dict = {}
    for u in _row_arrangements(word, lam):
        for perm, s in group:
            _add(out, tuple(u[perm[p]] for p in range(len(u))), s)
    return out


def _row_sorted_words(lam: Partition, dim: int):
    rows = [list(itertools.combinations_with_replacement(range(dim), row)) for row in lam]
    for combo in itertools.product(*rows):
        yield tuple(x for part in combo for x in part)


@lru_cache(maxsize=None)
def _schur_module(lam: Partition, dim: int) -> IrrepRealization:
    real = IrrepRealization(lam, dim, lam.size, f"S^{lam} of k^{dim}")
    if len(lam) > dim:
        return real
    buckets: dict = {}
    for w in _row_sorted_words(lam, dim):
        buckets.setdefault(_content(w, dim), []).append(w)
    for content, words in buckets.items():
        ech = SparseEchelon()
        kept = []
        for w in words:
            v = young_symmetrize(w, lam)
            if v and ech.add(v):
                kept.append(v)
        if kept:
            real.blocks[content] = kept
    expected = gl_dim(lam, dim)
    if real.dimension != expected:
        raise AssertionError(f"Schur module {lam} has dimension {real.dimension}, expected {expected}")
    return real


def schur_module(lam, dim: int) -> IrrepRealization:
    """Image of the Young symmetrizer of the row-major filling in the |lam|-th tensor power."""
    lam = Partition(lam)
    if lam.size > MAX_SCHUR_SIZE:
        raise EnvelopeError(
            f"|lam|={lam.size} exceeds the oracle limit of {MAX_SCHUR_SIZE} boxes; the tensor power has dim^{lam.size} words"
        )
    return _schur_module(lam, dim)


def contract(form: dict, vec: dict, p: int, q: int) -> dict:
    out: dict = {}
    for word, c in vec.items():
        f = form.get((word[p], word[q]))
        if f:
            _add(out, word[:p] + word[p + 1 : q] + word[q + 1 :], c * f)
    return out


def _traceless_part(module: IrrepRealization, space: FormSpace, label, description) -> IrrepRealization:
    k = module.degree
    real = IrrepRealization(Partition(label), space.r, k, description)
    pairs = list(itertools.combinations(range(k), 2))
    # contractions can identify different contents of the same weight, so block by weight
    by_weight: dict = {}
    for content, vecs in module.blocks.items():
        word = [i for i, c in enumerate(content) for _ in range(c)]
        by_weight.setdefault(space.weight_of(word), []).extend(vecs)
    for weight, vecs in sorted(by_weight.items()):
        columns = []
        for v in vecs:
            col = {}
            for idx, (p, q) in enumerate(pairs):
                for w, c in contract(space.form, v, p, q).items():
                    col[(idx, w)] = c
            columns.append(col)
        if not pairs:
            kernel = [[1 if i == j else 0 for i in range(len(vecs))] for j in range(len(vecs))]
        else:
            kernel = sparse_kernel(columns)
        kept = []
        for coeffs in kernel:
            out: dict = {}
            for a, v in zip(coeffs, vecs):
                if a:
                    for w, c in v.items():
                        _add(out, w, a * c)
            kept.append(out)
        if kept:
            real.blocks[weight] = kept
    return real


@lru_cache(maxsize=None)
def _symplectic_irrep(chi: Partition, r: int) -> IrrepRealization:
    space = FormSpace(r, "sp")
    real = _traceless_part(_schur_module(chi, r), space, chi, f"S<{chi}> of Sp({r})")
    expected = sp_dimension(chi, r // 2)
    if real.dimension != expected:
        raise AssertionError(f"symplectic irrep {chi} has dimension {real.dimension}, expected {expected}")
    return real


def symplectic_irrep(chi, r: int) -> IrrepRealization:
    """Traceless part of the Schur module: the Sp(r) irreducible S<chi>."""
    chi = Partition(chi)
    if r % 2:
        raise ValueError("r must be even")
    if 2 * len(chi) > r:
        raise ValueError(f"l({chi}) exceeds r/2")
    if chi.size > MAX_IRREP_SIZE:
        raise EnvelopeError(f"|chi|={chi.size} exceeds the oracle limit of {MAX_IRREP_SIZE}")
    return _symplectic_irrep(chi, r)


@lru_cache(maxsize=None)
def _orthogonal_irrep(chi: Partition, r: int) -> IrrepRealization:
    space = FormSpace(r, "o")
    real = _traceless_part(_schur_module(chi, r), space, chi, f"S[{chi}] of O({r})")
    expected = o_dimension(chi, r)
    if real.dimension != expected:
        raise AssertionError(f"orthogonal irrep {chi} has dimension {real.dimension}, expected {expected}")
    return real


def orthogonal_irrep(chi, r: int) -> IrrepRealization:
    """Traceless part of the Schur module: the O(r) irreducible S[chi] (chi admissible)."""
    chi = Partition(chi)
    if len(chi) > r or not is_admissible(chi, r):
        raise ValueError(f"{chi} is not admissible for r={r}")
    if chi.size > MAX_IRREP_SIZE:
        raise EnvelopeError(f"|chi|={chi.size} exceeds the oracle limit of {MAX_IRREP_SIZE}")
    return _orthogonal_irrep(chi, r)


# --- invariants ------------------------------------------------------------------------


def _monomials(kappa, dim):
    """Basis of the tensor product over q of Sym^{kappa_q}(V^*)."""
    factors = [list(itertools.combinations_with_replacement(range(dim), k)) for k in kappa]
    return list(itertools.product(*factors))


def _check_envelope(chi, r, d):
    if r > ENVELOPE["r"] or d > ENVELOPE["d"] or chi.size > ENVELOPE["chi"]:
        raise EnvelopeError(
            f"oracle envelope is r <= {ENVELOPE['r']}, d <= {ENVELOPE['d']}, |chi| <= {ENVELOPE['chi']};"
            f" got r={r}, d={d}, |chi|={chi.size}"
        )


def invariants_for_weight(irrep: IrrepRealization, space: FormSpace, kappa, weight_zero: bool = True) -> int:
    """Dimension of the invariants in irrep (x) (Q-weight kappa part of Sym(Q (x) V^*))."""
    monos = _monomials(kappa, space.r)
    mono_weight = {}
    for mono in monos:
        w = space.weight_of([x for factor in mono for x in factor])
        mono_weight[mono] = tuple(-x for x in w)
    by_w: dict = {}
    for mono, w in mono_weight.items():
        by_w.setdefault(w, []).append(mono)
    pairs = []
    for w, vecs in irrep.blocks.items():
        neg = tuple(-x for x in w)
        if weight_zero:
            partners = by_w.get(neg, [])
        else:
            partners = monos
        for v in vecs:
            for mono in partners:
                pairs.append((v, mono, tuple(a + b for a, b in zip(w, mono_weight[mono]))))
    if not pairs:
        return 0
    g = space.reflection() if space.kind == "o" else None
    columns = []
    for v, mono, wt in pairs:
        col: dict = {}
        for name in space.roots:
            for word, c in act_tensor(space, name, v).items():
                _add(col, (name, word, mono), c)
            for m2, c in act_poly(space, name, {mono: 1}).items():
                for word, c0 in v.items():
                    _add(col, (name, word, m2), c * c0)
        if not weight_zero:
            # torus constraints: weight times the vector must vanish
            for i, x in enumerate(wt):
                if x:
                    for word, c in v.items():
                        _add(col, (("h", i), word, mono), x * c)
        if g is not None:
            gv = reflect_tensor(g, v)
            gm = reflect_poly(g, {mono: 1})
            for word, c in gv.items():
                for m2, c2 in gm.items():
                    _add(col, ("g", word, m2), c * c2)
            for word, c in v.items():
                _add(col, ("g", word, mono), -c)
        columns.append(col)
    return len(sparse_kernel(columns))


def _distinct_perms(kappa) -> int:
    counts = {}
    for x in kappa:
        counts[x] = counts.get(x, 0) + 1
    out = math.factorial(len(kappa))
    for c in counts.values():
        out //= math.factorial(c)
    return out


def irrep_for(chi, r: int, flavor) -> tuple[IrrepRealization, FormSpace]:
    flavor = Flavor.parse(flavor)
    if flavor is Flavor.SKEW:
        return symplectic_irrep(chi, r), FormSpace(r, "sp")
    return orthogonal_irrep(chi, r), FormSpace(r, "o")


def invariant_dimension(chi, r: int, d: int, flavor, weight_zero: bool = True) -> int:
    """dim (irrep(chi) (x) Sym^d(Q (x) V^*))^G with dim Q = r, by brute force."""
    chi = Partition(chi)
    _check_envelope(chi, r, d)
    irrep, space = irrep_for(chi, r, flavor)
    total = 0
    for kappa in partitions_of(d, r):
        padded = kappa.padded(r)
        inv = invariants_for_weight(irrep, space, tuple(kappa), weight_zero)
        total += inv * _distinct_perms(padded)
    return total


def cross_check(chi, r: int, D: int, flavor) -> VerificationReport:
    """Oracle invariant dimensions against the character-theoretic prediction."""
    import time

    flavor = Flavor.parse(flavor)
    chi = Partition(chi)
    start = time.perf_counter()
    predicted = covariant_character(chi, r, flavor, D).dimensions(r, D)
    results = []
    for d in range(D + 1):
        got = invariant_dimension(chi, r, d, flavor)
        results.append(DegreeResult(d, got == predicted[d], detail=f"oracle={got} predicted={predicted[d]}"))
    report = VerificationReport("oracle", {"chi": chi.to_json(), "r": r, "flavor": flavor.value, "D": D}, results)
    report.elapsed = time.perf_counter() - start
    return report


def trivial_closed_form(r: int, d: int, flavor) -> int:
    """Invariant dimension for chi = 0: the degree-d piece of Sym(wedge2 Q) or Sym(sym2 Q)."""
    if d % 2:
        return 0
    flavor = Flavor.parse(flavor)
    if flavor is Flavor.SKEW:
        keep = lambda p: all(x % 2 == 0 for x in conjugate(p))  # noqa: E731
    else:
        keep = lambda p: all(x % 2 == 0 for x in p)  # noqa: E731
    return sum(gl_dim(p, r) for p in partitions_of(d, r) if keep(p))
