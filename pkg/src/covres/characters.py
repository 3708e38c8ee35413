"""Exact character arithmetic for GL, Sp and O.

Characters of classical groups are Laurent polynomials in the torus
variables, stored as ``{exponent tuple: int}``.  Weyl characters are
obtained by exact division of the alternant by the Weyl denominator, one
positive-root binomial at a time.  Decomposition into irreducibles
("peeling") subtracts the irreducible whose highest weight is the
lexicographically largest dominant weight still present; since characters
are Weyl-invariant this only ever needs the dominant weights.

Orthogonal labels follow the admissible-partition convention: S^[chi] and
S^[chi^sigma] = det (x) S^[chi] share a restriction to SO(r) and are told
apart by the trace of one element outside SO(r).
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .partitions import EMPTY, Partition, conjugate, partitions_of, sigma_conjugate, sort_canonical

Weight = tuple


class NotACharacter(ValueError):
    """Raised when peeling meets a non-dominant leading term or leaves a residual."""


# --- containers ---------------------------------------------------------------


class LaurentCharacter:
    """Finitely supported map exponent vector -> integer, over a fixed torus rank."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Weight, int] | None = None):
        self.rank = rank
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if len(w) != rank:
                raise ValueError(f"exponent {w} does not have rank {rank}")
            if c:
                clean[w] = clean.get(w, 0) + int(c)
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def one(cls, rank: int) -> "LaurentCharacter":
        return cls(rank, {(0,) * rank: 1})

    def __eq__(self, other):
        return isinstance(other, LaurentCharacter) and self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"LaurentCharacter(rank={self.rank}, {len(self.terms)} terms)"

    def _combine(self, other, sign):
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + sign * c
        return LaurentCharacter(self.rank, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c: int) -> "LaurentCharacter":
        return LaurentCharacter(self.rank, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                out[w] = out.get(w, 0) + c1 * c2
        return LaurentCharacter(self.rank, out)

    __rmul__ = __mul__

    def evaluate_at_one(self) -> int:
        """Value at z = 1, i.e. the dimension of the representation."""
        return sum(self.terms.values())

    def substitute(self, perm=None, inverted=()) -> "LaurentCharacter":
        """Apply z_i -> z_perm(i) and z_i -> 1/z_i for i in ``inverted``."""
        perm = perm or range(self.rank)
        out = {}
        for w, c in self.terms.items():
            v = [0] * self.rank
            for i, p in enumerate(perm):
                v[p] = w[i]
            for i in inverted:
                v[i] = -v[i]
            out[tuple(v)] = c
        return LaurentCharacter(self.rank, out)


class SchurExpansion(dict):
    """Partition -> nonzero integer multiplicity."""

    def __init__(self, data=None):
        super().__init__()
        if data:
            items = data.items() if isinstance(data, Mapping) else data
            for p, c in items:
                self.add_term(Partition(p), c)

    def add_term(self, p, c: int) -> None:
        p = Partition(p)
        v = self.get(p, 0) + int(c)
        if v:
            self[p] = v
        else:
            self.pop(p, None)

    def __add__(self, other):
        out = SchurExpansion(self)
        for p, c in other.items():
            out.add_term(p, c)
        return out

    def __sub__(self, other):
        out = SchurExpansion(self)
        for p, c in other.items():
            out.add_term(p, -c)
        return out

    def scale(self, c: int) -> "SchurExpansion":
        return SchurExpansion({p: c * v for p, v in self.items()})

    def truncate(self, max_len: int) -> "SchurExpansion":
        return SchurExpansion({p: c for p, c in self.items() if len(p) <= max_len})

    def dimension(self, num_vars: int) -> int:
        return sum(c * gl_dim(p, num_vars) for p, c in self.items())

    def sorted_items(self):
        return [(p, self[p]) for p in sort_canonical(self)]

    def to_json(self) -> list[dict]:
        return [{"partition": p.to_json(), "mult": c} for p, c in self.sorted_items()]

    def __repr__(self):
        if not self:
            return "0"
        return " + ".join(f"{c}*s{p}" if c != 1 else f"s{p}" for p, c in self.sorted_items())


class GradedSchurExpansion(dict):
    """Degree -> SchurExpansion; missing degrees are zero."""

    def slice(self, d: int) -> SchurExpansion:
        return self.get(d, SchurExpansion())

    def dimensions(self, num_vars: int, max_degree: int) -> list[int]:
        return [self.slice(d).dimension(num_vars) for d in range(max_degree + 1)]

    def to_json(self) -> dict:
        return {str(d): self[d].to_json() for d in sorted(self) if self[d]}


# --- GL: Kostka numbers, Schur polynomials, dimensions ----------------------------


def gl_dim(lam, num_vars: int) -> int:
    """Hook-content formula for dim S^lam(k^N)."""
    lam = Partition(lam)
    if len(lam) > num_vars:
        return 0
    lt = conjugate(lam)
    num, den = 1, 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= num_vars + j - i
            den *= row - j + lt[j] - i - 1
    return num // den


@lru_cache(maxsize=None)
def _kostka(lam: tuple, content: tuple) -> int:
    # peel off the largest letter as a horizontal strip of length content[-1]
    if not content:
        return 1 if not lam else 0
    k = content[-1]
    rest = content[:-1]
    if sum(lam) != sum(content):
        return 0
    if len(lam) > len(content):
        return 0
    total = 0
    lam_next = lam[1:] + (0,)

    def strips(i, remaining, cur):
        nonlocal total
        if i == len(lam):
            if remaining == 0:
                total += _kostka(Partition(cur), rest)
            return
        lo = lam_next[i]
        for v in range(lam[i], lo - 1, -1):
            take = lam[i] - v
            if take > remaining:
                break
            strips(i + 1, remaining - take, cur + (v,))

    strips(0, k, ())
    return total


def kostka(lam, content) -> int:
    """Number of semistandard tableaux of shape lam and the given content."""
    content = tuple(sorted((c for c in content if c), reverse=True))
    return _kostka(tuple(Partition(lam)), content)


def _multiset_permutations(seq):
    counts = Counter(seq)
    keys = sorted(counts, reverse=True)
    n = len(seq)
    out = [0] * n

    def rec(i):
        if i == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out[i] = k
                yield from rec(i + 1)
                counts[k] += 1

    yield from rec(0)


def gl_dominant(lam, num_vars: int) -> dict[Weight, int]:
    """Dominant part of s_lam(x_1..x_N): padded partitions -> Kostka numbers."""
    lam = Partition(lam)
    if len(lam) > num_vars:
        return {}
    out = {}
    for kappa in partitions_of(lam.size, num_vars):
        k = kostka(lam, kappa)
        if k:
            out[kappa.padded(num_vars)] = k
    return out


def schur_monomials(lam, num_vars: int) -> LaurentCharacter:
    """The Schur polynomial s_lam(x_1..x_N); zero when l(lam) > N."""
    out = {}
    for kappa, k in gl_dominant(lam, num_vars).items():
        for w in _multiset_permutations(kappa):
            out[w] = k
    return LaurentCharacter(num_vars, out)


# --- root systems --------------------------------------------------------------


def _unit(m, i, s=1):
    v = [0] * m
    v[i] = s
    return v


def positive_roots(kind: str, m: int) -> list[tuple[int, ...]]:
    roots = []
    for i in range(m):
        for j in range(i + 1, m):
            a, b = _unit(m, i), _unit(m, j)
            roots.append(tuple(x - y for x, y in zip(a, b)))
            roots.append(tuple(x + y for x, y in zip(a, b)))
        if kind == "C":
            roots.append(tuple(_unit(m, i, 2)))
        elif kind == "B":
            roots.append(tuple(_unit(m, i)))
    return roots


def rho(kind: str, m: int) -> tuple[Fraction, ...]:
    if kind == "C":
        return tuple(Fraction(m - i) for i in range(m))
    if kind == "B":
        return tuple(Fraction(2 * (m - i) - 1, 2) for i in range(m))
    if kind == "D":
        return tuple(Fraction(m - 1 - i) for i in range(m))
    raise ValueError(kind)


def is_dominant(kind: str, w) -> bool:
    if kind == "GL":
        return all(a >= b for a, b in zip(w, w[1:]))
    if kind in ("B", "C"):
        return all(a >= b for a, b in zip(w, w[1:])) and (not w or w[-1] >= 0)
    if kind == "D":
        if len(w) < 2:
            return True
        return all(a >= b for a, b in zip(w, w[1:-1])) and w[-2] >= abs(w[-1])
    raise ValueError(kind)


def _weyl_group(kind: str, m: int):
    """Yield (permutation, signs, determinant) for the signed-permutation group."""
    for perm in itertools.permutations(range(m)):
        inv = sum(1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j])
        for signs in itertools.product((1, -1), repeat=m):
            neg = signs.count(-1)
            if kind == "D" and neg % 2:
                continue
            yield perm, signs, (-1) ** (inv + neg)


def _divide_binomial(f: dict, alpha: tuple) -> dict:
    """Exact quotient f / (1 - z^-alpha); raises if it does not divide."""
    lead = next(i for i, a in enumerate(alpha) if a)
    step = alpha[lead]
    lines: dict = {}
    for w, c in f.items():
        t = w[lead] // step
        base = tuple(x - t * a for x, a in zip(w, alpha))
        lines.setdefault(base, {})[t] = c
    out = {}
    for base, pts in lines.items():
        running = 0
        for t in range(max(pts), min(pts) - 1, -1):
            running += pts.get(t, 0)
            if running:
                out[tuple(x + t * a for x, a in zip(base, alpha))] = running
        if running:
            raise ArithmeticError(f"alternant not divisible by 1 - z^-{alpha}")
    return out


def _weyl_character(kind: str, m: int, mu: tuple) -> LaurentCharacter:
    if m == 0:
        return LaurentCharacter.one(0)
    rh = rho(kind, m)
    # work with doubled coordinates so that half-integral rho stays integral
    lam2 = [2 * (x + y) for x, y in zip(mu, rh)]
    num = {}
    for perm, signs, det in _weyl_group(kind, m):
        v = [0] * m
        for i in range(m):
            v[perm[i]] = signs[perm[i]] * lam2[i]
        w = tuple(int(a - 2 * b) for a, b in zip(v, rh))
        num[w] = num.get(w, 0) + det
    num = {w: c for w, c in num.items() if c}
    for alpha in positive_roots(kind, m):
        num = _divide_binomial(num, tuple(2 * a for a in alpha))
    out = {}
    for w, c in num.items():
        if any(x % 2 for x in w):
            raise ArithmeticError("half-integral exponent in an integral character")
        out[tuple(x // 2 for x in w)] = c
    return LaurentCharacter(m, out)


@lru_cache(maxsize=None)
def _char_sp(mu: tuple, m: int) -> LaurentCharacter:
    return _weyl_character("C", m, mu)


def char_sp(mu, m: int) -> LaurentCharacter:
    """Character of the Sp(2m) irreducible with highest weight mu."""
    mu = Partition(mu)
    if len(mu) > m:
        raise ValueError(f"l({mu}) exceeds m={m}")
    return _char_sp(mu.padded(m), m)


def so_kind(r: int) -> str:
    return "B" if r % 2 else "D"


@lru_cache(maxsize=None)
def _char_so(weight: tuple, r: int) -> LaurentCharacter:
    return _weyl_character(so_kind(r), r // 2, weight)


def char_so(weight, r: int) -> LaurentCharacter:
    """Character of the SO(r) irreducible with the given highest weight (rank r//2 entries)."""
    weight = tuple(weight)
    m = r // 2
    if len(weight) < m:
        weight = weight + (0,) * (m - len(weight))
    if len(weight) != m or not is_dominant(so_kind(r), weight):
        raise ValueError(f"{weight} is not a dominant SO({r}) weight")
    return _char_so(weight, r)


def weyl_dimension(kind: str, m: int, mu) -> int:
    """Weyl dimension formula, independent of the character computation."""
    mu = tuple(mu) + (0,) * (m - len(mu))
    rh = rho(kind, m)
    lr = [a + b for a, b in zip(mu, rh)]
    val = Fraction(1)
    for alpha in positive_roots(kind, m):
        val *= sum(a * x for a, x in zip(alpha, lr)) / sum(a * x for a, x in zip(alpha, rh))
    assert val.denominator == 1
    return int(val)


def sp_dimension(mu, m: int) -> int:
    return weyl_dimension("C", m, Partition(mu))


def o_dimension(chi, r: int) -> int:
    """Dimension of the O(r) irreducible S^[chi] for admissible chi."""
    chi = Partition(chi)
    m = r // 2
    if len(chi) > m:
        chi = sigma_conjugate(chi, r)
    d = weyl_dimension(so_kind(r), m, chi)
    if r % 2 == 0 and m and len(chi) == m:
        d *= 2
    return d


# --- peeling -----------------------------------------------------------------------


class Group:
    """A torus-level description of GL(N), Sp(2m), SO(r) or the C-type twisting group."""

    def __init__(self, kind: str, rank: int, r: int | None = None):
        self.kind = kind
        self.rank = rank
        self.r = r

    def __repr__(self):
        return f"Group({self.kind}, {self.rank})"

    def dominant_kind(self) -> str:
        return "GL" if self.kind == "GL" else self.kind

    def is_dominant(self, w) -> bool:
        return is_dominant(self.dominant_kind(), w)

    def irreducible_dominant(self, w) -> dict:
        return _irreducible_dominant(self.kind, self.rank, tuple(w))

    def irreducible(self, w) -> LaurentCharacter:
        if self.kind == "GL":
            return schur_monomials(Partition(w), self.rank)
        if self.kind == "C":
            return _char_sp(tuple(w), self.rank)
        return _char_so(tuple(w), self.r)


@lru_cache(maxsize=None)
def _irreducible_dominant(kind: str, rank: int, w: tuple) -> dict:
    if kind == "GL":
        return gl_dominant(Partition(w), rank)
    if kind == "C":
        ch = _char_sp(w, rank)
    else:
        ch = _weyl_character(kind, rank, w)
    return {v: c for v, c in ch.terms.items() if is_dominant(kind, v)}


def gl(num_vars: int) -> Group:
    return Group("GL", num_vars)


def sp(m: int) -> Group:
    return Group("C", m)


def so(r: int) -> Group:
    return Group(so_kind(r), r // 2, r)


def _as_group(group, size) -> Group:
    if isinstance(group, Group):
        return group
    g = str(group).lower()
    if g == "gl":
        return gl(size)
    if g == "sp":
        return sp(size)
    if g == "so":
        return so(size)
    raise ValueError(f"unknown group {group!r}")


def dominant_part(f: LaurentCharacter, group: Group) -> dict:
    return {w: c for w, c in f.terms.items() if group.is_dominant(w)}


def peel_dominant(dom: Mapping[Weight, int], group: Group) -> dict[Weight, int]:
    """Decompose from dominant weights only; returns highest weight -> multiplicity."""
    residual = dict(dom)
    result = {}
    while residual:
        top = max(residual)
        c = residual[top]
        if not group.is_dominant(top):
            raise NotACharacter(f"leading weight {top} is not dominant for {group}")
        irr = group.irreducible_dominant(top)
        if irr.get(top) != 1:
            raise NotACharacter(f"irreducible {top} has unexpected leading coefficient")
        result[top] = c
        for w, k in irr.items():
            v = residual.get(w, 0) - c * k
            if v:
                residual[w] = v
            else:
                residual.pop(w, None)
    return result


def peel(f: LaurentCharacter, group, size: int | None = None) -> dict:
    """Full decomposition of a Weyl-invariant Laurent polynomial into irreducibles.

    ``group`` is "gl" (size = number of variables), "sp" (size = m) or
    "so" (size = r), or a :class:`Group`.  Unlike :func:`peel_dominant` this
    subtracts whole characters and insists the residual vanish, so it also
    rejects inputs that are not Weyl-invariant.  Sp and GL results are keyed
    by Partition.
    """
    group = _as_group(group, size)
    residual = LaurentCharacter(f.rank, f.terms)
    result = {}
    while residual:
        top = max(residual.terms)
        c = residual.terms[top]
        if not group.is_dominant(top):
            raise NotACharacter(f"leading weight {top} is not dominant for {group}")
        result[top] = c
        residual = residual - group.irreducible(top).scale(c)
        if residual.terms.get(top):
            raise NotACharacter(f"could not clear weight {top}")
    if group.kind in ("GL", "C"):
        return {Partition(w): c for w, c in result.items()}
    return result


# --- restriction of GL characters to tori --------------------------------------------


@lru_cache(maxsize=None)
def _histogram(kappa: tuple, spec: tuple, kind: str) -> tuple:
    """Dominant weights of the monomials x^w, w a rearrangement of kappa, under the variable map."""
    rank = len(spec[0][0]) if spec else 0
    hist: dict = {}
    for perm in _multiset_permutations(kappa):
        w = [0] * rank
        sign = 1
        for a, (vec, s) in zip(perm, spec):
            if a:
                for i, x in enumerate(vec):
                    if x:
                        w[i] += a * x
                if s < 0 and a % 2:
                    sign = -sign
        w = tuple(w)
        if is_dominant(kind, w):
            hist[w] = hist.get(w, 0) + sign
    return tuple(hist.items())


def restrict_dominant(lam, spec: tuple, kind: str) -> dict:
    """Dominant part of s_lam evaluated at x_j -> sign_j * z^vec_j.

    ``spec`` lists one (exponent vector, sign) pair per GL variable.
    """
    lam = Partition(lam)
    n = len(spec)
    out: dict = {}
    for kappa, k in gl_dominant(lam, n).items():
        for w, c in _histogram(kappa, spec, kind):
            out[w] = out.get(w, 0) + k * c
    return {w: c for w, c in out.items() if c}


def _vec(rank, i=None, s=1):
    v = [0] * rank
    if i is not None:
        v[i] = s
    return tuple(v)


def sp_spec(m: int) -> tuple:
    return tuple((_vec(m, i), 1) for i in range(m)) + tuple((_vec(m, i, -1), 1) for i in range(m))


def so_spec(r: int) -> tuple:
    m = r // 2
    spec = sp_spec(m)
    if r % 2:
        spec += ((_vec(m), 1),)
    return spec


def twisted_spec(r: int) -> tuple:
    """Eigenvalue data of the chosen element outside SO(r), times a torus element.

    r odd: -I times (z, 1/z, 1).  r even: the reflection swapping the last
    hyperbolic pair, whose centraliser torus has rank m-1; eigenvalues
    (z_1..z_{m-1}, 1/z_1..1/z_{m-1}, 1, -1).
    """
    m = r // 2
    if r % 2:
        return tuple((vec, -1) for vec, _ in so_spec(r))
    k = m - 1
    return (
        tuple((_vec(k, i), 1) for i in range(k))
        + tuple((_vec(k, i, -1), 1) for i in range(k))
        + ((_vec(k), 1), (_vec(k), -1))
    )


def twisted_group(r: int) -> Group:
    return so(r) if r % 2 else sp(r // 2 - 1)


class OCharacter:
    """An O(r) character as (dominant part on the SO(r) torus, dominant part of the twisted trace)."""

    __slots__ = ("r", "torus", "twisted")

    def __init__(self, r: int, torus: Mapping, twisted: Mapping):
        self.r = r
        self.torus = {w: c for w, c in torus.items() if c}
        self.twisted = {w: c for w, c in twisted.items() if c}

    def __eq__(self, other):
        return isinstance(other, OCharacter) and (self.r, self.torus, self.twisted) == (other.r, other.torus, other.twisted)

    def __add__(self, other):
        t = dict(self.torus)
        for w, c in other.torus.items():
            t[w] = t.get(w, 0) + c
        tw = dict(self.twisted)
        for w, c in other.twisted.items():
            tw[w] = tw.get(w, 0) + c
        return OCharacter(self.r, t, tw)

    def scale(self, c: int) -> "OCharacter":
        return OCharacter(self.r, {w: c * v for w, v in self.torus.items()}, {w: c * v for w, v in self.twisted.items()})


def gl_to_o_character(lam, r: int) -> OCharacter:
    """Restriction of S^lam(k^r) to O(r)."""
    return OCharacter(
        r,
        restrict_dominant(lam, so_spec(r), so_kind(r)),
        restrict_dominant(lam, twisted_spec(r), twisted_group(r).kind),
    )


def o_irreducible_character(chi, r: int) -> OCharacter:
    """OCharacter of S^[chi] for admissible chi."""
    chi = Partition(chi)
    m = r // 2
    flipped = len(chi) > m
    base = sigma_conjugate(chi, r) if flipped else chi
    g = so(r)
    torus = dict(g.irreducible_dominant(base.padded(m)))
    if r % 2:
        sign = (-1) ** base.size * (-1 if flipped else 1)
        return OCharacter(r, torus, {w: sign * c for w, c in torus.items()})
    if m and len(base) == m:
        low = base.padded(m)[:-1] + (-base[-1],)
        for w, c in g.irreducible_dominant(low).items():
            torus[w] = torus.get(w, 0) + c
        return OCharacter(r, torus, {})
    tg = twisted_group(r)
    sign = -1 if flipped else 1
    tw = {w: sign * c for w, c in tg.irreducible_dominant(base.padded(m - 1)).items()}
    return OCharacter(r, torus, tw)


def peel_o(ch: OCharacter, r: int | None = None) -> dict[Partition, int]:
    """Decompose an O(r) character into admissible labels."""
    r = ch.r if r is None else r
    m = r // 2
    n = peel_dominant(ch.torus, so(r))
    w = peel_dominant(ch.twisted, twisted_group(r))
    out: dict[Partition, int] = {}

    def put(p, c):
        if c:
            out[p] = out.get(p, 0) + c

    used = set()
    for wt, c in n.items():
        if r % 2 == 0 and m and wt[-1] < 0:
            partner = wt[:-1] + (-wt[-1],)
            if n.get(partner) != c:
                raise NotACharacter(f"SO weights {wt} and {partner} are not paired")
            continue
        mu = Partition(wt)
        if r % 2 == 0 and m and wt[-1] > 0:
            put(mu, c)
            continue
        if r % 2:
            d = w.get(wt, 0) * (-1) ** mu.size
            used.add(wt)
        else:
            key = wt[:-1] if m else ()
            d = w.get(key, 0)
            used.add(key)
        if (c + d) % 2:
            raise NotACharacter(f"torus and twisted multiplicities of {mu} have different parity")
        put(mu, (c + d) // 2)
        put(sigma_conjugate(mu, r), (c - d) // 2)
    extra = set(w) - used
    if extra:
        raise NotACharacter(f"twisted trace has weights {sorted(extra)} without torus partners")
    return out


def restrict_gl_to_sp_peel(lam, r: int) -> dict[Partition, int]:
    m = r // 2
    dom = restrict_dominant(lam, sp_spec(m), "C")
    return {Partition(w): c for w, c in peel_dominant(dom, sp(m)).items()}


def restrict_gl_to_o_peel(lam, r: int) -> dict[Partition, int]:
    return peel_o(gl_to_o_character(lam, r), r)


# --- graded characters of the relevant symmetric and exterior algebras ----------------


def _peel_gl(dom: Mapping[Weight, int], num_vars: int) -> SchurExpansion:
    return SchurExpansion({Partition(w): c for w, c in peel_dominant(dom, gl(num_vars)).items()})


@lru_cache(maxsize=None)
def _simple_graphs(deg: tuple) -> int:
    """Labelled simple graphs with the given degree sequence (sorted descending)."""
    if not deg or deg[0] == 0:
        return 1
    d0, rest = deg[0], deg[1:]
    total = 0
    for chosen in itertools.combinations(range(len(rest)), d0):
        nxt = list(rest)
        ok = True
        for i in chosen:
            nxt[i] -= 1
            if nxt[i] < 0:
                ok = False
                break
        if ok:
            total += _simple_graphs(tuple(sorted(nxt, reverse=True)))
    return total


def _distribute(rest: tuple, k: int):
    """All ways to give k edge-ends to the vertices in ``rest`` within their degrees."""
    if not rest:
        if k == 0:
            yield ()
        return
    for a in range(min(k, rest[0]), -1, -1):
        for tail in _distribute(rest[1:], k - a):
            yield (a,) + tail


@lru_cache(maxsize=None)
def _multigraphs(deg: tuple, loops: bool) -> int:
    """Labelled multigraphs with given degrees; loops (if allowed) add 2 to a degree."""
    if not deg or deg[0] == 0:
        return 1
    d0, rest = deg[0], deg[1:]
    total = 0
    for nloops in range(d0 // 2 + 1 if loops else 1):
        for split in _distribute(rest, d0 - 2 * nloops):
            nxt = tuple(sorted((a - b for a, b in zip(rest, split)), reverse=True))
            total += _multigraphs(nxt, loops)
    return total


@lru_cache(maxsize=None)
def wedge_of_wedge2_character(k: int, num_vars: int) -> SchurExpansion:
    """Schur expansion of the k-th exterior power of the second exterior power."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    dom = {}
    for kappa in partitions_of(2 * k, num_vars):
        c = _simple_graphs(tuple(kappa))
        if c:
            dom[kappa.padded(num_vars)] = c
    return _peel_gl(dom, num_vars)


def _even_columns(p: Partition) -> bool:
    return all(x % 2 == 0 for x in conjugate(p))


def _even_rows(p: Partition) -> bool:
    return all(x % 2 == 0 for x in p)


@lru_cache(maxsize=None)
def sym_algebra_slice(gen: str, d: int, num_vars: int) -> SchurExpansion:
    """Degree-d piece of Sym(wedge2) or Sym(sym2) in N variables."""
    if gen not in ("wedge2", "sym2"):
        raise ValueError(f"gen must be 'wedge2' or 'sym2', got {gen!r}")
    if d < 0:
        raise ValueError("d must be nonnegative")
    loops = gen == "sym2"
    dom = {}
    for kappa in partitions_of(2 * d, num_vars):
        c = _multigraphs(tuple(kappa), loops)
        if c:
            dom[kappa.padded(num_vars)] = c
    result = _peel_gl(dom, num_vars)
    support = _even_rows if loops else _even_columns
    expected = {p for p in partitions_of(2 * d, num_vars) if support(p)}
    if set(result) != expected or any(c != 1 for c in result.values()):
        raise AssertionError(f"Sym^{d}({gen}) in {num_vars} variables has unexpected decomposition {result}")
    return result


def sym_algebra_support(gen: str, d: int, num_vars: int) -> list[Partition]:
    """Classical description of the same decomposition (no computation)."""
    support = _even_rows if gen == "sym2" else _even_columns
    return [p for p in partitions_of(2 * d, num_vars) if support(p)]


__all__ = [
    "EMPTY",
    "GradedSchurExpansion",
    "Group",
    "LaurentCharacter",
    "NotACharacter",
    "OCharacter",
    "SchurExpansion",
    "char_so",
    "char_sp",
    "gl_dim",
    "gl_to_o_character",
    "kostka",
    "o_dimension",
    "o_irreducible_character",
    "peel",
    "peel_dominant",
    "peel_o",
    "schur_monomials",
    "sp_dimension",
    "sym_algebra_slice",
    "wedge_of_wedge2_character",
    "weyl_dimension",
]
