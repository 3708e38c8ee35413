"""Littlewood-Richardson coefficients and GL -> Sp / O restriction.

The stable-range restriction uses Littlewood's rules (sum over partitions
with even columns for Sp, even rows for O).  Outside the stable range, and
as an independent guard inside it, the restriction is computed by peeling
the torus restriction of the Schur polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import cache
from .characters import (
    SchurExpansion,
    gl_dim,
    o_dimension,
    restrict_gl_to_o_peel,
    restrict_gl_to_sp_peel,
    sp_dimension,
)
from .partitions import Partition, conjugate, is_admissible, partitions_of, sort_canonical
from .shapes import Flavor

# --- Littlewood-Richardson ------------------------------------------------------------


def _lr_fill_rows(lam: Partition, mu: Partition, beta: Partition) -> int:
    """Count LR tableaux of shape lam/mu and content beta, row by row."""
    rows = len(lam)
    k = len(beta)
    count = 0
    seen = [0] * (k + 1)  # running content after complete rows

    def row_options(i, length, prev_row, start_col):
        # weakly increasing words of given length over 1..min(i+1,k),
        # strictly greater than the entry above in each column
        top = min(i + 1, k)
        word = [0] * length

        def rec(pos, lo):
            if pos == length:
                yield list(word)
                return
            col = start_col + pos
            above = prev_row.get(col, 0)
            for v in range(max(lo, above + 1), top + 1):
                word[pos] = v
                yield from rec(pos + 1, v)

        yield from rec(0, 1)

    def lattice_ok(word):
        counts = list(seen)
        for v in reversed(word):
            counts[v] += 1
            if counts[v] > beta[v - 1]:
                return False
            if v > 1 and counts[v] > counts[v - 1]:
                return False
        return True

    def rec(i, above):
        nonlocal count
        if i == rows:
            if seen[1:] == list(beta):
                count += 1
            return
        start = mu.part(i + 1)
        length = lam[i] - start
        for word in row_options(i, length, above, start):
            if not lattice_ok(word):
                continue
            for v in word:
                seen[v] += 1
            rec(i + 1, {start + j: v for j, v in enumerate(word)})
            for v in word:
                seen[v] -= 1

    rec(0, {})
    return count


@lru_cache(maxsize=None)
def _lr_coefficient(lam, mu, beta) -> int:
    if lam.size != mu.size + beta.size or not lam.contains(mu) or not lam.contains(beta):
        return 0
    if not beta:
        return 1
    return _lr_fill_rows(lam, mu, beta)


def lr_coefficient(lam, mu, beta) -> int:
    """c^lam_{mu,beta}: multiplicity of s_lam in s_mu * s_beta."""
    return _lr_coefficient(Partition(lam), Partition(mu), Partition(beta))


def _encode_exp(e: SchurExpansion):
    return [[list(p), c] for p, c in e.sorted_items()]


def _decode_exp(v) -> SchurExpansion:
    return SchurExpansion({tuple(p): c for p, c in v})


@lru_cache(maxsize=None)
def _lr_product(mu: Partition, nu: Partition, max_len: int | None) -> SchurExpansion:
    out = SchurExpansion()
    nu_parts = list(nu)
    bound = max_len if max_len is not None else len(mu) + len(nu)

    def add_letter(k, shape, prev_added):
        # shape: current partition as list; prev_added[i] = number of (k-1)'s in row i
        if k > len(nu_parts):
            out.add_term(Partition(shape), 1)
            return
        size = nu_parts[k - 1]
        rows = min(bound, len(shape) + 1)
        base = list(shape) + [0] * (rows - len(shape))
        added = [0] * rows

        def rec(i, remaining, cum_added, cum_prev):
            if i == rows:
                if remaining == 0:
                    new = [b + a for b, a in zip(base, added)]
                    add_letter(k + 1, [x for x in new if x], added[:])
                return
            cap = base[i - 1] - base[i] if i > 0 else remaining
            cap = min(cap, remaining)
            if k > 1:
                # letters k in rows <= i may not outnumber letters k-1 in rows < i
                cap = min(cap, cum_prev - cum_added)
            for a in range(cap, -1, -1):
                added[i] = a
                rec(i + 1, remaining - a, cum_added + a, cum_prev + (prev_added[i] if i < len(prev_added) else 0))
            added[i] = 0

        rec(0, size, 0, 0)

    add_letter(1, list(mu), [])
    return out


def lr_product(mu, nu, max_len: int | None = None) -> SchurExpansion:
    """s_mu * s_nu expanded in Schur functions, dropping terms with more than max_len rows."""
    mu, nu = Partition(mu), Partition(nu)
    if max_len is not None and (len(mu) > max_len or len(nu) > max_len):
        return SchurExpansion()
    return _cached_product(mu, nu, max_len)


@cache.disk_memo("lr_product", _encode_exp, _decode_exp)
def _cached_product(mu, nu, max_len):
    return _lr_product(mu, nu, max_len)


def schur_product(a: SchurExpansion, b: SchurExpansion, max_len: int | None = None) -> SchurExpansion:
    out = SchurExpansion()
    for p, c in a.items():
        for q, d in b.items():
            for lam, e in lr_product(p, q, max_len).items():
                out.add_term(lam, c * d * e)
    return out


# --- restriction ----------------------------------------------------------------------


@dataclass
class BranchingTable:
    source: Partition
    flavor: Flavor
    r: int
    method: str
    mults: SchurExpansion = field(default_factory=SchurExpansion)

    def to_json(self) -> dict:
        return {
            "lambda": self.source.to_json(),
            "flavor": self.flavor.value,
            "r": self.r,
            "method": self.method,
            "mults": [{"mu": p.to_json(), "m": c} for p, c in self.mults.sorted_items()],
        }


def _littlewood(lam: Partition, keep) -> SchurExpansion:
    out = SchurExpansion()
    for size in range(0, lam.size + 1, 2):
        for beta in partitions_of(size):
            if not keep(beta) or not lam.contains(beta):
                continue
            for mu in partitions_of(lam.size - size, len(lam)):
                c = lr_coefficient(lam, mu, beta)
                if c:
                    out.add_term(mu, c)
    return out


def _even_columns(p):
    return all(x % 2 == 0 for x in conjugate(p))


def _even_rows(p):
    return all(x % 2 == 0 for x in p)


def stable_sp(lam: Partition, r: int) -> bool:
    return 2 * len(lam) <= r


def stable_o(lam: Partition, r: int) -> bool:
    return 2 * len(lam) <= r


def _check_conservation(table: BranchingTable) -> None:
    lam, r = table.source, table.r
    dim = o_dimension if table.flavor is Flavor.SYMMETRIC else (lambda p, rr: sp_dimension(p, rr // 2))
    total = sum(c * dim(p, r) for p, c in table.mults.items())
    if total != gl_dim(lam, r):
        raise AssertionError(f"branching of {lam} to r={r} loses dimension: {total} != {gl_dim(lam, r)}")
    if any(c < 0 for c in table.mults.values()):
        raise AssertionError(f"negative multiplicity in branching of {lam}")
    if table.flavor is Flavor.SKEW and any(p.part(1) > lam.part(1) for p in table.mults):
        raise AssertionError(f"branching of {lam} produced mu_1 > lam_1")


def _encode_table(t: BranchingTable):
    return {"method": t.method, "mults": _encode_exp(t.mults)}


def _restrict(lam: Partition, r: int, flavor: Flavor, method: str) -> BranchingTable:
    return _restrict_cached(lam, r, flavor.value, method)


@lru_cache(maxsize=None)
def _restrict_cached(lam: Partition, r: int, flavor_value: str, method: str) -> BranchingTable:
    flavor = Flavor(flavor_value)
    hit = None
    store = cache.active()
    key = [list(lam), r, flavor_value, method]
    if store is not None:
        ok, value = store.get("restrict", key)
        if ok:
            try:
                hit = BranchingTable(lam, flavor, r, value["method"], _decode_exp(value["mults"]))
                _check_conservation(hit)
            except Exception:
                hit = None
    if hit is not None:
        return hit
    stable = stable_sp(lam, r) if flavor is Flavor.SKEW else stable_o(lam, r)
    if method == "auto":
        method = "stable" if stable else "peel"
    if method == "stable":
        if not stable:
            raise ValueError(f"{lam} is outside the stable range for r={r}")
        keep = _even_columns if flavor is Flavor.SKEW else _even_rows
        mults = _littlewood(lam, keep)
    elif method == "peel":
        peel = restrict_gl_to_sp_peel if flavor is Flavor.SKEW else restrict_gl_to_o_peel
        mults = SchurExpansion(peel(lam, r))
    else:
        raise ValueError(f"unknown method {method!r}")
    table = BranchingTable(lam, flavor, r, method, mults)
    _check_conservation(table)
    if store is not None:
        store.put("restrict", key, _encode_table(table))
    return table


def restrict_gl_to_sp(lam, r: int, method: str = "auto") -> BranchingTable:
    """Decompose S^lam(k^r) under Sp(r)."""
    lam = Partition(lam)
    if r % 2 or r < 2:
        raise ValueError(f"Sp needs r even and positive, got {r}")
    if len(lam) > r:
        raise ValueError(f"l({lam}) exceeds r={r}")
    return _restrict(lam, r, Flavor.SKEW, method)


def restrict_gl_to_o(lam, r: int, method: str = "auto") -> BranchingTable:
    """Decompose S^lam(k^r) under O(r), labels admissible partitions."""
    lam = Partition(lam)
    if r < 1:
        raise ValueError("r must be positive")
    if len(lam) > r:
        raise ValueError(f"l({lam}) exceeds r={r}")
    return _restrict(lam, r, Flavor.SYMMETRIC, method)


def restrict(lam, r: int, flavor, method: str = "auto") -> BranchingTable:
    flavor = Flavor.parse(flavor)
    if flavor is Flavor.SKEW:
        return restrict_gl_to_sp(lam, r, method)
    return restrict_gl_to_o(lam, r, method)


def check_label(chi, r: int, flavor) -> Partition:
    flavor = Flavor.parse(flavor)
    chi = Partition(chi)
    if flavor is Flavor.SKEW:
        if r % 2:
            raise ValueError(f"skew flavor needs r even, got r={r}")
        if 2 * len(chi) > r:
            raise ValueError(f"{chi} is not an Sp({r}) label: needs l <= {r // 2}")
    elif len(chi) > r or not is_admissible(chi, r):
        raise ValueError(f"{chi} is not an admissible O({r}) label")
    return chi


def covariant_multiplicity(chi, gamma, r: int, flavor) -> int:
    """Multiplicity of the irreducible labelled chi inside S^gamma(V), dim V = r."""
    flavor = Flavor.parse(flavor)
    chi = check_label(chi, r, flavor)
    gamma = Partition(gamma)
    if len(gamma) > r:
        raise ValueError(f"l({gamma}) exceeds r={r}")
    # -I acts by (-1)^|gamma| on S^gamma V and by (-1)^|chi| on the target
    if (gamma.size - chi.size) % 2:
        return 0
    return restrict(gamma, r, flavor).mults.get(chi, 0)


def stable_tables_agree(lam, r: int, flavor) -> bool:
    a = restrict(lam, r, flavor, "stable").mults
    b = restrict(lam, r, flavor, "peel").mults
    return a == b


__all__ = [
    "BranchingTable",
    "covariant_multiplicity",
    "lr_coefficient",
    "lr_product",
    "restrict",
    "restrict_gl_to_o",
    "restrict_gl_to_sp",
    "schur_product",
    "sort_canonical",
]
