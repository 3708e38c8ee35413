"""Graded characters of modules of covariants and their Euler-characteristic check.

Degrees are polynomial degrees in Sym(Q (x) V^*): a generator S^lam Q sits in
degree |lam| and the quadratic generators of Sym(wedge2 Q) or Sym(sym2 Q) in
degree 2.  Determinant twists are ignored since they do not affect any of the
graded quantities computed here.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .branching import covariant_multiplicity, lr_product, restrict_gl_to_sp
from .characters import GradedSchurExpansion, SchurExpansion, char_sp, gl_dim, peel, sym_algebra_slice
from .partitions import Partition, partitions_of
from .shapes import Flavor, ResolutionShape, closed_form_shape, resolution_shape


def generator(flavor) -> str:
    return "wedge2" if Flavor.parse(flavor) is Flavor.SKEW else "sym2"


def covariant_slice(chi, r: int, flavor, d: int) -> SchurExpansion:
    chi = Partition(chi)
    out = SchurExpansion()
    if (d - chi.size) % 2:
        return out
    for gamma in partitions_of(d, r):
        m = covariant_multiplicity(chi, gamma, r, flavor)
        if m:
            out.add_term(gamma, m)
    return out


def covariant_character(chi, r: int, flavor, D: int) -> GradedSchurExpansion:
    """Degree d -> sum over gamma |- d of m_gamma s_gamma(Q)."""
    out = GradedSchurExpansion()
    for d in range(D + 1):
        s = covariant_slice(chi, r, flavor, d)
        if s:
            out[d] = s
    return out


def shape_for(chi, r: int, flavor, source: str = "resolution") -> ResolutionShape:
    if source == "resolution":
        return resolution_shape(chi, r, flavor)
    if source == "closed":
        if Flavor.parse(flavor) is not Flavor.SKEW:
            raise ValueError("the closed-form shape exists only for the skew flavor")
        return closed_form_shape(chi, r)
    raise ValueError(f"unknown shape source {source!r}")


def rhs_slice(shape: ResolutionShape, d: int) -> SchurExpansion:
    r, gen = shape.r, generator(shape.flavor)
    out = SchurExpansion()
    for t, lam in shape.summands():
        rest = d - lam.size
        if rest < 0 or rest % 2:
            continue
        sign = -1 if t % 2 else 1
        for beta in sym_algebra_slice(gen, rest // 2, r):
            for nu, c in lr_product(lam, beta, r).items():
                out.add_term(nu, sign * c)
    return out


def euler_rhs(chi, r: int, flavor, D: int, source: str = "resolution") -> GradedSchurExpansion:
    """Alternating sum of the free modules in the resolution, degree by degree."""
    shape = shape_for(chi, r, flavor, source)
    out = GradedSchurExpansion()
    for d in range(D + 1):
        s = rhs_slice(shape, d)
        if s:
            out[d] = s
    return out


@dataclass
class DegreeResult:
    degree: int
    passed: bool
    lhs: SchurExpansion | None = None
    rhs: SchurExpansion | None = None
    detail: str = ""

    def to_json(self) -> dict:
        out = {"degree": self.degree, "status": "pass" if self.passed else "fail"}
        if self.detail:
            out["detail"] = self.detail
        if not self.passed and self.lhs is not None:
            out["lhs"] = self.lhs.to_json()
            out["rhs"] = self.rhs.to_json()
        return out


@dataclass
class VerificationReport:
    kind: str
    subject: dict
    degrees: list[DegreeResult] = field(default_factory=list)
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(d.passed for d in self.degrees)

    def failures(self) -> list[DegreeResult]:
        return [d for d in self.degrees if not d.passed]

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "kind": self.kind,
            "subject": self.subject,
            "status": "pass" if self.passed else "fail",
            "degrees": [d.to_json() for d in self.degrees],
        }
        if self.notes:
            out["notes"] = list(self.notes)
        if timing:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out


def _check_degree(args) -> DegreeResult:
    chi, r, flavor, d, source = args
    shape = shape_for(chi, r, flavor, source)
    lhs = covariant_slice(chi, r, flavor, d)
    rhs = rhs_slice(shape, d)
    return DegreeResult(d, lhs == rhs, lhs, rhs)


def verify_euler(chi, r: int, flavor, D: int, source: str = "resolution", jobs: int = 1) -> VerificationReport:
    """Compare covariant_character with euler_rhs as Schur expansions in every degree <= D."""
    flavor = Flavor.parse(flavor)
    chi = Partition(chi)
    start = time.perf_counter()
    tasks = [(chi, r, flavor, d, source) for d in range(D + 1)]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_degree, tasks))
    else:
        results = [_check_degree(t) for t in tasks]
    results.sort(key=lambda x: x.degree)
    report = VerificationReport(
        "euler",
        {"chi": chi.to_json(), "r": r, "flavor": flavor.value, "D": D, "shape": source},
        results,
    )
    report.elapsed = time.perf_counter() - start
    return report


def module_covariant_dims(chi, n: int, r: int, flavor, D: int) -> list[int]:
    """Graded dimensions of M(chi) when dim H = n."""
    if n < r:
        raise ValueError(f"need n >= r, got n={n}, r={r}")
    ch = covariant_character(chi, r, flavor, D)
    return ch.dimensions(n, D)


def tensor_decomposition_sp(lam, mu, m: int) -> dict[Partition, int]:
    """S<lam> (x) S<mu> for Sp(2m), by character product and peeling."""
    return peel(char_sp(lam, m) * char_sp(mu, m), "sp", m)


def hom_graded_dims(lam, mu, n: int, r: int, D: int) -> list[int]:
    """Graded dimensions of (S<lam>V^* (x) S<mu>V (x) Sym(H (x) V^*))^Sp(V)."""
    lam, mu = Partition(lam), Partition(mu)
    if r % 2:
        raise ValueError("Hom dimensions are computed for the symplectic setting (r even)")
    m = r // 2
    if len(lam) > m or len(mu) > m:
        raise ValueError(f"labels must have at most {m} parts")
    # Sp irreducibles are self-dual, so this counts copies of the trivial rep
    prod = tensor_decomposition_sp(lam, mu, m)
    dims = []
    for d in range(D + 1):
        total = 0
        for gamma in partitions_of(d, min(r, n)):
            table = restrict_gl_to_sp(gamma, r).mults
            inv = sum(c * table.get(nu, 0) for nu, c in prod.items())
            if inv:
                total += inv * gl_dim(gamma, n)
        dims.append(total)
    return dims
