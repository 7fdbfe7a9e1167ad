"""Intersection-number pipelines and their cross-checking dispatcher.

The primary evaluator is the residue formula: a sum of h^(g-1)(Z) times the
exponent monomial over the critical points of the deformed potential.  For
G(2, k) at genus one there are three independent routes (root-of-unity
oracle, binomial closed form, wall-crossing recursion), and for r = 1 the
exact power k^g; the dispatcher runs any subset and insists they agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .critical import enumerate_critical_points
from .errors import (
    CrossCheckMismatch,
    DimensionMismatch,
    InvalidGrassmannian,
    NonIntegerResult,
    PipelineNotApplicable,
    PrecisionBudgetExceeded,
    ValidationFailure,
)
from .numerics import (
    FLOATING_KD_BUDGET,
    GuardedComplex,
    UnityAngle,
    binomial,
    guarded_sum,
    integer_residual,
    round_to_integer,
)
from .sympoly import hessian_class

PIPELINES = ("vi", "oracle", "closed", "flip", "projective")


@dataclass(frozen=True, slots=True)
class InvariantQuery:
    """A single intersection number: genus, degree, Grassmannian, exponents.

    The exponents s must hit the moduli-space dimension:
    sum(i * s_i) == k*d - r*(k-r)*(g-1).
    """

    g: int
    d: int
    r: int
    k: int
    s: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))
        if not (1 <= self.r < self.k):
            raise InvalidGrassmannian(f"need 1 <= r < k, got r={self.r} k={self.k}")
        if self.g < 0 or self.d < 0:
            raise DimensionMismatch("genus and degree must be nonnegative")
        if len(self.s) != self.r or any(x < 0 for x in self.s):
            raise DimensionMismatch(
                f"need {self.r} nonnegative exponents, got {self.s}"
            )
        want = self.dimension()
        have = sum((i + 1) * x for i, x in enumerate(self.s))
        if want != have:
            raise DimensionMismatch(
                f"weighted exponent degree {have} != moduli dimension {want} "
                f"for g={self.g} d={self.d} r={self.r} k={self.k}"
            )

    def dimension(self) -> int:
        return self.k * self.d - self.r * (self.k - self.r) * (self.g - 1)

    def is_formal(self) -> bool:
        """Below the degree range where the geometric meaning is established."""
        return self.d <= 2 * self.r * (self.g - 1)


@dataclass(frozen=True, slots=True)
class PipelineResult:
    value: int
    pipeline: str
    residual: float
    exact: bool


def _check_budget(k: int, d: int):
    if k * d > FLOATING_KD_BUDGET:
        raise PrecisionBudgetExceeded(
            f"kd = {k * d} exceeds the floating budget {FLOATING_KD_BUDGET}"
        )


def vafa_intriligator(query: InvariantQuery, tol: float = 1e-9) -> PipelineResult:
    """Residue-formula value: sum of h^(g-1)(Z) * prod Z_i^(s_i) over the
    critical points, rounded to an integer within tol."""
    _check_budget(query.k, query.d)
    points = enumerate_critical_points(query.r, query.k)
    h = hessian_class(query.r, query.k)
    terms = []
    for pt in points:
        zs = list(pt.z)
        term = GuardedComplex(1.0, 0.0, 0.0)
        if query.g != 1:
            hv = h.eval_guarded(zs)
            if query.g == 0 and hv.modulus() <= max(tol, 2 * hv.err):
                raise ValidationFailure("Hessian class vanishes at a critical point")
            term = hv ** (query.g - 1)
        for i, e in enumerate(query.s):
            if e:
                term = term * zs[i] ** e
        terms.append(term)
    total = guarded_sum(terms)
    value = round_to_integer(total, tol)
    return PipelineResult(value, "vi", integer_residual(total), exact=False)


def brute_force_r2(d: int, k: int, n: int, tol: float = 1e-9) -> PipelineResult:
    """Genus-one G(2, k) value as (-1)^d/2 times the sum of
    (x1+x2)^(kd-2n) (x1 x2)^n over ordered pairs of distinct k-th roots of
    unity.  Pair products stay exact angles; only pair sums are floating."""
    if k < 3:
        raise InvalidGrassmannian(f"need k >= 3 for r = 2, got k={k}")
    if d < 0 or not (0 <= 2 * n <= k * d):
        raise DimensionMismatch(f"need 0 <= 2n <= kd, got d={d} k={k} n={n}")
    _check_budget(k, d)
    m = k * d - 2 * n
    roots = [UnityAngle.of(j, k) for j in range(k)]
    terms = []
    for a in range(k):
        for b in range(k):
            if a == b:
                continue
            pair_sum = roots[a].to_guarded() + roots[b].to_guarded()
            prod_pow = ((roots[a] * roots[b]) ** n).to_guarded()
            terms.append((pair_sum ** m) * prod_pow)
    total = guarded_sum(terms).scale(Fraction((-1) ** d, 2))
    value = round_to_integer(total, tol)
    return PipelineResult(value, "oracle", integer_residual(total), exact=False)


def closed_form_r2_g1(d: int, k: int, n: int) -> PipelineResult:
    """Exact genus-one G(2, k) value:
    (-1)^(d+1) k 2^(kd-2n-1) - (-1)^(d+1) (k^2/2) sum_p C(kd-2n, kp-n)."""
    if k < 3:
        raise InvalidGrassmannian(f"need k >= 3 for r = 2, got k={k}")
    if d < 0 or not (0 <= 2 * n <= k * d):
        raise DimensionMismatch(f"need 0 <= 2n <= kd, got d={d} k={k} n={n}")
    m = k * d - 2 * n
    sign = (-1) ** (d + 1)
    lead = Fraction(sign * k) * Fraction(2) ** (m - 1)
    corr = sum(binomial(m, k * p - n) for p in range(0, d + 1))
    total = lead - Fraction(sign * k * k, 2) * corr
    if total.denominator != 1:
        raise NonIntegerResult(f"closed form produced {total}", float("nan"))
    return PipelineResult(int(total), "closed", 0.0, exact=True)


def flip_pipeline_r2_g1(d: int, k: int, n: int) -> PipelineResult:
    """Exact genus-one G(2, k) value by recursion over flips: a parity-
    dependent initial projective-bundle term plus one wall-crossing
    correction (-1)^d k^2 C(kd-2n, kl-n) per integer level l in (d/2, d]."""
    if k < 3:
        raise InvalidGrassmannian(f"need k >= 3 for r = 2, got k={k}")
    if d < 0 or not (0 <= 2 * n <= k * d):
        raise DimensionMismatch(f"need 0 <= 2n <= kd, got d={d} k={k} n={n}")
    m = k * d - 2 * n
    if d % 2 == 1:
        total = Fraction(k) * Fraction(2) ** (m - 1)
    else:
        total = Fraction(k * k, 2) * binomial(m, m // 2) - Fraction(k) * Fraction(2) ** (m - 1)
    for level in range(d // 2 + 1, d + 1):
        total += Fraction((-1) ** d * k * k * binomial(m, k * level - n))
    if total.denominator != 1:
        raise NonIntegerResult(f"flip recursion produced {total}", float("nan"))
    return PipelineResult(int(total), "flip", 0.0, exact=True)


def projective_invariant(g: int, d: int, k: int) -> PipelineResult:
    """Top-power value k^g on projective space (r = 1), exact."""
    if k < 2:
        raise InvalidGrassmannian(f"need k >= 2 for r = 1, got k={k}")
    if g < 0 or d < 0:
        raise DimensionMismatch("genus and degree must be nonnegative")
    return PipelineResult(k ** g, "projective", 0.0, exact=True)


def applicable_pipelines(query: InvariantQuery) -> tuple[str, ...]:
    """The pipelines that compute this query: vi always; the three G(2, k)
    routes only at genus one; the exact power only at r = 1."""
    names = ["vi"]
    if query.r == 2 and query.g == 1:
        names += ["oracle", "closed", "flip"]
    if query.r == 1:
        names.append("projective")
    return tuple(names)


def invariant(
    query: InvariantQuery,
    pipelines: str | tuple[str, ...] = "all",
    tol: float = 1e-9,
) -> list[PipelineResult]:
    """Run the requested pipelines and cross-check their integer values.

    pipelines may be "all" (every applicable route) or an explicit subset;
    requesting an inapplicable pipeline raises PipelineNotApplicable, and any
    disagreement raises CrossCheckMismatch reporting all values.
    """
    allowed = applicable_pipelines(query)
    if pipelines == "all":
        chosen = allowed
    else:
        if isinstance(pipelines, str):
            pipelines = (pipelines,)
        for name in pipelines:
            if name not in PIPELINES:
                raise PipelineNotApplicable(f"unknown pipeline {name!r}")
            if name not in allowed:
                raise PipelineNotApplicable(
                    f"pipeline {name!r} does not apply to g={query.g} r={query.r}"
                )
        chosen = tuple(pipelines)

    n = query.s[1] if query.r == 2 else 0
    results = []
    for name in chosen:
        if name == "vi":
            results.append(vafa_intriligator(query, tol))
        elif name == "oracle":
            results.append(brute_force_r2(query.d, query.k, n, tol))
        elif name == "closed":
            results.append(closed_form_r2_g1(query.d, query.k, n))
        elif name == "flip":
            results.append(flip_pipeline_r2_g1(query.d, query.k, n))
        elif name == "projective":
            results.append(projective_invariant(query.g, query.d, query.k))

    values = {res.pipeline: res.value for res in results}
    if len(set(values.values())) > 1:
        raise CrossCheckMismatch(f"pipelines disagree: {values}", values)
    return results
