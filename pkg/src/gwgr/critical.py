"""Critical points of the deformed potential.

The potential W in Chern-root coordinates is sum of q^(k+1)/(k+1); deforming
by (-1)^r X1 makes the critical equations q^k = (-1)^(r-1) with all roots
distinct.  A critical point is therefore an unordered r-subset of the k
solutions, and its coordinates Z are the elementary symmetric values of the
subset.  Root angles are exact; only the symmetric sums are floating.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidGrassmannian, ValidationFailure
from .numerics import GuardedComplex, UnityAngle, guarded_sum, roots_of_sign
from .sympoly import MultiPoly, hessian_class, lg_potential


@dataclass(frozen=True, slots=True)
class CriticalPoint:
    """One critical point: sorted exact root angles plus numeric Z values."""

    q: tuple[UnityAngle, ...]
    z: tuple[GuardedComplex, ...]


def _symmetric_values(roots: tuple[UnityAngle, ...]) -> tuple[GuardedComplex, ...]:
    """e_1..e_r of the given roots: products stay exact angles, sums are
    guarded."""
    r = len(roots)
    zs = []
    for i in range(1, r + 1):
        parts = []
        for combo in itertools.combinations(roots, i):
            prod = UnityAngle.of(0, 1)
            for a in combo:
                prod = prod * a
            parts.append(prod.to_guarded())
        zs.append(guarded_sum(parts))
    return tuple(zs)


def enumerate_critical_points(r: int, k: int) -> list[CriticalPoint]:
    """All C(k, r) critical points, in sorted-subset order."""
    if not (1 <= r < k):
        raise InvalidGrassmannian(f"need 1 <= r < k, got r={r} k={k}")
    base = roots_of_sign(k, r)
    points = []
    for combo in itertools.combinations(base, r):
        points.append(CriticalPoint(q=combo, z=_symmetric_values(combo)))
    return points


@dataclass(frozen=True, slots=True)
class ValidationReport:
    r: int
    k: int
    n_points: int
    max_gradient_residual: float
    min_hessian_modulus: float
    tol: float


def deformed_gradient(r: int, k: int) -> list[MultiPoly]:
    """Partials of W + (-1)^r X1 with respect to X1..Xr."""
    w = lg_potential(r, k)
    grads = [w.diff(i) for i in range(r)]
    shift = MultiPoly.constant(r, (-1) ** r)
    grads[0] = grads[0] + shift
    return grads


def validate_critical_points(r: int, k: int, tol: float = 1e-9) -> ValidationReport:
    """Check every enumerated point: correct count, exact k-th power sign,
    gradient residual below tol, Hessian class separated from zero.

    Raises ValidationFailure if any bound is violated; otherwise returns the
    observed extremes.
    """
    points = enumerate_critical_points(r, k)
    import math

    expected = math.comb(k, r)
    if len(points) != expected:
        raise ValidationFailure(f"expected {expected} points, found {len(points)}")

    target = UnityAngle.of(0, 1) if r % 2 == 1 else UnityAngle.of(1, 2)
    grads = deformed_gradient(r, k)
    h = hessian_class(r, k)

    worst_grad = 0.0
    min_h = float("inf")
    for pt in points:
        for q in pt.q:
            if q ** k != target:
                raise ValidationFailure(f"root {q.turns} has wrong k-th power")
        zs = list(pt.z)
        for gpoly in grads:
            res = gpoly.eval_guarded(zs).modulus()
            worst_grad = max(worst_grad, res)
            if res > tol:
                raise ValidationFailure(
                    f"gradient residual {res:.3e} > {tol:.3e} at point {pt.q}"
                )
        hv = h.eval_guarded(zs)
        hm = hv.modulus()
        min_h = min(min_h, hm)
        if hm <= max(tol, hv.err):
            raise ValidationFailure(
                f"Hessian class not separated from zero at point {pt.q}"
            )
    return ValidationReport(
        r=r,
        k=k,
        n_points=len(points),
        max_gradient_residual=worst_grad,
        min_hessian_modulus=min_h,
        tol=tol,
    )
