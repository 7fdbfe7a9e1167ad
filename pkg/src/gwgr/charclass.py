"""Finite graded-ring models and truncated characteristic-class series.

A GradedRingSpec is a finite presentation of the piece of a cohomology ring
an evaluation needs: named generators with degrees, nilpotency bounds, an
optional monomial rewrite system, and an evaluation functional defined on
top-degree monomials (integration against the fundamental class; everything
else integrates to zero).  RingSeries is a t-power series with coefficients
in such a ring; series inversion turns total Chern classes into total Segre
classes and back.

On top of this sit the three concrete evaluations the cross-checks need: the
theta-ring computation of the exact top power k^g, and the two blow-up
coefficient extractions feeding the wall-crossing pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonUnitConstantTerm, TruncationTooLow
from .numerics import binomial

Monomial = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class RewriteRule:
    """source -> coeff * target, applied to any monomial divisible by source."""

    source: Monomial
    coeff: Fraction
    target: Monomial


@dataclass(frozen=True)
class GradedRingSpec:
    """Finite model of a graded ring with an evaluation functional.

    nilpotent[i] = p means generator_i^p = 0 (0 disables the bound; the
    top-degree cap still keeps the monomial basis finite).  evaluation maps
    top-degree monomials to rationals; unlisted monomials integrate to zero.
    """

    generators: tuple[str, ...]
    degrees: tuple[int, ...]
    nilpotent: tuple[int, ...]
    top_degree: int
    evaluation: dict[Monomial, Fraction] = field(default_factory=dict)
    rewrites: tuple[RewriteRule, ...] = ()

    def __post_init__(self):
        if len(self.generators) != len(self.degrees) or len(self.generators) != len(
            self.nilpotent
        ):
            raise ValueError("generator/degree/nilpotent lengths differ")
        if any(d < 1 for d in self.degrees):
            raise ValueError("generator degrees must be >= 1")
        for mono in self.evaluation:
            if self.degree(mono) != self.top_degree:
                raise ValueError(
                    f"evaluation key {mono} is not of top degree {self.top_degree}"
                )

    def degree(self, mono: Monomial) -> int:
        return sum(d * e for d, e in zip(self.degrees, mono))

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.generators)

    def _dead(self, mono: Monomial) -> bool:
        if self.degree(mono) > self.top_degree:
            return True
        return any(p and e >= p for e, p in zip(mono, self.nilpotent))

    def normalize(self, mono: Monomial, coeff: Fraction):
        """Apply nilpotency, the degree cap and the rewrite system.

        Returns (monomial, coefficient) or None for zero.  Rewrites are
        applied first-match in listed order; the confluence checker verifies
        the order cannot matter.
        """
        fuel = 1000
        while True:
            if not coeff or self._dead(mono):
                return None
            for rule in self.rewrites:
                if all(e >= s for e, s in zip(mono, rule.source)):
                    mono = tuple(e - s + t for e, s, t in zip(mono, rule.source, rule.target))
                    coeff = coeff * rule.coeff
                    break
            else:
                return mono, coeff
            fuel -= 1
            if fuel == 0:
                raise ValueError("rewrite system does not terminate")

    def basis(self) -> list[Monomial]:
        """All monomials surviving nilpotency and the degree cap."""
        out: list[Monomial] = []

        def rec(i: int, mono: list[int], deg: int):
            if i == len(self.generators):
                out.append(tuple(mono))
                return
            e = 0
            while True:
                if self.nilpotent[i] and e >= self.nilpotent[i]:
                    break
                d = deg + e * self.degrees[i]
                if d > self.top_degree:
                    break
                mono.append(e)
                rec(i + 1, mono, d)
                mono.pop()
                e += 1

        rec(0, [], 0)
        return out

    def check_confluence(self) -> bool:
        """Every single-step rewrite choice leads to the same normal form."""
        for mono in self.basis():
            outcomes = set()
            outcomes.add(self.normalize(mono, Fraction(1)))
            for rule in self.rewrites:
                if all(e >= s for e, s in zip(mono, rule.source)):
                    stepped = tuple(
                        e - s + t for e, s, t in zip(mono, rule.source, rule.target)
                    )
                    outcomes.add(self.normalize(stepped, rule.coeff))
            if len(outcomes) > 1:
                return False
        return True


@dataclass(frozen=True, slots=True)
class RingElement:
    """Element of a GradedRingSpec ring: {normalized monomial: coefficient}."""

    spec: GradedRingSpec
    terms: dict[Monomial, Fraction]

    @classmethod
    def build(cls, spec: GradedRingSpec, raw: dict[Monomial, Fraction]) -> "RingElement":
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in raw.items():
            norm = spec.normalize(mono, Fraction(coeff))
            if norm is None:
                continue
            m, c = norm
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return cls(spec, out)

    @classmethod
    def zero(cls, spec: GradedRingSpec) -> "RingElement":
        return cls(spec, {})

    @classmethod
    def one(cls, spec: GradedRingSpec) -> "RingElement":
        return cls.build(spec, {spec.unit_monomial(): Fraction(1)})

    @classmethod
    def scalar(cls, spec: GradedRingSpec, c) -> "RingElement":
        return cls.build(spec, {spec.unit_monomial(): Fraction(c)})

    @classmethod
    def generator(cls, spec: GradedRingSpec, name: str) -> "RingElement":
        i = spec.generators.index(name)
        mono = [0] * len(spec.generators)
        mono[i] = 1
        return cls.build(spec, {tuple(mono): Fraction(1)})

    def __add__(self, other: "RingElement") -> "RingElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return RingElement(self.spec, out)

    def __neg__(self) -> "RingElement":
        return RingElement(self.spec, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        raw: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                raw[m] = raw.get(m, Fraction(0)) + ca * cb
        return RingElement.build(self.spec, raw)

    def scaled(self, c) -> "RingElement":
        c = Fraction(c)
        return RingElement(self.spec, {m: c * v for m, v in self.terms.items()} if c else {})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingElement)
            and self.spec == other.spec
            and self.terms == other.terms
        )

    def evaluate(self) -> Fraction:
        """Integrate: pair top-degree monomials with the functional."""
        total = Fraction(0)
        for m, c in self.terms.items():
            total += c * self.spec.evaluation.get(m, Fraction(0))
        return total


@dataclass(frozen=True, slots=True)
class RingSeries:
    """Truncated power series in t with RingElement coefficients."""

    coeffs: tuple[RingElement, ...]

    @property
    def spec(self) -> GradedRingSpec:
        return self.coeffs[0].spec

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> RingElement:
        if i > self.order:
            raise TruncationTooLow(f"coefficient {i} beyond truncation {self.order}")
        return self.coeffs[i]

    @classmethod
    def one(cls, spec: GradedRingSpec, order: int) -> "RingSeries":
        return cls((RingElement.one(spec),) + tuple(RingElement.zero(spec) for _ in range(order)))

    @classmethod
    def linear(cls, const: RingElement, slope: RingElement, order: int) -> "RingSeries":
        """const + slope * t, truncated at the given order."""
        tail = tuple(RingElement.zero(const.spec) for _ in range(max(0, order - 1)))
        return cls((const, slope) + tail if order >= 1 else (const,))

    def __mul__(self, other: "RingSeries") -> "RingSeries":
        order = min(self.order, other.order)
        spec = self.spec
        out = [RingElement.zero(spec) for _ in range(order + 1)]
        for i, a in enumerate(self.coeffs):
            if i > order or a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > order:
                    break
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return RingSeries(tuple(out))

    def __neg__(self) -> "RingSeries":
        return RingSeries(tuple(-c for c in self.coeffs))

    def pow(self, e: int) -> "RingSeries":
        """Integer power; negative exponents go through series inversion."""
        if e < 0:
            return series_inverse(self).pow(-e)
        result = RingSeries.one(self.spec, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result


def series_inverse(c: RingSeries) -> RingSeries:
    """Multiplicative inverse of a series with constant term one.

    This is the Chern-to-Segre involution: applying it twice returns the
    original truncated series.
    """
    spec = c.spec
    if c.coeffs[0] != RingElement.one(spec):
        raise NonUnitConstantTerm("series inversion requires constant term 1")
    out = [RingElement.one(spec)]
    for i in range(1, c.order + 1):
        acc = RingElement.zero(spec)
        for j in range(1, i + 1):
            cj = c.coeffs[j] if j <= c.order else RingElement.zero(spec)
            acc = acc + cj * out[i - j]
        out.append(-acc)
    return RingSeries(tuple(out))


def pushforward_power(l: int, fiber_rank: int, s: RingSeries) -> RingElement:
    """Push a fiberwise hyperplane power down a projective bundle.

    The l-th power of the relative hyperplane class integrates along a rank
    fiber_rank projectivization to the Segre coefficient s_(l - fiber_rank + 1);
    below the fiber dimension the push-forward vanishes.
    """
    if fiber_rank < 1:
        raise ValueError("fiber_rank must be >= 1")
    if l < fiber_rank - 1:
        return RingElement.zero(s.spec)
    idx = l - fiber_rank + 1
    if idx > s.order:
        raise TruncationTooLow(
            f"need Segre coefficient {idx}, series truncated at {s.order}"
        )
    return s[idx]


# ---------------------------------------------------------------------------
# Concrete evaluations.
# ---------------------------------------------------------------------------


def theta_ring(g: int) -> GradedRingSpec:
    """Q[theta]/(theta^(g+1)) with integration theta^g -> g!."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    return GradedRingSpec(
        generators=("theta",),
        degrees=(1,),
        nilpotent=(g + 1,),
        top_degree=g,
        evaluation={(g,): Fraction(math.factorial(g))},
    )


def theta_integral(g: int, k: int, d: int) -> int:
    """Exact top intersection power on maps to projective space: k^g.

    The total Chern class of the obstruction bundle is exp(-k theta); its
    Segre series inverts it, the hyperplane-power push-forward picks out the
    g-th Segre coefficient k^g theta^g / g!, and integration gives k^g.
    """
    spec = theta_ring(g)
    theta = RingElement.generator(spec, "theta")
    coeffs = []
    power = RingElement.one(spec)
    for i in range(g + 1):
        coeffs.append(power.scaled(Fraction((-k) ** i, math.factorial(i))))
        if i < g:
            power = power * theta
    segre = series_inverse(RingSeries(tuple(coeffs)))
    fiber_rank = k * (d + 1 - g)
    if fiber_rank >= 1:
        top = pushforward_power(fiber_rank - 1 + g, fiber_rank, segre)
    else:
        top = segre[g]
    value = top.evaluate()
    if value.denominator != 1:
        raise ValueError(f"theta integral produced non-integer {value}")
    return int(value)


def blowup_correction(
    m: int,
    n: int,
    top_index: int,
    s_normal: RingSeries,
    c1_bundle: RingElement,
    c2_bundle: RingElement,
    c1_line: RingElement,
) -> Fraction:
    """Evaluated coefficient of a blow-up correction term.

    Expands -s_normal * (1 + c1_bundle t)^m * (c1_line + c2_bundle t)^n,
    extracts the t^(top_index - n) coefficient and integrates it against the
    ring's evaluation functional.
    """
    order = top_index - n
    if order < 0:
        return Fraction(0)
    if s_normal.order < order:
        raise TruncationTooLow(
            f"series truncated at {s_normal.order}, need {order}"
        )
    spec = s_normal.spec
    one = RingElement.one(spec)
    f_bundle = RingSeries.linear(one, c1_bundle, order).pow(m)
    f_line = RingSeries.linear(c1_line, c2_bundle, order).pow(n)
    product = (-s_normal) * f_bundle * f_line
    return product[order].evaluate()


def diagonal_blowup_ring(d: int, k: int) -> GradedRingSpec:
    """Ring for the even-degree initial term: the half-degree projective
    bundle with its square-zero divisor class.

    Generators w (hyperplane) and e (divisor): e^2 = 0, w^(kd/2) = 0, and the
    sole surviving top pairing is w^(kd/2 - 1) e -> 2/d.
    """
    if d < 2 or d % 2:
        raise ValueError("need even d >= 2")
    if k < 1:
        raise ValueError("need k >= 1")
    half = k * d // 2
    return GradedRingSpec(
        generators=("w", "e"),
        degrees=(1, 1),
        nilpotent=(half, 2),
        top_degree=half,
        evaluation={(half - 1, 1): Fraction(2, d)},
    )


def diagonal_blowup_correction(d: int, k: int, n: int) -> Fraction:
    """The evaluated blow-up coefficient behind the even-degree initial term.

    Equals -k * 2^(kd - 2n) for every admissible n; the identity checker
    even_degree_identity verifies the same value by direct algebra.
    """
    m = k * d - 2 * n
    if m < 0:
        raise ValueError("need 2n <= kd")
    spec = diagonal_blowup_ring(d, k)
    w = RingElement.generator(spec, "w")
    e = RingElement.generator(spec, "e")
    we = w + e
    order = m // 2
    one = RingElement.one(spec)
    chern = RingSeries.linear(one, w, order).pow(k * d // 2)
    s_normal = series_inverse(chern)
    return blowup_correction(
        m, n, k * d // 2, s_normal, we.scaled(2), we * we, we
    )


def wall_crossing_ring(d: int, k: int, l: int) -> GradedRingSpec:
    """Ring for the level-l wall correction.

    Generators: w (fiber hyperplane), y (base hyperplane), e (square-zero
    divisor class of the level).  With K = k(d - l), y^(K+2) = 0 and the
    surviving top pairings are w^(2l-d-1) y^(K+1) -> (K+1)k/l and
    w^(2l-d-1) y^K e -> k/l.
    """
    if not (d // 2 + 1 <= l <= d):
        raise ValueError("need d/2 < l <= d")
    if k < 1:
        raise ValueError("need k >= 1")
    big_k = k * (d - l)
    fiber_dim = 2 * l - d - 1
    return GradedRingSpec(
        generators=("w", "y", "e"),
        degrees=(1, 1, 1),
        nilpotent=(0, big_k + 2, 2),
        top_degree=fiber_dim + big_k + 1,
        evaluation={
            (fiber_dim, big_k + 1, 0): Fraction((big_k + 1) * k, l),
            (fiber_dim, big_k, 1): Fraction(k, l),
        },
    )


def wall_crossing_correction(d: int, k: int, l: int, n: int) -> Fraction:
    """The evaluated wall correction at level l.

    Equals (-1)^d k^2 C(kd-2n, kl-n), with the binomial zero outside its
    range; the flip pipeline consumes exactly these numbers.
    """
    m = k * d - 2 * n
    if m < 0:
        raise ValueError("need 2n <= kd")
    spec = wall_crossing_ring(d, k, l)
    w = RingElement.generator(spec, "w")
    y = RingElement.generator(spec, "y")
    e = RingElement.generator(spec, "e")
    top_index = spec.top_degree
    order = top_index - n
    if order < 0:
        return Fraction(0)
    one = RingElement.one(spec)
    # normal Segre series: (1 - wt)^(2l - d - kl) with a negative exponent
    base = RingSeries.linear(one, -w, order)
    s_normal = base.pow(2 * l - d - k * l)
    c1_bundle = y - w
    c1_line = y - e
    c2_bundle = c1_line * (e - w)
    return blowup_correction(m, n, top_index, s_normal, c1_bundle, c2_bundle, c1_line)


def expected_wall_correction(d: int, k: int, l: int, n: int) -> Fraction:
    """Closed form the ring extraction must reproduce."""
    m = k * d - 2 * n
    return Fraction((-1) ** d * k * k * binomial(m, k * l - n))


def even_degree_identity(d: int, k: int, n: int) -> bool:
    """Exact check that the two-term evaluation of the even-degree blow-up
    coefficient collapses to -k 2^m:
    -2m (2/d) 2^(m-2) - n (2/d) 2^m == -k 2^m, with m = kd - 2n."""
    if d < 2 or d % 2:
        raise ValueError("need even d >= 2")
    m = k * d - 2 * n
    if m < 0:
        raise ValueError("need 2n <= kd")
    two = Fraction(2)
    lhs = -2 * m * Fraction(2, d) * two ** (m - 2) - n * Fraction(2, d) * two ** m
    return lhs == -k * two ** m
