"""Exact and guarded numeric kernels.

Exact side: binomial coefficients with the out-of-range-zero convention, and
roots of unity stored as exact angle fractions so that products, integer
powers and equality tests never touch floating point.  Floating side: complex
values carrying a running error bound, and a compensated summation whose
reported bound stays proportional to the sum of term magnitudes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegerResult

# One rounding step at magnitude 1.  All bounds below are loose multiples of
# this; they only ever need to stay above the true error.
EPS = 2.0 ** -52

# Largest k*d accepted by the double-precision residue pipelines.  Individual
# terms grow like 2^(kd - 2n) and must stay well inside the 53-bit mantissa.
FLOATING_KD_BUDGET = 48


def binomial(n: int, m: int) -> int:
    """C(n, m), taken to be 0 whenever m < 0 or m > n.  Requires n >= 0."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if m < 0 or m > n:
        return 0
    return math.comb(n, m)


@dataclass(frozen=True, slots=True)
class UnityAngle:
    """The root of unity exp(2*pi*i*turns), with turns an exact fraction.

    turns is reduced modulo 1, so equality of angles is equality of values.
    The group law is addition of turns; integer powers scale turns.  Nothing
    here is floating point until to_guarded() is called.
    """

    turns: Fraction

    def __post_init__(self):
        object.__setattr__(self, "turns", Fraction(self.turns) % 1)

    @classmethod
    def of(cls, j: int, n: int) -> "UnityAngle":
        """exp(2*pi*i*j/n) for a positive denominator n."""
        if n <= 0:
            raise ValueError("denominator must be positive")
        return cls(Fraction(j, n))

    @property
    def j(self) -> int:
        return self.turns.numerator

    @property
    def n(self) -> int:
        return self.turns.denominator

    def __mul__(self, other: "UnityAngle") -> "UnityAngle":
        return UnityAngle(self.turns + other.turns)

    def __pow__(self, e: int) -> "UnityAngle":
        return UnityAngle(self.turns * e)

    def inverse(self) -> "UnityAngle":
        return UnityAngle(-self.turns)

    def conjugate(self) -> "UnityAngle":
        return self.inverse()

    def to_guarded(self) -> "GuardedComplex":
        t = self.turns
        # The four axis angles convert exactly.
        if t.denominator == 1:
            return GuardedComplex(1.0, 0.0, 0.0)
        if t.denominator == 2:
            return GuardedComplex(-1.0, 0.0, 0.0)
        if t.denominator == 4:
            return GuardedComplex(0.0, 1.0 if t.numerator == 1 else -1.0, 0.0)
        a = math.tau * (t.numerator / t.denominator)
        return GuardedComplex(math.cos(a), math.sin(a), 8 * EPS)


def roots_of_sign(k: int, r: int) -> list[UnityAngle]:
    """The k solutions of q^k = (-1)^(r-1), sorted by angle.

    Odd r: plain k-th roots of unity (angles j/k).  Even r: the k-th roots of
    -1 (angles (2j+1)/(2k)).
    """
    if k < 1 or r < 1:
        raise ValueError("need k >= 1 and r >= 1")
    if r % 2 == 1:
        return [UnityAngle.of(j, k) for j in range(k)]
    return [UnityAngle.of(2 * j + 1, 2 * k) for j in range(k)]


def _mag(re: float, im: float) -> float:
    return math.hypot(re, im)


@dataclass(frozen=True, slots=True)
class GuardedComplex:
    """A complex double along with an upper bound on its absolute error.

    The bound err is propagated monotonically: every operation returns a value
    whose err dominates the inherited input errors plus fresh roundoff.
    """

    re: float
    im: float
    err: float = 0.0

    @classmethod
    def of(cls, z: complex) -> "GuardedComplex":
        return cls(z.real, z.imag, 0.0)

    @classmethod
    def from_real(cls, x: float) -> "GuardedComplex":
        return cls(float(x), 0.0, 0.0)

    @classmethod
    def from_fraction(cls, q: Fraction) -> "GuardedComplex":
        x = q.numerator / q.denominator
        return cls(x, 0.0, EPS * abs(x))

    def modulus(self) -> float:
        return _mag(self.re, self.im)

    def __add__(self, other: "GuardedComplex") -> "GuardedComplex":
        re, im = self.re + other.re, self.im + other.im
        err = self.err + other.err + EPS * (_mag(re, im) + 1e-300)
        return GuardedComplex(re, im, err)

    def __sub__(self, other: "GuardedComplex") -> "GuardedComplex":
        return self + (-other)

    def __neg__(self) -> "GuardedComplex":
        return GuardedComplex(-self.re, -self.im, self.err)

    def __mul__(self, other: "GuardedComplex") -> "GuardedComplex":
        a, b = self, other
        re = a.re * b.re - a.im * b.im
        im = a.re * b.im + a.im * b.re
        ma, mb = a.modulus(), b.modulus()
        err = (ma + a.err) * b.err + mb * a.err + 4 * EPS * ma * mb
        return GuardedComplex(re, im, err)

    def scale(self, q: Fraction | int) -> "GuardedComplex":
        f = q.numerator / q.denominator if isinstance(q, Fraction) else float(q)
        af = abs(f)
        err = af * self.err + 2 * EPS * af * (self.modulus() + self.err)
        return GuardedComplex(self.re * f, self.im * f, err)

    def reciprocal(self) -> "GuardedComplex":
        m = self.modulus()
        if m <= 2 * self.err:
            raise ZeroDivisionError("reciprocal of a value not separated from zero")
        d = self.re * self.re + self.im * self.im
        re, im = self.re / d, -self.im / d
        # |1/(z+dz) - 1/z| <= |dz| / (|z| (|z| - |dz|)), plus roundoff
        err = self.err / (m * (m - self.err)) + 4 * EPS / m
        return GuardedComplex(re, im, err)

    def __pow__(self, e: int) -> "GuardedComplex":
        if e < 0:
            return self.reciprocal() ** (-e)
        result = GuardedComplex(1.0, 0.0, 0.0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result


def guarded_sum(terms: list[GuardedComplex]) -> GuardedComplex:
    """Compensated (Neumaier) summation of both components.

    The reported bound is the inherited term errors plus c * EPS * sum of
    term magnitudes for a small constant c, independent of the term count.
    """
    sre = sim = cre = cim = 0.0
    abs_total = 0.0
    inherited = 0.0
    for t in terms:
        for val, is_re in ((t.re, True), (t.im, False)):
            if is_re:
                s = sre + val
                cre += (sre - s + val) if abs(sre) >= abs(val) else (val - s + sre)
                sre = s
            else:
                s = sim + val
                cim += (sim - s + val) if abs(sim) >= abs(val) else (val - s + sim)
                sim = s
        abs_total += t.modulus()
        inherited += t.err
    return GuardedComplex(sre + cre, sim + cim, inherited + 4 * EPS * abs_total)


def round_to_integer(z: GuardedComplex, tol: float) -> int:
    """Nearest integer to z, provided z is that close to the real axis.

    The acceptance window is max(tol, z.err); outside it the value is not
    trustworthy as an integer and NonIntegerResult is raised.
    """
    n = math.floor(z.re + 0.5)
    residual = abs(z.re - n) + abs(z.im)
    if residual > max(tol, z.err):
        raise NonIntegerResult(
            f"value {z.re}+{z.im}j has residual {residual:.3e} > {max(tol, z.err):.3e}",
            residual,
        )
    return n


def integer_residual(z: GuardedComplex) -> float:
    """Distance from z to the nearest integer on the real axis."""
    n = math.floor(z.re + 0.5)
    return abs(z.re - n) + abs(z.im)
