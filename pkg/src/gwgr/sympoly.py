"""Sparse multivariate polynomials over the rationals, and the potential.

Variables X1..Xr are the elementary symmetric functions of r Chern roots, so
Xi carries weighted degree i.  Built on top of these: power sums via Newton's
identity, the degree-(k+1) potential in both its constructions, the relation
polynomials from the inverse Chern series, and the signed Hessian determinant
used by the residue formula.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidGrassmannian
from .numerics import GuardedComplex, guarded_sum

Exponents = tuple[int, ...]


class MultiPoly:
    """Polynomial in nvars variables: {exponent tuple: nonzero Fraction}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Exponents, Fraction] | None = None):
        self.nvars = nvars
        self.terms: dict[Exponents, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tuple(e)] = c

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        """The variable X(i+1), of weighted degree i+1."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    # -- ring operations ----------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out: dict[Exponents, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, Fraction(0)) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(self.nvars, out)

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scaled(self, c) -> "MultiPoly":
        c = Fraction(c)
        return MultiPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # -- calculus and grading -----------------------------------------------

    def diff(self, i: int) -> "MultiPoly":
        """Partial derivative with respect to X(i+1)."""
        out: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            de = list(e)
            de[i] -= 1
            out[tuple(de)] = c * e[i]
        return MultiPoly(self.nvars, out)

    def weighted_degree_of(self, e: Exponents) -> int:
        return sum((i + 1) * p for i, p in enumerate(e))

    def weighted_homogeneous_degree(self) -> int | None:
        """The common weighted degree of all terms, or None if mixed/zero."""
        degs = {self.weighted_degree_of(e) for e in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    # -- evaluation and substitution ----------------------------------------

    def substitute(self, values: list["MultiPoly"]) -> "MultiPoly":
        """Substitute polynomial values for the variables (exact)."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of substitution values")
        nv = values[0].nvars if values else 0
        cache: list[dict[int, MultiPoly]] = [dict() for _ in range(self.nvars)]

        def power(i: int, p: int) -> MultiPoly:
            if p not in cache[i]:
                cache[i][p] = values[i] ** p
            return cache[i][p]

        total = MultiPoly.zero(nv)
        for e, c in self.terms.items():
            term = MultiPoly.constant(nv, c)
            for i, p in enumerate(e):
                if p:
                    term = term * power(i, p)
            total = total + term
        return total

    def eval_exact(self, values: list[Fraction]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for i, p in enumerate(e):
                if p:
                    v *= values[i] ** p
            total += v
        return total

    def eval_guarded(self, values: list[GuardedComplex]) -> GuardedComplex:
        """Evaluate at guarded complex arguments with error tracking."""
        cache: list[dict[int, GuardedComplex]] = [dict() for _ in range(self.nvars)]

        def power(i: int, p: int) -> GuardedComplex:
            if p not in cache[i]:
                cache[i][p] = values[i] ** p
            return cache[i][p]

        parts = []
        for e in sorted(self.terms, reverse=True):
            v = GuardedComplex(1.0, 0.0, 0.0)
            for i, p in enumerate(e):
                if p:
                    v = v * power(i, p)
            parts.append(v.scale(self.terms[e]))
        return guarded_sum(parts)

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = []
            for i, p in enumerate(e):
                if p == 1:
                    factors.append(f"X{i + 1}")
                elif p > 1:
                    factors.append(f"X{i + 1}^{p}")
            body = " ".join(factors)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag} {body}"
            pieces.append((c < 0, text))
        first_neg, first = pieces[0]
        out = ("-" if first_neg else "") + first
        for neg, text in pieces[1:]:
            out += (" - " if neg else " + ") + text
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.terms!r})"


# ---------------------------------------------------------------------------
# Truncated series in t with MultiPoly coefficients (internal helper).
# ---------------------------------------------------------------------------


def _series_mul(a: list[MultiPoly], b: list[MultiPoly], order: int) -> list[MultiPoly]:
    nv = a[0].nvars
    out = [MultiPoly.zero(nv) for _ in range(order + 1)]
    for i, pa in enumerate(a):
        if i > order or pa.is_zero():
            continue
        for j, pb in enumerate(b):
            if i + j > order:
                break
            if pb.is_zero():
                continue
            out[i + j] = out[i + j] + pa * pb
    return out


def _chern_series(r: int, k_order: int) -> list[MultiPoly]:
    """1 + X1 t + ... + Xr t^r as a series truncated at t^k_order."""
    c = [MultiPoly.zero(r) for _ in range(k_order + 1)]
    c[0] = MultiPoly.constant(r, 1)
    for i in range(1, min(r, k_order) + 1):
        c[i] = MultiPoly.variable(r, i - 1)
    return c


# ---------------------------------------------------------------------------
# Power sums, the potential, relations, Hessian.
# ---------------------------------------------------------------------------


def _require_grassmannian(r: int, k: int):
    if not (1 <= r < k):
        raise InvalidGrassmannian(f"need 1 <= r < k, got r={r} k={k}")


def power_sums(r: int, upto: int) -> list[MultiPoly]:
    """[p_1, ..., p_upto] in the elementary symmetric variables X1..Xr.

    Newton's identity p_n = sum_{i<n} (-1)^(i-1) Xi p_(n-i) + (-1)^(n-1) n Xn,
    with Xi = 0 for i > r.
    """
    if r < 1 or upto < 1:
        raise ValueError("need r >= 1 and upto >= 1")
    ps: list[MultiPoly] = []
    for n in range(1, upto + 1):
        acc = MultiPoly.zero(r)
        for i in range(1, min(n - 1, r) + 1):
            term = MultiPoly.variable(r, i - 1) * ps[n - i - 1]
            acc = acc + term if i % 2 == 1 else acc - term
        if n <= r:
            e_n = MultiPoly.variable(r, n - 1).scaled(n)
            acc = acc + e_n if n % 2 == 1 else acc - e_n
        ps.append(acc)
    return ps


def lg_potential(r: int, k: int) -> MultiPoly:
    """The potential p_(k+1)/(k+1): sum of q^(k+1)/(k+1) over the Chern roots,
    written in X1..Xr."""
    _require_grassmannian(r, k)
    return power_sums(r, k + 1)[k].scaled(Fraction(1, k + 1))


def lg_potential_via_log(r: int, k: int) -> MultiPoly:
    """Same potential from the dual construction.

    Expands -log(1 + X1 t + ... + Xr t^r), takes the t^(k+1) coefficient and
    multiplies by (-1)^(k+1).  Must agree with lg_potential exactly.
    """
    _require_grassmannian(r, k)
    order = k + 1
    c = _chern_series(r, order)
    u = list(c)
    u[0] = MultiPoly.zero(r)  # u = c - 1 has no constant term
    log_neg = [MultiPoly.zero(r) for _ in range(order + 1)]
    u_pow = u
    for j in range(1, order + 1):
        coeff = Fraction((-1) ** j, j)
        for i, p in enumerate(u_pow):
            if not p.is_zero():
                log_neg[i] = log_neg[i] + p.scaled(coeff)
        if j < order:
            u_pow = _series_mul(u_pow, u, order)
    return log_neg[k + 1].scaled((-1) ** (k + 1))


def relation_polys(r: int, k: int) -> list[MultiPoly]:
    """[Y_1, ..., Y_k]: coefficients of the inverse of 1 + X1 t + ... + Xr t^r.

    Y_(k-r+1) .. Y_k generate the relations ideal; the gradient of the
    t^(k+1) log coefficient recovers them up to sign, d/dXi -> -Y_(k+1-i).
    """
    _require_grassmannian(r, k)
    ys: list[MultiPoly] = []
    for i in range(1, k + 1):
        acc = MultiPoly.zero(r)
        for j in range(1, min(i, r) + 1):
            prev = ys[i - j - 1] if i - j > 0 else MultiPoly.constant(r, 1)
            acc = acc - MultiPoly.variable(r, j - 1) * prev
        ys.append(acc)
    return ys


def _det(rows: list[list[MultiPoly]]) -> MultiPoly:
    """Determinant by cofactor expansion (sizes here are tiny)."""
    n = len(rows)
    nv = rows[0][0].nvars
    if n == 1:
        return rows[0][0]

    def minor(rs: list[list[MultiPoly]], col: int) -> list[list[MultiPoly]]:
        return [[row[c] for c in range(len(row)) if c != col] for row in rs[1:]]

    total = MultiPoly.zero(nv)
    for c, entry in enumerate(rows[0]):
        if entry.is_zero():
            continue
        sub = _det(minor(rows, c))
        term = entry * sub
        total = total + term if c % 2 == 0 else total - term
    return total


def hessian_class(r: int, k: int) -> MultiPoly:
    """(-1)^(r(r-1)/2) times the Hessian determinant of the potential.

    Weighted-homogeneous of degree r(k+1) - r(r+1); for r=1 it is k X1^(k-1).
    """
    w = lg_potential(r, k)
    partials = [w.diff(i) for i in range(r)]
    rows = [[partials[i].diff(j) for j in range(r)] for i in range(r)]
    return _det(rows).scaled((-1) ** (r * (r - 1) // 2))


def elementary_symmetric(r: int, i: int) -> MultiPoly:
    """e_i(q_1..q_r) as a polynomial in r root variables (for specialization
    checks)."""
    if not (0 <= i <= r):
        raise ValueError("need 0 <= i <= r")
    import itertools

    out: dict[Exponents, Fraction] = {}
    for combo in itertools.combinations(range(r), i):
        e = [0] * r
        for j in combo:
            e[j] = 1
        out[tuple(e)] = Fraction(1)
    return MultiPoly(r, out) if i else MultiPoly.constant(r, 1)


def poly_eval(p: MultiPoly, values: list[GuardedComplex]) -> GuardedComplex:
    """Evaluate p at guarded complex arguments with error tracking."""
    return p.eval_guarded(values)
