"""Self-check suites behind the `verify` subcommand.

Each suite re-runs a family of exact identities or cross-pipeline
agreements and reports one line per check, with a reproduction command for
anything that fails.  The acceptance tests run strictly larger grids; these
defaults are sized for an interactive smoke test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import charclass, critical, invariants, sympoly
from .errors import GwgrError

SUITES = ("sympoly", "critical", "pipelines", "charclass")


@dataclass(frozen=True, slots=True)
class VerifyConfig:
    max_k: int = 8
    max_d: int = 4
    tol: float = 1e-9


@dataclass(frozen=True, slots=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str
    repro: str


def _result(suite: str, name: str, passed: bool, detail: str, repro: str) -> CheckResult:
    return CheckResult(suite, name, passed, detail, repro)


def sympoly_suite(cfg: VerifyConfig) -> list[CheckResult]:
    out = []
    repro = f"gwgr verify --suite sympoly --max-k {cfg.max_k}"

    bad = []
    for k in range(2, cfg.max_k + 1):
        for r in range(1, k):
            if sympoly.lg_potential(r, k) != sympoly.lg_potential_via_log(r, k):
                bad.append((r, k))
    out.append(_result("sympoly", "dual potential construction", not bad, f"mismatches: {bad}", repro))

    bad = []
    for k in range(2, cfg.max_k + 1):
        for r in range(1, k):
            w = sympoly.lg_potential(r, k)
            ys = sympoly.relation_polys(r, k)
            # d/dXi of the raw log coefficient equals -Y_(k+1-i)
            if any(w.diff(i) != ys[k - 1 - i].scaled((-1) ** k) for i in range(r)):
                bad.append((r, k))
    out.append(_result("sympoly", "gradient recovers relations", not bad, f"mismatches: {bad}", repro))

    bad = []
    for k in range(2, cfg.max_k + 1):
        for r in range(1, k):
            w_deg = sympoly.lg_potential(r, k).weighted_homogeneous_degree()
            h_deg = sympoly.hessian_class(r, k).weighted_homogeneous_degree()
            if w_deg != k + 1 or h_deg != r * (k + 1) - r * (r + 1):
                bad.append((r, k, w_deg, h_deg))
    out.append(_result("sympoly", "weighted homogeneity", not bad, f"mismatches: {bad}", repro))

    bad = []
    for k in range(2, min(cfg.max_k, 6) + 1):
        for r in range(1, min(k, 4)):
            w = sympoly.lg_potential(r, k)
            subs = [sympoly.elementary_symmetric(r, i) for i in range(1, r + 1)]
            direct = sympoly.MultiPoly(r, {
                tuple(k + 1 if j == i else 0 for j in range(r)): Fraction(1, k + 1)
                for i in range(r)
            })
            if w.substitute(subs) != direct:
                bad.append((r, k))
    out.append(_result("sympoly", "root specialization", not bad, f"mismatches: {bad}", repro))
    return out


def critical_suite(cfg: VerifyConfig) -> list[CheckResult]:
    out = []
    import math

    repro = f"gwgr verify --suite critical --max-k {cfg.max_k}"
    bad = []
    detail = ""
    for r in (1, 2, 3):
        for k in range(r + 1, cfg.max_k + 1):
            try:
                rep = critical.validate_critical_points(r, k, cfg.tol)
            except GwgrError as exc:
                bad.append((r, k, str(exc)))
                continue
            if rep.n_points != math.comb(k, r):
                bad.append((r, k, "wrong count"))
            detail = f"last max gradient residual {rep.max_gradient_residual:.2e}"
    out.append(_result("critical", "enumeration and bounds", not bad, f"failures: {bad}" if bad else detail, repro))
    return out


def pipelines_suite(cfg: VerifyConfig) -> list[CheckResult]:
    out = []
    bad = []
    repro_fmt = "gwgr invariant --genus 1 --degree {d} --r 2 --k {k} --exponents {m},{n} --pipeline all"
    repro = f"gwgr verify --suite pipelines --max-d {cfg.max_d}"
    for k in (3, 4, 5):
        if k > cfg.max_k:
            continue
        for d in range(1, cfg.max_d + 1):
            if k * d > invariants.FLOATING_KD_BUDGET:
                continue
            for n in range(0, k * d // 2 + 1):
                m = k * d - 2 * n
                query = invariants.InvariantQuery(g=1, d=d, r=2, k=k, s=(m, n))
                try:
                    invariants.invariant(query, "all", tol=1e-6)
                except GwgrError:
                    bad.append(repro_fmt.format(d=d, k=k, m=m, n=n))
    out.append(_result("pipelines", "four-way agreement at genus one", not bad,
                       f"failures: {bad[:3]}" if bad else "all queries agree", repro))

    bad = []
    for g in range(0, 4):
        for k in range(2, min(cfg.max_k, 6) + 1):
            for d in range(1, cfg.max_d + 1):
                m = k * d - (k - 1) * (g - 1)
                if m < 0 or k * d > invariants.FLOATING_KD_BUDGET:
                    continue
                query = invariants.InvariantQuery(g=g, d=d, r=1, k=k, s=(m,))
                try:
                    results = invariants.invariant(query, "all", tol=cfg.tol)
                except GwgrError:
                    bad.append((g, k, d))
                    continue
                if results[0].value != k ** g:
                    bad.append((g, k, d))
    out.append(_result("pipelines", "projective values equal k^g", not bad,
                       f"failures: {bad[:5]}" if bad else "residue sum matches the exact power", repro))

    frozen = {(4, (4, 0)): 2, (4, (2, 1)): 1, (4, (0, 2)): 1,
              (5, (6, 0)): 5, (5, (4, 1)): 2, (5, (2, 2)): 1, (5, (0, 3)): 1}
    bad = []
    for (k, s), want in frozen.items():
        query = invariants.InvariantQuery(g=0, d=0, r=2, k=k, s=s)
        got = invariants.vafa_intriligator(query, tol=cfg.tol).value
        if got != want:
            bad.append((k, s, got, want))
    out.append(_result("pipelines", "classical limit on G(2,4) and G(2,5)", not bad,
                       f"failures: {bad}" if bad else "Schubert numbers reproduced", repro))
    return out


def charclass_suite(cfg: VerifyConfig) -> list[CheckResult]:
    out = []
    repro = f"gwgr verify --suite charclass --max-d {cfg.max_d}"

    bad = [(g, k) for g in range(0, 5) for k in range(2, cfg.max_k + 1)
           if charclass.theta_integral(g, k, max(g, 1)) != k ** g]
    out.append(_result("charclass", "theta-ring top power", not bad, f"failures: {bad}", repro))

    bad = []
    for d in (2, 4):
        for k in range(2, 5):
            for n in range(0, k * d // 2 + 1):
                got = charclass.diagonal_blowup_correction(d, k, n)
                if got != Fraction(-k) * Fraction(2) ** (k * d - 2 * n):
                    bad.append((d, k, n))
                if not charclass.even_degree_identity(d, k, n):
                    bad.append((d, k, n, "identity"))
    out.append(_result("charclass", "even-degree blow-up coefficient", not bad, f"failures: {bad}", repro))

    bad = []
    for d in range(1, min(cfg.max_d, 5) + 1):
        for k in (3, 4):
            for l in range(d // 2 + 1, d + 1):
                for n in range(0, k * d // 2 + 1):
                    got = charclass.wall_crossing_correction(d, k, l, n)
                    if got != charclass.expected_wall_correction(d, k, l, n):
                        bad.append((d, k, l, n))
    out.append(_result("charclass", "wall-crossing coefficients", not bad, f"failures: {bad}", repro))
    return out


def run_verify(suites: tuple[str, ...], cfg: VerifyConfig) -> list[CheckResult]:
    table = {
        "sympoly": sympoly_suite,
        "critical": critical_suite,
        "pipelines": pipelines_suite,
        "charclass": charclass_suite,
    }
    out: list[CheckResult] = []
    for name in suites:
        out.extend(table[name](cfg))
    return out
