"""
Mechanical verification of the closed forms and identities.

Single-index identities whose sides are exponential polynomials get an
all-n proof (or a minimal counterexample) from :func:`prove_unary`.
Two-index identities and statements about power series are checked on an
explicit finite grid that is recorded in the report.  Every check evaluates
the left-hand side with plain ring arithmetic on terms from the recurrence,
independently of the closed forms being tested.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .bicomplex import KINDS, Bicomplex, IJ, ProjectionError, render
from .bcq import (
    BCJ_EP,
    BCU_EP,
    BCV_EP,
    HAT2,
    NORM_CANDIDATES,
    NORM_AXES,
    PHI,
    V_EP,
    X,
    bcj,
    bcj_binet,
    bcj_recurrence,
    bcj_sum,
    bcj_sum_cases,
    bcu,
    definitional_norm_ep,
    hat_w1_w2,
    norm_shape_ok,
)
from .exppoly import ExpPoly
from .scalars import OMEGA1, OMEGA2
from .sequences import DEFAULT_PARAMS, SeqParams, quadratic_approx_check, u3

PROVED = "proved-all-n"
GRID = "grid-verified"
REFUTED = "refuted"


@dataclass
class IdentityReport:
    name: str
    verdict: str
    bound: dict
    counterexample: Optional[dict] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    details: dict = field(default_factory=dict)
    expected: Optional[str] = None

    @property
    def refuted(self) -> bool:
        return self.verdict == REFUTED

    @property
    def unexpected(self) -> bool:
        """True when an identity expected to hold was refuted."""
        return self.expected == "true" and self.refuted

    def to_dict(self) -> dict:
        out = {"name": self.name, "verdict": self.verdict, "bound": self.bound}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.lhs is not None:
            out["lhs"] = self.lhs
        if self.rhs is not None:
            out["rhs"] = self.rhs
        if self.details:
            out["details"] = self.details
        if self.expected is not None:
            out["expected"] = self.expected
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _fmt(value) -> str:
    if isinstance(value, Bicomplex):
        return render(value)
    return str(value)


def _refuted(name, bound, indices: dict, lhs, rhs, **details) -> IdentityReport:
    return IdentityReport(name, REFUTED, bound, counterexample=indices,
                          lhs=_fmt(lhs), rhs=_fmt(rhs), details=details)


# Core engines ----------------------------------------------------------

def prove_unary(lhs: ExpPoly, rhs: ExpPoly, name: str = "unary",
                min_degree: int = 0) -> IdentityReport:
    """Decide ``lhs(n) == rhs(n)`` for every n >= 0.

    The difference is a degree-D polynomial in 2**n on each residue class
    mod 3, so vanishing on n = 0 .. 3(D+1)-1 decides it.  Samples are scanned
    in order, so the first failure is the global minimal counterexample.
    ``min_degree`` raises D to a nominal bound (extra samples never hurt).
    """
    degree = max(lhs.degree, rhs.degree, min_degree)
    samples = 3 * (degree + 1)
    bound = {"degree": degree, "samples": samples}
    for n in range(samples):
        a, b = lhs(n), rhs(n)
        if a != b:
            return _refuted(name, bound, {"n": n}, a, b)
    return IdentityReport(name, PROVED, bound)


def grid_check(name: str, points: Iterable[Tuple[int, ...]], keys: Sequence[str],
               sides: Callable[..., Tuple[object, object]], bound: dict,
               jobs: int = 1) -> IdentityReport:
    """Compare both sides on every grid point.

    The full grid is evaluated before a counterexample is chosen, so the
    result is the lexicographically smallest failing point whatever the
    evaluation order or worker count.
    """
    pts = sorted(set(points))

    def check(pt):
        a, b = sides(*pt)
        return pt, a, b, a == b

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check, pts))
    else:
        results = [check(pt) for pt in pts]
    failures = [r for r in results if not r[3]]
    if not failures:
        return IdentityReport(name, GRID, dict(bound, points=len(pts)))
    pt, a, b, _ = min(failures, key=lambda r: r[0])
    return _refuted(name, dict(bound, points=len(pts)), dict(zip(keys, pt)), a, b,
                    failures=len(failures))


# Checks ------------------------------------------------------------------

def verify_conj_products(kind: str, grid: int = 21, jobs: int = 1) -> IdentityReport:
    """Conjugate of a product equals the product of conjugates, both orders."""
    if kind not in KINDS:
        raise ValueError(f"unknown conjugation kind {kind!r}")

    def sides(n, m):
        a, b = bcj(n), bcj(m)
        lhs = (a * b).conj(kind)
        forward = a.conj(kind) * b.conj(kind)
        backward = b.conj(kind) * a.conj(kind)
        return lhs, (forward if forward == backward else (forward, backward))

    pts = [(n, m) for n in range(grid) for m in range(grid)]
    return grid_check(f"conj_{kind}", pts, ("n", "m"), sides,
                      {"n": [0, grid - 1], "m": [0, grid - 1]}, jobs=jobs)


def verify_norm(kind: str, range_n: int = 31) -> IdentityReport:
    """Adjudicate the squared-norm closed-form candidate for one conjugation kind.

    The definitional value ``bcj(n) * conj(bcj(n))`` is the oracle.  The
    report carries the all-n verdict on the candidate plus the shape
    check (which two axes the norm occupies) over ``range_n`` terms.
    """
    name = f"norm_{kind}"
    definitional = definitional_norm_ep(kind)
    for n in range(range_n):
        direct = bcj(n).norm_sq(kind)
        if direct != definitional(n):
            raise AssertionError(f"normal form of the {kind}-norm disagrees at n={n}")
    shape_ok = all(norm_shape_ok(bcj(n).norm_sq(kind), kind) for n in range(range_n))
    report = prove_unary(definitional, NORM_CANDIDATES.candidate(kind), name)
    report.details.update(
        shape_ok=shape_ok,
        axes=["1", "i", "j", "ij"][NORM_AXES[kind][1]],
        range_checked=[0, range_n - 1],
    )
    if report.refuted:
        # oracle on the left, candidate on the right
        report.details["oracle"] = "lhs"
        x_part, y_part = NORM_CANDIDATES.parts(kind)
        n = report.counterexample["n"]
        report.details["candidate_X"] = _fmt(x_part(n))
        report.details["candidate_Y"] = _fmt(y_part(n))
    return report


def verify_sum(range_n: int = 101) -> IdentityReport:
    """Partial-sum closed form against direct summation and the case table."""
    running = Bicomplex()
    for n in range(range_n):
        running = running + bcj(n)
        closed, cases = bcj_sum(n), bcj_sum_cases(n)
        if closed != running:
            return _refuted("sum", {"n": [0, range_n - 1]}, {"n": n}, running, closed,
                            form="S_J")
        if cases != running:
            return _refuted("sum", {"n": [0, range_n - 1]}, {"n": n}, running, cases,
                            form="cases", residue=n % 3)
    return IdentityReport("sum", GRID, {"n": [0, range_n - 1]})


def verify_quadratic(range_n: int = 51, params: SeqParams = DEFAULT_PARAMS) -> IdentityReport:
    bound = {"n": [0, range_n - 1], "alpha": str(params.alpha)}
    for n in range(range_n):
        check = quadratic_approx_check(n, params)
        if not check:
            branch = check.holds.index(False)
            return _refuted("quadratic", bound, {"n": n}, check.lhs[branch],
                            check.rhs[branch], branch=["2", "w1", "w2"][branch])
    return IdentityReport("quadratic", GRID, bound)


def verify_binet(range_n: int = 201) -> IdentityReport:
    """Closed form in Bicomplex[Q(w)] against the definitional terms."""
    bound = {"n": [0, range_n - 1]}
    for n in range(range_n):
        try:
            closed = bcj_binet(n)
        except (AssertionError, ProjectionError) as exc:
            return IdentityReport("binet", REFUTED, bound, counterexample={"n": n},
                                  lhs=_fmt(bcj(n)), rhs=None,
                                  details={"projection_error": str(exc)})
        if closed != bcj(n) or bcj_recurrence(n) != bcj(n):
            return _refuted("binet", bound, {"n": n}, bcj(n), closed)
    return IdentityReport("binet", GRID, bound)


# Generating functions ----------------------------------------------------

def series_mul(a: Sequence, b: Sequence, order: int) -> List:
    """Truncated Cauchy product: coefficients 0 .. order-1."""
    out = []
    for k in range(order):
        acc = Bicomplex()
        for i in range(max(0, k - len(b) + 1), min(k, len(a) - 1) + 1):
            acc = acc + a[i] * b[k - i]
        out.append(acc)
    return out


GF_DENOMINATOR = (1, -1, -1, -2)


def genfun_numerator() -> List[Bicomplex]:
    b0, b1, b2 = bcj(0), bcj(1), bcj(2)
    return [b0, b1 - b0, b2 - b1 - b0]


def verify_genfun(order: int = 64) -> IdentityReport:
    """(1 - t - t^2 - 2t^3) * sum_{n<order} bcj(n) t^n against the numerator.

    The truncated product is exact through degree ``order - 1``.
    """
    if order < 3:
        raise ValueError("truncation order must be at least 3")
    series = [bcj(n) for n in range(order)]
    product = series_mul([Bicomplex(c) for c in GF_DENOMINATOR], series, order)
    expected = genfun_numerator() + [Bicomplex()] * (order - 3)
    bound = {"order": order}
    for k, (got, want) in enumerate(zip(product, expected)):
        if got != want:
            return _refuted("genfun", bound, {"k": k}, got, want)
    return IdentityReport("genfun", GRID, bound,
                          details={"numerator": [_fmt(c) for c in expected[:3]]})


def partial_fraction_coefficient(n: int) -> Bicomplex:
    """Coefficient of t^n in the three-pole expansion, in Bicomplex[Q(w)]."""
    b0, b1, b2 = bcj(0), bcj(1), bcj(2)
    w1, w2 = OMEGA1, OMEGA2
    weight_2 = b2 + b1 + b0
    weight_w1 = b2 + (w1 - 1) * b1 + (w1 * w1 - w1 - 1) * b0
    weight_w2 = b2 + (w2 - 1) * b1 + (w2 * w2 - w2 - 1) * b0
    total = ((w1 - w2) * 2 ** n) * weight_2
    total = total - ((2 - w2) * w1 ** n) * weight_w1
    total = total + ((2 - w1) * w2 ** n) * weight_w2
    return total / PHI


def verify_partial_fractions(order: int = 64) -> IdentityReport:
    if order < 1:
        raise ValueError("order must be positive")
    bound = {"order": order}
    for n in range(order):
        exact = partial_fraction_coefficient(n)
        try:
            value = exact.project()
        except ProjectionError:
            return IdentityReport("partial_fractions", REFUTED, bound,
                                  counterexample={"n": n}, lhs=_fmt(bcj(n)),
                                  rhs=_fmt(exact), details={"projection": "failed"})
        if value != bcj(n):
            return _refuted("partial_fractions", bound, {"n": n}, bcj(n), value)
    return IdentityReport("partial_fractions", GRID, bound,
                          details={"(2-w1)(2-w2)": _fmt((2 - OMEGA1) * (2 - OMEGA2)),
                                   "phi": _fmt(PHI)})


# Two-term identities -------------------------------------------------------

def _hat_product() -> Bicomplex:
    return hat_w1_w2()


def docagne_sides(m: int, n: int) -> Tuple[Bicomplex, Bicomplex]:
    lhs = bcj(m) * bcj(n + 1) - bcj(m + 1) * bcj(n)
    rhs = (HAT2 * 2 ** (m + 1) * bcu(n + 1) - HAT2 * 2 ** (n + 1) * bcu(m + 1)
           + _hat_product() * u3(m - n)) / 7
    return lhs, rhs


def verify_docagne(grid_n: int = 30, grid_gap: int = 30, jobs: int = 1) -> IdentityReport:
    """Grid check over 0 <= n < grid_n and n < m <= n + grid_gap."""
    if grid_n < 1 or grid_gap < 1:
        raise ValueError("grid bounds must be at least 1")
    try:
        hat = _hat_product()
    except ProjectionError as exc:
        return IdentityReport("docagne", REFUTED, {"n": [0, grid_n - 1], "gap": grid_gap},
                              details={"projection_error": str(exc)})
    pts = [(n, m) for n in range(grid_n) for m in range(n + 1, n + grid_gap + 1)]
    report = grid_check("docagne", pts, ("n", "m"), lambda n, m: docagne_sides(m, n),
                        {"n": [0, grid_n - 1], "gap": grid_gap}, jobs=jobs)
    report.details["w1hat*w2hat"] = _fmt(hat)
    return report


def cassini_sides(n: int) -> Tuple[Bicomplex, Bicomplex]:
    lhs = bcj(n + 1) * bcj(n + 1) - bcj(n + 2) * bcj(n)
    rhs = (HAT2 * 2 ** (n + 1) * (2 * bcu(n + 1) - bcu(n + 2)) + _hat_product()) / 7
    return lhs, rhs


def cassini_eps() -> Tuple[ExpPoly, ExpPoly]:
    b0, b1, b2 = BCJ_EP, BCJ_EP.shift(1), BCJ_EP.shift(2)
    lhs = b1 * b1 - b2 * b0
    rhs = (HAT2 * 2 * X * (2 * BCU_EP.shift(1) - BCU_EP.shift(2)) + _hat_product()) / 7
    return lhs, rhs


def sum_squares_sides(n: int) -> Tuple[Bicomplex, Bicomplex]:
    lhs = bcj(n) * bcj(n) + bcj(n + 1) * bcj(n + 1) + bcj(n + 2) * bcj(n + 2)
    rhs = (3 * HAT2 * HAT2 * 2 ** (2 * n + 2) - HAT2 * 2 ** (n + 2) * bcu(n) + 2 * IJ) / 7
    return lhs, rhs


def sum_squares_eps() -> Tuple[ExpPoly, ExpPoly]:
    b0, b1, b2 = BCJ_EP, BCJ_EP.shift(1), BCJ_EP.shift(2)
    lhs = b0 * b0 + b1 * b1 + b2 * b2
    x = X
    rhs = (3 * (HAT2 * HAT2) * 4 * x * x - HAT2 * 4 * x * BCU_EP + 2 * IJ) / 7
    return lhs, rhs


def _proved_with_crosscheck(name: str, eps, sides, range_n: int) -> IdentityReport:
    lhs_ep, rhs_ep = eps()
    # quadratic in bcj, so nominally degree 2 even when the top terms cancel
    report = prove_unary(lhs_ep, rhs_ep, name, min_degree=2)
    # direct ring arithmetic must agree with the normal forms on the range
    holds_direct = []
    for n in range(range_n):
        a, b = sides(n)
        if a != lhs_ep(n) or b != rhs_ep(n):
            raise AssertionError(f"{name}: normal form disagrees with direct evaluation at n={n}")
        holds_direct.append(a == b)
    report.details["range_checked"] = [0, range_n - 1]
    report.details["direct_failures"] = holds_direct.count(False)
    return report


def verify_cassini(range_n: int = 30) -> IdentityReport:
    report = _proved_with_crosscheck("cassini", cassini_eps, cassini_sides, range_n)
    report.details["w1hat*w2hat"] = _fmt(_hat_product())
    return report


def verify_sum_squares(range_n: int = 30) -> IdentityReport:
    return _proved_with_crosscheck("sum_squares", sum_squares_eps, sum_squares_sides, range_n)


def verify_bcv_squares() -> IdentityReport:
    """bcv(n)^2 + bcv(n+1)^2 + bcv(n+2)^2 == 14 ij (a degree-0 identity)."""
    v0, v1, v2 = BCV_EP, BCV_EP.shift(1), BCV_EP.shift(2)
    return prove_unary(v0 * v0 + v1 * v1 + v2 * v2, ExpPoly.const(14 * IJ), "bcv_squares")


def verify_v_sum() -> IdentityReport:
    return prove_unary(V_EP + V_EP.shift(1) + V_EP.shift(2), ExpPoly(), "v_sum")


def cassini_docagne_overlap(range_n: int = 29) -> dict:
    """Compare Cassini at n with d'Ocagne at (m, n) = (n + 1, n)."""
    lhs_match = True
    verdict_match = True
    rhs_gap = set()
    for n in range(range_n):
        c_lhs, c_rhs = cassini_sides(n)
        d_lhs, d_rhs = docagne_sides(n + 1, n)
        lhs_match &= c_lhs == d_lhs
        verdict_match &= (c_lhs == c_rhs) == (d_lhs == d_rhs)
        rhs_gap.add(c_rhs - d_rhs)
    return {
        "range": [0, range_n - 1],
        "lhs_match": lhs_match,
        "verdict_match": verdict_match,
        "rhs_difference": sorted(_fmt(g) for g in rhs_gap),
    }


# Registry ------------------------------------------------------------------

@dataclass(frozen=True)
class Identity:
    name: str
    expected: str          # "true" or "refuted"
    run: Callable[["VerifyConfig"], IdentityReport]
    summary: str


@dataclass(frozen=True)
class VerifyConfig:
    grid: int = 30
    gap: int = 30
    order: int = 64
    jobs: int = 1


def _conj(kind):
    return lambda cfg: verify_conj_products(kind, grid=21, jobs=cfg.jobs)


def _norm(kind):
    return lambda cfg: verify_norm(kind, range_n=31)


_IDENTITIES = [
    Identity("conj_i", "true", _conj("i"), "conjugate of a product, i-conjugation"),
    Identity("conj_j", "true", _conj("j"), "conjugate of a product, j-conjugation"),
    Identity("conj_ij", "true", _conj("ij"), "conjugate of a product, ij-conjugation"),
    Identity("norm_i", "refuted", _norm("i"), "candidate X1 + 2jY1 squared-norm form"),
    Identity("norm_j", "true", _norm("j"), "candidate X2 + 2iY2 squared-norm form"),
    Identity("norm_ij", "true", _norm("ij"), "candidate X3 + 2ijY3 squared-norm form"),
    Identity("sum", "true", lambda cfg: verify_sum(101), "partial sums and case table"),
    Identity("genfun", "true", lambda cfg: verify_genfun(cfg.order), "generating function"),
    Identity("quadratic", "true", lambda cfg: verify_quadratic(51),
             "quadratic approximation with alpha = 2"),
    Identity("partial_fractions", "true", lambda cfg: verify_partial_fractions(cfg.order),
             "three-pole partial fractions"),
    Identity("binet", "true", lambda cfg: verify_binet(201), "closed form over Q(w)"),
    Identity("docagne", "refuted", lambda cfg: verify_docagne(cfg.grid, cfg.gap, cfg.jobs),
             "d'Ocagne identity as stated"),
    Identity("cassini", "refuted", lambda cfg: verify_cassini(cfg.grid),
             "Cassini-like identity as stated"),
    Identity("sum_squares", "refuted", lambda cfg: verify_sum_squares(cfg.grid),
             "sum of three consecutive squares as stated"),
    Identity("bcv_squares", "true", lambda cfg: verify_bcv_squares(),
             "squares of the periodic companion sum to 14ij"),
    Identity("v_sum", "true", lambda cfg: verify_v_sum(), "V(n) + V(n+1) + V(n+2) = 0"),
]

IDENTITIES: Dict[str, Identity] = {ident.name: ident for ident in _IDENTITIES}


def resolve_selection(names: Iterable[str]) -> List[str]:
    """Expand ``all`` and reject unknown names before anything runs."""
    out: List[str] = []
    for name in names:
        if name == "all":
            out.extend(n for n in IDENTITIES if n not in out)
            continue
        if name not in IDENTITIES:
            raise KeyError(name)
        if name not in out:
            out.append(name)
    return out


def run_identities(names: Iterable[str], config: VerifyConfig = VerifyConfig(),
                   jobs: int = 1) -> List[IdentityReport]:
    """Run the selected identities; reports come back in selection order."""
    selected = resolve_selection(names)

    def one(name):
        ident = IDENTITIES[name]
        report = ident.run(config)
        report.expected = ident.expected
        return report

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(one, selected))
    return [one(name) for name in selected]


__all__ = [
    "GRID",
    "IDENTITIES",
    "IdentityReport",
    "PROVED",
    "REFUTED",
    "VerifyConfig",
    "cassini_docagne_overlap",
    "cassini_sides",
    "docagne_sides",
    "grid_check",
    "partial_fraction_coefficient",
    "prove_unary",
    "resolve_selection",
    "run_identities",
    "series_mul",
    "sum_squares_sides",
    "verify_bcv_squares",
    "verify_binet",
    "verify_cassini",
    "verify_conj_products",
    "verify_docagne",
    "verify_genfun",
    "verify_norm",
    "verify_partial_fractions",
    "verify_quadratic",
    "verify_sum",
    "verify_sum_squares",
    "verify_v_sum",
]
