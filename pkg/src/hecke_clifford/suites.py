"""Verification suites: every computable statement, grouped by topic.

Each suite takes ``n`` and a seed and returns a list of
:class:`~hecke_clifford.fusion.CheckResult` sorted by label.  The CLI and the
acceptance tests both go through here.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import affine, algebra, fusion, numeric, representations
from .affine import (
    d_scalar,
    idempotency_defect,
    idempotency_holds,
    psi_factor,
    psi_factor_inverse,
    theta_factor,
    theta_general,
)
from .algebra import AlgebraElement, mul
from .fusion import CheckResult
from .scalars import TowerScalar, as_scalar, epsilon, q_power, special_value
from .tableaux import StrictPartition, enumerate_standard, enumerate_strict_partitions

DESK_BOUND = 5


def _bool(label: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(label, "pass" if ok else "fail", detail)


def _merge(label: str, results: Iterable[bool], detail: str = "") -> CheckResult:
    results = list(results)
    if not results:
        return CheckResult(label, "vacuous", detail)
    return _bool(label, all(results), detail or f"{sum(results)}/{len(results)} instances")


# --------------------------------------------------------------------------
# Sample points


def random_points(count: int, seed: int, arity: int = 4) -> list[tuple[TowerScalar, ...]]:
    """Exact points in Q(q), pairwise away from ``x = y^{+-1}``.

    Each coordinate is ``r * q^e`` with ``r`` a small positive or negative
    rational and ``e`` in ``{-1, 0, 1}``.
    """
    rng = random.Random(seed)
    out: list[tuple[TowerScalar, ...]] = []
    while len(out) < count:
        pt = []
        for _ in range(arity):
            r = Fraction(rng.randint(2, 40), rng.randint(1, 11)) * rng.choice((1, -1))
            pt.append(as_scalar(q_power(rng.randint(-1, 1)) * r))
        if all(a != b and a * b != 1 for i, a in enumerate(pt) for b in pt[i + 1 :]):
            # also keep (x, y) off the idempotency curve so inverses exist
            if idempotency_defect(pt[0], pt[1]):
                out.append(tuple(pt))
    return out


def curve_points(max_content: int = 4) -> list[tuple[TowerScalar, TowerScalar]]:
    """Pairs on the idempotency curve built from neighbouring special values.

    Both orders and all four inversion patterns; the pair ``(x, y)`` is kept
    when ``y != x^{+-1}`` (which excludes nothing here except content 0 vs 0).
    """
    out = []
    for a in range(max_content + 1):
        s0, s1 = special_value(a), special_value(a + 1)
        for x, y in ((s0, s1), (s1, s0)):
            for ix in (False, True):
                for iy in (False, True):
                    xx = 1 / x if ix else x
                    yy = 1 / y if iy else y
                    if xx != yy and xx * yy != 1:
                        out.append((xx, yy))
    return out


# --------------------------------------------------------------------------
# Suites


def suite_relations(n: int, seed: int = 0) -> list[CheckResult]:
    rel = algebra.defining_relations_hold(n)
    return [_bool(f"defining-relations/{k}", v) for k, v in rel.items()]


def suite_murphy(n: int, seed: int = 0) -> list[CheckResult]:
    out = [_bool(f"murphy-homomorphism/{k}", v) for k, v in affine.murphy_relations_hold(n).items()]
    out.append(_bool("murphy-supercentral-symmetric", all(algebra.center_check(n, m) for m in range(1, n + 1))))
    return out


def psi_lemma_checks(points: int = 20, seed: int = 0, cfg: numeric.NumericConfig | None = None) -> list[CheckResult]:
    """Identities of single psi factors and of the regularized triple."""
    cfg = cfg or numeric.NumericConfig()
    n = 3
    eps = as_scalar(epsilon())
    one = AlgebraElement.one(n)
    P = lambda k, a, b, m=n: psi_factor(k, a, b, m)  # noqa: E731
    C = lambda k: AlgebraElement.C(k, n)  # noqa: E731
    pts = random_points(points, seed)
    res: dict[str, list[bool]] = {}

    def rec(label: str, ok: bool) -> None:
        res.setdefault(label, []).append(ok)

    for x, y, z, w in pts:
        pxy, pyx = P(1, x, y), P(1, y, x)
        beta = idempotency_defect(x, y)
        rec("psi-product-scalar", pyx * pxy == one.scale(beta))
        a4 = psi_factor(1, x, y, 4)
        b4 = psi_factor(3, z, w, 4)
        rec("psi-far-commutation", a4 * b4 == b4 * a4)
        rec("psi-yang-baxter", P(1, x, y) * P(2, z, y) * P(1, z, x) == P(2, z, x) * P(1, z, y) * P(2, x, y))
        rec("psi-square", pxy * pxy == pxy.scale(-eps * (x + y) / (x - y)) + one.scale(beta))
        rec("psi-clifford-exchange-left", C(1) * pxy == P(1, x, 1 / y) * C(2))
        rec("psi-clifford-exchange-right", C(2) * pxy == P(1, 1 / x, y) * C(1))
        rec("psi-swap-difference", pyx - pxy == one.scale(eps * (x + y) / (x - y)))
        inv = psi_factor_inverse(1, x, y, n)
        rec("psi-inverse-off-curve", pxy * inv == one and inv * pxy == one)

    curve = curve_points()
    for x, y in curve:
        pxy = P(1, x, y)
        rec("idempotency-on-special-neighbours", idempotency_holds(x, y))
        rec("psi-square-on-curve", pxy * pxy == pxy.scale(-eps * (x + y) / (x - y)))
        th = theta_factor(1, x, y, n)
        rec("theta-closed-form-is-regularized-triple", th == theta_general(1, x, y, y, n))
        # theta psi = -d psi; the sign is fixed by direct expansion
        rec("theta-times-psi-scalar", th * pxy == pxy.scale(-d_scalar(x, y)))
        if y == 1:
            rec("theta-times-psi-vanishes-at-one", (th * pxy).is_zero() and not d_scalar(x, y))
        # numeric limit of the raw triple as z -> y
        lim = numeric.triple_limit(1, x.evaluate(cfg.q), y.evaluate(cfg.q), n, cfg)
        err = numeric.relative_error(lim, numeric.to_vector(th, cfg.q))
        rec("triple-limit-matches-theta", err <= 1e-6)
    for x, y in curve[:6]:
        # away from z = y the raw triple equals the regularized one exactly
        z = y + Fraction(3, 7)
        raw = P(1, x, y) * P(2, z, y) * P(1, z, x)
        rec("regularized-triple-off-diagonal", raw == theta_general(1, x, y, z, n))
    try:
        psi_factor_inverse(1, curve[0][0], curve[0][1], n)
        rec("psi-inverse-refused-on-curve", False)
    except affine.IdempotentPairError:
        rec("psi-inverse-refused-on-curve", True)
    return sorted((_merge(k, v) for k, v in res.items()), key=lambda c: c.label)


def suite_psi_lemma(n: int, seed: int = 0) -> list[CheckResult]:
    return psi_lemma_checks(points=max(20, 4 * n), seed=seed)


def fusion_checks(shape: StrictPartition, cfg: numeric.NumericConfig | None = None) -> list[CheckResult]:
    cfg = cfg or numeric.NumericConfig()
    out = []
    for tab in enumerate_standard(shape):
        word = "".join(map(str, tab.row_reading()))
        psi = fusion.psi_tableau(tab)
        out.append(_bool(f"fusion/{shape}/{word}/leading-term", fusion.leading_check(tab, psi)))
        out.append(_bool(f"fusion/{shape}/{word}/two-routes-agree", psi == fusion.psi_tableau_direct(tab)))
        err = numeric.fusion_agreement(tab, psi, cfg)
        out.append(_bool(f"fusion/{shape}/{word}/numeric-limit", err <= cfg.tolerance, f"relative error {err:.2e}"))
    return out


def suite_fusion(n: int, seed: int = 0) -> list[CheckResult]:
    return [c for shape in enumerate_strict_partitions(n) for c in fusion_checks(shape)]


def suite_divisibility(n: int, seed: int = 0) -> list[CheckResult]:
    out = []
    for shape in enumerate_strict_partitions(n):
        for c in fusion.divisibility_suite(shape):
            out.append(CheckResult(f"{c.label}/{shape}", c.status, c.detail))
    return out


def module_checks(shape: StrictPartition, ideal_model_bound: int = 3) -> list[CheckResult]:
    M = representations.build_module(shape)
    tag = f"module/{shape}"
    out = [_bool(f"{tag}/relations/{k}", v) for k, v in representations.module_relations(M).items()]
    out.append(_bool(f"{tag}/jucys-murphy-eigenvalues", representations.jm_eigencheck(M)))
    from .tableaux import standard_count

    out.append(_bool(f"{tag}/dimension", M.dim == 2**shape.n * standard_count(shape), f"dim {M.dim}"))
    out += [_bool(f"{tag}/rho/{k}", v) for k, v in representations.commutant_check(M).items()]
    out += [_bool(f"{tag}/splitting/{k}", v) for k, v in representations.splitting_report(M).items()]
    U = representations.build_U(M)
    out.append(_bool(f"{tag}/U-dimension", U.dim == representations.u_dimension(shape), f"dim {U.dim}"))
    out += [
        _bool(f"{tag}/U-relations/{k}", v)
        for k, v in representations.relation_report({"T": U.T, "C": U.C}, shape.n).items()
    ]
    expect = 1 if shape.length % 2 == 0 else 2
    got = representations.commutant_dimension(U)
    out.append(_bool(f"{tag}/commutant-dimension", got == expect, f"{got} (expected {expect})"))
    even = representations.commutant_dimension(U, even_only=True)
    out.append(_bool(f"{tag}/even-commutant-dimension", even == 1, f"{even}"))
    if shape.n <= ideal_model_bound:
        out.append(_bool(f"{tag}/matches-left-ideal", representations.ideal_model_check(M)))
    return out


def suite_module(n: int, seed: int = 0) -> list[CheckResult]:
    return [c for shape in enumerate_strict_partitions(n) for c in module_checks(shape)]


def center_checks(n: int, exact_bound: int = 3) -> list[CheckResult]:
    shapes = enumerate_strict_partitions(n)
    try:
        table = representations.central_character_table(n)
        rational = True
    except ArithmeticError:
        return [CheckResult("central-characters/rational", "fail", "left Q(q)")]
    rows = [tuple(table[s]) for s in shapes]
    out = [
        _bool("central-characters/rational", rational),
        _bool("central-characters/distinct", len(set(rows)) == len(rows)),
        _bool("central-characters/count-equals-strict-partitions", len(set(rows)) == len(shapes), f"{len(shapes)}"),
    ]
    formula = all(
        table[s][0] == representations.content_sum_formula(s) for s in shapes
    )
    out.append(_bool("central-characters/content-sum", formula))
    if n <= exact_bound:
        out.append(_bool("central-elements/supercentral", all(algebra.center_check(n, m) for m in range(1, n + 1))))
        out.append(_bool("central-elements/act-by-table", all(representations.central_action_check(s) for s in shapes)))
    return out


def suite_center(n: int, seed: int = 0) -> list[CheckResult]:
    return center_checks(n)


def suite_dims(n: int, seed: int = 0) -> list[CheckResult]:
    ok, total, target = representations.dimension_identity(n)
    return [_bool("dimension-identity", ok, f"{total} vs {target}")]


def suite_numeric(n: int, seed: int = 0) -> list[CheckResult]:
    out = []
    for a, b in ((0, 1), (1, 2), (0, 2)):
        ok, err = numeric.degeneration_check(a, b)
        out.append(_bool(f"degeneration/{a}-{b}", ok, f"error {err:.2e}"))
    rng = np.random.default_rng(seed)
    if n >= 2:
        from .algebra import w0

        chi = numeric.random_generic_character(n, rng)
        for s in (w0(n),):
            e1 = numeric.scalar_action_error(s, chi)
            e2 = numeric.intertwiner_error(s, chi)
            out.append(_bool("principal-series/eigenvector", e1 <= 1e-8, f"error {e1:.2e}"))
            out.append(_bool("principal-series/intertwiner", e2 <= 1e-8, f"error {e2:.2e}"))
    for shape in enumerate_strict_partitions(n):
        for tab in enumerate_standard(shape):
            d = numeric.path_idempotency_defect(tab)
            out.append(_bool(f"fusion-path-on-curve/{shape}/{''.join(map(str, tab.row_reading()))}", d <= 1e-9, f"{d:.1e}"))
    return out


def conjecture_checks(n: int) -> list[CheckResult]:
    """Is the square of each symmetrizer a scalar multiple of it?  Informational."""
    out = []
    for shape in enumerate_strict_partitions(n):
        s = fusion.symmetrizer(shape)
        c = fusion.proportionality(mul(s, s), s)
        if c is None:
            out.append(CheckResult(f"symmetrizer-square/{shape}", "fail", "not proportional"))
        else:
            out.append(CheckResult(f"symmetrizer-square/{shape}", "pass", f"scalar {c}"))
    return out


def suite_conjecture(n: int, seed: int = 0) -> list[CheckResult]:
    return conjecture_checks(n)


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[[int, int], list[CheckResult]]
    informational: bool = False
    heavy: bool = True  # touches full-algebra exact arithmetic


SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite("relations", suite_relations),
        Suite("murphy", suite_murphy),
        Suite("psi-lemma", suite_psi_lemma, heavy=False),
        Suite("fusion", suite_fusion),
        Suite("divisibility", suite_divisibility),
        Suite("module", suite_module),
        Suite("center", suite_center),
        Suite("dims", suite_dims, heavy=False),
        Suite("numeric", suite_numeric),
        Suite("conjecture", suite_conjecture, informational=True),
    )
}


@dataclass
class Report:
    suite: str
    n: int
    seed: int
    checks: list[CheckResult] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    informational: bool = False

    @property
    def passed(self) -> bool:
        return self.informational or all(c.status != "fail" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "checks": [c.to_json() for c in self.checks],
            "seed": self.seed,
            "timings": self.timings,
            "informational": self.informational,
        }


def run_suite(name: str, n: int, seed: int = 0) -> Report:
    suite = SUITES[name]
    t0 = time.perf_counter()
    checks = sorted(suite.run(n, seed), key=lambda c: c.label)
    return Report(name, n, seed, checks, {"total_seconds": round(time.perf_counter() - t0, 3)}, suite.informational)


__all__ = [
    "DESK_BOUND",
    "Report",
    "SUITES",
    "Suite",
    "center_checks",
    "conjecture_checks",
    "curve_points",
    "fusion_checks",
    "module_checks",
    "psi_lemma_checks",
    "random_points",
    "run_suite",
]
