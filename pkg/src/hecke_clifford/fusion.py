"""Fusion: the elements psi_Lambda at the special point.

The rational function ``psi_Lambda(x_1..x_n)`` (an ordered product of psi
factors) has poles at the special point, but its restriction to the set
where row-adjacent coordinates satisfy the idempotency condition is
regular there.  We never take limits: for the column tableau the product
splits as ``theta * theta'``; ``theta'`` is regular and ``theta`` becomes
regular after each singular factor is bundled with a normalised inserted
factor and its successor into a regularized triple.  Other tableaux are
reached by inverting single factors along a descending Bruhat walk.

Points are *box arrays*: each box ``(i, j)`` of the shifted diagram carries
the special value of its content, optionally inverted.  A tableau reads its
coordinates ``x_k`` off the box holding ``k``.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Literal

from .affine import (
    IdempotentPairError,
    idempotency_holds,
    psi_inverse_left,
    psi_left,
    psi_right,
    theta_regular_left,
)
from .algebra import AlgebraElement, alpha, left_C, mul, right_C, t_of_perm_inv
from .scalars import TowerScalar, as_scalar, epsilon, imaginary_unit, special_value, special_value_conjugate
from .tableaux import (
    Permutation,
    ShiftedTableau,
    StrictPartition,
    bruhat_step,
    column_tableau,
    enumerate_standard,
    inverse_perm,
    perm_length,
    row_tableau,
    subsequences,
    w_of,
)

Box = tuple[int, int]


class FusionError(RuntimeError):
    """The constructive evaluation met a pattern it does not cover."""


# --------------------------------------------------------------------------
# Special points


def box_value(box: Box, inverted: bool = False) -> TowerScalar:
    i, j = box
    return special_value_conjugate(j - i) if inverted else special_value(j - i)


@dataclass(frozen=True)
class SpecialPoint:
    """The special point of a tableau, possibly with some boxes inverted."""

    tableau: ShiftedTableau
    inverted: frozenset[Box] = frozenset()

    @property
    def values(self) -> tuple[TowerScalar, ...]:
        """``values[k-1]`` is the coordinate ``x_k``."""
        return tuple(self.value(k) for k in range(1, self.tableau.n + 1))

    def value(self, k: int) -> TowerScalar:
        box = self.tableau.positions[k]
        return box_value(box, box in self.inverted)

    def invert(self, k: int) -> "SpecialPoint":
        """Invert the coordinate ``x_k`` (toggle the box holding ``k``)."""
        return SpecialPoint(self.tableau, self.inverted ^ {self.tableau.positions[k]})

    def on(self, other: ShiftedTableau) -> "SpecialPoint":
        """The same box array read through another tableau of the shape."""
        if other.shape != self.tableau.shape:
            raise ValueError("tableaux have different shapes")
        return SpecialPoint(other, self.inverted)


def special_point(tab: ShiftedTableau, invert: Iterable[int] = ()) -> SpecialPoint:
    pt = SpecialPoint(tab)
    for k in invert:
        pt = pt.invert(k)
    return pt


# --------------------------------------------------------------------------
# The evaluation plan for the column tableau


@dataclass(frozen=True)
class Factor:
    """``psi_index(x_first, x_second)``."""

    index: int
    first: int
    second: int


@dataclass(frozen=True)
class GroupedFactor:
    """A singular factor bundled with its inserted partner and successor.

    Stands for ``eps^{-1} (x_y - x_x)/(x_y + x_x)`` times the regularized
    triple ``psi_K(x_x, x_y) psi_{K+1}(x_z, x_y) psi_K(x_z, x_x)`` with
    ``K = index``; ``y`` is the symbol sharing a diagonal with ``z``.
    """

    index: int
    x: int
    y: int
    z: int
    singular_pair: tuple[int, int]


Step = Factor | GroupedFactor


@dataclass(frozen=True)
class FusionPlan:
    shape: StrictPartition
    theta: tuple[Step, ...]
    theta_prime: tuple[Factor, ...]
    singular_pairs: tuple[tuple[int, int], ...] = field(default=())

    def describe(self) -> list[str]:
        out = []
        for s in self.theta:
            if isinstance(s, Factor):
                out.append(f"theta   regular  psi_{s.index}(x{s.first}, x{s.second})")
            else:
                k, p = s.singular_pair
                out.append(
                    f"theta   grouped  pair (k={k}, p={p}): psi_{s.index}(x{s.x},x{s.y}) "
                    f"psi_{s.index + 1}(x{s.z},x{s.y}) psi_{s.index}(x{s.z},x{s.x})"
                )
        for f in self.theta_prime:
            out.append(f"theta'  regular  psi_{f.index}(x{f.first}, x{f.second})")
        return out


def raw_theta_factors(shape: StrictPartition) -> list[tuple[int, int, Factor]]:
    """The factors of ``theta`` in order, tagged with their ``(k, p)``."""
    tab = column_tableau(shape)
    out = []
    for k in range(2, shape.n + 1):
        before = subsequences(tab, k).before
        for p, b in enumerate(before, start=1):
            out.append((k, p, Factor(k - p, k, b)))
    return out


def raw_theta_prime_factors(shape: StrictPartition) -> list[Factor]:
    """The factors of ``theta'`` in order (left to right)."""
    tab = column_tableau(shape)
    n = shape.n
    out = []
    for k in range(n, 1, -1):
        after = subsequences(tab, k).after
        a = len(after)
        for q in range(a, 0, -1):
            out.append(Factor(n - k + q, k, after[a - q]))
    return out


@lru_cache(maxsize=None)
def fusion_plan(shape: StrictPartition) -> FusionPlan:
    """Group every singular factor of ``theta`` with its neighbours.

    Aborts with :class:`FusionError` when the successor pattern fails.
    """
    tab = column_tableau(shape)
    pos = tab.positions
    raw = raw_theta_factors(shape)
    steps: list[Step] = []
    pairs: list[tuple[int, int]] = []
    t = 0
    while t < len(raw):
        k, p, f = raw[t]
        if tab.content(k) != tab.content(f.second):
            steps.append(f)
            t += 1
            continue
        if t + 1 >= len(raw) or raw[t + 1][0] != k:
            raise FusionError(f"singular pair ({k},{p}) has no successor factor")
        _, _, succ = raw[t + 1]
        (i, j), (i2, j2) = pos[f.second], pos[succ.second]
        if (i2, j2) != (i, j + 1):
            raise FusionError(f"singular pair ({k},{p}): successor symbol is not the right neighbour")
        if tab.content(k) == tab.content(succ.second):
            raise FusionError(f"singular pair ({k},{p}) followed by another singular factor")
        steps.append(GroupedFactor(k - p - 1, succ.second, f.second, k, (k, p)))
        pairs.append((k, p))
        t += 2
    return FusionPlan(shape, tuple(steps), tuple(raw_theta_prime_factors(shape)), tuple(pairs))


def _apply_steps(steps: Iterable[Step], x: dict[int, TowerScalar], m: AlgebraElement) -> AlgebraElement:
    """``(product of steps) * m``."""
    eps_inv = 1 / as_scalar(epsilon())
    for s in reversed(list(steps)):
        if isinstance(s, Factor):
            m = psi_left(s.index, x[s.first], x[s.second], m)
        else:
            xx, yy, zz = x[s.x], x[s.y], x[s.z]
            if not idempotency_holds(xx, yy):
                raise FusionError("grouped pair is off the idempotency curve")
            m = theta_regular_left(s.index, xx, yy, zz, m).scale(eps_inv * (yy - xx) / (yy + xx))
    return m


def _column_coords(shape: StrictPartition, inverted: frozenset[Box]) -> dict[int, TowerScalar]:
    pt = SpecialPoint(column_tableau(shape), inverted)
    return {k: pt.value(k) for k in range(1, shape.n + 1)}


@lru_cache(maxsize=None)
def _theta_prime_at(shape: StrictPartition, inverted: frozenset[Box]) -> AlgebraElement:
    x = _column_coords(shape, inverted)
    return _apply_steps(fusion_plan(shape).theta_prime, x, AlgebraElement.one(shape.n))


@lru_cache(maxsize=None)
def _theta_at(shape: StrictPartition, inverted: frozenset[Box]) -> AlgebraElement:
    x = _column_coords(shape, inverted)
    return _apply_steps(fusion_plan(shape).theta, x, AlgebraElement.one(shape.n))


@lru_cache(maxsize=None)
def _psi_column_at(shape: StrictPartition, inverted: frozenset[Box]) -> AlgebraElement:
    x = _column_coords(shape, inverted)
    return _apply_steps(fusion_plan(shape).theta, x, _theta_prime_at(shape, inverted))


def theta_column(shape: StrictPartition, inverted: frozenset[Box] = frozenset()) -> AlgebraElement:
    """The regularized value of ``theta`` for the column tableau."""
    return _theta_at(shape, frozenset(inverted))


def theta_prime_column(shape: StrictPartition, inverted: frozenset[Box] = frozenset()) -> AlgebraElement:
    """The (regular) value of ``theta'`` for the column tableau."""
    return _theta_prime_at(shape, frozenset(inverted))


def psi_column(shape: StrictPartition, inverted: frozenset[Box] = frozenset()) -> AlgebraElement:
    """``psi`` of the column tableau at the special point."""
    return _psi_column_at(shape, frozenset(inverted))


# --------------------------------------------------------------------------
# Other tableaux


def first_up_step(tab: ShiftedTableau) -> int | None:
    """Smallest ``k`` with ``s_k·tab`` standard and ``s_k w`` longer than ``w``."""
    for k in range(1, tab.n):
        if bruhat_step(tab, k) == "up":
            return k
    return None


@lru_cache(maxsize=None)
def _psi_at(tab: ShiftedTableau, inverted: frozenset[Box]) -> AlgebraElement:
    if tab == column_tableau(tab.shape):
        return psi_column(tab.shape, inverted)
    k = first_up_step(tab)
    if k is None:
        raise FusionError(f"no ascending step from {tab.rows}")
    upper = _psi_at(tab.swap(k), inverted)
    pt = SpecialPoint(tab, inverted)
    return psi_inverse_left(k, pt.value(k), pt.value(k + 1), upper)


def psi_tableau(tab: ShiftedTableau, inverted: Iterable[Box] = ()) -> AlgebraElement:
    """``psi_Lambda`` at the special point (box array with ``inverted`` boxes flipped)."""
    if not tab.is_standard():
        raise ValueError("psi_tableau needs a standard tableau")
    return _psi_at(tab, frozenset(inverted))


def psi_prime_tableau(tab: ShiftedTableau, k: int) -> AlgebraElement:
    """``psi_Lambda`` at the special point with the coordinate ``x_k`` inverted."""
    return psi_tableau(tab, {tab.positions[k]})


def eqn_prefactor(tab: ShiftedTableau) -> list[Factor]:
    """Factors (left to right) of the product carrying ``psi_Lambda`` to the column case.

    ``prod_{k=n..2} prod_{q=a*_k..1} psi_{k-q}(x_{A*_k(a*_k-q+1)}, x_k)``.
    """
    out = []
    for k in range(tab.n, 1, -1):
        after = subsequences(tab, k).after_col
        a = len(after)
        for q in range(a, 0, -1):
            out.append(Factor(k - q, after[a - q], k))
    return out


def psi_tableau_direct(tab: ShiftedTableau, inverted: Iterable[Box] = ()) -> AlgebraElement:
    """Independent route: invert the prefactor in front of the column value."""
    inverted = frozenset(inverted)
    m = psi_column(tab.shape, inverted)
    pt = SpecialPoint(tab, inverted)
    for f in eqn_prefactor(tab):  # leftmost factor's inverse is applied first
        m = psi_inverse_left(f.index, pt.value(f.first), pt.value(f.second), m)
    return m


def leading_check(tab: ShiftedTableau, psi: AlgebraElement | None = None) -> bool:
    """Coefficient of ``T_{w_Lambda}`` is 1 and every other term is shorter."""
    psi = psi_tableau(tab) if psi is None else psi
    w = w_of(tab)
    top = perm_length(w)
    if psi.coefficient(w) != 1:
        return False
    return all(perm_length(p) < top for (p, m) in psi.terms if (p, m) != (w, 0))


def symmetrizer(shape: StrictPartition) -> AlgebraElement:
    """``psi_{row tableau} * T_{w_{row tableau}}^{-1}``."""
    tab = row_tableau(shape)
    return mul(psi_tableau(tab), t_of_perm_inv(w_of(tab)))


def proportionality(a: AlgebraElement, b: AlgebraElement) -> TowerScalar | None:
    """The scalar ``c`` with ``a = c * b`` (``b`` nonzero), or ``None``."""
    if not b:
        raise ValueError("reference element is zero")
    key = min(b.terms)
    c = a.terms.get(key, TowerScalar(0)) / b.terms[key]
    return c if a == b.scale(c) else None


# --------------------------------------------------------------------------
# Divisibility and intertwining statements


Status = Literal["pass", "fail", "vacuous"]


@dataclass
class CheckResult:
    label: str
    status: Status
    detail: str = ""

    def to_json(self) -> dict:
        return {"label": self.label, "status": self.status, "detail": self.detail}


def _status(results: list[bool]) -> Status:
    if not results:
        return "vacuous"
    return "pass" if all(results) else "fail"


def _ratio(eps: TowerScalar, a: TowerScalar, b: TowerScalar) -> TowerScalar:
    """``eps (a + b)/(a - b)``."""
    return eps * (a + b) / (a - b)


def gamma_element(shape: StrictPartition, signs: tuple[int, ...], relabel: Permutation | None = None) -> AlgebraElement:
    """``2^{-m} prod_j (1 + sign_j i C_a C_b)`` on the leading diagonal of the row tableau.

    ``a, b`` run over consecutive pairs of diagonal entries; ``relabel``
    (a permutation ``l -> relabel[l-1]``) is applied to the Clifford indices.
    """
    n = shape.n
    diag = row_tableau(shape).leading_diagonal()
    pairs = len(diag) // 2
    if len(signs) != pairs:
        raise ValueError(f"need {pairs} signs")
    lab = (lambda l: l) if relabel is None else (lambda l: relabel[l - 1])
    i = as_scalar(imaginary_unit())
    out = AlgebraElement.one(n)
    for t, s in enumerate(signs):
        a, b = lab(diag[2 * t]), lab(diag[2 * t + 1])
        cc = left_C(a, AlgebraElement.C(b, n))
        out = mul(out, AlgebraElement.one(n) + cc.scale(i * s))
    return out.scale(TowerScalar(1) / (2**pairs))


def sign_vectors(shape: StrictPartition) -> list[tuple[int, ...]]:
    m = shape.length // 2
    out: list[tuple[int, ...]] = [()]
    for _ in range(m):
        out = [v + (s,) for v in out for s in (1, -1)]
    return out


def divisibility_suite(shape: StrictPartition) -> list[CheckResult]:
    """Every divisibility / intertwining statement for one shape, exactly."""
    n = shape.n
    eps = as_scalar(epsilon())
    rt, ct = row_tableau(shape), column_tableau(shape)
    psi_r, psi_c = psi_tableau(rt), psi_tableau(ct)
    qr, qc = special_point(rt), special_point(ct)
    out: list[CheckResult] = []

    # row-adjacent pairs of the row tableau
    ann, div = [], []
    for k in range(1, n):
        if bruhat_step(rt, k) == "row":
            a, b = qr.value(k), qr.value(k + 1)
            ann.append(not psi_left(k, a, b, psi_r))
            div.append(psi_left(k, b, a, psi_r) == psi_r.scale(_ratio(eps, a, b)))
    out.append(CheckResult("row-annihilation", _status(ann), f"{len(ann)} row-adjacent pairs"))
    out.append(CheckResult("row-left-divisibility", _status(div), f"{len(div)} row-adjacent pairs"))

    out.append(CheckResult("alpha-fixed-point", _status([alpha(psi_c) == psi_c]), "column tableau"))

    # column-adjacent pairs of the column tableau
    theta_ok, theta_last, left_ok, right_ok = [], [], [], []
    th = theta_column(shape)
    for k in range(1, n):
        if bruhat_step(ct, k) != "column":
            continue
        a, b = qc.value(k), qc.value(k + 1)
        lam = _ratio(eps, a, b)
        left_ok.append(psi_left(k, b, a, psi_c) == psi_c.scale(lam))
        right_ok.append(psi_right(psi_c, n - k, b, a) == psi_c.scale(lam))
        theta_ok.append(psi_left(k, b, a, th) == th.scale(lam))
        if k == n - 1:
            theta_last.append(theta_ok[-1])
    out.append(CheckResult("theta-left-divisibility", _status(theta_ok), f"{len(theta_ok)} column-adjacent pairs"))
    out.append(
        CheckResult(
            "theta-left-divisibility-last-pair",
            _status(theta_last),
            "last two symbols column-adjacent" if theta_last else "last two symbols not column-adjacent",
        )
    )
    out.append(CheckResult("column-left-divisibility", _status(left_ok), f"{len(left_ok)} column-adjacent pairs"))
    out.append(CheckResult("column-right-divisibility", _status(right_ok), f"{len(right_ok)} column-adjacent pairs"))

    # column-adjacent pairs of the row tableau, multiplied on the right
    rdiv = []
    for (i, j) in shape.boxes():
        if (i + 1, j) in rt.positions.values():
            k, l = rt[(i, j)], rt[(i + 1, j)]
            p = ct[(i, j)]
            a, b = qr.value(k), qr.value(l)
            rdiv.append(psi_right(psi_r, n - p, b, a) == psi_r.scale(_ratio(eps, a, b)))
    out.append(CheckResult("row-tableau-right-divisibility", _status(rdiv), f"{len(rdiv)} column-adjacent pairs"))

    # Clifford intertwining at the single-coordinate inversions
    cint = []
    for tab in enumerate_standard(shape):
        psi = psi_tableau(tab)
        winv = inverse_perm(w_of(tab))
        for k in range(1, n + 1):
            lhs = left_C(k, psi)
            rhs = right_C(psi_prime_tableau(tab, k), winv[k - 1])
            cint.append(lhs == rhs)
    out.append(CheckResult("clifford-intertwining", _status(cint), f"{len(cint)} (tableau, k) cases"))

    gam = []
    w = w_of(rt)
    winv = inverse_perm(w)
    for signs in sign_vectors(shape):
        g = gamma_element(shape, signs)
        g2 = gamma_element(shape, signs, relabel=winv)
        gam.append(mul(g, psi_r) == mul(psi_r, g2))
    out.append(CheckResult("gamma-intertwining", _status(gam), f"{len(gam)} sign vectors"))
    return out


# --------------------------------------------------------------------------
# On-disk cache of computed elements


def cache_filename(tab: ShiftedTableau) -> str:
    shape = "-".join(map(str, tab.shape.parts))
    word = "-".join(map(str, tab.row_reading()))
    return f"psi_n{tab.n}_shape{shape}_row{word}.json"


class PsiCache:
    """One canonical JSON file per tableau; writes are atomic renames."""

    def __init__(self, directory: str | os.PathLike[str], verify: bool = True) -> None:
        self.directory = Path(directory)
        self.verify = verify

    def path(self, tab: ShiftedTableau) -> Path:
        return self.directory / cache_filename(tab)

    def load(self, tab: ShiftedTableau) -> AlgebraElement | None:
        p = self.path(tab)
        if not p.exists():
            return None
        return AlgebraElement.from_json(p.read_text())

    def get(self, tab: ShiftedTableau) -> tuple[AlgebraElement, bool]:
        """``(psi, was_cached)``."""
        got = self.load(tab)
        if got is not None:
            return got, True
        psi = psi_tableau(tab)
        if self.verify:
            from .numeric import NumericConfig, fusion_agreement

            err = fusion_agreement(tab, psi, NumericConfig())
            if not err <= 1e-6:
                raise FusionError(f"numeric fusion limit disagrees ({err:.2e}); not caching")
        self.store(tab, psi)
        return psi, False

    def store(self, tab: ShiftedTableau, psi: AlgebraElement) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        target = self.path(tab)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(psi.dumps())
                fh.write("\n")
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return target


def psi_summary(tab: ShiftedTableau, psi: AlgebraElement) -> dict:
    w = w_of(tab)
    return {
        "tableau": tab.to_json(),
        "terms": len(psi),
        "leading_permutation": list(w),
        "leading_coefficient": str(psi.coefficient(w)),
        "leading_ok": leading_check(tab, psi),
    }


__all__ = [
    "CheckResult",
    "Factor",
    "FusionError",
    "FusionPlan",
    "GroupedFactor",
    "IdempotentPairError",
    "PsiCache",
    "SpecialPoint",
    "box_value",
    "cache_filename",
    "divisibility_suite",
    "eqn_prefactor",
    "first_up_step",
    "fusion_plan",
    "gamma_element",
    "leading_check",
    "proportionality",
    "psi_column",
    "psi_prime_tableau",
    "psi_summary",
    "psi_tableau",
    "psi_tableau_direct",
    "raw_theta_factors",
    "raw_theta_prime_factors",
    "sign_vectors",
    "special_point",
    "symmetrizer",
    "theta_column",
    "theta_prime_column",
]
