"""Floating-point images of the exact objects and the limit-based oracles.

Exact scalars are evaluated at a real ``q > 1`` with every ``sqrt([m])``
taken positive.  Algebra elements become dense complex vectors on the basis
``T_w C_B``; left multiplication by generators becomes dense matrices.

Two genuinely analytic checks live here:

* :func:`fusion_limit` follows a path inside the constraint set towards the
  special point and extrapolates the raw product of psi factors;
* :func:`degeneration_check` sends ``q -> 1`` in a single factor at two
  special values.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Sequence

import numpy as np

from .affine import Character, GeneratorOps, PrincipalSeries, basis_word, phi_factors
from .algebra import AlgebraElement, Key, left_C, left_T
from .scalars import TowerScalar, as_scalar, special_value
from .tableaux import Permutation, ShiftedTableau, subsequences


@dataclass(frozen=True)
class NumericConfig:
    """Where and how finely to sample.

    ``ts`` are path parameters (the deformation of the special point is
    ``t**2`` in the ``u`` coordinates), strictly decreasing and positive.
    """

    q: float = 1.2
    ts: tuple[float, ...] = (0.1, 0.05, 0.025, 0.0125, 0.00625, 0.003125)
    offsets: tuple[float, ...] = (1.0, 1.37, 1.81, 2.29, 2.73, 3.19)
    tolerance: float = 1e-6

    def __post_init__(self) -> None:
        if self.q == 1:
            raise ValueError("q must differ from 1")
        if any(t <= 0 for t in self.ts) or any(a <= b for a, b in zip(self.ts, self.ts[1:])):
            raise ValueError("ts must be positive and strictly decreasing")


def numeric_eval(x: Any, q: float | NumericConfig = 1.2) -> complex:
    """Evaluate an exact scalar at a numeric ``q``."""
    qq = q.q if isinstance(q, NumericConfig) else q
    if isinstance(x, (int, float, complex)):
        return complex(x)
    return as_scalar(x).evaluate(qq)


# --------------------------------------------------------------------------
# Dense carriers


@lru_cache(maxsize=None)
def basis_keys(n: int) -> tuple[Key, ...]:
    """All ``(permutation, Clifford mask)`` pairs in a fixed order."""
    perms = sorted(itertools.permutations(range(1, n + 1)))
    masks = sorted(range(0, 1 << (n + 1), 2), key=lambda m: (bin(m).count("1"), m))
    return tuple((p, m) for p in perms for m in masks)


@lru_cache(maxsize=None)
def basis_index(n: int) -> dict[Key, int]:
    return {k: i for i, k in enumerate(basis_keys(n))}


def to_vector(x: AlgebraElement, q: float = 1.2) -> np.ndarray:
    idx = basis_index(x.n)
    v = np.zeros(len(idx), dtype=complex)
    for key, c in x.terms.items():
        v[idx[key]] = c.evaluate(q)
    return v


@lru_cache(maxsize=None)
def generator_matrices(n: int, q: float) -> tuple[dict[int, np.ndarray], dict[int, np.ndarray]]:
    """Left multiplication by ``T_k`` and ``C_k`` as dense matrices."""
    keys = basis_keys(n)
    idx = basis_index(n)
    N = len(keys)
    Ts, Cs = {}, {}
    for k in range(1, n + 1):
        for kind, store in (("T", Ts), ("C", Cs)):
            if kind == "T" and k == n:
                continue
            mat = np.zeros((N, N), dtype=complex)
            for j, (p, m) in enumerate(keys):
                b = AlgebraElement(n, {(p, m): TowerScalar(1)})
                img = left_T(k, b) if kind == "T" else left_C(k, b)
                for key, c in img.terms.items():
                    mat[idx[key], j] = c.evaluate(q)
            store[k] = mat
    return Ts, Cs


class NumericOps(GeneratorOps[np.ndarray]):
    def __init__(self, n: int, q: float) -> None:
        self.n = n
        self.q = q
        self.eps = q - 1 / q
        self.Ts, self.Cs = generator_matrices(n, q)
        self.size = len(basis_keys(n))

    def left_T(self, k: int, v: np.ndarray) -> np.ndarray:
        return self.Ts[k] @ v

    def left_C(self, k: int, v: np.ndarray) -> np.ndarray:
        return self.Cs[k] @ v

    def unit(self, c: Any) -> np.ndarray:
        v = np.zeros(self.size, dtype=complex)
        v[0] = c  # the identity permutation with the empty Clifford word
        return v

    def scale(self, v: np.ndarray, c: Any) -> np.ndarray:
        return v * c

    # ---- factors
    def psi_coefficients(self, x: complex, y: complex) -> tuple[complex, complex]:
        return self.eps / (y / x - 1), self.eps / (x * y - 1)

    def psi_left(self, k: int, x: complex, y: complex, v: np.ndarray) -> np.ndarray:
        a, b = self.psi_coefficients(x, y)
        return self.Ts[k] @ v + a * v + b * (self.Cs[k] @ (self.Cs[k + 1] @ v))

    def product(self, factors: Sequence[tuple[int, complex, complex]], v: np.ndarray | None = None) -> np.ndarray:
        """``(ordered product of psi factors) * v``."""
        out = self.unit(1) if v is None else v
        for k, x, y in reversed(list(factors)):
            out = self.psi_left(k, x, y, out)
        return out


def numeric_ops(n: int, q: float = 1.2) -> NumericOps:
    return NumericOps(n, q)


# --------------------------------------------------------------------------
# Extrapolation


def extrapolate_to_zero(ts: Sequence[float], values: Sequence[np.ndarray]) -> np.ndarray:
    """Neville's polynomial extrapolation of ``f(t)`` to ``t = 0``."""
    ts = list(ts)
    p = [np.asarray(v, dtype=complex) for v in values]
    m = len(ts)
    for level in range(1, m):
        for i in range(m - level):
            t0, t1 = ts[i], ts[i + level]
            p[i] = (t0 * p[i + 1] - t1 * p[i]) / (t0 - t1)
    return p[0]


# --------------------------------------------------------------------------
# The fusion limit


def _x_from_u(u: complex, q: float, t: float) -> complex:
    """Root ``x`` of ``(x + 1/x)/2 = (q u^2 + u^-2/q)/(q + 1/q)`` continuous in ``t``.

    The square root is written as ``t * sqrt((R^2 - 1)/t^2)`` so that the
    diagonal boxes (where the two roots meet at ``t = 0``) stay analytic in ``t``.
    """
    R = (q * u * u + 1 / (q * u * u)) / (q + 1 / q)
    return R - t * cmath.sqrt((R * R - 1) / (t * t))


def fusion_path(tab: ShiftedTableau, t: float, cfg: NumericConfig) -> list[complex]:
    """Coordinates ``x_1..x_n`` of the path point with parameter ``t``.

    Row ``i`` uses ``u = q^(j-i) (1 + t^2 h_i)``, so row neighbours keep the
    ratio ``q`` (and satisfy the idempotency condition) for every ``t``.
    """
    q = cfg.q
    out = []
    for k in range(1, tab.n + 1):
        i, j = tab.positions[k]
        h = cfg.offsets[(i - 1) % len(cfg.offsets)] + (i - 1) // len(cfg.offsets)
        u = q ** (j - i) * (1 + t * t * h)
        out.append(_x_from_u(u, q, t))
    return out


def raw_psi_factors(tab: ShiftedTableau, x: Sequence[complex]) -> list[tuple[int, complex, complex]]:
    """Factors of ``psi_Lambda(x)`` in product order (column-reading form)."""
    out = []
    for k in range(2, tab.n + 1):
        for p, b in enumerate(subsequences(tab, k).before_col, start=1):
            out.append((k - p, x[k - 1], x[b - 1]))
    return out


def fusion_limit(tab: ShiftedTableau, cfg: NumericConfig | None = None) -> np.ndarray:
    """Numeric value of the fusion limit of ``psi_Lambda`` as a dense vector."""
    cfg = cfg or NumericConfig()
    ops = NumericOps(tab.n, cfg.q)
    samples = [ops.product(raw_psi_factors(tab, fusion_path(tab, t, cfg))) for t in cfg.ts]
    return extrapolate_to_zero(cfg.ts, samples)


def relative_error(a: np.ndarray, b: np.ndarray) -> float:
    scale = max(1.0, float(np.max(np.abs(b))) if b.size else 1.0)
    return float(np.max(np.abs(a - b))) / scale


def fusion_agreement(tab: ShiftedTableau, psi: AlgebraElement, cfg: NumericConfig | None = None) -> float:
    """Relative max-coefficient error between the exact element and the limit."""
    cfg = cfg or NumericConfig()
    return relative_error(fusion_limit(tab, cfg), to_vector(psi, cfg.q))


def path_idempotency_defect(tab: ShiftedTableau, cfg: NumericConfig | None = None) -> float:
    """Largest idempotency defect among row neighbours over all path samples."""
    cfg = cfg or NumericConfig()
    q = cfg.q
    eps2 = (q - 1 / q) ** 2
    worst = 0.0
    for t in cfg.ts:
        x = fusion_path(tab, t, cfg)
        for (i, j), a in ((b, tab[b]) for b in tab.shape.boxes()):
            if (i, j + 1) in tab.positions.values():
                b = tab[(i, j + 1)]
                xa, xb = x[a - 1], x[b - 1]
                r, s = xb / xa, xa * xb
                worst = max(worst, abs(1 - eps2 * (r / (r - 1) ** 2 + s / (s - 1) ** 2)))
    return worst


# --------------------------------------------------------------------------
# Regularized triple: numeric limit


def triple_limit(k: int, x: complex, y: complex, n: int, cfg: NumericConfig | None = None) -> np.ndarray:
    """``lim_{z -> y} psi_k(x,y) psi_{k+1}(z,y) psi_k(z,x)`` by extrapolation."""
    cfg = cfg or NumericConfig()
    ops = NumericOps(n, cfg.q)
    samples = [ops.product([(k, x, y), (k + 1, y * (1 + t), y), (k, y * (1 + t), x)]) for t in cfg.ts]
    return extrapolate_to_zero(cfg.ts, samples)


# --------------------------------------------------------------------------
# Generic characters


def random_generic_character(n: int, rng: np.random.Generator) -> Character:
    """A numeric character with well separated values."""
    while True:
        vals = tuple(complex(v) for v in rng.uniform(1.3, 4.0, n) * np.exp(1j * rng.uniform(-0.6, 0.6, n)))
        ok = all(abs(a - b) > 0.05 and abs(a * b - 1) > 0.05 for a, b in itertools.combinations(vals, 2))
        if ok:
            return Character(vals)


def numeric_phi_on_identity(s: Permutation, chi: Character, ops: NumericOps) -> np.ndarray:
    return ops.product(phi_factors(s, chi))


def numeric_act_X(k: int, v: np.ndarray, chi: Character, ops: NumericOps, power: int = 1) -> np.ndarray:
    ps = PrincipalSeries(chi, ops)
    keys = basis_keys(ops.n)
    out = np.zeros_like(v)
    for a in np.nonzero(v)[0]:
        out = out + v[a] * ps.on_word(k, power, basis_word(*keys[a]))
    return out


def scalar_action_error(s: Permutation, chi: Character, q: float = 1.2) -> float:
    """``X_k`` acts on ``pi_chi(Phi_s)(1)`` by ``(s·chi)(X_k)``: worst relative error."""
    ops = NumericOps(chi.n, q)
    phi = numeric_phi_on_identity(s, chi, ops)
    target = chi.permuted(s)
    worst = 0.0
    for k in range(1, chi.n + 1):
        lhs = numeric_act_X(k, phi, chi, ops)
        worst = max(worst, relative_error(lhs, target.value(k) * phi))
    return worst


def _right_mul(v: np.ndarray, phi: np.ndarray, ops: NumericOps) -> np.ndarray:
    """``v * phi``: each basis word of ``v`` applied on the left of ``phi``."""
    keys = basis_keys(ops.n)
    out = np.zeros_like(phi)
    for a in np.nonzero(v)[0]:
        img = phi
        for kind, j in reversed(basis_word(*keys[a])):
            img = ops.left_T(j, img) if kind == "T" else ops.left_C(j, img)
        out = out + v[a] * img
    return out


def _act(ps: PrincipalSeries, k: int, v: np.ndarray) -> np.ndarray:
    keys = basis_keys(ps.ops.n)
    out = np.zeros_like(v)
    for a in np.nonzero(v)[0]:
        out = out + v[a] * ps.on_word(k, 1, basis_word(*keys[a]))
    return out


def intertwiner_error(s: Permutation, chi: Character, q: float = 1.2, samples: int = 24) -> float:
    """``X_k (m * phi) = (X_k m) * phi`` with ``X_k`` acting in ``M_chi`` resp. ``M_{s·chi}``.

    Here ``phi = pi_chi(Phi_s)(1)``; checked on an evenly spaced sample of
    basis vectors ``m``.
    """
    n = chi.n
    ops = NumericOps(n, q)
    phi = numeric_phi_on_identity(s, chi, ops)
    ps_chi = PrincipalSeries(chi, ops)
    ps_target = PrincipalSeries(chi.permuted(s), ops)
    size = len(basis_keys(n))
    worst = 0.0
    for i in range(0, size, max(1, size // samples)):
        m = np.zeros(size, dtype=complex)
        m[i] = 1
        image = _right_mul(m, phi, ops)
        for k in range(1, n + 1):
            lhs = _act(ps_chi, k, image)
            rhs = _right_mul(_act(ps_target, k, m), phi, ops)
            worst = max(worst, relative_error(lhs, rhs))
    return worst


# --------------------------------------------------------------------------
# q -> 1 degeneration


def degeneration_formula(a: int, b: int) -> tuple[float, float]:
    """Limit of the scalar and ``C_k C_{k+1}`` coefficients as ``q -> 1``."""
    ra, rb = math.sqrt(a * (a + 1)), math.sqrt(b * (b + 1))
    return 1 / (ra - rb), -1 / (ra + rb)


def degeneration_limit(a: int, b: int, hs: Sequence[float] = (1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4)) -> tuple[complex, complex, complex]:
    """Coefficients ``(T_k, scalar, C_k C_{k+1})`` of ``psi_k`` at two special values, ``q -> 1``."""
    if a == b:
        raise ValueError("degeneration needs distinct contents")
    xa, xb = special_value(a), special_value(b)
    samples = []
    for h in hs:
        q = 1 + h
        x, y = xa.evaluate(q), xb.evaluate(q)
        eps = q - 1 / q
        samples.append(np.array([1.0, eps / (y / x - 1), eps / (x * y - 1)], dtype=complex))
    lim = extrapolate_to_zero(hs, samples)
    return complex(lim[0]), complex(lim[1]), complex(lim[2])


def degeneration_check(a: int, b: int, tol: float = 1e-6) -> tuple[bool, float]:
    """Compare the ``q -> 1`` limit with the closed formula; returns (ok, error)."""
    t, c0, c1 = degeneration_limit(a, b)
    f0, f1 = degeneration_formula(a, b)
    err = max(abs(t - 1), abs(c0 - f0), abs(c1 - f1))
    return err <= tol, err


__all__ = [
    "NumericConfig",
    "NumericOps",
    "basis_index",
    "basis_keys",
    "degeneration_check",
    "degeneration_formula",
    "degeneration_limit",
    "extrapolate_to_zero",
    "fusion_agreement",
    "fusion_limit",
    "fusion_path",
    "generator_matrices",
    "intertwiner_error",
    "numeric_act_X",
    "numeric_eval",
    "numeric_ops",
    "numeric_phi_on_identity",
    "path_idempotency_defect",
    "random_generic_character",
    "raw_psi_factors",
    "relative_error",
    "scalar_action_error",
    "to_vector",
    "triple_limit",
]
