"""Spectral-parameter factors and the principal series of the affine algebra.

The affine algebra adds commuting invertible ``X_1, ..., X_n`` subject to

    T_k X_k     = X_{k+1} T_k - eps*(X_{k+1} - C_k C_{k+1} X_k)
    T_k X_{k+1} = X_k T_k + eps*(1 + C_k C_{k+1}) X_{k+1}
    C_k X_k     = X_k^{-1} C_k,     X_l commutes with T_k, C_k otherwise.

Its principal series ``M_chi`` is the finite algebra itself with ``X_k``
acting on ``1`` by the scalar ``chi(X_k)``.  To act on a basis word we push
``X_l^{+-1}`` rightwards one generator at a time; each rewrite leaves a
single ``X`` letter, so a memoized recursion on the suffix of the word
suffices.

The intertwiners ``Phi_s`` are never built; only their values on ``1``,
which are ordered products of the factors

    psi_k(x, y) = T_k + eps/(y/x - 1) + eps/(x*y - 1) * C_k C_{k+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Generic, Iterable, Sequence, TypeVar

from .algebra import (
    AlgebraElement,
    indices_of,
    left_C,
    left_T,
    mul,
    right_C,
    right_T,
)
from .scalars import Scalar, TowerScalar, as_scalar, epsilon
from .tableaux import Permutation, identity_perm, inverse_perm, reduced_word

V = TypeVar("V")


class SingularFactorError(ArithmeticError):
    """A spectral factor was evaluated where it has a pole."""


class IdempotentPairError(ArithmeticError):
    """A factor expected to be invertible sits on the idempotency curve."""


# --------------------------------------------------------------------------
# Characters


@dataclass(frozen=True)
class Character:
    """A character of the Laurent polynomial subalgebra.

    ``values[k-1]`` is the value on ``X_k^{-1}`` (not on ``X_k``).
    """

    values: tuple[Any, ...]

    def __post_init__(self) -> None:
        vals = tuple(v if isinstance(v, (complex, float)) else as_scalar(v) for v in self.values)
        if any(not v for v in vals):
            raise ValueError("character values must be nonzero")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    def inv_value(self, k: int) -> Any:
        """``chi(X_k^{-1})``."""
        return self.values[k - 1]

    def value(self, k: int) -> Any:
        """``chi(X_k)``."""
        return 1 / self.values[k - 1]

    def permuted(self, s: Permutation) -> "Character":
        """``s·chi`` with ``(s·chi)(X_k) = chi(X_{s^{-1}(k)})``."""
        inv = inverse_perm(s)
        return Character(tuple(self.values[inv[k] - 1] for k in range(self.n)))

    def is_generic(self) -> bool:
        vals = self.values
        for a in range(self.n):
            for b in range(a + 1, self.n):
                x, y = vals[a], vals[b]
                if x == y or x * y == 1:
                    return False
        return True


def tableau_character(x: Sequence[Any], w: Permutation) -> Character:
    """The character with ``(w·chi)(X_k^{-1}) = x_k``, i.e. ``chi(X_m^{-1}) = x_{w(m)}``."""
    return Character(tuple(x[w[m] - 1] for m in range(len(w))))


# --------------------------------------------------------------------------
# Scalar helpers for the factors


def psi_coefficients(x: Scalar, y: Scalar) -> tuple[TowerScalar, TowerScalar]:
    """The scalar and ``C_k C_{k+1}`` coefficients of ``psi_k(x, y)``."""
    x, y = as_scalar(x), as_scalar(y)
    u = y / x - 1
    v = x * y - 1
    if not u or not v:
        raise SingularFactorError("psi factor is singular: y = x^{+-1}")
    eps = as_scalar(epsilon())
    return eps / u, eps / v


def idempotency_defect(x: Scalar, y: Scalar) -> TowerScalar:
    """``1 - eps^2 (r/(r-1)^2 + s/(s-1)^2)`` with ``r = y/x``, ``s = xy``.

    This is the scalar ``psi_k(y,x) psi_k(x,y)``; it vanishes exactly on the
    idempotency curve.
    """
    x, y = as_scalar(x), as_scalar(y)
    r = y / x
    s = x * y
    if r == 1 or s == 1:
        raise SingularFactorError("pair is singular: y = x^{+-1}")
    eps2 = as_scalar(epsilon() * epsilon())
    return 1 - eps2 * (r / ((r - 1) * (r - 1)) + s / ((s - 1) * (s - 1)))


def idempotency_holds(x: Scalar, y: Scalar) -> bool:
    """Exact test of ``r/(r-1)^2 + s/(s-1)^2 = 1/eps^2`` (``r = y/x``, ``s = xy``)."""
    return not idempotency_defect(x, y)


def d_scalar(x: Scalar, y: Scalar) -> TowerScalar:
    """The scalar ``d(x, y)`` in its closed form.

    Exact computation gives ``theta_k(x,y) psi_k(x,y) = -d(x,y) psi_k(x,y)``:
    the closed form is kept as is and the sign lives at the call sites.
    """
    x, y = as_scalar(x), as_scalar(y)
    a = x * y - 1
    b = y / x - 1
    if not a or not b:
        raise SingularFactorError("d(x, y) is singular: y = x^{+-1}")
    a4 = (a * a) * (a * a)
    b4 = (b * b) * (b * b)
    x3 = x * x * x
    xi = 1 / x
    xi3 = xi * xi * xi
    eps = as_scalar(epsilon())
    bracket = (y * y - 1) * (x3 / a4 + xi3 / b4) + (x3 - x) / a4 + (xi3 - xi) / b4
    return eps * eps * eps * y * bracket


# --------------------------------------------------------------------------
# The factors as algebra elements


def _check_k(k: int, n: int, span: int) -> None:
    if not 1 <= k <= n - span:
        raise ValueError(f"factor index {k} out of range for n={n}")


def psi_factor(k: int, x: Scalar, y: Scalar, n: int) -> AlgebraElement:
    """``psi_k(x, y) = T_k + eps/(y/x - 1) + eps/(xy - 1) C_k C_{k+1}``."""
    _check_k(k, n, 1)
    a, b = psi_coefficients(x, y)
    return AlgebraElement.T(k, n) + a + left_C(k, AlgebraElement.C(k + 1, n)).scale(b)


def psi_left(k: int, x: Scalar, y: Scalar, m: AlgebraElement) -> AlgebraElement:
    """``psi_k(x, y) * m`` without building the factor."""
    a, b = psi_coefficients(x, y)
    return left_T(k, m) + m.scale(a) + left_C(k, left_C(k + 1, m)).scale(b)


def psi_right(m: AlgebraElement, k: int, x: Scalar, y: Scalar) -> AlgebraElement:
    """``m * psi_k(x, y)``."""
    a, b = psi_coefficients(x, y)
    return right_T(m, k) + m.scale(a) + right_C(right_C(m, k), k + 1).scale(b)


def psi_factor_inverse(k: int, x: Scalar, y: Scalar, n: int) -> AlgebraElement:
    """``psi_k(x,y)^{-1} = psi_k(y,x) / (psi_k(y,x) psi_k(x,y))``.

    Raises :class:`IdempotentPairError` on the idempotency curve and
    :class:`SingularFactorError` when ``y = x^{+-1}``.
    """
    beta = idempotency_defect(x, y)
    if not beta:
        raise IdempotentPairError("psi factor is not invertible on the idempotency curve")
    return psi_factor(k, y, x, n).scale(1 / beta)


def psi_inverse_left(k: int, x: Scalar, y: Scalar, m: AlgebraElement) -> AlgebraElement:
    """``psi_k(x,y)^{-1} * m``."""
    beta = idempotency_defect(x, y)
    if not beta:
        raise IdempotentPairError("psi factor is not invertible on the idempotency curve")
    return psi_left(k, y, x, m).scale(1 / beta)


def _cc(k: int, l: int, m: AlgebraElement) -> AlgebraElement:
    """``C_k C_l * m``."""
    return left_C(k, left_C(l, m))


def theta_regular_left(k: int, x: Scalar, y: Scalar, z: Scalar, m: AlgebraElement) -> AlgebraElement:
    """The regularized triple product ``psi_k(x,y) psi_{k+1}(z,y) psi_k(z,x)`` times ``m``.

    Valid for ``(x, y)`` on the idempotency curve with ``z`` arbitrary
    (including ``z = y^{+-1}``, where the raw product has poles):

        psi_k(x,y) [ T_{k+1} psi_k(z,x)
                     - eps^2 ( xi z/((xi y - 1)(xi z - 1))
                               - x z/((x y - 1)(x z - 1)) C_k C_{k+1}
                               + 1/((x y - 1)(xi z - 1)) C_{k+1} C_{k+2}
                               + 1/((x z - 1)(xi y - 1)) C_{k+2} C_k ) ]

    with ``xi = 1/x``.
    """
    x, y, z = as_scalar(x), as_scalar(y), as_scalar(z)
    xi = 1 / x
    xy1, xiy1, xz1, xiz1 = x * y - 1, xi * y - 1, x * z - 1, xi * z - 1
    if not (xy1 and xiy1 and xz1 and xiz1):
        raise SingularFactorError("theta factor needs y, z != x^{+-1}")
    eps2 = as_scalar(epsilon() * epsilon())
    c0 = xi * z / (xiy1 * xiz1)
    c1 = -(x * z) / (xy1 * xz1)
    c2 = 1 / (xy1 * xiz1)
    c3 = 1 / (xz1 * xiy1)
    inner = left_T(k + 1, psi_left(k, z, x, m))
    bracket = (
        m.scale(c0)
        + _cc(k, k + 1, m).scale(c1)
        + _cc(k + 1, k + 2, m).scale(c2)
        - _cc(k, k + 2, m).scale(c3)  # C_{k+2} C_k = -C_k C_{k+2}
    )
    return psi_left(k, x, y, inner - bracket.scale(eps2))


def theta_factor(k: int, x: Scalar, y: Scalar, n: int) -> AlgebraElement:
    """The value at ``z = y`` of ``psi_k(x,y) psi_{k+1}(z,y) psi_k(z,x)`` on the curve.

    Closed form: ``psi_k(x,y) T_{k+1} psi_k(y,x) - eps^2 psi_k(x,y)[A - B C_k C_{k+1}
    + D C_{k+1} C_{k+2} + D C_{k+2} C_k]`` with ``A = r/(r-1)^2``,
    ``B = s/(s-1)^2``, ``D = 1/((s-1)(r-1))``, ``r = y/x``, ``s = xy``.
    """
    _check_k(k, n, 2)
    x, y = as_scalar(x), as_scalar(y)
    if x == y or x * y == 1:
        raise SingularFactorError("theta factor needs y != x^{+-1}")
    if not idempotency_holds(x, y):
        raise ValueError("theta factor needs (x, y) on the idempotency curve")
    r, s = y / x, x * y
    eps2 = as_scalar(epsilon() * epsilon())
    A = r / ((r - 1) * (r - 1))
    B = s / ((s - 1) * (s - 1))
    D = 1 / ((s - 1) * (r - 1))
    one = AlgebraElement.one(n)
    first = psi_left(k, x, y, left_T(k + 1, psi_factor(k, y, x, n)))
    bracket = one.scale(A) - _cc(k, k + 1, one).scale(B) + _cc(k + 1, k + 2, one).scale(D) + _cc(k + 2, k, one).scale(D)
    return first - psi_left(k, x, y, bracket).scale(eps2)


def theta_general(k: int, x: Scalar, y: Scalar, z: Scalar, n: int) -> AlgebraElement:
    """:func:`theta_regular_left` applied to ``1``."""
    _check_k(k, n, 2)
    if not idempotency_holds(x, y):
        raise ValueError("regularized triple needs (x, y) on the idempotency curve")
    return theta_regular_left(k, x, y, z, AlgebraElement.one(n))


# --------------------------------------------------------------------------
# Principal series


class GeneratorOps(Generic[V]):
    """Linear operations on a carrier of the left regular module.

    Subclasses provide left multiplication by ``T_k`` / ``C_k``, vector
    arithmetic and the unit vector.  The exact carrier is
    :class:`AlgebraElement`; the numeric one uses dense arrays.
    """

    n: int
    eps: Any

    def left_T(self, k: int, v: V) -> V:  # pragma: no cover - interface
        raise NotImplementedError

    def left_C(self, k: int, v: V) -> V:  # pragma: no cover - interface
        raise NotImplementedError

    def unit(self, c: Any) -> V:  # pragma: no cover - interface
        raise NotImplementedError

    def add(self, a: V, b: V) -> V:
        return a + b  # type: ignore[operator]

    def scale(self, v: V, c: Any) -> V:  # pragma: no cover - interface
        raise NotImplementedError


class ExactOps(GeneratorOps[AlgebraElement]):
    def __init__(self, n: int) -> None:
        self.n = n
        self.eps = as_scalar(epsilon())

    def left_T(self, k: int, v: AlgebraElement) -> AlgebraElement:
        return left_T(k, v)

    def left_C(self, k: int, v: AlgebraElement) -> AlgebraElement:
        return left_C(k, v)

    def unit(self, c: Any) -> AlgebraElement:
        return AlgebraElement.scalar(self.n, c)

    def scale(self, v: AlgebraElement, c: Any) -> AlgebraElement:
        return v.scale(c)


Word = tuple[tuple[str, int], ...]


def basis_word(w: Permutation, mask: int) -> Word:
    """The generator word of the basis element ``T_w C_B``."""
    return tuple(("T", j) for j in reduced_word(w)) + tuple(("C", l) for l in indices_of(mask))


class PrincipalSeries(Generic[V]):
    """``X_l^{+-1}`` acting on words applied to ``1`` in ``M_chi``."""

    def __init__(self, chi: Character, ops: GeneratorOps[V]) -> None:
        if chi.n != ops.n:
            raise ValueError("character and carrier ranks differ")
        self.chi = chi
        self.ops = ops
        self._memo: dict[tuple[int, int, Word], V] = {}

    def on_word(self, l: int, a: int, word: Word) -> V:
        """``X_l^a * (word applied to 1)`` for ``a = +-1``."""
        key = (l, a, word)
        got = self._memo.get(key)
        if got is not None:
            return got
        ops = self.ops
        if not word:
            c = self.chi.value(l) if a == 1 else self.chi.inv_value(l)
            out = ops.unit(c)
        else:
            (kind, k), rest = word[0], word[1:]
            if kind == "C":
                out = ops.left_C(k, self.on_word(l, -a if l == k else a, rest))
            elif l not in (k, k + 1):
                out = ops.left_T(k, self.on_word(l, a, rest))
            else:
                out = self._past_t(l, a, k, rest)
        self._memo[key] = out
        return out

    def _past_t(self, l: int, a: int, k: int, rest: Word) -> V:
        ops, eps, f = self.ops, self.ops.eps, self.on_word

        def cc(v: V) -> V:
            return ops.left_C(k, ops.left_C(k + 1, v))

        if a == 1 and l == k + 1:
            # X_{k+1} T_k = T_k X_k + eps X_{k+1} - eps C_k C_{k+1} X_k
            u = f(k, 1, rest)
            return ops.add(ops.add(ops.left_T(k, u), ops.scale(f(k + 1, 1, rest), eps)), ops.scale(cc(u), -eps))
        if a == 1:
            # X_k T_k = T_k X_{k+1} - eps X_{k+1} - eps C_k C_{k+1} X_{k+1}
            u = f(k + 1, 1, rest)
            return ops.add(ops.add(ops.left_T(k, u), ops.scale(u, -eps)), ops.scale(cc(u), -eps))
        if l == k + 1:
            # X_{k+1}^-1 T_k = T_k X_k^-1 - eps X_k^-1 + eps C_k C_{k+1} X_{k+1}
            u = f(k, -1, rest)
            return ops.add(ops.add(ops.left_T(k, u), ops.scale(u, -eps)), ops.scale(cc(f(k + 1, 1, rest)), eps))
        # X_k^-1 T_k = T_k X_{k+1}^-1 + eps X_k^-1 + eps C_k C_{k+1} X_k
        return ops.add(
            ops.add(ops.left_T(k, f(k + 1, -1, rest)), ops.scale(f(k, -1, rest), eps)),
            ops.scale(cc(f(k, 1, rest)), eps),
        )


def act_X(k: int, m: AlgebraElement, chi: Character, power: int = 1) -> AlgebraElement:
    """``X_k^{power} * m`` in the principal series ``M_chi`` (``power = +-1``)."""
    if power not in (1, -1):
        raise ValueError("power must be +1 or -1")
    ps = PrincipalSeries(chi, ExactOps(m.n))
    out = AlgebraElement.zero(m.n)
    for (w, mask), c in m.terms.items():
        out = out + ps.on_word(k, power, basis_word(w, mask)).scale(c)
    return out


def phi_factors(s: Permutation, chi: Character, word: Sequence[int] | None = None) -> list[tuple[int, Any, Any]]:
    """Factor list ``[(k, x, y), ...]`` (left to right) of ``pi_chi(Phi_s)(1)``.

    For ``s = s_{j1} ... s_{jr}`` the rightmost factor uses ``chi`` itself and
    each further factor the character permuted by the letters to its right.
    """
    word = tuple(reduced_word(tuple(s)) if word is None else word)
    n = chi.n
    running = chi
    factors = []
    for j in reversed(word):
        factors.append((j, running.inv_value(j), running.inv_value(j + 1)))
        running = running.permuted(_transposition(j, n))
    factors.reverse()
    return factors


def _transposition(j: int, n: int) -> Permutation:
    p = list(identity_perm(n))
    p[j - 1], p[j] = p[j], p[j - 1]
    return tuple(p)


def phi_on_identity(s: Permutation, chi: Character, word: Sequence[int] | None = None) -> AlgebraElement:
    """``pi_chi(Phi_s)(1)`` as an ordered product of psi factors."""
    out = AlgebraElement.one(chi.n)
    for k, x, y in reversed(phi_factors(s, chi, word)):
        out = psi_left(k, x, y, out)
    return out


def intertwiner_check(s: Permutation, chi: Character, vectors: Iterable[AlgebraElement] | None = None) -> bool:
    """Right multiplication by ``pi_chi(Phi_s)(1)`` intertwines ``M_{s·chi}`` and ``M_chi``.

    Checked for every ``X_k`` on the given test vectors (default: all basis
    words of length at most one).
    """
    n = chi.n
    phi = phi_on_identity(s, chi)
    target = chi.permuted(s)
    if vectors is None:
        vectors = [AlgebraElement.one(n)]
        vectors += [AlgebraElement.T(k, n) for k in range(1, n)]
        vectors += [AlgebraElement.C(k, n) for k in range(1, n + 1)]
    for m in vectors:
        image = mul(m, phi)
        for k in range(1, n + 1):
            if act_X(k, image, chi) != mul(act_X(k, m, target), phi):
                return False
    return True


def murphy_relations_hold(n: int) -> dict[str, bool]:
    """Substitute ``J_k`` for ``X_k`` in the affine relations (exact)."""
    from .algebra import jm_inverse, jucys_murphy

    eps = as_scalar(epsilon())
    one = AlgebraElement.one(n)
    J = {k: jucys_murphy(k, n) for k in range(1, n + 1)}
    Jinv = {k: jm_inverse(k, n) for k in range(1, n + 1)}
    T = {k: AlgebraElement.T(k, n) for k in range(1, n)}
    C = {k: AlgebraElement.C(k, n) for k in range(1, n + 1)}
    out: dict[str, bool] = {}
    out["commuting"] = all(J[a] * J[b] == J[b] * J[a] for a in J for b in J if a < b)
    out["inverses"] = all(J[k] * Jinv[k] == one for k in J)
    ok1 = ok2 = ok3 = True
    for k in range(1, n):
        cc = C[k] * C[k + 1]
        ok1 &= T[k] * J[k] == J[k + 1] * T[k] - (J[k + 1] - cc * J[k]).scale(eps)
        ok1 &= T[k] * J[k + 1] == J[k] * T[k] + ((one + cc) * J[k + 1]).scale(eps)
        for l in range(1, n + 1):
            if l not in (k, k + 1):
                ok3 &= T[k] * J[l] == J[l] * T[k]
    for k in range(1, n + 1):
        ok2 &= C[k] * J[k] == Jinv[k] * C[k]
        for l in range(1, n + 1):
            if l != k:
                ok3 &= C[l] * J[k] == J[k] * C[l]
    out["hecke-exchange"] = ok1
    out["clifford-inversion"] = ok2
    out["distant-commutation"] = ok3
    return out
