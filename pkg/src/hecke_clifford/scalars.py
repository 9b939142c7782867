"""Exact scalars: Gaussian rationals, rational functions in ``q`` and the
square-root tower over them.

The coefficient field used throughout the package is

    F = Q(i)(q)[sqrt([2]), sqrt([3]), ..., sqrt([n])]

where ``[m]`` is the quantum integer ``(q^(2m) - q^(-2m)) / (q^2 - q^(-2))``.
Elements of the tower are stored as a sparse map from subsets of
``{2, ..., n}`` to rational functions, each subset standing for the product of
the corresponding square roots.  Products of square roots collapse through the
symmetric-difference rule, which is canonical because no product of distinct
``sqrt([m])`` (m >= 2) lies in ``Q(i)(q)``: the largest ``m`` of a subset
contributes primitive ``4m``-th roots of unity to the radicand's roots that no
smaller quantum integer has.

Rational functions are kept as ``(re + i*im) / den`` with ``re``, ``im``,
``den`` in ``Q[q]`` (python-flint ``fmpq_poly``), ``den`` monic and of minimal
degree.  Minimal real denominators form a principal ideal of ``Q[q]``, so this
form is unique and all gcd work stays over ``Q`` where flint is fast.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Any, Iterable, Union

from flint import fmpq, fmpq_poly

__all__ = [
    "GaussianRational",
    "RationalFunction",
    "TowerScalar",
    "TowerError",
    "Scalar",
    "as_scalar",
    "quantum_int",
    "epsilon",
    "q_power",
    "imaginary_unit",
    "sqrt_gen",
    "special_value",
    "special_value_conjugate",
    "tower_mul",
    "tower_inv",
    "scalar_to_json",
    "scalar_from_json",
]


class TowerError(ArithmeticError):
    """Raised on division by zero or an inconsistent tower computation."""


# --------------------------------------------------------------------------
# Gaussian rationals


class GaussianRational:
    """An element ``real + i*imag`` of Q(i) with exact rational parts."""

    __slots__ = ("real", "imag")

    def __init__(self, real: Any = 0, imag: Any = 0) -> None:
        object.__setattr__(self, "real", Fraction(real))
        object.__setattr__(self, "imag", Fraction(imag))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other: Any) -> "GaussianRational | None":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return GaussianRational(other)
        return None

    def __add__(self, other: Any) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.real + o.real, self.imag + o.imag)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.real, -self.imag)

    def __sub__(self, other: Any) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.real - o.real, self.imag - o.imag)

    def __rsub__(self, other: Any) -> "GaussianRational":
        return -self + other

    def __mul__(self, other: Any) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.real * o.real - self.imag * o.imag,
            self.real * o.imag + self.imag * o.real,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        norm = self.real * self.real + self.imag * self.imag
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.real / norm, -self.imag / norm)

    def __truediv__(self, other: Any) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "GaussianRational":
        return self.inverse() * other

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.real, -self.imag)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.real == o.real and self.imag == o.imag

    def __hash__(self) -> int:
        if self.imag == 0:
            return hash(self.real)
        return hash((self.real, self.imag))

    def __bool__(self) -> bool:
        return bool(self.real) or bool(self.imag)

    def __complex__(self) -> complex:
        return complex(float(self.real), float(self.imag))

    def __repr__(self) -> str:
        return f"GaussianRational({self.real}, {self.imag})"

    def __str__(self) -> str:
        if self.imag == 0:
            return str(self.real)
        if self.real == 0:
            return f"{self.imag}*i"
        return f"({self.real} + {self.imag}*i)"


# --------------------------------------------------------------------------
# Rational functions in q over Q(i)

_ZERO = fmpq_poly([])
_ONE = fmpq_poly([1])


def _poly_key(p: fmpq_poly) -> tuple[tuple[int, int], ...]:
    return tuple((int(c.p), int(c.q)) for c in p.coeffs())


class RationalFunction:
    """An element of Q(i)(q) in canonical form ``(re + i*im) / den``."""

    __slots__ = ("_re", "_im", "_den", "_hash")

    def __init__(self, value: Any = 0) -> None:
        if isinstance(value, RationalFunction):
            self._set(value._re, value._im, value._den)
            return
        if isinstance(value, GaussianRational):
            re, im = value.real, value.imag
        elif isinstance(value, (int, Fraction, Rational)):
            re, im = Fraction(value), Fraction(0)
        else:
            raise TypeError(f"cannot build a RationalFunction from {type(value).__name__}")
        self._set(
            fmpq_poly([fmpq(re.numerator, re.denominator)]) if re else _ZERO,
            fmpq_poly([fmpq(im.numerator, im.denominator)]) if im else _ZERO,
            _ONE,
        )

    def _set(self, re: fmpq_poly, im: fmpq_poly, den: fmpq_poly) -> None:
        self._re = re
        self._im = im
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, re: fmpq_poly, im: fmpq_poly, den: fmpq_poly) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj._set(re, im, den)
        return obj

    @classmethod
    def _make(cls, re: fmpq_poly, im: fmpq_poly, den: fmpq_poly) -> "RationalFunction":
        """Build from arbitrary ``(re + i*im)/den`` and bring it to canonical form."""
        if den == 0:
            raise TowerError("zero denominator")
        if re == 0 and im == 0:
            return cls._raw(_ZERO, _ZERO, _ONE)
        if not den.is_constant():
            g = den.gcd(re) if re != 0 else den
            if im != 0 and not g.is_one():
                g = g.gcd(im)
            if not g.is_one():
                den = den // g
                re = re // g if re != 0 else re
                im = im // g if im != 0 else im
        lc = den.leading_coefficient()
        if lc != 1:
            inv = 1 / lc
            den = den * inv
            re = re * inv
            im = im * inv
        return cls._raw(re, im, den)

    @classmethod
    def from_polys(
        cls,
        num_re: Iterable[Any],
        den: Iterable[Any] = (1,),
        num_im: Iterable[Any] = (),
        shift: int = 0,
    ) -> "RationalFunction":
        """Build ``q^shift * (num_re + i*num_im) / den`` from coefficient lists."""
        re = fmpq_poly([fmpq(Fraction(c).numerator, Fraction(c).denominator) for c in num_re])
        im = fmpq_poly([fmpq(Fraction(c).numerator, Fraction(c).denominator) for c in num_im])
        d = fmpq_poly([fmpq(Fraction(c).numerator, Fraction(c).denominator) for c in den])
        if shift > 0:
            re, im = re.left_shift(shift), im.left_shift(shift)
        elif shift < 0:
            d = d.left_shift(-shift)
        return cls._make(re, im, d)

    # ---- predicates and accessors
    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_real(self) -> bool:
        return self._im == 0

    def is_constant(self) -> bool:
        return self._den.is_constant() and self._re.is_constant() and self._im.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("not a constant")
        re = self._re.coeffs()[0] if self._re != 0 else fmpq(0)
        im = self._im.coeffs()[0] if self._im != 0 else fmpq(0)
        return GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))

    @property
    def numerator_parts(self) -> tuple[fmpq_poly, fmpq_poly]:
        return self._re, self._im

    @property
    def denominator(self) -> fmpq_poly:
        return self._den

    # ---- arithmetic
    @staticmethod
    def _coerce(other: Any) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Rational, GaussianRational)):
            return RationalFunction(other)
        return None

    def __add__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self._den == o._den:
            return RationalFunction._make(self._re + o._re, self._im + o._im, self._den)
        g = self._den.gcd(o._den)
        a = o._den // g  # cofactor for self
        b = self._den // g  # cofactor for other
        return RationalFunction._make(
            self._re * a + o._re * b, self._im * a + o._im * b, self._den * a
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self._re, -self._im, self._den)

    def __sub__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RationalFunction._raw(_ZERO, _ZERO, _ONE)
        if self._im == 0 and o._im == 0:
            # cross-cancellation suffices over Q
            r1, d1, r2, d2 = self._re, self._den, o._re, o._den
            if not d2.is_constant():
                g = r1.gcd(d2)
                if not g.is_one():
                    r1, d2 = r1 // g, d2 // g
            if not d1.is_constant():
                g = r2.gcd(d1)
                if not g.is_one():
                    r2, d1 = r2 // g, d1 // g
            re = r1 * r2
            den = d1 * d2
            lc = den.leading_coefficient()
            if lc != 1:
                inv = 1 / lc
                den, re = den * inv, re * inv
            return RationalFunction._raw(re, _ZERO, den)
        re = self._re * o._re - self._im * o._im
        im = self._re * o._im + self._im * o._re
        return RationalFunction._make(re, im, self._den * o._den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise TowerError("inverse of zero rational function")
        if self._im == 0:
            return RationalFunction._make(self._den, _ZERO, self._re)
        norm = self._re * self._re + self._im * self._im
        return RationalFunction._make(self._den * self._re, -(self._den * self._im), norm)

    def __truediv__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "RationalFunction":
        return self.inverse() * other

    def __pow__(self, e: int) -> "RationalFunction":
        if e < 0:
            return self.inverse() ** (-e)
        result = RationalFunction(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "RationalFunction":
        """Complex conjugation of the coefficients (q is treated as real)."""
        return RationalFunction._raw(self._re, -self._im, self._den)

    # ---- comparison
    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            if isinstance(other, TowerScalar):
                return other == self
            return NotImplemented
        return self._den == o._den and self._re == o._re and self._im == o._im

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((_poly_key(self._re), _poly_key(self._im), _poly_key(self._den)))
        return self._hash

    # ---- numerics
    def evaluate(self, q: complex) -> complex:
        """Evaluate at a numeric ``q`` (float or complex)."""
        num = _horner(self._re, q) + 1j * _horner(self._im, q) if self._im != 0 else _horner(self._re, q)
        den = _horner(self._den, q)
        if den == 0:
            raise ZeroDivisionError("pole at the chosen q")
        return num / den

    # ---- display
    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def __str__(self) -> str:
        num = _fmt_complex_poly(self._re, self._im)
        if self._den.is_one():
            return num
        return f"({num})/({_fmt_poly(self._den)})"


def _horner(p: fmpq_poly, q: complex) -> complex:
    acc: complex = 0.0
    for c in reversed(p.coeffs()):
        acc = acc * q + float(c)
    return acc


def _fmt_poly(p: fmpq_poly) -> str:
    coeffs = p.coeffs()
    if not coeffs:
        return "0"
    pieces = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        mag = -c if c < 0 else c
        sign = "-" if c < 0 else "+"
        if e == 0:
            body = str(mag)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _fmt_complex_poly(re: fmpq_poly, im: fmpq_poly) -> str:
    if im == 0:
        return _fmt_poly(re)
    if re == 0:
        return f"i*({_fmt_poly(im)})"
    return f"{_fmt_poly(re)} + i*({_fmt_poly(im)})"


# --------------------------------------------------------------------------
# Named rational functions


def q_power(e: int) -> RationalFunction:
    """The monomial ``q^e`` (any integer ``e``)."""
    if e >= 0:
        return RationalFunction._raw(_ONE.left_shift(e), _ZERO, _ONE)
    return RationalFunction._raw(_ONE, _ZERO, _ONE.left_shift(-e))


@lru_cache(maxsize=None)
def quantum_int(m: int) -> RationalFunction:
    """The quantum integer ``[m] = (q^(2m) - q^(-2m)) / (q^2 - q^(-2))``.

    Returned in reduced form: ``[m] = q^(2-2m) * (1 + q^4 + ... + q^(4(m-1)))``
    for ``m > 0``; ``[0] = 0`` and ``[-m] = -[m]``.
    """
    if m == 0:
        return RationalFunction(0)
    if m < 0:
        return -quantum_int(-m)
    num = fmpq_poly([1 if e % 4 == 0 else 0 for e in range(4 * (m - 1) + 1)])
    return RationalFunction._raw(num, _ZERO, _ONE.left_shift(2 * (m - 1)))


@lru_cache(maxsize=None)
def epsilon() -> RationalFunction:
    """The Hecke parameter ``q - q^(-1)``."""
    return RationalFunction._raw(fmpq_poly([-1, 0, 1]), _ZERO, fmpq_poly([0, 1]))


def imaginary_unit() -> RationalFunction:
    return RationalFunction(GaussianRational(0, 1))


# --------------------------------------------------------------------------
# The square-root tower

Scalar = Union["TowerScalar", RationalFunction, GaussianRational, int, Fraction]


def _mask_members(mask: int) -> list[int]:
    out = []
    m = 0
    while mask:
        if mask & 1:
            out.append(m)
        mask >>= 1
        m += 1
    return out


@lru_cache(maxsize=None)
def _carry(mask: int) -> RationalFunction:
    """Product of the radicands ``[m]`` over the members of ``mask``."""
    out = RationalFunction(1)
    for m in _mask_members(mask):
        out = out * quantum_int(m)
    return out


class TowerScalar:
    """An element ``sum_S c_S * prod_{m in S} sqrt([m])`` of the tower field.

    ``terms`` maps a bitmask (bit ``m`` set iff ``sqrt([m])`` is a factor,
    ``m >= 2``) to a nonzero :class:`RationalFunction`.  ``level`` records the
    largest ``m`` whose root may appear; arithmetic promotes to the larger
    level of its operands.
    """

    __slots__ = ("level", "terms", "_hash")

    def __init__(self, value: Any = 0, level: int = 1) -> None:
        if isinstance(value, TowerScalar):
            self.level = max(level, value.level)
            self.terms = value.terms
        else:
            rf = value if isinstance(value, RationalFunction) else RationalFunction(value)
            self.level = level
            self.terms = {0: rf} if rf else {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, RationalFunction], level: int) -> "TowerScalar":
        obj = cls.__new__(cls)
        obj.level = level
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def from_terms(cls, terms: dict[Iterable[int] | int, Any], level: int) -> "TowerScalar":
        """Build from ``{subset: coefficient}``; subsets are iterables of m >= 2."""
        out: dict[int, RationalFunction] = {}
        for subset, c in terms.items():
            mask = subset if isinstance(subset, int) else sum(1 << m for m in subset)
            if mask & 0b11:
                raise ValueError("tower subsets contain integers m >= 2")
            if mask and mask.bit_length() - 1 > level:
                raise ValueError("subset exceeds the tower level")
            rf = c if isinstance(c, RationalFunction) else RationalFunction(c)
            acc = out.get(mask, RationalFunction(0)) + rf
            if acc:
                out[mask] = acc
            else:
                out.pop(mask, None)
        return cls._raw(out, level)

    # ---- predicates
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_rational(self) -> bool:
        """True iff the value lies in Q(i)(q) (no square roots needed)."""
        return all(mask == 0 for mask in self.terms)

    def rational_part(self) -> RationalFunction:
        return self.terms.get(0, RationalFunction(0))

    def to_rational(self) -> RationalFunction:
        if not self.is_rational():
            raise ValueError("element involves square roots")
        return self.rational_part()

    def with_level(self, level: int) -> "TowerScalar":
        return TowerScalar._raw(self.terms, max(level, self.level))

    # ---- arithmetic
    @staticmethod
    def _coerce(other: Any) -> "TowerScalar | None":
        if isinstance(other, TowerScalar):
            return other
        if isinstance(other, (RationalFunction, int, Fraction, Rational, GaussianRational)):
            return TowerScalar(other)
        return None

    def __add__(self, other: Any) -> "TowerScalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.terms:
            return self.with_level(o.level)
        if not self.terms:
            return o.with_level(self.level)
        terms = dict(self.terms)
        for mask, c in o.terms.items():
            prev = terms.get(mask)
            if prev is None:
                terms[mask] = c
            else:
                s = prev + c
                if s:
                    terms[mask] = s
                else:
                    del terms[mask]
        return TowerScalar._raw(terms, max(self.level, o.level))

    __radd__ = __add__

    def __neg__(self) -> "TowerScalar":
        return TowerScalar._raw({m: -c for m, c in self.terms.items()}, self.level)

    def __sub__(self, other: Any) -> "TowerScalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "TowerScalar":
        return (-self) + other

    def __mul__(self, other: Any) -> "TowerScalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        level = max(self.level, o.level)
        if len(o.terms) == 1 and 0 in o.terms:
            c = o.terms[0]
            return TowerScalar._raw({m: a * c for m, a in self.terms.items()}, level)
        if len(self.terms) == 1 and 0 in self.terms:
            c = self.terms[0]
            return TowerScalar._raw({m: c * a for m, a in o.terms.items()}, level)
        terms: dict[int, RationalFunction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                common = m1 & m2
                c = c1 * c2
                if common:
                    c = c * _carry(common)
                mask = m1 ^ m2
                prev = terms.get(mask)
                terms[mask] = c if prev is None else prev + c
        return TowerScalar._raw({m: c for m, c in terms.items() if c}, level)

    __rmul__ = __mul__

    def inverse(self) -> "TowerScalar":
        return tower_inv(self)

    def __truediv__(self, other: Any) -> "TowerScalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * tower_inv(o)

    def __rtruediv__(self, other: Any) -> "TowerScalar":
        return tower_inv(self) * other

    def __pow__(self, e: int) -> "TowerScalar":
        if e < 0:
            return tower_inv(self) ** (-e)
        result = TowerScalar(1, self.level)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate_root(self, m: int) -> "TowerScalar":
        """Apply the automorphism ``sqrt([m]) -> -sqrt([m])``."""
        bit = 1 << m
        return TowerScalar._raw(
            {mask: (-c if mask & bit else c) for mask, c in self.terms.items()}, self.level
        )

    # ---- comparison
    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self) -> int:
        if self._hash is None:
            if not self.terms:
                self._hash = hash(0)
            elif self.is_rational():
                self._hash = hash(self.terms[0])
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # ---- numerics
    def evaluate(self, q: complex) -> complex:
        """Numeric value at ``q``; square roots use the principal branch."""
        total: complex = 0.0
        for mask, c in self.terms.items():
            v = c.evaluate(q)
            for m in _mask_members(mask):
                v *= cmath.sqrt(quantum_int(m).evaluate(q))
            total += v
        return total

    # ---- display
    def __repr__(self) -> str:
        return f"TowerScalar({self}, level={self.level})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mask in sorted(self.terms):
            c = self.terms[mask]
            roots = "*".join(f"sqrt([{m}])" for m in _mask_members(mask))
            parts.append(f"({c})" + (f"*{roots}" if roots else ""))
        return " + ".join(parts)


def as_scalar(x: Any) -> TowerScalar:
    """Coerce ints, fractions, Gaussian rationals and rational functions."""
    if isinstance(x, TowerScalar):
        return x
    out = TowerScalar._coerce(x)
    if out is None:
        raise TypeError(f"not an exact scalar: {type(x).__name__}")
    return out


def tower_mul(a: Scalar, b: Scalar) -> TowerScalar:
    return as_scalar(a) * as_scalar(b)


def tower_inv(a: Scalar) -> TowerScalar:
    """Inverse in the tower by rationalizing the highest square root first."""
    a = as_scalar(a)
    if not a.terms:
        raise TowerError("inverse of zero")
    top = max((mask.bit_length() - 1 for mask in a.terms), default=-1)
    if top < 2:
        return TowerScalar._raw({0: a.terms[0].inverse()}, a.level)
    bit = 1 << top
    u = TowerScalar._raw({m: c for m, c in a.terms.items() if not m & bit}, a.level)
    v = TowerScalar._raw({m ^ bit: c for m, c in a.terms.items() if m & bit}, a.level)
    norm = u * u - v * v * quantum_int(top)
    if not norm.terms:
        raise TowerError(f"conjugate norm vanished while removing sqrt([{top}])")
    conj = u - v * sqrt_gen(top, a.level)
    return conj * tower_inv(norm)


def sqrt_gen(m: int, level: int | None = None) -> TowerScalar:
    """The generator ``sqrt([m])``; ``sqrt([1]) = 1`` and ``sqrt([0]) = 0``."""
    if m < 0:
        raise ValueError("sqrt_gen needs m >= 0")
    lvl = max(level or 1, m)
    if m == 0:
        return TowerScalar(0, lvl)
    if m == 1:
        return TowerScalar(1, lvl)
    return TowerScalar._raw({1 << m: RationalFunction(1)}, lvl)


@lru_cache(maxsize=None)
def special_value(a: int) -> TowerScalar:
    """``[a+1] - [a] - eps * sqrt([a+1][a])`` for a content ``a >= 0``.

    For real ``q > 1`` this is the root of ``x + 1/x = 2(q^(2a+1) + q^(-2a-1))/(q + 1/q)``
    lying in ``(0, 1]``.
    """
    if a < 0:
        raise ValueError("content must be nonnegative")
    base = TowerScalar(quantum_int(a + 1) - quantum_int(a), a + 1)
    return base - epsilon() * sqrt_gen(a + 1, a + 1) * sqrt_gen(a, a + 1)


@lru_cache(maxsize=None)
def special_value_conjugate(a: int) -> TowerScalar:
    """``special_value(a)`` with the sign of the root term flipped (its inverse)."""
    if a < 0:
        raise ValueError("content must be nonnegative")
    base = TowerScalar(quantum_int(a + 1) - quantum_int(a), a + 1)
    return base + epsilon() * sqrt_gen(a + 1, a + 1) * sqrt_gen(a, a + 1)


# --------------------------------------------------------------------------
# Canonical JSON



def _poly_pair_json(re: fmpq_poly, im: fmpq_poly) -> list:
    re_c, im_c = re.coeffs(), im.coeffs()
    out = []
    for e in range(max(len(re_c), len(im_c))):
        r = re_c[e] if e < len(re_c) else fmpq(0)
        i = im_c[e] if e < len(im_c) else fmpq(0)
        if r == 0 and i == 0:
            continue
        out.append([e, [str(int(r.p)), str(int(r.q)), str(int(i.p)), str(int(i.q))]])
    return out


def _poly_pair_from_json(data: list) -> tuple[fmpq_poly, fmpq_poly]:
    size = 1 + max((int(e) for e, _ in data), default=-1)
    re = [fmpq(0)] * size
    im = [fmpq(0)] * size
    for e, (rn, rd, in_, id_) in data:
        re[int(e)] = fmpq(int(rn), int(rd))
        im[int(e)] = fmpq(int(in_), int(id_))
    return fmpq_poly(re), fmpq_poly(im)


def scalar_to_json(x: Scalar) -> dict:
    """Canonical JSON object for a tower scalar (terms sorted by subset)."""
    x = as_scalar(x)
    terms = []
    for mask in sorted(x.terms, key=lambda m: _mask_members(m)):
        c = x.terms[mask]
        terms.append(
            {
                "subset": _mask_members(mask),
                "num": _poly_pair_json(c._re, c._im),
                "den": _poly_pair_json(c._den, _ZERO),
            }
        )
    return {"level": x.level, "terms": terms}


def scalar_from_json(data: dict) -> TowerScalar:
    terms: dict[int, RationalFunction] = {}
    for t in data["terms"]:
        re, im = _poly_pair_from_json(t["num"])
        den, den_im = _poly_pair_from_json(t["den"])
        if den_im != 0:
            raise ValueError("denominators are real in canonical form")
        mask = sum(1 << int(m) for m in t["subset"])
        terms[mask] = RationalFunction._make(re, im, den)
    return TowerScalar._raw(terms, int(data["level"]))
