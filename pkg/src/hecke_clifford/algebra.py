"""The Hecke-Clifford superalgebra in normal form.

Every element is a sparse combination of basis words ``T_w C_B`` where ``w``
is a permutation and ``C_B = C_{b1} ... C_{bp}`` with ``b1 < ... < bp``.  The
Clifford part always sits to the right.  Relations used for rewriting:

    T_k^2 = eps*T_k + 1,            C_k^2 = -1,   C_k C_l = -C_l C_k (k != l)
    C_{k+1} T_k = T_k C_k,          C_k T_k = T_k C_{k+1} + eps*C_k - eps*C_{k+1}

with ``eps = q - 1/q``.  Left and right multiplication by a single generator
are the primitives; products of general elements iterate them.  Moving a
Clifford letter across ``T_w`` is memoized per ``(k, w)``.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Any, Callable, Iterable, Iterator

from .scalars import (
    RationalFunction,
    Scalar,
    TowerScalar,
    as_scalar,
    epsilon,
    scalar_from_json,
    scalar_to_json,
)
from .tableaux import (
    Permutation,
    identity_perm,
    inverse_perm,
    longest_perm,
    perm_length,
    reduced_word,
)

Key = tuple[Permutation, int]  # (permutation, Clifford bitmask with bit k for C_k)

_ONE_RF = RationalFunction(1)


# --------------------------------------------------------------------------
# Clifford words


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for k in indices:
        m |= 1 << k
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def _popcount(m: int) -> int:
    return bin(m).count("1")


def clifford_left(l: int, mask: int) -> tuple[int, int]:
    """``C_l * C_B = sign * C_B'``; returns ``(sign, B')``."""
    bit = 1 << l
    sign = -1 if _popcount(mask & (bit - 1)) & 1 else 1
    if mask & bit:
        return -sign, mask ^ bit
    return sign, mask | bit


def clifford_right(mask: int, l: int) -> tuple[int, int]:
    """``C_B * C_l = sign * C_B'``."""
    bit = 1 << l
    sign = -1 if _popcount(mask >> (l + 1)) & 1 else 1
    if mask & bit:
        return -sign, mask ^ bit
    return sign, mask | bit


def clifford_product(a: int, b: int) -> tuple[int, int]:
    """``C_A * C_B = sign * C_{A xor B}``."""
    sign = 1
    for l in reversed(indices_of(a)):
        s, b = clifford_left(l, b)
        sign *= s
    return sign, b


# --------------------------------------------------------------------------
# Permutation moves


def _swap_values(w: Permutation, k: int) -> Permutation:
    """``s_k w``: exchange the values ``k`` and ``k+1`` in one-line form."""
    return tuple(k + 1 if v == k else k if v == k + 1 else v for v in w)


def _swap_positions(w: Permutation, k: int) -> Permutation:
    """``w s_k``: exchange positions ``k`` and ``k+1``."""
    p = list(w)
    p[k - 1], p[k] = p[k], p[k - 1]
    return tuple(p)


def _left_grows(w: Permutation, k: int) -> bool:
    """``l(s_k w) > l(w)``, i.e. ``k`` stands left of ``k+1`` in ``w``."""
    return w.index(k) < w.index(k + 1)


def _first_left_descent(w: Permutation) -> int:
    for j in range(1, len(w)):
        if w.index(j) > w.index(j + 1):
            return j
    return 0


# --------------------------------------------------------------------------
# Structure constants (coefficients are Laurent polynomials in q)


def _acc(d: dict, key: Any, c: Any) -> None:
    prev = d.get(key)
    if prev is None:
        d[key] = c
    else:
        s = prev + c
        if s:
            d[key] = s
        else:
            del d[key]


@lru_cache(maxsize=None)
def _clifford_past_hecke(k: int, w: Permutation) -> tuple[tuple[Permutation, int, RationalFunction], ...]:
    """``C_k T_w = sum coef * T_v C_l`` as a tuple of ``(v, l, coef)``."""
    if perm_length(w) == 0:
        return ((w, k, _ONE_RF),)
    j = _first_left_descent(w)
    rest = _swap_values(w, j)  # w = s_j * rest, shorter
    eps = epsilon()
    out: dict[tuple[Permutation, int], RationalFunction] = {}

    def push_t(terms: Iterable[tuple[Permutation, int, RationalFunction]], scale: RationalFunction) -> None:
        # left multiply T_j onto T_v C_l
        for v, l, c in terms:
            c = c * scale
            _acc(out, (_swap_values(v, j), l), c)
            if not _left_grows(v, j):
                _acc(out, (v, l), c * eps)

    def push(terms: Iterable[tuple[Permutation, int, RationalFunction]], scale: RationalFunction) -> None:
        for v, l, c in terms:
            _acc(out, (v, l), c * scale)

    if k == j + 1:
        push_t(_clifford_past_hecke(j, rest), _ONE_RF)
    elif k == j:
        push_t(_clifford_past_hecke(j + 1, rest), _ONE_RF)
        push(_clifford_past_hecke(j, rest), eps)
        push(_clifford_past_hecke(j + 1, rest), -eps)
    else:
        push_t(_clifford_past_hecke(k, rest), _ONE_RF)
    return tuple((v, l, c) for (v, l), c in sorted(out.items()))


@lru_cache(maxsize=None)
def _clifford_word_past_t(mask: int, k: int) -> tuple[tuple[bool, int, RationalFunction], ...]:
    """``C_B T_k = sum coef * T_k C_D + sum coef * C_E``.

    Returned as ``(has_t, mask, coef)`` triples.
    """
    if mask == 0:
        return ((True, 0, _ONE_RF),)
    b = mask.bit_length() - 1
    rest = mask ^ (1 << b)  # C_B = C_rest * C_b
    eps = epsilon()
    out: dict[tuple[bool, int], RationalFunction] = {}
    inner = _clifford_word_past_t(rest, k)
    target = k if b == k + 1 else k + 1 if b == k else b
    for has_t, d, c in inner:
        s, d2 = clifford_right(d, target)
        _acc(out, (has_t, d2), c * s)
    if b == k:
        for l, sgn in ((k, 1), (k + 1, -1)):
            s, e = clifford_right(rest, l)
            _acc(out, (False, e), eps * (s * sgn))
    return tuple((t, m, c) for (t, m), c in sorted(out.items()))


# --------------------------------------------------------------------------
# Elements


class AlgebraElement:
    """A sparse element of the Hecke-Clifford algebra of rank ``n``.

    ``terms`` maps ``(permutation, clifford_mask)`` to a nonzero
    :class:`TowerScalar`; bit ``k`` of the mask stands for ``C_k``.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Key, TowerScalar] | None = None) -> None:
        self.n = n
        self.terms = terms if terms is not None else {}

    # ---- constructors
    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n, {})

    @classmethod
    def scalar(cls, n: int, c: Scalar) -> "AlgebraElement":
        c = as_scalar(c)
        return cls(n, {(identity_perm(n), 0): c} if c else {})

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls.scalar(n, 1)

    @classmethod
    def basis(cls, perm: Permutation, clifford: Iterable[int] = (), coeff: Scalar = 1) -> "AlgebraElement":
        n = len(perm)
        mask = mask_of(clifford)
        if mask >> (n + 1) or mask & 1:
            raise ValueError("Clifford indices must lie in 1..n")
        return cls(n, {(tuple(perm), mask): as_scalar(coeff)})

    @classmethod
    def T(cls, k: int, n: int) -> "AlgebraElement":
        return left_T(k, cls.one(n))

    @classmethod
    def C(cls, k: int, n: int) -> "AlgebraElement":
        return left_C(k, cls.one(n))

    # ---- inspection
    def __iter__(self) -> Iterator[tuple[Key, TowerScalar]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, perm: Permutation, clifford: Iterable[int] = ()) -> TowerScalar:
        return self.terms.get((tuple(perm), mask_of(clifford)), TowerScalar(0))

    def support(self) -> list[tuple[Permutation, tuple[int, ...]]]:
        return [(w, indices_of(m)) for (w, m) in sorted(self.terms)]

    def max_length(self) -> int:
        return max((perm_length(w) for w, _ in self.terms), default=-1)

    def even_part(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {k: c for k, c in self.terms.items() if not _popcount(k[1]) & 1})

    def odd_part(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {k: c for k, c in self.terms.items() if _popcount(k[1]) & 1})

    def parity(self) -> int | None:
        """0 if even, 1 if odd, ``None`` if inhomogeneous (zero counts as even)."""
        degs = {_popcount(m) & 1 for _, m in self.terms}
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    def is_scalar(self) -> bool:
        return all(k == (identity_perm(self.n), 0) for k in self.terms)

    def scalar_value(self) -> TowerScalar:
        if not self.is_scalar():
            raise ValueError("element is not a scalar")
        return self.terms.get((identity_perm(self.n), 0), TowerScalar(0))

    def map_coefficients(self, f: Callable[[TowerScalar], Any]) -> "AlgebraElement":
        out = {}
        for k, c in self.terms.items():
            v = f(c)
            if v:
                out[k] = v
        return AlgebraElement(self.n, out)

    # ---- arithmetic
    def _check(self, other: "AlgebraElement") -> None:
        if other.n != self.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other: Any) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement.scalar(self.n, other)
        self._check(other)
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for k, c in small.items():
            _acc(out, k, c)
        return AlgebraElement(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: Any) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement.scalar(self.n, other)
        return self + (-other)

    def __rsub__(self, other: Any) -> "AlgebraElement":
        return (-self) + other

    def scale(self, c: Scalar) -> "AlgebraElement":
        c = as_scalar(c)
        if not c:
            return AlgebraElement(self.n, {})
        return AlgebraElement(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: Any) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "AlgebraElement":
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AlgebraElement):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, TowerScalar, RationalFunction)):
            return self == AlgebraElement.scalar(self.n, other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # ---- display and serialization
    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, {len(self.terms)} terms)"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (w, m) in sorted(self.terms):
            word = "".join(f"T{j}" for j in reduced_word(w)) + "".join(f"C{l}" for l in indices_of(m))
            parts.append(f"({self.terms[(w, m)]})" + ("*" + word if word else ""))
        return " + ".join(parts)

    def to_json(self) -> dict:
        terms = []
        for (w, m) in sorted(self.terms, key=lambda k: (k[0], indices_of(k[1]))):
            terms.append({"perm": list(w), "clifford": list(indices_of(m)), "coeff": scalar_to_json(self.terms[(w, m)])})
        return {"n": self.n, "terms": terms}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, data: dict | str) -> "AlgebraElement":
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["n"])
        terms = {}
        for t in data["terms"]:
            terms[(tuple(t["perm"]), mask_of(t["clifford"]))] = scalar_from_json(t["coeff"])
        return cls(n, terms)


# --------------------------------------------------------------------------
# Generator multiplication


def _check_index(k: int, n: int, top: int) -> None:
    if not 1 <= k <= top:
        raise ValueError(f"generator index {k} out of range for n={n}")


def left_T(k: int, x: AlgebraElement) -> AlgebraElement:
    """``T_k * x``."""
    _check_index(k, x.n, x.n - 1)
    eps = as_scalar(epsilon())
    out: dict[Key, TowerScalar] = {}
    for (w, m), c in x.terms.items():
        _acc(out, (_swap_values(w, k), m), c)
        if not _left_grows(w, k):
            _acc(out, (w, m), c * eps)
    return AlgebraElement(x.n, out)


def left_C(k: int, x: AlgebraElement) -> AlgebraElement:
    """``C_k * x``."""
    _check_index(k, x.n, x.n)
    out: dict[Key, TowerScalar] = {}
    for (w, m), c in x.terms.items():
        for v, l, coef in _clifford_past_hecke(k, w):
            sign, m2 = clifford_left(l, m)
            _acc(out, (v, m2), c * coef if sign > 0 else -(c * coef))
    return AlgebraElement(x.n, out)


def right_T(x: AlgebraElement, k: int) -> AlgebraElement:
    """``x * T_k``."""
    _check_index(k, x.n, x.n - 1)
    eps = as_scalar(epsilon())
    out: dict[Key, TowerScalar] = {}
    for (w, m), c in x.terms.items():
        for has_t, d, coef in _clifford_word_past_t(m, k):
            cc = c * coef
            if has_t:
                _acc(out, (_swap_positions(w, k), d), cc)
                if w[k - 1] > w[k]:
                    _acc(out, (w, d), cc * eps)
            else:
                _acc(out, (w, d), cc)
    return AlgebraElement(x.n, out)


def right_C(x: AlgebraElement, k: int) -> AlgebraElement:
    """``x * C_k``."""
    _check_index(k, x.n, x.n)
    out: dict[Key, TowerScalar] = {}
    for (w, m), c in x.terms.items():
        sign, m2 = clifford_right(m, k)
        _acc(out, (w, m2), c if sign > 0 else -c)
    return AlgebraElement(x.n, out)


def left_word(word: Iterable[tuple[str, int]], x: AlgebraElement) -> AlgebraElement:
    """Left multiply by a word of generators such as ``[("T", 1), ("C", 2)]``."""
    for kind, k in reversed(list(word)):
        x = left_T(k, x) if kind == "T" else left_C(k, x)
    return x


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """The product ``a * b`` in normal form."""
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")
    n = a.n
    by_mask: dict[int, list[tuple[Permutation, TowerScalar]]] = {}
    for (w, m), c in a.terms.items():
        by_mask.setdefault(m, []).append((w, c))
    out: dict[Key, TowerScalar] = {}
    for m, group in by_mask.items():
        y = b
        for l in reversed(indices_of(m)):
            y = left_C(l, y)
        cache: dict[Permutation, AlgebraElement] = {identity_perm(n): y}

        def t_times(w: Permutation) -> AlgebraElement:
            got = cache.get(w)
            if got is None:
                j = _first_left_descent(w)
                got = left_T(j, t_times(_swap_values(w, j)))
                cache[w] = got
            return got

        for w, c in group:
            for key, v in t_times(w).terms.items():
                _acc(out, key, v * c)
    return AlgebraElement(n, out)


def product(factors: Iterable[AlgebraElement], n: int | None = None) -> AlgebraElement:
    """Ordered product of a sequence of elements."""
    factors = list(factors)
    if not factors:
        if n is None:
            raise ValueError("empty product needs n")
        return AlgebraElement.one(n)
    out = factors[-1]
    for f in reversed(factors[:-1]):
        out = mul(f, out)
    return out


# --------------------------------------------------------------------------
# Hecke elements


def t_of_perm(s: Permutation) -> AlgebraElement:
    """``T_s`` (a single basis word)."""
    return AlgebraElement.basis(tuple(s))


def t_inv(k: int, n: int) -> AlgebraElement:
    """``T_k^{-1} = T_k - eps``."""
    return AlgebraElement.T(k, n) - AlgebraElement.scalar(n, epsilon())


def t_of_perm_inv(s: Permutation) -> AlgebraElement:
    """``T_s^{-1} = T_{jr}^{-1} ... T_{j1}^{-1}`` for a reduced word ``j1..jr``."""
    n = len(s)
    eps = epsilon()
    x = AlgebraElement.one(n)
    for j in reduced_word(tuple(s)):
        x = left_T(j, x) - x.scale(eps)
    return x


def w0(n: int) -> Permutation:
    return longest_perm(n)


# --------------------------------------------------------------------------
# Jucys-Murphy elements


def jm_apply(k: int, x: AlgebraElement) -> AlgebraElement:
    """``J_k * x`` via ``J_k = (T_{k-1} - eps C_{k-1} C_k) J_{k-1} T_{k-1}``."""
    _check_index(k, x.n, x.n)
    if k == 1:
        return x
    y = jm_apply(k - 1, left_T(k - 1, x))
    return left_T(k - 1, y) - left_C(k - 1, left_C(k, y)).scale(epsilon())


def jm_inverse_apply(k: int, x: AlgebraElement) -> AlgebraElement:
    """``J_k^{-1} * x = -C_k J_k C_k * x``."""
    return -left_C(k, jm_apply(k, left_C(k, x)))


def jucys_murphy(k: int, n: int) -> AlgebraElement:
    return jm_apply(k, AlgebraElement.one(n))


def jm_inverse(k: int, n: int) -> AlgebraElement:
    return jm_inverse_apply(k, AlgebraElement.one(n))


def jm_sum_apply(k: int, x: AlgebraElement) -> AlgebraElement:
    """``(J_k + J_k^{-1}) * x``."""
    return jm_apply(k, x) + jm_inverse_apply(k, x)


# --------------------------------------------------------------------------
# Involution and grading


@lru_cache(maxsize=None)
def _alpha_basis(w: Permutation, mask: int) -> AlgebraElement:
    n = len(w)
    wl = longest_perm(n)
    # alpha(T_w) = T_{w0 w^-1 w0}
    image = tuple(n + 1 - inverse_perm(w)[wl[k] - 1] for k in range(n))
    flipped = [n + 1 - b for b in indices_of(mask)]  # already increasing after reversal
    x = AlgebraElement.basis(image)
    for l in reversed(sorted(flipped)):
        x = left_C(l, x)
    return x


def alpha(x: AlgebraElement) -> AlgebraElement:
    """The antiautomorphism ``T_k -> T_{n-k}``, ``C_k -> C_{n+1-k}``."""
    out: dict[Key, TowerScalar] = {}
    for (w, m), c in x.terms.items():
        for key, v in _alpha_basis(w, m).terms.items():
            _acc(out, key, v * c)
    return AlgebraElement(x.n, out)


def generators(n: int) -> list[tuple[str, int, AlgebraElement]]:
    """All generators as ``(kind, index, element)``."""
    gens = [("T", k, AlgebraElement.T(k, n)) for k in range(1, n)]
    gens += [("C", k, AlgebraElement.C(k, n)) for k in range(1, n + 1)]
    return gens


def supercommutes_with_generators(z: AlgebraElement) -> bool:
    """True iff ``z`` supercommutes with every ``T_k`` and ``C_l``."""
    n = z.n
    for part, deg in ((z.even_part(), 0), (z.odd_part(), 1)):
        if not part:
            continue
        for k in range(1, n):
            if left_T(k, part) != right_T(part, k):
                return False
        for l in range(1, n + 1):
            lhs = left_C(l, part)
            rhs = right_C(part, l)
            if lhs != (rhs if deg == 0 else -rhs):
                return False
    return True


def elementary_symmetric_jm(n: int) -> list[AlgebraElement]:
    """``e_0, ..., e_n`` evaluated at ``J_k + J_k^{-1}``, k = 1..n."""
    es = [AlgebraElement.one(n)] + [AlgebraElement.zero(n) for _ in range(n)]
    for k in range(1, n + 1):
        for m in range(k, 0, -1):
            es[m] = es[m] + jm_sum_apply(k, es[m - 1])
    return es


def center_check(n: int, degree: int | Iterable[int]) -> bool:
    """Is ``sum_{m in degree} e_m(J + J^{-1})`` supercentral?"""
    degrees = [degree] if isinstance(degree, int) else list(degree)
    es = elementary_symmetric_jm(n)
    z = AlgebraElement.zero(n)
    for m in degrees:
        z = z + es[m]
    return supercommutes_with_generators(z)


def basis_elements(n: int) -> list[AlgebraElement]:
    """Every basis word ``T_w C_B`` of rank ``n``."""
    from itertools import permutations

    masks = range(0, 1 << (n + 1), 2)
    return [AlgebraElement(n, {(w, m): TowerScalar(1)}) for w in permutations(range(1, n + 1)) for m in masks]


def defining_relations_hold(n: int, vectors: Iterable[AlgebraElement] | None = None) -> dict[str, bool]:
    """The defining relations as left operators on ``vectors`` (default: the whole basis).

    Also checks that left and right generator multiplications commute, which
    is associativity of the normal-form product on these vectors.
    """
    vecs = list(vectors) if vectors is not None else basis_elements(n)
    eps = as_scalar(epsilon())
    W = left_word

    def same(lhs: list[tuple[str, int]], rhs: list[tuple[Scalar, list[tuple[str, int]]]]) -> bool:
        for v in vecs:
            right = AlgebraElement.zero(n)
            for c, word in rhs:
                right = right + W(word, v).scale(c)
            if W(lhs, v) != right:
                return False
        return True

    Tk = lambda k: ("T", k)  # noqa: E731
    Ck = lambda k: ("C", k)  # noqa: E731
    out: dict[str, bool] = {}
    out["hecke-quadratic"] = all(same([Tk(k), Tk(k)], [(eps, [Tk(k)]), (1, [])]) for k in range(1, n))
    out["braid"] = all(
        same([Tk(k), Tk(k + 1), Tk(k)], [(1, [Tk(k + 1), Tk(k), Tk(k + 1)])]) for k in range(1, n - 1)
    )
    out["distant-commutation"] = all(
        same([Tk(a), Tk(b)], [(1, [Tk(b), Tk(a)])]) for a in range(1, n) for b in range(a + 2, n)
    )
    out["clifford-square"] = all(same([Ck(k), Ck(k)], [(-1, [])]) for k in range(1, n + 1))
    out["clifford-anticommutation"] = all(
        same([Ck(a), Ck(b)], [(-1, [Ck(b), Ck(a)])]) for a in range(1, n + 1) for b in range(a + 1, n + 1)
    )
    cross = True
    for k in range(1, n):
        cross &= same([Tk(k), Ck(k)], [(1, [Ck(k + 1), Tk(k)])])
        cross &= same([Tk(k), Ck(k + 1)], [(1, [Ck(k), Tk(k)]), (-eps, [Ck(k)]), (eps, [Ck(k + 1)])])
        for l in range(1, n + 1):
            if l not in (k, k + 1):
                cross &= same([Tk(k), Ck(l)], [(1, [Ck(l), Tk(k)])])
    out["cross-relations"] = cross
    assoc = True
    sides = [(lambda x, k=k: left_T(k, x), lambda x, k=k: right_T(x, k)) for k in range(1, n)]
    sides += [(lambda x, k=k: left_C(k, x), lambda x, k=k: right_C(x, k)) for k in range(1, n + 1)]
    for v in vecs:
        for lf, _ in sides:
            for _, rf in sides:
                assoc &= lf(rf(v)) == rf(lf(v))
    out["associativity"] = assoc
    return out
