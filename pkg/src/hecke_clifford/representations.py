"""The modules V_lambda and U_lambda with explicit generator matrices.

``V_lambda`` has basis ``C psi_Lambda`` (``C`` a Clifford word, ``Lambda``
standard).  ``T_k`` acts on ``psi_Lambda`` by one of three formulas
depending on how ``s_k`` moves ``Lambda``; on ``C psi_Lambda`` it first
passes through ``C`` using the cross relations.  ``C_l`` acts by Clifford
multiplication on the word.

The operators ``rho_i : C psi_Lambda -> C C_l psi_Lambda`` (``l`` the
diagonal entry of row ``i``) commute with the action; substituting them
into the standard Clifford idempotents splits ``V`` into equal pieces ``U``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .affine import idempotency_defect, psi_coefficients
from .algebra import AlgebraElement, clifford_left, clifford_product, clifford_right, indices_of, left_C, left_T, mask_of
from .fusion import SpecialPoint, psi_tableau, sign_vectors
from .linalg import SparseMatrix, independent_columns, nullspace, solve_in_span
from .scalars import RationalFunction, TowerScalar, as_scalar, epsilon, imaginary_unit, q_power, special_value
from .tableaux import (
    ShiftedTableau,
    StrictPartition,
    bruhat_step,
    enumerate_standard,
    enumerate_strict_partitions,
    standard_count,
)

BasisKey = tuple[int, ShiftedTableau]  # (Clifford mask, tableau)


def _masks(n: int) -> list[int]:
    return sorted(range(0, 1 << (n + 1), 2), key=lambda m: (bin(m).count("1"), m))


def _hecke_past_clifford(k: int, mask: int) -> list[tuple[int, bool, RationalFunction]]:
    """``T_k C_B = sum c * C_{B'} * (T_k or 1)`` as ``[(B', has_T, c)]``."""
    eps = epsilon()
    terms: dict[tuple[int, bool], RationalFunction] = {(0, True): RationalFunction(1)}

    def add(store: dict, key: tuple[int, bool], c: RationalFunction) -> None:
        s = store.get(key, RationalFunction(0)) + c
        if s:
            store[key] = s
        else:
            store.pop(key, None)

    for l in indices_of(mask):
        nxt: dict[tuple[int, bool], RationalFunction] = {}
        for (prefix, has_t), c in terms.items():
            if not has_t:
                sg, m2 = clifford_right(prefix, l)
                add(nxt, (m2, False), c * sg)
                continue
            if l == k:
                moves = [(k + 1, True, RationalFunction(1))]
            elif l == k + 1:
                moves = [(k, True, RationalFunction(1)), (k, False, -eps), (k + 1, False, eps)]
            else:
                moves = [(l, True, RationalFunction(1))]
            for letter, keep_t, c2 in moves:
                sg, m2 = clifford_right(prefix, letter)
                add(nxt, (m2, keep_t), c * c2 * sg)
        terms = nxt
    return [(m, t, c) for (m, t), c in terms.items()]


@dataclass
class SeminormalModule:
    shape: StrictPartition
    tableaux: tuple[ShiftedTableau, ...]
    basis: list[BasisKey]
    T: dict[int, SparseMatrix]
    C: dict[int, SparseMatrix]
    _J: dict[int, SparseMatrix] = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def index(self) -> dict[BasisKey, int]:
        return {b: i for i, b in enumerate(self.basis)}

    def J(self, k: int) -> SparseMatrix:
        """``J_1 = 1``, ``J_{k+1} = (T_k - eps C_k C_{k+1}) J_k T_k`` as matrices."""
        got = self._J.get(k)
        if got is None:
            if k == 1:
                got = SparseMatrix.identity(self.dim)
            else:
                eps = as_scalar(epsilon())
                a = self.T[k - 1] - (self.C[k - 1] @ self.C[k]).scale(eps)
                got = a @ self.J(k - 1) @ self.T[k - 1]
            self._J[k] = got
        return got

    def generator_list(self) -> list[tuple[str, int, SparseMatrix]]:
        return [("T", k, m) for k, m in sorted(self.T.items())] + [("C", k, m) for k, m in sorted(self.C.items())]

    def parity(self, i: int) -> int:
        return bin(self.basis[i][0]).count("1") & 1

    def expected_eigenvalue(self, i: int, k: int) -> TowerScalar:
        """``q_k^{nu_C(k)}`` for basis vector ``i``: ``nu = +1`` iff ``C_k`` occurs."""
        mask, tab = self.basis[i]
        qk = SpecialPoint(tab).value(k)
        return qk if mask >> k & 1 else 1 / qk


def _t_on_psi(tab: ShiftedTableau, k: int) -> dict[BasisKey, TowerScalar]:
    """``T_k psi_Lambda`` in the basis."""
    pt = SpecialPoint(tab)
    qk, qk1 = pt.value(k), pt.value(k + 1)
    a, b = psi_coefficients(qk, qk1)
    out: dict[BasisKey, TowerScalar] = {(0, tab): -a, (mask_of((k, k + 1)), tab): -b}
    case = bruhat_step(tab, k)
    if case == "up":
        out[(0, tab.swap(k))] = TowerScalar(1)
    elif case == "down":
        out[(0, tab.swap(k))] = idempotency_defect(qk1, qk)
    return out


@lru_cache(maxsize=None)
def build_module(shape: StrictPartition) -> SeminormalModule:
    n = shape.n
    tabs = enumerate_standard(shape)
    basis = [(m, t) for t in tabs for m in _masks(n)]
    idx = {b: i for i, b in enumerate(basis)}
    t_psi = {(t, k): _t_on_psi(t, k) for t in tabs for k in range(1, n)}
    T: dict[int, SparseMatrix] = {}
    for k in range(1, n):
        cols = []
        for mask, tab in basis:
            col: dict[int, TowerScalar] = {}
            for m2, has_t, c in _hecke_past_clifford(k, mask):
                images = t_psi[(tab, k)] if has_t else {(0, tab): TowerScalar(1)}
                for (m3, t3), v in images.items():
                    sg, m4 = clifford_product(m2, m3)
                    j = idx[(m4, t3)]
                    s = col.get(j, TowerScalar(0)) + v * c * sg
                    if s:
                        col[j] = s
                    else:
                        col.pop(j, None)
            cols.append(col)
        T[k] = SparseMatrix.from_columns(len(basis), cols)
    C: dict[int, SparseMatrix] = {}
    for l in range(1, n + 1):
        cols = []
        for mask, tab in basis:
            sg, m2 = clifford_left(l, mask)
            cols.append({idx[(m2, tab)]: sg})
        C[l] = SparseMatrix.from_columns(len(basis), cols)
    return SeminormalModule(shape, tabs, basis, T, C)


def relation_report(gens: dict[str, dict[int, SparseMatrix]], n: int) -> dict[str, bool]:
    """Defining relations of the algebra on matrices ``gens['T'][k]``, ``gens['C'][k]``."""
    T, C = gens["T"], gens["C"]
    dim = next(iter(C.values())).nrows
    one = SparseMatrix.identity(dim)
    eps = as_scalar(epsilon())
    out = {}
    out["hecke-quadratic"] = all(T[k] @ T[k] == T[k].scale(eps) + one for k in T)
    out["braid"] = all(T[k] @ T[k + 1] @ T[k] == T[k + 1] @ T[k] @ T[k + 1] for k in range(1, n - 1))
    out["distant-commutation"] = all(T[a] @ T[b] == T[b] @ T[a] for a in T for b in T if abs(a - b) >= 2)
    out["clifford-square"] = all(C[k] @ C[k] == one.scale(-1) for k in C)
    out["clifford-anticommutation"] = all((C[a] @ C[b] + C[b] @ C[a]).is_zero() for a in C for b in C if a < b)
    ok = True
    for k in T:
        ok &= T[k] @ C[k] == C[k + 1] @ T[k]
        ok &= T[k] @ C[k + 1] == C[k] @ T[k] - (C[k] - C[k + 1]).scale(eps)
        for l in C:
            if l not in (k, k + 1):
                ok &= T[k] @ C[l] == C[l] @ T[k]
    out["cross-relations"] = ok
    return out


def module_relations(M: SeminormalModule) -> dict[str, bool]:
    return relation_report({"T": M.T, "C": M.C}, M.n)


def jm_eigencheck(M: SeminormalModule) -> bool:
    """Every ``J_k`` is diagonal with entries ``q_k^{nu_C(k)}``."""
    for k in range(1, M.n + 1):
        J = M.J(k)
        if not J.is_diagonal():
            return False
        if any(J[i, i] != M.expected_eigenvalue(i, k) for i in range(M.dim)):
            return False
    return True


def beta_consistency(M: SeminormalModule) -> bool:
    """``T_k^2 = eps T_k + 1`` on each ``psi_Lambda`` whose neighbour is standard."""
    eps = as_scalar(epsilon())
    idx = M.index
    for tab in M.tableaux:
        for k in range(1, M.n):
            if bruhat_step(tab, k) not in ("up", "down"):
                continue
            v = {idx[(0, tab)]: TowerScalar(1)}
            tv = M.T[k].apply(v)
            ttv = M.T[k].apply(tv)
            rhs = {i: c * eps for i, c in tv.items()}
            for i, c in v.items():
                s = rhs.get(i, TowerScalar(0)) + c
                rhs[i] = s
            rhs = {i: c for i, c in rhs.items() if c}
            if ttv != rhs:
                return False
    return True


def basis_element(key: BasisKey) -> AlgebraElement:
    """``C psi_Lambda`` as an element of the algebra."""
    mask, tab = key
    x = psi_tableau(tab)
    for l in reversed(indices_of(mask)):
        x = left_C(l, x)
    return x


def ideal_model_check(M: SeminormalModule) -> bool:
    """Left multiplication on the elements ``C psi_Lambda`` matches the matrices."""
    elems = [basis_element(b) for b in M.basis]
    n = M.n
    for kind, k, mat in M.generator_list():
        for j, e in enumerate(elems):
            lhs = left_T(k, e) if kind == "T" else left_C(k, e)
            rhs = AlgebraElement.zero(n)
            for i, c in mat.column(j).items():
                rhs = rhs + elems[i].scale(c)
            if lhs != rhs:
                return False
    return True


# --------------------------------------------------------------------------
# rho operators and the splitting


def rho(M: SeminormalModule, i: int) -> SparseMatrix:
    """``C psi_Lambda -> C C_l psi_Lambda`` with ``l`` the diagonal entry of row ``i``."""
    if not 1 <= i <= M.shape.length:
        raise ValueError("row index out of range")
    idx = M.index
    cols = []
    for mask, tab in M.basis:
        l = tab.rows[i - 1][0]
        sg, m2 = clifford_right(mask, l)
        cols.append({idx[(m2, tab)]: sg})
    return SparseMatrix.from_columns(M.dim, cols)


def commutant_check(M: SeminormalModule) -> dict[str, bool]:
    rhos = [rho(M, i) for i in range(1, M.shape.length + 1)]
    one = SparseMatrix.identity(M.dim)
    out = {
        "commutes": all((r @ g - g @ r).is_zero() for r in rhos for _, _, g in M.generator_list()),
        "square-minus-one": all(r @ r == one.scale(-1) for r in rhos),
        "anticommute": all((a @ b + b @ a).is_zero() for a, b in combinations(rhos, 2)),
    }
    return out


def projector(M: SeminormalModule, signs: tuple[int, ...]) -> SparseMatrix:
    """``prod_j (1 + s_j i rho_{2j-1} rho_{2j}) / 2``."""
    i_unit = as_scalar(imaginary_unit())
    one = SparseMatrix.identity(M.dim)
    P = one
    for t, s in enumerate(signs):
        rr = rho(M, 2 * t + 1) @ rho(M, 2 * t + 2)
        P = P @ (one + rr.scale(i_unit * s)).scale(Fraction(1, 2))
    return P


@dataclass
class Submodule:
    """A subspace of ``V`` with the restricted generator matrices."""

    module: SeminormalModule
    signs: tuple[int, ...]
    basis: list[dict[int, TowerScalar]]  # vectors in V coordinates
    T: dict[int, SparseMatrix]
    C: dict[int, SparseMatrix]
    eigen: list[tuple[TowerScalar, ...]]
    parity: list[int]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _restrict(mat: SparseMatrix, basis: list[dict[int, TowerScalar]], blocks: dict[tuple, list[int]], key_of: list[tuple]) -> SparseMatrix:
    """Matrix of ``mat`` on the span of ``basis`` (assumed invariant)."""
    cols = []
    for b in basis:
        img = mat.apply(b)
        coords: dict[int, TowerScalar] = {}
        # the image splits over joint eigenspaces; solve block by block
        by_block: dict[tuple, dict[int, TowerScalar]] = {}
        for r, v in img.items():
            by_block.setdefault(key_of[r], {})[r] = v
        for key, part in by_block.items():
            members = blocks.get(key, [])
            sol = solve_in_span([basis[m] for m in members], part)
            if sol is None:
                raise ValueError("subspace is not invariant")
            for m, c in zip(members, sol):
                if c:
                    coords[m] = c
        cols.append(coords)
    return SparseMatrix.from_columns(len(basis), cols)


def build_U(M: SeminormalModule, signs: tuple[int, ...] | None = None) -> Submodule:
    """The image of the sign-vector projector, with restricted actions."""
    if signs is None:
        signs = sign_vectors(M.shape)[0]
    P = projector(M, signs)
    eig = [tuple(M.J(k)[i, i] for k in range(1, M.n + 1)) for i in range(M.dim)]
    # columns of P stay inside one joint eigenspace and one parity
    cols = P.columns()
    chosen = independent_columns(cols)
    basis = [cols[j] for j in chosen]
    key_of_v = [(eig[i], M.parity(i)) for i in range(M.dim)]
    bkeys = [key_of_v[j] for j in chosen]
    blocks: dict[tuple, list[int]] = {}
    for a, key in enumerate(bkeys):
        blocks.setdefault(key, []).append(a)
    T = {k: _restrict(m, basis, blocks, key_of_v) for k, m in M.T.items()}
    C = {k: _restrict(m, basis, blocks, key_of_v) for k, m in M.C.items()}
    return Submodule(M, signs, basis, T, C, [k[0] for k in bkeys], [k[1] for k in bkeys])


def splitting_report(M: SeminormalModule) -> dict[str, bool]:
    """Projectors are orthogonal idempotents summing to 1; pieces have equal size."""
    vecs = sign_vectors(M.shape)
    Ps = [projector(M, s) for s in vecs]
    one = SparseMatrix.identity(M.dim)
    total = SparseMatrix.zeros(M.dim, M.dim)
    for P in Ps:
        total = total + P
    out = {
        "idempotent": all(P @ P == P for P in Ps),
        "orthogonal": all((a @ b).is_zero() for a, b in combinations(Ps, 2)),
        "resolution-of-identity": total == one,
        "even": all(all(M.parity(i) == M.parity(j) for i, j, _ in P.entries()) for P in Ps),
    }
    dims = [build_U(M, s).dim for s in vecs]
    out["equal-dimensions"] = len(set(dims)) == 1 and sum(dims) == M.dim
    # rho_1 carries one piece onto the piece with the first sign flipped
    if len(vecs) > 1:
        r1 = rho(M, 1)
        ok = True
        for s, P in zip(vecs, Ps):
            flipped = (-s[0],) + s[1:]
            Q = Ps[vecs.index(flipped)]
            ok &= Q @ r1 @ P == r1 @ P
        out["rho-transports-pieces"] = ok
    return out


def commutant_dimension(U: Submodule, even_only: bool = False) -> int:
    """Dimension of the operators on ``U`` commuting with every generator.

    The unknown operator is restricted to preserve the joint eigenspaces of
    the Jucys-Murphy matrices first (any commuting operator must), which
    keeps the exact linear system small.
    """
    d = U.dim
    pairs = [(a, b) for a in range(d) for b in range(d) if U.eigen[a] == U.eigen[b]]
    if even_only:
        pairs = [(a, b) for a, b in pairs if U.parity[a] == U.parity[b]]
    var = {p: v for v, p in enumerate(pairs)}
    rows: list[dict[int, TowerScalar]] = []
    for g in list(U.T.values()) + list(U.C.values()):
        # (Z g - g Z)[r, c] = sum_m Z[r,m] g[m,c] - g[r,m] Z[m,c]
        eqs: dict[tuple[int, int], dict[int, TowerScalar]] = {}
        for m, c, v in g.entries():
            for r in range(d):
                x = var.get((r, m))
                if x is not None:
                    e = eqs.setdefault((r, c), {})
                    e[x] = e.get(x, TowerScalar(0)) + v
        for r, m, v in g.entries():
            for c in range(d):
                x = var.get((m, c))
                if x is not None:
                    e = eqs.setdefault((r, c), {})
                    e[x] = e.get(x, TowerScalar(0)) - v
        rows.extend(eqs.values())
    return len(nullspace(rows, len(pairs)))


# --------------------------------------------------------------------------
# Centre and dimensions


def content_values(shape: StrictPartition) -> list[TowerScalar]:
    """``q_k + q_k^{-1}`` over the boxes (exact, in the tower)."""
    return [special_value(j - i) + 1 / special_value(j - i) for (i, j) in shape.boxes()]


def elementary_symmetric(values: list[TowerScalar]) -> list[TowerScalar]:
    es = [TowerScalar(1)] + [TowerScalar(0)] * len(values)
    for v in values:
        for m in range(len(values), 0, -1):
            es[m] = es[m] + es[m - 1] * v
    return es


def central_character_table(n: int) -> dict[StrictPartition, list[RationalFunction]]:
    """Scalars by which ``e_m(J_1 + J_1^{-1}, ..., J_n + J_n^{-1})`` act on ``V_lambda``."""
    table = {}
    for shape in enumerate_strict_partitions(n):
        es = elementary_symmetric(content_values(shape))
        if not all(e.is_rational() for e in es):
            raise ArithmeticError(f"central character of {shape} left the rational functions")
        table[shape] = [e.to_rational() for e in es[1:]]
    return table


def content_sum_formula(shape: StrictPartition) -> RationalFunction:
    """``sum 2 (q^{2c+1} + q^{-2c-1}) / (q + q^{-1})`` over contents ``c``."""
    total = RationalFunction(0)
    for (i, j) in shape.boxes():
        c = j - i
        total = total + (q_power(2 * c + 1) + q_power(-2 * c - 1)) * 2 / (q_power(1) + q_power(-1))
    return total


def central_action_check(shape: StrictPartition) -> bool:
    """The algebra's symmetric elements act on every ``psi_Lambda`` by the table scalars."""
    from .algebra import elementary_symmetric_jm

    n = shape.n
    es = elementary_symmetric_jm(n)
    row = central_character_table(n)[shape]
    for tab in enumerate_standard(shape):
        psi = psi_tableau(tab)
        for m in range(1, n + 1):
            from .algebra import mul

            if mul(es[m], psi) != psi.scale(row[m - 1]):
                return False
    return True


def u_dimension(shape: StrictPartition) -> int:
    return 2**shape.n * standard_count(shape) // 2 ** (shape.length // 2)


def dimension_identity(n: int) -> tuple[bool, Fraction, int]:
    """``sum 2^{-d} (dim U)^2`` against ``2^n n!``."""
    total = sum(
        (Fraction(1, 2**shape.parity_defect) * u_dimension(shape) ** 2 for shape in enumerate_strict_partitions(n)),
        Fraction(0),
    )
    target = 2**n * factorial(n)
    return total == target, total, target


__all__ = [
    "SeminormalModule",
    "Submodule",
    "basis_element",
    "beta_consistency",
    "build_U",
    "build_module",
    "central_action_check",
    "central_character_table",
    "commutant_check",
    "commutant_dimension",
    "content_sum_formula",
    "dimension_identity",
    "elementary_symmetric",
    "ideal_model_check",
    "jm_eigencheck",
    "module_relations",
    "projector",
    "relation_report",
    "rho",
    "splitting_report",
    "u_dimension",
]
