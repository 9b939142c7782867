"""Sparse exact matrices and Gaussian elimination over the tower field."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .scalars import Scalar, TowerScalar, as_scalar

Row = dict[int, TowerScalar]


class SparseMatrix:
    """A matrix stored as ``{row: {col: value}}`` with no explicit zeros."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Mapping[int, Mapping[int, Scalar]] | None = None) -> None:
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, Row] = {}
        for i, row in (rows or {}).items():
            clean = {j: as_scalar(v) for j, v in row.items() if v}
            if clean:
                self.rows[i] = clean

    @classmethod
    def identity(cls, n: int, c: Scalar = 1) -> "SparseMatrix":
        return cls(n, n, {i: {i: c} for i in range(n)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "SparseMatrix":
        return cls(nrows, ncols)

    @classmethod
    def from_columns(cls, nrows: int, columns: Iterable[Mapping[int, Scalar]]) -> "SparseMatrix":
        rows: dict[int, dict[int, Scalar]] = {}
        ncols = 0
        for j, col in enumerate(columns):
            ncols = j + 1
            for i, v in col.items():
                if v:
                    rows.setdefault(i, {})[j] = v
        return cls(nrows, ncols, rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> TowerScalar:
        i, j = ij
        return self.rows.get(i, {}).get(j, TowerScalar(0))

    def entries(self) -> Iterator[tuple[int, int, TowerScalar]]:
        for i, row in self.rows.items():
            for j, v in row.items():
                yield i, j, v

    def column(self, j: int) -> dict[int, TowerScalar]:
        return {i: row[j] for i, row in self.rows.items() if j in row}

    def columns(self) -> list[dict[int, TowerScalar]]:
        cols: list[dict[int, TowerScalar]] = [{} for _ in range(self.ncols)]
        for i, j, v in self.entries():
            cols[j][i] = v
        return cols

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def _same_shape(self, other: "SparseMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._same_shape(other)
        rows = {i: dict(r) for i, r in self.rows.items()}
        for i, j, v in other.entries():
            row = rows.setdefault(i, {})
            s = row.get(j, 0) + v
            if s:
                row[j] = s
            else:
                row.pop(j, None)
        return SparseMatrix(self.nrows, self.ncols, rows)

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, c: Scalar) -> "SparseMatrix":
        c = as_scalar(c)
        if not c:
            return SparseMatrix(self.nrows, self.ncols)
        return SparseMatrix(self.nrows, self.ncols, {i: {j: v * c for j, v in r.items()} for i, r in self.rows.items()})

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions differ")
        out: dict[int, dict[int, TowerScalar]] = {}
        for i, row in self.rows.items():
            acc: dict[int, TowerScalar] = {}
            for k, a in row.items():
                orow = other.rows.get(k)
                if not orow:
                    continue
                for j, b in orow.items():
                    prev = acc.get(j)
                    acc[j] = a * b if prev is None else prev + a * b
            out[i] = acc
        return SparseMatrix(self.nrows, other.ncols, out)

    def apply(self, vec: Mapping[int, Scalar]) -> dict[int, TowerScalar]:
        out: dict[int, TowerScalar] = {}
        for i, row in self.rows.items():
            acc = TowerScalar(0)
            for j, a in row.items():
                v = vec.get(j)
                if v:
                    acc = acc + a * v
            if acc:
                out[i] = acc
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def is_zero(self) -> bool:
        return not self.rows

    def is_diagonal(self) -> bool:
        return all(set(r) <= {i} for i, r in self.rows.items())

    def diagonal(self) -> list[TowerScalar]:
        return [self[i, i] for i in range(min(self.nrows, self.ncols))]

    def submatrix(self, rows: list[int], cols: list[int]) -> "SparseMatrix":
        rpos = {r: a for a, r in enumerate(rows)}
        cpos = {c: b for b, c in enumerate(cols)}
        out: dict[int, dict[int, TowerScalar]] = {}
        for i, row in self.rows.items():
            if i in rpos:
                sel = {cpos[j]: v for j, v in row.items() if j in cpos}
                if sel:
                    out[rpos[i]] = sel
        return SparseMatrix(len(rows), len(cols), out)

    def to_numeric(self, q: complex):
        import numpy as np

        out = np.zeros((self.nrows, self.ncols), dtype=complex)
        for i, j, v in self.entries():
            out[i, j] = v.evaluate(q)
        return out

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def commutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return a @ b - b @ a


def anticommutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return a @ b + b @ a


# --------------------------------------------------------------------------
# Elimination


def _axpy(target: Row, c: TowerScalar, src: Row) -> None:
    """``target += c * src`` in place, dropping cancellations."""
    for j, v in src.items():
        s = target.get(j)
        s = c * v if s is None else s + c * v
        if s:
            target[j] = s
        else:
            target.pop(j, None)


def row_echelon(rows: Iterable[Mapping[int, Scalar]]) -> list[tuple[int, Row]]:
    """Reduced row echelon form of sparse rows: ``[(pivot_column, row), ...]``.

    Uses field inverses over the tower (pivot rows normalized to leading 1).
    Pivot choice: sparsest available row for the smallest column.
    """
    pending = [{j: as_scalar(v) for j, v in r.items() if v} for r in rows]
    pending = [r for r in pending if r]
    done: list[tuple[int, Row]] = []
    while pending:
        col = min(min(r) for r in pending)
        cands = [r for r in pending if col in r]
        piv = min(cands, key=len)
        pending = [r for r in pending if r is not piv]
        inv = 1 / piv[col]
        piv = {j: v * inv for j, v in piv.items()}
        for r in pending:
            c = r.get(col)
            if c is not None:
                _axpy(r, -c, piv)
        pending = [r for r in pending if r]
        for _, r in done:
            c = r.get(col)
            if c is not None:
                _axpy(r, -c, piv)
        done.append((col, piv))
    done.sort(key=lambda t: t[0])
    return done


def rank(rows: Iterable[Mapping[int, Scalar]]) -> int:
    return len(row_echelon(rows))


def nullspace(rows: Iterable[Mapping[int, Scalar]], nvars: int) -> list[dict[int, TowerScalar]]:
    """A basis of ``{v : row . v = 0 for every row}`` with ``nvars`` unknowns."""
    ech = row_echelon(rows)
    pivots = {c for c, _ in ech}
    basis = []
    for free in range(nvars):
        if free in pivots:
            continue
        vec: dict[int, TowerScalar] = {free: TowerScalar(1)}
        for c, r in ech:
            v = r.get(free)
            if v:
                vec[c] = -v
        basis.append(vec)
    return basis


def independent_columns(cols: list[Mapping[int, Scalar]]) -> list[int]:
    """Indices of a maximal independent subset, chosen greedily left to right."""
    chosen: list[int] = []
    ech: list[tuple[int, Row]] = []
    for idx, col in enumerate(cols):
        r = {i: as_scalar(v) for i, v in col.items() if v}
        for c, prow in ech:
            v = r.get(c)
            if v is not None:
                _axpy(r, -v, prow)
        if not r:
            continue
        pc = min(r)
        inv = 1 / r[pc]
        r = {j: v * inv for j, v in r.items()}
        for c, prow in ech:
            v = prow.get(pc)
            if v is not None:
                _axpy(prow, -v, r)
        ech.append((pc, r))
        chosen.append(idx)
    return chosen


def solve_in_span(basis: list[Mapping[int, Scalar]], target: Mapping[int, Scalar]) -> list[TowerScalar] | None:
    """Coefficients ``c`` with ``sum c_j basis_j = target``, or ``None``."""
    m = len(basis)
    # unknown j <-> column j; augmented column m holds the target
    rows: dict[int, dict[int, Scalar]] = {}
    for j, col in enumerate(basis):
        for i, v in col.items():
            if v:
                rows.setdefault(i, {})[j] = v
    for i, v in target.items():
        if v:
            rows.setdefault(i, {})[m] = -as_scalar(v)
    ech = row_echelon(rows.values())
    sol = [TowerScalar(0)] * m
    for c, r in ech:
        if c == m:
            return None
        extra = set(r) - {c, m}
        if extra:
            raise ValueError("basis vectors are not independent")
        sol[c] = -r.get(m, TowerScalar(0))
    return sol
