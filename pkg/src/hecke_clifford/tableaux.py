"""Strict partitions, shifted tableaux and the permutations attached to them.

Boxes are addressed as ``(row, column)`` with 1-based indices; row ``i`` of
the shifted diagram occupies columns ``i, ..., i + parts[i-1] - 1``.  The
content of a box is ``column - row``.

Permutations are tuples in one-line notation, ``perm[k-1] = perm(k)``, and
compose as functions: ``compose(s, t)(k) = s(t(k))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Literal

Permutation = tuple[int, ...]
BruhatCase = Literal["up", "down", "row", "column"]


# --------------------------------------------------------------------------
# Permutations


def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest_perm(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def simple_transposition(k: int, n: int) -> Permutation:
    if not 1 <= k < n:
        raise ValueError(f"s_{k} is not a generator of S_{n}")
    p = list(range(1, n + 1))
    p[k - 1], p[k] = p[k], p[k - 1]
    return tuple(p)


def compose(s: Permutation, t: Permutation) -> Permutation:
    """The product ``st`` with ``(st)(k) = s(t(k))``."""
    return tuple(s[t[k] - 1] for k in range(len(t)))


def inverse_perm(s: Permutation) -> Permutation:
    out = [0] * len(s)
    for k, v in enumerate(s, start=1):
        out[v - 1] = k
    return tuple(out)


def perm_length(s: Permutation) -> int:
    """Coxeter length, i.e. the number of inversions."""
    n = len(s)
    return sum(1 for a in range(n) for b in range(a + 1, n) if s[a] > s[b])


def perm_from_word(word: Iterable[int], n: int) -> Permutation:
    """Evaluate ``s_{j1} s_{j2} ... s_{jr}`` as a permutation."""
    p = list(range(1, n + 1))
    # right-multiplying by s_j swaps positions j, j+1 of the one-line form
    for j in word:
        p[j - 1], p[j] = p[j], p[j - 1]
    return tuple(p)


@lru_cache(maxsize=None)
def reduced_word(s: Permutation) -> tuple[int, ...]:
    """A reduced word for ``s`` (leftmost descents first)."""
    word = []
    p = list(s)
    # peel s = s_j s' with l(s') < l(s): j is a left descent iff s^-1(j) > s^-1(j+1)
    while True:
        inv = inverse_perm(tuple(p))
        for j in range(1, len(p)):
            if inv[j - 1] > inv[j]:
                break
        else:
            return tuple(word)
        word.append(j)
        # p <- s_j p : swap the values j and j+1
        a, b = inv[j - 1] - 1, inv[j] - 1
        p[a], p[b] = p[b], p[a]


# --------------------------------------------------------------------------
# Strict partitions


@dataclass(frozen=True, order=True)
class StrictPartition:
    """A partition with strictly decreasing parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("empty partition")
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be strictly decreasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> "StrictPartition":
        return cls(tuple(int(t) for t in text.replace("(", "").replace(")", "").split(",") if t.strip()))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def parity_defect(self) -> int:
        """0 when the number of parts is even, 1 when it is odd."""
        return self.length % 2

    def boxes(self) -> list[tuple[int, int]]:
        """Boxes of the shifted diagram in row-reading order."""
        return [(i, j) for i, part in enumerate(self.parts, start=1) for j in range(i, i + part)]

    def column_boxes(self) -> list[tuple[int, int]]:
        """Boxes ordered by column, top to bottom within a column."""
        return sorted(self.boxes(), key=lambda b: (b[1], b[0]))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def enumerate_strict_partitions(n: int) -> list[StrictPartition]:
    """All strict partitions of ``n``, largest first part first: (5), (4,1), (3,2)."""
    if n < 1:
        raise ValueError("n must be positive")

    def gen(rest: int, bound: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, bound), 0, -1):
            for tail in gen(rest - p, p - 1):
                yield (p,) + tail

    return sorted((StrictPartition(p) for p in gen(n, n)), reverse=True)


# --------------------------------------------------------------------------
# Shifted tableaux


@dataclass(frozen=True)
class ShiftedTableau:
    """A bijective filling of a shifted diagram by ``1..n``.

    ``rows[i-1][t]`` is the entry in box ``(i, i + t)``.
    """

    rows: tuple[tuple[int, ...], ...]
    shape: StrictPartition = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "shape", StrictPartition(tuple(len(r) for r in rows)))
        if sorted(v for r in rows for v in r) != list(range(1, self.n + 1)):
            raise ValueError(f"filling is not a bijection onto 1..n: {rows}")

    @property
    def n(self) -> int:
        return self.shape.n

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        """Symbol -> box."""
        return {v: (i, i + t) for i, r in enumerate(self.rows, start=1) for t, v in enumerate(r)}

    def __getitem__(self, box: tuple[int, int]) -> int:
        i, j = box
        return self.rows[i - 1][j - i]

    def content(self, k: int) -> int:
        i, j = self.positions[k]
        return j - i

    def contents(self) -> tuple[int, ...]:
        """``contents()[k-1]`` is the content of the box holding ``k``."""
        return tuple(self.content(k) for k in range(1, self.n + 1))

    def is_standard(self) -> bool:
        for (i, j), v in ((b, self[b]) for b in self.shape.boxes()):
            if j > i and self[(i, j - 1)] > v:
                return False
            if i > 1 and j <= i - 1 + self.shape.parts[i - 2] - 1 and self[(i - 1, j)] > v:
                return False
        return True

    def leading_diagonal(self) -> tuple[int, ...]:
        """Entries ``Λ(i, i)`` for each row ``i``."""
        return tuple(r[0] for r in self.rows)

    def act(self, s: Permutation) -> "ShiftedTableau":
        """The tableau ``s·Λ`` obtained by replacing each symbol ``k`` with ``s(k)``."""
        return ShiftedTableau(tuple(tuple(s[v - 1] for v in r) for r in self.rows))

    def swap(self, k: int) -> "ShiftedTableau":
        """``s_k·Λ``: exchange the symbols ``k`` and ``k+1``."""
        return self.act(simple_transposition(k, self.n))

    # ---- readings
    def row_reading(self) -> tuple[int, ...]:
        return tuple(v for r in self.rows for v in r)

    def column_reading(self) -> tuple[int, ...]:
        return tuple(self[b] for b in self.shape.column_boxes())

    def readings(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.row_reading(), self.column_reading()

    # ---- rendering
    def to_text(self) -> str:
        width = len(str(self.n))
        lines = []
        for i, r in enumerate(self.rows):
            cells = " ".join(str(v).rjust(width) for v in r)
            lines.append(" " * ((width + 1) * i) + cells)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict | str) -> "ShiftedTableau":
        if isinstance(data, str):
            data = json.loads(data)
        t = cls(tuple(tuple(r) for r in data["rows"]))
        if list(t.shape.parts) != list(data["shape"]):
            raise ValueError("shape does not match rows")
        return t

    def __str__(self) -> str:
        return self.to_text()


def _fill(shape: StrictPartition, order: list[tuple[int, int]]) -> ShiftedTableau:
    values = {b: k for k, b in enumerate(order, start=1)}
    return ShiftedTableau(
        tuple(tuple(values[(i, j)] for j in range(i, i + part)) for i, part in enumerate(shape.parts, start=1))
    )


def row_tableau(shape: StrictPartition) -> ShiftedTableau:
    """Fill ``1..n`` consecutively along the rows."""
    return _fill(shape, shape.boxes())


def column_tableau(shape: StrictPartition) -> ShiftedTableau:
    """Fill ``1..n`` consecutively down the columns, left to right."""
    return _fill(shape, shape.column_boxes())


@lru_cache(maxsize=None)
def enumerate_standard(shape: StrictPartition) -> tuple[ShiftedTableau, ...]:
    """All standard tableaux of the shape, sorted by row-reading word."""
    boxes = shape.boxes()
    in_diagram = set(boxes)
    found: list[ShiftedTableau] = []
    filled: dict[tuple[int, int], int] = {}

    def addable(b: tuple[int, int]) -> bool:
        i, j = b
        if b in filled:
            return False
        if j > i and (i, j - 1) not in filled:
            return False
        if (i - 1, j) in in_diagram and (i - 1, j) not in filled:
            return False
        return True

    def rec(k: int) -> None:
        if k > shape.n:
            found.append(_fill(shape, sorted(filled, key=filled.__getitem__)))
            return
        for b in boxes:
            if addable(b):
                filled[b] = k
                rec(k + 1)
                del filled[b]

    rec(1)
    return tuple(sorted(found, key=lambda t: t.row_reading()))


def standard_count(shape: StrictPartition) -> int:
    """The number of standard tableaux of the shape."""
    return len(enumerate_standard(shape))


# --------------------------------------------------------------------------
# Subsequences and permutations of a tableau


@dataclass(frozen=True)
class Subsequences:
    """Entries ``j < k`` split by whether they occur after or before ``k``.

    ``after``/``before`` refer to the row reading, ``after_col``/``before_col``
    to the column reading; each keeps the order of the reading.
    """

    k: int
    after: tuple[int, ...]
    before: tuple[int, ...]
    after_col: tuple[int, ...]
    before_col: tuple[int, ...]


def _split(seq: tuple[int, ...], k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    pos = seq.index(k)
    before = tuple(v for v in seq[:pos] if v < k)
    after = tuple(v for v in seq[pos + 1 :] if v < k)
    return after, before


def subsequences(tab: ShiftedTableau, k: int) -> Subsequences:
    if not 1 <= k <= tab.n:
        raise ValueError("k out of range")
    after, before = _split(tab.row_reading(), k)
    after_c, before_c = _split(tab.column_reading(), k)
    return Subsequences(k, after, before, after_c, before_c)


def w_of(tab: ShiftedTableau) -> Permutation:
    """``k -> p_{n+1-k}`` where ``p`` is the column reading."""
    p = tab.column_reading()
    n = tab.n
    return tuple(p[n - k] for k in range(1, n + 1))


def s_of(tab: ShiftedTableau) -> Permutation:
    """The permutation carrying ``tab`` to the column tableau of its shape."""
    col = column_tableau(tab.shape)
    return tuple(col[tab.positions[k]] for k in range(1, tab.n + 1))


def reduced_words(tab: ShiftedTableau) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reduced words ``(word of w_of(tab), word of s_of(tab))``.

    The first is ``prod_{k=2..n} prod_{p=1..b*_k} s_{k-p}`` read left to right,
    the second ``prod_{k=n..2} prod_{p=a*_k..1} s_{k-p}``, where ``a*_k``,
    ``b*_k`` count the entries below ``k`` after/before it in the column
    reading.
    """
    if not tab.is_standard():
        raise ValueError("reduced_words needs a standard tableau")
    n = tab.n
    w_word: list[int] = []
    s_word: list[int] = []
    subs = {k: subsequences(tab, k) for k in range(2, n + 1)}
    for k in range(2, n + 1):
        w_word.extend(k - p for p in range(1, len(subs[k].before_col) + 1))
    for k in range(n, 1, -1):
        s_word.extend(k - p for p in range(len(subs[k].after_col), 0, -1))
    return tuple(w_word), tuple(s_word)


def bruhat_step(tab: ShiftedTableau, k: int) -> BruhatCase:
    """Classify ``s_k·tab`` for a standard tableau.

    ``"up"``: standard and ``s_k w`` is longer than ``w``; ``"down"``:
    standard and shorter; ``"row"``/``"column"``: ``k, k+1`` adjacent in a
    row/column, so ``s_k·tab`` is not standard.
    """
    if not 1 <= k < tab.n:
        raise ValueError("k out of range")
    (i, j), (i2, j2) = tab.positions[k], tab.positions[k + 1]
    if i2 == i and j2 == j + 1:
        return "row"
    if j2 == j and i2 == i + 1:
        return "column"
    if i2 > i and j2 < j:
        return "up"
    if i2 < i and j2 > j:
        return "down"
    raise ValueError(f"tableau is not standard near {k}")
