"""Exact linear algebra over the rationals.

Rows are sparse: a ``dict`` from a column label to a nonzero ``Fraction``.
Column labels can be any hashable value; the pivot of a row is its smallest
column under the ``key`` supplied to :class:`Echelon` (so the column index
space is whatever canonical order the caller uses for its monomials).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

Scalar = Fraction


def scalar(value) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a ``"p/q"`` string to a Scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def format_scalar(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def add_scaled(dst: dict, src: Mapping, factor: Fraction) -> None:
    """dst += factor * src, dropping entries that cancel."""
    for k, v in src.items():
        w = dst.get(k, 0) + factor * v
        if w:
            dst[k] = w
        else:
            dst.pop(k, None)


class Echelon:
    """Incrementally maintained reduced row-echelon basis.

    Every stored row has pivot coefficient 1 and no other stored row has a
    nonzero entry in its pivot column.  Each row also carries a *tag*: a
    sparse combination of the tags of the vectors that were inserted, so a
    successful membership test can be turned into a combination of the
    original inputs.
    """

    def __init__(self, key: Callable[[Any], Any] | None = None):
        self.key = key
        self.rows: dict[Hashable, dict] = {}
        self.tags: dict[Hashable, dict] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list:
        return sorted(self.rows, key=self.key)

    def reduce(self, vec: Mapping) -> tuple[dict, dict]:
        """Return ``(residual, combo)`` with ``vec = residual + sum combo``.

        ``combo`` is expressed in the tag space.  Because stored rows are
        fully reduced, one pass over the pivots present in ``vec`` suffices.
        """
        residual = dict(vec)
        combo: dict = {}
        hits = [p for p in residual if p in self.rows]
        for p in hits:
            c = residual.get(p)
            if not c:
                continue
            add_scaled(residual, self.rows[p], -c)
            add_scaled(combo, self.tags[p], c)
        return residual, combo

    def add(self, vec: Mapping, tag: Mapping | None = None) -> bool:
        """Insert ``vec``; return False if it was already in the span."""
        residual, combo = self.reduce(vec)
        if not residual:
            return False
        pivot = min(residual, key=self.key) if self.key else min(residual)
        inv = 1 / residual[pivot]
        row = {k: v * inv for k, v in residual.items()}
        new_tag: dict = {}
        if tag:
            add_scaled(new_tag, tag, inv)
        add_scaled(new_tag, combo, -inv)
        for p, other in self.rows.items():
            c = other.get(pivot)
            if c:
                add_scaled(other, row, -c)
                add_scaled(self.tags[p], new_tag, -c)
        self.rows[pivot] = row
        self.tags[pivot] = new_tag
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)[0]

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in self.pivots()]


@dataclass(frozen=True)
class SpanResult:
    member: bool
    coefficients: tuple[Fraction, ...] | None = None
    residual: tuple[Fraction, ...] | None = None


def _dense_to_sparse(row: Sequence) -> dict:
    return {j: scalar(v) for j, v in enumerate(row) if v}


def _sparse_to_dense(row: Mapping, width: int) -> list[Fraction]:
    out = [Fraction(0)] * width
    for j, v in row.items():
        out[j] = v
    return out


def rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int], int]:
    """Reduced row-echelon form of a dense matrix.

    Returns ``(rows, pivot_columns, rank)``; zero rows are dropped and rows
    are ordered by pivot column.
    """
    width = max((len(r) for r in matrix), default=0)
    ech = Echelon()
    for row in matrix:
        ech.add(_dense_to_sparse(row))
    pivots = ech.pivots()
    rows = [_sparse_to_dense(ech.rows[p], width) for p in pivots]
    return rows, pivots, len(pivots)


def in_span(vector: Sequence, basis_rows: Sequence[Sequence]) -> SpanResult:
    """Decide whether ``vector`` is a rational combination of ``basis_rows``.

    On success the coefficients (one per input row) recombine to ``vector``
    exactly; otherwise the residual after reduction is returned.
    """
    width = max([len(vector)] + [len(r) for r in basis_rows])
    ech = Echelon()
    for i, row in enumerate(basis_rows):
        ech.add(_dense_to_sparse(row), {i: Fraction(1)})
    residual, combo = ech.reduce(_dense_to_sparse(vector))
    if residual:
        return SpanResult(False, residual=tuple(_sparse_to_dense(residual, width)))
    coeffs = tuple(combo.get(i, Fraction(0)) for i in range(len(basis_rows)))
    return SpanResult(True, coefficients=coeffs)


def rank(rows: Iterable[Mapping], key=None) -> int:
    ech = Echelon(key)
    for r in rows:
        ech.add(r)
    return ech.rank
