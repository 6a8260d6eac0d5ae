"""Exact rational matrices: RREF, kernels, images and quotient representatives.

Matrices behave as dense row-major arrays of ``Fraction`` but keep only their
nonzero entries, one ``{column: value}`` dict per row.  Elimination works on
those rows directly.  Pivots are the first nonzero entry in column order; the
reduced row echelon form is unique, so results do not depend on row order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)

Row = dict  # column -> nonzero Fraction


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Matrix:
    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: int, cols: int, sparse_rows: Sequence[Row] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be nonnegative")
        self.rows = rows
        self.cols = cols
        if sparse_rows is None:
            self._rows = tuple({} for _ in range(rows))
        else:
            if len(sparse_rows) != rows:
                raise ValueError("row count does not match shape")
            cleaned = []
            for r in sparse_rows:
                row = {}
                for j, v in r.items():
                    if not 0 <= j < cols:
                        raise IndexError(f"column {j} outside 0..{cols - 1}")
                    v = _frac(v)
                    if v:
                        row[j] = v
                cleaned.append(row)
            self._rows = tuple(cleaned)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence], cols: int | None = None) -> Matrix:
        data = [list(r) for r in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged rows")
        return cls(len(data), cols, [{j: v for j, v in enumerate(r) if v} for r in data])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, [{i: ONE} for i in range(n)])

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Row]) -> Matrix:
        """Build from sparse columns ``{row: value}``."""
        out = [{} for _ in range(rows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                out[i][j] = v
        return cls(rows, len(columns), out)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._rows[i].get(j, ZERO)

    def row(self, i: int) -> tuple[Fraction, ...]:
        r = self._rows[i]
        return tuple(r.get(j, ZERO) for j in range(self.cols))

    def sparse_row(self, i: int) -> dict:
        return dict(self._rows[i])

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def is_zero(self) -> bool:
        return not any(self._rows)

    def transpose(self) -> Matrix:
        out = [{} for _ in range(self.cols)]
        for i, r in enumerate(self._rows):
            for j, v in r.items():
                out[j][i] = v
        return Matrix(self.cols, self.rows, out)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for r in self._rows:
            acc: Row = {}
            for k, v in r.items():
                for j, w in other._rows[k].items():
                    acc[j] = acc.get(j, ZERO) + v * w
            out.append({j: v for j, v in acc.items() if v})
        return Matrix(self.rows, other.cols, out)

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum((v * vector[j] for j, v in r.items()), ZERO) for r in self._rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz})"


# -- elimination on sparse rows ------------------------------------------------


def _axpy(row: Row, factor: Fraction, other: Row) -> None:
    """row -= factor * other, in place, pruning zeros."""
    for j, v in other.items():
        w = row.get(j, ZERO) - factor * v
        if w:
            row[j] = w
        else:
            row.pop(j, None)


def _echelon(rows: Iterable[Row]) -> dict[int, Row]:
    """Insert rows one by one into an echelon basis keyed by pivot column.

    Each stored row has a leading 1 at its key and no entries left of it.
    """
    pivots: dict[int, Row] = {}
    for src in rows:
        row = {j: v for j, v in src.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                scale = row[lead]
                if scale != ONE:
                    row = {j: v / scale for j, v in row.items()}
                pivots[lead] = row
                break
            _axpy(row, row[lead], piv)
    return pivots


def _back_substitute(pivots: dict[int, Row]) -> list[tuple[int, Row]]:
    order = sorted(pivots)
    for idx in range(len(order) - 1, -1, -1):
        p = order[idx]
        prow = pivots[p]
        for q in order[:idx]:
            qrow = pivots[q]
            f = qrow.get(p)
            if f:
                _axpy(qrow, f, prow)
    return [(p, pivots[p]) for p in order]


def _rref_rows(rows: Iterable[Row]) -> list[tuple[int, Row]]:
    return _back_substitute(_echelon(rows))


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    reduced = _rref_rows(m._rows)
    pivots = [p for p, _ in reduced]
    out = [r for _, r in reduced] + [{} for _ in range(m.rows - len(reduced))]
    return Matrix(m.rows, m.cols, out), pivots


def rank(m: Matrix) -> int:
    # echelon form suffices for the rank
    return len(_echelon(m._rows))


class Subspace:
    """A subspace of Q^ambient_dim held as RREF rows with recorded pivots."""

    __slots__ = ("ambient_dim", "pivots", "_rows", "_pivot_index")

    def __init__(self, ambient_dim: int, reduced: list[tuple[int, Row]]):
        self.ambient_dim = ambient_dim
        self.pivots = tuple(p for p, _ in reduced)
        self._rows = tuple(r for _, r in reduced)
        self._pivot_index = {p: k for k, p in enumerate(self.pivots)}

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable) -> Subspace:
        rows = []
        for v in vectors:
            if isinstance(v, dict):
                rows.append(v)
            else:
                if len(v) != ambient_dim:
                    raise ValueError("vector length does not match ambient dimension")
                rows.append({j: _frac(x) for j, x in enumerate(v) if x})
        return cls(ambient_dim, _rref_rows(rows))

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, [])

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def basis(self) -> list[tuple[Fraction, ...]]:
        return [_dense(r, self.ambient_dim) for r in self._rows]

    def sparse_basis(self) -> list[dict]:
        return [dict(r) for r in self._rows]

    def reduce_sparse(self, v: Row) -> Row:
        row = {j: x for j, x in v.items() if x}
        hits = sorted(j for j in row if j in self._pivot_index)
        # eliminating one pivot never reintroduces another (RREF rows)
        for p in hits:
            f = row.get(p)
            if f:
                _axpy(row, f, self._rows[self._pivot_index[p]])
        return row

    def contains(self, v) -> bool:
        if not isinstance(v, dict):
            v = _sparse(v, self.ambient_dim)
        return not self.reduce_sparse(v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and self._rows == other._rows
        )

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def _dense(row: Row, n: int) -> tuple[Fraction, ...]:
    return tuple(row.get(j, ZERO) for j in range(n))


def _sparse(v: Sequence, n: int) -> Row:
    if len(v) != n:
        raise ValueError(f"vector of length {len(v)} in ambient dimension {n}")
    return {j: _frac(x) for j, x in enumerate(v) if x}


def kernel_basis(m: Matrix) -> Subspace:
    reduced = _rref_rows(m._rows)
    pivot_set = {p for p, _ in reduced}
    vectors = []
    for j in range(m.cols):
        if j in pivot_set:
            continue
        v = {j: ONE}
        for p, r in reduced:
            x = r.get(j)
            if x:
                v[p] = -x
        vectors.append(v)
    return Subspace(m.cols, _rref_rows(vectors))


def image_subspace(m: Matrix) -> Subspace:
    """Column space of ``m``."""
    return Subspace(m.rows, _rref_rows(m.transpose()._rows))


def reduce_mod(v: Sequence, s: Subspace) -> tuple[Fraction, ...]:
    """Canonical representative of ``v + s``: all pivot coordinates of ``s`` are zero."""
    return _dense(s.reduce_sparse(_sparse(v, s.ambient_dim)), s.ambient_dim)


def quotient_basis(ambient_dim: int, s: Subspace) -> list[tuple[Fraction, ...]]:
    if s.ambient_dim != ambient_dim:
        raise ValueError("subspace lives in a different ambient space")
    piv = set(s.pivots)
    return [
        tuple(ONE if k == j else ZERO for k in range(ambient_dim))
        for j in range(ambient_dim)
        if j not in piv
    ]
