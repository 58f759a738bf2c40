"""
Exact row spaces over the rationals.

Elimination is fraction-free: rows are scaled to primitive integer vectors and
combined by integer cross-multiplication, so intermediate numbers only grow by
the pivot entries and are shrunk back by their content. A final division pass
produces the canonical reduced row-echelon form.
"""
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple, Union

from paraferm.exactla.matrix import SparseMatrix, SparseRow, VectorLike, as_sparse_row
from paraferm.exceptions import DimensionMismatchError
from paraferm.utils import lcm_of_denominators

IntegerRow = Dict[int, int]
MatrixLike = Union[SparseMatrix, Sequence[Sequence[Fraction]]]


def _primitive(row: IntegerRow) -> IntegerRow:
    content = 0
    for value in row.values():
        content = gcd(content, value)
        if content == 1:
            break
    if content > 1:
        row = {column: value // content for column, value in row.items()}
    if row and row[min(row)] < 0:
        row = {column: -value for column, value in row.items()}
    return row


def _integer_row(row: SparseRow) -> IntegerRow:
    scale = lcm_of_denominators(row.values())
    return _primitive({column: int(value * scale) for column, value in row.items() if value != 0})


class Subspace:
    """A subspace of Q^ambient stored by its reduced row-echelon basis.

    Two subspaces of the same ambient space are equal iff their echelon rows are
    identical, so the stored rows double as a canonical key.
    """

    def __init__(self, ambient: int, rows: Sequence[SparseRow] = ()) -> None:
        self._ambient = ambient
        self._rows: Tuple[SparseRow, ...] = tuple(rows)
        self._pivots: Tuple[int, ...] = tuple(min(row) for row in self._rows)

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient)

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, [{column: Fraction(1)} for column in range(ambient)])

    @classmethod
    def spanned_by(cls, ambient: int, vectors: Sequence[VectorLike]) -> "Subspace":
        builder = EchelonBuilder(ambient)
        for vector in vectors:
            builder.add(vector)
        return builder.subspace()

    @property
    def ambient(self) -> int:
        return self._ambient

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return self._pivots

    @property
    def rows(self) -> Tuple[SparseRow, ...]:
        return self._rows

    def __len__(self) -> int:
        return len(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._ambient == other._ambient and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._ambient, tuple(tuple(sorted(row.items())) for row in self._rows)))

    def __repr__(self) -> str:
        return "Subspace(dim={}, ambient={})".format(self.dim, self._ambient)

    def as_matrix(self) -> SparseMatrix:
        return SparseMatrix(len(self._rows), self._ambient, list(self._rows))

    def coordinates(self, vector: VectorLike) -> Optional[List[Fraction]]:
        residual = dict(as_sparse_row(vector, self._ambient))
        coordinates = []
        for pivot, row in zip(self._pivots, self._rows):
            coefficient = residual.get(pivot, Fraction(0))
            coordinates.append(coefficient)
            if coefficient == 0:
                continue
            for column, value in row.items():
                updated = residual.get(column, 0) - coefficient * value
                if updated == 0:
                    residual.pop(column, None)
                else:
                    residual[column] = updated

        if residual:
            return None
        return coordinates

    def contains(self, vector: VectorLike) -> bool:
        return self.coordinates(vector) is not None

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_same_ambient(self, other)
        return all(other.contains(row) for row in self._rows)


class EchelonBuilder:
    """Incremental fraction-free echelon form; pivoting on the first nonzero column."""

    def __init__(self, ambient: int) -> None:
        self._ambient = ambient
        self._pivots: Dict[int, IntegerRow] = {}

    @property
    def ambient(self) -> int:
        return self._ambient

    def __len__(self) -> int:
        return len(self._pivots)

    def _reduce(self, row: IntegerRow) -> IntegerRow:
        while row:
            lead = min(row)
            pivot = self._pivots.get(lead)
            if pivot is None:
                return row

            common = gcd(row[lead], pivot[lead])
            row_scale, pivot_scale = pivot[lead] // common, row[lead] // common
            combined = {column: row_scale * value for column, value in row.items()}
            for column, value in pivot.items():
                updated = combined.get(column, 0) - pivot_scale * value
                if updated == 0:
                    combined.pop(column, None)
                else:
                    combined[column] = updated
            row = _primitive(combined)
        return row

    def add(self, vector: VectorLike) -> bool:
        """Adds a vector; returns whether it enlarged the span."""
        row = self._reduce(_integer_row(as_sparse_row(vector, self._ambient)))
        if not row:
            return False
        self._pivots[min(row)] = row
        return True

    def contains(self, vector: VectorLike) -> bool:
        return not self._reduce(_integer_row(as_sparse_row(vector, self._ambient)))

    def subspace(self) -> Subspace:
        reduced: Dict[int, SparseRow] = {}
        for lead in sorted(self._pivots, reverse=True):
            integer_row = self._pivots[lead]
            row = {column: Fraction(value, integer_row[lead]) for column, value in integer_row.items()}
            for column in [c for c in row if c != lead and c in reduced]:
                coefficient = row[column]
                for other_column, value in reduced[column].items():
                    updated = row.get(other_column, 0) - coefficient * value
                    if updated == 0:
                        row.pop(other_column, None)
                    else:
                        row[other_column] = updated
            reduced[lead] = row

        return Subspace(self._ambient, [reduced[lead] for lead in sorted(reduced)])


def _as_sparse_matrix(matrix: MatrixLike) -> SparseMatrix:
    if isinstance(matrix, SparseMatrix):
        return matrix
    return SparseMatrix.from_dense(matrix)


def _check_same_ambient(left: Subspace, right: Subspace) -> None:
    if left.ambient != right.ambient:
        raise DimensionMismatchError(
            "Subspaces live in different spaces: {} != {}".format(left.ambient, right.ambient)
        )


def rref(matrix: MatrixLike) -> Tuple[Subspace, int]:
    matrix = _as_sparse_matrix(matrix)
    row_space = Subspace.spanned_by(matrix.n_cols, list(matrix))
    return row_space, row_space.dim


def kernel(matrix: MatrixLike) -> Subspace:
    matrix = _as_sparse_matrix(matrix)
    row_space, _ = rref(matrix)
    pivot_rows = dict(zip(row_space.pivots, row_space.rows))

    basis = []
    for free in range(matrix.n_cols):
        if free in pivot_rows:
            continue
        vector = {free: Fraction(1)}
        for pivot, row in pivot_rows.items():
            if free in row:
                vector[pivot] = -row[free]
        basis.append(vector)
    return Subspace.spanned_by(matrix.n_cols, basis)


def membership(space: Subspace, vector: VectorLike) -> Optional[List[Fraction]]:
    return space.coordinates(vector)


def subspace_sum(left: Subspace, right: Subspace) -> Subspace:
    _check_same_ambient(left, right)
    return Subspace.spanned_by(left.ambient, list(left.rows) + list(right.rows))


def intersect(left: Subspace, right: Subspace) -> Subspace:
    _check_same_ambient(left, right)
    annihilators = list(kernel(left.as_matrix()).rows) + list(kernel(right.as_matrix()).rows)
    return kernel(SparseMatrix(len(annihilators), left.ambient, annihilators))


def radical(gram: MatrixLike) -> Subspace:
    gram = _as_sparse_matrix(gram)
    rows, columns = gram.shape
    if rows != columns:
        raise DimensionMismatchError("Gram matrix must be square, got {}x{}".format(rows, columns))
    return kernel(gram)
