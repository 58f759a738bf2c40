from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from paraferm.exceptions import DimensionMismatchError
from paraferm.utils import Rational

SparseRow = Dict[int, Fraction]
VectorLike = Union[Mapping[int, Rational], Sequence[Rational]]


def as_sparse_row(vector: VectorLike, ambient: Optional[int] = None) -> SparseRow:
    if isinstance(vector, Mapping):
        items: Iterable[Tuple[int, Rational]] = vector.items()
    else:
        if ambient is not None and len(vector) != ambient:
            raise DimensionMismatchError(
                "Vector of length {} does not live in a space of dimension {}".format(len(vector), ambient)
            )
        items = enumerate(vector)

    row = {}
    for column, value in items:
        if ambient is not None and not 0 <= column < ambient:
            raise DimensionMismatchError(
                "Column {} is outside of the ambient dimension {}".format(column, ambient)
            )
        if value != 0:
            row[column] = Fraction(value)
    return row


class SparseMatrix:
    """Row-major sparse matrix over the rationals; zeros are never stored."""

    def __init__(
            self,
            n_rows: int,
            n_cols: int,
            rows: Optional[Sequence[VectorLike]] = None
    ) -> None:
        self._n_cols = n_cols
        if rows is None:
            rows = [{} for _ in range(n_rows)]
        if len(rows) != n_rows:
            raise DimensionMismatchError("Expected {} rows, got {}".format(n_rows, len(rows)))
        self._rows: List[SparseRow] = [as_sparse_row(row, n_cols) for row in rows]

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[Rational]], n_cols: Optional[int] = None) -> "SparseMatrix":
        if n_cols is None:
            n_cols = len(dense[0]) if dense else 0
        return cls(len(dense), n_cols, [list(row) for row in dense])

    @classmethod
    def from_rows(cls, n_cols: int, rows: Sequence[VectorLike]) -> "SparseMatrix":
        return cls(len(rows), n_cols, rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self._rows), self._n_cols

    @property
    def n_cols(self) -> int:
        return self._n_cols

    def row(self, index: int) -> SparseRow:
        return self._rows[index]

    def row_items(self, index: int) -> List[Tuple[int, Fraction]]:
        return sorted(self._rows[index].items())

    def __iter__(self) -> Iterator[SparseRow]:
        return iter(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __repr__(self) -> str:
        return "SparseMatrix({}x{}, nnz={})".format(len(self._rows), self._n_cols, self.nnz)

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows)

    def to_dense(self) -> List[List[Fraction]]:
        return [[row.get(column, Fraction(0)) for column in range(self._n_cols)] for row in self._rows]

    def apply(self, vector: VectorLike) -> SparseRow:
        vector = as_sparse_row(vector, self._n_cols)
        result = {}
        for index, row in enumerate(self._rows):
            total = sum((value * vector[column] for column, value in row.items() if column in vector), Fraction(0))
            if total != 0:
                result[index] = total
        return result

    def transpose(self) -> "SparseMatrix":
        columns: List[SparseRow] = [{} for _ in range(self._n_cols)]
        for index, row in enumerate(self._rows):
            for column, value in row.items():
                columns[column][index] = value
        return SparseMatrix(self._n_cols, len(self._rows), columns)
