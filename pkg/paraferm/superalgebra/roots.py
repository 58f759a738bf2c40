import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from paraferm.exceptions import InternalConsistencyError, InvalidArgumentError
from paraferm.superalgebra.algebra import AlgebraElement, Charge, LieSuperalgebra
from paraferm.utils import negate_vector, to_fraction


class RootKind(enum.Enum):
    EVEN_LONG = "even-long"
    EVEN_SHORT = "even-short"
    ODD = "odd"


_KIND_BY_LENGTH = {
    (0, Fraction(2)): RootKind.EVEN_LONG,
    (0, Fraction(1)): RootKind.EVEN_SHORT,
    (1, Fraction(1, 2)): RootKind.ODD,
}


@dataclass(frozen=True)
class Root:
    vector: Charge
    kind: RootKind

    @property
    def positive(self) -> bool:
        for coordinate in self.vector:
            if coordinate:
                return coordinate > 0
        return False

    @property
    def is_even(self) -> bool:
        return self.kind is not RootKind.ODD

    def __neg__(self) -> "Root":
        return Root(negate_vector(self.vector), self.kind)


@dataclass(frozen=True)
class RootDatum:
    roots: Tuple[Root, ...]
    highest_root: Root
    root_space: Dict[Charge, int]

    def __contains__(self, vector: Charge) -> bool:
        return tuple(vector) in self.root_space

    def get(self, vector: Charge) -> Optional[Root]:
        for root in self.roots:
            if root.vector == tuple(vector):
                return root
        return None

    def of_kind(self, kind: RootKind, positive: Optional[bool] = None) -> List[Root]:
        return [
            root for root in self.roots
            if root.kind is kind and (positive is None or root.positive == positive)
        ]

    @property
    def long_positive(self) -> List[Root]:
        return self.of_kind(RootKind.EVEN_LONG, positive=True)

    @property
    def short_positive(self) -> List[Root]:
        return self.of_kind(RootKind.EVEN_SHORT, positive=True)

    @property
    def even_positive(self) -> List[Root]:
        return self.long_positive + self.short_positive

    @property
    def even_roots(self) -> List[Root]:
        return [root for root in self.roots if root.is_even]

    @property
    def odd_positive(self) -> List[Root]:
        return self.of_kind(RootKind.ODD, positive=True)

    def counts(self) -> Dict[RootKind, int]:
        return {kind: len(self.of_kind(kind)) for kind in RootKind}


@dataclass(frozen=True)
class ChevalleyData:
    """Normalized generators of the rank-one subalgebra attached to an even positive root."""
    root: Root
    e_plus: AlgebraElement
    h: AlgebraElement
    e_minus: AlgebraElement
    x_plus: Optional[AlgebraElement] = None
    x_minus: Optional[AlgebraElement] = None

    @property
    def has_odd_pair(self) -> bool:
        return self.x_plus is not None


def invert_matrix(matrix: Sequence[Sequence[Fraction]]) -> Tuple[Tuple[Fraction, ...], ...]:
    inverse = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in matrix]).inv()
    return tuple(
        tuple(to_fraction(inverse[i, j]) for j in range(inverse.cols))
        for i in range(inverse.rows)
    )


def classify_roots(algebra: LieSuperalgebra) -> RootDatum:
    charges = algebra.charges
    roots: List[Root] = []
    root_space: Dict[Charge, int] = {}

    for index in range(algebra.dim):
        if index in algebra.cartan:
            continue
        charge = charges[index]
        if not any(charge):
            raise InternalConsistencyError(
                "{} has zero charge but is not in the Cartan basis".format(algebra.labels[index])
            )
        if charge in root_space:
            raise InternalConsistencyError(
                "Root space {} is not one-dimensional".format(charge)
            )
        length = algebra.charge_pairing(charge, charge)
        kind = _KIND_BY_LENGTH.get((algebra.parities[index], length))
        if kind is None:
            raise InternalConsistencyError(
                "{} has parity {} and squared length {}".format(
                    algebra.labels[index], algebra.parities[index], length
                )
            )
        roots.append(Root(charge, kind))
        root_space[charge] = index

    if not roots:
        raise InternalConsistencyError("{} has no roots".format(algebra.name))

    highest_root = max(roots, key=lambda root: root.vector)
    return RootDatum(tuple(roots), highest_root, root_space)


def root_generators(algebra: LieSuperalgebra, root: Charge) -> ChevalleyData:
    datum = algebra.root_datum
    found = datum.get(tuple(root))
    if found is None or not found.is_even or not found.positive:
        raise InvalidArgumentError("{} is not an even positive root of {}".format(root, algebra.name))

    vector = found.vector
    length = algebra.charge_pairing(vector, vector)
    h = (Fraction(2) / length) * algebra.cartan_element(vector)
    e_plus = algebra.element(datum.root_space[vector])
    e_minus = algebra.element(datum.root_space[negate_vector(vector)])

    x_plus = x_minus = None
    if found.kind is RootKind.EVEN_LONG and all(coordinate % 2 == 0 for coordinate in vector):
        half = tuple(coordinate // 2 for coordinate in vector)
        if half in datum.root_space:
            x_plus = algebra.element(datum.root_space[half])
            x_minus = algebra.element(datum.root_space[negate_vector(half)])

    return ChevalleyData(found, e_plus, h, e_minus, x_plus, x_minus)
