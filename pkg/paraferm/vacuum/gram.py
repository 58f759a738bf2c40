import logging
from fractions import Fraction
from typing import Dict, List, Optional

from paraferm.exactla import SparseMatrix
from paraferm.superalgebra import AlgebraElement, LieSuperalgebra
from paraferm.superalgebra.algebra import Charge
from paraferm.utils import negate_vector
from paraferm.vacuum.monomial import PbwMonomial
from paraferm.vacuum.space import VacuumSpace
from paraferm.vacuum.state import State

log = logging.getLogger(__name__)


def anti_involution(algebra: LieSuperalgebra) -> List[AlgebraElement]:
    """η on the basis: h -> h, e_α -> e_{-α}, x_β -> x_{-β} and x_{-β} -> -x_β for β > 0 odd."""
    datum = algebra.root_datum
    images: List[AlgebraElement] = []
    for index in range(algebra.dim):
        if index in algebra.cartan:
            images.append(algebra.element(index))
            continue
        charge = algebra.charges[index]
        root = datum.get(charge)
        partner = datum.root_space[negate_vector(charge)]
        sign = -1 if algebra.parities[index] and not root.positive else 1
        images.append(algebra.element(partner, sign))
    return images


def _pair_with(space: VacuumSpace, adjoints: List[AlgebraElement], bra: PbwMonomial, ket: State) -> Fraction:
    state = ket
    for mode, index in bra:
        state = space.apply_mode(adjoints[index], mode, state)
        if state.is_zero():
            return Fraction(0)
    return state.coefficient(PbwMonomial())


def contravariant_gram(space: VacuumSpace, weight: int, charge: Optional[Charge] = None) -> SparseMatrix:
    """Gram matrix of ⟨𝟙, 𝟙⟩ = 1 and ⟨a(-n)u, v⟩ = ⟨u, η(a)(n)v⟩ on one block."""
    basis = space.enumerate_basis(weight, charge)
    adjoints = anti_involution(space.algebra)
    rows: List[Dict[int, Fraction]] = []
    for bra in basis:
        row = {}
        for column, ket in enumerate(basis):
            value = _pair_with(space, adjoints, bra, State.monomial(ket))
            if value:
                row[column] = value
        rows.append(row)
    log.debug("Contravariant Gram of block (%d, %s): %d x %d", weight, charge, len(basis), len(basis))
    return SparseMatrix(len(basis), len(basis), rows)
