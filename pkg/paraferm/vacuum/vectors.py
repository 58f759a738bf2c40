"""Distinguished vectors of V(k, 0): conformal vectors and the singular vector."""
import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from paraferm.exceptions import CutoffExceededError, InvalidArgumentError
from paraferm.superalgebra import AlgebraElement, LieSuperalgebra, root_generators
from paraferm.superalgebra.algebra import Charge
from paraferm.superalgebra.roots import invert_matrix
from paraferm.vacuum.space import VacuumSpace
from paraferm.vacuum.state import State

log = logging.getLogger(__name__)


def dual_basis(algebra: LieSuperalgebra) -> List[AlgebraElement]:
    """b^j with ⟨b_i, b^j⟩ = δ_ij."""
    table = [[algebra.form_basis(i, j) for j in range(algebra.dim)] for i in range(algebra.dim)]
    inverse = invert_matrix(table)
    return [
        AlgebraElement(algebra, {l: inverse[l][j] for l in range(algebra.dim) if inverse[l][j]})
        for j in range(algebra.dim)
    ]


def central_charge(algebra: LieSuperalgebra, level: int) -> Fraction:
    """k·sdim(g) / (k + shift); kn(2n-1)/(k+n+½) for osp(1|2n)."""
    return Fraction(level * algebra.superdimension) / (level + algebra.sugawara_shift)


def _require_weight(space: VacuumSpace, weight: int, what: str) -> None:
    if weight > space.cutoff:
        raise CutoffExceededError(
            "{} has weight {} above the working cutoff {}".format(what, weight, space.cutoff)
        )


def sugawara(space: VacuumSpace) -> State:
    """ω_aff = 1/(2(k + shift)) Σ_i b^i(-1) b_i(-1)𝟙."""
    _require_weight(space, 2, "The Sugawara vector")
    algebra = space.algebra
    total = State()
    for index, dual in enumerate(dual_basis(algebra)):
        total = total + space.word((dual, -1), (index, -1))
    return Fraction(1, 2) / (space.level + algebra.sugawara_shift) * total


def _cartan_square(space: VacuumSpace) -> State:
    """Σ over an orthonormal basis of 𝔥 of h(-1)h(-1)𝟙, through the inverse Gram matrix."""
    algebra = space.algebra
    inverse = algebra.cartan_gram_inverse
    total = State()
    for i, left in enumerate(algebra.cartan):
        for j, right in enumerate(algebra.cartan):
            if inverse[i][j]:
                total = total + inverse[i][j] * space.word((left, -1), (right, -1))
    return total


def heisenberg_virasoro(space: VacuumSpace) -> State:
    _require_weight(space, 2, "The Heisenberg Virasoro vector")
    return Fraction(1, 2 * space.level) * _cartan_square(space)


def parafermion_virasoro(space: VacuumSpace) -> State:
    """ω = ω_aff - ω_𝔥, the conformal vector of the commutant."""
    return sugawara(space) - heisenberg_virasoro(space)


def translation(space: VacuumSpace, state: State) -> State:
    """L(-1) = (ω_aff)_0."""
    return space.composite_mode(sugawara(space), 0, state)


def raising_power(space: VacuumSpace, element: AlgebraElement, power: int) -> State:
    """element(-1)^power 𝟙."""
    state = space.vacuum()
    for _ in range(power):
        state = space.apply_mode(element, -1, state)
    return state


def singular_vector(space: VacuumSpace, root: Optional[Charge] = None) -> State:
    """e_θ(-1)^{k+1}𝟙, or e_α(-1)^{k_α+1}𝟙 for another even positive root α."""
    algebra = space.algebra
    if root is None:
        root = algebra.root_datum.highest_root.vector
    power = root_level(algebra, space.level, root) + 1
    _require_weight(space, power, "The singular vector")
    data = root_generators(algebra, root)
    return raising_power(space, data.e_plus, power)


def root_level(algebra: LieSuperalgebra, level: int, root: Charge) -> int:
    """k_α = 2k / ⟨α, α⟩."""
    value = Fraction(2 * level) / algebra.charge_pairing(tuple(root), tuple(root))
    if value.denominator != 1:
        raise InvalidArgumentError("k_α = {} is not an integer for α = {}".format(value, tuple(root)))
    return int(value)


def lowered_singular_vector(space: VacuumSpace, root: Optional[Charge] = None) -> State:
    """e_{-α}(0)^{k_α+1} e_α(-1)^{k_α+1}𝟙, a charge zero vector of weight k_α + 1."""
    algebra = space.algebra
    if root is None:
        root = algebra.root_datum.highest_root.vector
    power = root_level(algebra, space.level, root) + 1
    data = root_generators(algebra, root)
    state = singular_vector(space, root)
    for _ in range(power):
        state = space.apply_mode(data.e_minus, 0, state)
    log.debug("Lowered singular vector for %s has %d terms", tuple(root), len(state))
    return state


def virasoro_products(space: VacuumSpace, omega: State, strict: bool = False) -> Tuple[State, State, State]:
    """(ω_1 ω, ω_2 ω, ω_3 ω), i.e. L(0)ω, L(1)ω and L(2)ω."""
    return tuple(space.composite_mode(omega, mode, omega, strict=strict) for mode in (1, 2, 3))
