from .gram import anti_involution, contravariant_gram
from .monomial import PbwMonomial
from .space import VacuumSpace
from .state import State
from .vectors import (
    central_charge,
    dual_basis,
    heisenberg_virasoro,
    lowered_singular_vector,
    parafermion_virasoro,
    root_level,
    singular_vector,
    sugawara,
    translation,
    virasoro_products,
)

__all__ = (
    'VacuumSpace',
    'PbwMonomial',
    'State',
    'anti_involution',
    'contravariant_gram',
    'central_charge',
    'dual_basis',
    'sugawara',
    'heisenberg_virasoro',
    'parafermion_virasoro',
    'translation',
    'singular_vector',
    'lowered_singular_vector',
    'root_level',
    'virasoro_products',
)
