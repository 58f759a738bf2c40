from paraferm.checks import CheckReport, Verdict, verify
from paraferm.coset import GeneratorSet, GradedDims, ParafermionCoset
from paraferm.superalgebra import LieSuperalgebra, build_osp, build_sl2, validate_algebra
from paraferm.vacuum import PbwMonomial, State, VacuumSpace
from .constants import DEFAULT_CUTOFF, ENGINE_VERSION

__all__ = (
    'LieSuperalgebra',
    'build_osp',
    'build_sl2',
    'validate_algebra',
    'VacuumSpace',
    'PbwMonomial',
    'State',
    'ParafermionCoset',
    'GeneratorSet',
    'GradedDims',
    'CheckReport',
    'Verdict',
    'verify',
    'DEFAULT_CUTOFF',
)

__version__ = ENGINE_VERSION
