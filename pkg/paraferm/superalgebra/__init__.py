from .algebra import AlgebraElement, LieSuperalgebra
from .osp import build_osp, build_sl2
from .roots import ChevalleyData, Root, RootDatum, RootKind, classify_roots, root_generators
from .validation import ValidationEntry, ValidationReport, validate_algebra

__all__ = (
    'LieSuperalgebra',
    'AlgebraElement',
    'build_osp',
    'build_sl2',
    'Root',
    'RootKind',
    'RootDatum',
    'ChevalleyData',
    'classify_roots',
    'root_generators',
    'ValidationEntry',
    'ValidationReport',
    'validate_algebra',
)
