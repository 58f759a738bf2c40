from .closure import closure_generate, raw_mode_closure, split_blocks
from .dims import ClosureResult, DimStatus, GradedDims, IdealMethod, IdealModel
from .engine import IdealComparison, ParafermionCoset, SubfamilyComparison
from .generators import Generator, GeneratorKind, GeneratorSet, build_generators

__all__ = (
    'ParafermionCoset',
    'GradedDims',
    'DimStatus',
    'ClosureResult',
    'IdealMethod',
    'IdealModel',
    'IdealComparison',
    'SubfamilyComparison',
    'Generator',
    'GeneratorKind',
    'GeneratorSet',
    'build_generators',
    'closure_generate',
    'raw_mode_closure',
    'split_blocks',
)
