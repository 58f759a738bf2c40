from .algebraic import CentralChargeCheck, RelationsCheck, RemarkCheck
from .base import Check, CheckReport, Verdict, compare_lower_bound
from .generation import AffineGenerationCheck, CommutantGenerationCheck, QuotientGenerationCheck
from .ideals import IdealCrossCheck, IdealGenerationCheck, LoweredVectorCheck, RootSubalgebraCheck
from .registry import CHECKS, check_ids, get_check, verify

__all__ = (
    'Check',
    'CheckReport',
    'Verdict',
    'compare_lower_bound',
    'RelationsCheck',
    'CentralChargeCheck',
    'RemarkCheck',
    'AffineGenerationCheck',
    'CommutantGenerationCheck',
    'QuotientGenerationCheck',
    'LoweredVectorCheck',
    'IdealGenerationCheck',
    'RootSubalgebraCheck',
    'IdealCrossCheck',
    'CHECKS',
    'check_ids',
    'get_check',
    'verify',
)
