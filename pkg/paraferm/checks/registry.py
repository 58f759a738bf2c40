from typing import Dict, List, Type

from paraferm.checks.algebraic import CentralChargeCheck, RelationsCheck, RemarkCheck
from paraferm.checks.base import Check, CheckReport
from paraferm.checks.generation import AffineGenerationCheck, CommutantGenerationCheck, QuotientGenerationCheck
from paraferm.checks.ideals import (
    IdealCrossCheck,
    IdealGenerationCheck,
    LoweredVectorCheck,
    RootSubalgebraCheck,
)
from paraferm.coset import ParafermionCoset
from paraferm.exceptions import UnknownCheckError

CHECKS: Dict[str, Type[Check]] = {
    check.check_id: check
    for check in (
        RelationsCheck,
        CentralChargeCheck,
        RemarkCheck,
        AffineGenerationCheck,
        CommutantGenerationCheck,
        QuotientGenerationCheck,
        LoweredVectorCheck,
        IdealGenerationCheck,
        RootSubalgebraCheck,
        IdealCrossCheck,
    )
}


def check_ids() -> List[str]:
    return list(CHECKS)


def get_check(check_id: str) -> Type[Check]:
    try:
        return CHECKS[check_id]
    except KeyError:
        raise UnknownCheckError(
            "Unknown check {!r}; expected one of {}".format(check_id, ", ".join(CHECKS))
        ) from None


def verify(check_id: str, engine: ParafermionCoset) -> CheckReport:
    return get_check(check_id)(engine).verify()
