from fractions import Fraction
from typing import Dict, List

from paraferm.checks.base import Check, CheckReport, Verdict
from paraferm.coset import GeneratorKind
from paraferm.superalgebra import validate_algebra
from paraferm.utils import fraction_to_str
from paraferm.vacuum import (
    State,
    VacuumSpace,
    central_charge,
    heisenberg_virasoro,
    root_level,
    sugawara,
    virasoro_products,
)


def virasoro_defects(space: VacuumSpace, omega: State, charge: Fraction) -> List[str]:
    """Ways in which `omega` fails ω_1ω = 2ω, ω_2ω = 0, ω_3ω = (c/2)𝟙."""
    defects = []
    zero, one, two = virasoro_products(space, omega, strict=True)
    if zero != 2 * omega:
        defects.append("ω_1 ω != 2ω")
    if not one.is_zero():
        defects.append("ω_2 ω != 0")
    if two != (charge / 2) * space.vacuum():
        defects.append("ω_3 ω != c/2 𝟙 with c = {}".format(fraction_to_str(charge)))
    return defects


def is_virasoro_multiple(space: VacuumSpace, vector: State) -> bool:
    """Whether some rescaling λ·vector satisfies (λv)_1(λv) = 2λv, i.e. v_1 v is a nonzero multiple of v."""
    square = space.composite_mode(vector, 1, vector, strict=True)
    if square.is_zero() or vector.is_zero():
        return False
    pivot = next(iter(vector))
    ratio = square.coefficient(pivot) / vector[pivot]
    return ratio != 0 and square == ratio * vector


class RelationsCheck(Check):
    check_id = "relations"

    def run(self) -> CheckReport:
        validation = validate_algebra(self.engine.algebra)
        verdict = Verdict.VERIFIED if validation.passed else Verdict.FAILED
        return CheckReport(
            self.check_id,
            verdict,
            details={"entries": {entry.name: entry.passed for entry in validation.entries}},
            messages=["{}: {}".format(entry.name, entry.witness) for entry in validation.failures()],
        )


class CentralChargeCheck(Check):
    check_id = "central_charge"

    def run(self) -> CheckReport:
        engine = self.engine
        space = engine.space
        rank = engine.algebra.rank
        c_affine = central_charge(engine.algebra, engine.level)

        omega_affine = sugawara(space)
        omega_heisenberg = heisenberg_virasoro(space)
        omega = omega_affine - omega_heisenberg

        messages = []
        for name, vector, charge in (
                ("omega_aff", omega_affine, c_affine),
                ("omega_h", omega_heisenberg, Fraction(rank)),
                ("omega", omega, c_affine - rank),
        ):
            messages.extend("{}: {}".format(name, defect) for defect in virasoro_defects(space, vector, charge))

        failures = engine.annihilation_failures(omega)
        messages.extend("omega is not annihilated by {}({})".format(label, mode) for label, mode in failures)

        return CheckReport(
            self.check_id,
            Verdict.FAILED if messages else Verdict.VERIFIED,
            details={
                "c_aff": fraction_to_str(c_affine),
                "c_heisenberg": rank,
                "c_coset": fraction_to_str(c_affine - rank),
            },
            messages=messages,
        )


class RemarkCheck(Check):
    """K_0 = ℂ𝟙, K_1 = 0, even generators, ω_α Virasoro and ω̄_α not."""
    check_id = "remark_3_2"

    def run(self) -> CheckReport:
        engine = self.engine
        space = engine.space
        quotient = engine.quotient_dims()
        messages = []

        if quotient[0] != 1:
            messages.append("dim K_0 = {}".format(quotient[0]))
        if len(quotient) > 1 and quotient[1] != 0:
            messages.append("dim K_1 = {}".format(quotient[1]))

        generators = engine.parafermion_generators()
        charges: Dict[str, str] = {}
        for generator in generators:
            if any(space.parity_of(monomial) for monomial in generator.state):
                messages.append("{} is not even".format(generator.name))
            if generator.kind is GeneratorKind.OMEGA:
                k_alpha = root_level(engine.algebra, engine.level, generator.root.vector)
                c_alpha = Fraction(2 * (k_alpha - 1), k_alpha + 2)
                charges[generator.name] = fraction_to_str(c_alpha)
                messages.extend(
                    "{}: {}".format(generator.name, defect)
                    for defect in virasoro_defects(space, generator.state, c_alpha)
                )
            elif generator.kind is GeneratorKind.OMEGA_BAR and is_virasoro_multiple(space, generator.state):
                messages.append("{} rescales to a Virasoro vector".format(generator.name))

        return CheckReport(
            self.check_id,
            Verdict.FAILED if messages else Verdict.VERIFIED,
            tables={"K": quotient},
            details={"central_charges": charges},
            messages=messages,
        )
