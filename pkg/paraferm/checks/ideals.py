from typing import Dict, List

from paraferm.checks.base import Check, CheckReport, Verdict, compare_lower_bound
from paraferm.coset import IdealMethod
from paraferm.vacuum import lowered_singular_vector, root_level, singular_vector


class IdealCrossCheck(Check):
    """J by raw-mode closure of the singular vector against J as the Gram radical."""
    check_id = "ideal_j"

    def run(self) -> CheckReport:
        engine = self.engine
        space = engine.space
        model = engine.ideal_J(IdealMethod.BOTH_AGREE)
        messages = []

        for (weight, charge), block in sorted(model.j_radical.items()):
            if weight <= engine.level and block.dim:
                messages.append("J is nonzero at weight {} charge {}".format(weight, list(charge)))

        top = engine.level + 1
        if top <= engine.report_cutoff:
            vector = singular_vector(space)
            charge = space.charge(vector)
            if not engine.j_radical_block(top, charge).contains(space.coordinates(vector, top, charge)):
                messages.append("the singular vector is outside the Gram radical")

        if messages:
            verdict = Verdict.FAILED
        elif model.method is IdealMethod.MISMATCH:
            verdict = Verdict.INCONCLUSIVE
            messages.extend(
                "weight {} charge {}: closure {} radical {}".format(w, list(c), closed, exact)
                for w, c, closed, exact in model.mismatches
            )
        else:
            verdict = Verdict.VERIFIED

        return CheckReport(
            self.check_id,
            verdict,
            tables={"J0": model.j_dims(space.zero_charge)},
            details={
                "method": model.method.value,
                "blocks": len(model.j_radical),
                "nonzero_blocks": sum(1 for block in model.j_radical.values() if block.dim),
            },
            messages=messages,
        )


class LoweredVectorCheck(Check):
    """e_{-θ}(0)^{k+1}e_θ(-1)^{k+1}𝟙 is a nonzero vector of Ĩ."""
    check_id = "lemma_4_2"

    def run(self) -> CheckReport:
        engine = self.engine
        weight = engine.level + 1
        if weight > engine.report_cutoff:
            return CheckReport(
                self.check_id,
                Verdict.INCONCLUSIVE,
                messages=["the vector has weight {} above the report cutoff".format(weight)],
            )

        vector = lowered_singular_vector(engine.space)
        messages = []
        if vector.is_zero():
            messages.append("the lowered singular vector vanishes")
        elif not engine.in_i_tilde(vector):
            messages.append("the lowered singular vector is outside Ĩ")
        return CheckReport(
            self.check_id,
            Verdict.FAILED if messages else Verdict.VERIFIED,
            details={"weight": weight, "terms": len(vector)},
            messages=messages,
        )


class IdealGenerationCheck(Check):
    """Ĩ is generated, as an ideal of N, by the lowered singular vector."""
    check_id = "prop_4_3"

    def run(self) -> CheckReport:
        comparison = self.engine.check_prop_4_3()
        messages = ["closure leaves Ĩ at weight {}".format(w) for w in comparison.outside_target]
        verdict = Verdict.FAILED if messages else compare_lower_bound(comparison.closure.dims, comparison.target)
        return CheckReport(
            self.check_id,
            verdict,
            tables={"closure": comparison.closure.dims, "I_tilde": comparison.target},
            details=comparison.closure.to_dict(),
            messages=messages,
        )


class RootSubalgebraCheck(Check):
    """Each root family generates a copy of the rank one parafermion algebra inside K."""
    check_id = "prop_4_4"

    def run(self) -> CheckReport:
        engine = self.engine
        verdicts: List[Verdict] = []
        tables = {}
        details: Dict[str, object] = {}
        messages = []

        for root in engine.algebra.root_datum.even_positive:
            name = ",".join(str(c) for c in root.vector)
            k_alpha = root_level(engine.algebra, engine.level, root.vector)
            if k_alpha + 1 > engine.report_cutoff:
                verdicts.append(Verdict.INCONCLUSIVE)
                messages.append("root {}: k_α + 1 = {} above the report cutoff".format(name, k_alpha + 1))
                continue

            comparison = engine.check_prop_4_4(root)
            tables["P[{}]".format(name)] = comparison.subfamily_dims
            tables["K1[{}]".format(name)] = comparison.rank_one_dims
            details[name] = {"k_alpha": k_alpha, "rank_one": comparison.rank_one_algebra}

            if not comparison.lowered_vector_in_ideal:
                verdicts.append(Verdict.FAILED)
                messages.append("root {}: lowered singular vector outside Ĩ".format(name))
            else:
                verdicts.append(compare_lower_bound(comparison.subfamily_dims, comparison.rank_one_dims))

        return CheckReport(self.check_id, Verdict.worst(verdicts), tables=tables, details=details, messages=messages)
