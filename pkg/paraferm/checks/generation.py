from paraferm.checks.base import Check, CheckReport, Verdict, compare_lower_bound


class AffineGenerationCheck(Check):
    """V(k,0)(0) is generated by h(-1)𝟙 and the charge zero quadratics."""
    check_id = "thm_2_1"

    def run(self) -> CheckReport:
        engine = self.engine
        closure = engine.closure_generate(engine.theorem_seeds())
        target = engine.charge_block_dims()
        return CheckReport(
            self.check_id,
            compare_lower_bound(closure.dims, target),
            tables={"closure": closure.dims, "V0": target},
            details=closure.to_dict(),
        )


class CommutantGenerationCheck(Check):
    """N(g,k) is generated by the root families."""
    check_id = "thm_3_1"

    def run(self) -> CheckReport:
        engine = self.engine
        generators = engine.parafermion_generators()
        closure = engine.generated_subalgebra()
        target = engine.commutant_dims()
        zero = engine.space.zero_charge

        messages = []
        for w in range(engine.report_cutoff + 1):
            block = closure.block(w, zero)
            if block is not None and not block.is_subspace_of(engine.commutant_basis(w)):
                messages.append("closure leaves N at weight {}".format(w))

        verdict = Verdict.FAILED if messages else compare_lower_bound(closure.dims, target)
        return CheckReport(
            self.check_id,
            verdict,
            tables={"closure": closure.dims, "N": target},
            details={"generators": generators.names, **closure.to_dict()},
            messages=messages,
        )


class QuotientGenerationCheck(Check):
    """The images of the generators generate K(g,k) = N / Ĩ."""
    check_id = "thm_4_1"

    def run(self) -> CheckReport:
        engine = self.engine
        images = engine.image_dims(engine.generated_subalgebra())
        target = engine.quotient_dims()
        return CheckReport(
            self.check_id,
            compare_lower_bound(images, target),
            tables={"images": images, "K": target},
        )
