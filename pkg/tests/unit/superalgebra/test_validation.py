import dataclasses
from fractions import Fraction

import pytest

from paraferm.superalgebra import validate_algebra
from tests.conftest import OSP2, OSP4, SL2


def with_bracket(algebra, left, right, coefficients):
    structure_constants = dict(algebra.structure_constants)
    structure_constants[left, right] = coefficients
    return dataclasses.replace(algebra, structure_constants=structure_constants)


class TestValidateAlgebra:

    @pytest.mark.parametrize("algebra", [OSP2, OSP4, SL2], ids=["osp(1|2)", "osp(1|4)", "sl2"])
    def test_builtin_algebras_pass(self, algebra):
        report = validate_algebra(algebra)
        assert report.passed, report.failures()
        assert report.failures() == []

    def test_entry_lookup(self, osp2):
        report = validate_algebra(osp2)
        assert report["super_jacobi"].passed
        assert report["super_jacobi"].witness is None
        with pytest.raises(KeyError):
            report["no_such_check"]

    def test_perturbed_anticommutator_breaks_jacobi(self, osp2):
        x, y, h = osp2.index_of("x(1)"), osp2.index_of("x(-1)"), osp2.index_of("h1")
        broken = with_bracket(osp2, x, y, {h: Fraction(2)})
        report = validate_algebra(broken)
        assert not report.passed
        assert not report["super_jacobi"].passed
        assert report["super_jacobi"].witness is not None
        assert not report["super_antisymmetry"].passed
        assert report["form_parity"].passed

    def test_missing_bracket_is_reported(self, sl2):
        e, f = sl2.index_of("e(2)"), sl2.index_of("e(-2)")
        broken = with_bracket(sl2, e, f, {})
        report = validate_algebra(broken)
        assert not report["super_antisymmetry"].passed
        assert not report["root_relations"].passed
