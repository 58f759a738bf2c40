import dataclasses
from fractions import Fraction

import pytest

from paraferm.checks import (
    CHECKS,
    Check,
    CheckReport,
    Verdict,
    check_ids,
    compare_lower_bound,
    get_check,
    verify,
)
from paraferm.checks.algebraic import is_virasoro_multiple, virasoro_defects
from paraferm.coset import GradedDims, ParafermionCoset
from paraferm.exceptions import CutoffExceededError, InternalConsistencyError, UnknownCheckError
from paraferm.vacuum import parafermion_virasoro, sugawara
from tests.conftest import OSP2


class TestVerdict:

    def test_values(self):
        assert Verdict.VERIFIED.value == "verified-at-cutoff"
        assert Verdict.INCONCLUSIVE.value == "inconclusive-raise-cutoff"
        assert Verdict.FAILED.value == "FAILED"

    def test_worst(self):
        assert Verdict.worst([]) is Verdict.VERIFIED
        assert Verdict.worst([Verdict.VERIFIED, Verdict.INCONCLUSIVE]) is Verdict.INCONCLUSIVE
        assert Verdict.worst([Verdict.FAILED, Verdict.INCONCLUSIVE]) is Verdict.FAILED


class TestCompareLowerBound:

    @pytest.mark.parametrize("lower, target, verdict", [
        ([1, 0, 2], [1, 0, 2], Verdict.VERIFIED),
        ([1, 0, 1], [1, 0, 2], Verdict.INCONCLUSIVE),
        ([1, 1, 2], [1, 0, 2], Verdict.FAILED),
        ([1, 1, 1], [1, 0, 2], Verdict.FAILED),
    ])
    def test_verdicts(self, lower, target, verdict):
        assert compare_lower_bound(GradedDims.lower_bound(lower), target) is verdict


class TestRegistry:

    def test_order(self):
        assert check_ids() == [
            "relations",
            "central_charge",
            "remark_3_2",
            "thm_2_1",
            "thm_3_1",
            "thm_4_1",
            "lemma_4_2",
            "prop_4_3",
            "prop_4_4",
            "ideal_j",
        ]

    def test_lookup(self):
        assert get_check("relations").check_id == "relations"
        assert all(issubclass(check, Check) for check in CHECKS.values())

    def test_unknown(self):
        with pytest.raises(UnknownCheckError):
            get_check("thm_9_9")


class _Raising(Check):
    check_id = "raising"

    def __init__(self, engine, error):
        super().__init__(engine)
        self._error = error

    def run(self) -> CheckReport:
        raise self._error


class TestCheckBase:

    def test_consistency_error_fails(self, osp2_coset):
        report = _Raising(osp2_coset, InternalConsistencyError("broken")).verify()
        assert report.verdict is Verdict.FAILED
        assert report.messages == ["broken"]

    def test_cutoff_error_is_inconclusive(self, osp2_coset):
        with pytest.warns(UserWarning):
            report = _Raising(osp2_coset, CutoffExceededError("too high")).verify()
        assert report.verdict is Verdict.INCONCLUSIVE
        assert not report.failed

    def test_report_dict_has_no_timing(self):
        report = CheckReport("relations", Verdict.VERIFIED, tables={"K": GradedDims.exact([1, 0])}, elapsed=1.5)
        payload = report.to_dict()
        assert "elapsed" not in payload
        assert payload["tables"]["K"] == {"dims": [1, 0], "status": ["exact", "exact"]}


class TestVirasoroHelpers:

    def test_sugawara_has_no_defects(self, osp2_coset):
        space = osp2_coset.space
        assert virasoro_defects(space, sugawara(space), Fraction(2, 5)) == []

    def test_wrong_charge_is_reported(self, osp2_coset):
        space = osp2_coset.space
        defects = virasoro_defects(space, sugawara(space), Fraction(1))
        assert defects == ["ω_3 ω != c/2 𝟙 with c = 1"]

    def test_rescaled_virasoro_vector(self, osp2_coset):
        omega = parafermion_virasoro(osp2_coset.space)
        assert is_virasoro_multiple(osp2_coset.space, 3 * omega)

    def test_omega_bar_is_not_a_multiple(self, osp2_coset):
        generators = osp2_coset.parafermion_generators()
        assert not is_virasoro_multiple(osp2_coset.space, generators.states[1])


class TestChecks:

    @pytest.mark.parametrize("check_id", ["relations", "central_charge", "remark_3_2", "lemma_4_2", "ideal_j"])
    def test_osp2_level_one(self, osp2_coset, check_id):
        report = verify(check_id, osp2_coset)
        assert report.verdict is Verdict.VERIFIED, report.messages
        assert report.check_id == check_id

    def test_relations_fail_on_a_broken_algebra(self):
        x, y, h = OSP2.index_of("x(1)"), OSP2.index_of("x(-1)"), OSP2.index_of("h1")
        constants = dict(OSP2.structure_constants)
        constants[x, y] = {h: Fraction(2)}
        broken = dataclasses.replace(OSP2, structure_constants=constants)
        report = verify("relations", ParafermionCoset(broken, 1, 1, headroom=2))
        assert report.failed
        assert report.details["entries"]["super_jacobi"] is False

    def test_remark_tables(self, osp2_coset):
        report = verify("remark_3_2", osp2_coset)
        assert list(report.tables["K"])[:2] == [1, 0]
        assert report.details["central_charges"] == {"omega[2]": "0"}

    def test_lemma_needs_cutoff(self):
        engine = ParafermionCoset(OSP2, 3, 3, headroom=2)
        with pytest.warns(UserWarning):
            report = verify("lemma_4_2", engine)
        assert report.verdict is Verdict.INCONCLUSIVE

    @pytest.mark.slow
    @pytest.mark.parametrize("check_id", ["thm_2_1", "thm_3_1", "thm_4_1", "prop_4_3", "prop_4_4"])
    def test_theorems_osp2_level_one(self, osp2_coset, check_id):
        report = verify(check_id, osp2_coset)
        assert report.verdict is Verdict.VERIFIED, report.messages

    @pytest.mark.slow
    def test_sl2_level_one(self, sl2_coset):
        for check_id in check_ids():
            assert not verify(check_id, sl2_coset).failed, check_id

    @pytest.mark.slow
    @pytest.mark.parametrize("check_id", ["central_charge", "remark_3_2", "lemma_4_2", "ideal_j"])
    def test_osp4_level_one(self, osp4_coset, check_id):
        report = verify(check_id, osp4_coset)
        assert report.verdict is Verdict.VERIFIED, report.messages

    @pytest.mark.slow
    def test_osp4_central_charges(self, osp4_coset):
        report = verify("central_charge", osp4_coset)
        assert report.details["c_aff"] == "12/7"
        assert report.details["c_coset"] == "-2/7"

    @pytest.mark.slow
    def test_osp2_level_two_central_charge(self):
        report = verify("central_charge", ParafermionCoset(OSP2, 2, 3))
        assert report.verdict is Verdict.VERIFIED, report.messages
        assert report.details["c_aff"] == "4/7"
