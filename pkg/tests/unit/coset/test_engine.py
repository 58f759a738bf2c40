import pytest

from paraferm.coset import DimStatus, GeneratorKind, IdealMethod, ParafermionCoset
from paraferm.exceptions import CutoffExceededError, FlaggedSeedError, InvalidArgumentError
from paraferm.vacuum import PbwMonomial, State, lowered_singular_vector, parafermion_virasoro
from tests.conftest import OSP2, OSP4, SL2


class TestConstruction:

    def test_default_headroom(self, osp2_coset):
        assert osp2_coset.headroom == 2
        assert osp2_coset.working_cutoff == 5

    def test_rejects_bad_cutoff(self):
        with pytest.raises(InvalidArgumentError):
            ParafermionCoset(OSP2, 1, 0)

    def test_rejects_negative_headroom(self):
        with pytest.raises(InvalidArgumentError):
            ParafermionCoset(OSP2, 1, 3, headroom=-1)

    def test_small_headroom_warns(self):
        with pytest.warns(UserWarning):
            ParafermionCoset(OSP2, 1, 3, headroom=1)


class TestCommutant:

    def test_charge_zero_block_dims(self, osp2_coset):
        assert list(osp2_coset.charge_block_dims())[:3] == [1, 1, 4]

    def test_osp2_dims(self, osp2_coset):
        assert list(osp2_coset.commutant_dims())[:3] == [1, 0, 2]

    def test_sl2_dims(self, sl2_coset):
        assert list(sl2_coset.commutant_dims())[:3] == [1, 0, 1]

    def test_dims_are_exact(self, osp2_coset):
        assert set(osp2_coset.commutant_dims().statuses) == {DimStatus.EXACT}

    def test_virasoro_vector_commutes(self, osp2_coset):
        omega = parafermion_virasoro(osp2_coset.space)
        assert osp2_coset.annihilation_failures(omega) == []
        vector = osp2_coset.space.coordinates(omega, 2)
        assert osp2_coset.commutant_basis(2).contains(vector)

    def test_cartan_mode_is_not_in_commutant(self, osp2_coset):
        state = osp2_coset.space.word((OSP2.index_of("h1"), -1))
        assert osp2_coset.annihilation_failures(state) == [("h1", 1)]


class TestGenerators:

    def test_osp2_family(self, osp2_coset):
        generators = osp2_coset.parafermion_generators()
        assert len(generators) == 4
        assert generators.names == ["omega[2]", "omega_bar[2]", "W3[2]", "W3_bar[2]"]
        assert [g.weight for g in generators] == [2, 2, 3, 3]

    def test_sl2_family(self, sl2_coset):
        generators = sl2_coset.parafermion_generators()
        assert [g.kind for g in generators] == [GeneratorKind.OMEGA, GeneratorKind.W3]

    def test_osp4_count(self):
        engine = ParafermionCoset(OSP4, 1, 3)
        generators = engine.parafermion_generators()
        assert len(generators) == OSP4.dim - OSP4.rank
        short = OSP4.root_datum.short_positive[0]
        assert len(generators.for_root(short)) == 2
        assert len(generators.of_kind(GeneratorKind.OMEGA_BAR)) == 2

    @pytest.mark.parametrize("level", [1, 2, 3])
    def test_annihilated_at_several_levels(self, level):
        engine = ParafermionCoset(OSP2, level, 3, headroom=0)
        for generator in engine.parafermion_generators():
            assert engine.annihilation_failures(generator.state) == [], generator.name

    def test_needs_weight_three(self):
        engine = ParafermionCoset(OSP2, 1, 1, headroom=1)
        with pytest.raises(CutoffExceededError):
            engine.parafermion_generators()

    def test_theorem_seeds(self, osp2_coset):
        seeds = osp2_coset.theorem_seeds()
        assert len(seeds) == 3
        assert [seed.weight for seed in seeds] == [1, 3, 3]
        assert all(osp2_coset.space.charge(seed) == (0,) for seed in seeds)


class TestClosure:

    def test_vacuum_only(self, osp2_coset):
        result = osp2_coset.closure_generate([])
        assert list(result.dims) == [1, 0, 0, 0]
        assert result.stabilized

    def test_heisenberg_subalgebra(self, osp2_coset):
        seed = osp2_coset.space.word((OSP2.index_of("h1"), -1))
        result = osp2_coset.closure_generate([seed])
        assert list(result.dims) == [1, 1, 2, 3]
        assert set(result.dims.statuses) == {DimStatus.LOWER_BOUND}

    def test_flagged_seed(self, osp2_coset):
        with pytest.raises(FlaggedSeedError):
            osp2_coset.closure_generate([State(State.vacuum(), truncated=True)])

    def test_seed_above_limit(self, osp2_coset):
        seed = State.monomial(PbwMonomial(((6, OSP2.index_of("h1")),)))
        with pytest.raises(CutoffExceededError):
            osp2_coset.closure_generate([seed])


class TestIdeals:

    def test_radical_blocks(self, osp2_coset):
        assert osp2_coset.j_radical_block(1).dim == 0
        assert osp2_coset.j_radical_block(2, (4,)).dim == 1

    def test_closure_agrees_with_radical(self, osp2_coset):
        model = osp2_coset.ideal_J()
        assert model.method is IdealMethod.BOTH_AGREE
        assert model.mismatches == []
        assert list(model.j_dims((0,)))[:2] == [0, 0]

    def test_radical_only(self, osp2_coset):
        model = osp2_coset.ideal_J(IdealMethod.RADICAL)
        assert model.j_closure == {}
        assert model.j_block(2, (4,)).dim == 1

    def test_quotient_dims(self, osp2_coset):
        assert list(osp2_coset.quotient_dims())[:3] == [1, 0, 1]

    def test_quotient_identity(self, osp2_coset):
        model = osp2_coset.ideal_I_tilde()
        expected = [n - i for n, i in zip(model.commutant_dims, model.i_tilde_dims)]
        assert list(model.quotient_dims) == expected

    def test_sl2_level_one_quotient_is_trivial(self, sl2_coset):
        assert list(sl2_coset.quotient_dims()) == [1, 0, 0, 0]

    def test_lowered_vector_in_i_tilde(self, osp2_coset):
        vector = lowered_singular_vector(osp2_coset.space)
        assert osp2_coset.in_i_tilde(vector)

    def test_virasoro_vector_not_in_i_tilde(self, osp2_coset):
        assert not osp2_coset.in_i_tilde(parafermion_virasoro(osp2_coset.space))

    def test_charged_state_not_in_i_tilde(self, osp2_coset):
        e = OSP2.index_of("e(2)")
        assert not osp2_coset.in_i_tilde(osp2_coset.space.word((e, -1), (e, -1)))

    def test_membership_above_cutoff(self, osp2_coset):
        state = osp2_coset.space.word((OSP2.index_of("h1"), -4))
        with pytest.raises(CutoffExceededError):
            osp2_coset.in_i_tilde(state)

    def test_to_dict(self, osp2_coset):
        payload = osp2_coset.ideal_I_tilde().to_dict()
        assert payload["method"] == "radical"
        assert payload["K"]["dims"][:3] == [1, 0, 1]
        assert payload["K"]["status"][0] == "exact"


@pytest.mark.slow
class TestStatements:

    def test_generated_subalgebra_meets_commutant(self, osp2_coset):
        assert list(osp2_coset.generated_subalgebra().dims) == list(osp2_coset.commutant_dims())

    def test_image_meets_quotient(self, osp2_coset):
        image = osp2_coset.image_dims(osp2_coset.generated_subalgebra())
        assert list(image) == list(osp2_coset.quotient_dims())

    def test_ideal_generated_by_lowered_vector(self, osp2_coset):
        comparison = osp2_coset.check_prop_4_3()
        assert comparison.outside_target == []
        assert comparison.agrees

    def test_long_root_family(self, osp2_coset):
        root = OSP2.root_datum.long_positive[0]
        comparison = osp2_coset.check_prop_4_4(root)
        assert comparison.lowered_vector_in_ideal
        assert comparison.rank_one_algebra == "osp(1|2)"
        assert comparison.exceeds == []
        assert comparison.agrees

    def test_rejects_odd_root(self, osp2_coset):
        root = OSP2.root_datum.odd_positive[0]
        with pytest.raises(InvalidArgumentError):
            osp2_coset.check_prop_4_4(root)

    def test_headroom_does_not_change_exact_dims(self, osp2_coset):
        raised = ParafermionCoset(OSP2, 1, 3, headroom=osp2_coset.headroom + 2)
        for current, larger in (
                (osp2_coset.commutant_dims(), raised.commutant_dims()),
                (osp2_coset.quotient_dims(), raised.quotient_dims()),
                (osp2_coset.ideal_J().j_dims((0,)), raised.ideal_J().j_dims((0,))),
        ):
            for weight, status in enumerate(current.statuses):
                if status is DimStatus.EXACT:
                    assert current[weight] == larger[weight], weight

    def test_level_two_ideal_agrees(self):
        model = ParafermionCoset(OSP2, 2, 4).ideal_J()
        assert model.method is IdealMethod.BOTH_AGREE
        assert model.mismatches == []


@pytest.mark.slow
class TestRankTwoFamilies:

    def test_short_root_families_match_sl2(self, osp4_coset):
        for root in OSP4.root_datum.short_positive:
            comparison = osp4_coset.check_prop_4_4(root)
            assert comparison.root_level == 2
            assert comparison.rank_one_algebra == "sl2"
            assert comparison.lowered_vector_in_ideal
            assert list(comparison.rank_one_dims) == [1, 0, 1, 1]
            assert comparison.agrees, root.vector

    def test_long_root_families_match_osp2(self, osp4_coset):
        for root in OSP4.root_datum.long_positive:
            comparison = osp4_coset.check_prop_4_4(root)
            assert comparison.root_level == 1
            assert comparison.rank_one_algebra == "osp(1|2)"
            assert comparison.lowered_vector_in_ideal
            assert comparison.agrees, root.vector

    def test_lowered_vector_in_i_tilde(self, osp4_coset):
        assert osp4_coset.in_i_tilde(lowered_singular_vector(osp4_coset.space))
