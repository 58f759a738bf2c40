import itertools
import random
from fractions import Fraction

import pytest

from paraferm.exceptions import CutoffExceededError, InvalidArgumentError
from paraferm.utils import koszul_sign
from paraferm.vacuum import PbwMonomial, State, VacuumSpace
from tests.conftest import OSP2, SL2, label, random_state


def monomial(*factors):
    return PbwMonomial(factors)


def mode_commutator(space, a, m, b, n, state):
    algebra = space.algebra
    sign = koszul_sign(algebra.parities[a], algebra.parities[b])
    forward = space.apply_mode(a, m, space.apply_mode(b, n, state))
    backward = space.apply_mode(b, n, space.apply_mode(a, m, state))
    return forward - sign * backward


def commutator_image(space, a, m, b, n, state):
    algebra = space.algebra
    expected = space.apply_mode(algebra.bracket(algebra.element(a), algebra.element(b)), m + n, state)
    if m + n == 0:
        expected = expected + m * algebra.form_basis(a, b) * space.level * state
    return expected


def straighten_swapped(space, word, position, state):
    """Straightens `word` after rewriting the pair at `position` through the super commutator."""
    algebra = space.algebra
    (a, p), (b, q) = word[position], word[position + 1]
    before, after = list(word[:position]), list(word[position + 2:])
    sign = koszul_sign(algebra.parities[a], algebra.parities[b])
    result = sign * space.straighten(before + [(b, q), (a, p)] + after, state)
    bracket = algebra.bracket(algebra.element(a), algebra.element(b))
    result = result + space.straighten(before + [(bracket, p + q)] + after, state)
    if p + q == 0:
        result = result + p * algebra.form_basis(a, b) * space.level * space.straighten(before + after, state)
    return result


class TestConstruction:

    @pytest.mark.parametrize("level, cutoff", [(0, 4), (-1, 4), (True, 4), (1, 0), (1, -2)])
    def test_rejects_bad_arguments(self, level, cutoff):
        with pytest.raises(InvalidArgumentError):
            VacuumSpace(OSP2, level, cutoff)

    def test_properties(self, osp2_space):
        assert osp2_space.level == 1
        assert osp2_space.cutoff == 4
        assert osp2_space.zero_charge == (0,)
        assert osp2_space.algebra is OSP2


class TestBasis:

    def test_charge_zero_dims(self, osp2_space):
        assert [osp2_space.block_dim(w) for w in range(3)] == [1, 1, 4]

    def test_charges_at_weight_one(self, osp2_space):
        assert osp2_space.charges_at(1) == [(-2,), (-1,), (0,), (1,), (2,)]
        assert all(osp2_space.block_dim(1, charge) == 1 for charge in osp2_space.charges_at(1))

    def test_total_dim_at_weight_two(self, osp2_space):
        # 5 single modes, 6 + 6 even products and one odd pair
        assert sum(osp2_space.block_dim(2, charge) for charge in osp2_space.charges_at(2)) == 18

    def test_sl2_dims(self):
        space = VacuumSpace(SL2, 1, 3)
        assert [space.block_dim(w) for w in range(4)] == [1, 1, 3, 6]

    def test_monomials_are_canonical(self, osp2_space):
        for weight in range(4):
            for charge in osp2_space.charges_at(weight):
                for item in osp2_space.enumerate_basis(weight, charge):
                    assert item.is_canonical(OSP2.parities)
                    assert item.weight == weight
                    assert osp2_space.charge_of(item) == charge

    def test_odd_factor_never_repeats(self, osp2_space):
        x = OSP2.index_of("x(1)")
        assert monomial((1, x), (1, x)) not in osp2_space.enumerate_basis(2, (2,))

    def test_above_cutoff(self, osp2_space):
        with pytest.raises(CutoffExceededError):
            osp2_space.enumerate_basis(5)
        with pytest.raises(CutoffExceededError):
            osp2_space.charges_at(5)

    def test_negative_weight_is_empty(self, osp2_space):
        assert osp2_space.enumerate_basis(-1) == []

    def test_coordinates_round_trip_one_state(self, osp2_space):
        state = osp2_space.word((label(OSP2, "e(-2)"), -1), (label(OSP2, "e(2)"), -1))
        vector = osp2_space.coordinates(state, 2)
        assert osp2_space.state_from_coordinates(vector, 2) == state

    def test_coordinates_reject_foreign_terms(self, osp2_space):
        state = osp2_space.word((label(OSP2, "e(2)"), -1))
        with pytest.raises(InvalidArgumentError):
            osp2_space.coordinates(state, 1)


class TestModes:

    def test_commuting_past_a_creation_mode(self, osp2_space):
        h, e, f = (OSP2.index_of(name) for name in ("h1", "e(2)", "e(-2)"))
        state = osp2_space.word((f, -1), (e, -1))
        assert state == State({monomial((1, e), (1, f)): 1, monomial((2, h)): -1})

    def test_odd_square(self, osp2_space):
        x, e = OSP2.index_of("x(1)"), OSP2.index_of("e(2)")
        assert osp2_space.word((x, -1), (x, -1)) == State({monomial((2, e)): 1})

    @pytest.mark.parametrize("space_fixture, level", [("osp2_space", 1), ("osp2_level2_space", 2)])
    def test_central_term(self, request, space_fixture, level):
        space = request.getfixturevalue(space_fixture)
        algebra = space.algebra
        e, f = algebra.index_of("e(2)"), algebra.index_of("e(-2)")
        x, y = algebra.index_of("x(1)"), algebra.index_of("x(-1)")
        assert space.word((f, 1), (e, -1)) == level * space.vacuum()
        assert space.word((y, 1), (x, -1)) == -2 * level * space.vacuum()

    def test_annihilation_of_vacuum(self, osp2_space):
        for index in range(OSP2.dim):
            for mode in range(3):
                assert osp2_space.apply_mode(index, mode, osp2_space.vacuum()).is_zero()

    def test_zero_mode_acts_by_bracket(self, osp2_space):
        e, y = label(OSP2, "e(2)"), label(OSP2, "x(-1)")
        state = osp2_space.apply_mode(e, 0, osp2_space.word((y, -1)))
        assert state == osp2_space.word((-1 * label(OSP2, "x(1)"), -1))

    def test_linear_in_the_element(self, osp2_space):
        h, e = label(OSP2, "h1"), label(OSP2, "e(2)")
        state = osp2_space.word((label(OSP2, "e(-2)"), -1))
        combined = osp2_space.apply_mode(h + 3 * e, 1, state)
        separate = osp2_space.apply_mode(h, 1, state) + 3 * osp2_space.apply_mode(e, 1, state)
        assert combined == separate

    def test_result_above_cutoff_is_flagged(self, osp2_space):
        h = OSP2.index_of("h1")
        top = osp2_space.word(*[(h, -1)] * 4)
        assert not top.truncated
        result = osp2_space.apply_mode(h, -1, top)
        assert result.is_zero()
        assert result.truncated
        assert (result + top).truncated

    def test_commutator_relation(self, osp2_space):
        algebra = osp2_space.algebra
        states = [
            osp2_space.word((algebra.index_of("x(-1)"), -1)),
            osp2_space.word((algebra.index_of("h1"), -1), (algebra.index_of("e(2)"), -1)),
        ]
        for state, a, b in itertools.product(states, range(algebra.dim), range(algebra.dim)):
            for m, n in itertools.product((-1, 0, 1), repeat=2):
                expected = commutator_image(osp2_space, a, m, b, n, state)
                assert mode_commutator(osp2_space, a, m, b, n, state) == expected, (a, m, b, n)

    @pytest.mark.parametrize("seed", range(6))
    def test_commutator_relation_on_random_states(self, osp2_space, seed):
        rng = random.Random(seed)
        dim = osp2_space.algebra.dim
        state = random_state(rng, osp2_space, rng.randint(0, 2))
        for _ in range(12):
            a, b = rng.randrange(dim), rng.randrange(dim)
            m, n = rng.randint(-1, 1), rng.randint(-1, 1)
            expected = commutator_image(osp2_space, a, m, b, n, state)
            assert mode_commutator(osp2_space, a, m, b, n, state) == expected, (a, m, b, n)


class TestStraighteningConfluence:

    @pytest.fixture(scope="class")
    def space(self):
        return VacuumSpace(OSP2, 1, 7)

    @pytest.mark.parametrize("seed", range(10))
    def test_swapping_a_pair_first(self, space, seed):
        rng = random.Random(seed)
        state = random_state(rng, space, rng.randint(0, 1))
        word = [(rng.randrange(OSP2.dim), rng.randint(-1, 1)) for _ in range(rng.randint(2, 6))]
        position = rng.randrange(len(word) - 1)
        direct = space.straighten(word, state)
        assert not direct.truncated
        assert straighten_swapped(space, word, position, state) == direct


class TestTruncationSoundness:

    @pytest.fixture(scope="class")
    def larger(self):
        return VacuumSpace(OSP2, 1, 6)

    @pytest.mark.parametrize("seed", range(6))
    def test_unflagged_words_match_a_larger_cutoff(self, osp2_space, larger, seed):
        rng = random.Random(seed)
        for _ in range(10):
            word = [(rng.randrange(OSP2.dim), rng.randint(-2, 2)) for _ in range(rng.randint(1, 4))]
            result = osp2_space.straighten(word)
            if not result.truncated:
                assert result == larger.straighten(word), word

    @pytest.mark.parametrize("seed", range(4))
    def test_unflagged_composite_modes_match_a_larger_cutoff(self, osp2_space, larger, seed):
        rng = random.Random(seed)
        u = random_state(rng, osp2_space, rng.randint(1, 2))
        v = random_state(rng, osp2_space, rng.randint(0, 2))
        for m in range(-2, 3):
            result = osp2_space.composite_mode(u, m, v)
            if not result.truncated:
                assert result == larger.composite_mode(u, m, v), m


class TestCompositeModes:

    @pytest.mark.parametrize("name", ["h1", "e(2)", "x(1)", "x(-1)"])
    def test_weight_one_state_acts_as_its_field(self, osp2_space, name):
        index = OSP2.index_of(name)
        field = osp2_space.word((index, -1))
        target = osp2_space.word((OSP2.index_of("x(-1)"), -1), (OSP2.index_of("e(2)"), -1))
        for mode in range(-1, 3):
            assert osp2_space.composite_mode(field, mode, target) == osp2_space.apply_mode(index, mode, target)

    def test_derivative_field(self, osp2_space):
        acting = osp2_space.word((OSP2.index_of("x(1)"), -2))
        target = osp2_space.word((OSP2.index_of("x(-1)"), -1))
        assert osp2_space.composite_mode(acting, 1, target) == -1 * osp2_space.word((OSP2.index_of("h1"), -1))

    def test_vacuum_is_the_identity_field(self, osp2_space):
        target = osp2_space.word((OSP2.index_of("e(2)"), -2))
        assert osp2_space.composite_mode(osp2_space.vacuum(), -1, target) == target
        assert osp2_space.composite_mode(osp2_space.vacuum(), 0, target).is_zero()

    def test_creation_on_vacuum(self, osp2_space):
        u = osp2_space.word((OSP2.index_of("h1"), -1), (OSP2.index_of("x(1)"), -1))
        assert osp2_space.composite_mode(u, -1, osp2_space.vacuum()) == u

    def test_strict_raises_above_cutoff(self, osp2_space):
        u = osp2_space.word((OSP2.index_of("h1"), -2))
        with pytest.raises(CutoffExceededError):
            osp2_space.composite_mode(u, -3, u, strict=True)
        assert osp2_space.composite_mode(u, -3, u).truncated

    def test_mode_range(self, osp2_space):
        assert osp2_space.mode_range(2, 2, ceiling=4) == range(-1, 4)
        assert list(osp2_space.mode_range(1, 0)) == [-4, -3, -2, -1, 0]


class TestStateSerialization:

    def test_key_string(self):
        assert PbwMonomial().key_string() == "1"
        assert monomial((2, 0), (1, 1), (1, 1)).key_string() == "b0(-2)·b1(-1)^2"

    def test_vacuum_json(self):
        assert State.vacuum().to_json() == '{"terms": [["1", "1", "1"]], "truncated": false}'

    def test_fraction_terms(self):
        state = State({monomial((1, 0)): Fraction(-3, 4)}, truncated=True)
        assert state.to_list() == [["b0(-1)", "-3", "4"]]
        assert '"truncated": true' in state.to_json()
