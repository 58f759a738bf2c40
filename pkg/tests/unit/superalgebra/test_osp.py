import json
from fractions import Fraction

import pytest

from paraferm.exceptions import InvalidArgumentError
from paraferm.superalgebra import RootKind, build_osp, root_generators
from tests.conftest import OSP2, OSP4, SL2, label


class TestBasis:

    @pytest.mark.parametrize("algebra, dim, even, odd", [
        (OSP2, 5, 3, 2),
        (OSP4, 14, 10, 4),
        (SL2, 3, 3, 0),
    ])
    def test_dimensions(self, algebra, dim, even, odd):
        assert algebra.dim == dim
        assert algebra.even_dim == even
        assert algebra.odd_dim == odd
        assert algebra.superdimension == even - odd

    def test_osp2_basis_order(self, osp2):
        assert osp2.labels == ("h1", "e(2)", "e(-2)", "x(1)", "x(-1)")
        assert osp2.parities == (0, 0, 0, 1, 1)

    def test_osp4_cartan_comes_first(self, osp4):
        assert osp4.rank == 2
        assert osp4.labels[:2] == ("h1", "h2")
        assert osp4.labels[2] == "e(2,0)"

    def test_charges(self, osp2):
        assert osp2.charges == ((0,), (2,), (-2,), (1,), (-1,))

    def test_sugawara_shift(self, osp2, osp4, sl2):
        assert osp2.sugawara_shift == Fraction(3, 2)
        assert osp4.sugawara_shift == Fraction(5, 2)
        assert sl2.sugawara_shift == 2

    @pytest.mark.parametrize("n", [0, -1, 1.5, True])
    def test_rejects_bad_rank(self, n):
        with pytest.raises(InvalidArgumentError):
            build_osp(n)

    def test_unknown_label(self, osp2):
        with pytest.raises(InvalidArgumentError):
            osp2.index_of("e(4)")


class TestBrackets:

    def test_odd_anticommutators(self, osp2):
        x, y = label(osp2, "x(1)"), label(osp2, "x(-1)")
        e, f, h = label(osp2, "e(2)"), label(osp2, "e(-2)"), label(osp2, "h1")
        assert osp2.bracket(x, x) == 2 * e
        assert osp2.bracket(y, y) == -2 * f
        assert osp2.bracket(x, y) == h
        assert osp2.bracket(y, x) == h

    def test_even_acts_on_odd(self, osp2):
        x, y = label(osp2, "x(1)"), label(osp2, "x(-1)")
        e, f = label(osp2, "e(2)"), label(osp2, "e(-2)")
        assert osp2.bracket(e, y) == -x
        assert osp2.bracket(f, x) == -y
        assert osp2.bracket(e, x).is_zero()

    def test_elements_of_different_algebras_do_not_mix(self, osp2):
        with pytest.raises(InvalidArgumentError):
            osp2.bracket(label(osp2, "h1"), label(build_osp(1), "h1"))

    def test_parity_of_mixed_element(self, osp2):
        assert (label(osp2, "h1") + label(osp2, "x(1)")).parity is None
        assert label(osp2, "x(-1)").parity == 1
        assert osp2.zero().parity == 0


class TestForm:

    def test_osp2_values(self, osp2):
        h, e, f = label(osp2, "h1"), label(osp2, "e(2)"), label(osp2, "e(-2)")
        x, y = label(osp2, "x(1)"), label(osp2, "x(-1)")
        assert osp2.form(h, h) == 2
        assert osp2.form(e, f) == 1
        assert osp2.form(x, y) == 2
        assert osp2.form(y, x) == -2
        assert osp2.form(h, e) == 0

    def test_short_root_normalization(self, osp4):
        e, f = label(osp4, "e(1,-1)"), label(osp4, "e(-1,1)")
        assert osp4.form(e, f) == 2

    def test_charge_pairing(self, osp4):
        assert osp4.charge_pairing((2, 0), (2, 0)) == 2
        assert osp4.charge_pairing((1, 1), (1, 1)) == 1
        assert osp4.charge_pairing((1, 0), (1, 0)) == Fraction(1, 2)
        assert osp4.charge_pairing((1, 0), (0, 1)) == 0


class TestRoots:

    @pytest.mark.parametrize("algebra, long, short, odd", [
        (OSP2, 2, 0, 2),
        (OSP4, 4, 4, 4),
        (SL2, 2, 0, 0),
    ])
    def test_counts(self, algebra, long, short, odd):
        assert algebra.root_datum.counts() == {
            RootKind.EVEN_LONG: long,
            RootKind.EVEN_SHORT: short,
            RootKind.ODD: odd,
        }

    def test_highest_root(self, osp4):
        theta = osp4.root_datum.highest_root
        assert theta.vector == (2, 0)
        assert theta.kind is RootKind.EVEN_LONG

    def test_long_root_carries_odd_pair(self, osp4):
        data = root_generators(osp4, (0, 2))
        assert data.has_odd_pair
        assert data.x_plus == label(osp4, "x(0,1)")
        assert data.x_minus == label(osp4, "x(0,-1)")

    def test_short_root_has_no_odd_pair(self, osp4):
        data = root_generators(osp4, (1, 1))
        assert not data.has_odd_pair
        assert osp4.bracket(data.e_plus, data.e_minus) == data.h
        assert osp4.bracket(data.h, data.e_plus) == 2 * data.e_plus

    @pytest.mark.parametrize("vector", [(1, 0), (-2, 0), (3, 0)])
    def test_rejects_non_even_positive(self, osp4, vector):
        with pytest.raises(InvalidArgumentError):
            root_generators(osp4, vector)


class TestSerialization:

    def test_json_is_deterministic(self):
        assert build_osp(1).to_json() == build_osp(1).to_json()

    def test_json_payload(self, osp2):
        payload = json.loads(osp2.to_json())
        assert payload["name"] == "osp(1|2)"
        assert [entry["label"] for entry in payload["basis"]] == list(osp2.labels)
        assert payload["cartan"] == [0]
        assert [3, 4, "2"] in payload["form"]
        assert [4, 3, "-2"] in payload["form"]
