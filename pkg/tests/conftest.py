from fractions import Fraction

import pytest

from paraferm.coset import ParafermionCoset
from paraferm.superalgebra import build_osp, build_sl2
from paraferm.vacuum import State, VacuumSpace

OSP2 = build_osp(1)
OSP4 = build_osp(2)
SL2 = build_sl2()


def label(algebra, name):
    return algebra.element(algebra.index_of(name))


def random_state(rng, space, weight, terms=3):
    """A random homogeneous state in one (weight, charge) block."""
    charge = rng.choice(space.charges_at(weight))
    basis = space.enumerate_basis(weight, charge)
    chosen = rng.sample(basis, min(terms, len(basis)))
    return State({monomial: Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.randint(1, 2)) for monomial in chosen})


@pytest.fixture(scope="session")
def osp2():
    return OSP2


@pytest.fixture(scope="session")
def osp4():
    return OSP4


@pytest.fixture(scope="session")
def sl2():
    return SL2


@pytest.fixture(scope="module")
def osp2_space():
    return VacuumSpace(OSP2, 1, 4)


@pytest.fixture(scope="module")
def osp2_level2_space():
    return VacuumSpace(OSP2, 2, 4)


@pytest.fixture(scope="module")
def osp2_coset():
    return ParafermionCoset(OSP2, 1, 3)


@pytest.fixture(scope="module")
def sl2_coset():
    return ParafermionCoset(SL2, 1, 3)


@pytest.fixture(scope="module")
def osp4_coset():
    return ParafermionCoset(OSP4, 1, 3)
