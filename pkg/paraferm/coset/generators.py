"""
Generating vectors of the commutant N(g, k), one rank-one family per positive even root.

Long roots carry the osp(1|2) family ω, ω̄, W³, W̄³ at level k; short roots carry
the sl2 family ω, W³ at level 2k. An even root without odd partners (the sl2
algebra itself) contributes ω and W³ only.
"""
import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Tuple

from paraferm.superalgebra import ChevalleyData, Root, RootKind, root_generators
from paraferm.vacuum import State, VacuumSpace


class GeneratorKind(enum.Enum):
    OMEGA = "omega"
    OMEGA_BAR = "omega_bar"
    W3 = "W3"
    W3_BAR = "W3_bar"


@dataclass(frozen=True)
class Generator:
    root: Root
    kind: GeneratorKind
    state: State
    weight: int

    @property
    def name(self) -> str:
        return "{}[{}]".format(self.kind.value, ",".join(str(c) for c in self.root.vector))


@dataclass(frozen=True)
class GeneratorSet:
    generators: Tuple[Generator, ...]

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def states(self) -> List[State]:
        return [generator.state for generator in self.generators]

    @property
    def names(self) -> List[str]:
        return [generator.name for generator in self.generators]

    def for_root(self, root: Root) -> "GeneratorSet":
        return GeneratorSet(tuple(g for g in self.generators if g.root.vector == root.vector))

    def of_kind(self, kind: GeneratorKind) -> List[Generator]:
        return [generator for generator in self.generators if generator.kind is kind]


def _long_family(space: VacuumSpace, data: ChevalleyData) -> List[Tuple[GeneratorKind, State]]:
    k = space.level
    h, e, f = data.h, data.e_plus, data.e_minus
    word = space.word

    omega = Fraction(1, 2 * k * (k + 2)) * (
        -1 * word((h, -1), (h, -1))
        + 2 * k * word((e, -1), (f, -1))
        - k * word((h, -2))
    )
    w3 = (
        k ** 2 * word((h, -3))
        + 3 * k * word((h, -2), (h, -1))
        + 2 * word((h, -1), (h, -1), (h, -1))
        - 6 * k * word((h, -1), (e, -1), (f, -1))
        + 3 * k ** 2 * word((e, -2), (f, -1))
        - 3 * k ** 2 * word((e, -1), (f, -2))
    )
    family = [(GeneratorKind.OMEGA, omega), (GeneratorKind.W3, w3)]
    if not data.has_odd_pair:
        return family

    x, y = data.x_plus, data.x_minus
    omega_bar = (
        -1 * word((h, -1), (h, -1))
        + 4 * k * word((x, -1), (y, -1))
        - 2 * k * word((h, -2))
    )
    # h(-3) carries 2k² so that h(3) annihilates the vector
    w3_bar = (
        2 * k ** 2 * word((h, -3))
        + 3 * k * word((h, -2), (h, -1))
        + word((h, -1), (h, -1), (h, -1))
        - 6 * k * word((h, -1), (x, -1), (y, -1))
        + 6 * k ** 2 * word((x, -2), (y, -1))
        - 6 * k ** 2 * word((x, -1), (y, -2))
    )
    return [
        (GeneratorKind.OMEGA, omega),
        (GeneratorKind.OMEGA_BAR, omega_bar),
        (GeneratorKind.W3, w3),
        (GeneratorKind.W3_BAR, w3_bar),
    ]


def _short_family(space: VacuumSpace, data: ChevalleyData) -> List[Tuple[GeneratorKind, State]]:
    k = space.level
    h, e, f = data.h, data.e_plus, data.e_minus
    word = space.word

    omega = Fraction(1, 8 * k * (k + 1)) * (
        -2 * k * word((h, -2))
        - word((h, -1), (h, -1))
        + 4 * k * word((e, -1), (f, -1))
    )
    w3 = (
        4 * k ** 2 * word((h, -3))
        + 6 * k * word((h, -2), (h, -1))
        + 2 * word((h, -1), (h, -1), (h, -1))
        - 12 * k * word((h, -1), (e, -1), (f, -1))
        + 12 * k ** 2 * word((e, -2), (f, -1))
        - 12 * k ** 2 * word((e, -1), (f, -2))
    )
    return [(GeneratorKind.OMEGA, omega), (GeneratorKind.W3, w3)]


def build_generators(space: VacuumSpace) -> GeneratorSet:
    datum = space.algebra.root_datum
    generators: List[Generator] = []
    for root in datum.even_positive:
        data = root_generators(space.algebra, root.vector)
        if root.kind is RootKind.EVEN_LONG:
            family = _long_family(space, data)
        else:
            family = _short_family(space, data)
        for kind, state in family:
            weight = 2 if kind in (GeneratorKind.OMEGA, GeneratorKind.OMEGA_BAR) else 3
            generators.append(Generator(root, kind, state, weight))
    return GeneratorSet(tuple(generators))
