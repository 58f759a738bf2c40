import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Tuple, TYPE_CHECKING

from paraferm.exceptions import InternalConsistencyError, InvalidArgumentError
from paraferm.utils import Rational, drop_zeros, fraction_to_str, koszul_sign

if TYPE_CHECKING:
    from .roots import RootDatum

Charge = Tuple[int, ...]
StructureConstants = Dict[Tuple[int, int], Dict[int, Fraction]]
FormTable = Dict[Tuple[int, int], Fraction]


@dataclass(eq=False)
class LieSuperalgebra:
    """A finite-dimensional Lie superalgebra given on a labelled basis.

    `cartan` lists the basis indices of the stored Cartan basis and
    `cartan_gram` their Gram matrix under the invariant form; charges of basis
    elements are the eigenvalue vectors of the stored Cartan basis.
    """
    name: str
    labels: Tuple[str, ...]
    parities: Tuple[int, ...]
    structure_constants: StructureConstants
    form_table: FormTable
    cartan: Tuple[int, ...]
    cartan_gram: Tuple[Tuple[Fraction, ...], ...]
    sugawara_shift: Fraction
    metadata: Dict[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.parities):
            raise InvalidArgumentError("Every basis element needs exactly one parity")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def even_dim(self) -> int:
        return sum(1 for parity in self.parities if parity == 0)

    @property
    def odd_dim(self) -> int:
        return self.dim - self.even_dim

    @property
    def superdimension(self) -> int:
        return self.even_dim - self.odd_dim

    def bracket_basis(self, left: int, right: int) -> Dict[int, Fraction]:
        return self.structure_constants.get((left, right), {})

    def form_basis(self, left: int, right: int) -> Fraction:
        return self.form_table.get((left, right), Fraction(0))

    def element(self, index: int, coefficient: Rational = 1) -> "AlgebraElement":
        if not 0 <= index < self.dim:
            raise InvalidArgumentError("{} has no basis element {}".format(self.name, index))
        return AlgebraElement(self, {index: Fraction(coefficient)})

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidArgumentError("{} has no basis element labelled {!r}".format(self.name, label))

    def _own(self, element: "AlgebraElement") -> None:
        if element.algebra is not self:
            raise InvalidArgumentError("Element belongs to a different algebra instance")

    def bracket(self, left: "AlgebraElement", right: "AlgebraElement") -> "AlgebraElement":
        """Super bracket; the anticommutator when both arguments are odd."""
        self._own(left)
        self._own(right)
        result: Dict[int, Fraction] = {}
        for i, a in left.coefficients.items():
            for j, b in right.coefficients.items():
                for index, value in self.bracket_basis(i, j).items():
                    result[index] = result.get(index, 0) + a * b * value
        return AlgebraElement(self, result)

    def form(self, left: "AlgebraElement", right: "AlgebraElement") -> Fraction:
        self._own(left)
        self._own(right)
        total = Fraction(0)
        for i, a in left.coefficients.items():
            for j, b in right.coefficients.items():
                total += a * b * self.form_basis(i, j)
        return total

    @cached_property
    def cartan_gram_inverse(self) -> Tuple[Tuple[Fraction, ...], ...]:
        from paraferm.superalgebra.roots import invert_matrix

        return invert_matrix(self.cartan_gram)

    @cached_property
    def charges(self) -> Tuple[Charge, ...]:
        """Eigenvalues of the stored Cartan basis on every basis element."""
        charges: List[Charge] = []
        for index in range(self.dim):
            if index in self.cartan:
                charges.append(tuple(0 for _ in self.cartan))
                continue
            charge = []
            for h in self.cartan:
                image = self.bracket_basis(h, index)
                if set(image) - {index}:
                    raise InternalConsistencyError(
                        "{} is not a Cartan eigenvector: [{}, {}] = {}".format(
                            self.labels[index], self.labels[h], self.labels[index], image
                        )
                    )
                eigenvalue = image.get(index, Fraction(0))
                if eigenvalue.denominator != 1:
                    raise InternalConsistencyError(
                        "{} has a non-integral charge {}".format(self.labels[index], eigenvalue)
                    )
                charge.append(int(eigenvalue))
            charges.append(tuple(charge))
        return tuple(charges)

    def charge_pairing(self, left: Charge, right: Charge) -> Fraction:
        inverse = self.cartan_gram_inverse
        return sum(
            (left[i] * inverse[i][j] * right[j] for i in range(self.rank) for j in range(self.rank)),
            Fraction(0)
        )

    def cartan_element(self, charge: Charge) -> "AlgebraElement":
        """t_λ, the Cartan element with ⟨t_λ, h⟩ = λ(h)."""
        inverse = self.cartan_gram_inverse
        coefficients = {
            h: sum((inverse[i][j] * charge[j] for j in range(self.rank)), Fraction(0))
            for i, h in enumerate(self.cartan)
        }
        return AlgebraElement(self, coefficients)

    @cached_property
    def root_datum(self) -> "RootDatum":
        from paraferm.superalgebra.roots import classify_roots

        return classify_roots(self)

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "basis": [
                {"index": index, "label": label, "parity": parity}
                for index, (label, parity) in enumerate(zip(self.labels, self.parities))
            ],
            "brackets": [
                [i, j, [[index, fraction_to_str(value)] for index, value in sorted(self.structure_constants[i, j].items())]]
                for i, j in sorted(self.structure_constants)
                if self.structure_constants[i, j]
            ],
            "form": [
                [i, j, fraction_to_str(value)]
                for (i, j), value in sorted(self.form_table.items())
                if value != 0
            ],
            "cartan": list(self.cartan),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    algebra: LieSuperalgebra
    coefficients: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coefficients", drop_zeros({index: Fraction(value) for index, value in self.coefficients.items()})
        )

    @property
    def parity(self) -> Optional[int]:
        parities = {self.algebra.parities[index] for index in self.coefficients}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and dict(self.coefficients) == dict(other.coefficients)

    def __hash__(self) -> int:
        return hash((id(self.algebra), tuple(sorted(self.coefficients.items()))))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self.algebra._own(other)
        result = dict(self.coefficients)
        for index, value in other.coefficients.items():
            result[index] = result.get(index, 0) + value
        return AlgebraElement(self.algebra, result)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-1) * other

    def __rmul__(self, scalar: Rational) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {index: scalar * value for index, value in self.coefficients.items()})

    def __mul__(self, scalar: Rational) -> "AlgebraElement":
        return self.__rmul__(scalar)

    def __neg__(self) -> "AlgebraElement":
        return (-1) * self

    def __repr__(self) -> str:
        if not self.coefficients:
            return "0"
        return " + ".join(
            "{}*{}".format(fraction_to_str(value), self.algebra.labels[index])
            for index, value in sorted(self.coefficients.items())
        )


def super_sign(algebra: LieSuperalgebra, left: int, right: int) -> int:
    return koszul_sign(algebra.parities[left], algebra.parities[right])
