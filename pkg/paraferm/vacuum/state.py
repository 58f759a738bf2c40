import json
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from paraferm.utils import Rational, drop_zeros, fraction_to_str
from paraferm.vacuum.monomial import PbwMonomial


class State(Mapping[PbwMonomial, Fraction]):
    """Sparse rational combination of PBW monomials.

    `truncated` is set when a contribution above the working cutoff was
    discarded while producing this state, and it survives every arithmetic
    operation the state takes part in.
    """
    __slots__ = ('_terms', '_truncated')

    def __init__(self, terms: Optional[Mapping[PbwMonomial, Rational]] = None, truncated: bool = False) -> None:
        self._terms: Dict[PbwMonomial, Fraction] = drop_zeros(
            {monomial: Fraction(value) for monomial, value in (terms or {}).items()}
        )
        self._truncated = truncated

    @classmethod
    def vacuum(cls) -> "State":
        return cls({PbwMonomial(): Fraction(1)})

    @classmethod
    def monomial(cls, monomial: PbwMonomial, coefficient: Rational = 1) -> "State":
        return cls({monomial: Fraction(coefficient)})

    @property
    def truncated(self) -> bool:
        return self._truncated

    def __getitem__(self, monomial: PbwMonomial) -> Fraction:
        return self._terms[monomial]

    def __iter__(self) -> Iterator[PbwMonomial]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, monomial: PbwMonomial) -> Fraction:
        return self._terms.get(monomial, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(sorted({monomial.weight for monomial in self._terms}))

    @property
    def weight(self) -> Optional[int]:
        weights = self.weights
        if len(weights) != 1:
            return None
        return weights[0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, State):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == drop_zeros(dict(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "State") -> "State":
        terms = dict(self._terms)
        for monomial, value in other.items():
            terms[monomial] = terms.get(monomial, 0) + value
        return State(terms, self._truncated or other.truncated)

    def __sub__(self, other: "State") -> "State":
        return self + (-1) * other

    def __rmul__(self, scalar: Rational) -> "State":
        return State({monomial: scalar * value for monomial, value in self._terms.items()}, self._truncated)

    def __mul__(self, scalar: Rational) -> "State":
        return self.__rmul__(scalar)

    def __neg__(self) -> "State":
        return (-1) * self

    def sorted_items(self) -> List[Tuple[PbwMonomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def to_list(self) -> List[List[str]]:
        return [
            [monomial.key_string(), str(value.numerator), str(value.denominator)]
            for monomial, value in self.sorted_items()
        ]

    def to_json(self) -> str:
        return json.dumps({"terms": self.to_list(), "truncated": self._truncated}, sort_keys=True, ensure_ascii=False)

    def __repr__(self) -> str:
        if not self._terms:
            return "State(0)"
        body = " + ".join(
            "{}*{}".format(fraction_to_str(value), monomial.key_string()) for monomial, value in self.sorted_items()
        )
        return "State({}{})".format(body, ", truncated" if self._truncated else "")
