from typing import Iterable, List, Tuple

from paraferm.constants import VACUUM_KEY

# A factor (m, b) stands for the mode b(-m), m >= 1, of basis element b.
Factor = Tuple[int, int]


def factor_key(factor: Factor) -> Tuple[int, int]:
    mode, index = factor
    return -mode, index


class PbwMonomial(tuple):
    """Canonically ordered creation modes applied to the vacuum.

    Factors are sorted by mode descending, then basis index ascending; an odd
    factor never repeats.
    """
    __slots__ = ()

    def __new__(cls, factors: Iterable[Factor] = ()) -> "PbwMonomial":
        return super().__new__(cls, factors)

    @classmethod
    def from_factors(cls, factors: Iterable[Factor]) -> "PbwMonomial":
        return cls(sorted(factors, key=factor_key))

    @property
    def weight(self) -> int:
        return sum(mode for mode, _ in self)

    @property
    def is_vacuum(self) -> bool:
        return not self

    def sort_key(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(factor_key(factor) for factor in self)

    def is_canonical(self, parities: Tuple[int, ...]) -> bool:
        for left, right in zip(self, self[1:]):
            if factor_key(left) > factor_key(right):
                return False
            if left == right and parities[left[1]]:
                return False
        return all(mode >= 1 for mode, _ in self)

    def parity(self, parities: Tuple[int, ...]) -> int:
        return sum(parities[index] for _, index in self) % 2

    def key_string(self) -> str:
        """Stable text form such as ``b17(-3)·b2(-1)^2``."""
        if not self:
            return VACUUM_KEY

        parts: List[str] = []
        run = 0
        for position, factor in enumerate(self):
            run += 1
            if position + 1 < len(self) and self[position + 1] == factor:
                continue
            mode, index = factor
            part = "b{}({})".format(index, -mode)
            if run > 1:
                part += "^{}".format(run)
            parts.append(part)
            run = 0
        return "·".join(parts)

    def __repr__(self) -> str:
        return "PbwMonomial({})".format(self.key_string())
