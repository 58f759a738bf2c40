from fractions import Fraction
from math import gcd
from typing import Any, Dict, Iterable, Tuple, TypeVar, Union

K = TypeVar('K')
Rational = Union[int, Fraction]


def fraction_to_str(value: Rational) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)

    return "{}/{}".format(value.numerator, value.denominator)


def to_fraction(value: Any) -> Fraction:
    """Converts ints, Fractions and sympy rationals to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)

    numerator, denominator = getattr(value, "p", None), getattr(value, "q", None)
    if numerator is not None and denominator is not None:
        return Fraction(int(numerator), int(denominator))

    return Fraction(str(value))


def add_scaled(target: Dict[K, Fraction], source: Dict[K, Fraction], scale: Rational = 1) -> None:
    for key, value in source.items():
        target[key] = target.get(key, 0) + scale * value


def drop_zeros(terms: Dict[K, Fraction]) -> Dict[K, Fraction]:
    return {key: value for key, value in terms.items() if value != 0}


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
    result = 1
    for value in values:
        denominator = Fraction(value).denominator
        result = result * denominator // gcd(result, denominator)
    return result


def koszul_sign(left_parity: int, right_parity: int) -> int:
    return -1 if left_parity and right_parity else 1


def add_vectors(left: Tuple[int, ...], right: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(a + b for a, b in zip(left, right))


def negate_vector(vector: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(-a for a in vector)
