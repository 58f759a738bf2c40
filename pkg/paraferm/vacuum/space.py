"""
Truncated vacuum module V(k, 0) of an affine Lie superalgebra.

Modes act on canonical PBW monomials through the super commutator

    [a(m), b(n)] = [a, b](m + n) + m <a, b> δ_{m+n,0} k,

with a(n)𝟙 = 0 for n >= 0 and x(-m)x(-m) = ½ {x, x}(-2m) for odd x. Every
intermediate term produced while straightening has weight at most the weight of
the final result, so the cutoff only ever discards whole results; a discarded
result sets the sticky truncation flag of the returned state.
"""
import logging
import threading
from collections import defaultdict
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from paraferm.exceptions import CutoffExceededError, InvalidArgumentError
from paraferm.superalgebra import AlgebraElement, LieSuperalgebra
from paraferm.superalgebra.algebra import Charge
from paraferm.utils import Rational, add_vectors, koszul_sign
from paraferm.vacuum.monomial import Factor, PbwMonomial, factor_key
from paraferm.vacuum.state import State

log = logging.getLogger(__name__)

Terms = Dict[PbwMonomial, Fraction]
ModeLike = Tuple[Union[AlgebraElement, int], int]

_EMPTY: Terms = {}


class VacuumSpace:

    def __init__(self, algebra: LieSuperalgebra, level: int, cutoff: int) -> None:
        if not isinstance(level, int) or isinstance(level, bool) or level < 1:
            raise InvalidArgumentError("Level must be a positive integer, got {!r}".format(level))
        if not isinstance(cutoff, int) or cutoff < 1:
            raise InvalidArgumentError("Working cutoff must be a positive integer, got {!r}".format(cutoff))

        self._algebra = algebra
        self._level = level
        self._cutoff = cutoff
        self._charges = algebra.charges
        self._zero_charge: Charge = tuple(0 for _ in algebra.cartan)

        self._lock = threading.RLock()
        self._monomials_by_weight: Dict[int, Dict[Charge, List[PbwMonomial]]] = {}
        self._block_index: Dict[Tuple[int, Charge], Dict[PbwMonomial, int]] = {}
        self._action_cache: Dict[Tuple[int, int, PbwMonomial], Terms] = {}
        self._composite_cache: Dict[Tuple[PbwMonomial, int, PbwMonomial], Terms] = {}

    @property
    def algebra(self) -> LieSuperalgebra:
        return self._algebra

    @property
    def level(self) -> int:
        return self._level

    @property
    def cutoff(self) -> int:
        return self._cutoff

    @property
    def zero_charge(self) -> Charge:
        return self._zero_charge

    def __repr__(self) -> str:
        return "VacuumSpace({}, k={}, cutoff={})".format(self._algebra.name, self._level, self._cutoff)

    # -- grading ----------------------------------------------------------

    def charge_of(self, monomial: PbwMonomial) -> Charge:
        charge = self._zero_charge
        for _, index in monomial:
            charge = add_vectors(charge, self._charges[index])
        return charge

    def parity_of(self, monomial: PbwMonomial) -> int:
        return monomial.parity(self._algebra.parities)

    def charge(self, state: State) -> Optional[Charge]:
        charges = {self.charge_of(monomial) for monomial in state}
        if len(charges) != 1:
            return None
        return charges.pop()

    # -- basis enumeration ------------------------------------------------

    def _check_weight(self, weight: int) -> None:
        if weight > self._cutoff:
            raise CutoffExceededError("Weight {} exceeds the working cutoff {}".format(weight, self._cutoff))

    def _factors_up_to(self, weight: int) -> List[Factor]:
        return sorted(
            ((mode, index) for mode in range(1, weight + 1) for index in range(self._algebra.dim)),
            key=factor_key
        )

    def _monomials(self, weight: int) -> Dict[Charge, List[PbwMonomial]]:
        with self._lock:
            cached = self._monomials_by_weight.get(weight)
            if cached is not None:
                return cached

            factors = self._factors_up_to(weight)
            parities = self._algebra.parities
            buckets: Dict[Charge, List[PbwMonomial]] = defaultdict(list)

            def extend(prefix: List[Factor], start: int, remaining: int) -> None:
                if remaining == 0:
                    monomial = PbwMonomial(prefix)
                    buckets[self.charge_of(monomial)].append(monomial)
                    return
                for position in range(start, len(factors)):
                    mode, index = factors[position]
                    if mode > remaining:
                        continue
                    prefix.append((mode, index))
                    extend(prefix, position + 1 if parities[index] else position, remaining - mode)
                    prefix.pop()

            extend([], 0, weight)
            result = {charge: sorted(monomials, key=PbwMonomial.sort_key) for charge, monomials in buckets.items()}
            self._monomials_by_weight[weight] = result
            log.debug("%r: %d monomials of weight %d", self, sum(map(len, result.values())), weight)
            return result

    def enumerate_basis(self, weight: int, charge: Optional[Charge] = None) -> List[PbwMonomial]:
        self._check_weight(weight)
        if weight < 0:
            return []
        if charge is None:
            charge = self._zero_charge
        return list(self._monomials(weight).get(tuple(charge), ()))

    def charges_at(self, weight: int) -> List[Charge]:
        self._check_weight(weight)
        return sorted(self._monomials(weight))

    def block_dim(self, weight: int, charge: Optional[Charge] = None) -> int:
        return len(self.enumerate_basis(weight, charge))

    def block_index(self, weight: int, charge: Optional[Charge] = None) -> Dict[PbwMonomial, int]:
        if charge is None:
            charge = self._zero_charge
        key = (weight, tuple(charge))
        with self._lock:
            index = self._block_index.get(key)
            if index is None:
                index = {monomial: i for i, monomial in enumerate(self.enumerate_basis(weight, charge))}
                self._block_index[key] = index
            return index

    def coordinates(self, state: State, weight: int, charge: Optional[Charge] = None) -> Dict[int, Fraction]:
        index = self.block_index(weight, charge)
        try:
            return {index[monomial]: value for monomial, value in state.items()}
        except KeyError as error:
            raise InvalidArgumentError(
                "State has a term {!r} outside block ({}, {})".format(error.args[0], weight, charge)
            )

    def state_from_coordinates(
            self,
            vector: Dict[int, Fraction],
            weight: int,
            charge: Optional[Charge] = None
    ) -> State:
        basis = self.enumerate_basis(weight, charge)
        return State({basis[column]: value for column, value in vector.items()})

    # -- raw modes ----------------------------------------------------------

    def vacuum(self) -> State:
        return State.vacuum()

    def _act(self, index: int, mode: int, monomial: PbwMonomial) -> Terms:
        key = (index, mode, monomial)
        cached = self._action_cache.get(key)
        if cached is not None:
            return cached

        if mode >= 0:
            result = self._annihilate(index, mode, monomial)
        else:
            result = self._create(index, -mode, monomial)
        result = {term: value for term, value in result.items() if value != 0}
        self._action_cache[key] = result
        return result

    def _act_on_terms(self, index: int, mode: int, terms: Terms, scale: Rational, out: Terms) -> None:
        for monomial, value in terms.items():
            for term, coefficient in self._act(index, mode, monomial).items():
                out[term] = out.get(term, 0) + scale * value * coefficient

    def _annihilate(self, index: int, mode: int, monomial: PbwMonomial) -> Terms:
        if not monomial:
            return _EMPTY
        algebra = self._algebra
        (first_mode, first_index), rest = monomial[0], PbwMonomial(monomial[1:])
        out: Terms = {}

        sign = koszul_sign(algebra.parities[index], algebra.parities[first_index])
        self._act_on_terms(first_index, -first_mode, self._act(index, mode, rest), sign, out)

        for target, value in algebra.bracket_basis(index, first_index).items():
            self._act_on_terms(target, mode - first_mode, {rest: Fraction(1)}, value, out)

        if mode == first_mode:
            central = mode * algebra.form_basis(index, first_index) * self._level
            if central:
                out[rest] = out.get(rest, 0) + central
        return out

    def _create(self, index: int, mode: int, monomial: PbwMonomial) -> Terms:
        algebra = self._algebra
        factor = (mode, index)
        if not monomial:
            return {PbwMonomial((factor,)): Fraction(1)}

        first = monomial[0]
        if factor_key(factor) < factor_key(first) or (factor == first and not algebra.parities[index]):
            return {PbwMonomial((factor,) + tuple(monomial)): Fraction(1)}

        rest = PbwMonomial(monomial[1:])
        out: Terms = {}
        if factor == first:
            # x(-m) x(-m) = ½ {x, x}(-2m) for odd x
            for target, value in algebra.bracket_basis(index, index).items():
                self._act_on_terms(target, -2 * mode, {rest: Fraction(1)}, value / 2, out)
            return out

        first_mode, first_index = first
        sign = koszul_sign(algebra.parities[index], algebra.parities[first_index])
        self._act_on_terms(first_index, -first_mode, self._act(index, -mode, rest), sign, out)
        for target, value in algebra.bracket_basis(index, first_index).items():
            self._act_on_terms(target, -(mode + first_mode), {rest: Fraction(1)}, value, out)
        return out

    def _resolve(self, element: Union[AlgebraElement, int]) -> Dict[int, Fraction]:
        if isinstance(element, AlgebraElement):
            if element.algebra is not self._algebra:
                raise InvalidArgumentError("Element belongs to a different algebra instance")
            return dict(element.coefficients)
        return {element: Fraction(1)}

    def apply_mode(self, element: Union[AlgebraElement, int], mode: int, state: State) -> State:
        """a(n) applied to `state`; results above the cutoff are dropped and flagged."""
        coefficients = self._resolve(element)
        out: Terms = {}
        truncated = state.truncated
        for monomial, value in state.items():
            target_weight = monomial.weight - mode
            if target_weight < 0:
                continue
            if target_weight > self._cutoff:
                truncated = True
                continue
            for index, scale in coefficients.items():
                for term, coefficient in self._act(index, mode, monomial).items():
                    out[term] = out.get(term, 0) + scale * value * coefficient
        return State(out, truncated)

    def straighten(self, modes: Sequence[ModeLike], state: Optional[State] = None) -> State:
        """Evaluates a word of modes, leftmost acting last, on `state` (default 𝟙)."""
        if state is None:
            state = self.vacuum()
        for element, mode in reversed(list(modes)):
            state = self.apply_mode(element, mode, state)
        return state

    def word(self, *modes: ModeLike) -> State:
        return self.straighten(modes)

    # -- composite modes -------------------------------------------------

    def _composite(self, acting: PbwMonomial, mode: int, target: PbwMonomial) -> Terms:
        if not acting:
            return {target: Fraction(1)} if mode == -1 else _EMPTY
        if acting.weight + target.weight - mode - 1 < 0:
            return _EMPTY

        key = (acting, mode, target)
        cached = self._composite_cache.get(key)
        if cached is not None:
            return cached

        algebra = self._algebra
        (leading_mode, index), rest = acting[0], PbwMonomial(acting[1:])
        koszul = koszul_sign(algebra.parities[index], self.parity_of(rest))
        out: Terms = {}

        # (a(-s)u)_q v = Σ_i C(s+i-1, i) [a(-s-i) u_{q+i} v - (-1)^s ε u_{q-s-i} a(i) v]
        i = 0
        while rest.weight + target.weight - (mode + i) - 1 >= 0:
            inner = self._composite(rest, mode + i, target)
            if inner:
                self._act_on_terms(index, -leading_mode - i, inner, comb(leading_mode + i - 1, i), out)
            i += 1

        sign = -koszul * (-1 if leading_mode % 2 else 1)
        for i in range(target.weight + 1):
            lowered = self._act(index, i, target)
            if not lowered:
                continue
            scale = sign * comb(leading_mode + i - 1, i)
            for term, value in lowered.items():
                for result, coefficient in self._composite(rest, mode - leading_mode - i, term).items():
                    out[result] = out.get(result, 0) + scale * value * coefficient

        out = {term: value for term, value in out.items() if value != 0}
        self._composite_cache[key] = out
        return out

    def composite_mode(self, acting: State, mode: int, target: State, strict: bool = False) -> State:
        """u_m v for the vertex operator Y(u, z) = Σ u_m z^{-m-1}."""
        out: Terms = {}
        truncated = acting.truncated or target.truncated
        for u, u_value in acting.items():
            for v, v_value in target.items():
                result_weight = u.weight + v.weight - mode - 1
                if result_weight < 0:
                    continue
                if result_weight > self._cutoff:
                    if strict:
                        raise CutoffExceededError(
                            "u_{} v has weight {} above the working cutoff {}".format(mode, result_weight, self._cutoff)
                        )
                    truncated = True
                    continue
                for term, value in self._composite(u, mode, v).items():
                    out[term] = out.get(term, 0) + u_value * v_value * value
        return State(out, truncated)

    def mode_range(self, acting_weight: int, target_weight: int, ceiling: Optional[int] = None) -> range:
        """Indices m for which u_m v can be nonzero and stays at or below `ceiling`."""
        if ceiling is None:
            ceiling = self._cutoff
        top = acting_weight + target_weight - 1
        return range(top - ceiling, top + 1)

    def monomial_state(self, factors: Iterable[Tuple[Union[AlgebraElement, int], int]]) -> State:
        return self.straighten(list(factors))
