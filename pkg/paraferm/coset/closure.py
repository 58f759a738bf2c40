"""
One-sided closure sweeps inside a truncated vacuum module.

Closures are kept per (weight, charge) block as incremental echelon forms. A
vector is only propagated when it enlarges its block, so every sweep acts on a
basis of what the previous sweep added and the worklist drains in finitely many
steps.
"""
import logging
from collections import defaultdict
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from paraferm.coset.dims import ClosureResult, GradedDims
from paraferm.exactla import EchelonBuilder, Subspace
from paraferm.exceptions import CutoffExceededError, FlaggedSeedError, InternalConsistencyError
from paraferm.superalgebra.algebra import Charge
from paraferm.vacuum import State, VacuumSpace

log = logging.getLogger(__name__)

Block = Tuple[int, Charge]


def split_blocks(space: VacuumSpace, state: State) -> Dict[Block, State]:
    parts: Dict[Block, dict] = defaultdict(dict)
    for monomial, value in state.items():
        parts[monomial.weight, space.charge_of(monomial)][monomial] = value
    return {block: State(terms) for block, terms in parts.items()}


class _BlockwiseSpan:

    def __init__(self, space: VacuumSpace, limit: int) -> None:
        self._space = space
        self._limit = limit
        self._builders: Dict[Block, EchelonBuilder] = {}

    def add(self, state: State) -> List[State]:
        """Adds every block component of `state`; returns the components that were new."""
        if state.truncated:
            raise InternalConsistencyError("A closure step produced a truncated state")
        added = []
        for (weight, charge), part in split_blocks(self._space, state).items():
            if weight > self._limit:
                continue
            builder = self._builders.get((weight, charge))
            if builder is None:
                builder = EchelonBuilder(self._space.block_dim(weight, charge))
                self._builders[weight, charge] = builder
            if builder.add(self._space.coordinates(part, weight, charge)):
                added.append(part)
        return added

    def subspaces(self) -> Dict[Block, Subspace]:
        return {block: builder.subspace() for block, builder in sorted(self._builders.items())}


def _check_inputs(states: Iterable[State], limit: int, what: str) -> None:
    for state in states:
        if state.truncated:
            raise FlaggedSeedError("{} carries the truncation flag".format(what))
        if state.weights and max(state.weights) > limit:
            raise CutoffExceededError(
                "{} has weight {} above the closure limit {}".format(what, max(state.weights), limit)
            )


def _sweep(
        span: _BlockwiseSpan,
        frontier: List[State],
        step: Callable[[State], Iterable[State]],
        max_sweeps: Optional[int]
) -> Tuple[int, bool]:
    sweeps = 0
    while frontier:
        if max_sweeps is not None and sweeps >= max_sweeps:
            return sweeps, False
        sweeps += 1
        added: List[State] = []
        for vector in frontier:
            for image in step(vector):
                if not image.is_zero():
                    added.extend(span.add(image))
        log.debug("Closure sweep %d added %d vectors", sweeps, len(added))
        frontier = added
    return sweeps, True


def _result(
        space: VacuumSpace,
        span: _BlockwiseSpan,
        sweeps: int,
        stabilized: bool,
        report_cutoff: int,
        charge: Optional[Charge]
) -> ClosureResult:
    blocks = span.subspaces()
    charge = space.zero_charge if charge is None else tuple(charge)
    dims = [blocks[w, charge].dim if (w, charge) in blocks else 0 for w in range(report_cutoff + 1)]
    return ClosureResult(GradedDims.lower_bound(dims), blocks, sweeps, stabilized)


def closure_generate(
        space: VacuumSpace,
        seeds: Sequence[State],
        report_cutoff: int,
        acting: Optional[Sequence[State]] = None,
        include_vacuum: bool = True,
        limit: Optional[int] = None,
        charge: Optional[Charge] = None,
        max_sweeps: Optional[int] = None
) -> ClosureResult:
    """Smallest blockwise span holding `seeds` and stable under u_m for u in `acting`.

    `acting` defaults to the seeds themselves, which together with the vacuum
    gives the vertex subalgebra they generate; leaving the vacuum out and acting
    with generators of a subalgebra gives the ideal of that subalgebra generated
    by the seeds.
    """
    limit = space.cutoff if limit is None else limit
    if limit > space.cutoff:
        raise CutoffExceededError("Closure limit {} exceeds the working cutoff {}".format(limit, space.cutoff))
    if report_cutoff > limit:
        raise CutoffExceededError("Report cutoff {} exceeds the closure limit {}".format(report_cutoff, limit))

    acting = list(seeds if acting is None else acting)
    _check_inputs(seeds, limit, "Seed")
    _check_inputs(acting, limit, "Acting vector")
    acting_weights = [(u, max(u.weights)) for u in acting if not u.is_zero()]

    span = _BlockwiseSpan(space, limit)
    frontier: List[State] = []
    for seed in ([space.vacuum()] if include_vacuum else []) + list(seeds):
        frontier.extend(span.add(seed))

    def step(vector: State) -> Iterable[State]:
        weight = vector.weight
        for u, u_weight in acting_weights:
            for mode in space.mode_range(u_weight, weight, limit):
                yield space.composite_mode(u, mode, vector)

    sweeps, stabilized = _sweep(span, frontier, step, max_sweeps)
    log.info("Generated closure from %d seeds: %d sweeps, stabilized=%s", len(seeds), sweeps, stabilized)
    return _result(space, span, sweeps, stabilized, report_cutoff, charge)


def raw_mode_closure(
        space: VacuumSpace,
        seeds: Sequence[State],
        limit: int,
        max_sweeps: Optional[int] = None
) -> ClosureResult:
    """Closure of `seeds` under every raw mode a(n) whose image stays at weight <= `limit`."""
    if limit > space.cutoff:
        raise CutoffExceededError("Closure limit {} exceeds the working cutoff {}".format(limit, space.cutoff))
    _check_inputs(seeds, limit, "Seed")

    span = _BlockwiseSpan(space, limit)
    frontier: List[State] = []
    for seed in seeds:
        frontier.extend(span.add(seed))

    def step(vector: State) -> Iterable[State]:
        weight = vector.weight
        for index in range(space.algebra.dim):
            for mode in range(weight - limit, weight + 1):
                yield space.apply_mode(index, mode, vector)

    sweeps, stabilized = _sweep(span, frontier, step, max_sweeps)
    log.info("Raw-mode closure of %d seeds: %d sweeps, stabilized=%s", len(seeds), sweeps, stabilized)
    return _result(space, span, sweeps, stabilized, limit, None)
