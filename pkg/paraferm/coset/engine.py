import logging
import threading
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

from paraferm.coset.closure import closure_generate, raw_mode_closure
from paraferm.coset.dims import ClosureResult, GradedDims, IdealMethod, IdealModel
from paraferm.coset.generators import GeneratorKind, GeneratorSet, build_generators
from paraferm.exactla import SparseMatrix, Subspace, intersect, kernel, radical
from paraferm.exceptions import CutoffExceededError, InternalConsistencyError, InvalidArgumentError
from paraferm.superalgebra import LieSuperalgebra, Root, RootKind, build_osp, build_sl2, root_generators
from paraferm.superalgebra.algebra import Charge
from paraferm.vacuum import State, VacuumSpace, contravariant_gram, lowered_singular_vector, root_level, singular_vector

log = logging.getLogger(__name__)

T = TypeVar('T')


@dataclass
class SubfamilyComparison:
    root: Root
    root_level: int
    lowered_vector_in_ideal: bool
    subfamily_dims: GradedDims
    rank_one_dims: GradedDims
    rank_one_algebra: str

    @property
    def exceeds(self) -> List[int]:
        return self.subfamily_dims.exceeds(self.rank_one_dims)

    @property
    def agrees(self) -> bool:
        return list(self.subfamily_dims) == list(self.rank_one_dims)


@dataclass
class IdealComparison:
    closure: ClosureResult
    target: GradedDims
    outside_target: List[int] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return all(self.closure.dims.meets(self.target))


class ParafermionCoset:
    """Commutant, generators, closures and ideals of V(k, 0) up to a report cutoff.

    Computations are cached per engine and guarded per cache key, so checks may
    share one engine across threads.
    """

    def __init__(
            self,
            algebra: LieSuperalgebra,
            level: int,
            report_cutoff: int,
            headroom: Optional[int] = None
    ) -> None:
        if not isinstance(report_cutoff, int) or report_cutoff < 1:
            raise InvalidArgumentError("Report cutoff must be a positive integer, got {!r}".format(report_cutoff))
        if headroom is None:
            headroom = level + 1
        if headroom < 0:
            raise InvalidArgumentError("Headroom must be nonnegative, got {!r}".format(headroom))
        if headroom < 2:
            warnings.warn(
                "Headroom {} leaves little room for weight three generators; "
                "closure lower bounds may stay below their targets".format(headroom)
            )

        self.algebra = algebra
        self.level = level
        self.report_cutoff = report_cutoff
        self.headroom = headroom
        self.space = VacuumSpace(algebra, level, report_cutoff + headroom)

        self._cache: Dict[object, object] = {}
        self._cache_lock = threading.Lock()
        self._key_locks: Dict[object, threading.RLock] = defaultdict(threading.RLock)

    @property
    def working_cutoff(self) -> int:
        return self.space.cutoff

    def __repr__(self) -> str:
        return "ParafermionCoset({}, k={}, W={}, headroom={})".format(
            self.algebra.name, self.level, self.report_cutoff, self.headroom
        )

    def _cached(self, key: object, factory: Callable[[], T]) -> T:
        with self._cache_lock:
            lock = self._key_locks[key]
        with lock:
            if key not in self._cache:
                self._cache[key] = factory()
            return self._cache[key]

    # -- blocks and commutant -----------------------------------------------

    def charge_block(self, weight: int, charge: Optional[Charge] = None) -> Subspace:
        return Subspace.full(self.space.block_dim(weight, charge))

    def charge_block_dims(self) -> GradedDims:
        return GradedDims.exact([self.space.block_dim(w) for w in range(self.report_cutoff + 1)])

    def _commutant_matrix(self, weight: int) -> SparseMatrix:
        space = self.space
        basis = space.enumerate_basis(weight)
        rows: List[Dict[int, object]] = []
        for h in self.algebra.cartan:
            for mode in range(1, weight + 1):
                target_dim = space.block_dim(weight - mode)
                block_rows: List[Dict[int, object]] = [{} for _ in range(target_dim)]
                for column, monomial in enumerate(basis):
                    image = space.apply_mode(h, mode, State.monomial(monomial))
                    for row, value in space.coordinates(image, weight - mode).items():
                        block_rows[row][column] = value
                rows.extend(block_rows)
        return SparseMatrix(len(rows), len(basis), rows)

    def commutant_basis(self, weight: int) -> Subspace:
        """N_w: the charge zero vectors of weight w killed by h(m) for every Cartan h and m >= 1."""
        def compute() -> Subspace:
            result = kernel(self._commutant_matrix(weight))
            log.debug("%r: dim N_%d = %d", self, weight, result.dim)
            return result

        return self._cached(("commutant", weight), compute)

    def commutant_dims(self) -> GradedDims:
        return GradedDims.exact([self.commutant_basis(w).dim for w in range(self.report_cutoff + 1)])

    def annihilation_failures(self, state: State) -> List[Tuple[str, int]]:
        """(label, m) pairs of Cartan modes h(m), m >= 0, that do not kill `state`."""
        failures = []
        top = max(state.weights) if state.weights else 0
        for h in self.algebra.cartan:
            for mode in range(0, top + 1):
                if not self.space.apply_mode(h, mode, state).is_zero():
                    failures.append((self.algebra.labels[h], mode))
        return failures

    # -- generators -----------------------------------------------------------

    def parafermion_generators(self) -> GeneratorSet:
        if self.space.cutoff < 3:
            raise CutoffExceededError("The generators need a working cutoff of at least 3")

        def compute() -> GeneratorSet:
            generators = build_generators(self.space)
            for generator in generators:
                failures = self.annihilation_failures(generator.state)
                if failures:
                    label, mode = failures[0]
                    raise InternalConsistencyError(
                        "{} is not annihilated by {}({})".format(generator.name, label, mode)
                    )
            expected = self.algebra.dim - self.algebra.rank
            if len(generators) != expected:
                raise InternalConsistencyError(
                    "Expected {} generators, built {}".format(expected, len(generators))
                )
            return generators

        return self._cached("generators", compute)

    def theorem_seeds(self) -> List[State]:
        """h_i(-1)𝟙, e_{-α}(-2)e_α(-1)𝟙 for α > 0 even, x_{-β}(-2)x_β(-1)𝟙 for the odd halves β of long α."""
        space = self.space
        seeds = [space.word((h, -1)) for h in self.algebra.cartan]
        for root in self.algebra.root_datum.even_positive:
            data = root_generators(self.algebra, root.vector)
            seeds.append(space.word((data.e_minus, -2), (data.e_plus, -1)))
            if data.has_odd_pair:
                seeds.append(space.word((data.x_minus, -2), (data.x_plus, -1)))
        return seeds

    # -- closures -------------------------------------------------------------

    def closure_generate(
            self,
            seeds: Sequence[State],
            acting: Optional[Sequence[State]] = None,
            include_vacuum: bool = True
    ) -> ClosureResult:
        return closure_generate(self.space, seeds, self.report_cutoff, acting=acting, include_vacuum=include_vacuum)

    def generated_subalgebra(self) -> ClosureResult:
        return self._cached("generated", lambda: self.closure_generate(self.parafermion_generators().states))

    # -- ideals ---------------------------------------------------------------

    def j_radical_block(self, weight: int, charge: Optional[Charge] = None) -> Subspace:
        charge = self.space.zero_charge if charge is None else tuple(charge)
        return self._cached(
            ("j_radical", weight, charge),
            lambda: radical(contravariant_gram(self.space, weight, charge))
        )

    def ideal_J(self, method: IdealMethod = IdealMethod.BOTH_AGREE) -> IdealModel:
        """J on every block up to the report cutoff, by Gram radical, raw-mode closure, or both."""
        def compute() -> IdealModel:
            blocks = [
                (w, charge)
                for w in range(self.report_cutoff + 1)
                for charge in self.space.charges_at(w)
            ]
            model = IdealModel(self.report_cutoff, method)
            if method in (IdealMethod.RADICAL, IdealMethod.BOTH_AGREE):
                model.j_radical = {block: self.j_radical_block(*block) for block in blocks}
            if method in (IdealMethod.CLOSURE, IdealMethod.BOTH_AGREE):
                limit = max(self.report_cutoff, self.level + 1)
                closure = raw_mode_closure(self.space, [singular_vector(self.space)], limit)
                model.j_closure = {
                    block: closure.blocks.get(block, Subspace.zero(self.space.block_dim(*block)))
                    for block in blocks
                }
            if method is IdealMethod.BOTH_AGREE:
                for block in blocks:
                    closed, exact = model.j_closure[block].dim, model.j_radical[block].dim
                    if closed != exact:
                        model.mismatches.append((block[0], block[1], closed, exact))
                if model.mismatches:
                    model.method = IdealMethod.MISMATCH
                    log.warning("%r: J closure and radical disagree on %d blocks", self, len(model.mismatches))
            return model

        return self._cached(("ideal_J", method), compute)

    def ideal_I_tilde(self) -> IdealModel:
        """Ĩ_w = J(w, 0) ∩ N_w with quotient dims K_w = dim N_w - dim Ĩ_w."""
        def compute() -> IdealModel:
            model = IdealModel(self.report_cutoff, IdealMethod.RADICAL)
            zero = self.space.zero_charge
            for w in range(self.report_cutoff + 1):
                j_block = self.j_radical_block(w, zero)
                model.j_radical[w, zero] = j_block
                model.commutant[w] = self.commutant_basis(w)
                model.i_tilde[w] = intersect(j_block, model.commutant[w])
            log.info("%r: K dims %s", self, list(model.quotient_dims))
            return model

        return self._cached("ideal_I_tilde", compute)

    def quotient_dims(self) -> GradedDims:
        return self.ideal_I_tilde().quotient_dims

    def in_i_tilde(self, state: State) -> bool:
        """Whether a homogeneous charge zero `state` lies in Ĩ."""
        weight = state.weight
        if state.is_zero():
            return True
        if weight is None or weight > self.report_cutoff:
            raise CutoffExceededError("Membership needs a homogeneous state of weight at most {}".format(self.report_cutoff))
        if self.space.charge(state) != self.space.zero_charge:
            return False
        coordinates = self.space.coordinates(state, weight)
        return self.ideal_I_tilde().i_tilde[weight].contains(coordinates)

    def image_dims(self, closure: ClosureResult) -> GradedDims:
        """Dimensions of the image of charge zero closure blocks in K = N / Ĩ."""
        model = self.ideal_I_tilde()
        zero = self.space.zero_charge
        dims = []
        for w in range(self.report_cutoff + 1):
            block = closure.block(w, zero)
            if block is None:
                dims.append(0)
                continue
            dims.append(block.dim - intersect(block, model.i_tilde[w]).dim)
        return GradedDims.lower_bound(dims)

    # -- statements about the ideal --------------------------------------------

    def check_prop_4_3(self) -> IdealComparison:
        """Closure of e_{-θ}(0)^{k+1}e_θ(-1)^{k+1}𝟙 under the generators' modes against Ĩ."""
        model = self.ideal_I_tilde()
        v0 = lowered_singular_vector(self.space)
        closure = self._cached(
            "prop_4_3",
            lambda: self.closure_generate([v0], acting=self.parafermion_generators().states, include_vacuum=False)
        )
        zero = self.space.zero_charge
        outside = [
            w for w in range(self.report_cutoff + 1)
            if closure.block(w, zero) is not None and not closure.block(w, zero).is_subspace_of(model.i_tilde[w])
        ]
        return IdealComparison(closure, model.i_tilde_dims, outside)

    def check_prop_4_4(self, root: Root) -> SubfamilyComparison:
        """The subalgebra of K generated by one root family against the rank one coset."""
        if root.kind not in (RootKind.EVEN_LONG, RootKind.EVEN_SHORT) or not root.positive:
            raise InvalidArgumentError("{} is not an even positive root".format(root.vector))

        k_alpha = root_level(self.algebra, self.level, root.vector)
        if k_alpha + 1 > self.report_cutoff:
            raise CutoffExceededError(
                "k_α + 1 = {} exceeds the report cutoff {}".format(k_alpha + 1, self.report_cutoff)
            )

        lowered = lowered_singular_vector(self.space, root.vector)
        in_ideal = self.in_i_tilde(lowered)

        family = self.parafermion_generators().for_root(root)
        closure = self._cached(("prop_4_4", root.vector), lambda: self.closure_generate(family.states))
        subfamily_dims = self.image_dims(closure)

        rank_one_algebra = build_osp(1) if family.of_kind(GeneratorKind.OMEGA_BAR) else build_sl2()
        rank_one = ParafermionCoset(rank_one_algebra, k_alpha, self.report_cutoff, self.headroom)
        rank_one_dims = rank_one.quotient_dims()
        return SubfamilyComparison(root, k_alpha, in_ideal, subfamily_dims, rank_one_dims, rank_one_algebra.name)

