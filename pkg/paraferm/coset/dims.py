import enum
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from paraferm.exactla import Subspace
from paraferm.exceptions import DimensionMismatchError
from paraferm.superalgebra.algebra import Charge


class DimStatus(enum.Enum):
    EXACT = "exact"
    LOWER_BOUND = "lower-bound"


@dataclass(frozen=True)
class GradedDims(Sequence):
    """Dimensions indexed by conformal weight 0..len-1, each with a status."""
    dims: Tuple[int, ...]
    statuses: Tuple[DimStatus, ...]

    def __post_init__(self) -> None:
        if len(self.dims) != len(self.statuses):
            raise DimensionMismatchError("Every graded dimension needs exactly one status")
        if any(dim < 0 for dim in self.dims):
            raise DimensionMismatchError("Graded dimensions are nonnegative")

    @classmethod
    def exact(cls, dims: Sequence[int]) -> "GradedDims":
        return cls(tuple(dims), tuple(DimStatus.EXACT for _ in dims))

    @classmethod
    def lower_bound(cls, dims: Sequence[int]) -> "GradedDims":
        return cls(tuple(dims), tuple(DimStatus.LOWER_BOUND for _ in dims))

    def __getitem__(self, index):
        return self.dims[index]

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self) -> Iterator[int]:
        return iter(self.dims)

    def status(self, weight: int) -> DimStatus:
        return self.statuses[weight]

    def truncated(self, cutoff: int) -> "GradedDims":
        return GradedDims(self.dims[:cutoff + 1], self.statuses[:cutoff + 1])

    def meets(self, target: Sequence[int]) -> List[bool]:
        return [mine == theirs for mine, theirs in zip(self.dims, target)]

    def exceeds(self, target: Sequence[int]) -> List[int]:
        """Weights at which a lower bound is larger than `target`."""
        return [weight for weight, (mine, theirs) in enumerate(zip(self.dims, target)) if mine > theirs]

    def minus(self, other: Sequence[int], status: Optional[DimStatus] = None) -> "GradedDims":
        dims = [mine - theirs for mine, theirs in zip(self.dims, other)]
        statuses = self.statuses[:len(dims)] if status is None else tuple(status for _ in dims)
        return GradedDims(tuple(dims), tuple(statuses))

    def to_dict(self) -> Dict[str, object]:
        return {
            "dims": list(self.dims),
            "status": [status.value for status in self.statuses],
        }


@dataclass
class ClosureResult:
    """Closed subspaces per (weight, charge) block of a one-sided closure sweep.

    `stabilized` certifies that the final sweep added nothing at any weight up
    to the working cutoff; dims stay lower bounds until compared with a target.
    """
    dims: GradedDims
    blocks: Dict[Tuple[int, Charge], Subspace]
    sweeps: int
    stabilized: bool

    def block(self, weight: int, charge: Charge) -> Optional[Subspace]:
        return self.blocks.get((weight, tuple(charge)))

    def to_dict(self) -> Dict[str, object]:
        return {
            "dims": self.dims.to_dict(),
            "sweeps": self.sweeps,
            "stabilized": self.stabilized,
        }


class IdealMethod(enum.Enum):
    RADICAL = "radical"
    CLOSURE = "closure"
    BOTH_AGREE = "both-agree"
    MISMATCH = "mismatch"


@dataclass
class IdealModel:
    report_cutoff: int
    method: IdealMethod
    j_radical: Dict[Tuple[int, Charge], Subspace] = field(default_factory=dict)
    j_closure: Dict[Tuple[int, Charge], Subspace] = field(default_factory=dict)
    mismatches: List[Tuple[int, Charge, int, int]] = field(default_factory=list)
    commutant: Dict[int, Subspace] = field(default_factory=dict)
    i_tilde: Dict[int, Subspace] = field(default_factory=dict)

    def j_block(self, weight: int, charge: Charge) -> Subspace:
        key = (weight, tuple(charge))
        if key in self.j_radical:
            return self.j_radical[key]
        return self.j_closure[key]

    def j_dims(self, charge: Charge) -> GradedDims:
        return GradedDims.exact([self.j_block(w, charge).dim for w in range(self.report_cutoff + 1)])

    @property
    def commutant_dims(self) -> GradedDims:
        return GradedDims.exact([self.commutant[w].dim for w in sorted(self.commutant)])

    @property
    def i_tilde_dims(self) -> GradedDims:
        return GradedDims.exact([self.i_tilde[w].dim for w in sorted(self.i_tilde)])

    @property
    def quotient_dims(self) -> GradedDims:
        """dim K_w = dim N_w - dim Ĩ_w."""
        return self.commutant_dims.minus(self.i_tilde_dims)

    def to_dict(self) -> Dict[str, object]:
        return {
            "method": self.method.value,
            "report_cutoff": self.report_cutoff,
            "mismatches": [
                {"weight": w, "charge": list(charge), "closure": c, "radical": r}
                for w, charge, c, r in self.mismatches
            ],
            "N": self.commutant_dims.to_dict(),
            "I_tilde": self.i_tilde_dims.to_dict(),
            "K": self.quotient_dims.to_dict(),
        }
