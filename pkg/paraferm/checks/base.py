import abc
import enum
import logging
import time
import warnings
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

from paraferm.coset import GradedDims, ParafermionCoset
from paraferm.exceptions import CutoffExceededError, InternalConsistencyError

log = logging.getLogger(__name__)


class Verdict(enum.Enum):
    VERIFIED = "verified-at-cutoff"
    INCONCLUSIVE = "inconclusive-raise-cutoff"
    FAILED = "FAILED"

    @property
    def severity(self) -> int:
        return _SEVERITY[self]

    @classmethod
    def worst(cls, verdicts: Sequence["Verdict"]) -> "Verdict":
        return max(verdicts, key=lambda verdict: verdict.severity, default=cls.VERIFIED)


_SEVERITY = {Verdict.VERIFIED: 0, Verdict.INCONCLUSIVE: 1, Verdict.FAILED: 2}


@dataclass
class CheckReport:
    check_id: str
    verdict: Verdict
    tables: Dict[str, GradedDims] = field(default_factory=dict)
    details: Dict[str, object] = field(default_factory=dict)
    messages: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def failed(self) -> bool:
        return self.verdict is Verdict.FAILED

    def to_dict(self) -> Dict[str, object]:
        """Everything but timing, which reports keep in a separate section."""
        return {
            "check": self.check_id,
            "verdict": self.verdict.value,
            "tables": {name: table.to_dict() for name, table in sorted(self.tables.items())},
            "details": self.details,
            "messages": list(self.messages),
        }


def compare_lower_bound(lower: GradedDims, target: Sequence[int]) -> Verdict:
    """FAILED if a lower bound overshoots its exact target, VERIFIED if it meets it everywhere."""
    if lower.exceeds(target):
        return Verdict.FAILED
    if all(lower.meets(target)):
        return Verdict.VERIFIED
    return Verdict.INCONCLUSIVE


class Check(abc.ABC):
    check_id: str = ""

    def __init__(self, engine: ParafermionCoset) -> None:
        self._engine = engine

    @property
    def engine(self) -> ParafermionCoset:
        return self._engine

    @abc.abstractmethod
    def run(self) -> CheckReport:
        pass

    def verify(self) -> CheckReport:
        log.info("Running %s on %r", self.check_id, self._engine)
        started = time.perf_counter()
        try:
            report = self.run()
        except InternalConsistencyError as error:
            report = CheckReport(self.check_id, Verdict.FAILED, messages=[str(error)])
        except CutoffExceededError as error:
            report = CheckReport(self.check_id, Verdict.INCONCLUSIVE, messages=[str(error)])
        report.elapsed = time.perf_counter() - started

        if report.verdict is Verdict.INCONCLUSIVE:
            warnings.warn("{} is inconclusive at cutoff {}".format(self.check_id, self._engine.report_cutoff))
        log.info("%s finished in %.3fs: %s", self.check_id, report.elapsed, report.verdict.value)
        return report
