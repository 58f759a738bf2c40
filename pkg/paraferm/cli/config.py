import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Tuple, Union

from paraferm.checks import check_ids
from paraferm.constants import DEFAULT_CUTOFF, DEFAULT_WORKERS
from paraferm.exceptions import InvalidConfigError
from paraferm.superalgebra import LieSuperalgebra, build_osp, build_sl2

ALGEBRA_PATTERN = re.compile(r"^(?P<family>osp|sl2)(?P<n>\d+)?$")
FORMATS = ("json", "csv")


def parse_checks(checks: Union[str, Iterable[str], None]) -> Tuple[str, ...]:
    """'all', a comma separated string or an iterable of ids; order follows the registry."""
    if checks is None:
        return ()
    if isinstance(checks, str):
        if checks.strip() == "all":
            return tuple(check_ids())
        checks = [part.strip() for part in checks.split(",") if part.strip()]
    requested = list(dict.fromkeys(checks))
    unknown = [check for check in requested if check not in check_ids()]
    if unknown:
        raise InvalidConfigError(
            "Unknown checks {}; expected some of {}".format(", ".join(unknown), ", ".join(check_ids()))
        )
    return tuple(check for check in check_ids() if check in requested)


@dataclass(frozen=True)
class RunConfig:
    algebra: str = "osp"
    n: int = 1
    level: int = 1
    cutoff: int = DEFAULT_CUTOFF
    headroom: Optional[int] = None
    checks: Tuple[str, ...] = field(default_factory=lambda: tuple(check_ids()))
    output: Optional[str] = None
    format: str = "json"
    workers: int = DEFAULT_WORKERS

    def __post_init__(self) -> None:
        match = ALGEBRA_PATTERN.match(self.algebra)
        if match is None:
            raise InvalidConfigError("Unknown algebra {!r}; use osp, ospN or sl2".format(self.algebra))
        if match.group("n") is not None:
            if match.group("family") == "sl2":
                raise InvalidConfigError("sl2 takes no rank suffix")
            object.__setattr__(self, "n", int(match.group("n")))
        object.__setattr__(self, "algebra", match.group("family"))

        if self.n < 1:
            raise InvalidConfigError("n must be at least 1, got {}".format(self.n))
        if self.level < 1:
            raise InvalidConfigError("The level k must be a positive integer, got {}".format(self.level))
        if self.cutoff < 2:
            raise InvalidConfigError("The report cutoff must be at least 2, got {}".format(self.cutoff))
        if self.headroom is not None and self.headroom < 0:
            raise InvalidConfigError("Headroom must be nonnegative, got {}".format(self.headroom))
        if self.format not in FORMATS:
            raise InvalidConfigError("Unknown format {!r}; use json or csv".format(self.format))
        if self.workers < 1:
            raise InvalidConfigError("At least one worker is needed, got {}".format(self.workers))
        object.__setattr__(self, "checks", parse_checks(self.checks))

    @property
    def effective_headroom(self) -> int:
        return self.level + 1 if self.headroom is None else self.headroom

    @property
    def algebra_name(self) -> str:
        return "sl2" if self.algebra == "sl2" else "osp(1|{})".format(2 * self.n)

    def build_algebra(self) -> LieSuperalgebra:
        if self.algebra == "sl2":
            return build_sl2()
        return build_osp(self.n)

    def to_dict(self) -> Dict[str, object]:
        """Configuration echo; the worker count and output path do not influence results."""
        return {
            "algebra": self.algebra_name,
            "n": self.n,
            "k": self.level,
            "cutoff": self.cutoff,
            "headroom": self.effective_headroom,
            "working_cutoff": self.cutoff + self.effective_headroom,
            "checks": list(self.checks),
            "format": self.format,
        }
