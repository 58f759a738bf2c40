import csv
import io
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List

from paraferm.checks import CheckReport, Verdict, verify
from paraferm.cli.config import RunConfig
from paraferm.constants import ENGINE_VERSION, REPORT_SCHEMA
from paraferm.coset import GradedDims, ParafermionCoset

log = logging.getLogger(__name__)

CSV_COLUMNS = ("check", "verdict", "table", "weight", "dim", "status")


@dataclass
class Report:
    config: RunConfig
    checks: List[CheckReport] = field(default_factory=list)
    tables: Dict[str, GradedDims] = field(default_factory=dict)
    engine_version: str = ENGINE_VERSION

    @property
    def failed(self) -> bool:
        return any(report.failed for report in self.checks)

    @property
    def verdict(self) -> Verdict:
        return Verdict.worst([report.verdict for report in self.checks])

    def to_dict(self) -> Dict[str, object]:
        return {
            "schema": REPORT_SCHEMA,
            "engine_version": self.engine_version,
            "config": self.config.to_dict(),
            "checks": [report.to_dict() for report in self.checks],
            "tables": {name: table.to_dict() for name, table in self.tables.items()},
            "timing": {report.check_id: report.elapsed for report in self.checks},
        }


def dimension_tables(engine: ParafermionCoset) -> Dict[str, GradedDims]:
    model = engine.ideal_I_tilde()
    return {
        "V0": engine.charge_block_dims(),
        "N": model.commutant_dims,
        "J0": model.j_dims(engine.space.zero_charge),
        "I_tilde": model.i_tilde_dims,
        "K": model.quotient_dims,
    }


def run(config: RunConfig) -> Report:
    """Runs the configured checks; the result does not depend on the worker count."""
    report = Report(config)
    if not config.checks:
        return report

    engine = ParafermionCoset(config.build_algebra(), config.level, config.cutoff, config.effective_headroom)
    log.info("Running %d checks on %r with %d workers", len(config.checks), engine, config.workers)
    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        report.checks = list(executor.map(lambda check_id: verify(check_id, engine), config.checks))
    report.tables = dimension_tables(engine)
    return report


def _csv_rows(report: Report) -> List[List[object]]:
    rows: List[List[object]] = []
    for check in report.checks:
        if not check.tables:
            rows.append([check.check_id, check.verdict.value, "", "", "", ""])
            continue
        for name, table in sorted(check.tables.items()):
            for weight, (dim, status) in enumerate(zip(table.dims, table.statuses)):
                rows.append([check.check_id, check.verdict.value, name, weight, dim, status.value])
    for name, table in report.tables.items():
        for weight, (dim, status) in enumerate(zip(table.dims, table.statuses)):
            rows.append(["", "", name, weight, dim, status.value])
    return rows


def emit_report(report: Report, format: str = "json") -> bytes:
    if format == "json":
        return (json.dumps(report.to_dict(), sort_keys=True, ensure_ascii=False, indent=2) + "\n").encode("utf-8")
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(_csv_rows(report))
        return buffer.getvalue().encode("utf-8")
    raise ValueError("Unknown report format {!r}".format(format))
