from .config import RunConfig, parse_checks
from .report import Report, dimension_tables, emit_report, run

__all__ = (
    'RunConfig',
    'Report',
    'parse_checks',
    'run',
    'emit_report',
    'dimension_tables',
)
