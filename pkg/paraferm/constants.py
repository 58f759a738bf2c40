ENGINE_VERSION = "0.1.0"
REPORT_SCHEMA = "paraferm-report/1"
WORKERS_ENV_VAR = "PARAFERM_WORKERS"
DEFAULT_CUTOFF = 4
DEFAULT_WORKERS = 1
VACUUM_KEY = "1"
