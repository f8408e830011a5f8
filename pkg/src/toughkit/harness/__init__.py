"""Property verification over graph corpora, with brute-force ground truth."""

from .checks import CHECKS, HarnessConfig, replay, run_all, run_check
from .oracle import MAX_ORACLE_N, oracle_toughness
from .report import CheckReport, summary_table, write_json_lines

__all__ = [
    "CHECKS",
    "CheckReport",
    "HarnessConfig",
    "MAX_ORACLE_N",
    "oracle_toughness",
    "replay",
    "run_all",
    "run_check",
    "summary_table",
    "write_json_lines",
]
