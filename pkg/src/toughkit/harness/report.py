"""Check reports: JSON lines for machines, a summary table for people."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"
HEURISTIC = "heuristic"

# failures beyond this many are counted but not stored
MAX_STORED_FAILURES = 50


@dataclass
class CheckReport:
    """Outcome of one check over one corpus.

    ``mode`` says how much the result is worth: only ``exhaustive`` runs
    cover their whole stated domain.  ``sampled`` runs carry the seed and
    sample count, and ``heuristic`` runs only ever report the absence of a
    counterexample found by an incomplete search.
    """

    check_id: str
    corpus_size: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)
    failure_count: int = 0
    elapsed: float = 0.0
    mode: str = EXHAUSTIVE
    seed: Optional[int] = None
    count: Optional[int] = None
    notes: str = ""
    stats: dict = field(default_factory=dict)

    def fail(self, graph6: str, detail: str) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_STORED_FAILURES:
            self.failures.append((graph6, detail))

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    @property
    def mode_label(self) -> str:
        if self.mode == SAMPLED:
            return f"sampled(seed={self.seed}, count={self.count})"
        return self.mode

    def to_json(self) -> dict:
        out = {
            "check_id": self.check_id,
            "mode": self.mode,
            "corpus_size": self.corpus_size,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures": [{"graph6": g6, "detail": d} for g6, d in self.failures],
            "elapsed": round(self.elapsed, 4),
        }
        if self.mode == SAMPLED:
            out["seed"] = self.seed
            out["count"] = self.count
        if self.notes:
            out["notes"] = self.notes
        if self.stats:
            out["stats"] = self.stats
        return out

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def write_json_lines(reports: Iterable[CheckReport], fh: TextIO) -> None:
    for r in reports:
        fh.write(r.to_json_line() + "\n")


def summary_table(reports: Iterable[CheckReport]) -> str:
    rows = [("check", "mode", "corpus", "failures", "seconds", "result")]
    for r in reports:
        verdict = "PASS" if r.passed else "FAIL"
        if r.mode == HEURISTIC and r.passed:
            verdict = "no counterexample found (heuristic)"
        rows.append((r.check_id, r.mode_label, str(r.corpus_size), str(r.failure_count),
                     f"{r.elapsed:.2f}", verdict))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
