"""Structured scan reports shared by the verification commands.

A ScanReport carries a header (command name, parameters, version,
timestamp), a list of typed rows, and an aggregate verdict.  Rows are
plain dicts so every command can attach its own columns; the report
guarantees deterministic ordering for fixed inputs and JSON round-trips.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .errors import EmptyReports

VERSION = "0.1.0"

PASS = "PASS"
FAIL = "FAIL"
INFO = "INFO"


@dataclass
class ScanReport:
    command: str
    parameters: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)
    version: str = VERSION
    timestamp: str = ""

    def __post_init__(self):
        if not self.timestamp:
            self.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")

    def add_row(self, status: str, **fields) -> dict:
        row = {"status": status, **fields}
        self.rows.append(row)
        return row

    @property
    def verdict(self) -> str:
        """PASS iff no row failed; INFO-only reports still count as PASS."""
        if any(r["status"] == FAIL for r in self.rows):
            return FAIL
        return PASS

    @property
    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, INFO: 0}
        for r in self.rows:
            out[r.get("status", INFO)] = out.get(r.get("status", INFO), 0) + 1
        return out

    def to_dict(self) -> dict:
        return {
            "header": {
                "command": self.command,
                "parameters": self.parameters,
                "version": self.version,
                "timestamp": self.timestamp,
            },
            "rows": self.rows,
            "verdict": self.verdict,
            "counts": self.counts,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, default=str)

    def summary_line(self) -> str:
        c = self.counts
        return (
            f"[{self.verdict}] {self.command}: "
            f"{c[PASS]} pass, {c[FAIL]} fail, {c[INFO]} info"
        )


def merge_reports(reports: list, command: str, parameters: dict | None = None) -> ScanReport:
    """Combine sub-reports row-wise; verdict is the conjunction."""
    if not reports:
        raise EmptyReports("cannot merge zero reports")
    out = ScanReport(command, parameters or {})
    for rep in reports:
        for row in rep.rows:
            out.rows.append({"source": rep.command, **row})
    return out
