"""Verification reports and their json / csv / table renderings."""

from __future__ import annotations

import csv
import io
import json
import time
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from typing import Any, TypeVar

PASS, FAIL, UNCHECKED = "pass", "fail", "unchecked"

T = TypeVar("T")


class BudgetExceeded(Exception):
    pass


class Deadline:
    """Wall-clock budget; ``None`` means unlimited."""

    def __init__(self, seconds: float | None = None):
        self.seconds = seconds
        self._end = None if seconds is None else time.monotonic() + seconds

    def expired(self) -> bool:
        return self._end is not None and time.monotonic() >= self._end

    def check(self) -> None:
        if self.expired():
            raise BudgetExceeded(f"budget of {self.seconds}s exhausted")

    def watch(self, items: Iterable[T], every: int = 1024) -> Iterator[T]:
        for k, item in enumerate(items):
            if k % every == 0:
                self.check()
            yield item


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""


@dataclass
class VerificationReport:
    command: str
    parameters: dict[str, Any]
    checks: list[Check] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    elapsed_ms: float = 0.0
    kind: str = "verify"  # "count", "seq" or "verify"

    @property
    def status(self) -> str:
        if any(c.status == FAIL for c in self.checks):
            return FAIL
        return PASS

    @property
    def partial(self) -> bool:
        return any(c.status == UNCHECKED and c.detail.startswith("budget") for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, PASS if ok else FAIL, detail))
        return ok

    def skip(self, name: str, detail: str) -> None:
        self.checks.append(Check(name, UNCHECKED, detail))

    def run(self, name: str, deadline: Deadline, fn: Callable[[], tuple[bool, str]]) -> None:
        """Run one check; an exhausted budget marks it (and later ones) unchecked."""
        if deadline.expired():
            self.skip(name, "budget exhausted before start")
            return
        try:
            ok, detail = fn()
        except BudgetExceeded:
            self.skip(name, "budget exhausted during check")
            return
        self.add(name, ok, detail)

    def to_dict(self, *, elapsed: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {"command": self.command, **self.parameters}
        if self.kind == "count" and set(self.counts) == {"value"}:
            out["value"] = str(self.counts["value"])
        elif self.counts:
            out["counts"] = {k: str(v) for k, v in self.counts.items()}
        if self.checks:
            out["status"] = self.status
            out["checks"] = [
                {"name": c.name, "status": c.status, "detail": c.detail} for c in self.checks
            ]
        if elapsed:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any], parameters: dict[str, Any], kind: str) -> VerificationReport:
        counts = {}
        if "value" in data:
            counts["value"] = int(data["value"])
        for k, v in data.get("counts", {}).items():
            counts[k] = int(v)
        checks = [Check(c["name"], c["status"], c.get("detail", "")) for c in data.get("checks", [])]
        return cls(
            command=data["command"],
            parameters=dict(parameters),
            checks=checks,
            counts=counts,
            elapsed_ms=float(data.get("elapsed_ms", 0.0)),
            kind=kind,
        )


def render_json(report: VerificationReport, *, elapsed: bool = False) -> str:
    return json.dumps(report.to_dict(elapsed=elapsed), separators=(",", ":"), ensure_ascii=False)


def _csv_key(key: str) -> int | str:
    return int(key) if key.isdigit() else key


def render_csv(report: VerificationReport, *, elapsed: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    if report.counts:
        w.writerow(["n" if report.kind == "seq" else "name", "value"])
        for k, v in report.counts.items():
            w.writerow([_csv_key(k), str(v)])
    if report.checks:
        if report.counts:
            buf.write("\n")
        w.writerow(["check", "status", "detail"])
        for c in report.checks:
            w.writerow([c.name, c.status, c.detail])
    if elapsed:
        w.writerow(["elapsed_ms", f"{report.elapsed_ms:.3f}"])
    return buf.getvalue().rstrip("\n")


def render_table(report: VerificationReport, *, elapsed: bool = False) -> str:
    lines = [report.command]
    for k, v in report.parameters.items():
        lines.append(f"  {k} = {v}")
    if report.counts:
        width = max(len(k) for k in report.counts)
        lines.append("counts:")
        for k, v in report.counts.items():
            lines.append(f"  {k.ljust(width)}  {v}")
    if report.checks:
        lines.append("checks:")
        for c in report.checks:
            tail = f"  {c.detail}" if c.detail else ""
            lines.append(f"  [{c.status.upper():9}] {c.name}{tail}")
        skipped = sum(1 for c in report.checks if c.status == UNCHECKED)
        lines.append(f"status: {report.status.upper()}" + (f" ({skipped} unchecked)" if skipped else ""))
    if elapsed:
        lines.append(f"elapsed: {report.elapsed_ms:.1f} ms")
    return "\n".join(lines)


RENDERERS = {"json": render_json, "csv": render_csv, "table": render_table}
