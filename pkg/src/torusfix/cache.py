"""Append-only result cache: one JSON document per line, one file per subcommand."""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Any

from .report import VerificationReport

logger = logging.getLogger(__name__)

CACHE_ENV = "TORUSFIX_CACHE_DIR"


class ResultCache:
    def __init__(self, directory: str | os.PathLike | None):
        self.directory: Path | None = None
        if directory is None:
            return
        path = Path(directory)
        try:
            path.mkdir(parents=True, exist_ok=True)
            probe = path / ".write-probe"
            probe.write_text("")
            probe.unlink()
        except OSError as exc:
            logger.warning("cache directory %s is not writable (%s); caching disabled", path, exc)
            return
        self.directory = path

    @property
    def enabled(self) -> bool:
        return self.directory is not None

    def _file(self, command: str) -> Path:
        assert self.directory is not None
        return self.directory / (command.replace(" ", "_") + ".jsonl")

    def lookup(self, command: str, parameters: dict[str, Any], kind: str) -> VerificationReport | None:
        if not self.enabled:
            return None
        path = self._file(command)
        if not path.exists():
            return None
        found = None
        with path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    entry = json.loads(line)
                    if entry["parameters"] == parameters:
                        found = VerificationReport.from_dict(entry["report"], parameters, kind)
                except (ValueError, KeyError, TypeError) as exc:
                    logger.warning("skipping corrupt cache line %s:%d (%s)", path, lineno, exc)
        return found

    def store(self, report: VerificationReport) -> None:
        if not self.enabled:
            return
        entry = {"parameters": report.parameters, "report": report.to_dict(elapsed=True)}
        try:
            with self._file(report.command).open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(entry, sort_keys=True) + "\n")
        except OSError as exc:
            logger.warning("cache write failed (%s); continuing without it", exc)


def cache_lookup_store(cache: ResultCache, report_factory, command: str,
                       parameters: dict[str, Any], kind: str) -> tuple[VerificationReport, bool]:
    """Return ``(report, hit)``; computes and stores the report on a miss.

    Partial reports (budget ran out) are never stored.
    """
    cached = cache.lookup(command, parameters, kind)
    if cached is not None:
        return cached, True
    report = report_factory()
    if not report.partial:
        cache.store(report)
    return report, False
