"""File-backed run store: directory per run, atomic JSON documents.

Layout under the store root::

    runs/<run_id>/descriptor.json   lifecycle + parameters
    runs/<run_id>/result.json       completed run document
    runs/<run_id>/front.csv         front export (bit-compatible with the CLI)
    runs/<run_id>/analytics.json    cached analytics bundle
    reports/                        inference report store (append-only)

Writes go through temp-file + rename, so readers never observe a partial
document and the store reloads losslessly after a process restart. Each run
has a single writer (the worker that executes it); everything else reads.
"""

from __future__ import annotations

import json
import os
import tempfile
import uuid
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from pathlib import Path

from ..analytics import ParetoFront
from ..nsga2 import NsgaParams, RunResult, export_front_csv
from ..inference import ReportStore

DESCRIPTOR_FORMAT = "emoadvisor.run-descriptor/1"

RUN_STATUSES = ("pending", "running", "done", "failed")

# Transitions must move strictly forward; done and failed are terminal.
_STATUS_STAGE = {"pending": 0, "running": 1, "done": 2, "failed": 2}


class StoreError(Exception):
    """Base class for run-store failures."""


class UnknownRunError(StoreError):
    """Raised when a run id is not present in the store."""


class TransitionError(StoreError):
    """Raised on a backward or terminal-escaping status change."""


@dataclass(frozen=True)
class RunDescriptor:
    """Lifecycle record for one optimization run."""

    run_id: str
    status: str
    params: NsgaParams
    instance_seed: int
    instance_ref: str
    created_at: str
    artifact_paths: dict
    error: str | None = None

    def __post_init__(self):
        if self.status not in RUN_STATUSES:
            raise StoreError(f"unknown run status {self.status!r}")

    def to_document(self) -> dict:
        return {
            "format": DESCRIPTOR_FORMAT,
            "run_id": self.run_id,
            "status": self.status,
            "params": self.params.to_document(),
            "instance_seed": self.instance_seed,
            "instance_ref": self.instance_ref,
            "created_at": self.created_at,
            "artifact_paths": dict(self.artifact_paths),
            "error": self.error,
        }

    @classmethod
    def from_document(cls, doc: dict) -> "RunDescriptor":
        if doc.get("format") != DESCRIPTOR_FORMAT:
            raise StoreError(f"unsupported descriptor format: {doc.get('format')!r}")
        return cls(
            run_id=doc["run_id"],
            status=doc["status"],
            params=NsgaParams.from_document(doc["params"]),
            instance_seed=doc["instance_seed"],
            instance_ref=doc["instance_ref"],
            created_at=doc["created_at"],
            artifact_paths=dict(doc["artifact_paths"]),
            error=doc.get("error"),
        )


def _write_json_atomic(path: Path, doc: dict) -> None:
    fd, tmp = tempfile.mkstemp(prefix=path.name, suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _read_json(path: Path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


class RunStore:
    """Directory-backed registry of runs, results, and inference reports."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.runs_dir = self.root / "runs"
        self.reports_dir = self.root / "reports"
        self.runs_dir.mkdir(parents=True, exist_ok=True)
        self.report_store = ReportStore(self.reports_dir)

    # -- descriptors --------------------------------------------------------

    def _run_dir(self, run_id: str) -> Path:
        return self.runs_dir / run_id

    def _descriptor_path(self, run_id: str) -> Path:
        return self._run_dir(run_id) / "descriptor.json"

    def create(self, params: NsgaParams, instance_seed: int, instance_ref: str) -> RunDescriptor:
        """Register a new pending run and persist its descriptor."""
        while True:
            run_id = uuid.uuid4().hex[:12]
            run_dir = self._run_dir(run_id)
            if not run_dir.exists():
                break
        run_dir.mkdir(parents=True)
        rel = f"runs/{run_id}"
        descriptor = RunDescriptor(
            run_id=run_id,
            status="pending",
            params=params,
            instance_seed=instance_seed,
            instance_ref=instance_ref,
            created_at=datetime.now(timezone.utc).isoformat(),
            artifact_paths={
                "run_dir": rel,
                "result": f"{rel}/result.json",
                "front_csv": f"{rel}/front.csv",
                "reports": "reports",
            },
        )
        _write_json_atomic(self._descriptor_path(run_id), descriptor.to_document())
        return descriptor

    def get(self, run_id: str) -> RunDescriptor:
        path = self._descriptor_path(run_id)
        if not path.is_file():
            raise UnknownRunError(f"no run with id {run_id!r}")
        return RunDescriptor.from_document(_read_json(path))

    def list_runs(self) -> list[RunDescriptor]:
        """All descriptors, oldest first (created_at, then run_id)."""
        out = []
        if self.runs_dir.is_dir():
            for entry in self.runs_dir.iterdir():
                if (entry / "descriptor.json").is_file():
                    out.append(RunDescriptor.from_document(_read_json(entry / "descriptor.json")))
        out.sort(key=lambda d: (d.created_at, d.run_id))
        return out

    def set_status(self, run_id: str, status: str, error: str | None = None) -> RunDescriptor:
        """Advance a run's status; transitions are forward-only."""
        if status not in RUN_STATUSES:
            raise StoreError(f"unknown run status {status!r}")
        current = self.get(run_id)
        if _STATUS_STAGE[status] <= _STATUS_STAGE[current.status]:
            raise TransitionError(
                f"run {run_id}: cannot move from {current.status!r} to {status!r}"
            )
        updated = replace(current, status=status, error=error)
        _write_json_atomic(self._descriptor_path(run_id), updated.to_document())
        return updated

    # -- results ------------------------------------------------------------

    def _result_path(self, run_id: str) -> Path:
        return self._run_dir(run_id) / "result.json"

    def _front_csv_path(self, run_id: str) -> Path:
        return self._run_dir(run_id) / "front.csv"

    def _analytics_path(self, run_id: str) -> Path:
        return self._run_dir(run_id) / "analytics.json"

    def save_result(self, run_id: str, result: RunResult) -> RunDescriptor:
        """Persist a completed run's document and CSV export, then mark done."""
        self.get(run_id)  # existence check before writing artifacts
        _write_json_atomic(self._result_path(run_id), result.to_document())
        export_front_csv(result, self._front_csv_path(run_id))
        return self.set_status(run_id, "done")

    def mark_failed(self, run_id: str, message: str) -> RunDescriptor:
        return self.set_status(run_id, "failed", error=message)

    def load_result_document(self, run_id: str) -> dict:
        """The stored run document, exactly as persisted."""
        path = self._result_path(run_id)
        if not path.is_file():
            raise UnknownRunError(f"run {run_id!r} has no stored result")
        return _read_json(path)

    def load_front(self, run_id: str) -> ParetoFront:
        return RunResult.from_document(self.load_result_document(run_id)).front

    def front_csv_text(self, run_id: str) -> str:
        path = self._front_csv_path(run_id)
        if not path.is_file():
            raise UnknownRunError(f"run {run_id!r} has no front export")
        return path.read_text(encoding="utf-8")

    # -- analytics cache ----------------------------------------------------

    def load_analytics(self, run_id: str) -> dict | None:
        path = self._analytics_path(run_id)
        if not path.is_file():
            return None
        return _read_json(path)

    def save_analytics(self, run_id: str, doc: dict) -> None:
        _write_json_atomic(self._analytics_path(run_id), doc)
