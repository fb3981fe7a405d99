"""Auditable inference reports and their append-only file store.

A report captures everything needed to audit one backend exchange: the full
prompt text (whose digest is the report key), the response, the persona,
the cited solutions, and the backend identity. The store is a directory of
structured documents written atomically (temp file + rename) and never
modified afterwards.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .context import fmt_cost, fmt_impact
from .persona import Persona

__all__ = [
    "REPORT_FORMAT",
    "InferenceReport",
    "ReportError",
    "ReportStore",
    "render_report",
]

#: Version tag of the serialized report document.
REPORT_FORMAT = "emoadvisor.report/1"


class ReportError(Exception):
    """Raised for report persistence and lookup failures."""


@dataclass(frozen=True)
class InferenceReport:
    """One immutable backend exchange.

    ``prompt_hash`` is recomputable from ``prompt_text``; ``solution_refs``
    are 0-based front positions; ``cited_rows`` snapshot the objective
    values of those solutions so a report renders without the front.
    """

    prompt_hash: str
    backend_id: str
    response_text: str
    created_at: str
    solution_refs: tuple[int, ...]
    persona: Persona
    mode: str
    prompt_text: str
    cited_rows: tuple[dict, ...] = ()

    def to_document(self) -> dict:
        return {
            "format": REPORT_FORMAT,
            "prompt_hash": self.prompt_hash,
            "backend_id": self.backend_id,
            "response_text": self.response_text,
            "created_at": self.created_at,
            "solution_refs": list(self.solution_refs),
            "persona": self.persona.to_document(),
            "mode": self.mode,
            "prompt_text": self.prompt_text,
            "cited_rows": [dict(r) for r in self.cited_rows],
        }

    @classmethod
    def from_document(cls, doc: dict) -> "InferenceReport":
        if doc.get("format") != REPORT_FORMAT:
            raise ReportError(f"unsupported report format: {doc.get('format')!r}")
        return cls(
            prompt_hash=doc["prompt_hash"],
            backend_id=doc["backend_id"],
            response_text=doc["response_text"],
            created_at=doc["created_at"],
            solution_refs=tuple(int(i) for i in doc["solution_refs"]),
            persona=Persona.from_document(doc["persona"]),
            mode=doc["mode"],
            prompt_text=doc["prompt_text"],
            cited_rows=tuple(dict(r) for r in doc.get("cited_rows", [])),
        )


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat()


class ReportStore:
    """Append-only directory of report documents, keyed by prompt hash.

    File names are ``<prompt_hash>-<serial>.json``; writes go through a
    temp file and an atomic rename, so the store never holds a partial
    document. Reports are never rewritten.
    """

    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _paths_for(self, prompt_hash: str) -> list[Path]:
        return sorted(self.root.glob(f"{prompt_hash}-*.json"))

    def save(self, report: InferenceReport) -> Path:
        """Persist a report atomically and return its path."""
        serial = len(self._paths_for(report.prompt_hash))
        while True:
            path = self.root / f"{report.prompt_hash}-{serial:04d}.json"
            if not path.exists():
                break
            serial += 1
        payload = json.dumps(report.to_document(), indent=2, sort_keys=True)
        fd, tmp_name = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
            os.replace(tmp_name, path)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
        return path

    def load(self, prompt_hash: str) -> InferenceReport:
        """The newest stored report for a prompt hash."""
        paths = self._paths_for(prompt_hash)
        if not paths:
            raise ReportError(f"no report stored for prompt hash {prompt_hash}")
        doc = json.loads(paths[-1].read_text(encoding="utf-8"))
        return InferenceReport.from_document(doc)

    def list_hashes(self) -> list[str]:
        """All distinct prompt hashes present, sorted."""
        return sorted({p.name.rsplit("-", 1)[0] for p in self.root.glob("*.json")})


def new_report(
    prompt_hash: str,
    backend_id: str,
    response_text: str,
    solution_refs: tuple[int, ...],
    persona: Persona,
    mode: str,
    prompt_text: str,
    cited_rows: tuple[dict, ...],
) -> InferenceReport:
    """Construct a report stamped with the current UTC time."""
    return InferenceReport(
        prompt_hash=prompt_hash,
        backend_id=backend_id,
        response_text=response_text,
        created_at=_timestamp(),
        solution_refs=solution_refs,
        persona=persona,
        mode=mode,
        prompt_text=prompt_text,
        cited_rows=cited_rows,
    )


def render_report(report: InferenceReport, format: str = "plain") -> str:
    """Render a report for people ("plain") or machines ("structured").

    Plain output is the response followed by the cited solution rows (at
    display precision); structured output is the full report document as
    JSON, which parses and round-trips losslessly.
    """
    if format == "structured":
        return json.dumps(report.to_document(), indent=2, sort_keys=True)
    if format != "plain":
        raise ReportError(f"unknown render format {format!r}")
    parts = [report.response_text]
    if report.cited_rows:
        parts.append("")
        parts.append("Cited solutions:")
        for row in report.cited_rows:
            parts.append(
                f"  Solution {row['number']}: total cost "
                f"{fmt_cost(row['total_cost'])} M$; environmental impact "
                f"{fmt_impact(row['environmental_impact'])}"
            )
    return "\n".join(parts)
