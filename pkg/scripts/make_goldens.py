"""Regenerate the committed golden prompts and responses under tests/goldens/.

Each golden scenario pins one (template, persona, selection) combination
against the packaged reference front. Outputs are deterministic: the offline
backend derives every sentence from the context document, so regenerating on
any machine must reproduce the committed bytes exactly. Run from the
repository root:

    python3 scripts/make_goldens.py
"""

from __future__ import annotations

import json
from pathlib import Path

from emoadvisor.analytics import analytics_document, categorize_variables, knee_index
from emoadvisor.benchmark import build_schema
from emoadvisor.inference import (
    BackendConfig,
    Persona,
    build_context,
    build_prompt,
    infer,
)
from emoadvisor.inference.prompts import preamble_for
from emoadvisor.reference import load_reference_front

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "tests" / "goldens"


def golden_scenarios(front, schema, tiers):
    """The pinned scenarios: (name, template, persona, selection)."""
    knee_pos = knee_index(front)
    return (
        (
            "categorize_expert",
            "categorize",
            Persona(expertise="domain_expert", goal="none", language_register="technical"),
            [],
        ),
        (
            "tradeoff_investor",
            "tradeoff_analysis",
            Persona(expertise="mid_technical", goal="investor", language_register="technical"),
            [],
        ),
        (
            "knee_brief_executive",
            "solution_brief",
            Persona(expertise="executive", goal="environmental", language_register="plain"),
            [knee_pos],
        ),
    )


def build_goldens() -> dict[str, str]:
    """All golden files as {filename: content}."""
    front = load_reference_front()
    schema = build_schema()
    tiers = categorize_variables(front, schema)
    analytics = analytics_document(front, schema)
    cfg = BackendConfig(mode="offline")

    files: dict[str, str] = {}
    for name, template, persona, selection in golden_scenarios(front, schema, tiers):
        ctx = build_context(front, analytics, selection, tiers, schema)
        prompt = build_prompt(ctx, persona, template=template)
        report = infer(prompt, cfg)
        files[f"{name}.prompt.txt"] = prompt.text + "\n"
        files[f"{name}.response.txt"] = report.response_text + "\n"

    previews = {
        "executive_plain_none": Persona(),
        "executive_plain_environmental": Persona(goal="environmental"),
        "mid_technical_plain_investor": Persona(
            expertise="mid_technical", goal="investor", language_register="plain"
        ),
        "domain_expert_technical_regulatory": Persona(
            expertise="domain_expert", goal="regulatory", language_register="technical"
        ),
    }
    files["persona_preambles.json"] = (
        json.dumps(
            {key: preamble_for(p) for key, p in previews.items()},
            indent=2,
            sort_keys=True,
        )
        + "\n"
    )
    return files


def main() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    for filename, content in build_goldens().items():
        path = GOLDEN_DIR / filename
        path.write_text(content, encoding="utf-8")
        print(f"wrote {path.relative_to(GOLDEN_DIR.parent.parent)} ({len(content)} chars)")


if __name__ == "__main__":
    main()
