"""Deterministic prompt assembly from versioned templates and personas.

A prompt is preamble + context block + question. The preamble is selected
by the persona's expertise level plus an optional goal-framing block; the
question comes verbatim from the caller or from one of the named template
assets. Assembly never exceeds the character budget: the context block is
re-rendered with additional-tier variables dropped first, then secondary;
primary-tier content is never dropped, and a prompt that still exceeds the
budget is an error.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .context import ContextDocument
from .persona import Persona

__all__ = [
    "CHARACTER_BUDGET_DEFAULT",
    "TEMPLATE_NAMES",
    "TEMPLATE_VERSION",
    "BudgetError",
    "PromptError",
    "PromptDocument",
    "build_prompt",
    "template_text",
]

#: Names of the committed question templates.
TEMPLATE_NAMES = (
    "categorize",
    "tradeoff_analysis",
    "solution_brief",
    "expertise_tailored",
    "stakeholder_goal",
)

#: Bumped whenever any template asset or assembly rule changes shape.
TEMPLATE_VERSION = "1"

#: Default maximum assembled prompt length, in characters.
CHARACTER_BUDGET_DEFAULT = 12_000

_PREAMBLES = {
    "domain_expert": (
        "You are advising a domain expert in infrastructure planning and "
        "multi-objective optimization. Be quantitative and precise: cite "
        "solution numbers, exact objective values, and variable values with "
        "their units. Do not simplify terminology."
    ),
    "mid_technical": (
        "You are advising mid-level technical staff. Be precise but "
        "concise: prefer concrete numbers with units, and briefly explain "
        "any specialist term on first use."
    ),
    "executive": (
        "You are advising a non-technical decision-maker. Use plain "
        "language, avoid jargon, and summarize the takeaway in at most "
        "three bullet points."
    ),
}

_PLAIN_REGISTER_NOTE = "Prefer plain language over technical shorthand."

_GOAL_FRAMINGS = {
    "environmental": (
        "The reader represents environmental stakeholders: frame outcomes "
        "around environmental impact, renewable energy usage, emissions, "
        "and long-term ecological risk."
    ),
    "investor": (
        "The reader represents investors: frame outcomes around total "
        "cost, cost efficiency, durability, and value for money."
    ),
    "community": (
        "The reader represents the local community: frame outcomes around "
        "community impact, employment, safety, and quality of life."
    ),
    "regulatory": (
        "The reader is a regulator: frame outcomes around compliance, "
        "measurable limits, and audit-ready reasoning."
    ),
    "socioeconomic": (
        "The reader cares about socioeconomic balance: frame outcomes "
        "around employment, affordability, and fair distribution of costs "
        "and benefits."
    ),
}


class PromptError(ValueError):
    """Raised for invalid prompt-assembly inputs."""


class BudgetError(PromptError):
    """Raised when a prompt exceeds its character budget after maximal
    truncation."""


@lru_cache(maxsize=None)
def template_text(name: str) -> str:
    """The committed question text of a named template."""
    if name not in TEMPLATE_NAMES:
        raise PromptError(f"unknown template {name!r}; known: {TEMPLATE_NAMES}")
    return (
        resources.files("emoadvisor.inference.templates")
        .joinpath(f"{name}.txt")
        .read_text(encoding="utf-8")
        .strip()
    )


def preamble_for(persona: Persona) -> str:
    """Deterministic system preamble for a persona."""
    parts = [_PREAMBLES[persona.expertise]]
    if persona.language_register == "plain" and persona.expertise != "executive":
        parts.append(_PLAIN_REGISTER_NOTE)
    framing = _GOAL_FRAMINGS.get(persona.goal)
    if framing:
        parts.append(framing)
    return " ".join(parts)


@dataclass(frozen=True)
class PromptDocument:
    """One fully assembled prompt, ready for any backend."""

    system_preamble: str
    context_block: str
    question: str
    persona: Persona
    character_budget: int
    template_name: str | None = None
    context: ContextDocument | None = None

    @property
    def text(self) -> str:
        """The complete prompt as sent to a backend."""
        return (
            f"{self.system_preamble}\n\n"
            f"CONTEXT\n{self.context_block}\n\n"
            f"TASK\n{self.question}"
        )

    @property
    def prompt_hash(self) -> str:
        """Content digest of the complete prompt text."""
        return hashlib.sha256(self.text.encode("utf-8")).hexdigest()

    def to_document(self) -> dict:
        return {
            "system_preamble": self.system_preamble,
            "context_block": self.context_block,
            "question": self.question,
            "persona": self.persona.to_document(),
            "character_budget": self.character_budget,
            "template_name": self.template_name,
            "template_version": TEMPLATE_VERSION,
        }


def build_prompt(
    ctx: ContextDocument,
    persona: Persona,
    question: str = "",
    template: str | None = None,
    character_budget: int = CHARACTER_BUDGET_DEFAULT,
) -> PromptDocument:
    """Assemble a prompt from a context, persona, and question or template.

    Either a non-empty ``question`` or a named ``template`` must be given
    (the template wins when both are). Identical inputs produce identical
    text.
    """
    if template is not None:
        question_text = template_text(template)
    elif question and question.strip():
        question_text = question.strip()
    else:
        raise PromptError("a non-empty question or a named template is required")
    if character_budget <= 0:
        raise PromptError(f"character_budget must be positive, got {character_budget}")

    preamble = preamble_for(persona)
    for max_tier in ("additional", "secondary", "primary"):
        context_block = ctx.render(max_tier=max_tier)
        doc = PromptDocument(
            system_preamble=preamble,
            context_block=context_block,
            question=question_text,
            persona=persona,
            character_budget=character_budget,
            template_name=template,
            context=ctx,
        )
        if len(doc.text) <= character_budget:
            return doc
    raise BudgetError(
        f"prompt is {len(doc.text)} characters after maximal truncation; "
        f"budget is {character_budget}"
    )
