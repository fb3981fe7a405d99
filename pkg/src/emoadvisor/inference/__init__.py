"""Persona- and goal-tailored explanation pipeline over front analytics.

Flow: ``build_context`` grounds a request in front facts, ``build_prompt``
assembles a deterministic prompt for a persona, ``infer`` dispatches it to
the offline narrator or a live chat-completion endpoint, and the resulting
report is persisted and rendered via ``render_report``.
"""

from .backends import (
    OFFLINE_BACKEND_ID,
    BackendConfig,
    ConfigurationError,
    InferenceError,
    StatusError,
    TransportError,
    infer,
)
from .context import ContextDocument, ContextError, build_context
from .persona import Persona, PersonaError
from .prompts import (
    CHARACTER_BUDGET_DEFAULT,
    TEMPLATE_NAMES,
    BudgetError,
    PromptDocument,
    PromptError,
    build_prompt,
    template_text,
)
from .reports import InferenceReport, ReportError, ReportStore, render_report

__all__ = [
    "OFFLINE_BACKEND_ID",
    "CHARACTER_BUDGET_DEFAULT",
    "TEMPLATE_NAMES",
    "BackendConfig",
    "BudgetError",
    "ConfigurationError",
    "ContextDocument",
    "ContextError",
    "InferenceError",
    "InferenceReport",
    "Persona",
    "PersonaError",
    "PromptDocument",
    "PromptError",
    "ReportError",
    "ReportStore",
    "StatusError",
    "TransportError",
    "build_context",
    "build_prompt",
    "infer",
    "render_report",
    "template_text",
]
