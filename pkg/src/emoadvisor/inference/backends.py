"""Inference backends: a deterministic offline narrator and a live HTTP client.

The offline backend fills a narrative from the prompt's structured context —
no network, no randomness, and every numeral it emits already appears in the
rendered context block. The live backend sends one chat-completion request
(model + message list + temperature, bearer auth from a named environment
variable) and extracts the first choice's message content, retrying
transient failures before raising a typed error that carries a request id.
"""

from __future__ import annotations

import os
import time
import uuid
from dataclasses import dataclass

import httpx

from .context import (
    ContextDocument,
    fmt_cost,
    fmt_impact,
    fmt_delta_cost,
    fmt_delta_impact,
    fmt_value,
    render_moves,
)
from .prompts import PromptDocument
from .reports import InferenceReport, ReportStore, new_report

__all__ = [
    "OFFLINE_BACKEND_ID",
    "RETRYABLE_STATUSES",
    "BackendConfig",
    "InferenceError",
    "ConfigurationError",
    "TransportError",
    "StatusError",
    "infer",
]

#: Identity string stored in reports produced by the offline narrator.
OFFLINE_BACKEND_ID = "offline-narrative/1"

#: HTTP statuses retried before failing.
RETRYABLE_STATUSES = (429, 502, 503, 504)

#: Base delay between retry attempts, in seconds.
_RETRY_DELAY = 0.05

#: Longest response-body excerpt carried in a status error.
_EXCERPT_LIMIT = 400


class InferenceError(Exception):
    """Base class for backend failures."""


class ConfigurationError(InferenceError):
    """Raised when a backend config cannot be used (e.g. missing token)."""


class TransportError(InferenceError):
    """Raised when the network transport fails after all retries."""

    def __init__(self, message: str, request_id: str):
        super().__init__(f"{message} (request {request_id})")
        self.request_id = request_id


class StatusError(InferenceError):
    """Raised on a non-2xx response, carrying a body excerpt."""

    def __init__(self, status_code: int, body_excerpt: str, request_id: str):
        super().__init__(
            f"backend returned status {status_code} (request {request_id}): "
            f"{body_excerpt}"
        )
        self.status_code = status_code
        self.body_excerpt = body_excerpt
        self.request_id = request_id


@dataclass(frozen=True)
class BackendConfig:
    """How to reach (or stand in for) the language-model backend."""

    mode: str = "offline"
    endpoint_url: str = ""
    model_name: str = "offline"
    auth_token_env_name: str = ""
    temperature: float = 0.0
    timeout: float = 30.0
    max_retries: int = 2

    def __post_init__(self) -> None:
        if self.mode not in ("live", "offline"):
            raise ConfigurationError(f"mode must be 'live' or 'offline', got {self.mode!r}")
        if self.temperature < 0:
            raise ConfigurationError(f"temperature must be >= 0, got {self.temperature}")
        if self.timeout <= 0:
            raise ConfigurationError(f"timeout must be positive, got {self.timeout}")
        if self.max_retries < 0:
            raise ConfigurationError(f"max_retries must be >= 0, got {self.max_retries}")
        if self.mode == "live" and (not self.endpoint_url or not self.auth_token_env_name):
            raise ConfigurationError(
                "live mode requires endpoint_url and auth_token_env_name"
            )


# ---------------------------------------------------------------------------
# Offline narrator


def _summary_sentence(ctx: ContextDocument) -> str:
    s = ctx.front_summary
    return (
        f"The front holds {s['size']} solutions spanning total cost "
        f"{fmt_cost(s['cost_min'])} to {fmt_cost(s['cost_max'])} M$ and "
        f"environmental impact {fmt_impact(s['impact_min'])} to "
        f"{fmt_impact(s['impact_max'])}."
    )


def _row_sentence(row: dict) -> str:
    label = f"Solution {row['number']}"
    if row["roles"]:
        label += f" ({', '.join(row['roles'])})"
    text = (
        f"{label} costs {fmt_cost(row['total_cost'])} M$ with environmental "
        f"impact {fmt_impact(row['environmental_impact'])}"
    )
    shown = row["variables"][:6]
    if shown:
        rendered = "; ".join(
            f"{v['name']} {fmt_value(v['value'])}" + (f" {v['unit']}" if v["unit"] else "")
            for v in shown
        )
        text += f" ({rendered})"
    return text + "."


def _knee_sentence(ctx: ContextDocument) -> str | None:
    knee = ctx.analytics.get("knee")
    if not knee:
        return None
    if not any(r["number"] == knee["number"] for r in ctx.highlighted_solutions):
        return None
    return (
        f"Solution {knee['number']} offers a balanced trade-off between "
        f"cost and environmental impact."
    )


def _tier_sentences(ctx: ContextDocument) -> list[str]:
    tiers = ctx.analytics.get("tiers")
    if not tiers:
        return ["No importance tiers are available for this front."]
    out = []
    primary = tiers.get("primary", [])
    if primary:
        rendered = ", ".join(f"{m['name']} ({m['score']:.2f})" for m in primary)
        out.append(
            "Primary variables, whose values track the objectives most "
            f"strongly along the front, are {rendered}."
        )
    secondary = tiers.get("secondary", [])
    if secondary:
        rendered = ", ".join(f"{m['name']} ({m['score']:.2f})" for m in secondary)
        out.append(f"Secondary variables with moderate influence are {rendered}.")
    additional = tiers.get("additional", [])
    if additional:
        rendered = ", ".join(m["name"] for m in additional)
        out.append(
            "The remaining variables show little systematic movement and "
            f"tier as additional: {rendered}."
        )
    return out


def _trade_sentences(ctx: ContextDocument) -> list[str]:
    out = []
    for t in ctx.analytics.get("trade_offs", []):
        out.append(
            f"Moving from Solution {t['number_a']} to Solution {t['number_b']} "
            f"changes total cost by {fmt_delta_cost(t['delta_cost'])} M$ and "
            f"environmental impact by {fmt_delta_impact(t['delta_impact'])}."
        )
        moves = render_moves(t)
        if moves:
            out.append(f"The largest variable movements are {moves}.")
    return out


_GOAL_PICK = {
    "environmental": "min_impact",
    "investor": "min_cost",
    "community": "knee",
    "regulatory": "knee",
    "socioeconomic": "knee",
    "none": "knee",
}


def _goal_sentence(ctx: ContextDocument, goal: str) -> str | None:
    pick = _GOAL_PICK.get(goal, "knee")
    target = (
        ctx.analytics.get("knee")
        if pick == "knee"
        else ctx.analytics["extremes"][pick]
    )
    if not target:
        return None
    return f"For this goal, Solution {target['number']} is the strongest fit."


def _offline_response(prompt: PromptDocument) -> str:
    ctx = prompt.context
    if ctx is None:
        raise InferenceError(
            "the offline backend needs the structured context attached to "
            "the prompt"
        )
    template = prompt.template_name
    sentences: list[str] = []
    if template == "categorize":
        sentences.extend(_tier_sentences(ctx))
    elif template == "tradeoff_analysis":
        sentences.append(_summary_sentence(ctx))
        sentences.extend(_trade_sentences(ctx))
    else:
        sentences.append(_summary_sentence(ctx))
        sentences.extend(_row_sentence(r) for r in ctx.highlighted_solutions)
        if template == "stakeholder_goal":
            goal_line = _goal_sentence(ctx, prompt.persona.goal)
            if goal_line:
                sentences.append(goal_line)
    knee_line = _knee_sentence(ctx)
    if knee_line:
        sentences.append(knee_line)

    if prompt.persona.expertise == "executive":
        # At most three bullets; the knee takeaway, when present, is always
        # the last one.
        picked = sentences[:2]
        if knee_line is not None:
            if knee_line in picked:
                picked = [s for s in sentences if s != knee_line][:2]
            picked = picked[:2] + [knee_line]
        else:
            picked = sentences[:3]
        return "\n".join(f"- {line}" for line in picked)
    return "\n".join(sentences)


# ---------------------------------------------------------------------------
# Live transport


def _extract_choice_text(payload: dict) -> str:
    choices = payload.get("choices")
    if not isinstance(choices, list) or not choices:
        raise KeyError("choices")
    message = choices[0].get("message", {})
    content = message.get("content")
    if not isinstance(content, str):
        raise KeyError("choices[0].message.content")
    return content


def _live_response(prompt: PromptDocument, cfg: BackendConfig) -> str:
    token = os.environ.get(cfg.auth_token_env_name, "")
    if not token:
        raise ConfigurationError(
            f"environment variable {cfg.auth_token_env_name!r} is not set; "
            "it must hold the backend auth token"
        )
    request_id = uuid.uuid4().hex
    payload = {
        "model": cfg.model_name,
        "messages": [
            {"role": "system", "content": prompt.system_preamble},
            {
                "role": "user",
                "content": (
                    f"CONTEXT\n{prompt.context_block}\n\nTASK\n{prompt.question}"
                ),
            },
        ],
        "temperature": cfg.temperature,
    }
    headers = {"Authorization": f"Bearer {token}", "X-Request-Id": request_id}
    last_exc: Exception | None = None
    last_response: httpx.Response | None = None
    with httpx.Client(timeout=cfg.timeout) as client:
        for attempt in range(cfg.max_retries + 1):
            if attempt:
                time.sleep(min(_RETRY_DELAY * 2 ** (attempt - 1), 0.5))
            try:
                response = client.post(cfg.endpoint_url, json=payload, headers=headers)
            except httpx.HTTPError as exc:
                last_exc = exc
                last_response = None
                continue
            if response.status_code in RETRYABLE_STATUSES:
                last_response = response
                last_exc = None
                continue
            if not 200 <= response.status_code < 300:
                raise StatusError(
                    response.status_code, response.text[:_EXCERPT_LIMIT], request_id
                )
            try:
                return _extract_choice_text(response.json())
            except (ValueError, KeyError, AttributeError, IndexError, TypeError) as exc:
                raise StatusError(
                    response.status_code,
                    f"malformed completion body: {response.text[:_EXCERPT_LIMIT]}",
                    request_id,
                ) from exc
    if last_response is not None:
        raise StatusError(
            last_response.status_code,
            last_response.text[:_EXCERPT_LIMIT],
            request_id,
        )
    raise TransportError(
        f"request failed after {cfg.max_retries + 1} attempts: {last_exc}", request_id
    )


# ---------------------------------------------------------------------------
# Entry point


def infer(
    prompt: PromptDocument,
    cfg: BackendConfig,
    store: ReportStore | None = None,
) -> InferenceReport:
    """Run one backend exchange and return the (optionally persisted) report.

    Offline mode is fully deterministic and touches no network. Live mode
    sends one chat-completion request. When a store is given, the report is
    persisted before this function returns; backend failures raise before
    anything is written, so a failed request never corrupts the store.
    """
    if cfg.mode == "offline":
        response_text = _offline_response(prompt)
        backend_id = OFFLINE_BACKEND_ID
    else:
        response_text = _live_response(prompt, cfg)
        backend_id = f"live:{cfg.model_name}"
    ctx = prompt.context
    refs: tuple[int, ...] = ()
    cited: tuple[dict, ...] = ()
    if ctx is not None:
        refs = tuple(int(r["index"]) for r in ctx.highlighted_solutions)
        cited = tuple(
            {
                "index": int(r["index"]),
                "number": int(r["number"]),
                "total_cost": float(r["total_cost"]),
                "environmental_impact": float(r["environmental_impact"]),
            }
            for r in ctx.highlighted_solutions
        )
    report = new_report(
        prompt_hash=prompt.prompt_hash,
        backend_id=backend_id,
        response_text=response_text,
        solution_refs=refs,
        persona=prompt.persona,
        mode=cfg.mode,
        prompt_text=prompt.text,
        cited_rows=cited,
    )
    if store is not None:
        store.save(report)
    return report
