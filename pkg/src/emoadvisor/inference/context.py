"""Build the structured context document an explanation request is grounded in.

The context carries a front summary, highlighted solution rows with
tier-filtered variable values (units attached), the analytics facts
(extremes, knee, tiers, pairwise trade-offs between consecutive highlighted
rows), and a schema excerpt for the included variables. Its text rendering
is deterministic, and every numeral the offline narrative may use appears in
that rendering first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..analytics import (
    ImportanceTiers,
    ParetoFront,
    TradeOffReport,
    extremes,
    knee_index,
    trade_off,
)
from ..schema import VariableSchema

__all__ = [
    "CONTEXT_FORMAT",
    "ContextDocument",
    "ContextError",
    "build_context",
    "fmt_cost",
    "fmt_impact",
    "fmt_value",
]

#: Version tag of the serialized context document.
CONTEXT_FORMAT = "emoadvisor.context/1"

#: Fallback variable count when the primary tier is empty.
FALLBACK_VARIABLE_COUNT = 5


class ContextError(ValueError):
    """Raised for invalid context inputs (bad selection, missing schema)."""


def fmt_cost(value: float) -> str:
    """Total cost rendered to 2 decimals (display convention)."""
    return f"{value:.2f}"


def fmt_impact(value: float) -> str:
    """Environmental impact rendered to 3 decimals (display convention)."""
    return f"{value:.3f}"


def fmt_value(value: float) -> str:
    """Variable value in shortest natural form (49.0 -> '49')."""
    return f"{value:g}"


def fmt_delta_cost(value: float) -> str:
    return f"{value:+.2f}"


def fmt_delta_impact(value: float) -> str:
    return f"{value:+.3f}"


def render_moves(trade: dict) -> str:
    """One-line rendering of a trade-off's largest variable movements."""
    return ", ".join(
        f"{m['name']} "
        + (fmt_value(m["delta"]) if m["delta"] < 0 else "+" + fmt_value(m["delta"]))
        + (f" {m['unit']}" if m["unit"] else "")
        for m in trade["top_variable_deltas"]
    )


@dataclass(frozen=True)
class ContextDocument:
    """Immutable, render-ready grounding for one explanation request."""

    front_summary: dict
    highlighted_solutions: tuple[dict, ...]
    analytics: dict
    schema_excerpt: tuple[dict, ...]

    def to_document(self) -> dict:
        return {
            "format": CONTEXT_FORMAT,
            "front_summary": dict(self.front_summary),
            "highlighted_solutions": [dict(r) for r in self.highlighted_solutions],
            "analytics": dict(self.analytics),
            "schema_excerpt": [dict(r) for r in self.schema_excerpt],
        }

    def variable_entries(self, max_tier: str = "additional") -> tuple[dict, ...]:
        """Schema excerpt filtered to tiers at or above ``max_tier``."""
        keep = {"primary"}
        if max_tier in ("secondary", "additional"):
            keep.add("secondary")
        if max_tier == "additional":
            keep.add("additional")
        return tuple(e for e in self.schema_excerpt if e["tier"] in keep)

    def render(self, max_tier: str = "additional") -> str:
        """Deterministic text rendering, optionally truncated by tier.

        ``max_tier`` limits which variable tiers appear: "additional" keeps
        everything included at build time, "secondary" drops additional-tier
        variables, "primary" drops secondary too. Highlighted-solution
        objective values and analytics lines always remain.
        """
        kept = {e["index"] for e in self.variable_entries(max_tier)}
        s = self.front_summary
        lines = [
            "FRONT",
            f"  solutions: {s['size']}",
            (
                f"  total cost range: {fmt_cost(s['cost_min'])} to "
                f"{fmt_cost(s['cost_max'])} M$"
            ),
            (
                f"  environmental impact range: {fmt_impact(s['impact_min'])} to "
                f"{fmt_impact(s['impact_max'])}"
            ),
        ]
        entries = self.variable_entries(max_tier)
        if entries:
            lines.append("VARIABLES")
            for e in entries:
                unit = f" ({e['unit']})" if e["unit"] else ""
                lines.append(f"  [{e['index']}] {e['name']}{unit} -- {e['tier']} tier")
        lines.append("SOLUTIONS")
        for row in self.highlighted_solutions:
            label = f"Solution {row['number']}"
            if row["roles"]:
                label += f" ({', '.join(row['roles'])})"
            lines.append(
                f"  {label}: total cost {fmt_cost(row['total_cost'])} M$; "
                f"environmental impact {fmt_impact(row['environmental_impact'])}"
            )
            for v in row["variables"]:
                if v["index"] not in kept:
                    continue
                unit = f" {v['unit']}" if v["unit"] else ""
                lines.append(f"    {v['name']}: {fmt_value(v['value'])}{unit}")
        trades = self.analytics.get("trade_offs", [])
        if trades:
            lines.append("TRADE-OFFS")
            for t in trades:
                lines.append(
                    f"  Solution {t['number_a']} -> Solution {t['number_b']}: "
                    f"total cost {fmt_delta_cost(t['delta_cost'])} M$; "
                    f"environmental impact {fmt_delta_impact(t['delta_impact'])}"
                )
                moves = render_moves(t)
                if moves:
                    lines.append(f"    largest variable movements: {moves}")
        tiers = self.analytics.get("tiers")
        if tiers:
            lines.append("IMPORTANCE TIERS")
            for tier_name in ("primary", "secondary", "additional"):
                members = tiers.get(tier_name, [])
                if members:
                    rendered = ", ".join(
                        f"{m['name']} ({m['score']:.2f})" for m in members
                    )
                    lines.append(f"  {tier_name}: {rendered}")
        return "\n".join(lines)


def _tier_lookup(tiers: ImportanceTiers | None) -> dict[int, str]:
    if tiers is None:
        return {}
    lookup: dict[int, str] = {}
    for idx in tiers.primary:
        lookup[idx] = "primary"
    for idx in tiers.secondary:
        lookup[idx] = "secondary"
    for idx in tiers.additional:
        lookup[idx] = "additional"
    return lookup


def _included_variable_indices(
    tiers: ImportanceTiers | None,
    include_secondary: bool,
    include_additional: bool,
) -> list[int]:
    """1-based variable indices to include, most important first rule set.

    Default is the primary tier; expansion flags add the lower tiers. When
    the primary tier is empty, fall back to the highest-scoring variables
    so the context is never variable-free.
    """
    if tiers is None:
        return []
    included = list(tiers.primary)
    if not included:
        scores = np.asarray(tiers.scores)
        order = np.lexsort((np.arange(scores.shape[0]), -scores))
        included = [int(k) + 1 for k in order[:FALLBACK_VARIABLE_COUNT]]
    if include_secondary:
        included.extend(tiers.secondary)
    if include_additional:
        included.extend(tiers.additional)
    return sorted(set(included))


def build_context(
    front: ParetoFront,
    analytics_doc: dict,
    selection: list[int],
    tiers: ImportanceTiers | None,
    schema: VariableSchema | None = None,
    include_secondary: bool = False,
    include_additional: bool = False,
) -> ContextDocument:
    """Assemble the grounding document for a set of selected solutions.

    ``selection`` holds 0-based front positions; an empty selection yields
    exactly the comparison rows (the two extremes and, when the front has
    at least 3 solutions, the knee). Selected rows always appear after the
    comparison rows, without duplicates.
    """
    if len(front) == 0:
        raise ContextError("cannot build a context from an empty front")
    for idx in selection:
        if (
            isinstance(idx, bool)
            or not isinstance(idx, (int, np.integer))
            or not 0 <= idx < len(front)
        ):
            raise ContextError(
                f"selection index {idx!r} out of range for front of size {len(front)}"
            )

    ext = extremes(front)
    k_index = knee_index(front) if len(front) >= 3 else None
    roles: dict[int, list[str]] = {ext.min_cost_index: ["lowest cost"]}
    roles.setdefault(ext.min_impact_index, []).append("lowest impact")
    if k_index is not None:
        roles.setdefault(k_index, []).append("knee")

    ordered: list[int] = []
    for idx in (ext.min_cost_index, k_index, ext.min_impact_index):
        if idx is not None and idx not in ordered:
            ordered.append(idx)
    for idx in selection:
        if int(idx) not in ordered:
            ordered.append(int(idx))

    tier_of = _tier_lookup(tiers)
    included = _included_variable_indices(tiers, include_secondary, include_additional)
    if schema is not None:
        name_of = {v.index: v.name for v in schema}
        unit_of = {v.index: v.unit for v in schema}
    else:
        width = front.variables().shape[1] if len(front) else 0
        name_of = {i: f"variable {i}" for i in range(1, width + 1)}
        unit_of = {i: "" for i in range(1, width + 1)}

    rows = []
    for pos in ordered:
        ind = front[pos]
        rows.append(
            {
                "index": pos,
                "number": pos + 1,
                "roles": roles.get(pos, []),
                "total_cost": ind.f.total_cost,
                "environmental_impact": ind.f.environmental_impact,
                "variables": [
                    {
                        "index": k,
                        "name": name_of.get(k, f"variable {k}"),
                        "unit": unit_of.get(k, ""),
                        "value": float(ind.x[k - 1]),
                        "tier": tier_of.get(k, "additional"),
                    }
                    for k in included
                    if k - 1 < ind.x.shape[0]
                ],
            }
        )

    trades = []
    for a, b in zip(ordered, ordered[1:]):
        report: TradeOffReport = trade_off(front, a, b, schema)
        trades.append(
            {
                "number_a": a + 1,
                "number_b": b + 1,
                "delta_cost": report.delta_cost,
                "delta_impact": report.delta_impact,
                "top_variable_deltas": [
                    {
                        "index": d["index"],
                        "name": name_of.get(d["index"], f"variable {d['index']}"),
                        "unit": d["unit"],
                        "delta": d["delta"],
                    }
                    for d in report.top_variable_deltas
                ],
            }
        )

    tier_doc = None
    if tiers is not None:
        tier_doc = {
            tier_name: [
                {
                    "index": idx,
                    "name": name_of.get(idx, f"variable {idx}"),
                    "score": float(tiers.scores[idx - 1]),
                }
                for idx in getattr(tiers, tier_name)
            ]
            for tier_name in ("primary", "secondary", "additional")
        }

    obj = front.objectives()
    analytics_block = {
        "extremes": {
            "min_cost": {"index": ext.min_cost_index, "number": ext.min_cost_index + 1},
            "min_impact": {
                "index": ext.min_impact_index,
                "number": ext.min_impact_index + 1,
            },
        },
        "knee": None if k_index is None else {"index": k_index, "number": k_index + 1},
        "trade_offs": trades,
        "tiers": tier_doc,
        "source": analytics_doc.get("format", ""),
    }

    schema_excerpt = tuple(
        {
            "index": k,
            "name": name_of.get(k, f"variable {k}"),
            "unit": unit_of.get(k, ""),
            "tier": tier_of.get(k, "additional"),
        }
        for k in included
    )

    return ContextDocument(
        front_summary={
            "size": len(front),
            "instance_ref": front.instance_ref,
            "cost_min": float(obj[:, 0].min()),
            "cost_max": float(obj[:, 0].max()),
            "impact_min": float(obj[:, 1].min()),
            "impact_max": float(obj[:, 1].max()),
        },
        highlighted_solutions=tuple(rows),
        analytics=analytics_block,
        schema_excerpt=schema_excerpt,
    )
