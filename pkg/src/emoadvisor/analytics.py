"""Decision-support analytics over a Pareto front.

Derives the facts the explanation pipeline and the API serve: per-objective
extreme solutions, the knee (best balanced compromise), variable-importance
tiers from rank correlation along the front, pairwise trade-off reports,
and solution selection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
from scipy import stats

from .nsga2 import Individual
from .schema import TIER_NAMES, VariableSchema

__all__ = [
    "ANALYTICS_DOCUMENT_FORMAT",
    "PRIMARY_THRESHOLD",
    "SECONDARY_THRESHOLD",
    "TOP_DELTA_COUNT",
    "AnalyticsError",
    "DegenerateFrontError",
    "ParetoFront",
    "Extremes",
    "ImportanceTiers",
    "TradeOffReport",
    "extremes",
    "knee",
    "knee_index",
    "categorize_variables",
    "trade_off",
    "select",
    "analytics_document",
]

#: Version tag of the serialized analytics bundle.
ANALYTICS_DOCUMENT_FORMAT = "emoadvisor.analytics/1"

#: Rank-correlation score at or above which a variable is primary.
PRIMARY_THRESHOLD = 0.7

#: Rank-correlation score at or above which a variable is secondary.
SECONDARY_THRESHOLD = 0.3

#: Number of entries reported in a trade-off's top variable deltas.
TOP_DELTA_COUNT = 5

#: Smallest front accepted by the importance categorization.
MIN_CATEGORIZE_SIZE = 10


class AnalyticsError(Exception):
    """Raised for invalid analytics inputs."""


class DegenerateFrontError(AnalyticsError):
    """Raised when a front is too small or ill-shaped for an operation."""


@dataclass(frozen=True, eq=False)
class ParetoFront:
    """An immutable, mutually non-dominated solution set.

    Construction deduplicates exact objective-vector duplicates (keeping the
    lowest-index representative), sorts ascending by total cost, and rejects
    any dominated pair. After that, total cost is strictly increasing and
    environmental impact strictly decreasing across the front.
    """

    solutions: tuple[Individual, ...]
    instance_ref: str = ""
    _objectives: np.ndarray = field(init=False, repr=False, compare=False)

    def __init__(self, solutions: Iterable[Individual], instance_ref: str = ""):
        incoming = list(solutions)
        seen: set[tuple[float, float]] = set()
        unique: list[Individual] = []
        for ind in incoming:
            key = (ind.f.total_cost, ind.f.environmental_impact)
            if key in seen:
                continue
            seen.add(key)
            unique.append(ind)
        order = sorted(
            range(len(unique)),
            key=lambda i: (
                unique[i].f.total_cost,
                unique[i].f.environmental_impact,
                i,
            ),
        )
        kept = tuple(unique[i] for i in order)
        for a, b in zip(kept, kept[1:]):
            if not (
                b.f.total_cost > a.f.total_cost
                and b.f.environmental_impact < a.f.environmental_impact
            ):
                raise AnalyticsError(
                    "front is not mutually non-dominated: "
                    f"({a.f.total_cost}, {a.f.environmental_impact}) vs "
                    f"({b.f.total_cost}, {b.f.environmental_impact})"
                )
        object.__setattr__(self, "solutions", kept)
        object.__setattr__(self, "instance_ref", instance_ref)
        obj = (
            np.array([ind.f.as_array() for ind in kept])
            if kept
            else np.empty((0, 2))
        )
        object.__setattr__(self, "_objectives", obj)

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def __getitem__(self, index: int) -> Individual:
        return self.solutions[index]

    def objectives(self) -> np.ndarray:
        """Objective matrix (n, 2) in front order; callers must not mutate."""
        return self._objectives

    def normalized_objectives(self) -> np.ndarray:
        """Objectives min-max scaled per column; constant columns map to 0."""
        obj = self._objectives
        if obj.shape[0] == 0:
            return obj.copy()
        lo = obj.min(axis=0)
        span = obj.max(axis=0) - lo
        span = np.where(span > 0.0, span, 1.0)
        return (obj - lo) / span

    def variables(self) -> np.ndarray:
        """Decision-variable matrix (n, d) in front order."""
        if not self.solutions:
            return np.empty((0, 0))
        return np.stack([ind.x for ind in self.solutions])


@dataclass(frozen=True)
class Extremes:
    """The two per-objective best solutions of a front."""

    min_cost: Individual
    min_impact: Individual
    min_cost_index: int
    min_impact_index: int


@dataclass(frozen=True)
class ImportanceTiers:
    """Partition of variables by importance along the front.

    Indices are the schema's 1-based variable indices; ``scores`` aligns
    with schema order (position k holds the score of variable k+1). Tier
    membership is a threshold cut, so scores never interleave across tiers.
    """

    primary: tuple[int, ...]
    secondary: tuple[int, ...]
    additional: tuple[int, ...]
    scores: tuple[float, ...]

    def __post_init__(self) -> None:
        all_indices = sorted(self.primary + self.secondary + self.additional)
        if all_indices != list(range(1, len(self.scores) + 1)):
            raise AnalyticsError("tiers must partition the schema's variable indices")
        for value in self.scores:
            if not 0.0 <= value <= 1.0:
                raise AnalyticsError(f"score out of range [0, 1]: {value}")

        def _scores(idx: tuple[int, ...]) -> list[float]:
            return [self.scores[i - 1] for i in idx]

        if self.primary and self.secondary:
            if min(_scores(self.primary)) < max(_scores(self.secondary)):
                raise AnalyticsError("primary scores must dominate secondary scores")
        if self.secondary and self.additional:
            if min(_scores(self.secondary)) < max(_scores(self.additional)):
                raise AnalyticsError("secondary scores must dominate additional scores")
        if self.primary and self.additional and not self.secondary:
            if min(_scores(self.primary)) < max(_scores(self.additional)):
                raise AnalyticsError("primary scores must dominate additional scores")

    def tier_of(self, index: int) -> str:
        if index in self.primary:
            return TIER_NAMES[0]
        if index in self.secondary:
            return TIER_NAMES[1]
        if index in self.additional:
            return TIER_NAMES[2]
        raise AnalyticsError(f"unknown variable index: {index}")


@dataclass(frozen=True)
class TradeOffReport:
    """Exact signed movement from front solution ``a`` to solution ``b``.

    ``delta_cost`` and ``delta_impact`` equal b − a with no rounding.
    ``top_variable_deltas`` holds the k largest variable movements by
    per-variable min-max-normalized magnitude, as (index, delta, unit)
    with the schema's 1-based indices.
    """

    solution_a: int
    solution_b: int
    delta_cost: float
    delta_impact: float
    top_variable_deltas: tuple[dict, ...]


# ---------------------------------------------------------------------------
# Operations


def _require_nonempty(front: ParetoFront) -> None:
    if len(front) == 0:
        raise DegenerateFrontError("operation requires a non-empty front")


def extremes(front: ParetoFront) -> Extremes:
    """Per-objective argmin solutions.

    Ties break by the other objective, then by lowest front index.
    """
    _require_nonempty(front)
    obj = front.objectives()
    cost_order = np.lexsort((np.arange(len(front)), obj[:, 1], obj[:, 0]))
    impact_order = np.lexsort((np.arange(len(front)), obj[:, 0], obj[:, 1]))
    i_cost = int(cost_order[0])
    i_impact = int(impact_order[0])
    return Extremes(
        min_cost=front[i_cost],
        min_impact=front[i_impact],
        min_cost_index=i_cost,
        min_impact_index=i_impact,
    )


def knee_index(front: ParetoFront) -> int:
    """Front index of the knee solution.

    The knee is the interior solution maximizing perpendicular distance to
    the chord joining the two extremes, measured in min-max normalized
    objective space on the improving side of the chord; ties take the
    lowest index. Invariant under positive affine rescaling of either
    objective.
    """
    if len(front) < 3:
        raise DegenerateFrontError(
            f"knee requires a front of at least 3 solutions, got {len(front)}"
        )
    norm = front.normalized_objectives()
    # The sorted front runs from (0, 1) to (1, 0); the chord is u + v = 1,
    # and signed distance toward the ideal corner is (1 - u - v) / sqrt(2).
    signed = (1.0 - norm[:, 0] - norm[:, 1]) / np.sqrt(2.0)
    interior = signed[1:-1]
    return 1 + int(np.argmax(interior))


def knee(front: ParetoFront) -> Individual:
    """The knee solution itself (see ``knee_index``)."""
    return front[knee_index(front)]


def _abs_rank_correlation(x: np.ndarray, y: np.ndarray) -> float:
    """|Spearman rank correlation|; 0 when either side is constant."""
    rx = stats.rankdata(x)
    ry = stats.rankdata(y)
    if rx.std() == 0.0 or ry.std() == 0.0:
        return 0.0
    return float(abs(np.corrcoef(rx, ry)[0, 1]))


def categorize_variables(front: ParetoFront, schema: VariableSchema) -> ImportanceTiers:
    """Tier every variable by how strongly it moves with the objectives.

    Per-variable importance is the larger of the absolute rank correlations
    against each objective along the front; tiers cut at the fixed
    thresholds (primary ≥ 0.7, secondary ≥ 0.3, else additional).
    """
    if len(front) < MIN_CATEGORIZE_SIZE:
        raise DegenerateFrontError(
            "importance categorization requires a front of at least "
            f"{MIN_CATEGORIZE_SIZE} solutions, got {len(front)}"
        )
    X = front.variables()
    if X.shape[1] != len(schema):
        raise AnalyticsError(
            f"front has {X.shape[1]} variables, schema has {len(schema)}"
        )
    obj = front.objectives()
    scores: list[float] = []
    for k in range(X.shape[1]):
        score = max(
            _abs_rank_correlation(X[:, k], obj[:, 0]),
            _abs_rank_correlation(X[:, k], obj[:, 1]),
        )
        scores.append(min(score, 1.0))
    primary: list[int] = []
    secondary: list[int] = []
    additional: list[int] = []
    for spec, score in zip(schema, scores):
        if score >= PRIMARY_THRESHOLD:
            primary.append(spec.index)
        elif score >= SECONDARY_THRESHOLD:
            secondary.append(spec.index)
        else:
            additional.append(spec.index)
    return ImportanceTiers(
        primary=tuple(primary),
        secondary=tuple(secondary),
        additional=tuple(additional),
        scores=tuple(scores),
    )


def trade_off(
    front: ParetoFront, a: int, b: int, schema: VariableSchema | None = None
) -> TradeOffReport:
    """Exact signed deltas (b − a) between two front solutions.

    The top variable deltas are ranked by |delta| after min-max
    normalization over the front's per-variable range; ties take the lower
    variable index. Units come from the schema when one is given.
    """
    n = len(front)
    for name, idx in (("a", a), ("b", b)):
        if not isinstance(idx, (int, np.integer)) or not 0 <= idx < n:
            raise AnalyticsError(
                f"solution index {name}={idx!r} out of range for front of size {n}"
            )
    sa = front[a]
    sb = front[b]
    X = front.variables()
    span = X.max(axis=0) - X.min(axis=0)
    raw = sb.x - sa.x
    normalized = np.where(span > 0.0, raw / np.where(span > 0.0, span, 1.0), 0.0)
    order = np.lexsort((np.arange(raw.shape[0]), -np.abs(normalized)))
    top = []
    for k in order[:TOP_DELTA_COUNT]:
        k = int(k)
        top.append(
            {
                "index": k + 1,
                "delta": float(raw[k]),
                "unit": schema.variables[k].unit if schema is not None else "",
            }
        )
    return TradeOffReport(
        solution_a=int(a),
        solution_b=int(b),
        delta_cost=sb.f.total_cost - sa.f.total_cost,
        delta_impact=sb.f.environmental_impact - sa.f.environmental_impact,
        top_variable_deltas=tuple(top),
    )


def select(
    front: ParetoFront,
    by_index: int | None = None,
    nearest_to=None,
    random_seed: int | None = None,
) -> Individual:
    """Pick one solution by exactly one criterion.

    ``by_index`` is exact; ``nearest_to`` minimizes Euclidean distance in
    min-max normalized objective space (ties → lower index); ``random_seed``
    draws uniformly and reproducibly.
    """
    _require_nonempty(front)
    given = [v is not None for v in (by_index, nearest_to, random_seed)]
    if sum(given) != 1:
        raise AnalyticsError(
            "exactly one of by_index, nearest_to, random_seed must be given"
        )
    if by_index is not None:
        if not 0 <= by_index < len(front):
            raise AnalyticsError(
                f"index {by_index} out of range for front of size {len(front)}"
            )
        return front[by_index]
    if nearest_to is not None:
        target = np.asarray(
            nearest_to.as_array() if hasattr(nearest_to, "as_array") else nearest_to,
            dtype=np.float64,
        )
        if target.shape != (2,):
            raise AnalyticsError("nearest_to must be a 2-objective point")
        obj = front.objectives()
        lo = obj.min(axis=0)
        span = obj.max(axis=0) - lo
        span = np.where(span > 0.0, span, 1.0)
        norm = (obj - lo) / span
        norm_target = (target - lo) / span
        d2 = ((norm - norm_target) ** 2).sum(axis=1)
        return front[int(np.argmin(d2))]
    rng = np.random.default_rng(random_seed)
    return front[int(rng.integers(0, len(front)))]


# ---------------------------------------------------------------------------
# Serialization


def _solution_row(front: ParetoFront, index: int) -> dict:
    ind = front[index]
    return {
        "index": index,
        "total_cost": ind.f.total_cost,
        "environmental_impact": ind.f.environmental_impact,
    }


def analytics_document(front: ParetoFront, schema: VariableSchema) -> dict:
    """Bundle extremes + knee + tiers into a JSON-compatible document.

    The knee entry is null for fronts smaller than 3 and the tier entry
    null for fronts smaller than the categorization minimum.
    """
    _require_nonempty(front)
    ext = extremes(front)
    obj = front.objectives()
    doc: dict = {
        "format": ANALYTICS_DOCUMENT_FORMAT,
        "instance_ref": front.instance_ref,
        "front_size": len(front),
        "extent": {
            "total_cost": [float(obj[:, 0].min()), float(obj[:, 0].max())],
            "environmental_impact": [float(obj[:, 1].min()), float(obj[:, 1].max())],
        },
        "extremes": {
            "min_cost": _solution_row(front, ext.min_cost_index),
            "min_impact": _solution_row(front, ext.min_impact_index),
        },
        "knee": None,
        "tiers": None,
        "thresholds": {
            "primary": PRIMARY_THRESHOLD,
            "secondary": SECONDARY_THRESHOLD,
        },
    }
    if len(front) >= 3:
        doc["knee"] = _solution_row(front, knee_index(front))
    if len(front) >= MIN_CATEGORIZE_SIZE and front.variables().shape[1] == len(schema):
        tiers = categorize_variables(front, schema)
        doc["tiers"] = {
            "primary": list(tiers.primary),
            "secondary": list(tiers.secondary),
            "additional": list(tiers.additional),
            "scores": list(tiers.scores),
            "names": list(schema.names),
        }
    return doc
