"""Two-objective problem model: total cost and weighted environmental impact.

A problem instance bundles a variable schema with a list of cost component
functions (construction, maintenance, ... in M$) and a list of weighted
impact factor functions. Both objectives are minimized:

    total_cost(x)           = sum_i Cost_i(x)
    environmental_impact(x) = sum_j w_j * Impact_j(x)

Evaluation is pure; instances are immutable and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .schema import VariableSchema

CostComponent = Callable[[np.ndarray], float]
ImpactFactor = Callable[[np.ndarray], float]


class ObjectiveError(ValueError):
    """Raised when an objective evaluates to a non-finite or invalid value."""


@dataclass(frozen=True)
class ObjectiveVector:
    """Evaluated objective pair: total cost in M$ and unitless impact score."""

    total_cost: float
    environmental_impact: float

    def __post_init__(self):
        if not (np.isfinite(self.total_cost) and np.isfinite(self.environmental_impact)):
            raise ObjectiveError(
                f"objectives must be finite, got ({self.total_cost}, {self.environmental_impact})"
            )
        if self.environmental_impact < 0:
            raise ObjectiveError(
                f"environmental impact must be >= 0, got {self.environmental_impact}"
            )

    def as_array(self) -> np.ndarray:
        return np.array([self.total_cost, self.environmental_impact], dtype=np.float64)


@dataclass(frozen=True)
class ProblemInstance:
    """Immutable two-objective instance over a variable schema.

    cost_components and impact_factors are pure functions of a validated
    decision vector. impact_weights pairs one nonnegative weight with each
    impact factor.
    """

    schema: VariableSchema
    cost_components: tuple[CostComponent, ...]
    impact_factors: tuple[ImpactFactor, ...]
    impact_weights: np.ndarray
    calibration_tag: str
    seed: int
    population_evaluator: Callable[[np.ndarray], np.ndarray] | None = field(
        default=None, repr=False, compare=False
    )

    def __post_init__(self):
        weights = np.asarray(self.impact_weights, dtype=np.float64)
        if weights.shape != (len(self.impact_factors),):
            raise ValueError(
                f"{len(self.impact_factors)} impact factors but {weights.shape} weights"
            )
        if np.any(weights < 0):
            raise ValueError("impact weights must be nonnegative")
        if len(self.impact_factors) > 0 and not weights.sum() > 0:
            raise ValueError("impact weights must not all be zero")
        object.__setattr__(self, "impact_weights", weights)
        object.__setattr__(self, "cost_components", tuple(self.cost_components))
        object.__setattr__(self, "impact_factors", tuple(self.impact_factors))


def total_cost(x: np.ndarray, p: ProblemInstance) -> float:
    """Total cost in M$: the sum over all cost components at x.

    Components are accumulated in declaration order so the result is
    bit-stable across calls and platforms.
    """
    x = p.schema.validate_vector(x)
    acc = 0.0
    for component in p.cost_components:
        acc += float(component(x))
    if not np.isfinite(acc):
        raise ObjectiveError(f"total cost evaluated to {acc}")
    return acc


def environmental_impact(x: np.ndarray, p: ProblemInstance) -> float:
    """Weighted impact score: sum_j w_j * Impact_j(x), accumulated in order."""
    x = p.schema.validate_vector(x)
    acc = 0.0
    for w, factor in zip(p.impact_weights, p.impact_factors):
        acc += float(w) * float(factor(x))
    if not np.isfinite(acc) or acc < 0:
        raise ObjectiveError(f"environmental impact evaluated to {acc}")
    return acc


def evaluate(x: np.ndarray, p: ProblemInstance) -> ObjectiveVector:
    """Evaluate both objectives at x. Pure and deterministic."""
    return ObjectiveVector(total_cost(x, p), environmental_impact(x, p))


def evaluate_population(X: np.ndarray, p: ProblemInstance) -> np.ndarray:
    """Evaluate an (n, d) population to an (n, 2) objective matrix.

    Uses the instance's vectorized evaluator when present (the calibrated
    benchmark ships one); otherwise falls back to row-by-row evaluation.
    Rows must already be within bounds.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != len(p.schema):
        raise ValueError(f"population shape {X.shape} incompatible with schema")
    if p.population_evaluator is not None:
        return p.population_evaluator(X)
    out = np.empty((X.shape[0], 2), dtype=np.float64)
    for i in range(X.shape[0]):
        f = evaluate(X[i], p)
        out[i, 0] = f.total_cost
        out[i, 1] = f.environmental_impact
    return out


def cost_corner(p: ProblemInstance) -> np.ndarray:
    """Bound corner minimizing total cost, variable by variable.

    For each variable the bound with the lower cost is chosen; cost ties are
    broken toward the bound with the lower impact, then toward the lower
    bound. Valid because every component is monotone per variable.
    """
    return _corner(p, primary="cost")


def impact_corner(p: ProblemInstance) -> np.ndarray:
    """Bound corner minimizing environmental impact (ties favor lower cost)."""
    return _corner(p, primary="impact")


def _corner(p: ProblemInstance, primary: str) -> np.ndarray:
    schema = p.schema
    x = (schema.lower + schema.upper) / 2.0
    corner = x.copy()
    for i in range(len(schema)):
        lo_x = x.copy()
        lo_x[i] = schema.lower[i]
        hi_x = x.copy()
        hi_x[i] = schema.upper[i]
        lo_f = evaluate(lo_x, p)
        hi_f = evaluate(hi_x, p)
        lo_key = _corner_key(lo_f, schema.lower[i], primary)
        hi_key = _corner_key(hi_f, schema.upper[i], primary)
        corner[i] = schema.lower[i] if lo_key <= hi_key else schema.upper[i]
    return corner


def _corner_key(f: ObjectiveVector, bound: float, primary: str):
    if primary == "cost":
        return (f.total_cost, f.environmental_impact, bound)
    return (f.environmental_impact, f.total_cost, bound)
