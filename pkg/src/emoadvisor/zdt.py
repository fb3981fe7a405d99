"""ZDT1: a standard two-objective test problem with a known true front.

Thirty variables on [0, 1]; f1(x) = x1, f2(x) = g(x) * (1 - sqrt(x1 / g(x)))
with g(x) = 1 + 9 * mean(x2..xn). The true front is f2 = 1 - sqrt(f1) at
g = 1, which gives the engine an analytic convergence target.
"""

from __future__ import annotations

import numpy as np

from .problem import ProblemInstance
from .schema import VariableSchema, VariableSpec

__all__ = ["make_zdt1_instance", "zdt1_true_front"]


def _evaluate_rows(X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    f1 = X[:, 0]
    g = 1.0 + 9.0 * X[:, 1:].mean(axis=1)
    f2 = g * (1.0 - np.sqrt(f1 / g))
    return np.column_stack((f1, f2))


def make_zdt1_instance(n_vars: int = 30) -> ProblemInstance:
    """Build the problem as a standard two-objective instance."""
    if n_vars < 2:
        raise ValueError(f"ZDT1 needs at least 2 variables, got {n_vars}")
    schema = VariableSchema(
        tuple(
            VariableSpec(
                index=i,
                name=f"x{i}",
                unit="",
                lower=0.0,
                upper=1.0,
                better_direction="lower",
            )
            for i in range(1, n_vars + 1)
        )
    )

    def _f1(x: np.ndarray) -> float:
        return float(x[0])

    def _f2(x: np.ndarray) -> float:
        g = 1.0 + 9.0 * float(np.mean(x[1:]))
        return g * (1.0 - float(np.sqrt(x[0] / g)))

    return ProblemInstance(
        schema=schema,
        cost_components=(_f1,),
        impact_factors=(_f2,),
        impact_weights=(1.0,),
        calibration_tag="zdt1",
        seed=0,
        population_evaluator=_evaluate_rows,
    )


def zdt1_true_front(n_points: int = 1000) -> np.ndarray:
    """Analytic sample of the true front: f2 = 1 - sqrt(f1), f1 in [0, 1]."""
    f1 = np.linspace(0.0, 1.0, n_points)
    return np.column_stack((f1, 1.0 - np.sqrt(f1)))
