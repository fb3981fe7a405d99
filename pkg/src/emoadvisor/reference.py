"""Packaged reference data: the calibrated oracle front and a small excerpt.

``load_reference_front`` reads the committed 500-row front produced by the
calibration script (``scripts/calibrate_benchmark.py``); it is the ground
truth the optimizer is tested against. ``load_excerpt_front`` is a
seven-row, display-rounded excerpt of that front carrying the three
headline variables; the remaining variable columns are filled from the
nearest full-reference row. It backs documentation examples and exact
trade-off arithmetic tests.
"""

from __future__ import annotations

import csv
from functools import lru_cache
from importlib import resources

import numpy as np

from .analytics import ParetoFront
from .benchmark import build_schema, make_benchmark_instance
from .nsga2 import CSV_FIXED_HEADER, Individual
from .problem import ObjectiveVector

__all__ = [
    "EXCERPT_SOLUTION_NUMBERS",
    "load_reference_front",
    "load_excerpt_front",
]

#: 1-based row numbers (in the 500-row reference export) the excerpt mirrors.
EXCERPT_SOLUTION_NUMBERS = (1, 51, 101, 201, 301, 401, 500)

# (solution number, total cost, environmental impact,
#  cost efficiency, durability, renewable energy usage)
_EXCERPT_ROWS = (
    (1, 200.00, 1.004, 50.0, 25.0, 15.0),
    (51, 202.00, 0.910, 49.0, 27.0, 18.0),
    (101, 204.00, 0.807, 48.0, 29.0, 20.0),
    (201, 208.01, 0.709, 46.0, 32.0, 25.0),
    (301, 212.01, 0.573, 44.0, 35.0, 30.0),
    (401, 216.02, 0.463, 42.0, 38.0, 35.0),
    (500, 219.98, 0.328, 40.0, 40.0, 40.0),
)


@lru_cache(maxsize=1)
def _reference_rows() -> tuple[tuple[float, ...], ...]:
    text = (
        resources.files("emoadvisor.data")
        .joinpath("reference_front.csv")
        .read_text(encoding="utf-8")
    )
    reader = csv.reader(text.splitlines())
    header = next(reader)
    expected = list(CSV_FIXED_HEADER) + list(build_schema().names)
    if header != expected:
        raise ValueError("reference front header does not match the schema")
    return tuple(tuple(float(cell) for cell in row) for row in reader)


def load_reference_front() -> ParetoFront:
    """The committed 500-row oracle front as a ``ParetoFront``."""
    tag = make_benchmark_instance(seed=0).calibration_tag
    solutions = [
        Individual(
            x=np.asarray(row[3:], dtype=np.float64),
            f=ObjectiveVector(row[1], row[2]),
            rank=0,
            crowding=0.0,
        )
        for row in _reference_rows()
    ]
    return ParetoFront(solutions, instance_ref=f"{tag}:oracle")


def load_excerpt_front() -> ParetoFront:
    """Seven display-rounded rows spanning the reference front."""
    reference = _reference_rows()
    costs = np.array([row[1] for row in reference])
    tag = make_benchmark_instance(seed=0).calibration_tag
    solutions = []
    for _, cost, impact, cost_eff, durability, renewable in _EXCERPT_ROWS:
        nearest = int(np.argmin(np.abs(costs - cost)))
        x = np.asarray(reference[nearest][3:], dtype=np.float64).copy()
        x[0] = cost_eff
        x[1] = durability
        x[2] = renewable
        solutions.append(
            Individual(x=x, f=ObjectiveVector(cost, impact), rank=0, crowding=0.0)
        )
    return ParetoFront(solutions, instance_ref=f"{tag}:excerpt")
