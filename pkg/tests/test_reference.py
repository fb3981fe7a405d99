from __future__ import annotations

import numpy as np
import pytest

from emoadvisor.analytics import extremes
from emoadvisor.reference import (
    EXCERPT_SOLUTION_NUMBERS,
    load_excerpt_front,
    load_reference_front,
)


def test_reference_front_is_five_hundred_rows(reference_front):
    assert len(reference_front) == 500


def test_reference_rows_in_bounds(reference_front, schema):
    for s in reference_front:
        assert schema.contains(s.x)


def test_reference_extent(reference_front):
    ext = extremes(reference_front)
    assert ext.min_cost.f.total_cost == pytest.approx(200.0, abs=0.01)
    assert ext.min_cost.f.environmental_impact == pytest.approx(1.004, abs=0.001)
    assert ext.min_impact.f.total_cost == pytest.approx(240.0, abs=0.5)
    assert ext.min_impact.f.environmental_impact == pytest.approx(0.115, abs=0.001)


def test_reference_front_strictly_ordered(reference_front):
    costs = np.array([s.f.total_cost for s in reference_front])
    impacts = np.array([s.f.environmental_impact for s in reference_front])
    assert np.all(np.diff(costs) > 0)
    assert np.all(np.diff(impacts) < 0)


def test_reference_instance_refs():
    assert load_reference_front().instance_ref.endswith(":oracle")
    assert load_excerpt_front().instance_ref.endswith(":excerpt")
    tag = load_reference_front().instance_ref.split(":")[0]
    assert load_excerpt_front().instance_ref.split(":")[0] == tag


def test_loaders_return_fresh_fronts():
    assert load_reference_front() is not load_reference_front()


def test_excerpt_rows_at_display_precision(excerpt_front):
    shown = [
        (f"{s.f.total_cost:.2f}", f"{s.f.environmental_impact:.3f}")
        for s in excerpt_front
    ]
    assert shown == [
        ("200.00", "1.004"),
        ("202.00", "0.910"),
        ("204.00", "0.807"),
        ("208.01", "0.709"),
        ("212.01", "0.573"),
        ("216.02", "0.463"),
        ("219.98", "0.328"),
    ]


def test_excerpt_headline_variables(excerpt_front):
    assert EXCERPT_SOLUTION_NUMBERS == (1, 51, 101, 201, 301, 401, 500)
    row51 = excerpt_front[1]
    assert row51.x[0] == 49.0  # Cost Efficiency, Units/$
    assert row51.x[1] == 27.0  # Durability, Years
    assert row51.x[2] == 18.0  # Renewable Energy Usage, %
    row500 = excerpt_front[6]
    assert (row500.x[0], row500.x[1], row500.x[2]) == (40.0, 40.0, 40.0)


def test_excerpt_variables_in_bounds(excerpt_front, schema):
    for s in excerpt_front:
        assert schema.contains(s.x)
