from __future__ import annotations

import dataclasses

import numpy as np
import pytest

from emoadvisor.benchmark import (
    COMPONENT_NAMES,
    DRIVER_INDICES,
    FLAT_INDICES,
    HINGE_INDICES,
    build_params,
    build_schema,
    from_document,
    load_coefficients,
    make_benchmark_instance,
    to_document,
)
from emoadvisor.problem import (
    cost_corner,
    evaluate,
    evaluate_population,
    impact_corner,
)


def test_schema_has_fifty_variables(schema):
    assert len(schema) == 50
    assert len(set(schema.names)) == 50
    assert [v.index for v in schema] == list(range(1, 51))
    assert all(np.isfinite(schema.lower)) and all(np.isfinite(schema.upper))


def test_headline_variables_present(schema):
    assert schema.by_name("Cost Efficiency").unit == "Units/$"
    assert schema.by_name("Durability").unit == "Years"
    assert schema.by_name("Renewable Energy Usage").unit == "%"
    assert schema.by_name("Carbon Footprint").index == 4


def test_catalog_partition():
    assert DRIVER_INDICES == (1, 2, 3, 4)
    assert HINGE_INDICES == (5, 6, 7, 8, 9)
    assert len(FLAT_INDICES) == 41
    assert set(DRIVER_INDICES) | set(HINGE_INDICES) | set(FLAT_INDICES) == set(range(1, 51))


def test_cost_corner_calibration(benchmark_instance):
    f = evaluate(cost_corner(benchmark_instance), benchmark_instance)
    assert f.total_cost == pytest.approx(200.0, abs=1e-9)
    assert f.environmental_impact == pytest.approx(1.004, abs=1e-9)


def test_impact_corner_calibration(benchmark_instance):
    f = evaluate(impact_corner(benchmark_instance), benchmark_instance)
    assert f.total_cost == pytest.approx(240.0, abs=1e-9)
    assert f.environmental_impact == pytest.approx(0.115, abs=1e-9)


def test_cost_components_named_and_positive(benchmark_instance):
    assert len(benchmark_instance.cost_components) == len(COMPONENT_NAMES) == 3
    mid = (benchmark_instance.schema.lower + benchmark_instance.schema.upper) / 2.0
    for component in benchmark_instance.cost_components:
        assert component(mid) > 0.0


def test_vectorized_evaluator_matches_scalar_path(benchmark_instance):
    rng = np.random.default_rng(17)
    schema = benchmark_instance.schema
    X = schema.lower + rng.random((32, 50)) * (schema.upper - schema.lower)
    fast = evaluate_population(X, benchmark_instance)
    slow_instance = dataclasses.replace(benchmark_instance, population_evaluator=None)
    slow = evaluate_population(X, slow_instance)
    assert np.array_equal(fast, slow)


def test_instance_ref_carries_calibration_tag():
    a = make_benchmark_instance(seed=0)
    b = make_benchmark_instance(seed=7)
    assert a.calibration_tag == b.calibration_tag
    assert a.calibration_tag.startswith("bench-")
    assert a.seed == 0 and b.seed == 7


def test_coefficients_are_cached_and_well_formed():
    coeffs = load_coefficients()
    assert coeffs is load_coefficients()
    params = build_params(coeffs)
    assert params.lo.shape == (50,) and params.hi.shape == (50,)
    assert np.all(params.lo < params.hi)


def test_document_round_trip(benchmark_instance):
    doc = to_document(benchmark_instance)
    again = from_document(doc)
    assert again.calibration_tag == benchmark_instance.calibration_tag
    assert again.seed == benchmark_instance.seed
    assert len(again.schema) == 50
    rng = np.random.default_rng(3)
    schema = benchmark_instance.schema
    x = schema.lower + rng.random(50) * (schema.upper - schema.lower)
    fa = evaluate(x, benchmark_instance)
    fb = evaluate(x, again)
    assert (fa.total_cost, fa.environmental_impact) == (fb.total_cost, fb.environmental_impact)


def test_from_document_rejects_unknown_format(benchmark_instance):
    doc = to_document(benchmark_instance)
    doc["format"] = "something-else"
    with pytest.raises(ValueError):
        from_document(doc)


def test_impact_monotone_in_renewable_usage(benchmark_instance):
    schema = benchmark_instance.schema
    x = (schema.lower + schema.upper) / 2.0
    idx = schema.by_name("Renewable Energy Usage").index - 1
    lo = x.copy()
    lo[idx] = schema.lower[idx]
    hi = x.copy()
    hi[idx] = schema.upper[idx]
    f_lo = evaluate(lo, benchmark_instance)
    f_hi = evaluate(hi, benchmark_instance)
    assert f_hi.environmental_impact < f_lo.environmental_impact
    assert f_hi.total_cost > f_lo.total_cost


def test_impact_range_spans_calibrated_extent(benchmark_instance):
    rng = np.random.default_rng(5)
    schema = benchmark_instance.schema
    X = schema.lower + rng.random((200, 50)) * (schema.upper - schema.lower)
    F = evaluate_population(X, benchmark_instance)
    assert F[:, 0].min() > 200.0 and F[:, 0].max() < 260.0
    assert F[:, 1].min() > 0.115 and F[:, 1].max() < 1.2
