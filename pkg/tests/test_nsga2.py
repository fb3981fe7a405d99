from __future__ import annotations

import dataclasses
import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from emoadvisor.nsga2 import (
    BOUNDARY,
    Dominance,
    EngineError,
    EvaluationError,
    Individual,
    NsgaParams,
    RunResult,
    crowding_distance,
    dominates,
    export_front_csv,
    front_csv_text,
    hypervolume,
    import_front_csv,
    nondominated_sort,
    polynomial_mutation,
    run_nsga2,
    sbx_crossover,
)
from emoadvisor.problem import ObjectiveVector
from emoadvisor.zdt import make_zdt1_instance

finite_objectives = arrays(
    np.float64,
    2,
    elements=st.floats(min_value=-1e6, max_value=1e6, allow_nan=False),
)


# -- dominance ---------------------------------------------------------------


def a_dominates(a, b) -> bool:
    return dominates(a, b) is Dominance.A_DOMINATES


def test_dominates_examples():
    assert dominates(np.array([1.0, 1.0]), np.array([2.0, 2.0])) is Dominance.A_DOMINATES
    assert dominates(np.array([2.0, 2.0]), np.array([1.0, 1.0])) is Dominance.B_DOMINATES
    assert dominates(np.array([1.0, 2.0]), np.array([1.0, 3.0])) is Dominance.A_DOMINATES
    assert dominates(np.array([1.0, 3.0]), np.array([2.0, 2.0])) is Dominance.INCOMPARABLE
    assert dominates(np.array([1.0, 1.0]), np.array([1.0, 1.0])) is Dominance.INCOMPARABLE


def test_dominates_accepts_objective_vectors():
    a = ObjectiveVector(1.0, 1.0)
    b = ObjectiveVector(2.0, 2.0)
    assert a_dominates(a, b) and not a_dominates(b, a)


def test_dominates_dimension_mismatch():
    with pytest.raises(EngineError):
        dominates(np.array([1.0, 2.0]), np.array([1.0, 2.0, 3.0]))


@given(finite_objectives, finite_objectives)
def test_dominates_antisymmetric(a, b):
    assert not (a_dominates(a, b) and a_dominates(b, a))


@given(finite_objectives, finite_objectives)
def test_dominates_mirror_consistent(a, b):
    forward = dominates(a, b)
    backward = dominates(b, a)
    mirrored = {
        Dominance.A_DOMINATES: Dominance.B_DOMINATES,
        Dominance.B_DOMINATES: Dominance.A_DOMINATES,
        Dominance.INCOMPARABLE: Dominance.INCOMPARABLE,
    }
    assert backward is mirrored[forward]


@given(finite_objectives)
def test_dominates_irreflexive(a):
    assert dominates(a, a) is Dominance.INCOMPARABLE


@given(finite_objectives, finite_objectives, finite_objectives)
def test_dominates_transitive(a, b, c):
    if a_dominates(a, b) and a_dominates(b, c):
        assert a_dominates(a, c)


# -- non-dominated sorting ----------------------------------------------------


def oracle_fronts(F: np.ndarray) -> list[list[int]]:
    """O(n^2) peeling by exhaustive pairwise dominance checks."""
    remaining = set(range(F.shape[0]))
    fronts = []
    while remaining:
        level = [
            i
            for i in remaining
            if not any(a_dominates(F[j], F[i]) for j in remaining if j != i)
        ]
        fronts.append(sorted(level))
        remaining -= set(level)
    return fronts


@pytest.mark.parametrize("n_objectives", [2, 3])
def test_sort_matches_oracle_sample(n_objectives):
    rng = np.random.default_rng(123)
    for _ in range(10):
        F = rng.integers(0, 8, size=(60, n_objectives)).astype(np.float64)
        assert nondominated_sort(F) == oracle_fronts(F)


def test_sort_single_front():
    F = np.array([[0.0, 3.0], [1.0, 2.0], [2.0, 1.0], [3.0, 0.0]])
    assert nondominated_sort(F) == [[0, 1, 2, 3]]


def test_sort_total_order():
    F = np.array([[3.0, 3.0], [2.0, 2.0], [1.0, 1.0]])
    assert nondominated_sort(F) == [[2], [1], [0]]


def test_sort_updates_individual_ranks():
    pop = [
        Individual(x=np.zeros(1), f=ObjectiveVector(1.0, 1.0)),
        Individual(x=np.zeros(1), f=ObjectiveVector(2.0, 2.0)),
    ]
    fronts = nondominated_sort(pop)
    assert fronts == [[0], [1]]
    assert pop[0].rank == 0 and pop[1].rank == 1


# -- crowding distance ---------------------------------------------------------


def test_crowding_boundary_and_interior():
    front = [
        Individual(x=np.zeros(1), f=ObjectiveVector(0.0, 4.0)),
        Individual(x=np.zeros(1), f=ObjectiveVector(1.0, 2.0)),
        Individual(x=np.zeros(1), f=ObjectiveVector(2.0, 1.0)),
        Individual(x=np.zeros(1), f=ObjectiveVector(4.0, 0.0)),
    ]
    crowd = crowding_distance(front)
    assert crowd[0] == BOUNDARY and crowd[3] == BOUNDARY
    assert crowd[1] == pytest.approx(1.25)
    assert crowd[2] == pytest.approx(1.25)
    assert front[1].crowding == pytest.approx(1.25)


def test_crowding_duplicate_interior_vectors_get_zero():
    front = [
        Individual(x=np.zeros(1), f=ObjectiveVector(0.0, 4.0)),
        Individual(x=np.zeros(1), f=ObjectiveVector(2.0, 2.0)),
        Individual(x=np.zeros(1), f=ObjectiveVector(2.0, 2.0)),
        Individual(x=np.zeros(1), f=ObjectiveVector(4.0, 0.0)),
    ]
    crowd = crowding_distance(front)
    assert crowd[1] == 0.0 and crowd[2] == 0.0


def test_crowding_small_fronts_all_boundary():
    one = [Individual(x=np.zeros(1), f=ObjectiveVector(1.0, 1.0))]
    assert crowding_distance(one)[0] == BOUNDARY
    two = [
        Individual(x=np.zeros(1), f=ObjectiveVector(1.0, 2.0)),
        Individual(x=np.zeros(1), f=ObjectiveVector(2.0, 1.0)),
    ]
    assert list(crowding_distance(two)) == [BOUNDARY, BOUNDARY]


# -- variation operators --------------------------------------------------------


def _operator_params(**overrides) -> NsgaParams:
    base = dict(population_size=8, generations=3, seed=5)
    base.update(overrides)
    return NsgaParams(**base)


def test_sbx_golden_trace():
    rng = np.random.default_rng(42)
    c1, c2 = sbx_crossover(
        np.array([0.2, 0.5, 0.8]),
        np.array([0.6, 0.1, 0.9]),
        _operator_params(),
        rng,
        lower=np.zeros(3),
        upper=np.ones(3),
    )
    assert list(c1) == [0.21981608294382973, 0.5, 0.8]
    assert list(c2) == [0.5801839170561703, 0.1, 0.9]


def test_polynomial_mutation_golden_trace():
    rng = np.random.default_rng(7)
    mutated = polynomial_mutation(
        np.array([0.2, 0.5, 0.8]),
        _operator_params(mutation_probability=0.9, seed=0),
        rng,
        np.zeros(3),
        np.ones(3),
    )
    assert list(mutated) == [
        0.16324505653510074,
        0.4759942075554575,
        0.8621694058141016,
    ]


@given(st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=25, deadline=None)
def test_operators_respect_bounds(seed):
    rng = np.random.default_rng(seed)
    lo = np.array([0.0, -1.0, 5.0])
    hi = np.array([1.0, 1.0, 6.0])
    p1 = lo + (hi - lo) * rng.random(3)
    p2 = lo + (hi - lo) * rng.random(3)
    c1, c2 = sbx_crossover(p1, p2, _operator_params(), rng, lower=lo, upper=hi)
    m = polynomial_mutation(c1, _operator_params(mutation_probability=1.0), rng, lo, hi)
    for child in (c1, c2, m):
        assert (child >= lo).all() and (child <= hi).all()


def test_polynomial_mutation_requires_finite_bounds():
    rng = np.random.default_rng(0)
    with pytest.raises(EngineError):
        polynomial_mutation(
            np.array([0.5]),
            _operator_params(),
            rng,
            np.array([0.0]),
            np.array([np.inf]),
        )


# -- hypervolume -----------------------------------------------------------------


def test_hypervolume_examples():
    assert hypervolume(np.array([[1.0, 1.0]]), (2.0, 2.0)) == pytest.approx(1.0)
    staircase = np.array([[0.0, 2.0], [1.0, 1.0], [2.0, 0.0]])
    assert hypervolume(staircase, (3.0, 3.0)) == pytest.approx(6.0)


def test_hypervolume_ignores_points_outside_reference():
    F = np.array([[1.0, 1.0], [5.0, 0.0]])
    assert hypervolume(F, (2.0, 2.0)) == pytest.approx(1.0)


def test_hypervolume_dominated_points_do_not_add():
    F = np.array([[1.0, 1.0], [1.5, 1.5]])
    assert hypervolume(F, (2.0, 2.0)) == pytest.approx(1.0)


# -- full runs ---------------------------------------------------------------------


def test_run_front_golden_trace():
    result = run_nsga2(make_zdt1_instance(n_vars=4), _operator_params())
    got = [(s.f.total_cost, s.f.environmental_impact) for s in result.front.solutions]
    assert got == [
        (0.0, 2.446812033656208),
        (0.8565461591437271, 1.531426076920381),
        (0.872195468024335, 1.5158013615633128),
        (0.9016349854465021, 1.4897249862011437),
        (0.9196663701763891, 1.4546890504385113),
    ]


def test_run_is_deterministic_per_seed(benchmark_instance):
    params = NsgaParams(population_size=20, generations=10, seed=3)
    a = run_nsga2(benchmark_instance, params)
    b = run_nsga2(benchmark_instance, params)
    assert a.to_document() == b.to_document()
    c = run_nsga2(benchmark_instance, dataclasses.replace(params, seed=4))
    assert c.to_document() != a.to_document()


def test_run_population_stays_in_bounds_every_generation():
    instance = make_zdt1_instance(n_vars=5)
    lo, hi = instance.schema.lower, instance.schema.upper
    seen = []

    def spy(X: np.ndarray) -> np.ndarray:
        assert (X >= lo).all() and (X <= hi).all()
        seen.append(X.shape)
        return instance.population_evaluator(X)

    spied = dataclasses.replace(instance, population_evaluator=spy)
    run_nsga2(spied, _operator_params(population_size=12, generations=6))
    # initial population + one offspring block per generation
    assert len(seen) == 7


def test_run_front_is_mutually_nondominated(small_run):
    objectives = small_run.front.objectives()
    for i in range(len(objectives)):
        for j in range(len(objectives)):
            if i != j:
                assert not a_dominates(objectives[i], objectives[j])


def test_run_archive_hypervolume_nondecreasing(small_run):
    values = [s["hypervolume"] for s in small_run.per_generation_stats]
    assert all(b >= a for a, b in zip(values, values[1:]))


def test_run_stats_shape(small_run):
    stats = small_run.per_generation_stats
    assert len(stats) == small_run.params.generations
    assert [s["generation"] for s in stats] == list(range(1, len(stats) + 1))
    assert all(s["front_size"] >= 1 for s in stats)


def test_run_document_round_trip(small_run):
    doc = small_run.to_document()
    restored = RunResult.from_document(doc)
    assert restored.params == small_run.params
    assert restored.instance_ref == small_run.instance_ref
    assert restored.hv_reference == small_run.hv_reference
    assert restored.to_document() == doc
    for a, b in zip(restored.front.solutions, small_run.front.solutions):
        assert a.f.total_cost == b.f.total_cost
        assert a.f.environmental_impact == b.f.environmental_impact
        assert (a.x == b.x).all()


def test_run_rejects_unknown_document_format(small_run):
    doc = small_run.to_document()
    doc["format"] = "something/9"
    with pytest.raises(EngineError):
        RunResult.from_document(doc)


def test_evaluation_error_carries_generation():
    instance = make_zdt1_instance(n_vars=4)

    def poisoned(X: np.ndarray) -> np.ndarray:
        F = instance.population_evaluator(X)
        if poisoned.calls > 0:
            F = F.copy()
            F[2, 0] = np.nan
        poisoned.calls += 1
        return F

    poisoned.calls = 0
    spiked = dataclasses.replace(instance, population_evaluator=poisoned)
    with pytest.raises(EvaluationError) as err:
        run_nsga2(spiked, _operator_params(population_size=8, generations=4))
    assert err.value.generation == 1
    assert err.value.index == 2


# -- parameter validation -------------------------------------------------------


@pytest.mark.parametrize(
    "overrides",
    [
        {"population_size": 3},
        {"population_size": 41},
        {"generations": -1},
        {"crossover_probability": 1.5},
        {"mutation_probability": -0.1},
        {"sbx_eta": -1.0},
    ],
)
def test_params_validation(overrides):
    base = dict(population_size=40, generations=5, seed=0)
    base.update(overrides)
    with pytest.raises(EngineError):
        NsgaParams(**base)


def test_params_document_round_trip():
    params = NsgaParams(population_size=40, generations=5, seed=9)
    assert NsgaParams.from_document(params.to_document()) == params


def test_params_default_mutation_probability():
    params = NsgaParams(population_size=40, generations=5)
    assert params.mutation_probability is None
    assert params.resolved_mutation_probability(50) == pytest.approx(1 / 50)


# -- CSV export/import ------------------------------------------------------------


def test_front_csv_round_trip_is_byte_stable(small_run):
    text = front_csv_text(small_run)
    front, names = import_front_csv(io.StringIO(text))
    assert list(names) == list(small_run.instance.schema.names)
    assert len(front) == len(small_run.front)

    rebuilt = dataclasses.replace(small_run, front=front, instance=None)
    assert front_csv_text(rebuilt, names=names) == text


def test_front_csv_header(small_run):
    first = front_csv_text(small_run).splitlines()[0]
    assert first.startswith("Sol. #,Total Cost (M$),Env. Impact (Score),")


def test_import_front_csv_rejects_bad_header():
    with pytest.raises(EngineError):
        import_front_csv(io.StringIO("a,b,c\n1,2,3\n"))


def test_import_front_csv_rejects_ragged_rows():
    text = "Sol. #,Total Cost (M$),Env. Impact (Score),x1\n1,2.0,1.0\n"
    with pytest.raises(EngineError):
        import_front_csv(io.StringIO(text))
