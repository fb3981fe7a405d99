from __future__ import annotations

import numpy as np
import pytest

from emoadvisor.benchmark import build_params, build_schema
from emoadvisor.kernels import backend_name, load_backend

numpy_impl = load_backend("numpy")
numba_impl = pytest.importorskip("emoadvisor.kernels.numba_impl")

KERNEL_NAMES = (
    "eval_population",
    "nondominated_ranks",
    "crowding_front",
    "sbx_pairs",
    "polynomial_mutation",
    "tournament",
    "hypervolume_2d",
)


def test_backend_selection_is_valid():
    assert backend_name() in ("numba", "numpy")


def test_backends_expose_the_same_kernels():
    for name in KERNEL_NAMES:
        assert callable(getattr(numpy_impl, name))
        assert callable(getattr(numba_impl, name))


def test_load_backend_rejects_unknown_names():
    with pytest.raises(ValueError):
        load_backend("gpu")


def _eval_args(rng, n=64):
    par = build_params()
    schema = build_schema()
    X = schema.lower + (schema.upper - schema.lower) * rng.random((n, len(schema.lower)))
    return (
        np.ascontiguousarray(X),
        par.role,
        par.t_at_upper,
        par.lo,
        par.hi,
        par.cost_lin,
        par.cost_quad,
        par.beta,
        par.eps,
        par.hinge_c,
        par.imp_w,
        par.comp_id,
        par.comp_base,
        par.impact_base,
    )


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_eval_population_bit_identical(seed):
    args = _eval_args(np.random.default_rng(seed))
    a = numpy_impl.eval_population(*args)
    b = numba_impl.eval_population(*args)
    assert a.shape == b.shape
    assert (a == b).all()


@pytest.mark.parametrize("n_objectives", [2, 3])
def test_nondominated_ranks_bit_identical(n_objectives):
    rng = np.random.default_rng(5)
    for _ in range(5):
        F = rng.integers(0, 6, size=(80, n_objectives)).astype(np.float64)
        a = numpy_impl.nondominated_ranks(F)
        b = numba_impl.nondominated_ranks(F)
        assert (a == b).all()


def test_crowding_front_bit_identical():
    rng = np.random.default_rng(9)
    for _ in range(5):
        k = int(rng.integers(1, 40))
        f0 = np.sort(rng.random(k))
        F = np.column_stack([f0, 1.0 - f0])
        a = numpy_impl.crowding_front(F)
        b = numba_impl.crowding_front(F)
        assert (np.isinf(a) == np.isinf(b)).all()
        finite = ~np.isinf(a)
        assert (a[finite] == b[finite]).all()


def test_sbx_pairs_bit_identical():
    rng = np.random.default_rng(21)
    pairs, d = 16, 7
    lo = np.full(d, -2.0)
    hi = np.full(d, 3.0)
    P1 = lo + (hi - lo) * rng.random((pairs, d))
    P2 = lo + (hi - lo) * rng.random((pairs, d))
    pair_coin = rng.random(pairs)
    var_coin = rng.random((pairs, d))
    u = rng.random((pairs, d))
    swap_coin = rng.random((pairs, d))
    a1, a2 = numpy_impl.sbx_pairs(P1, P2, pair_coin, var_coin, u, swap_coin, lo, hi, 0.9, 15.0)
    b1, b2 = numba_impl.sbx_pairs(P1, P2, pair_coin, var_coin, u, swap_coin, lo, hi, 0.9, 15.0)
    assert (a1 == b1).all() and (a2 == b2).all()


def test_polynomial_mutation_bit_identical():
    rng = np.random.default_rng(33)
    n, d = 24, 6
    lo = np.zeros(d)
    hi = np.ones(d)
    X = rng.random((n, d))
    coin = rng.random((n, d))
    u = rng.random((n, d))
    a = numpy_impl.polynomial_mutation(X, coin, u, lo, hi, 0.3, 20.0)
    b = numba_impl.polynomial_mutation(X, coin, u, lo, hi, 0.3, 20.0)
    assert (a == b).all()


def test_tournament_bit_identical():
    rng = np.random.default_rng(44)
    n = 40
    ranks = rng.integers(0, 4, n)
    crowd = rng.random(n)
    crowd[rng.random(n) < 0.2] = np.inf
    cand = np.column_stack([rng.permutation(n), rng.permutation(n)])
    coin = rng.random(n)
    a = numpy_impl.tournament(ranks, crowd, cand, coin)
    b = numba_impl.tournament(ranks, crowd, cand, coin)
    assert (a == b).all()


def test_hypervolume_2d_bit_identical():
    rng = np.random.default_rng(55)
    for _ in range(5):
        k = int(rng.integers(1, 50))
        F = rng.random((k, 2)) * 10.0
        ref = (11.0, 11.0)
        a = numpy_impl.hypervolume_2d(F, ref)
        b = numba_impl.hypervolume_2d(F, ref)
        assert a == b
