"""Pure-numpy implementations of the hot numeric kernels.

This is the fallback path used when numba is unavailable or disabled via
EMOADVISOR_KERNELS=numpy. Formulas and accumulation order mirror the numba
path exactly so both backends produce identical trajectories.
"""

from __future__ import annotations

import math

import numpy as np

# Variable role codes shared with the benchmark parameter arrays.
ROLE_DRIVER = 0
ROLE_HINGE = 1
ROLE_COST_FLAT = 2
ROLE_IMPACT_FLAT = 3

_scalar_pow = np.frompyfunc(math.pow, 2, 1)


def _libm_pow(base: np.ndarray, exponent: float) -> np.ndarray:
    """Element-wise libm pow; numpy's SIMD pow can differ from it by 1 ulp,
    which would fork this backend's trajectories from the compiled one."""
    return _scalar_pow(base, exponent).astype(np.float64)


def eval_population(
    X: np.ndarray,
    role: np.ndarray,
    t_at_upper: np.ndarray,
    lo: np.ndarray,
    hi: np.ndarray,
    cost_lin: np.ndarray,
    cost_quad: np.ndarray,
    beta: np.ndarray,
    eps: np.ndarray,
    hinge_c: np.ndarray,
    imp_w: np.ndarray,
    comp_id: np.ndarray,
    comp_base: np.ndarray,
    impact_base: float,
) -> np.ndarray:
    """Evaluate an (n, d) population of the calibrated benchmark to (n, 2).

    Cost accumulates per component (variables in ascending index order within
    each component), impact accumulates in ascending variable order after the
    irreducible base term.
    """
    n, d = X.shape
    comps = [np.full(n, comp_base[k]) for k in range(len(comp_base))]
    impact = np.full(n, impact_base)
    for i in range(d):
        span = hi[i] - lo[i]
        if t_at_upper[i]:
            t = (X[:, i] - lo[i]) / span
        else:
            t = (hi[i] - X[:, i]) / span
        r = role[i]
        if r == ROLE_DRIVER:
            comps[comp_id[i]] += cost_lin[i] * t + cost_quad[i] * (t * t)
            one_m = 1.0 - t
            phi = (_libm_pow(one_m, beta[i]) + eps[i] * one_m) / (1.0 + eps[i])
            impact += imp_w[i] * phi
        elif r == ROLE_HINGE:
            comps[comp_id[i]] += cost_lin[i] * t
            one_m = 1.0 - t
            dd = hinge_c[i] - t
            qq = dd / hinge_c[i]
            quad = np.where(dd > 0.0, qq * qq, 0.0)
            phi = (quad + eps[i] * one_m) / (1.0 + eps[i])
            impact += imp_w[i] * phi
        elif r == ROLE_COST_FLAT:
            comps[comp_id[i]] += cost_lin[i] * t
        else:  # ROLE_IMPACT_FLAT
            impact += imp_w[i] * t
    cost = comps[0].copy()
    for k in range(1, len(comps)):
        cost += comps[k]
    return np.stack([cost, impact], axis=1)


def nondominated_ranks(F: np.ndarray) -> np.ndarray:
    """Rank each row of an (n, m) objective matrix by non-domination level.

    Rank 0 rows are dominated by nobody; rank k rows are dominated only by
    rows of ranks < k. Minimization in every objective.
    """
    n = F.shape[0]
    ranks = np.full(n, -1, dtype=np.int64)
    if n == 0:
        return ranks
    le = (F[:, None, :] <= F[None, :, :]).all(axis=-1)
    lt = (F[:, None, :] < F[None, :, :]).any(axis=-1)
    dom = le & lt  # dom[i, j]: i dominates j
    remaining = np.ones(n, dtype=bool)
    level = 0
    while remaining.any():
        dominated = (dom & remaining[:, None]).any(axis=0)
        front = remaining & ~dominated
        ranks[front] = level
        remaining &= ~front
        level += 1
    return ranks


def crowding_front(F: np.ndarray) -> np.ndarray:
    """Crowding distances for one mutually non-dominated front (k, m).

    Individuals attaining a per-objective minimum or maximum value get +inf
    (boundary sentinel). Interior individuals sharing an exact objective
    vector with another get 0 (zero gap to a twin). Everyone else gets the
    classic sum over objectives of the normalized neighbor gap.
    """
    k, m = F.shape
    crowd = np.zeros(k)
    if k == 0:
        return crowd
    fmin = F.min(axis=0)
    fmax = F.max(axis=0)
    for j in range(m):
        rng = fmax[j] - fmin[j]
        if rng <= 0.0:
            continue
        order = np.argsort(F[:, j], kind="stable")
        vals = F[order, j]
        gaps = np.empty(k)
        gaps[0] = np.inf
        gaps[-1] = np.inf
        if k > 2:
            gaps[1:-1] = (vals[2:] - vals[:-2]) / rng
        crowd[order] += gaps
    is_extreme = ((F == fmin) | (F == fmax)).any(axis=1)
    crowd[is_extreme] = np.inf
    if k > 1:
        _, inverse, counts = np.unique(F, axis=0, return_inverse=True, return_counts=True)
        dup = counts[inverse] > 1
        crowd[dup & ~is_extreme] = 0.0
    return crowd


def sbx_pairs(
    P1: np.ndarray,
    P2: np.ndarray,
    pair_coin: np.ndarray,
    var_coin: np.ndarray,
    u: np.ndarray,
    swap_coin: np.ndarray,
    lo: np.ndarray,
    hi: np.ndarray,
    pc: float,
    eta: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Simulated binary crossover on paired parents, clamped to bounds.

    A pair is crossed when its coin is < pc; within a crossed pair each
    variable is crossed when its coin is < 0.5, and the two child values are
    exchanged when its swap coin is < 0.5 (the exchange is what mixes
    parental material across children). Identical parents are an exact
    fixed point.
    """
    exponent = 1.0 / (eta + 1.0)
    spread = np.where(
        u <= 0.5,
        _libm_pow(2.0 * u, exponent),
        _libm_pow(1.0 / (2.0 * (1.0 - u)), exponent),
    )
    mean = 0.5 * (P1 + P2)
    half = 0.5 * spread * (P2 - P1)
    c1 = np.clip(mean - half, lo, hi)
    c2 = np.clip(mean + half, lo, hi)
    swap = swap_coin < 0.5
    o1 = np.where(swap, c2, c1)
    o2 = np.where(swap, c1, c2)
    apply = (pair_coin[:, None] < pc) & (var_coin < 0.5)
    return np.where(apply, o1, P1), np.where(apply, o2, P2)


def polynomial_mutation(
    X: np.ndarray,
    coin: np.ndarray,
    u: np.ndarray,
    lo: np.ndarray,
    hi: np.ndarray,
    pm: float,
    eta: float,
) -> np.ndarray:
    """Bounded polynomial mutation; each variable mutates when coin < pm."""
    span = hi - lo
    d_lower = (X - lo) / span
    d_upper = (hi - X) / span
    exponent = 1.0 / (eta + 1.0)
    low_branch = u < 0.5
    xy = np.where(low_branch, 1.0 - d_lower, 1.0 - d_upper)
    xy_pow = _libm_pow(xy, eta + 1.0)
    val = np.where(
        low_branch,
        2.0 * u + (1.0 - 2.0 * u) * xy_pow,
        2.0 * (1.0 - u) + 2.0 * (u - 0.5) * xy_pow,
    )
    val_pow = _libm_pow(val, exponent)
    delta = np.where(low_branch, val_pow - 1.0, 1.0 - val_pow)
    mutated = np.clip(X + delta * span, lo, hi)
    return np.where(coin < pm, mutated, X)


def tournament(
    ranks: np.ndarray, crowd: np.ndarray, cand: np.ndarray, coin: np.ndarray
) -> np.ndarray:
    """Binary tournament on (rank, crowding); exact ties resolved by coin."""
    a = cand[:, 0]
    b = cand[:, 1]
    a_wins = (ranks[a] < ranks[b]) | ((ranks[a] == ranks[b]) & (crowd[a] > crowd[b]))
    b_wins = (ranks[b] < ranks[a]) | ((ranks[a] == ranks[b]) & (crowd[b] > crowd[a]))
    return np.where(a_wins, a, np.where(b_wins, b, np.where(coin < 0.5, a, b)))


def hypervolume_2d(F: np.ndarray, ref: np.ndarray) -> float:
    """Exact dominated area of 2-objective points w.r.t. a reference point.

    Points not weakly dominating the reference are skipped; dominated points
    contribute nothing extra.
    """
    keep = (F[:, 0] <= ref[0]) & (F[:, 1] <= ref[1])
    P = F[keep]
    if P.shape[0] == 0:
        return 0.0
    order = np.lexsort((P[:, 1], P[:, 0]))
    area = 0.0
    prev = ref[1]
    for i in order:
        f0 = P[i, 0]
        f1 = P[i, 1]
        if f1 < prev:
            area += (ref[0] - f0) * (prev - f1)
            prev = f1
    return area
