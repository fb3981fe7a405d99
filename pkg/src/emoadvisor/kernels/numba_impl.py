"""Numba-compiled implementations of the hot numeric kernels.

Importing this module requires numba. Every function mirrors its twin in
numpy_impl.py: same formulas, same accumulation order, same tie handling,
so the two backends produce bit-identical results on the same inputs.
"""

from __future__ import annotations

import numpy as np
from numba import njit

ROLE_DRIVER = 0
ROLE_HINGE = 1
ROLE_COST_FLAT = 2
ROLE_IMPACT_FLAT = 3


@njit(cache=True)
def eval_population(
    X,
    role,
    t_at_upper,
    lo,
    hi,
    cost_lin,
    cost_quad,
    beta,
    eps,
    hinge_c,
    imp_w,
    comp_id,
    comp_base,
    impact_base,
):
    n, d = X.shape
    ncomp = comp_base.shape[0]
    comps = np.empty((ncomp, n))
    for k in range(ncomp):
        for r in range(n):
            comps[k, r] = comp_base[k]
    impact = np.full(n, impact_base)
    for i in range(d):
        span = hi[i] - lo[i]
        cid = comp_id[i]
        ri = role[i]
        for r in range(n):
            if t_at_upper[i]:
                t = (X[r, i] - lo[i]) / span
            else:
                t = (hi[i] - X[r, i]) / span
            if ri == ROLE_DRIVER:
                comps[cid, r] += cost_lin[i] * t + cost_quad[i] * (t * t)
                one_m = 1.0 - t
                phi = (one_m ** beta[i] + eps[i] * one_m) / (1.0 + eps[i])
                impact[r] += imp_w[i] * phi
            elif ri == ROLE_HINGE:
                comps[cid, r] += cost_lin[i] * t
                one_m = 1.0 - t
                dd = hinge_c[i] - t
                qq = dd / hinge_c[i]
                quad = qq * qq if dd > 0.0 else 0.0
                phi = (quad + eps[i] * one_m) / (1.0 + eps[i])
                impact[r] += imp_w[i] * phi
            elif ri == ROLE_COST_FLAT:
                comps[cid, r] += cost_lin[i] * t
            else:
                impact[r] += imp_w[i] * t
    out = np.empty((n, 2))
    for r in range(n):
        c = comps[0, r]
        for k in range(1, ncomp):
            c += comps[k, r]
        out[r, 0] = c
        out[r, 1] = impact[r]
    return out


@njit(cache=True)
def nondominated_ranks(F):
    # Deb bookkeeping: count dominators, record dominated sets, peel levels.
    # The (n, n) index table costs n^2 * 4 bytes; fine for populations here.
    n = F.shape[0]
    m = F.shape[1]
    ranks = np.full(n, -1, np.int64)
    if n == 0:
        return ranks
    dom_idx = np.empty((n, n), np.int32)
    dom_cnt = np.zeros(n, np.int64)
    dominators = np.zeros(n, np.int64)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            i_le = True
            i_lt = False
            for k in range(m):
                if F[i, k] > F[j, k]:
                    i_le = False
                    break
                if F[i, k] < F[j, k]:
                    i_lt = True
            if i_le and i_lt:
                dom_idx[i, dom_cnt[i]] = j
                dom_cnt[i] += 1
                dominators[j] += 1
    current = np.empty(n, np.int64)
    nxt = np.empty(n, np.int64)
    csize = 0
    for i in range(n):
        if dominators[i] == 0:
            ranks[i] = 0
            current[csize] = i
            csize += 1
    level = 0
    while csize > 0:
        nsize = 0
        for ci in range(csize):
            i = current[ci]
            for s in range(dom_cnt[i]):
                j = dom_idx[i, s]
                dominators[j] -= 1
                if dominators[j] == 0:
                    ranks[j] = level + 1
                    nxt[nsize] = j
                    nsize += 1
        tmp = current
        current = nxt
        nxt = tmp
        csize = nsize
        level += 1
    return ranks


@njit(cache=True)
def crowding_front(F):
    k, m = F.shape
    crowd = np.zeros(k)
    if k == 0:
        return crowd
    fmin = np.empty(m)
    fmax = np.empty(m)
    for j in range(m):
        mn = F[0, j]
        mx = F[0, j]
        for i in range(1, k):
            v = F[i, j]
            if v < mn:
                mn = v
            if v > mx:
                mx = v
        fmin[j] = mn
        fmax[j] = mx
    for j in range(m):
        rng = fmax[j] - fmin[j]
        if rng <= 0.0:
            continue
        col = np.ascontiguousarray(F[:, j])
        order = np.argsort(col, kind="mergesort")
        crowd[order[0]] += np.inf
        crowd[order[k - 1]] += np.inf
        for p in range(1, k - 1):
            gap = (col[order[p + 1]] - col[order[p - 1]]) / rng
            crowd[order[p]] += gap
    extreme = np.zeros(k, np.bool_)
    for i in range(k):
        for j in range(m):
            if F[i, j] == fmin[j] or F[i, j] == fmax[j]:
                extreme[i] = True
                break
    for i in range(k):
        if extreme[i]:
            crowd[i] = np.inf
    if k > 1:
        for i in range(k):
            if extreme[i]:
                continue
            for j in range(k):
                if j == i:
                    continue
                same = True
                for c in range(m):
                    if F[i, c] != F[j, c]:
                        same = False
                        break
                if same:
                    crowd[i] = 0.0
                    break
    return crowd


@njit(cache=True)
def sbx_pairs(P1, P2, pair_coin, var_coin, u, swap_coin, lo, hi, pc, eta):
    q, d = P1.shape
    C1 = np.empty_like(P1)
    C2 = np.empty_like(P2)
    exponent = 1.0 / (eta + 1.0)
    for p in range(q):
        crossed = pair_coin[p] < pc
        for i in range(d):
            p1 = P1[p, i]
            p2 = P2[p, i]
            if crossed and var_coin[p, i] < 0.5:
                uu = u[p, i]
                if uu <= 0.5:
                    spread = (2.0 * uu) ** exponent
                else:
                    spread = (1.0 / (2.0 * (1.0 - uu))) ** exponent
                mean = 0.5 * (p1 + p2)
                half = 0.5 * spread * (p2 - p1)
                c1 = mean - half
                c2 = mean + half
                if c1 < lo[i]:
                    c1 = lo[i]
                elif c1 > hi[i]:
                    c1 = hi[i]
                if c2 < lo[i]:
                    c2 = lo[i]
                elif c2 > hi[i]:
                    c2 = hi[i]
                if swap_coin[p, i] < 0.5:
                    C1[p, i] = c2
                    C2[p, i] = c1
                else:
                    C1[p, i] = c1
                    C2[p, i] = c2
            else:
                C1[p, i] = p1
                C2[p, i] = p2
    return C1, C2


@njit(cache=True)
def polynomial_mutation(X, coin, u, lo, hi, pm, eta):
    n, d = X.shape
    out = np.empty_like(X)
    exponent = 1.0 / (eta + 1.0)
    for r in range(n):
        for i in range(d):
            x = X[r, i]
            if coin[r, i] < pm:
                span = hi[i] - lo[i]
                uu = u[r, i]
                if uu < 0.5:
                    xy = 1.0 - (x - lo[i]) / span
                    val = 2.0 * uu + (1.0 - 2.0 * uu) * xy ** (eta + 1.0)
                    delta = val ** exponent - 1.0
                else:
                    xy = 1.0 - (hi[i] - x) / span
                    val = 2.0 * (1.0 - uu) + 2.0 * (uu - 0.5) * xy ** (eta + 1.0)
                    delta = 1.0 - val ** exponent
                xm = x + delta * span
                if xm < lo[i]:
                    xm = lo[i]
                elif xm > hi[i]:
                    xm = hi[i]
                out[r, i] = xm
            else:
                out[r, i] = x
    return out


@njit(cache=True)
def tournament(ranks, crowd, cand, coin):
    n = cand.shape[0]
    out = np.empty(n, np.int64)
    for s in range(n):
        a = cand[s, 0]
        b = cand[s, 1]
        if ranks[a] < ranks[b] or (ranks[a] == ranks[b] and crowd[a] > crowd[b]):
            out[s] = a
        elif ranks[b] < ranks[a] or (ranks[a] == ranks[b] and crowd[b] > crowd[a]):
            out[s] = b
        else:
            out[s] = a if coin[s] < 0.5 else b
    return out


@njit(cache=True)
def hypervolume_2d(F, ref):
    n = F.shape[0]
    keep = np.empty(n, np.int64)
    cnt = 0
    for i in range(n):
        if F[i, 0] <= ref[0] and F[i, 1] <= ref[1]:
            keep[cnt] = i
            cnt += 1
    if cnt == 0:
        return 0.0
    p0 = np.empty(cnt)
    p1 = np.empty(cnt)
    for s in range(cnt):
        p0[s] = F[keep[s], 0]
        p1[s] = F[keep[s], 1]
    o1 = np.argsort(p1, kind="mergesort")
    p0r = np.empty(cnt)
    for s in range(cnt):
        p0r[s] = p0[o1[s]]
    o2 = np.argsort(p0r, kind="mergesort")
    area = 0.0
    prev = ref[1]
    for s in range(cnt):
        i = o1[o2[s]]
        f0 = p0[i]
        f1 = p1[i]
        if f1 < prev:
            area += (ref[0] - f0) * (prev - f1)
            prev = f1
    return area
