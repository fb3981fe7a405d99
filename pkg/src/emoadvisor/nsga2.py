"""Elitist multi-objective evolutionary engine (NSGA-II).

Implements Pareto dominance, fast non-dominated sorting, crowding distance,
simulated binary crossover, bounded polynomial mutation, binary tournament
selection, and an exact two-objective hypervolume indicator, wired into the
standard (mu + lambda) generational loop.

Determinism contract
--------------------
All randomness is drawn from a single ``numpy.random.Generator`` seeded by
``NsgaParams.seed``, outside the numeric kernels, in a fixed documented
order, so a run reproduces bit-for-bit regardless of the active kernel
backend:

* initialization: one uniform block of shape ``(population_size, n_vars)``
* each generation, in order:

  1. mating permutations         -- ``permutation(n)`` twice; consecutive
     entries of each permutation form the binary-tournament pairs, so every
     individual competes exactly twice per generation
  2. tournament tie coins        -- ``random(n)``
  3. crossover pair coins        -- ``random(n // 2)``
  4. crossover variable coins    -- ``random((n // 2, n_vars))``
  5. crossover spread draws      -- ``random((n // 2, n_vars))``
  6. crossover swap coins        -- ``random((n // 2, n_vars))``
  7. mutation coins              -- ``random((n, n_vars))``
  8. mutation spread draws       -- ``random((n, n_vars))``

Survivor selection fills the next population front by front; the last,
partially admitted front is truncated by descending crowding distance with
ties broken by ascending position in the combined parent+offspring pool.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import asdict, dataclass, field
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from . import kernels
from .problem import ObjectiveVector, ProblemInstance, evaluate

if TYPE_CHECKING:  # pragma: no cover - import cycle guard, types only
    from .analytics import ParetoFront

__all__ = [
    "BOUNDARY",
    "RUN_DOCUMENT_FORMAT",
    "CSV_FIXED_HEADER",
    "Dominance",
    "EngineError",
    "EvaluationError",
    "Individual",
    "NsgaParams",
    "RunResult",
    "dominates",
    "nondominated_sort",
    "crowding_distance",
    "sbx_crossover",
    "polynomial_mutation",
    "hypervolume",
    "run_nsga2",
    "export_front_csv",
]

#: Crowding-distance sentinel assigned to boundary members of a front.
BOUNDARY = float("inf")

#: Version tag of the serialized run document.
RUN_DOCUMENT_FORMAT = "emoadvisor.run/1"

#: Leading columns of the front CSV export, before the variable names.
CSV_FIXED_HEADER = ("Sol. #", "Total Cost (M$)", "Env. Impact (Score)")


class EngineError(Exception):
    """Raised for invalid engine inputs or parameters."""


class EvaluationError(EngineError):
    """Raised when objective evaluation fails mid-run.

    Carries the generation (0 for the initial population) and, when it can
    be attributed, the index of the offending individual.
    """

    def __init__(self, message: str, generation: int, index: int | None = None):
        super().__init__(message)
        self.generation = generation
        self.index = index


class Dominance(enum.Enum):
    """Outcome of a pairwise Pareto-dominance comparison (minimization)."""

    A_DOMINATES = "a_dominates"
    B_DOMINATES = "b_dominates"
    INCOMPARABLE = "incomparable"


@dataclass(eq=False)
class Individual:
    """One candidate solution: decision vector, objectives, and sort state.

    ``rank`` is the non-domination level (0 is the best front) and
    ``crowding`` the crowding distance within that front, ``BOUNDARY`` for
    front extremes. Both are maintained by the sorting operations.
    """

    x: np.ndarray
    f: ObjectiveVector
    rank: int = 0
    crowding: float = 0.0

    def __post_init__(self) -> None:
        self.x = np.asarray(self.x, dtype=np.float64)
        if self.rank < 0:
            raise EngineError(f"rank must be non-negative, got {self.rank}")
        if not (self.crowding >= 0.0):
            raise EngineError(f"crowding must be non-negative, got {self.crowding}")


@dataclass(frozen=True)
class NsgaParams:
    """Configuration of one engine run.

    ``mutation_probability`` of ``None`` selects the per-variable default
    ``1 / n_vars`` at run time.
    """

    population_size: int = 500
    generations: int = 250
    crossover_probability: float = 0.9
    sbx_eta: float = 15.0
    mutation_probability: float | None = None
    pm_eta: float = 20.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.population_size < 4 or self.population_size % 2 != 0:
            raise EngineError(
                "population_size must be an even integer >= 4, got "
                f"{self.population_size}"
            )
        if self.generations < 0:
            raise EngineError(f"generations must be >= 0, got {self.generations}")
        if not 0.0 <= self.crossover_probability <= 1.0:
            raise EngineError(
                "crossover_probability must be in [0, 1], got "
                f"{self.crossover_probability}"
            )
        if self.mutation_probability is not None and not (
            0.0 <= self.mutation_probability <= 1.0
        ):
            raise EngineError(
                "mutation_probability must be in [0, 1] or None, got "
                f"{self.mutation_probability}"
            )
        if self.sbx_eta <= 0 or self.pm_eta <= 0:
            raise EngineError("distribution indices must be positive")

    def resolved_mutation_probability(self, n_vars: int) -> float:
        if self.mutation_probability is not None:
            return self.mutation_probability
        return 1.0 / n_vars

    def to_document(self) -> dict:
        return asdict(self)

    @classmethod
    def from_document(cls, doc: dict) -> "NsgaParams":
        return cls(**doc)


@dataclass
class RunResult:
    """Outcome of a completed engine run.

    ``front`` is the deduplicated rank-0 set of the final population, sorted
    by ascending total cost. ``per_generation_stats`` has exactly one entry
    per generation: the best-so-far archive hypervolume (w.r.t. the fixed
    reference taken from the initial population's componentwise worst point)
    and the current population's rank-0 size.
    """

    final_population: list[Individual]
    front: "ParetoFront"
    per_generation_stats: list[dict]
    params: NsgaParams
    instance_ref: str
    hv_reference: tuple[float, float]
    instance: ProblemInstance | None = field(default=None, repr=False, compare=False)

    def to_document(self) -> dict:
        """Serialize to a versioned, JSON-compatible document.

        Floats pass through untouched so a reloaded document reproduces the
        stored front bit-exactly. The final population is not serialized;
        the front rows carry every decision variable plus both objectives.
        """
        return {
            "format": RUN_DOCUMENT_FORMAT,
            "instance_ref": self.instance_ref,
            "params": self.params.to_document(),
            "hv_reference": [float(v) for v in self.hv_reference],
            "per_generation_stats": [dict(s) for s in self.per_generation_stats],
            "front": [
                {
                    "variables": [float(v) for v in ind.x],
                    "objectives": [ind.f.total_cost, ind.f.environmental_impact],
                }
                for ind in self.front.solutions
            ],
        }

    @classmethod
    def from_document(cls, doc: dict) -> "RunResult":
        from .analytics import ParetoFront

        if doc.get("format") != RUN_DOCUMENT_FORMAT:
            raise EngineError(f"unsupported run document format: {doc.get('format')!r}")
        solutions = [
            Individual(
                x=np.asarray(row["variables"], dtype=np.float64),
                f=ObjectiveVector(*row["objectives"]),
                rank=0,
                crowding=BOUNDARY,
            )
            for row in doc["front"]
        ]
        return cls(
            final_population=[],
            front=ParetoFront(solutions, instance_ref=doc["instance_ref"]),
            per_generation_stats=[dict(s) for s in doc["per_generation_stats"]],
            params=NsgaParams.from_document(doc["params"]),
            instance_ref=doc["instance_ref"],
            hv_reference=tuple(doc["hv_reference"]),
        )


# ---------------------------------------------------------------------------
# Pairwise dominance


def _as_objective_array(v) -> np.ndarray:
    if isinstance(v, ObjectiveVector):
        return v.as_array()
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim != 1:
        raise EngineError(f"objective vector must be 1-D, got shape {arr.shape}")
    return arr


def dominates(a, b) -> Dominance:
    """Pareto-compare two objective vectors (both objectives minimized).

    ``a`` dominates ``b`` when it is no worse in every objective and
    strictly better in at least one; equal vectors are incomparable.
    """
    fa = _as_objective_array(a)
    fb = _as_objective_array(b)
    if fa.shape != fb.shape:
        raise EngineError(
            f"objective vectors differ in dimension: {fa.shape[0]} vs {fb.shape[0]}"
        )
    a_le = bool(np.all(fa <= fb))
    b_le = bool(np.all(fb <= fa))
    if a_le and not b_le:
        return Dominance.A_DOMINATES
    if b_le and not a_le:
        return Dominance.B_DOMINATES
    return Dominance.INCOMPARABLE


# ---------------------------------------------------------------------------
# Sorting operations


def _objective_matrix(pop: Sequence) -> np.ndarray:
    """Stack a population (Individuals or raw vectors) into an (n, m) array."""
    if len(pop) == 0:
        return np.empty((0, 2), dtype=np.float64)
    if isinstance(pop, np.ndarray) and pop.ndim == 2:
        return np.ascontiguousarray(pop, dtype=np.float64)
    rows = [
        item.f.as_array() if isinstance(item, Individual) else _as_objective_array(item)
        for item in pop
    ]
    widths = {row.shape[0] for row in rows}
    if len(widths) != 1:
        raise EngineError(f"mixed objective dimensions in population: {sorted(widths)}")
    return np.ascontiguousarray(np.stack(rows))


def nondominated_sort(pop: Sequence) -> list[list[int]]:
    """Partition a population into non-domination fronts.

    Accepts a list of ``Individual`` (whose ``rank`` fields are updated in
    place) or an (n, m) objective array. Returns fronts as lists of input
    indices, best front first; indices within a front ascend.
    """
    F = _objective_matrix(pop)
    if F.shape[0] == 0:
        return []
    ranks = kernels.nondominated_ranks(F)
    n_fronts = int(ranks.max()) + 1
    fronts: list[list[int]] = [
        [int(i) for i in np.flatnonzero(ranks == r)] for r in range(n_fronts)
    ]
    if not isinstance(pop, np.ndarray) and pop and isinstance(pop[0], Individual):
        for i, ind in enumerate(pop):
            ind.rank = int(ranks[i])
    return fronts


def crowding_distance(front: Sequence) -> np.ndarray:
    """Crowding distances for one mutually non-dominated front.

    Values are returned in input order. Per-objective extremes receive the
    ``BOUNDARY`` sentinel; interior members whose objective vectors exactly
    duplicate another member's receive 0. ``Individual`` inputs also get
    their ``crowding`` fields updated in place.
    """
    F = _objective_matrix(front)
    if F.shape[0] == 0:
        return np.empty(0, dtype=np.float64)
    crowd = kernels.crowding_front(F)
    if not isinstance(front, np.ndarray) and front and isinstance(front[0], Individual):
        for ind, value in zip(front, crowd):
            ind.crowding = float(value)
    return crowd


# ---------------------------------------------------------------------------
# Variation operators


def _resolve_bounds(
    n_vars: int, lower, upper
) -> tuple[np.ndarray, np.ndarray]:
    lo = (
        np.full(n_vars, -np.inf)
        if lower is None
        else np.asarray(lower, dtype=np.float64)
    )
    hi = (
        np.full(n_vars, np.inf)
        if upper is None
        else np.asarray(upper, dtype=np.float64)
    )
    if lo.shape != (n_vars,) or hi.shape != (n_vars,):
        raise EngineError("bounds must match the parent vector length")
    return lo, hi


def sbx_crossover(
    p1,
    p2,
    params: NsgaParams,
    rng: np.random.Generator,
    lower=None,
    upper=None,
) -> tuple[np.ndarray, np.ndarray]:
    """Simulated binary crossover of two parent vectors.

    Draws, in order: one pair coin, one per-variable coin block, one
    per-variable spread block, one per-variable swap block. With crossover
    probability 0 the parents are returned unchanged; identical parents are
    an exact fixed point.
    """
    P1 = np.atleast_2d(np.asarray(p1, dtype=np.float64))
    P2 = np.atleast_2d(np.asarray(p2, dtype=np.float64))
    if P1.shape != P2.shape or P1.shape[0] != 1:
        raise EngineError("parents must be two vectors of equal length")
    d = P1.shape[1]
    lo, hi = _resolve_bounds(d, lower, upper)
    pair_coin = rng.random(1)
    var_coin = rng.random((1, d))
    u = rng.random((1, d))
    swap_coin = rng.random((1, d))
    c1, c2 = kernels.sbx_pairs(
        P1, P2, pair_coin, var_coin, u, swap_coin, lo, hi,
        params.crossover_probability, params.sbx_eta,
    )
    return c1[0], c2[0]


def polynomial_mutation(
    x,
    params: NsgaParams,
    rng: np.random.Generator,
    lower=None,
    upper=None,
) -> np.ndarray:
    """Bounded polynomial mutation of one decision vector.

    Draws, in order: one per-variable coin block, one per-variable spread
    block. Mutation probability 0 is an exact identity; a variable sitting
    on a bound can only move into the feasible interval.
    """
    X = np.atleast_2d(np.asarray(x, dtype=np.float64))
    if X.shape[0] != 1:
        raise EngineError("x must be a single decision vector")
    d = X.shape[1]
    lo, hi = _resolve_bounds(d, lower, upper)
    if not np.isfinite(lo).all() or not np.isfinite(hi).all():
        raise EngineError("polynomial mutation requires finite bounds")
    coin = rng.random((1, d))
    u = rng.random((1, d))
    pm = params.resolved_mutation_probability(d)
    out = kernels.polynomial_mutation(X, coin, u, lo, hi, pm, params.pm_eta)
    return out[0]


# ---------------------------------------------------------------------------
# Hypervolume


def hypervolume(front, ref) -> float:
    """Exact dominated area of a two-objective front w.r.t. ``ref``.

    Points that do not weakly dominate the reference are skipped; dominated
    or duplicate points contribute nothing extra.
    """
    F = _objective_matrix(front if not isinstance(front, np.ndarray) else front)
    r = _as_objective_array(ref)
    if F.shape[0] and F.shape[1] != 2:
        raise EngineError(f"hypervolume supports 2 objectives, got {F.shape[1]}")
    if r.shape[0] != 2:
        raise EngineError(f"reference must have 2 objectives, got {r.shape[0]}")
    if F.shape[0] == 0:
        return 0.0
    return float(kernels.hypervolume_2d(F, r))


# ---------------------------------------------------------------------------
# Engine internals


def _evaluate_block(p: ProblemInstance, X: np.ndarray, generation: int) -> np.ndarray:
    """Evaluate a population block with failure attribution."""
    if p.population_evaluator is not None:
        try:
            F = np.asarray(p.population_evaluator(np.ascontiguousarray(X)))
        except Exception as exc:
            raise EvaluationError(
                f"objective evaluation failed at generation {generation}: {exc}",
                generation=generation,
            ) from exc
    else:
        F = np.empty((X.shape[0], 2), dtype=np.float64)
        for i in range(X.shape[0]):
            try:
                F[i] = evaluate(X[i], p).as_array()
            except Exception as exc:
                raise EvaluationError(
                    "objective evaluation failed at generation "
                    f"{generation}, individual {i}: {exc}",
                    generation=generation,
                    index=i,
                ) from exc
    bad = ~np.isfinite(F).all(axis=1)
    if bad.any():
        i = int(np.argmax(bad))
        raise EvaluationError(
            f"non-finite objectives at generation {generation}, individual {i}",
            generation=generation,
            index=i,
        )
    return F


def _crowding_by_front(F: np.ndarray, ranks: np.ndarray) -> np.ndarray:
    """Crowding distances computed per front across a whole population."""
    crowd = np.empty(F.shape[0], dtype=np.float64)
    for r in range(int(ranks.max()) + 1 if F.shape[0] else 0):
        idx = np.flatnonzero(ranks == r)
        crowd[idx] = kernels.crowding_front(np.ascontiguousarray(F[idx]))
    return crowd


def _select_survivors(
    F: np.ndarray, ranks: np.ndarray, n: int
) -> tuple[np.ndarray, np.ndarray]:
    """Front-by-front (mu + lambda) survivor selection.

    Returns the selected indices into the combined pool (whole fronts in
    rank order, the last front truncated by descending crowding with ties
    broken by ascending pool index) and the selected members' crowding
    distances, computed on each full front before truncation.
    """
    chosen: list[np.ndarray] = []
    chosen_crowd: list[np.ndarray] = []
    taken = 0
    r = 0
    while taken < n:
        idx = np.flatnonzero(ranks == r)
        crowd = kernels.crowding_front(np.ascontiguousarray(F[idx]))
        room = n - taken
        if idx.shape[0] <= room:
            chosen.append(idx)
            chosen_crowd.append(crowd)
            taken += idx.shape[0]
        else:
            order = np.lexsort((np.arange(idx.shape[0]), -crowd))[:room]
            chosen.append(idx[order])
            chosen_crowd.append(crowd[order])
            taken = n
        r += 1
    return np.concatenate(chosen), np.concatenate(chosen_crowd)


def _merge_staircase(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Merge two point sets into a minimal non-dominated staircase.

    Rows are sorted by (f0 asc, f1 asc); a row survives only while strictly
    lowering the best-seen f1, which removes every weakly dominated or
    duplicate point.
    """
    P = np.vstack((A, B)) if A.size else np.asarray(B, dtype=np.float64)
    if P.shape[0] == 0:
        return P.reshape(0, 2)
    order = np.lexsort((P[:, 1], P[:, 0]))
    P = P[order]
    best = np.minimum.accumulate(P[:, 1])
    keep = np.concatenate(([True], P[1:, 1] < best[:-1]))
    return np.ascontiguousarray(P[keep])


def _build_front(
    X: np.ndarray,
    F: np.ndarray,
    ranks: np.ndarray,
    crowd: np.ndarray,
    instance_ref: str,
) -> "ParetoFront":
    """Deduplicated rank-0 front, keeping the lowest-index representative."""
    from .analytics import ParetoFront

    solutions: list[Individual] = []
    seen: set[tuple[float, float]] = set()
    for i in np.flatnonzero(ranks == 0):
        key = (float(F[i, 0]), float(F[i, 1]))
        if key in seen:
            continue
        seen.add(key)
        solutions.append(
            Individual(
                x=X[i].copy(),
                f=ObjectiveVector(key[0], key[1]),
                rank=0,
                crowding=float(crowd[i]),
            )
        )
    return ParetoFront(solutions, instance_ref=instance_ref)


def run_nsga2(p: ProblemInstance, params: NsgaParams) -> RunResult:
    """Run the full generational loop on a problem instance.

    With ``generations == 0`` the result is the non-dominated subset of the
    random initial population and the stats list is empty. Identical seeds
    produce bit-identical results.
    """
    schema = p.schema
    lo = schema.lower
    hi = schema.upper
    d = len(schema)
    n = params.population_size
    pm = params.resolved_mutation_probability(d)
    rng = np.random.default_rng(params.seed)
    instance_ref = f"{p.calibration_tag}:{p.seed}"

    X = lo + (hi - lo) * rng.random((n, d))
    F = _evaluate_block(p, X, generation=0)
    ranks = kernels.nondominated_ranks(F)
    crowd = _crowding_by_front(F, ranks)
    hv_reference = (float(F[:, 0].max()), float(F[:, 1].max()))
    ref_arr = np.asarray(hv_reference)
    archive = _merge_staircase(np.empty((0, 2)), F[ranks == 0])

    stats: list[dict] = []
    for g in range(1, params.generations + 1):
        cand = np.vstack(
            (rng.permutation(n).reshape(-1, 2), rng.permutation(n).reshape(-1, 2))
        )
        tie = rng.random(n)
        winners = kernels.tournament(ranks, crowd, cand, tie)

        P1 = np.ascontiguousarray(X[winners[0::2]])
        P2 = np.ascontiguousarray(X[winners[1::2]])
        pair_coin = rng.random(n // 2)
        var_coin = rng.random((n // 2, d))
        u_cx = rng.random((n // 2, d))
        swap_coin = rng.random((n // 2, d))
        C1, C2 = kernels.sbx_pairs(
            P1, P2, pair_coin, var_coin, u_cx, swap_coin, lo, hi,
            params.crossover_probability, params.sbx_eta,
        )
        offspring = np.empty_like(X)
        offspring[0::2] = C1
        offspring[1::2] = C2

        m_coin = rng.random((n, d))
        u_mut = rng.random((n, d))
        offspring = kernels.polynomial_mutation(
            offspring, m_coin, u_mut, lo, hi, pm, params.pm_eta
        )

        F_off = _evaluate_block(p, offspring, generation=g)
        pool_X = np.vstack((X, offspring))
        pool_F = np.vstack((F, F_off))
        pool_ranks = kernels.nondominated_ranks(pool_F)

        sel, sel_crowd = _select_survivors(pool_F, pool_ranks, n)
        X = np.ascontiguousarray(pool_X[sel])
        F = np.ascontiguousarray(pool_F[sel])
        ranks = pool_ranks[sel]
        crowd = sel_crowd

        archive = _merge_staircase(archive, pool_F[pool_ranks == 0])
        stats.append(
            {
                "generation": g,
                "hypervolume": float(kernels.hypervolume_2d(archive, ref_arr)),
                "front_size": int((ranks == 0).sum()),
            }
        )

    final_population = [
        Individual(
            x=X[i].copy(),
            f=ObjectiveVector(float(F[i, 0]), float(F[i, 1])),
            rank=int(ranks[i]),
            crowding=float(crowd[i]),
        )
        for i in range(n)
    ]
    front = _build_front(X, F, ranks, crowd, instance_ref)
    return RunResult(
        final_population=final_population,
        front=front,
        per_generation_stats=stats,
        params=params,
        instance_ref=instance_ref,
        hv_reference=hv_reference,
        instance=p,
    )


# ---------------------------------------------------------------------------
# Export


def export_front_csv(result: RunResult, dest, names: Iterable[str] | None = None) -> None:
    """Write the front as CSV: solution number, objectives, then variables.

    ``dest`` is a path or text file object. Column names come from the
    attached instance's schema unless given explicitly. Floats are written
    in shortest round-trip form so a re-import is bit-exact.
    """
    if names is None:
        if result.instance is None:
            raise EngineError("no schema attached; pass variable names explicitly")
        names = result.instance.schema.names
    names = list(names)
    width = len(names)
    for ind in result.front.solutions:
        if ind.x.shape[0] != width:
            raise EngineError(
                f"front row has {ind.x.shape[0]} variables, header names {width}"
            )

    def _write(buf) -> None:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([*CSV_FIXED_HEADER, *names])
        for number, ind in enumerate(result.front.solutions, start=1):
            writer.writerow(
                [
                    number,
                    repr(ind.f.total_cost),
                    repr(ind.f.environmental_impact),
                    *(repr(float(v)) for v in ind.x),
                ]
            )

    if isinstance(dest, (str, bytes)) or hasattr(dest, "__fspath__"):
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            _write(fh)
    else:
        _write(dest)


def front_csv_text(result: RunResult, names: Iterable[str] | None = None) -> str:
    """The CSV export as a string (same bytes as the file form)."""
    buf = io.StringIO()
    export_front_csv(result, buf, names=names)
    return buf.getvalue()


def import_front_csv(source, instance_ref: str = "import"):
    """Read a front CSV back into a ``ParetoFront`` plus its variable names.

    ``source`` is a path or text file object in the :func:`export_front_csv`
    layout. Returns ``(front, names)``. Floats parse to the exact values
    written, so export → import → export is byte-stable.
    """
    from .analytics import ParetoFront

    def _read(buf) -> tuple["ParetoFront", tuple[str, ...]]:
        reader = csv.reader(buf)
        try:
            header = next(reader)
        except StopIteration:
            raise EngineError("front CSV is empty") from None
        fixed = tuple(header[: len(CSV_FIXED_HEADER)])
        if fixed != CSV_FIXED_HEADER:
            raise EngineError(
                f"unexpected front CSV header {fixed!r}; expected {CSV_FIXED_HEADER!r}"
            )
        names = tuple(header[len(CSV_FIXED_HEADER) :])
        width = len(names)
        solutions = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(CSV_FIXED_HEADER) + width:
                raise EngineError(
                    f"front CSV line {lineno}: expected {len(CSV_FIXED_HEADER) + width}"
                    f" fields, found {len(row)}"
                )
            try:
                f = ObjectiveVector(float(row[1]), float(row[2]))
                x = np.array([float(v) for v in row[3:]], dtype=np.float64)
            except ValueError as exc:
                raise EngineError(f"front CSV line {lineno}: {exc}") from None
            solutions.append(Individual(x=x, f=f, rank=0, crowding=BOUNDARY))
        if not solutions:
            raise EngineError("front CSV has no data rows")
        return ParetoFront(solutions, instance_ref=instance_ref), names

    if isinstance(source, (str, bytes)) or hasattr(source, "__fspath__"):
        with open(source, "r", encoding="utf-8", newline="") as fh:
            return _read(fh)
    return _read(source)
