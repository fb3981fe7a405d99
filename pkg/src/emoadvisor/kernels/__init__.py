"""Numeric kernel backends for evaluation and evolutionary operators.

Two interchangeable implementations live here: a numba-compiled one and a
pure-numpy one. The active backend is chosen at import time from the
EMOADVISOR_KERNELS environment variable:

  auto   prefer numba, silently fall back to numpy if it cannot be imported
  numba  require numba, raise if unavailable
  numpy  force the pure-numpy path

Both backends are kept bit-identical; randomness is always drawn by the
caller so kernels stay deterministic pure functions.
"""

from __future__ import annotations

import os
from types import ModuleType

ROLE_DRIVER = 0
ROLE_HINGE = 1
ROLE_COST_FLAT = 2
ROLE_IMPACT_FLAT = 3

_VALID = ("auto", "numba", "numpy")


def load_backend(name: str) -> ModuleType:
    """Import and return a kernel implementation module by name."""
    if name == "numpy":
        from emoadvisor.kernels import numpy_impl

        return numpy_impl
    if name == "numba":
        from emoadvisor.kernels import numba_impl

        return numba_impl
    raise ValueError(f"unknown kernel backend {name!r}; expected 'numba' or 'numpy'")


def _resolve() -> tuple[str, ModuleType]:
    requested = os.environ.get("EMOADVISOR_KERNELS", "auto").strip().lower()
    if requested not in _VALID:
        raise ValueError(
            f"EMOADVISOR_KERNELS={requested!r} is invalid; expected one of {_VALID}"
        )
    if requested == "numpy":
        return "numpy", load_backend("numpy")
    if requested == "numba":
        return "numba", load_backend("numba")
    try:
        return "numba", load_backend("numba")
    except ImportError:
        return "numpy", load_backend("numpy")


ACTIVE_BACKEND, _impl = _resolve()

eval_population = _impl.eval_population
nondominated_ranks = _impl.nondominated_ranks
crowding_front = _impl.crowding_front
sbx_pairs = _impl.sbx_pairs
polynomial_mutation = _impl.polynomial_mutation
tournament = _impl.tournament
hypervolume_2d = _impl.hypervolume_2d


def backend_name() -> str:
    """Name of the kernel backend selected at import time."""
    return ACTIVE_BACKEND
