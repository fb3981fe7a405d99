"""Decision-variable schema for the sustainable-infrastructure design space.

A schema is an ordered catalog of 50 variable specs (name, unit, box bounds,
preferred direction). Decision vectors are plain float arrays validated
against the owning schema.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

TIER_NAMES = ("primary", "secondary", "additional")


class SchemaError(ValueError):
    """Raised when a schema is internally inconsistent."""


class BoundsError(ValueError):
    """Raised when a decision vector violates its schema's box bounds.

    Carries the 1-based index of the first offending variable.
    """

    def __init__(self, index: int, name: str, value: float, lower: float, upper: float):
        self.index = index
        self.name = name
        self.value = value
        super().__init__(
            f"variable {index} ({name}) = {value!r} outside bounds [{lower}, {upper}]"
        )


@dataclass(frozen=True)
class VariableSpec:
    """One decision variable: identity, unit, box bounds, preferred direction."""

    index: int
    name: str
    unit: str
    lower: float
    upper: float
    better_direction: str  # "higher" or "lower"
    tier_hint: str | None = None  # optional "primary" / "secondary" / "additional"

    def __post_init__(self):
        if not self.lower < self.upper:
            raise SchemaError(
                f"variable {self.index} ({self.name}): lower {self.lower} must be < upper {self.upper}"
            )
        if self.better_direction not in ("higher", "lower"):
            raise SchemaError(
                f"variable {self.index}: better_direction must be 'higher' or 'lower'"
            )
        if self.tier_hint is not None and self.tier_hint not in TIER_NAMES:
            raise SchemaError(f"variable {self.index}: unknown tier_hint {self.tier_hint!r}")


@dataclass(frozen=True)
class VariableSchema:
    """Ordered list of variable specs defining the design space."""

    variables: tuple[VariableSpec, ...]
    lower: np.ndarray = field(init=False, repr=False, compare=False)
    upper: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        indices = [v.index for v in self.variables]
        if len(set(indices)) != len(indices):
            raise SchemaError("variable indices must be unique")
        if indices != sorted(indices):
            raise SchemaError("variables must be ordered by index")
        object.__setattr__(
            self, "lower", np.array([v.lower for v in self.variables], dtype=np.float64)
        )
        object.__setattr__(
            self, "upper", np.array([v.upper for v in self.variables], dtype=np.float64)
        )

    def __len__(self) -> int:
        return len(self.variables)

    def __iter__(self):
        return iter(self.variables)

    @property
    def names(self) -> list[str]:
        return [v.name for v in self.variables]

    def by_name(self, name: str) -> VariableSpec:
        for v in self.variables:
            if v.name == name:
                return v
        raise KeyError(name)

    def by_index(self, index: int) -> VariableSpec:
        """Look up a spec by its 1-based catalog index."""
        for v in self.variables:
            if v.index == index:
                return v
        raise KeyError(index)

    def validate_vector(self, x: np.ndarray) -> np.ndarray:
        """Check a decision vector against the schema's box bounds.

        Returns the vector as a float64 array. Raises BoundsError naming the
        first offending variable (1-based index), or ValueError on shape or
        non-finite values.
        """
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (len(self.variables),):
            raise ValueError(
                f"decision vector has shape {x.shape}, schema expects ({len(self.variables)},)"
            )
        if not np.all(np.isfinite(x)):
            bad = int(np.flatnonzero(~np.isfinite(x))[0])
            spec = self.variables[bad]
            raise BoundsError(spec.index, spec.name, float(x[bad]), spec.lower, spec.upper)
        out = (x < self.lower) | (x > self.upper)
        if np.any(out):
            bad = int(np.flatnonzero(out)[0])
            spec = self.variables[bad]
            raise BoundsError(spec.index, spec.name, float(x[bad]), spec.lower, spec.upper)
        return x

    def contains(self, x: np.ndarray) -> bool:
        """True when the vector is in-bounds (no exception path)."""
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (len(self.variables),):
            return False
        return bool(np.all(np.isfinite(x)) and np.all(x >= self.lower) and np.all(x <= self.upper))

    def to_rows(self) -> list[dict]:
        """Serialize the specs to plain dicts (JSON-friendly)."""
        return [
            {
                "index": v.index,
                "name": v.name,
                "unit": v.unit,
                "lower": v.lower,
                "upper": v.upper,
                "better_direction": v.better_direction,
                "tier_hint": v.tier_hint,
            }
            for v in self.variables
        ]

    @classmethod
    def from_rows(cls, rows: list[dict]) -> "VariableSchema":
        return cls(tuple(VariableSpec(**row) for row in rows))
