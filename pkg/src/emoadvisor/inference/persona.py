"""Reader profiles that parameterize prompt framing and language register."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["EXPERTISE_LEVELS", "GOALS", "REGISTERS", "Persona", "PersonaError"]

EXPERTISE_LEVELS = ("domain_expert", "mid_technical", "executive")
GOALS = ("environmental", "investor", "community", "regulatory", "socioeconomic", "none")
REGISTERS = ("technical", "plain")


class PersonaError(ValueError):
    """Raised for invalid persona field combinations."""


@dataclass(frozen=True)
class Persona:
    """Stakeholder profile: expertise level, goal, and language register.

    Executives always get the plain register; constructing an executive
    persona with a technical register is rejected.
    """

    expertise: str = "executive"
    goal: str = "none"
    language_register: str = "plain"

    def __post_init__(self) -> None:
        if self.expertise not in EXPERTISE_LEVELS:
            raise PersonaError(
                f"expertise must be one of {EXPERTISE_LEVELS}, got {self.expertise!r}"
            )
        if self.goal not in GOALS:
            raise PersonaError(f"goal must be one of {GOALS}, got {self.goal!r}")
        if self.language_register not in REGISTERS:
            raise PersonaError(
                f"language_register must be one of {REGISTERS}, "
                f"got {self.language_register!r}"
            )
        if self.expertise == "executive" and self.language_register != "plain":
            raise PersonaError("executive personas require the plain register")

    def to_document(self) -> dict:
        return {
            "expertise": self.expertise,
            "goal": self.goal,
            "language_register": self.language_register,
        }

    @classmethod
    def from_document(cls, doc: dict) -> "Persona":
        """Build from a document; omitted fields take the defaults.

        Unknown keys are rejected so a misspelled field never silently
        falls back to a default.
        """
        if not isinstance(doc, dict):
            raise PersonaError(f"persona document must be an object, got {type(doc).__name__}")
        unknown = sorted(set(doc) - {"expertise", "goal", "language_register"})
        if unknown:
            raise PersonaError(f"unknown persona field(s): {', '.join(unknown)}")
        return cls(
            expertise=doc.get("expertise", "executive"),
            goal=doc.get("goal", "none"),
            language_register=doc.get("language_register", "plain"),
        )
