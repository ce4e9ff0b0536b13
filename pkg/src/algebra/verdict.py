"""Three-valued decision results"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping, Optional


class Outcome(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """
    Result of a predicate.

    ``witness`` names the ideals, submodules or ring elements of a failing
    instance, ``bound`` is the search limit behind an UNKNOWN.
    """

    outcome: Outcome
    witness: Optional[Mapping[str, Any]] = None
    bound: Optional[int] = None
    detail: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.outcome is Outcome.FAILS and not self.witness:
            raise ValueError("A failing verdict needs a witness")

    @classmethod
    def holds(cls, **detail) -> "Verdict":
        return cls(Outcome.HOLDS, detail=detail)

    @classmethod
    def fails(cls, **witness) -> "Verdict":
        return cls(Outcome.FAILS, witness=witness)

    @classmethod
    def unknown(cls, bound: int) -> "Verdict":
        return cls(Outcome.UNKNOWN, bound=bound)

    @property
    def held(self) -> bool:
        return self.outcome is Outcome.HOLDS

    @property
    def failed(self) -> bool:
        return self.outcome is Outcome.FAILS

    def __bool__(self) -> bool:
        raise TypeError("Verdicts are three-valued; compare .outcome instead")

    def __str__(self) -> str:
        if self.outcome is Outcome.UNKNOWN:
            return f"Unknown (no witness up to {self.bound})"
        if self.outcome is Outcome.HOLDS:
            return "Holds"
        parts = []
        for key, value in self.witness.items():
            if isinstance(value, (tuple, list)):
                value = ", ".join(str(v) for v in value)
            parts.append(f"{key}={value}")
        return "Fails (" + "; ".join(parts) + ")"
