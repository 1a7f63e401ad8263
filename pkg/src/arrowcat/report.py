"""Validation reports: flat lists of violations with bounded size."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

# Violation kinds emitted by the category validators.
FUNCTIONALITY = "functionality"
ASSOCIATIVITY_EQUAL = "associativity-equal"
ASSOCIATIVITY_EXISTENCE = "associativity-existence"
IDENTITY_MISSING = "identity-missing"
IDENTITY_NONNEUTRAL = "identity-nonneutral"
IDENTITY_NONUNIQUE = "identity-nonunique"
# Additional kinds used by the standard-form, functor, and transformation validators.
TYPING = "typing"
TOTALITY = "totality"
NAME_NOT_FOUND = "name-not-found"
COMPOSITION_LAW = "composition-law"
IDENTITY_LAW = "identity-law"
NATURALITY = "naturality"

MAX_VIOLATIONS = 100


@dataclass(frozen=True)
class Violation:
    kind: str
    witnesses: tuple[str, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validator: ``ok`` iff ``violations`` is empty."""

    ok: bool
    violations: tuple[Violation, ...]

    @classmethod
    def from_violations(cls, violations: Iterable[Violation]) -> "ValidationReport":
        bounded = tuple(violations)[:MAX_VIOLATIONS]
        return cls(ok=not bounded, violations=bounded)

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def lines(self) -> list[str]:
        if self.ok:
            return ["ok"]
        return [
            f"violation[{v.kind}] witnesses=({', '.join(v.witnesses)}): {v.message}"
            for v in self.violations
        ]


def violation(kind: str, witnesses: Iterable[str], message: str) -> Violation:
    return Violation(kind=kind, witnesses=tuple(witnesses)[:3], message=message)
