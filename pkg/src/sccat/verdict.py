"""Three-valued verdicts and search budgets.

Every decision procedure in this package returns a :class:`Verdict`.  A
definite answer (yes/no) always carries a payload that an independent
verifier can re-check; an unknown answer names the reason the search gave
up.  Aggregation order is fixed: a definite "no" dominates "unknown",
which dominates "yes", so a composite check never masks a counterexample.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

YES = "yes"
NO = "no"
UNKNOWN = "unknown"

# reasons an Unknown verdict may carry
BUDGET = "budget-exhausted"
UNDECIDED_GROUP = "undecided-group"
DIMENSION_BOUND = "dimension-bound"

_REASONS = (BUDGET, UNDECIDED_GROUP, DIMENSION_BOUND)


@dataclass(frozen=True)
class Verdict:
    kind: str
    witness: Any = None
    reason: str | None = None
    qualifier: dict = field(default_factory=dict)

    @staticmethod
    def yes(witness: Any = None, **qualifier) -> "Verdict":
        return Verdict(YES, witness=witness, qualifier=qualifier)

    @staticmethod
    def no(witness: Any = None, **qualifier) -> "Verdict":
        return Verdict(NO, witness=witness, qualifier=qualifier)

    @staticmethod
    def unknown(reason: str, witness: Any = None, **qualifier) -> "Verdict":
        if reason not in _REASONS:
            raise ValueError(f"unknown reason {reason!r}")
        return Verdict(UNKNOWN, witness=witness, reason=reason, qualifier=qualifier)

    @property
    def is_yes(self) -> bool:
        return self.kind == YES

    @property
    def is_no(self) -> bool:
        return self.kind == NO

    @property
    def is_definite(self) -> bool:
        return self.kind != UNKNOWN

    def __bool__(self) -> bool:  # guard against accidental truthiness tests
        raise TypeError("Verdict is three-valued; test .is_yes / .is_no explicitly")


def aggregate(verdicts: Iterable[Verdict], witness_on_yes: Any = None, **qualifier) -> Verdict:
    """Combine sub-verdicts; no > unknown > yes."""
    pending_unknown = None
    for v in verdicts:
        if v.is_no:
            return Verdict(NO, witness=v.witness, qualifier={**v.qualifier, **qualifier})
        if v.kind == UNKNOWN and pending_unknown is None:
            pending_unknown = v
    if pending_unknown is not None:
        return Verdict(UNKNOWN, witness=pending_unknown.witness,
                       reason=pending_unknown.reason,
                       qualifier={**pending_unknown.qualifier, **qualifier})
    return Verdict(YES, witness=witness_on_yes, qualifier=qualifier)


@dataclass(frozen=True)
class Budget:
    """Caps on the exhaustive searches.

    max_dim bounds the dimension of generating maps tried, max_words the
    number of adjoined-generator letters in a composite word, max_steps
    the number of search nodes expanded.
    """
    max_dim: int = 4
    max_words: int = 64
    max_steps: int = 10**6

    def __post_init__(self):
        if self.max_dim <= 0 or self.max_words <= 0 or self.max_steps <= 0:
            raise ValueError("budget fields must be positive")


class BudgetExceeded(Exception):
    """Raised when a construction cannot finish within its budget.

    Carries whatever partial result was built, for diagnostics.
    """

    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial


class InputError(ValueError):
    """Malformed or mismatched inputs to an operation."""


class StructureError(ValueError):
    """An object failed a structural invariant it was assumed to satisfy."""
