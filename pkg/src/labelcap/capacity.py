from __future__ import annotations

import math
from dataclasses import dataclass, field

from .polynomial import IntPolynomial

FORMULA = "formula"
AUTOMATON = "automaton"
ORACLE_ESTIMATE = "oracle-estimate"


@dataclass(frozen=True)
class CapacityValue:
    """A capacity ``log2(lam)`` together with how it was obtained."""

    lam: float
    log2_lambda: float
    method: str
    polynomial: IntPolynomial | None = None
    tolerance: float = 1e-12
    notes: tuple[str, ...] = field(default=())

    @classmethod
    def from_lambda(
        cls,
        lam: float,
        method: str,
        polynomial: IntPolynomial | None = None,
        tolerance: float = 1e-12,
        notes: tuple[str, ...] = (),
    ) -> CapacityValue:
        log2 = math.log2(lam) if lam > 0 else float("-inf")
        return cls(lam, log2, method, polynomial, tolerance, tuple(notes))

    def close_to(self, other: CapacityValue | float, tol: float = 1e-9) -> bool:
        value = other.log2_lambda if isinstance(other, CapacityValue) else other
        return abs(self.log2_lambda - value) < tol
