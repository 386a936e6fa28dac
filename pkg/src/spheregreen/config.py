"""Truncation and tolerance settings for series evaluations."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ExpansionConfig:
    """Controls every truncated series in the package.

    Attributes
    ----------
    max_terms:
        Hard cap on the number of terms of any series (hypergeometric sums,
        Gegenbauer and addition-theorem sums).
    term_rtol:
        A series stops once a term is below ``term_rtol`` times the running
        sum. Expansions with alternating terms require three such terms in a
        row.
    guard:
        Width of the singularity guard band (``1 - k**2`` for elliptic
        moduli, ``1 - cos`` margins for coincident points).
    """

    max_terms: int = 4000
    term_rtol: float = 1e-17
    guard: float = 1e-12

    def __post_init__(self) -> None:
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")
        if not 0.0 < self.term_rtol < 1e-2:
            raise ValueError("term_rtol must lie in (0, 1e-2)")
        if not 0.0 < self.guard < 1e-2:
            raise ValueError("guard must lie in (0, 1e-2)")


DEFAULT_CONFIG = ExpansionConfig()
