"""Deformation parameters and two-parameter deformed integers.

The deformed integer [m] = (q**m - p**m) / (q - p) reduces to m at
q = p = 1 and interpolates smoothly across the removable singularity
at q = p, where its value is m * q**(m - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import DomainError

# hbar is set to 1 everywhere; energies and commutator constants are
# expressed in these units.
HBAR = 1.0

# Relative |q - p| gap below which qp_number switches to its analytic
# limit, avoiding catastrophic cancellation in (q**m - p**m) / (q - p).
SINGULARITY_THRESHOLD = 1e-9


def require_positive(**params: float) -> None:
    """Raise DomainError naming the first parameter that is not > 0."""
    for name, value in params.items():
        if not value > 0:
            raise DomainError(f"parameter {name} must be > 0, got {value!r}")


@dataclass(frozen=True)
class DeformationParams:
    """Deformation parameters (q, p, mu), with the derived ratio Q = q/p.

    q and p must be strictly positive; mu is unrestricted.  p defaults
    to 1 (single-parameter deformations) and mu to 0.
    """

    q: float
    p: float = 1.0
    mu: float = 0.0

    def __post_init__(self) -> None:
        require_positive(q=self.q, p=self.p)

    @property
    def Q(self) -> float:
        return self.q / self.p


def qp_number(m: int, q: float, p: float) -> float:
    """Deformed integer [m] = (q**m - p**m) / (q - p).

    Near the removable singularity q = p (relative gap below
    SINGULARITY_THRESHOLD) returns the limit m * mid**(m - 1) evaluated
    at the midpoint mid = (q + p) / 2.
    """
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    require_positive(q=q, p=p)
    if abs(q - p) < SINGULARITY_THRESHOLD * max(q, p):
        if m == 0:
            return 0.0
        mid = 0.5 * (q + p)
        return m * mid ** (m - 1)
    return (q**m - p**m) / (q - p)


def generalized_factorial(func: Callable[[int], float], n: int) -> float:
    """Descending product func(n) * func(n-1) * ... * func(1); 1 for n = 0."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    product = 1.0
    for j in range(n, 0, -1):
        product *= func(j)
    return product
