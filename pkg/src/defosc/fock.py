"""Truncated Fock-space matrix realizations.

Ladder operators act as a+ |n> = sqrt(Phi(n+1)) |n+1> and
a- |n> = sqrt(Phi(n)) |n-1>; position and momentum are dressed ladder
combinations X = f(N) a- + g(N) a+ and P = i (k(N) a+ - h(N) a-).
Functions of the number operator are realized as diagonal matrices
acting from the left, which reproduces F(N) a(+/-) = a(+/-) F(N +/- 1)
automatically.  Truncation artifacts live in the top two levels only;
the verification module restricts checks to the interior accordingly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .errors import DomainError, NegativeStructureFunctionError
from .qp import require_positive
from .structure import StructureFunctionModel, sf_eval

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class CoefficientProfile:
    """Number-operator coefficients (f, g, h, k) dressing the ladder operators."""

    f: Callable[[int], float]
    g: Callable[[int], float]
    h: Callable[[int], float]
    k: Callable[[int], float]
    label: str = ""


@dataclass(frozen=True)
class FockRep:
    """Truncated matrix realization of one deformed oscillator.

    phi holds Phi(0..dim), one entry beyond the truncation so the
    Hamiltonian diagonal (Phi(n+1) + Phi(n))/2 is exact at n = dim - 1.
    x_op and p_op are populated by build_xp.
    """

    dim: int
    phi: np.ndarray
    a_plus: np.ndarray
    a_minus: np.ndarray
    n_op: np.ndarray
    x_op: np.ndarray | None = None
    p_op: np.ndarray | None = None


def build_ladder(model: StructureFunctionModel, dim: int) -> FockRep:
    """Build the dim-dimensional ladder matrices of a structure function."""
    if dim < 2:
        raise DomainError(f"dim must be >= 2, got {dim}")
    phi = np.array([sf_eval(model, n) for n in range(dim + 1)], dtype=float)
    negative = np.nonzero(phi < 0)[0]
    if negative.size:
        level = int(negative[0])
        raise NegativeStructureFunctionError(
            f"Phi({level}) = {phi[level]} < 0 for {model.label or model.variant}; "
            "ladder entries need real square roots"
        )
    roots = np.sqrt(phi[1:dim])
    a_plus = np.diag(roots, -1).astype(complex)
    a_minus = np.diag(roots, 1).astype(complex)
    n_op = np.diag(np.arange(dim)).astype(complex)
    return FockRep(dim=dim, phi=phi, a_plus=a_plus, a_minus=a_minus, n_op=n_op)


def _ratio_profile(ratio: float, label: str) -> CoefficientProfile:
    # f = k = ratio**n / sqrt(2), h = g = ratio**(2n) / sqrt(2)
    def f(n: int) -> float:
        return ratio**n * _INV_SQRT2

    def g(n: int) -> float:
        return ratio ** (2 * n) * _INV_SQRT2

    return CoefficientProfile(f=f, g=g, h=g, k=f, label=label)


def profile_q(q: float) -> CoefficientProfile:
    """Coefficients of the single-parameter relation X P - q P X = i."""
    require_positive(q=q)
    return _ratio_profile(q, label=f"q-profile(q={q})")


def profile_qp(q: float, p: float) -> CoefficientProfile:
    """Coefficients of p X P - q P X = i; they depend only on q/p."""
    require_positive(q=q, p=p)
    return _ratio_profile(q / p, label=f"qp-profile(q={q},p={p})")


def profile_two_sided(qb: float, pb: float) -> CoefficientProfile:
    """Coefficients of the two-sided relation; same ratio form in qb/pb."""
    require_positive(qb=qb, pb=pb)
    return _ratio_profile(qb / pb, label=f"two-sided-profile(qb={qb},pb={pb})")


def _diagonal_of(func: Callable[[int], float], dim: int) -> np.ndarray:
    return np.diag([func(n) for n in range(dim)]).astype(complex)


def build_xp(rep: FockRep, profile: CoefficientProfile) -> FockRep:
    """Attach X = f(N) a- + g(N) a+ and P = i (k(N) a+ - h(N) a-)."""
    dim = rep.dim
    f_mat = _diagonal_of(profile.f, dim)
    g_mat = _diagonal_of(profile.g, dim)
    h_mat = _diagonal_of(profile.h, dim)
    k_mat = _diagonal_of(profile.k, dim)
    x_op = f_mat @ rep.a_minus + g_mat @ rep.a_plus
    p_op = 1j * (k_mat @ rep.a_plus - h_mat @ rep.a_minus)
    return replace(rep, x_op=x_op, p_op=p_op)


def hamiltonian(rep: FockRep) -> np.ndarray:
    """Diagonal Hamiltonian (Phi(n+1) + Phi(n)) / 2, n = 0..dim-1.

    Built from the Phi table rather than the truncated product
    (a- a+ + a+ a-)/2, whose last diagonal entry is a truncation artifact.
    """
    return np.diag(0.5 * (rep.phi[1:] + rep.phi[:-1])).astype(complex)
