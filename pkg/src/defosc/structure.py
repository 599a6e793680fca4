"""Structure functions of deformed oscillators.

A deformed oscillator is fixed by its structure function Phi, through
a+ a- = Phi(N) and a- a+ = Phi(N+1).  This module holds

* the closed-form catalog: harmonic, Arik-Coon, Biedenharn-Macfarlane,
  Chakrabarti-Jagannathan, the Jannussis mu-oscillator, the nonstandard
  one- and two-parameter oscillators realizing deformed position-momentum
  relations, and the equal-coefficient two-sided special case;
* the reconstruction recipe recovering Phi(n) from a coefficient pair
  (h, g) satisfying h(N) a- a+ - g(N) a+ a- = 1;
* the coefficient pairs belonging to each deformed Heisenberg relation;
* energy spectra E(n) = (Phi(n+1) + Phi(n)) / 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import (
    DomainError,
    EvaluationOverflowError,
    RecipeDivisionError,
)
from .qp import DeformationParams, qp_number, require_positive

# |Q - 1| below this switches two_sided_equal_sf to its analytic limit
# n / qb; the bracket term of the closed form is 0/0 at Q = 1.
EQUAL_CASE_LIMIT_THRESHOLD = 1e-6

VARIANTS = (
    "harmonic",
    "arik-coon",
    "biedenharn-macfarlane",
    "chakrabarti-jagannathan",
    "jannussis-mu",
    "nonstd-q",
    "nonstd-qp",
    "two-sided-equal",
    "custom-hg",
)


@dataclass(frozen=True)
class HGPair:
    """Coefficient functions of the relation h(N) a- a+ - g(N) a+ a- = 1.

    h(n) must be nonzero for n >= 0 and g(n) for n >= 1 on the range the
    recipe evaluates; g(0) is never consulted.
    """

    h: Callable[[int], float]
    g: Callable[[int], float]
    label: str = ""


@dataclass(frozen=True)
class StructureFunctionModel:
    """A tagged catalog entry or a custom coefficient pair defining Phi(n)."""

    variant: str
    params: DeformationParams | None = None
    hg: HGPair | None = None
    label: str = ""

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise DomainError(f"unknown structure-function variant {self.variant!r}")
        if self.variant == "custom-hg" and self.hg is None:
            raise DomainError("variant 'custom-hg' requires an HGPair")


def harmonic() -> StructureFunctionModel:
    """Undeformed oscillator, Phi(n) = n."""
    return StructureFunctionModel("harmonic", DeformationParams(1.0), label="harmonic")


def arik_coon(q: float) -> StructureFunctionModel:
    """Arik-Coon oscillator, Phi(n) = (q**n - 1) / (q - 1)."""
    return StructureFunctionModel(
        "arik-coon", DeformationParams(q), label=f"arik-coon(q={q})"
    )


def biedenharn_macfarlane(q: float) -> StructureFunctionModel:
    """Biedenharn-Macfarlane oscillator, Phi(n) = (q**n - q**-n) / (q - 1/q)."""
    return StructureFunctionModel(
        "biedenharn-macfarlane",
        DeformationParams(q),
        label=f"biedenharn-macfarlane(q={q})",
    )


def chakrabarti_jagannathan(q: float, p: float = 1.0) -> StructureFunctionModel:
    """Two-parameter oscillator with the symmetric Phi(n) = [n] = (q**n - p**n)/(q - p)."""
    return StructureFunctionModel(
        "chakrabarti-jagannathan",
        DeformationParams(q, p),
        label=f"chakrabarti-jagannathan(q={q},p={p})",
    )


def jannussis_mu(mu_tilde: float) -> StructureFunctionModel:
    """Jannussis mu-oscillator, Phi(n) = n / (1 + mu_tilde * n)."""
    return StructureFunctionModel(
        "jannussis-mu",
        DeformationParams(1.0, 1.0, mu_tilde),
        label=f"jannussis-mu(mu_tilde={mu_tilde})",
    )


def nonstd_q(q: float) -> StructureFunctionModel:
    """Nonstandard oscillator realizing the relation X P - q P X = i."""
    return StructureFunctionModel(
        "nonstd-q", DeformationParams(q), label=f"nonstd-q(q={q})"
    )


def nonstd_qp(q: float, p: float) -> StructureFunctionModel:
    """Nonstandard oscillator realizing the relation p X P - q P X = i."""
    return StructureFunctionModel(
        "nonstd-qp", DeformationParams(q, p), label=f"nonstd-qp(q={q},p={p})"
    )


def two_sided_equal_hg(qb: float, pb: float) -> StructureFunctionModel:
    """Two-sided deformation in the special case of equal coefficient functions."""
    return StructureFunctionModel(
        "two-sided-equal",
        DeformationParams(qb, pb),
        label=f"two-sided-equal(qb={qb},pb={pb})",
    )


def custom_hg(hg: HGPair) -> StructureFunctionModel:
    """Oscillator defined by an explicit coefficient pair, Phi via the recipe."""
    return StructureFunctionModel("custom-hg", hg=hg, label=hg.label or "custom-hg")


# --------------------------------------------------------------------------
# closed-form evaluators
# --------------------------------------------------------------------------


def _geometric_sum(q: float, m: int) -> float:
    # sum_{k=0}^{m-1} q**k, regular at q = 1 by construction
    total = 0.0
    power = 1.0
    for _ in range(m):
        total += power
        power *= q
    return total


def _sf_harmonic(model: StructureFunctionModel, n: int) -> float:
    return float(n)


def _sf_arik_coon(model: StructureFunctionModel, n: int) -> float:
    return qp_number(n, model.params.q, 1.0)


def _sf_biedenharn_macfarlane(model: StructureFunctionModel, n: int) -> float:
    q = model.params.q
    return qp_number(n, q, 1.0 / q)


def _sf_chakrabarti_jagannathan(model: StructureFunctionModel, n: int) -> float:
    return qp_number(n, model.params.q, model.params.p)


def _sf_jannussis_mu(model: StructureFunctionModel, n: int) -> float:
    denom = 1.0 + model.params.mu * n
    if denom <= 0:
        raise DomainError(
            f"jannussis-mu denominator 1 + mu_tilde*n = {denom} must stay positive "
            f"(mu_tilde={model.params.mu}, n={n})"
        )
    return n / denom


def _sf_nonstd_q(model: StructureFunctionModel, n: int) -> float:
    if n == 0:
        return 0.0
    q = model.params.q
    # (q**n - q**(1-n)) / (q - 1) rewritten through a geometric sum so the
    # q -> 1 point needs no limit branch.
    bracket = 1.0 + q ** (1 - n) * _geometric_sum(q, 2 * n - 1)
    prefactor = 2.0 * q ** (-n) / ((1.0 + q ** (2 * n - 2)) * (1.0 + q ** (2 * n)))
    return prefactor * bracket


def _sf_nonstd_qp(model: StructureFunctionModel, n: int) -> float:
    if n == 0:
        return 0.0
    q, p = model.params.q, model.params.p
    ratio = q / p
    bracket = 1.0 + ratio ** (1 - n) * qp_number(2 * n - 1, ratio, 1.0)
    prefactor = (
        2.0
        / (p * ratio**n)
        / ((1.0 + ratio ** (2 * n - 2)) * (1.0 + ratio ** (2 * n)))
    )
    return prefactor * bracket


def nonstd_qp_sf_explicit(n: int, q: float, p: float) -> float:
    """Second printed form of the nonstandard two-parameter Phi(n).

    Written directly in q and p (no ratio), it carries larger powers and
    serves as an independent cross-check of the ratio-based evaluator.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    require_positive(q=q, p=p)
    if n == 0:
        return 0.0
    try:
        numerator = 2.0 * q ** (-n) * p ** (5 * n - 3)
        denominator = (q ** (2 * n - 2) + p ** (2 * n - 2)) * (
            q ** (2 * n) + p ** (2 * n)
        )
        bracket = 1.0 + qp_number(2 * n - 1, q, p) / (q * p) ** (n - 1)
        value = numerator / denominator * bracket
    except OverflowError as exc:
        raise EvaluationOverflowError(
            f"explicit two-parameter form overflowed at n={n}, q={q}, p={p}"
        ) from exc
    if not math.isfinite(value):
        raise EvaluationOverflowError(
            f"explicit two-parameter form overflowed at n={n}, q={q}, p={p}"
        )
    return value


def _sf_two_sided_equal(model: StructureFunctionModel, n: int) -> float:
    return two_sided_equal_sf(model.params.q, model.params.p, n)


def _sf_custom_hg(model: StructureFunctionModel, n: int) -> float:
    return sf_from_hg(model.hg, n)


_EVALUATORS = {
    "harmonic": _sf_harmonic,
    "arik-coon": _sf_arik_coon,
    "biedenharn-macfarlane": _sf_biedenharn_macfarlane,
    "chakrabarti-jagannathan": _sf_chakrabarti_jagannathan,
    "jannussis-mu": _sf_jannussis_mu,
    "nonstd-q": _sf_nonstd_q,
    "nonstd-qp": _sf_nonstd_qp,
    "two-sided-equal": _sf_two_sided_equal,
    "custom-hg": _sf_custom_hg,
}


def sf_eval(model: StructureFunctionModel, n: int) -> float:
    """Evaluate Phi(n) for a catalog entry; Phi(0) = 0 for every variant."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n == 0:
        return 0.0
    try:
        value = _EVALUATORS[model.variant](model, n)
    except OverflowError as exc:
        raise EvaluationOverflowError(
            f"structure function {model.label or model.variant} overflowed at n={n}"
        ) from exc
    if not math.isfinite(value):
        raise EvaluationOverflowError(
            f"structure function {model.label or model.variant} overflowed at n={n}"
        )
    return value


def sf_from_hg(hg: HGPair, n: int) -> float:
    """Reconstruct Phi(n) from a coefficient pair.

        Phi(n) = (g(n-1)! / h(n-1)!) * (1/h(0) + sum_{j=1}^{n-1} h(j-1)!/g(j)!)

    with the descending factorial F(n)! = F(n)...F(1), F(0)! = 1, and
    Phi(0) = 0 by convention.  Equivalent to solving the recursion
    h(n) Phi(n+1) - g(n) Phi(n) = 1 from Phi(0) = 0.  All factorial
    ratios are accumulated as running products, never as quotients of two
    separately grown factorials, so evaluation stays in range for n up to
    about a hundred even far from the undeformed point.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n == 0:
        return 0.0
    h0 = hg.h(0)
    if h0 == 0:
        raise RecipeDivisionError("recipe division by zero: h(0) = 0")
    ratio = 1.0  # g(n-1)!/h(n-1)! as a product of per-level ratios
    partial = 1.0 / h0  # 1/h(0) + sum of h(j-1)!/g(j)!
    term = 1.0  # running h(j-1)!/g(j)!
    try:
        for j in range(1, n):
            gj = hg.g(j)
            if gj == 0:
                raise RecipeDivisionError(f"recipe division by zero: g({j}) = 0")
            hj = hg.h(j)
            if hj == 0:
                raise RecipeDivisionError(f"recipe division by zero: h({j}) = 0")
            term /= gj
            partial += term
            term *= hj
            ratio *= gj / hj
        value = ratio * partial
    except OverflowError as exc:
        raise EvaluationOverflowError(
            f"recipe overflowed at n={n} for pair {hg.label or '<unnamed>'}"
        ) from exc
    if not math.isfinite(value):
        raise EvaluationOverflowError(
            f"recipe overflowed at n={n} for pair {hg.label or '<unnamed>'}"
        )
    return value


# --------------------------------------------------------------------------
# coefficient pairs of the deformed Heisenberg relations
# --------------------------------------------------------------------------


def hg_for_q_ha(q: float) -> HGPair:
    """Coefficient pair realizing X P - q P X = i.

    h(n) = q**(2n+1) (1 + q**(2n+2)) / 2,  g(n) = q**(2n) (1 + q**(2n-2)) / 2.
    """
    require_positive(q=q)

    def h(n: int) -> float:
        return 0.5 * q ** (2 * n + 1) * (1.0 + q ** (2 * n + 2))

    def g(n: int) -> float:
        return 0.5 * q ** (2 * n) * (1.0 + q ** (2 * n - 2))

    return HGPair(h, g, label=f"q-ha(q={q})")


def hg_for_qp_ha(q: float, p: float) -> HGPair:
    """Coefficient pair realizing p X P - q P X = i, in terms of Q = q/p.

    h(n) = q Q**(2n) (1 + Q**(2n+2)) / 2,  g(n) = p Q**(2n) (1 + Q**(2n-2)) / 2.
    """
    require_positive(q=q, p=p)
    ratio = q / p

    def h(n: int) -> float:
        return 0.5 * q * ratio ** (2 * n) * (1.0 + ratio ** (2 * n + 2))

    def g(n: int) -> float:
        return 0.5 * p * ratio ** (2 * n) * (1.0 + ratio ** (2 * n - 2))

    return HGPair(h, g, label=f"qp-ha(q={q},p={p})")


def hg_for_two_sided(
    qb: float, pb: float, mu: float | Callable[[int], float]
) -> HGPair:
    """Coefficient pair of the two-sided relation qb/pb-commutator vs (1 + mu*H).

    h(n) = qb Q**(2n) (1 + Q**(2n+2)) / 2 - mu/2,
    g(n) = pb Q**(2n) (1 + Q**(2n-2)) / 2 + mu/2,  Q = qb/pb.

    mu may be a constant or a per-level function of n (the equal-coefficient
    special case needs the latter).  A zero of h or g arising for specific
    mu is reported by sf_from_hg when the recipe consumes the pair.
    """
    require_positive(qb=qb, pb=pb)
    ratio = qb / pb
    mu_at: Callable[[int], float] = mu if callable(mu) else (lambda n: mu)

    def h(n: int) -> float:
        return 0.5 * qb * ratio ** (2 * n) * (1.0 + ratio ** (2 * n + 2)) - 0.5 * mu_at(n)

    def g(n: int) -> float:
        return 0.5 * pb * ratio ** (2 * n) * (1.0 + ratio ** (2 * n - 2)) + 0.5 * mu_at(n)

    tag = "mu(n)" if callable(mu) else f"mu={mu}"
    return HGPair(h, g, label=f"two-sided(qb={qb},pb={pb},{tag})")


def equal_hg_special_case(
    qb: float, pb: float
) -> tuple[Callable[[int], float], Callable[[int], float]]:
    """Per-level mu(n) and common coefficient value forcing h(n) = g(n).

    mu(n) = pb Q**(2n) [Q - 1 + Q**(2n-2) (Q**5 - 1)] / 2,
    h(n) = g(n) = pb Q**(2n) [Q + 1 + Q**(2n-2) (Q**5 + 1)] / 4,  Q = qb/pb.

    Degenerate at qb = pb (mu vanishes identically); callers should use the
    ratio-one branch instead.
    """
    require_positive(qb=qb, pb=pb)
    if qb == pb:
        raise DomainError(
            "equal-coefficient special case degenerates at qb == pb "
            "(mu is identically zero); use the ratio-one branch"
        )
    ratio = qb / pb

    def mu(n: int) -> float:
        return (
            0.5
            * pb
            * ratio ** (2 * n)
            * ((ratio - 1.0) + ratio ** (2 * n - 2) * (ratio**5 - 1.0))
        )

    def hg_value(n: int) -> float:
        return (
            0.25
            * pb
            * ratio ** (2 * n)
            * ((ratio + 1.0) + ratio ** (2 * n - 2) * (ratio**5 + 1.0))
        )

    return mu, hg_value


def two_sided_equal_sf(qb: float, pb: float, n: int) -> float:
    """Closed-form Phi(n) of the equal-coefficient two-sided oscillator.

    Phi(n) = 4 Q**2 / (pb (1+Q**2)(1+Q**3))
           - 4 / (pb (1+Q)) * [ (1 - Q**(2-2n)) / (1 - Q**2)
             + sum_{j=1}^{n-1} (1+Q**5) / (Q**2 (1+Q) + Q**(2j) (1+Q**5)) ]

    with Q = qb/pb; for |Q - 1| below EQUAL_CASE_LIMIT_THRESHOLD the
    whole expression is 0/0-ridden and the analytic limit n/qb is used.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    require_positive(qb=qb, pb=pb)
    if n == 0:
        return 0.0
    ratio = qb / pb
    if abs(ratio - 1.0) < EQUAL_CASE_LIMIT_THRESHOLD:
        return n / qb
    head = 4.0 * ratio**2 / (pb * (1.0 + ratio**2) * (1.0 + ratio**3))
    bracket = (1.0 - ratio ** (2 - 2 * n)) / (1.0 - ratio**2)
    r5 = 1.0 + ratio**5
    base = ratio**2 * (1.0 + ratio)
    for j in range(1, n):
        bracket += r5 / (base + ratio ** (2 * j) * r5)
    value = head - 4.0 / (pb * (1.0 + ratio)) * bracket
    if not math.isfinite(value):
        raise EvaluationOverflowError(
            f"equal-coefficient closed form overflowed at n={n}, qb={qb}, pb={pb}"
        )
    return value


def spectrum(model: StructureFunctionModel, n_max: int) -> list[float]:
    """Energy levels E(n) = (Phi(n+1) + Phi(n)) / 2 for n = 0..n_max."""
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    phi = [sf_eval(model, n) for n in range(n_max + 2)]
    return [0.5 * (phi[n + 1] + phi[n]) for n in range(n_max + 1)]
