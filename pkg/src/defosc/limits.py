"""Limit and reduction checks tying the deformed families together.

Every deformation here degenerates into a simpler one when its
parameters approach their undeformed values; each check below measures
the worst deviation of such a reduction, either exactly at the limit
point (where a dedicated branch or an algebraic identity applies) or at
parameters offset by 1e-8 (where the deviation must stay below the
suite tolerance, 1e-6 by default).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .fock import build_ladder, build_xp, profile_q
from .structure import (
    StructureFunctionModel,
    arik_coon,
    biedenharn_macfarlane,
    chakrabarti_jagannathan,
    custom_hg,
    equal_hg_special_case,
    harmonic,
    hg_for_qp_ha,
    hg_for_two_sided,
    jannussis_mu,
    nonstd_q,
    nonstd_qp,
    sf_eval,
    sf_from_hg,
    spectrum,
    two_sided_equal_hg,
    two_sided_equal_sf,
)

DEFAULT_LIMIT_TOLERANCE = 1e-6
PARAMETER_OFFSET = 1e-8

_QGRID = (0.5, 0.9, 1.1, 2.0)
_NMAX = 20


@dataclass(frozen=True)
class LimitCheck:
    name: str
    max_deviation: float
    tolerance: float
    passed: bool


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def _sf_gap(model_a: StructureFunctionModel, model_b: StructureFunctionModel) -> float:
    return max(
        _rel(sf_eval(model_a, n), sf_eval(model_b, n)) for n in range(_NMAX + 1)
    )


def _check_qp_reduces_to_q_at_p_one() -> float:
    return max(_sf_gap(nonstd_qp(q, 1.0), nonstd_q(q)) for q in _QGRID)


def _check_qp_reduces_to_q_near_p_one() -> float:
    worst = 0.0
    for q in _QGRID:
        for p in (1.0 - PARAMETER_OFFSET, 1.0 + PARAMETER_OFFSET):
            worst = max(worst, _sf_gap(nonstd_qp(q, p), nonstd_q(q)))
    return worst


def _check_equal_ratio_gives_scaled_integers() -> float:
    worst = 0.0
    for q in _QGRID:
        for n in range(_NMAX + 1):
            worst = max(worst, _rel(two_sided_equal_sf(q, q, n), n / q))
    return worst


def _check_two_sided_mu_zero_near_ratio_one() -> float:
    # the mu = 0 pair evaluated through the recipe, against n/qb
    worst = 0.0
    for qb in _QGRID:
        for pb in (qb, qb / (1.0 + PARAMETER_OFFSET)):
            pair = hg_for_two_sided(qb, pb, 0.0)
            for n in range(_NMAX + 1):
                worst = max(worst, _rel(sf_from_hg(pair, n), n / qb))
    return worst


def _check_two_sided_mu_zero_matches_qp_pair() -> float:
    worst = 0.0
    for qb in _QGRID:
        for pb in _QGRID:
            two_sided = hg_for_two_sided(qb, pb, 0.0)
            plain = hg_for_qp_ha(qb, pb)
            for n in range(_NMAX + 1):
                worst = max(worst, _rel(two_sided.h(n), plain.h(n)))
                worst = max(worst, _rel(two_sided.g(n), plain.g(n)))
    return worst


def _classical_models(offset: float) -> list[StructureFunctionModel]:
    q = 1.0 + offset
    return [
        harmonic(),
        arik_coon(q),
        biedenharn_macfarlane(q),
        chakrabarti_jagannathan(q, 1.0),
        chakrabarti_jagannathan(q, 1.0 / q),
        jannussis_mu(offset),
        nonstd_q(q),
        nonstd_qp(q, 1.0),
        two_sided_equal_hg(q, 1.0),
        custom_hg(hg_for_qp_ha(q, 1.0)),
    ]


def _check_classical_limit_catalog() -> float:
    worst = 0.0
    for offset in (0.0, PARAMETER_OFFSET, -PARAMETER_OFFSET):
        for model in _classical_models(offset):
            for n in range(_NMAX + 1):
                worst = max(worst, _rel(sf_eval(model, n), float(n)))
    return worst


def _check_classical_xp_forms() -> float:
    dim = 12
    rep = build_xp(build_ladder(harmonic(), dim), profile_q(1.0))
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    x_expected = (rep.a_plus + rep.a_minus) * inv_sqrt2
    p_expected = 1j * (rep.a_plus - rep.a_minus) * inv_sqrt2
    return float(
        max(
            np.abs(rep.x_op - x_expected).max(),
            np.abs(rep.p_op - p_expected).max(),
        )
    )


def _check_qp_equal_parameters_scaled_harmonic() -> float:
    worst = 0.0
    for q in _QGRID:
        model = nonstd_qp(q, q)
        for n in range(_NMAX + 1):
            worst = max(worst, _rel(sf_eval(model, n), n / q))
        energies = spectrum(model, _NMAX)
        for n in range(_NMAX):
            worst = max(worst, _rel(energies[n + 1] - energies[n], 1.0 / q))
    return worst


def _check_equal_case_mu_vanishes_near_ratio_one() -> float:
    worst = 0.0
    for pb in _QGRID:
        mu_fn, _ = equal_hg_special_case(pb * (1.0 + PARAMETER_OFFSET), pb)
        for n in range(_NMAX + 1):
            worst = max(worst, abs(mu_fn(n)))
    return worst


_CHECKS = (
    ("qp-reduces-to-q-at-p-1", _check_qp_reduces_to_q_at_p_one),
    ("qp-reduces-to-q-near-p-1", _check_qp_reduces_to_q_near_p_one),
    ("equal-coefficient-sf-is-n-over-q", _check_equal_ratio_gives_scaled_integers),
    ("two-sided-mu-0-recipe-near-ratio-1", _check_two_sided_mu_zero_near_ratio_one),
    ("two-sided-mu-0-matches-qp-pair", _check_two_sided_mu_zero_matches_qp_pair),
    ("classical-limit-catalog", _check_classical_limit_catalog),
    ("classical-xp-forms", _check_classical_xp_forms),
    ("qp-equal-parameters-scaled-harmonic", _check_qp_equal_parameters_scaled_harmonic),
    ("equal-case-mu-vanishes-near-ratio-1", _check_equal_case_mu_vanishes_near_ratio_one),
)


def run_limit_suite(tolerance: float = DEFAULT_LIMIT_TOLERANCE) -> list[LimitCheck]:
    """Run every reduction check and report per-check worst deviations."""
    if tolerance < 0:
        raise DomainError(f"tolerance must be >= 0, got {tolerance}")
    results = []
    for name, check in _CHECKS:
        deviation = check()
        results.append(
            LimitCheck(
                name=name,
                max_deviation=deviation,
                tolerance=tolerance,
                passed=deviation <= tolerance,
            )
        )
    return results
