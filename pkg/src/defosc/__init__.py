"""Deformed Heisenberg algebras and their deformed-oscillator realizations."""

from .errors import (
    DeformedAlgebraError,
    DomainError,
    EvaluationOverflowError,
    NegativeStructureFunctionError,
    PoleError,
    RecipeDivisionError,
)
from .fock import (
    CoefficientProfile,
    FockRep,
    build_ladder,
    build_xp,
    hamiltonian,
    profile_q,
    profile_qp,
    profile_two_sided,
)
from .limits import LimitCheck, run_limit_suite
from .linkage import (
    LinkInput,
    check_link_consistency,
    link_table,
    mu_for_arik_coon_target,
    mu_from_g_match,
    mu_from_h_match,
    mu_from_q,
    q_and_pn_from_mu,
    q_from_mu,
    q_from_p,
)
from .qp import (
    HBAR,
    DeformationParams,
    generalized_factorial,
    qp_number,
)
from .structure import (
    HGPair,
    StructureFunctionModel,
    arik_coon,
    biedenharn_macfarlane,
    chakrabarti_jagannathan,
    custom_hg,
    equal_hg_special_case,
    harmonic,
    hg_for_q_ha,
    hg_for_qp_ha,
    hg_for_two_sided,
    jannussis_mu,
    nonstd_q,
    nonstd_qp,
    nonstd_qp_sf_explicit,
    sf_eval,
    sf_from_hg,
    spectrum,
    two_sided_equal_hg,
    two_sided_equal_sf,
)
from .verify import (
    ResidualReport,
    verify_commutator_sf,
    verify_hg,
    verify_q_ha,
    verify_qp_ha,
    verify_two_sided,
)

__version__ = "0.1.0"

__all__ = [
    "HBAR",
    "CoefficientProfile",
    "DeformationParams",
    "DeformedAlgebraError",
    "DomainError",
    "EvaluationOverflowError",
    "FockRep",
    "HGPair",
    "LimitCheck",
    "LinkInput",
    "NegativeStructureFunctionError",
    "PoleError",
    "RecipeDivisionError",
    "ResidualReport",
    "StructureFunctionModel",
    "arik_coon",
    "biedenharn_macfarlane",
    "build_ladder",
    "build_xp",
    "chakrabarti_jagannathan",
    "check_link_consistency",
    "custom_hg",
    "equal_hg_special_case",
    "generalized_factorial",
    "hamiltonian",
    "harmonic",
    "hg_for_q_ha",
    "hg_for_qp_ha",
    "hg_for_two_sided",
    "jannussis_mu",
    "link_table",
    "mu_for_arik_coon_target",
    "mu_from_g_match",
    "mu_from_h_match",
    "mu_from_q",
    "nonstd_q",
    "nonstd_qp",
    "nonstd_qp_sf_explicit",
    "profile_q",
    "profile_qp",
    "profile_two_sided",
    "q_and_pn_from_mu",
    "q_from_mu",
    "q_from_p",
    "qp_number",
    "run_limit_suite",
    "sf_eval",
    "sf_from_hg",
    "spectrum",
    "two_sided_equal_hg",
    "two_sided_equal_sf",
    "verify_commutator_sf",
    "verify_hg",
    "verify_q_ha",
    "verify_qp_ha",
    "verify_two_sided",
]
