"""Exact counts of branched covers of the line with prescribed incidence
and ramification, computed by three independent engines that must agree:
a closed binomial formula, a genus recursion, and inclusion-exclusion over
Schubert integrals on Gr(2, N).  A genus-0 linear-algebra oracle certifies
the base case independently."""

from .params import (TevelevProblem, DerivedParams, derive_params,
                     reduce_profiles, expand_to_unit_profiles, canonical)
from .closed_form import TevValue, tev_closed, tev_ell_nonneg, tev_cps_single
from .recursion import tev_recursive
from .schubert_engine import (tev_schubert, tev_farkas_lian_single,
                              tev_m_genus0)
from .genus0 import (PointConfig, CoverCertificate, make_config,
                     build_system, certify, run_trials)

__all__ = [
    "TevelevProblem", "DerivedParams", "derive_params", "reduce_profiles",
    "expand_to_unit_profiles", "canonical",
    "TevValue", "tev_closed", "tev_ell_nonneg", "tev_cps_single",
    "tev_recursive", "tev_schubert", "tev_farkas_lian_single",
    "tev_m_genus0",
    "PointConfig", "CoverCertificate", "make_config", "build_system",
    "certify", "run_trials",
]

__version__ = "0.1.0"
