"""Configurable-precision Lerch zeta evaluation with exponentially improved
expansions and Stokes multiplier extraction."""

from .errors import (ConvergenceError, DomainError, LerchStokesError,
                     PoleError, PrecisionError, TailError)
from .mpcore import CNum, PrecisionContext
from .oracle import LerchParams, lerch_direct_sum, lerch_reference, z_from_lerch
from .terminant import ArgTrackedZ, c_of_phi, terminant
from .expansion import (ExpansionBreakdown, TruncationSchedule,
                        exp_improved_eval, optimal_truncation, poincare_expand)
from .stokes import (StokesSample, stokes_erf_approx, stokes_multiplier,
                     stokes_table)

__version__ = "0.1.0"

__all__ = [
    "ArgTrackedZ", "CNum", "ConvergenceError", "DomainError",
    "ExpansionBreakdown", "LerchParams", "LerchStokesError", "PoleError",
    "PrecisionContext", "PrecisionError", "StokesSample", "TailError",
    "TruncationSchedule", "c_of_phi", "exp_improved_eval", "lerch_direct_sum",
    "lerch_reference", "optimal_truncation", "poincare_expand",
    "stokes_erf_approx", "stokes_multiplier", "stokes_table", "terminant",
    "z_from_lerch",
]
