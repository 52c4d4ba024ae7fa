"""Data-driven estimation of the Vinnicombe nu-gap between discrete-time
SISO LTI systems, with an exact frequency-grid reference oracle.
"""

from .estimator import (
    EstimationConfig,
    EstimationResult,
    estimate_nu_gap,
    run_estimation,
)
from .lti import DiscreteTransferFunction, NoiseSpec, SignalRecord
from .oracle import OracleResult, nu_gap
from .plants import RowenParameters, rowen_gcv_to_power, textbook_pair

__all__ = [
    "DiscreteTransferFunction",
    "EstimationConfig",
    "EstimationResult",
    "NoiseSpec",
    "OracleResult",
    "RowenParameters",
    "SignalRecord",
    "estimate_nu_gap",
    "nu_gap",
    "rowen_gcv_to_power",
    "run_estimation",
    "textbook_pair",
]

__version__ = "0.1.0"
