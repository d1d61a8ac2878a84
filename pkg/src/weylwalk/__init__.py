"""Exact counts and asymptotics for walks in the type-A Weyl chamber."""

__version__ = "0.1.0"

from .lattice import DomainError, Kind, Model, in_chamber, reachable, steps  # noqa: E402
from .counting import (  # noqa: E402
    count_confined_dp,
    count_confined_reflection,
    count_free,
    count_free_endpoint,
    confined_layer,
)
from .kernels import DEFAULT_BACKEND  # noqa: E402
from .schur import Partition, cauchy_check, det_direct, det_schur_series, schur, second_order_det_expansion  # noqa: E402
from .symbolic import SymbolicReal, gamma_half  # noqa: E402
from .selberg import Weight, hermite_moment, laguerre_moment, quadrature_oracle, selberg_one  # noqa: E402
from .asymptotics import (  # noqa: E402
    convergence_report,
    fixed_endpoint_asymptotic,
    free_endpoint_asymptotic,
    model_constants,
    verify_constants_fd,
)

__all__ = [
    "DomainError", "Kind", "Model", "in_chamber", "reachable", "steps",
    "count_confined_dp", "count_confined_reflection", "count_free", "count_free_endpoint", "confined_layer",
    "DEFAULT_BACKEND",
    "Partition", "cauchy_check", "det_direct", "det_schur_series", "schur", "second_order_det_expansion",
    "SymbolicReal", "gamma_half",
    "Weight", "hermite_moment", "laguerre_moment", "quadrature_oracle", "selberg_one",
    "convergence_report", "fixed_endpoint_asymptotic", "free_endpoint_asymptotic", "model_constants",
    "verify_constants_fd",
]
