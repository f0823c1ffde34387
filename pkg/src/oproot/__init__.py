"""Square roots of classical operators on Hilbert space, at desk scale.

Finite sections of the shift, T_cos, Hilbert, Cesaro and Volterra operators,
the square roots built for each, and a harness that checks the identities
the constructions rest on.
"""
from .matrixcore import Window, as_matrix, op_norm_est, window_residual
from .series import PowerSeries

__version__ = "0.1.0"

__all__ = ["PowerSeries", "Window", "as_matrix", "op_norm_est", "window_residual"]
