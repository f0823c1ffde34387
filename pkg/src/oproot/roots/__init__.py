"""Square-root constructions for each operator family."""
from .cesaro import (
    SignPattern,
    cesaro_entry_naive,
    cesaro_factored_column,
    cesaro_factored_square_residual,
    cesaro_root_closed,
    cesaro_root_factored,
    cesaro_root_series,
)
from .hilbert import LebedevBasis, bessel_k_imag, hilbert_root, lebedev_basis
from .shift import (
    ShiftRootParams,
    identity_unitary_params,
    swap_sqrt_params,
    swap_shift_params,
    self_map_params,
    shift2_root,
    toeplitz_root_decide,
)
from .tcos import tcos_root
from .volterra import compressed_shift_root, compressed_shift_root_symbol, volterra_abel_root

__all__ = [
    "LebedevBasis",
    "ShiftRootParams",
    "SignPattern",
    "bessel_k_imag",
    "cesaro_entry_naive",
    "cesaro_factored_column",
    "cesaro_factored_square_residual",
    "cesaro_root_closed",
    "cesaro_root_factored",
    "cesaro_root_series",
    "compressed_shift_root",
    "compressed_shift_root_symbol",
    "hilbert_root",
    "lebedev_basis",
    "identity_unitary_params",
    "swap_sqrt_params",
    "swap_shift_params",
    "self_map_params",
    "shift2_root",
    "tcos_root",
    "toeplitz_root_decide",
    "volterra_abel_root",
]
