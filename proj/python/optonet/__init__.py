"""Optical core network topology toolkit.

Thin Python face over the C++ core: topology IO, the 21-metric vector,
SNR-BA synthetic generation, spectral quantities, and the two-sample
Kolmogorov-Smirnov test.
"""

from ._optonet import (
    ComputeError,
    InputError,
    Topology,
    fibre_length_km,
    generate,
    generate_position_matched,
    haversine_km,
    ks2,
    laplacian_spectrum,
    normalized_laplacian_spectrum,
    wsd,
)

__all__ = [
    "ComputeError",
    "InputError",
    "Topology",
    "fibre_length_km",
    "generate",
    "generate_position_matched",
    "haversine_km",
    "ks2",
    "laplacian_spectrum",
    "normalized_laplacian_spectrum",
    "wsd",
]

__version__ = "0.1.0"
