"""Uniform linear array geometry and field-region classification.

Aperture convention: D = N * d with d = lambda / 2. Under this convention
the two Rayleigh-distance forms 2 D^2 / lambda and N^2 lambda / 2 are the
same number, which is what every derived quantity in this package assumes.

The propagation speed is fixed at 3.0e8 m/s so that a 30 GHz carrier maps
to exactly lambda = 0.01 m (all reference scenarios are specified at
30 GHz and assume that wavelength).
"""

from dataclasses import dataclass
from enum import IntEnum
import math

SPEED_OF_LIGHT = 3.0e8  # m/s


class FieldRegion(IntEnum):
    """Distance regime of a user relative to the array.

    Ordered so that the region index never decreases with distance:
    TOO_CLOSE below 1.2 D (per-element amplitude variation not negligible),
    NEAR_FIELD inside the Rayleigh distance, FAR_FIELD beyond it.
    """

    TOO_CLOSE = 0
    NEAR_FIELD = 1
    FAR_FIELD = 2


@dataclass(frozen=True)
class ArrayConfig:
    """ULA description with derived lengths, all in meters/Hz.

    Attributes:
        n_antennas: element count N.
        carrier_freq: carrier frequency in Hz.
        wavelength: lambda = c / f.
        spacing: element spacing d = lambda / 2.
        aperture: D = N * d.
        rayleigh_distance: Z = 2 D^2 / lambda (== N^2 lambda / 2).
        fresnel_lower: 1.2 D, lower edge of the modeled near-field region.
        approx_valid_distance: 0.5 sqrt(D^3 / lambda), distance beyond which
            the quadratic phase expansion is considered accurate.
    """

    n_antennas: int
    carrier_freq: float
    wavelength: float
    spacing: float
    aperture: float
    rayleigh_distance: float
    fresnel_lower: float
    approx_valid_distance: float


def make_array_config(n_antennas: int, carrier_freq: float) -> ArrayConfig:
    """Build an ArrayConfig from element count and carrier frequency.

    Raises ValueError for n_antennas < 1 or non-positive frequency.
    """
    if n_antennas < 1:
        raise ValueError(f"n_antennas must be >= 1, got {n_antennas}")
    if not carrier_freq > 0:
        raise ValueError(f"carrier_freq must be positive, got {carrier_freq}")
    wavelength = SPEED_OF_LIGHT / carrier_freq
    spacing = 0.5 * wavelength
    aperture = n_antennas * spacing
    return ArrayConfig(
        n_antennas=int(n_antennas),
        carrier_freq=float(carrier_freq),
        wavelength=wavelength,
        spacing=spacing,
        aperture=aperture,
        rayleigh_distance=rayleigh_distance(aperture, wavelength),
        fresnel_lower=1.2 * aperture,
        approx_valid_distance=0.5 * math.sqrt(aperture**3 / wavelength),
    )


def rayleigh_distance(aperture: float, wavelength: float) -> float:
    """Z = 2 D^2 / lambda for a given aperture and wavelength."""
    if not (aperture > 0 and wavelength > 0):
        raise ValueError("aperture and wavelength must be positive")
    return 2.0 * aperture * aperture / wavelength


def element_offset(n: int, n_antennas: int) -> float:
    """Signed half-integer offset of element n from the array center.

    Element n sits at (0, element_offset(n, N) * d); offsets are symmetric
    about zero and sum to zero.
    """
    if not 0 <= n < n_antennas:
        raise IndexError(f"element index {n} out of range for N={n_antennas}")
    return (2 * n - n_antennas + 1) / 2.0


def classify_region(cfg: ArrayConfig, r: float) -> FieldRegion:
    """Classify a BS-center-to-user distance r (meters).

    TOO_CLOSE wins over FAR_FIELD in the degenerate N=1 case where
    1.2 D exceeds the Rayleigh distance.
    """
    if not r > 0:
        raise ValueError(f"distance must be positive, got {r}")
    if r < cfg.fresnel_lower:
        return FieldRegion.TOO_CLOSE
    if r >= cfg.rayleigh_distance:
        return FieldRegion.FAR_FIELD
    return FieldRegion.NEAR_FIELD
