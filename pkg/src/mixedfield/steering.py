"""Far-field and near-field steering vectors.

Steering vectors are plain complex128 ndarrays of length N with unit
Euclidean norm and entries of modulus 1/sqrt(N). The near-field vector is
always built from the exact per-element distances; the quadratic phase
expansion lives exclusively in the interference module so that
exact-versus-approximate comparisons stay meaningful.
"""

from dataclasses import dataclass
import math

import numpy as np

from .geometry import ArrayConfig


def _check_spatial_angle(value: float, name: str) -> None:
    # Open interval: endfire +-1 would zero the (1 - theta^2) radicand used
    # by the closed-form coherence parameters downstream.
    if not -1.0 < value < 1.0:
        raise ValueError(f"{name} must lie in (-1, 1), got {value}")


@dataclass(frozen=True)
class FarFieldDirection:
    """Far user placement given by spatial angle psi in (-1, 1).

    psi equals cos(physical angle of departure) at half-wavelength spacing;
    physical_aod (radians) is optional bookkeeping.
    """

    psi: float
    physical_aod: float | None = None

    def __post_init__(self):
        _check_spatial_angle(self.psi, "psi")

    @classmethod
    def from_physical(cls, aod: float) -> "FarFieldDirection":
        return cls(psi=math.cos(aod), physical_aod=aod)


@dataclass(frozen=True)
class NearFieldPoint:
    """Near user placement: spatial angle theta in (-1, 1), distance r > 0 m."""

    theta: float
    r: float

    def __post_init__(self):
        _check_spatial_angle(self.theta, "theta")
        if not self.r > 0:
            raise ValueError(f"r must be positive, got {self.r}")


def far_steering(cfg: ArrayConfig, direction: FarFieldDirection) -> np.ndarray:
    """Plane-wave steering vector, entry n = exp(j pi n psi) / sqrt(N)."""
    n = np.arange(cfg.n_antennas)
    return np.exp(1j * math.pi * direction.psi * n) / math.sqrt(cfg.n_antennas)


def element_distances(cfg: ArrayConfig, point: NearFieldPoint) -> np.ndarray:
    """Exact distances from every array element to the near-field point."""
    offsets = (2.0 * np.arange(cfg.n_antennas) - cfg.n_antennas + 1) / 2.0
    od = offsets * cfg.spacing
    return np.sqrt(point.r**2 + od**2 - 2.0 * point.r * point.theta * od)


def element_distance(cfg: ArrayConfig, point: NearFieldPoint, n: int) -> float:
    """Exact distance from element n to the near-field point (meters)."""
    if not 0 <= n < cfg.n_antennas:
        raise IndexError(f"element index {n} out of range for N={cfg.n_antennas}")
    return float(element_distances(cfg, point)[n])


def near_steering(cfg: ArrayConfig, point: NearFieldPoint) -> np.ndarray:
    """Spherical-wave steering vector from exact element distances.

    Entry n = exp(-j 2 pi (r_n - r) / lambda) / sqrt(N), phase referenced
    to the array center.
    """
    delta_r = element_distances(cfg, point) - point.r
    phase = -2.0 * math.pi * delta_r / cfg.wavelength
    return np.exp(1j * phase) / math.sqrt(cfg.n_antennas)
