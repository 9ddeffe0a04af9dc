"""Normalized interference power at the near user from the far-field beam.

Three evaluation tiers for f(N, psi, theta, r) = |b^H(theta, r) a(psi)|:

  exact        inner product of the exact steering vectors (ground truth)
  fresnel_sum  discrete sum after the quadratic phase expansion, before
               the sum-to-integral step
  approx       closed form via the Fresnel coherence function

Keeping the middle tier separate makes each approximation step testable
on its own instead of only comparing the two endpoints.
"""

import enum
import math

import numpy as np

from .geometry import ArrayConfig
from .steering import FarFieldDirection, NearFieldPoint, far_steering, near_steering
from .fresnel import beta_params, g_function
from .link import LinkBudget, channel_gain_near


class Method(enum.Enum):
    """Which interference evaluator feeds a power or rate figure."""

    EXACT = "exact"
    FRESNEL_SUM = "fresnel_sum"
    CLOSED_FORM = "closed_form"


def interference_exact(cfg: ArrayConfig, psi: float, point: NearFieldPoint) -> float:
    """|b^H a| from exact steering vectors; in [0, 1] up to roundoff."""
    b = near_steering(cfg, point)
    a = far_steering(cfg, FarFieldDirection(psi))
    return float(abs(np.vdot(b, a)))


def interference_fresnel_sum(cfg: ArrayConfig, psi: float, point: NearFieldPoint) -> float:
    """Discrete sum with the quadratic phase expansion of element distances.

    (1/N) |sum_n exp(j pi (n^2 q - n (theta - psi + (N-1) q)))| with
    q = d (1 - theta^2) / (2 r).
    """
    _ = FarFieldDirection(psi)  # validates psi
    n = np.arange(cfg.n_antennas)
    q = cfg.spacing * (1.0 - point.theta**2) / (2.0 * point.r)
    phase = math.pi * (n * n * q - n * (point.theta - psi + (cfg.n_antennas - 1) * q))
    return float(abs(np.exp(1j * phase).sum())) / cfg.n_antennas


def interference_approx(cfg: ArrayConfig, psi: float, point: NearFieldPoint) -> float:
    """Closed-form coherence approximation of the interference.

    Accuracy degrades below cfg.approx_valid_distance; callers that care
    should check approx_domain_ok (sweep records carry the flag).
    """
    return g_function(beta_params(cfg, psi, point))


def approx_domain_ok(cfg: ArrayConfig, r: float) -> bool:
    """True where the quadratic phase expansion is considered accurate."""
    return r >= cfg.approx_valid_distance


_EVALUATORS = {
    Method.EXACT: interference_exact,
    Method.FRESNEL_SUM: interference_fresnel_sum,
    Method.CLOSED_FORM: interference_approx,
}


def normalized_interference(cfg: ArrayConfig, psi: float, point: NearFieldPoint,
                            method: Method = Method.EXACT) -> float:
    """Dispatch f(N, psi, theta, r) by method."""
    return _EVALUATORS[method](cfg, psi, point)


def received_interference_power(link: LinkBudget, cfg: ArrayConfig, psi: float,
                                point: NearFieldPoint,
                                method: Method = Method.EXACT) -> float:
    """Interference power P_far * g_near * f^2 at the near user, in watts."""
    f = normalized_interference(cfg, psi, point, method)
    return link.p_far * channel_gain_near(link, cfg, point.r) * f * f
