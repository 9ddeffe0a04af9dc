"""Two-user link budget: channel gain, SINR, achievable rate, rate loss.

All internal math is linear (watts, ratios); dB/dBm conversion helpers sit
at the boundary. The far user enters the near user's budget only through
the normalized interference f of its beam, so no far-user rate exists here.
"""

from dataclasses import dataclass
import math

from .geometry import ArrayConfig

_LN2 = math.log(2.0)
_MIN_SINR = 1e-15  # below this log2(1+x) is indistinguishable from 0


def dbm_to_watts(x: float) -> float:
    """Power in dBm to watts: 30 dBm -> 1 W."""
    return 10.0 ** ((x - 30.0) / 10.0)


def db_to_linear(x: float) -> float:
    """Gain in dB to a linear ratio."""
    return 10.0 ** (x / 10.0)


def watts_to_dbm(x: float) -> float:
    """Watts to dBm; 0 W maps to -inf."""
    if x <= 0.0:
        return float("-inf")
    return 10.0 * math.log10(x / 1e-3)


def linear_to_db(x: float) -> float:
    if x <= 0.0:
        return float("-inf")
    return 10.0 * math.log10(x)


@dataclass(frozen=True)
class LinkBudget:
    """Transmit powers, reference path gain and noise power, all linear.

    Attributes:
        p_near: near-user transmit power (W).
        p_far: far-user transmit power (W).
        beta_ref: reference path gain at 1 m (linear).
        noise: receiver noise power (W).
    """

    p_near: float
    p_far: float
    beta_ref: float
    noise: float

    def __post_init__(self):
        for name in ("p_near", "p_far", "beta_ref", "noise"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")

    @classmethod
    def from_db(cls, p_near_dbm: float, p_far_dbm: float,
                beta_db: float, noise_dbm: float) -> "LinkBudget":
        """Budget from the dBm/dB units used in scenario tables."""
        return cls(
            p_near=dbm_to_watts(p_near_dbm),
            p_far=dbm_to_watts(p_far_dbm),
            beta_ref=db_to_linear(beta_db),
            noise=dbm_to_watts(noise_dbm),
        )


@dataclass(frozen=True)
class RateReport:
    """One evaluated link: gains, SINR and the rate/loss quartet (bps/Hz)."""

    g_near: float
    sinr: float
    rate: float
    rate_ideal: float
    rate_loss: float
    rate_loss_bound: float
    f_used: float


def channel_gain_near(link: LinkBudget, cfg: ArrayConfig, r: float) -> float:
    """Aggregate near-user channel gain N * beta / r^2."""
    if not r > 0:
        raise ValueError(f"r must be positive, got {r}")
    return cfg.n_antennas * link.beta_ref / (r * r)


def sinr_near(link: LinkBudget, cfg: ArrayConfig, r: float, f: float) -> float:
    """Received SINR with normalized interference f from the far beam."""
    if f < 0:
        raise ValueError(f"f must be non-negative, got {f}")
    g = channel_gain_near(link, cfg, r)
    return link.p_near * g / (link.p_far * g * f * f + link.noise)


def _log2_1p(sinr: float) -> float:
    if sinr < _MIN_SINR:
        return 0.0
    return math.log1p(sinr) / _LN2


def rate_near(link: LinkBudget, cfg: ArrayConfig, r: float, f: float) -> float:
    """Achievable rate log2(1 + SINR) in bps/Hz."""
    return _log2_1p(sinr_near(link, cfg, r, f))


def rate_ideal(link: LinkBudget, cfg: ArrayConfig, r: float) -> float:
    """Interference-free rate (f = 0)."""
    return rate_near(link, cfg, r, 0.0)


def rate_loss(link: LinkBudget, cfg: ArrayConfig, r: float, f: float) -> float:
    """Rate lost to far-beam interference; non-negative."""
    return rate_ideal(link, cfg, r) - rate_near(link, cfg, r, f)


def rate_loss_bound(link: LinkBudget, cfg: ArrayConfig, r: float, f: float) -> float:
    """Closed-form upper bound on the rate loss.

    log2(1 + (P_near g / sigma^2) * P_far f^2 / (P_far f^2 + P_near));
    coincides with the loss itself only at f = 0.
    """
    if f < 0:
        raise ValueError(f"f must be non-negative, got {f}")
    g = channel_gain_near(link, cfg, r)
    interf = link.p_far * f * f
    return _log2_1p(link.p_near * g / link.noise * interf / (interf + link.p_near))


def make_rate_report(link: LinkBudget, cfg: ArrayConfig, r: float, f: float) -> RateReport:
    """Evaluate the full rate pipeline for one scenario and one f."""
    g = channel_gain_near(link, cfg, r)
    sinr = sinr_near(link, cfg, r, f)
    rate = _log2_1p(sinr)
    ideal = rate_ideal(link, cfg, r)
    return RateReport(
        g_near=g,
        sinr=sinr,
        rate=rate,
        rate_ideal=ideal,
        rate_loss=ideal - rate,
        rate_loss_bound=rate_loss_bound(link, cfg, r, f),
        f_used=f,
    )
