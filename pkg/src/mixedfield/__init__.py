"""Mixed near-/far-field interference analysis for XL antenna arrays.

Computes the correlation between a near-field user's channel steering
vector and a far-field beam (exactly and in Fresnel closed form), the
resulting SINR/rate/rate-loss figures, and canned parameter sweeps
emitted as deterministic CSV tables.
"""

from .geometry import (
    SPEED_OF_LIGHT,
    ArrayConfig,
    FieldRegion,
    classify_region,
    element_offset,
    make_array_config,
    rayleigh_distance,
)
from .steering import (
    FarFieldDirection,
    NearFieldPoint,
    element_distance,
    element_distances,
    far_steering,
    near_steering,
)
from .fresnel import (
    BetaParams,
    beta_params,
    coherence_gain,
    fresnel_c,
    fresnel_s,
    g_function,
)
from .interference import (
    Method,
    approx_domain_ok,
    interference_approx,
    interference_exact,
    interference_fresnel_sum,
    normalized_interference,
    received_interference_power,
)
from .link import (
    LinkBudget,
    RateReport,
    channel_gain_near,
    db_to_linear,
    dbm_to_watts,
    linear_to_db,
    make_rate_report,
    rate_ideal,
    rate_loss,
    rate_loss_bound,
    rate_near,
    sinr_near,
    watts_to_dbm,
)
from .sweep import (
    Scenario,
    SweepRecord,
    SweepSpec,
    emit_csv,
    load_records,
    records_to_csv,
    run_sweep,
)
from .presets import list_presets, preset

__version__ = "0.1.0"
