"""Goodput models and ARQ protocol simulation for a 3-node relay network."""

from relayarq._core import (
    ChannelParams,
    GoodputResult,
    KOptimum,
    Mode,
    OptResult,
    OutageSet,
    OutageSource,
    RateOptimum,
    RateRange,
    SearchPoint,
    SimConfig,
    SimReport,
    StateDistribution,
    bessel_k1,
    expected_time_af,
    expected_time_df,
    expected_time_df_reduced,
    goodput_af,
    goodput_df,
    goodput_single,
    optimize_joint,
    optimize_k,
    optimize_rate,
    outage_af_relay_path,
    outage_df_links,
    outage_single,
    run_batch,
    state_probs_af,
    state_probs_df,
    xi_k1_factor,
)

__all__ = [
    "ChannelParams",
    "GoodputResult",
    "KOptimum",
    "Mode",
    "OptResult",
    "OutageSet",
    "OutageSource",
    "RateOptimum",
    "RateRange",
    "SearchPoint",
    "SimConfig",
    "SimReport",
    "StateDistribution",
    "bessel_k1",
    "expected_time_af",
    "expected_time_df",
    "expected_time_df_reduced",
    "goodput_af",
    "goodput_df",
    "goodput_single",
    "optimize_joint",
    "optimize_k",
    "optimize_rate",
    "outage_af_relay_path",
    "outage_df_links",
    "outage_single",
    "run_batch",
    "state_probs_af",
    "state_probs_df",
    "xi_k1_factor",
]

__version__ = "0.1.0"
