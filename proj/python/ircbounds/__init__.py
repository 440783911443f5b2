"""Rate-region bounds for the two-user Gaussian interference relay channel.

The extension module carries the actual machinery: outer bounds (closed form
and correlated), the relay decoding and compress-forward inner bounds, the
relay-free baseline, region geometry, seeded gap audits, and the exact
inequality-elimination checks.
"""

from ._core import (
    ChannelSnr,
    RateRegion,
    cap,
    cf_gap_objective,
    cf_region,
    cf_terms,
    db_to_lin,
    decorr_ratio_check,
    df_best_region,
    df_full_region,
    df_partial_region,
    family_gap_per_dim,
    fme_builtin_names,
    fme_check,
    gap_per_dim,
    hk_region,
    hull_union,
    interference_det,
    lin_to_db,
    outer_region,
    outer_region_best,
    outer_region_correlated,
    run_audit,
    run_sweep,
    sweep_row,
)

__version__ = "0.1.0"

__all__ = [
    "ChannelSnr",
    "RateRegion",
    "cap",
    "cf_gap_objective",
    "cf_region",
    "cf_terms",
    "channel_from_db",
    "db_to_lin",
    "decorr_ratio_check",
    "df_best_region",
    "df_full_region",
    "df_partial_region",
    "family_gap_per_dim",
    "fme_builtin_names",
    "fme_check",
    "gap_per_dim",
    "hk_region",
    "hull_union",
    "interference_det",
    "lin_to_db",
    "outer_region",
    "outer_region_best",
    "outer_region_correlated",
    "run_audit",
    "run_sweep",
    "sweep_row",
]


def channel_from_db(s11=0.0, s12=0.0, s13=0.0, s21=0.0, s22=0.0, s23=0.0,
                    s31=0.0, sign_parity=True):
    """Build a ChannelSnr from per-link SNRs given in dB."""
    return ChannelSnr(
        s11=db_to_lin(s11),
        s12=db_to_lin(s12),
        s13=db_to_lin(s13),
        s21=db_to_lin(s21),
        s22=db_to_lin(s22),
        s23=db_to_lin(s23),
        s31=db_to_lin(s31),
        sign_parity=sign_parity,
    )
