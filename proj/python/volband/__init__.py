"""Bayesian volatility band estimation for discretely observed diffusions."""

from ._volband import (
    BinLayout,
    ChainOutput,
    DataError,
    IncrementSet,
    NumericError,
    ObservationRecord,
    PosteriorSummary,
    __version__,
    bin_increments,
    blocks_volatility,
    build_bin_layout,
    build_layout_with_bin_count,
    compute_increments,
    fit_igmc,
    fit_iig,
    log_pseudo_likelihood,
    log_transform,
    make_observation_record,
    read_observation_csv,
    simulate_cir,
    simulate_path,
    subsample,
    summarize,
    to_returns,
    write_band_csv,
    write_observation_csv,
)

__all__ = [
    "BinLayout",
    "ChainOutput",
    "DataError",
    "IncrementSet",
    "NumericError",
    "ObservationRecord",
    "PosteriorSummary",
    "__version__",
    "bin_increments",
    "blocks_volatility",
    "build_bin_layout",
    "build_layout_with_bin_count",
    "compute_increments",
    "fit_igmc",
    "fit_iig",
    "log_pseudo_likelihood",
    "log_transform",
    "make_observation_record",
    "read_observation_csv",
    "simulate_cir",
    "simulate_path",
    "subsample",
    "summarize",
    "to_returns",
    "write_band_csv",
    "write_observation_csv",
]
