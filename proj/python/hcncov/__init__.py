"""Two-tier downlink coverage with exclusion-zone small cells.

Thin wrapper over the compiled core: network parameter presets,
serving-distance laws, analytic SIR coverage bounds/approximations,
a Monte Carlo cross-check, and the end-to-end CSV runner.
"""

from ._core import (
    ConfigError,
    CoverageCurve,
    InvalidParamsError,
    IoError,
    NetworkParams,
    conditional_pdf_z2hat,
    conditional_survival_z2hat,
    db_to_linear,
    default_gamma_grid_db,
    linear_to_db,
    macro_coverage_curves,
    macro_coverage_lower,
    macro_coverage_upper,
    marginal_cdf_z2hat,
    marginal_pdf_z2hat,
    pdf_z1,
    run_config_file,
    run_preset,
    sample_z2hat,
    setup1,
    setup2,
    simulate_coverage,
    simulate_distances,
    small_coverage_all_holes,
    small_coverage_closest_hole,
    small_coverage_curves,
    validate_params,
)

__all__ = [
    "ConfigError",
    "CoverageCurve",
    "InvalidParamsError",
    "IoError",
    "NetworkParams",
    "conditional_pdf_z2hat",
    "conditional_survival_z2hat",
    "db_to_linear",
    "default_gamma_grid_db",
    "linear_to_db",
    "macro_coverage_curves",
    "macro_coverage_lower",
    "macro_coverage_upper",
    "marginal_cdf_z2hat",
    "marginal_pdf_z2hat",
    "pdf_z1",
    "run_config_file",
    "run_preset",
    "sample_z2hat",
    "setup1",
    "setup2",
    "simulate_coverage",
    "simulate_distances",
    "small_coverage_all_holes",
    "small_coverage_closest_hole",
    "small_coverage_curves",
    "validate_params",
]

__version__ = "0.1.0"
