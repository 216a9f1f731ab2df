"""Blockwise Alperin weight counts for finite general linear and unitary
groups in non-defining characteristic, with a matrix group oracle."""

from .arith import InstanceParams, e_gamma, make_params
from .errors import (
    BlockweightsError,
    ConfigurationError,
    DomainError,
    InvariantViolationError,
    UnsupportedModeError,
)
from .oracle import cross_check
from .semisimple import (
    FrobeniusOrbit,
    RootLabel,
    center_elements,
    enumerate_ellprime_orbits,
    orbit_of,
    root_label,
)
from .symbols import (
    AdmissibleSymbol,
    BlockSymbol,
    SlBlockReport,
    WeightSymbol,
    admissible_symbol,
    block_of,
    block_symbol,
    enumerate_admissible_symbols,
    enumerate_block_symbols,
    from_weight_symbol,
    kappa,
    kappa_block,
    kappa_ell,
    kappa_ellprime,
    kappa_weight,
    sl_block_report,
    symbols_in_block,
    to_weight_symbol,
    weight_symbol,
    weight_symbols_in_block,
    z_act,
)
from .verify import (
    InstanceReport,
    reports_to_csv,
    reports_to_json,
    run_grid,
    run_instance,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleSymbol",
    "BlockSymbol",
    "BlockweightsError",
    "ConfigurationError",
    "DomainError",
    "FrobeniusOrbit",
    "InstanceParams",
    "InstanceReport",
    "InvariantViolationError",
    "RootLabel",
    "SlBlockReport",
    "UnsupportedModeError",
    "WeightSymbol",
    "admissible_symbol",
    "block_of",
    "block_symbol",
    "center_elements",
    "cross_check",
    "e_gamma",
    "enumerate_admissible_symbols",
    "enumerate_block_symbols",
    "enumerate_ellprime_orbits",
    "from_weight_symbol",
    "kappa",
    "kappa_block",
    "kappa_ell",
    "kappa_ellprime",
    "kappa_weight",
    "make_params",
    "orbit_of",
    "reports_to_csv",
    "reports_to_json",
    "root_label",
    "run_grid",
    "run_instance",
    "sl_block_report",
    "symbols_in_block",
    "to_weight_symbol",
    "weight_symbol",
    "weight_symbols_in_block",
    "z_act",
]
