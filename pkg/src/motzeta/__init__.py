"""Exact motivic invariants of strict normal crossings resolution data."""

__version__ = "0.1.0"

from .kernels import BACKEND
from .motive import L, ONE, ZERO, MotiveExpr, StratumSymbol, cover_symbol, euler_char, open_symbol, specialize
from .series import SeriesExpr, factor, series_expand, series_identical, series_limit, series_subst_T
from .config import Component, DualGraph, SncConfig, Stratum, Vertex, from_dual_graph, validate
from .invariants import (
    ZetaFactored,
    check_comparzeta,
    dl_naive_zeta,
    dl_nearby_cycles,
    dl_zeta,
    euler_milnor,
    monodromy_zeta,
    motivic_volume,
    serre_invariant,
    smoothness_report,
    trace_of_monodromy,
    volume_coefficient,
    volume_poincare,
    weil_series,
)
from .blowup import blowup_edge, check_blowup_invariance, make_d_nonlinear
from .presets import preset
from .io import parse_config, render_config
