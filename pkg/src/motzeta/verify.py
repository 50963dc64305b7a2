"""The cross-identity suite run by ``motzeta verify``."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from math import lcm
from typing import Union

from .blowup import check_blowup_invariance
from .config import DualGraph, SncConfig, from_dual_graph, is_Xs_linear, validate
from .errors import DLinear
from .invariants import (
    check_comparzeta,
    euler_dl_zeta,
    euler_milnor,
    monodromy_zeta,
    motivic_volume,
    serre_invariant,
    trace_of_monodromy,
    volume_coefficient,
    volume_poincare,
    weil_series,
)
from .report import Report

__all__ = ["verify", "verify_many"]


def _has_mu(c: SncConfig) -> bool:
    return all(x.mu is not None or x.nu is not None for x in c.components)


def verify(obj: Union[SncConfig, DualGraph], D: int = 20) -> Report:
    graph = obj if isinstance(obj, DualGraph) else None
    c = from_dual_graph(obj) if graph is not None else obj
    rep = Report("cross-identity suite", degree=D)
    viol = validate(c)
    rep.add("config valid", not viol, "; ".join(map(str, viol)))
    if viol:
        return rep

    traces = {d: trace_of_monodromy(c, d) for d in range(1, D + 1)}

    bad = []
    for d in range(1, D + 1):
        if is_Xs_linear(c, d):
            continue
        try:
            if c.euler(serre_invariant(c, d)) != traces[d]:
                bad.append(d)
        except DLinear:
            bad.append(d)
    rep.add("euler_char(serre_invariant) == trace (non-linear d)", not bad, f"d={bad}" if bad else "", bad or None)

    logd = monodromy_zeta(c).log_derivative(D)
    bad = [d for d in range(1, D + 1) if logd[d - 1] != traces[d]]
    rep.add("T dlog(monodromy_zeta) reproduces traces", not bad, f"d={bad}" if bad else "", bad or None)

    period = lcm(*[x.N for x in c.components]) if c.components else 1
    bad = [d for d in range(1, D + 1) if trace_of_monodromy(c, d + period) != traces[d]]
    rep.add(f"trace periodic with period {period}", not bad, f"d={bad}" if bad else "", bad or None)

    em = euler_milnor(c)
    ev = c.euler(motivic_volume(c))
    rep.add("euler_char(motivic_volume) == sum N_i chi(E_i^o)", ev == em, "" if ev == em else f"{ev} != {em}")

    if _has_mu(c):
        coeffs = volume_poincare(c).expand(D, max_degree=None)
        bad = [d for d in range(1, D + 1) if coeffs[d] != volume_coefficient(c, d)]
        rep.add("volume_poincare expansion == volume_coefficient", not bad, f"d={bad}" if bad else "", bad or None)

    if all(x.nu is not None for x in c.components):
        lim = (-weil_series(c)).limit()
        vol = motivic_volume(c)
        rep.add("lim(-weil_series) == motivic_volume", lim == vol, "" if lim == vol else f"{lim} != {vol}")
        ez = euler_dl_zeta(c).expand(D, max_degree=None)
        bad = [d for d in range(1, D + 1) if ez[d] != traces[d]]
        rep.add("Euler-specialized dl_zeta coefficients == traces", not bad, f"d={bad}" if bad else "", bad or None)
        rep.extend(check_comparzeta(c, D), prefix="DL comparison: ")

    if graph is not None:
        rep.extend(check_blowup_invariance(graph, D), prefix="blowup: ")
    return rep


def verify_many(objs, D: int = 20, workers: int = 4) -> list:
    """Run :func:`verify` on several configs concurrently; results keep input order."""
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda o: verify(o, D), objs))
