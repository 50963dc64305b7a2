"""Point blow-ups of surface dual graphs and the "make d non-linear" procedure.

Blowing up an intersection point of ``E_i`` and ``E_j`` replaces one copy of
the edge ``(i, j)`` by a new rational vertex ``E_0`` joined to both, with
``N_0 = N_i + N_j`` and ``nu_0 = nu_i + nu_j``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Callable, Optional

from . import kernels
from .config import DualGraph, SncConfig, Stratum, Vertex, from_dual_graph, sorted_ids
from .errors import IterationCapExceeded, MissingEdge, ParseError
from .invariants import euler_dl_zeta, euler_milnor, monodromy_zeta, dl_zeta, trace_of_monodromy
from .motive import L, MotiveExpr, cover_symbol, id_key
from .report import Report
from .series import first_difference, series_identical

__all__ = [
    "BlowupStep",
    "blowup_edge",
    "blowup_step",
    "fresh_vertex_id",
    "make_d_nonlinear",
    "replay",
    "check_blowup_invariance",
    "blown_up_classes",
]


@dataclass(frozen=True)
class BlowupStep:
    edge: tuple
    new_vertex: str
    new_N: int
    new_nu: Optional[int]

    def to_json(self) -> dict:
        return {"edge": list(self.edge), "new_vertex": self.new_vertex, "new_N": self.new_N, "new_nu": self.new_nu}

    @classmethod
    def from_json(cls, obj) -> "BlowupStep":
        if not isinstance(obj, dict) or set(obj) != {"edge", "new_vertex", "new_N", "new_nu"}:
            raise ParseError(f"bad blow-up step {obj!r}", field="steps")
        return cls(tuple(sorted_ids(obj["edge"])), obj["new_vertex"], obj["new_N"], obj["new_nu"])


def fresh_vertex_id(g: DualGraph) -> str:
    """``E0`` if free, else ``E<k>`` with ``k`` one past the largest numeric suffix."""
    ids = set(g.ids)
    if "E0" not in ids:
        return "E0"
    nums = [int(m.group(1)) for v in ids if (m := re.fullmatch(r"E(\d+)", v))]
    return f"E{max(nums) + 1}"


def _additive_nu(vi: Vertex, vj: Vertex) -> Optional[int]:
    if vi.nu is None or vj.nu is None:
        return None
    return vi.nu + vj.nu


def blowup_step(g: DualGraph, e, *, nu_rule: Callable = _additive_nu, new_id: Optional[str] = None):
    """Blow up one intersection point on edge ``e``; returns ``(graph, step)``."""
    edge = sorted_ids(e)
    if len(edge) != 2 or edge not in g.edges:
        raise MissingEdge(tuple(edge))
    vi, vj = g.vertex(edge[0]), g.vertex(edge[1])
    v0 = new_id or fresh_vertex_id(g)
    if v0 in g.ids:
        raise ValueError(f"vertex id {v0!r} already in use")
    new = Vertex(v0, vi.N + vj.N, nu_rule(vi, vj), 0)
    edges = list(g.edges)
    edges.remove(edge)
    edges += [(edge[0], v0), (edge[1], v0)]
    step = BlowupStep(edge, v0, new.N, new.nu)
    return DualGraph(g.vertices + (new,), tuple(edges)), step


def blowup_edge(g: DualGraph, e) -> DualGraph:
    return blowup_step(g, e)[0]


def make_d_nonlinear(g: DualGraph, d: int, cap: Optional[int] = None):
    """Blow up linear edges until ``d`` is not X_s-linear; returns ``(graph, steps)``.

    Each round blows up the edge of smallest ``N_i + N_j`` (ties by vertex ids)
    among the edges for which ``d`` is linear.
    """
    cap = 10 * d if cap is None else cap
    from_dual_graph(g)  # validates
    N = {v.id: v.N for v in g.vertices}

    def linear(e):
        a, b = N[e[0]], N[e[1]]
        return kernels.representable([a, b], d - a - b)

    def rank(e):
        return (N[e[0]] + N[e[1]], id_key(e[0]), id_key(e[1]))

    # only the two edges at the new vertex change, so the linear set is kept incrementally
    pending = {e for e in g.distinct_edges() if linear(e)}
    steps = []
    while pending:
        if len(steps) >= cap:
            raise IterationCapExceeded(f"d={d} still linear after {cap} blow-ups")
        e = min(pending, key=rank)
        g, step = blowup_step(g, e)
        steps.append(step)
        N[step.new_vertex] = step.new_N
        if g.multiplicity(*e) == 0:
            pending.discard(e)
        for new_e in (sorted_ids((e[0], step.new_vertex)), sorted_ids((e[1], step.new_vertex))):
            if linear(new_e):
                pending.add(new_e)
    return g, steps


def replay(g: DualGraph, steps) -> DualGraph:
    """Apply recorded steps, checking that each reproduces the recorded vertex."""
    for st in steps:
        g, got = blowup_step(g, st.edge, new_id=st.new_vertex)
        if (got.new_N, got.new_nu) != (st.new_N, st.new_nu):
            raise ValueError(f"step {st} does not replay: got N={got.new_N}, nu={got.new_nu}")
    return g


def blown_up_classes(before: SncConfig, after: SncConfig, step: BlowupStep, multiplicity: int) -> SncConfig:
    """``after`` with cover classes of the new strata expressed via the blown-up point.

    With ``P`` the cover class of the centre point, the local model gives
    ``[~E_{i0}^o] = [~E_{j0}^o] = P`` and ``[~E_0^o] = (L - 1) P`` (a union of
    tori over the point). If the edge had one point ``P`` is the old pair class;
    otherwise ``P`` is a fresh symbol and the remaining pair stratum gets the
    old class minus ``P``.
    """
    i, j = step.edge
    v0 = step.new_vertex
    old = before.cover_class((i, j))
    strata = dict(after.strata)
    if multiplicity == 1:
        P = old
    else:
        P = MotiveExpr.symbol(cover_symbol(i, v0))
        s = strata[(i, j)]
        strata[(i, j)] = replace(s, cover_cls=old - P)
    for J in (sorted_ids((i, v0)), sorted_ids((j, v0))):
        strata[J] = replace(strata[J], cover_cls=P)
    strata[(v0,)] = replace(strata.get((v0,), Stratum((v0,), 0)), cover_cls=(L - 1) * P)
    return SncConfig(after.m, after.components, strata)


def _strata_chi_total(c: SncConfig) -> int:
    return sum(s.chi for s in c.strata.values())


def check_blowup_invariance(g: DualGraph, D: int, *, nu_rule: Callable = _additive_nu) -> Report:
    """Compare invariants of ``g`` with those of each single-edge blow-up.

    ``nu_rule`` exists so that tests can inject a wrong discrepancy rule.
    """
    rep = Report("invariance under point blow-ups", degree=D)
    c0 = from_dual_graph(g)
    has_nu = all(x.nu is not None for x in c0.components)
    for e in g.distinct_edges():
        tag = f"[{','.join(e)}] "
        g1, step = blowup_step(g, e, nu_rule=nu_rule)
        c1 = from_dual_graph(g1)
        bad = [d for d in range(1, D + 1) if trace_of_monodromy(c0, d) != trace_of_monodromy(c1, d)]
        rep.add(tag + f"trace_of_monodromy, d <= {D}", not bad, f"differs at d={bad[0]}" if bad else "", bad or None)
        em0, em1 = euler_milnor(c0), euler_milnor(c1)
        rep.add(tag + "euler_milnor", em0 == em1, "" if em0 == em1 else f"{em0} != {em1}")
        z0, z1 = monodromy_zeta(c0), monodromy_zeta(c1)
        rep.add(tag + "monodromy_zeta", z0 == z1, "" if z0 == z1 else f"{z0} != {z1}")
        dchi = _strata_chi_total(c1) - _strata_chi_total(c0)
        rep.add(tag + "chi(X_0) grows by 1", dchi == 1, "" if dchi == 1 else f"change {dchi}")
        if not has_nu or step.new_nu is None:
            rep.add(tag + "dl_zeta checks", True, "skipped: no nu data")
            continue
        ez0, ez1 = euler_dl_zeta(c0), euler_dl_zeta(c1)
        diff = first_difference(ez0, ez1, D)
        rep.add(
            tag + f"Euler-specialized dl_zeta, degree <= {D}",
            diff is None,
            "" if diff is None else f"first differing degree {diff}",
            diff,
        )
        c1cls = blown_up_classes(c0, c1, step, g.multiplicity(*e))
        z_before, z_after = dl_zeta(c0), dl_zeta(c1cls)
        diff = first_difference(z_before, z_after, D)
        same = diff is None and series_identical(z_before, z_after)
        rep.add(
            tag + "class-level dl_zeta",
            same,
            "" if same else f"first differing degree {diff}" if diff is not None else "differs beyond degree bound",
            diff,
        )
    return rep

