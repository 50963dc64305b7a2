"""Resolution data: components ``(N_i, nu_i)``, strata ``E_J^o`` and dual graphs.

Strata are stored sparsely. A stratum that is absent, or declared with
``chi == 0`` and no class information, is treated as empty. Pass
``nonempty=True`` (or an explicit class) to keep a ``chi == 0`` stratum, such as the
complement of two points in a rational curve.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Optional

from . import kernels
from .errors import MissingMu, MissingNu, MissingSymbol, UnknownComponent, ValidationError
from .motive import MotiveExpr, cover_symbol, euler_char, id_key, open_symbol

__all__ = [
    "Component",
    "Stratum",
    "SncConfig",
    "Vertex",
    "DualGraph",
    "Violation",
    "validate",
    "from_dual_graph",
    "cover_euler",
    "is_J_linear",
    "is_Xs_linear",
    "linear_witness",
    "sorted_ids",
]


def sorted_ids(ids: Iterable[str]) -> tuple:
    return tuple(sorted(ids, key=id_key))


@dataclass(frozen=True)
class Violation:
    field: str
    rule: str
    detail: str = ""

    def __str__(self):
        return f"{self.field}: {self.rule}" + (f" ({self.detail})" if self.detail else "")


@dataclass(frozen=True)
class Component:
    id: str
    N: int
    nu: Optional[int] = None
    mu: Optional[int] = None

    @property
    def form_order(self) -> int:
        """``mu_i``: the given value, or ``nu_i - N_i`` for the Gelfand-Leray form."""
        if self.mu is not None:
            return self.mu
        if self.nu is None:
            raise MissingMu(f"component {self.id!r} has neither mu nor nu")
        return self.nu - self.N

    def require_nu(self) -> int:
        if self.nu is None:
            raise MissingNu(f"component {self.id!r} has no nu")
        return self.nu


@dataclass(frozen=True)
class Stratum:
    J: tuple
    chi: int
    cls: Optional[MotiveExpr] = None
    cover_cls: Optional[MotiveExpr] = None
    nonempty: bool = False

    def __post_init__(self):
        object.__setattr__(self, "J", sorted_ids(self.J))

    @property
    def is_empty(self) -> bool:
        return self.chi == 0 and self.cls is None and self.cover_cls is None and not self.nonempty


@dataclass(frozen=True)
class SncConfig:
    m: int
    components: tuple
    strata: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        strata = self.strata
        if not isinstance(strata, dict):
            strata = {s.J: s for s in strata}
        strata = {sorted_ids(J): s for J, s in strata.items()}
        ordered = sorted(strata, key=lambda J: (len(J), tuple(id_key(i) for i in J)))
        object.__setattr__(self, "strata", {J: strata[J] for J in ordered})

    def __hash__(self):
        return hash((self.m, self.components, tuple(self.strata.items())))

    # lookups

    @property
    def ids(self) -> tuple:
        return tuple(c.id for c in self.components)

    def component(self, cid: str) -> Component:
        for c in self.components:
            if c.id == cid:
                return c
        raise UnknownComponent(cid)

    def N(self, cid: str) -> int:
        return self.component(cid).N

    def m_J(self, J) -> int:
        g = 0
        for i in J:
            g = gcd(g, self.N(i))
        return g

    def stratum(self, J) -> Optional[Stratum]:
        return self.strata.get(sorted_ids(J))

    def nonempty_strata(self) -> list:
        return [s for s in self.strata.values() if not s.is_empty]

    def chi(self, J) -> int:
        s = self.stratum(J)
        return 0 if s is None else s.chi

    def cover_class(self, J) -> MotiveExpr:
        """``[~E_J^o]``: the supplied class, else an opaque symbol (zero if empty)."""
        s = self.stratum(J)
        if s is None or s.is_empty:
            return MotiveExpr.const(0)
        if s.cover_cls is not None:
            return s.cover_cls
        return MotiveExpr.symbol(cover_symbol(*s.J))

    def open_class(self, J) -> MotiveExpr:
        s = self.stratum(J)
        if s is None or s.is_empty:
            return MotiveExpr.const(0)
        if s.cls is not None:
            return s.cls
        return MotiveExpr.symbol(open_symbol(*s.J))

    def chi_table(self) -> dict:
        """Euler values of the default symbols: ``chi([~E_J^o]) = m_J * chi(E_J^o)``."""
        table = {}
        for s in self.strata.values():
            table[open_symbol(*s.J)] = s.chi
            table[cover_symbol(*s.J)] = self.m_J(s.J) * s.chi
        return table

    def euler(self, x: MotiveExpr) -> int:
        return euler_char(x, self.chi_table())

    def with_components(self, components) -> "SncConfig":
        return SncConfig(self.m, tuple(components), dict(self.strata))


def validate(c: SncConfig) -> list:
    """All invariant violations of ``c``; empty when the config is sound."""
    out = []
    if not isinstance(c.m, int) or c.m < 0:
        out.append(Violation("m", "m ≥ 0", repr(c.m)))
    seen = set()
    for comp in c.components:
        f = f"components[{comp.id}]"
        if comp.id in seen:
            out.append(Violation(f, "unique component ids"))
        seen.add(comp.id)
        if not isinstance(comp.N, int) or comp.N < 1:
            out.append(Violation(f + ".N", "N ≥ 1", repr(comp.N)))
        if comp.nu is not None and (not isinstance(comp.nu, int) or comp.nu < 1):
            out.append(Violation(f + ".nu", "nu ≥ 1", repr(comp.nu)))
        if comp.nu is not None and comp.mu is not None and isinstance(comp.N, int):
            if comp.mu != comp.nu - comp.N:
                out.append(Violation(f + ".mu", "mu = nu − N", f"mu={comp.mu}, nu={comp.nu}, N={comp.N}"))
    table = None
    for J, s in c.strata.items():
        f = f"strata[{','.join(J)}]"
        if not J:
            out.append(Violation(f, "J nonempty"))
            continue
        unknown = [i for i in J if i not in seen]
        if unknown:
            out.append(Violation(f, "J ⊂ declared components", ",".join(unknown)))
        if isinstance(c.m, int) and len(J) > c.m + 1:
            out.append(Violation(f, "|J| ≤ m+1", f"|J|={len(J)}, m={c.m}"))
        if not isinstance(s.chi, int):
            out.append(Violation(f + ".chi", "chi integer", repr(s.chi)))
        if unknown or not isinstance(s.chi, int):
            continue
        if table is None and (s.cls is not None or s.cover_cls is not None):
            table = c.chi_table()
        for name, cls, expected in (("cls", s.cls, s.chi), ("cover_cls", s.cover_cls, c.m_J(J) * s.chi)):
            if cls is None:
                continue
            try:
                got = euler_char(cls, table)
            except MissingSymbol:
                continue
            if got != expected:
                out.append(Violation(f"{f}.{name}", "euler_char(class) = chi", f"{got} != {expected}"))
    return out


def is_J_linear(c: SncConfig, J, d: int) -> bool:
    """Whether ``d = sum_j alpha_j N_j`` with every ``alpha_j >= 1``."""
    Ns = [c.N(i) for i in J]
    if not Ns:
        raise ValueError("J must be nonempty")
    return kernels.representable(Ns, d - sum(Ns))


def linear_witness(c: SncConfig, d: int):
    """First nonempty stratum with ``|J| > 1`` for which ``d`` is linear, else ``None``."""
    for s in c.nonempty_strata():
        if len(s.J) > 1 and is_J_linear(c, s.J, d):
            return s.J
    return None


def is_Xs_linear(c: SncConfig, d: int) -> bool:
    return linear_witness(c, d) is not None


def cover_euler(c: SncConfig, J) -> int:
    """``chi(~E_J^o) = m_J * chi(E_J^o)`` (zero for an absent stratum)."""
    J = sorted_ids(J)
    if not J:
        raise ValueError("J must be nonempty")
    for i in J:
        c.component(i)
    return c.m_J(J) * c.chi(J)


# surface dual graphs


@dataclass(frozen=True)
class Vertex:
    id: str
    N: int
    nu: Optional[int]
    chi_open: int


@dataclass(frozen=True)
class DualGraph:
    """Curve configuration on a surface; each edge is one intersection point."""

    vertices: tuple
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        edges = tuple(sorted((tuple(sorted_ids(e)) for e in self.edges), key=lambda e: (id_key(e[0]), id_key(e[1]))))
        object.__setattr__(self, "edges", edges)

    @property
    def ids(self) -> tuple:
        return tuple(v.id for v in self.vertices)

    def vertex(self, vid: str) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise UnknownComponent(vid)

    def multiplicity(self, i: str, j: str) -> int:
        e = sorted_ids((i, j))
        return sum(1 for x in self.edges if x == e)

    def distinct_edges(self) -> list:
        return list(dict.fromkeys(self.edges))

    def problems(self) -> list:
        out = []
        ids = [v.id for v in self.vertices]
        for vid, n in Counter(ids).items():
            if n > 1:
                out.append(Violation(f"vertices[{vid}]", "unique vertex ids"))
        known = set(ids)
        for e in self.edges:
            if len(e) != 2 or e[0] == e[1]:
                out.append(Violation(f"edges[{','.join(e)}]", "edge joins two distinct vertices"))
            elif not set(e) <= known:
                out.append(Violation(f"edges[{','.join(e)}]", "edge endpoints declared"))
        return out


def from_dual_graph(g: DualGraph) -> SncConfig:
    probs = g.problems()
    if probs:
        raise ValidationError(probs)
    comps = tuple(Component(v.id, v.N, v.nu) for v in g.vertices)
    strata = {(v.id,): Stratum((v.id,), v.chi_open) for v in g.vertices}
    for e, n in Counter(g.edges).items():
        strata[e] = Stratum(e, n)
    c = SncConfig(1, comps, strata)
    viol = validate(c)
    if viol:
        raise ValidationError(viol)
    return c
