"""Closed formulas computed from snc resolution data, and their cross-identities."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .config import SncConfig, linear_witness
from .errors import DLinear, MissingNu
from .motive import ONE, ZERO, L, MotiveExpr
from .report import Report
from .series import SeriesExpr, equality_degree, first_difference, series_euler

__all__ = [
    "ZetaFactored",
    "SmoothnessReport",
    "serre_invariant",
    "trace_of_monodromy",
    "trace_table",
    "monodromy_zeta",
    "volume_coefficient",
    "volume_poincare",
    "weil_series",
    "motivic_volume",
    "euler_milnor",
    "dl_zeta",
    "dl_naive_zeta",
    "dl_nearby_cycles",
    "check_comparzeta",
    "smoothness_report",
    "trace_generating_series",
    "euler_dl_zeta",
]


@dataclass(frozen=True)
class ZetaFactored:
    """``prod_n (1 - T^n)^{e_n}`` stored as ``{n: e_n}`` with nonzero exponents."""

    factors: tuple = ()

    @classmethod
    def from_exponents(cls, exps: dict) -> "ZetaFactored":
        return cls(tuple(sorted((n, e) for n, e in exps.items() if e)))

    def as_dict(self) -> dict:
        return dict(self.factors)

    def power_series(self, D: int) -> list:
        """Integer coefficients of ``T^0 .. T^D``."""
        z = [1] + [0] * D
        for n, e in self.factors:
            for _ in range(abs(e)):
                if e > 0:
                    for d in range(D, n - 1, -1):
                        z[d] -= z[d - n]
                else:
                    for d in range(n, D + 1):
                        z[d] += z[d - n]
        return z

    def log_derivative(self, D: int) -> list:
        """Coefficients ``p_1 .. p_D`` of ``T * d/dT log(zeta)``, by Newton's identities."""
        z = self.power_series(D)
        p = [0] * (D + 1)
        for d in range(1, D + 1):
            p[d] = d * z[d] - sum(p[k] * z[d - k] for k in range(1, d))
        return p[1:]

    def render(self) -> str:
        num = [(n, e) for n, e in self.factors if e > 0]
        den = [(n, -e) for n, e in self.factors if e < 0]

        def block(items):
            parts = [f"(1 - T^{n})" + (f"^{e}" if e > 1 else "") for n, e in items]
            return "*".join(parts)

        top = block(num) or "1"
        if not den:
            return top
        bottom = block(den)
        return f"{top}/({bottom})" if len(den) > 1 else f"{top}/{bottom}"

    __str__ = render

    def to_json(self) -> dict:
        return {str(n): e for n, e in self.factors}


@dataclass(frozen=True)
class SmoothnessReport:
    trace1: int
    smooth_criterion: bool

    def to_json(self) -> dict:
        return {"trace1": self.trace1, "smooth_criterion": self.smooth_criterion}


def _lm1(k: int) -> MotiveExpr:
    return (L - 1) ** k


def _1ml(k: int) -> MotiveExpr:
    return (ONE - L) ** k


def serre_invariant(c: SncConfig, d: int) -> MotiveExpr:
    """Canonical representative ``sum_{N_i | d} [~E_i^o]`` of the Serre invariant.

    Raises :class:`DLinear` when ``d`` is X_s-linear; the closed form needs
    a resolution on which ``d`` is not linear (see ``blowup.make_d_nonlinear``).
    """
    witness = linear_witness(c, d)
    if witness is not None:
        raise DLinear(d, witness)
    out = ZERO
    for comp in c.components:
        if d % comp.N == 0:
            out = out + c.cover_class((comp.id,))
    return out


def trace_of_monodromy(c: SncConfig, d: int) -> int:
    return sum(comp.N * c.chi((comp.id,)) for comp in c.components if d % comp.N == 0)


def trace_table(c: SncConfig, D: int) -> list:
    return [(d, trace_of_monodromy(c, d)) for d in range(1, D + 1)]


def monodromy_zeta(c: SncConfig) -> ZetaFactored:
    exps: dict = {}
    for comp in c.components:
        chi = c.chi((comp.id,))
        if chi:
            exps[comp.N] = exps.get(comp.N, 0) - chi
    return ZetaFactored.from_exponents(exps)


def _positive_solutions(Ns, d):
    # k_i >= 1 with sum k_i N_i == d, by depth-first search
    n = len(Ns)
    tail = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        tail[i] = tail[i + 1] + Ns[i]
    ks = [0] * n

    def rec(i, rest):
        if i == n:
            if rest == 0:
                yield tuple(ks)
            return
        k = 1
        while k * Ns[i] + tail[i + 1] <= rest:
            ks[i] = k
            yield from rec(i + 1, rest - k * Ns[i])
            k += 1

    yield from rec(0, d)


def volume_coefficient(c: SncConfig, d: int) -> MotiveExpr:
    """Motivic volume of the degree-``d`` ramification, by direct enumeration."""
    out = ZERO
    for s in c.nonempty_strata():
        comps = [c.component(i) for i in s.J]
        Ns = [x.N for x in comps]
        mus = [x.form_order for x in comps]
        inner = ZERO
        for ks in _positive_solutions(Ns, d):
            inner = inner + MotiveExpr.lpow(-sum(k * mu for k, mu in zip(ks, mus)))
        if inner:
            out = out + _lm1(len(s.J) - 1) * c.cover_class(s.J) * inner
    return out.mul_lpow(-c.m)


def _stratum_series(c: SncConfig, exponent, weight, prefactor_shift: int, open_classes=False) -> SeriesExpr:
    terms = []
    for s in c.nonempty_strata():
        comps = [c.component(i) for i in s.J]
        fs = tuple((exponent(x), x.N) for x in comps)
        cls = c.open_class(s.J) if open_classes else c.cover_class(s.J)
        terms.append((fs, (weight(len(s.J)) * cls).mul_lpow(prefactor_shift)))
    return SeriesExpr(terms)


def volume_poincare(c: SncConfig) -> SeriesExpr:
    return _stratum_series(c, lambda x: -x.form_order, lambda n: _lm1(n - 1), -c.m)


def _require_nu(c: SncConfig) -> None:
    missing = [x.id for x in c.components if x.nu is None]
    if missing:
        raise MissingNu(f"components without nu: {', '.join(missing)}")


def weil_series(c: SncConfig) -> SeriesExpr:
    """Volume Poincare series of the Gelfand-Leray form (``mu = nu - N``)."""
    _require_nu(c)
    return _stratum_series(c, lambda x: x.N - x.nu, lambda n: _lm1(n - 1), -c.m)


def motivic_volume(c: SncConfig) -> MotiveExpr:
    out = ZERO
    for s in c.nonempty_strata():
        out = out + _1ml(len(s.J) - 1) * c.cover_class(s.J)
    return out.mul_lpow(-c.m)


def euler_milnor(c: SncConfig) -> int:
    return sum(comp.N * c.chi((comp.id,)) for comp in c.components)


def dl_zeta(c: SncConfig) -> SeriesExpr:
    _require_nu(c)
    return _stratum_series(c, lambda x: -x.nu, lambda n: _lm1(n - 1), 0)


def dl_naive_zeta(c: SncConfig) -> SeriesExpr:
    _require_nu(c)
    return _stratum_series(c, lambda x: -x.nu, _lm1, 0, open_classes=True)


def dl_nearby_cycles(c: SncConfig) -> MotiveExpr:
    _require_nu(c)
    out = ZERO
    for s in c.nonempty_strata():
        out = out + _1ml(len(s.J) - 1) * c.cover_class(s.J)
    return out


def trace_generating_series(c: SncConfig) -> SeriesExpr:
    """``sum_i N_i chi(E_i^o) T^{N_i} / (1 - T^{N_i})``."""
    return SeriesExpr([(((0, x.N),), x.N * c.chi((x.id,))) for x in c.components])


def check_comparzeta(c: SncConfig, D: int, dl_config: Optional[SncConfig] = None) -> Report:
    """Check the Weil series / motivic zeta and motivic volume / nearby cycles comparisons.

    ``dl_config`` supplies the data for the Denef-Loeser side (defaults to ``c``);
    passing a perturbed copy is how the negative control is run.
    """
    other = c if dl_config is None else dl_config
    rep = Report("comparison with the Denef-Loeser zeta function", degree=D)
    S = weil_series(c)
    rhs = dl_zeta(other).subst_T(1) * MotiveExpr.lpow(-c.m)
    rep.add("weil_series == L^-m * Z(L T) (representations)", S == rhs)
    diff = first_difference(S, rhs, D)
    rep.add(
        f"weil_series == L^-m * Z(L T) (coefficients to degree {D})",
        diff is None,
        "" if diff is None else f"first differing degree {diff}",
        diff,
    )
    bound = equality_degree(S, rhs)
    if bound > D:
        diff_full = first_difference(S, rhs, bound)
        rep.add(
            f"weil_series == L^-m * Z(L T) (decisive degree {bound})",
            diff_full is None,
            "" if diff_full is None else f"first differing degree {diff_full}",
            diff_full,
        )
    vol = motivic_volume(c)
    cyc = dl_nearby_cycles(other).mul_lpow(-c.m)
    rep.add("motivic_volume == L^-m * S_f", vol == cyc, "" if vol == cyc else f"{vol} != {cyc}")
    lim = (-S).limit()
    rep.add("lim(-weil_series) == motivic_volume", lim == vol, "" if lim == vol else f"{lim} != {vol}")
    return rep


def smoothness_report(c: SncConfig) -> SmoothnessReport:
    t = trace_of_monodromy(c, 1)
    return SmoothnessReport(t, t != 0)


def euler_dl_zeta(c: SncConfig) -> SeriesExpr:
    """``dl_zeta`` after ``L -> 1`` and ``[~E_J^o] -> m_J chi(E_J^o)``."""
    return series_euler(dl_zeta(c), c.chi_table())
