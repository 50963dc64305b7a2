"""Series in the subring generated over the motive ring by ``L^a T^b / (1 - L^a T^b)``.

A :class:`SeriesExpr` is a finite sum ``sum_F c_F * prod_{(a,b) in F} f(a, b)``
with ``f(a, b) = L^a T^b / (1 - L^a T^b)``, ``b >= 1``. Representations are
not unique; equality is decided by truncated expansion (see :func:`equality_degree`).
"""

from __future__ import annotations

from collections import Counter
from typing import Mapping

from . import kernels
from .errors import ParseError
from .motive import ZERO, MotiveExpr

__all__ = [
    "MAX_DEGREE",
    "SeriesExpr",
    "factor",
    "series_add",
    "series_mul",
    "series_expand",
    "series_subst_T",
    "series_limit",
    "series_equal_to_degree",
    "equality_degree",
    "series_identical",
    "first_difference",
    "series_euler",
]

MAX_DEGREE = 64


def _canon_factors(factors) -> tuple:
    fs = []
    for a, b in factors:
        a, b = int(a), int(b)
        if b < 1:
            raise ValueError(f"factor exponent b must be >= 1, got {b}")
        fs.append((a, b))
    return tuple(sorted(fs, key=lambda ab: (ab[1], ab[0])))


class SeriesExpr:
    """Immutable sum of ``coeff * product of generators`` terms."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for fs, c in items:
            c = MotiveExpr.coerce(c)
            if c.is_zero():
                continue
            key = _canon_factors(fs)
            acc[key] = acc[key] + c if key in acc else c
        self._terms = {k: acc[k] for k in sorted(acc) if not acc[k].is_zero()}

    @classmethod
    def constant(cls, c) -> "SeriesExpr":
        return cls({(): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def factor_pairs(self) -> set:
        return {ab for fs in self._terms for ab in fs}

    def __add__(self, other):
        if not isinstance(other, SeriesExpr):
            if isinstance(other, (MotiveExpr, int)):
                other = SeriesExpr.constant(other)
            else:
                return NotImplemented
        return SeriesExpr(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return SeriesExpr({fs: -c for fs, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (MotiveExpr, int)):
            other = MotiveExpr.coerce(other)
            return SeriesExpr({fs: c * other for fs, c in self._terms.items()})
        if not isinstance(other, SeriesExpr):
            return NotImplemented
        out = []
        for f1, c1 in self._terms.items():
            for f2, c2 in other._terms.items():
                out.append((f1 + f2, c1 * c2))
        return SeriesExpr(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        # equality of representations, not of series; see series_identical
        if not isinstance(other, SeriesExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def subst_T(self, c: int) -> "SeriesExpr":
        if not c:
            return self
        return SeriesExpr({tuple((a + c * b, b) for a, b in fs): co for fs, co in self._terms.items()})

    def limit(self) -> MotiveExpr:
        out = ZERO
        for fs, c in self._terms.items():
            out = out + (c if len(fs) % 2 == 0 else -c)
        return out

    def expand(self, D: int, max_degree: int | None = MAX_DEGREE) -> list:
        if D < 0:
            raise ValueError("D must be >= 0")
        if max_degree is not None and D > max_degree:
            raise ValueError(f"degree {D} exceeds the expansion cap {max_degree}")
        acc = [dict() for _ in range(D + 1)]
        for fs, coeff in self._terms.items():
            rows = kernels.expand_product(fs, D)
            cterms = coeff.terms
            for d, row in enumerate(rows):
                if not row:
                    continue
                tgt = acc[d]
                for e, n in row.items():
                    for (e0, syms), c in cterms.items():
                        k = (e0 + e, syms)
                        tgt[k] = tgt.get(k, 0) + c * n
        return [MotiveExpr(row) for row in acc]

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for fs, c in self._terms.items():
            text = c.render()
            if len(c.terms) > 1:
                text = f"({text})"
            for (a, b), k in Counter(fs).items():
                gen = _render_factor(a, b)
                text += f" * {gen}" + (f"^{k}" if k > 1 else "")
            parts.append(text)
        return " + ".join(parts)

    __str__ = render

    def __repr__(self):
        return f"SeriesExpr({self.render()!r})"

    def to_json(self) -> list:
        return [{"coeff": c.to_json(), "factors": [list(ab) for ab in fs]} for fs, c in self._terms.items()]

    @classmethod
    def from_json(cls, obj) -> "SeriesExpr":
        if not isinstance(obj, list):
            raise ParseError("series must be a list of terms")
        terms = []
        for t in obj:
            if not isinstance(t, dict) or set(t) != {"coeff", "factors"}:
                raise ParseError(f"bad series term {t!r}")
            try:
                fs = [(int(a), int(b)) for a, b in t["factors"]]
            except (TypeError, ValueError):
                raise ParseError(f"bad factor list {t['factors']!r}") from None
            terms.append((fs, MotiveExpr.from_json(t["coeff"])))
        return cls(terms)


def _render_factor(a: int, b: int) -> str:
    mono = f"T^{b}" if a == 0 else f"L^{a}*T^{b}"
    return f"({mono}/(1 - {mono}))"


def factor(a: int, b: int, coeff=1) -> SeriesExpr:
    """The single generator ``coeff * L^a T^b / (1 - L^a T^b)``."""
    return SeriesExpr({((a, b),): coeff})


def series_add(s: SeriesExpr, t: SeriesExpr) -> SeriesExpr:
    return s + t


def series_mul(s: SeriesExpr, t: SeriesExpr) -> SeriesExpr:
    return s * t


def series_expand(s: SeriesExpr, D: int, max_degree: int | None = MAX_DEGREE) -> list:
    """Exact coefficients of ``T^0 .. T^D``."""
    return s.expand(D, max_degree=max_degree)


def series_subst_T(s: SeriesExpr, c: int) -> SeriesExpr:
    """Substitute ``T -> L^c T``: factor ``(a, b)`` becomes ``(a + c*b, b)``."""
    return s.subst_T(c)


def series_limit(s: SeriesExpr) -> MotiveExpr:
    """The ``T -> infinity`` limit: each product of ``n`` generators maps to ``(-1)^n``."""
    return s.limit()


def series_equal_to_degree(s: SeriesExpr, t: SeriesExpr, D: int) -> bool:
    return first_difference(s, t, D) is None


def first_difference(s: SeriesExpr, t: SeriesExpr, D: int):
    """Smallest degree ``d <= D`` at which the coefficients differ, else ``None``."""
    a = s.expand(D, max_degree=None)
    b = t.expand(D, max_degree=None)
    for d, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return d
    return None


def equality_degree(s: SeriesExpr, t: SeriesExpr) -> int:
    """Truncation degree at which coefficient agreement forces ``s == t``.

    Over the common denominator ``Q = prod (1 - L^a T^b)^{m_ab}`` (``m_ab`` the
    largest multiplicity of ``(a, b)`` in any term) the difference has a
    numerator of ``T``-degree at most ``deg Q``, and ``Q(0) = 1``.
    """
    mult: dict = {}
    for series in (s, t):
        for fs in series.terms:
            for ab, k in Counter(fs).items():
                mult[ab] = max(mult.get(ab, 0), k)
    return sum(b * k for (_, b), k in mult.items())


def series_identical(s: SeriesExpr, t: SeriesExpr) -> bool:
    """Equality as power series, decided exactly."""
    if s == t:
        return True
    return series_equal_to_degree(s, t, equality_degree(s, t))


def series_euler(s: SeriesExpr, chi: Mapping) -> SeriesExpr:
    """Apply the Euler characteristic to coefficients and set ``L -> 1`` in generators."""
    from .motive import euler_char

    return SeriesExpr([(tuple((0, b) for _, b in fs), euler_char(c, chi)) for fs, c in s.terms.items()])
