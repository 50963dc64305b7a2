"""Exact arithmetic in the localized Grothendieck ring with opaque stratum symbols.

An element is a finite integer combination of monomials ``L^e * S_1 * ... * S_k``
where ``L`` is the (invertible) class of the affine line and the ``S_i`` are
symbols for strata ``[E_J^o]`` or their Kummer covers ``[~E_J^o]``.
"""

from __future__ import annotations

import enum
import functools
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .errors import MissingSymbol, ParseError

__all__ = [
    "SymbolKind",
    "StratumSymbol",
    "MotiveExpr",
    "ZERO",
    "ONE",
    "L",
    "id_key",
    "open_symbol",
    "cover_symbol",
    "motive_add",
    "motive_mul",
    "specialize",
    "euler_char",
]

_DIGITS = re.compile(r"(\d+)")


@functools.lru_cache(maxsize=4096)
def id_key(token: str):
    """Natural sort key for component ids, so that ``E2 < E10``."""
    return tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in _DIGITS.split(token) if p)


def _render_id(token: str) -> str:
    m = re.fullmatch(r"E(\d+)", token)
    return m.group(1) if m else token


class SymbolKind(enum.Enum):
    OPEN_STRATUM = "open"
    COVER_STRATUM = "cover"


@dataclass(frozen=True)
class StratumSymbol:
    kind: SymbolKind
    index_set: tuple

    def __post_init__(self):
        ids = tuple(self.index_set)
        if not ids:
            raise ValueError("index_set must be nonempty")
        ordered = tuple(sorted(set(ids), key=id_key))
        if len(ordered) != len(ids):
            raise ValueError(f"index_set has repeated ids: {ids}")
        object.__setattr__(self, "index_set", ordered)

    @property
    def sort_key(self):
        return (tuple(id_key(i) for i in self.index_set), self.kind.value)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def render(self) -> str:
        tilde = "~" if self.kind is SymbolKind.COVER_STRATUM else ""
        return f"[{tilde}E_{{{','.join(_render_id(i) for i in self.index_set)}}}^o]"

    __str__ = render

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "J": list(self.index_set)}

    @classmethod
    def from_json(cls, obj) -> "StratumSymbol":
        try:
            return cls(SymbolKind(obj["kind"]), tuple(obj["J"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad symbol {obj!r}: {exc}", field="symbols") from None


def open_symbol(*ids) -> StratumSymbol:
    return StratumSymbol(SymbolKind.OPEN_STRATUM, tuple(ids))


def cover_symbol(*ids) -> StratumSymbol:
    return StratumSymbol(SymbolKind.COVER_STRATUM, tuple(ids))


def _mono_key(mono):
    e, syms = mono
    return (e, tuple(s.sort_key for s in syms))


def _merge_syms(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, key=lambda s: s.sort_key))


Coercible = Union["MotiveExpr", int]


class MotiveExpr:
    """Immutable element of the ring; terms are kept in canonical form.

    A monomial is a pair ``(e, symbols)`` with ``symbols`` a sorted tuple
    (a multiset) of :class:`StratumSymbol`.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (e, syms), c in items:
            if not c:
                continue
            key = (int(e), tuple(sorted(syms, key=lambda s: s.sort_key)))
            acc[key] = acc.get(key, 0) + c
        self._terms = {k: acc[k] for k in sorted(acc, key=_mono_key) if acc[k]}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MotiveExpr":
        # terms already merged and nonzero; only ordering is re-established
        obj = cls.__new__(cls)
        obj._terms = {k: terms[k] for k in sorted(terms, key=_mono_key)}
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def const(cls, n: int) -> "MotiveExpr":
        return cls._raw({(0, ()): n} if n else {})

    @classmethod
    def lpow(cls, e: int = 1, coeff: int = 1) -> "MotiveExpr":
        return cls._raw({(e, ()): coeff} if coeff else {})

    @classmethod
    def symbol(cls, sym: StratumSymbol) -> "MotiveExpr":
        return cls._raw({(0, (sym,)): 1})

    @classmethod
    def coerce(cls, x: Coercible) -> "MotiveExpr":
        if isinstance(x, MotiveExpr):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to MotiveExpr")

    def normalize(self) -> "MotiveExpr":
        return MotiveExpr(self._terms)

    # inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def symbols(self) -> set:
        return {s for (_, syms) in self._terms for s in syms}

    def is_laurent(self) -> bool:
        """True when no stratum symbol occurs."""
        return all(not syms for (_, syms) in self._terms)

    def laurent_coeffs(self) -> dict:
        if not self.is_laurent():
            raise ValueError("expression contains stratum symbols")
        return {e: c for (e, _), c in self._terms.items()}

    # arithmetic

    def __add__(self, other):
        try:
            other = MotiveExpr.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        return MotiveExpr._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return MotiveExpr._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = MotiveExpr.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return MotiveExpr.coerce(other) - self

    def __mul__(self, other):
        try:
            other = MotiveExpr.coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict = {}
        for (e1, s1), c1 in self._terms.items():
            for (e2, s2), c2 in other._terms.items():
                k = (e1 + e2, _merge_syms(s1, s2))
                acc[k] = acc.get(k, 0) + c1 * c2
        return MotiveExpr._raw({k: v for k, v in acc.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) == 1:
                ((e, syms), c), = self._terms.items()
                if not syms and c in (1, -1):
                    return MotiveExpr._raw({(e * n, ()): c ** (-n)})
            raise ValueError("only signed powers of L are invertible")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_lpow(self, e: int) -> "MotiveExpr":
        """Multiply by ``L^e`` (a cheap shift)."""
        if not e:
            return self
        return MotiveExpr._raw({(k[0] + e, k[1]): c for k, c in self._terms.items()})

    # comparison

    def __eq__(self, other):
        if isinstance(other, int):
            other = MotiveExpr.const(other)
        if not isinstance(other, MotiveExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # evaluation

    def substitute(self, mapping: Mapping) -> "MotiveExpr":
        """Replace symbols by expressions; unmapped symbols stay as they are."""
        out = ZERO
        for (e, syms), c in self._terms.items():
            term = MotiveExpr._raw({(e, ()): c})
            kept = []
            for s in syms:
                if s in mapping:
                    term = term * MotiveExpr.coerce(mapping[s])
                else:
                    kept.append(s)
            if kept:
                term = term * MotiveExpr._raw({(0, tuple(kept)): 1})
            out = out + term
        return out

    # text / json

    def render(self) -> str:
        if not self._terms:
            return "0"
        items = sorted(self._terms.items(), key=lambda kv: (-kv[0][0], tuple(s.sort_key for s in kv[0][1])))
        out = []
        for idx, ((e, syms), c) in enumerate(items):
            factors = []
            if e:
                factors.append(f"L^{e}")
            for s, k in Counter(syms).items():
                factors.append(s.render() + (f"^{k}" if k > 1 else ""))
            mag = abs(c)
            body = "*".join(factors)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if idx == 0:
                out.append(("-" if c < 0 else "") + text)
            else:
                out.append((" - " if c < 0 else " + ") + text)
        return "".join(out)

    __str__ = render

    def __repr__(self):
        return f"MotiveExpr({self.render()!r})"

    def to_json(self) -> list:
        return [
            {"coeff": c, "L": e, "symbols": [s.to_json() for s in syms]}
            for (e, syms), c in self._terms.items()
        ]

    @classmethod
    def from_json(cls, obj) -> "MotiveExpr":
        if isinstance(obj, int) and not isinstance(obj, bool):
            return cls.const(obj)
        if not isinstance(obj, list):
            raise ParseError("class must be an integer or a list of terms")
        terms = []
        for t in obj:
            if not isinstance(t, dict) or set(t) - {"coeff", "L", "symbols"}:
                raise ParseError(f"bad term {t!r}")
            coeff = t.get("coeff", 1)
            e = t.get("L", 0)
            if not isinstance(coeff, int) or not isinstance(e, int):
                raise ParseError(f"bad term {t!r}")
            syms = tuple(StratumSymbol.from_json(s) for s in t.get("symbols", []))
            terms.append(((e, syms), coeff))
        return cls(terms)


ZERO = MotiveExpr._raw({})
ONE = MotiveExpr._raw({(0, ()): 1})
L = MotiveExpr._raw({(1, ()): 1})


def motive_add(a: MotiveExpr, b: MotiveExpr) -> MotiveExpr:
    return a + b


def motive_mul(a: MotiveExpr, b: MotiveExpr) -> MotiveExpr:
    return a * b


def specialize(x: MotiveExpr, assignment: Mapping) -> MotiveExpr:
    """Evaluate symbols to Laurent polynomials in ``L``; ``L`` stays ``L``.

    Values of ``assignment`` may be ints or symbol-free :class:`MotiveExpr`.
    Raises :class:`MissingSymbol` if a symbol of ``x`` has no value.
    """
    for s in x.symbols():
        if s not in assignment:
            raise MissingSymbol(s)
    values = {}
    for s, v in assignment.items():
        v = MotiveExpr.coerce(v)
        if not v.is_laurent():
            raise ValueError(f"value for {s} is not a Laurent polynomial")
        values[s] = v
    return x.substitute(values)


def euler_char(x: MotiveExpr, chi: Mapping) -> int:
    """Topological Euler characteristic: ``L -> 1`` and each symbol to ``chi[s]``."""
    total = 0
    for (_, syms), c in x.terms.items():
        v = c
        for s in syms:
            try:
                v *= chi[s]
            except KeyError:
                raise MissingSymbol(s) from None
        total += v
    return total
