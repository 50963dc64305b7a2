"""Named resolution data used by the CLI and the test-suite."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .config import DualGraph, SncConfig, Vertex
from .errors import UnknownPreset

__all__ = ["Preset", "preset", "PRESET_NAMES", "all_presets"]

PRESET_NAMES = ("smooth_point", "node", "monomial(N1,N2)", "cusp")


@dataclass(frozen=True)
class Preset:
    name: str
    config: Union[SncConfig, DualGraph]
    provenance: str


def _smooth_point() -> Preset:
    g = DualGraph((Vertex("E1", 1, 1, 1),))
    return Preset("smooth_point", g, "f = x at the origin: one branch, E^o is the point itself.")


def _monomial(n1: int, n2: int, name: str) -> Preset:
    g = DualGraph((Vertex("E1", n1, 1, 0), Vertex("E2", n2, 1, 0)), (("E1", "E2"),))
    return Preset(
        name,
        g,
        f"pi = x^{n1} y^{n2} on a regular germ; E_1^o = E_2^o are empty and E_12 is the origin. "
        "nu = 1 because the branches are components of the (already regular) special fibre, "
        "not exceptional divisors.",
    )


def _cusp() -> Preset:
    g = DualGraph(
        (
            Vertex("C", 1, 1, 0),
            Vertex("E1", 2, 2, 1),
            Vertex("E2", 3, 3, 1),
            Vertex("E3", 6, 5, -1),
        ),
        (("C", "E3"), ("E1", "E3"), ("E2", "E3")),
    )
    return Preset(
        "cusp",
        g,
        "x^2 + y^3 resolved by three point blow-ups: exceptional curves E1 (N=2, nu=2), "
        "E2 (N=3, nu=3), E3 (N=6, nu=5) and strict transform C (N=1, nu=1) meeting E3 "
        "only. Check: sum N_i chi(E_i^o) = -1 = 1 - (Milnor number 2).",
    )


def preset(name: str) -> Preset:
    name = name.strip()
    if name == "smooth_point":
        return _smooth_point()
    if name == "node":
        p = _monomial(1, 1, "node")
        return Preset("node", p.config, "xy at the origin (monomial(1,1)). " + p.provenance)
    if name == "cusp":
        return _cusp()
    m = re.fullmatch(r"monomial\(\s*(\d+)\s*,\s*(\d+)\s*\)", name)
    if m and int(m.group(1)) >= 1 and int(m.group(2)) >= 1:
        n1, n2 = int(m.group(1)), int(m.group(2))
        return _monomial(n1, n2, f"monomial({n1},{n2})")
    raise UnknownPreset(name)


def all_presets() -> list:
    return [preset(n) for n in ("smooth_point", "node", "monomial(2,3)", "cusp")]
