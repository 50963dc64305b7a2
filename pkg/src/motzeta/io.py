"""JSON (de)serialization of resolution data."""

from __future__ import annotations

import json
from typing import Union

from .config import Component, DualGraph, SncConfig, Stratum, Vertex, from_dual_graph, validate
from .errors import ParseError, ValidationError
from .motive import MotiveExpr

__all__ = ["parse_config", "render_config", "config_to_json", "config_from_json"]

_CONFIG_KEYS = {"m", "components", "strata"}
_COMPONENT_KEYS = {"id", "N", "nu", "mu"}
_STRATUM_KEYS = {"J", "chi", "cls", "cover_cls", "nonempty"}
_GRAPH_KEYS = {"vertices", "edges"}
_VERTEX_KEYS = {"id", "N", "nu", "chi_open"}


def _no_duplicate_keys(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ParseError(f"duplicate key {k!r}", field=k)
        out[k] = v
    return out


def _check_keys(obj, allowed, required, where):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", field=where)
    unknown = set(obj) - allowed
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", field=where)
    missing = set(required) - set(obj)
    if missing:
        raise ParseError(f"missing keys {sorted(missing)}", field=where)


def _int(obj, key, where, optional=False):
    v = obj.get(key)
    if v is None and optional:
        return None
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"{key} must be an integer, got {v!r}", field=f"{where}.{key}")
    return v


def _ids(values, where):
    if not isinstance(values, list) or not all(isinstance(x, str) and x for x in values):
        raise ParseError("expected a list of component ids", field=where)
    return tuple(values)


def _unique(ids, where):
    seen = set()
    for i in ids:
        if i in seen:
            raise ParseError(f"duplicate id {i!r}", field=where)
        seen.add(i)


def config_from_json(obj) -> Union[SncConfig, DualGraph]:
    if isinstance(obj, dict) and "vertices" in obj:
        _check_keys(obj, _GRAPH_KEYS, {"vertices"}, "graph")
        verts = []
        for k, v in enumerate(obj["vertices"] if isinstance(obj["vertices"], list) else [None]):
            where = f"vertices[{k}]"
            _check_keys(v, _VERTEX_KEYS, {"id", "N", "chi_open"}, where)
            if not isinstance(v["id"], str) or not v["id"]:
                raise ParseError("id must be a nonempty string", field=f"{where}.id")
            verts.append(Vertex(v["id"], _int(v, "N", where), _int(v, "nu", where, True), _int(v, "chi_open", where)))
        _unique([v.id for v in verts], "vertices")
        edges = [_ids(e, f"edges[{k}]") for k, e in enumerate(obj.get("edges", []))]
        g = DualGraph(tuple(verts), tuple(edges))
        from_dual_graph(g)  # raises ValidationError on violations
        return g
    _check_keys(obj, _CONFIG_KEYS, {"m", "components"}, "config")
    if not isinstance(obj["components"], list):
        raise ParseError("components must be a list", field="components")
    comps = []
    for k, comp in enumerate(obj["components"]):
        where = f"components[{k}]"
        _check_keys(comp, _COMPONENT_KEYS, {"id", "N"}, where)
        if not isinstance(comp["id"], str) or not comp["id"]:
            raise ParseError("id must be a nonempty string", field=f"{where}.id")
        comps.append(
            Component(comp["id"], _int(comp, "N", where), _int(comp, "nu", where, True), _int(comp, "mu", where, True))
        )
    _unique([c.id for c in comps], "components")
    strata = {}
    for k, s in enumerate(obj.get("strata", [])):
        where = f"strata[{k}]"
        _check_keys(s, _STRATUM_KEYS, {"J", "chi"}, where)
        J = _ids(s["J"], f"{where}.J")
        cls = MotiveExpr.from_json(s["cls"]) if "cls" in s else None
        cover = MotiveExpr.from_json(s["cover_cls"]) if "cover_cls" in s else None
        nonempty = s.get("nonempty", False)
        if not isinstance(nonempty, bool):
            raise ParseError("nonempty must be a boolean", field=f"{where}.nonempty")
        st = Stratum(J, _int(s, "chi", where), cls, cover, nonempty)
        if st.J in strata:
            raise ParseError(f"duplicate stratum {list(st.J)}", field=where)
        strata[st.J] = st
    c = SncConfig(_int(obj, "m", "config"), tuple(comps), strata)
    viol = validate(c)
    if viol:
        raise ValidationError(viol)
    return c


def parse_config(text: str) -> Union[SncConfig, DualGraph]:
    """Parse and validate a JSON config (either schema)."""
    try:
        obj = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    return config_from_json(obj)


def config_to_json(c: Union[SncConfig, DualGraph]) -> dict:
    if isinstance(c, DualGraph):
        verts = []
        for v in c.vertices:
            d = {"id": v.id, "N": v.N}
            if v.nu is not None:
                d["nu"] = v.nu
            d["chi_open"] = v.chi_open
            verts.append(d)
        return {"vertices": verts, "edges": [list(e) for e in c.edges]}
    comps = []
    for x in c.components:
        d = {"id": x.id, "N": x.N}
        if x.nu is not None:
            d["nu"] = x.nu
        if x.mu is not None:
            d["mu"] = x.mu
        comps.append(d)
    strata = []
    for s in c.strata.values():
        d = {"J": list(s.J), "chi": s.chi}
        if s.cls is not None:
            d["cls"] = s.cls.to_json()
        if s.cover_cls is not None:
            d["cover_cls"] = s.cover_cls.to_json()
        if s.nonempty:
            d["nonempty"] = True
        strata.append(d)
    return {"m": c.m, "components": comps, "strata": strata}


def render_config(c: Union[SncConfig, DualGraph]) -> str:
    return json.dumps(config_to_json(c), indent=2)
