import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from motzeta import Component, DualGraph, SncConfig, Stratum, Vertex, from_dual_graph, preset, validate
from motzeta.config import cover_euler, is_J_linear, is_Xs_linear, linear_witness
from motzeta.errors import UnknownComponent, ValidationError
from motzeta.motive import L, MotiveExpr, cover_symbol


def rules(viol):
    return [v.rule for v in viol]


def test_validate_examples(node):
    assert validate(node) == []
    bad = SncConfig(1, (Component("E1", 0, 1),), {("E1",): Stratum(("E1",), 1)})
    assert rules(validate(bad)) == ["N ≥ 1"]
    comps = tuple(Component(f"E{i}", 1, 1) for i in (1, 2, 3))
    triple = SncConfig(1, comps, {("E1", "E2", "E3"): Stratum(("E1", "E2", "E3"), 1)})
    assert "|J| ≤ m+1" in rules(validate(triple))


def test_validate_other_rules():
    c = SncConfig(1, (Component("E1", 2, 3, mu=0),), {("E1", "E9"): Stratum(("E1", "E9"), 1)})
    r = rules(validate(c))
    assert "mu = nu − N" in r and "J ⊂ declared components" in r
    c = SncConfig(1, (Component("E1", 1, 0),), {("E1",): Stratum(("E1",), 2, cls=L)})
    assert set(rules(validate(c))) == {"nu ≥ 1", "euler_char(class) = chi"}
    v = validate(c)[0]
    assert v.field.startswith("components[E1]")


def test_from_dual_graph_presets(node, smooth, cusp):
    assert node.m == 1 and node.ids == ("E1", "E2")
    assert [(J, s.chi) for J, s in node.strata.items()] == [(("E1",), 0), (("E2",), 0), (("E1", "E2"), 1)]
    assert [(J, s.chi) for J, s in smooth.strata.items()] == [(("E1",), 1)]
    assert {J: s.chi for J, s in cusp.strata.items() if len(J) == 1} == {("C",): 0, ("E1",): 1, ("E2",): 1, ("E3",): -1}
    assert sum(cusp.N(i) * cusp.chi((i,)) for i in cusp.ids) == 1 - 2


def test_from_dual_graph_multi_edge_and_malformed():
    g = DualGraph((Vertex("E1", 1, 1, 0), Vertex("E2", 2, 1, 0)), (("E1", "E2"), ("E2", "E1")))
    assert from_dual_graph(g).chi(("E1", "E2")) == 2
    with pytest.raises(ValidationError):
        from_dual_graph(DualGraph((Vertex("E1", 1, 1, 0),), (("E1", "E7"),)))
    with pytest.raises(ValidationError):
        from_dual_graph(DualGraph((Vertex("E1", 1, 1, 0), Vertex("E1", 2, 1, 0))))


def test_cover_euler_examples(cusp, node):
    assert cover_euler(cusp, ["E3"]) == -6
    assert cover_euler(node, ["E1", "E2"]) == 1
    assert cover_euler(cusp, ["E1", "E2"]) == 0
    with pytest.raises(UnknownComponent):
        cover_euler(cusp, ["E42"])


def test_cover_euler_singletons(preset_config):
    for i in preset_config.ids:
        assert cover_euler(preset_config, [i]) == preset_config.N(i) * preset_config.chi((i,))


def test_chi_table_default_cover_symbols(cusp):
    assert cusp.euler(MotiveExpr.symbol(cover_symbol("E3"))) == -6
    assert cusp.euler(MotiveExpr.symbol(cover_symbol("E1", "E3"))) == 2


def test_linearity_examples(cusp, node):
    two_three = SncConfig(1, (Component("A", 2), Component("B", 3)), {("A", "B"): Stratum(("A", "B"), 1)})
    assert is_J_linear(two_three, ("A", "B"), 5)
    assert not is_J_linear(cusp, ("C", "E3"), 5)
    assert is_J_linear(node, ("E1", "E2"), 2)
    assert not is_Xs_linear(node, 1) and is_Xs_linear(node, 2)
    assert linear_witness(node, 2) == ("E1", "E2")
    assert not is_Xs_linear(cusp, 5)
    smooth = from_dual_graph(preset("smooth_point").config)
    assert not any(is_Xs_linear(smooth, d) for d in range(1, 30))


def brute_linear(Ns, d):
    return any(sum(a * n for a, n in zip(al, Ns)) == d for al in itertools.product(range(1, d + 1), repeat=len(Ns)))


@given(st.lists(st.integers(1, 6), min_size=2, max_size=3), st.integers(1, 18))
def test_is_J_linear_matches_brute_force(Ns, d):
    comps = tuple(Component(f"E{i}", n) for i, n in enumerate(Ns, 1))
    J = tuple(c.id for c in comps)
    c = SncConfig(len(Ns) - 1, comps, {J: Stratum(J, 1)})
    assert is_J_linear(c, J, d) == brute_linear(Ns, d)


@given(st.lists(st.tuples(st.integers(1, 4), st.integers(1, 4)), min_size=1, max_size=4), st.integers(1, 30))
def test_is_Xs_linear_monotone_and_floor(pairs, d):
    # a chain graph; adding edges can only add linear pairs
    verts = tuple(Vertex(f"E{i}", n, 1, 0) for i, n in enumerate([p[0] for p in pairs] + [pairs[-1][1]], 1))
    edges = [(verts[i].id, verts[i + 1].id) for i in range(len(verts) - 1)]
    full = from_dual_graph(DualGraph(verts, edges))
    part = from_dual_graph(DualGraph(verts, edges[:-1]))
    assert validate(full) == [] and validate(part) == []
    if is_Xs_linear(part, d):
        assert is_Xs_linear(full, d)
    floor = min(full.N(a) + full.N(b) for a, b in edges)
    if d < floor:
        assert not is_Xs_linear(full, d)


def test_presets_valid(preset_config):
    assert validate(preset_config) == []


def test_nonempty_flag_keeps_zero_chi_stratum():
    s = Stratum(("E1",), 0)
    assert s.is_empty
    assert not Stratum(("E1",), 0, nonempty=True).is_empty
