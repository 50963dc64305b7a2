import pytest
from hypothesis import strategies as st

from motzeta import MotiveExpr, SeriesExpr, cover_symbol, from_dual_graph, open_symbol, preset

SYMBOLS = [cover_symbol("E1"), cover_symbol("E1", "E2"), open_symbol("E2"), cover_symbol("E3"), open_symbol("E1", "E3")]


@st.composite
def motives(draw, max_terms=4, max_syms=2):
    terms = []
    for _ in range(draw(st.integers(0, max_terms))):
        e = draw(st.integers(-3, 3))
        syms = tuple(draw(st.lists(st.sampled_from(SYMBOLS), max_size=max_syms)))
        c = draw(st.integers(-5, 5))
        terms.append(((e, syms), c))
    return MotiveExpr(terms)


@st.composite
def serieses(draw, max_terms=3, max_factors=3):
    terms = []
    for _ in range(draw(st.integers(0, max_terms))):
        fs = draw(st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 4)), max_size=max_factors))
        terms.append((fs, draw(motives(max_terms=2, max_syms=1))))
    return SeriesExpr(terms)


PRESET_NAMES = ["smooth_point", "node", "monomial(2,3)", "cusp"]


@pytest.fixture(params=PRESET_NAMES)
def preset_config(request):
    return from_dual_graph(preset(request.param).config)


@pytest.fixture
def cusp():
    return from_dual_graph(preset("cusp").config)


@pytest.fixture
def node():
    return from_dual_graph(preset("node").config)


@pytest.fixture
def smooth():
    return from_dual_graph(preset("smooth_point").config)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
