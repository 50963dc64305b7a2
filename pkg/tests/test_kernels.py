import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motzeta import _pykernels, kernels

factor_lists = st.lists(st.tuples(st.integers(-5, 5), st.integers(1, 6)), max_size=4)

ckernels = pytest.importorskip("motzeta._ckernels")


def test_cython_backend_selected():
    if not os.environ.get("MOTZETA_PURE_PYTHON"):
        assert kernels.BACKEND == "cython"


@settings(max_examples=300)
@given(factor_lists, st.integers(0, 24))
def test_expand_product_parity(fs, D):
    assert ckernels.expand_product(fs, D) == _pykernels.expand_product(fs, D)


@settings(max_examples=300)
@given(st.lists(st.integers(1, 12), min_size=1, max_size=4), st.integers(-5, 80))
def test_representable_parity(parts, target):
    assert ckernels.representable(parts, target) == _pykernels.representable(parts, target)


def test_expand_product_examples():
    assert _pykernels.expand_product([(0, 1)], 3) == [{}, {0: 1}, {0: 1}, {0: 1}]
    assert _pykernels.expand_product([(0, 1), (0, 1)], 4) == [{}, {}, {0: 1}, {0: 2}, {0: 3}]
    assert _pykernels.expand_product([(-1, 2)], 4) == [{}, {}, {-1: 1}, {}, {-2: 1}]
    assert _pykernels.expand_product([], 2) == [{0: 1}, {}, {}]


def test_overflow_falls_back_to_python():
    # 70 copies of T/(1-T): coefficient of T^d is C(d-1, 69), which exceeds int64 by d=140
    fs = [(0, 1)] * 70
    with pytest.raises(OverflowError):
        ckernels.expand_product(fs, 140)
    rows = kernels.expand_product(fs, 140)
    from math import comb

    assert rows[140] == {0: comb(139, 69)}


def test_forced_pure_python_backend():
    env = dict(os.environ, MOTZETA_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import motzeta; print(motzeta.BACKEND)"], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "python"
