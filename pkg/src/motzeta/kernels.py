"""Hot-kernel dispatch: the compiled extension when importable, else pure Python.

Set ``MOTZETA_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_c = None
if not os.environ.get("MOTZETA_PURE_PYTHON"):
    try:
        from . import _ckernels as _c

        BACKEND = "cython"
    except ImportError:
        _c = None


def expand_product(factors, D):
    if _c is not None:
        try:
            return _c.expand_product(factors, D)
        except OverflowError:
            pass
    return _pykernels.expand_product(factors, D)


def representable(parts, target):
    if _c is not None:
        return _c.representable(parts, target)
    return _pykernels.representable(parts, target)
