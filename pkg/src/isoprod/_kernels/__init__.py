"""Hot-kernel dispatch.

The compiled extension ``_ckernels`` is used when it was built and
``ISOPROD_PURE_PYTHON`` is not set; otherwise the pure-Python versions in
``_pykernels`` are used.  The compiled SNF works in int64 and falls back to
the big-integer version on overflow, so results never depend on the backend.
"""

import os

from . import _pykernels as py

try:
    from . import _ckernels as c
except ImportError:  # extension not built
    c = None

_INT64_SAFE = 1 << 62

if c is not None and not os.environ.get("ISOPROD_PURE_PYTHON"):
    BACKEND = "cython"
    _impl = c
else:
    BACKEND = "python"
    _impl = py


def diagonalize(matrix, ncols, want_left=False, want_right=False):
    if _impl is c and all(abs(v) < _INT64_SAFE for row in matrix for v in row):
        try:
            return c.diagonalize(matrix, ncols, want_left, want_right)
        except OverflowError:
            pass
    return py.diagonalize(matrix, ncols, want_left, want_right)


def search_endomorphisms(mul, gens, tree, candidates, bijective=True):
    return _impl.search_endomorphisms(mul, gens, tree, candidates, bijective)


__all__ = ["BACKEND", "diagonalize", "search_endomorphisms", "py", "c"]
