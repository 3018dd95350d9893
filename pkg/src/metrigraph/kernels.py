"""Backend selection for the enumeration kernels.

The compiled extension ``_kernels`` is used when it imports; otherwise, or
when ``METRIGRAPH_PURE_PYTHON=1`` is set, the pure-Python ``_kernels_py``
is used.  Both expose the same functions.
"""

import os

from . import _kernels_py

if os.environ.get("METRIGRAPH_PURE_PYTHON") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "compiled"

POLY_F = _kernels_py.POLY_F
POLY_G = _kernels_py.POLY_G
BudgetExceeded = _kernels_py.BudgetExceeded

poly_attained = _impl.poly_attained
wiener_from_levels = _impl.wiener_from_levels
f_poly = _kernels_py.f_poly
g_poly = _kernels_py.g_poly


def backend_module(name: str):
    """The module for ``"python"`` or ``"compiled"`` (raises ImportError if not built)."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from . import _kernels

        return _kernels
    raise ValueError(name)
