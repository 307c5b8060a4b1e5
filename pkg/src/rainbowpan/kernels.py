"""Search kernel selection.

Prefers the compiled extension; falls back to the pure-Python twin when the
extension is absent or RAINBOWPAN_PURE_PYTHON is set to a non-empty value.
Both expose find_path/find_cycle with identical semantics and witnesses.
"""
from __future__ import annotations

import os

from . import _kernel_py

FOUND = _kernel_py.FOUND
NONE = _kernel_py.NONE
BUDGET = _kernel_py.BUDGET

if os.environ.get("RAINBOWPAN_PURE_PYTHON"):
    _impl = _kernel_py
    COMPILED = False
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        COMPILED = True
    except ImportError:
        _impl = _kernel_py
        COMPILED = False

IMPLEMENTATION = "compiled" if COMPILED else "python"

find_path = _impl.find_path
find_cycle = _impl.find_cycle
