"""Kernel dispatch: compiled extension when importable, Python otherwise.

Set ``CUTGROUPS_PURE=1`` in the environment to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("CUTGROUPS_PURE", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

orbit_labels = _impl.orbit_labels
cayley_table = _impl.cayley_table
class_counts = _impl.class_counts
rref_mod_p = _impl.rref_mod_p

__all__ = ["BACKEND", "orbit_labels", "cayley_table", "class_counts", "rref_mod_p"]
