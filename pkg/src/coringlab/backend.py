"""Selects the row-reduction engine at import time.

The compiled Cython kernel is preferred; the numpy engine is the fallback.
Set CORINGLAB_PURE=1 to force the pure-python engine (used by the
benchmark and by tests that compare both).
"""

from __future__ import annotations

import os

from coringlab import _rowred_py

if os.environ.get("CORINGLAB_PURE"):
    _impl = _rowred_py
    BACKEND = "python"
else:
    try:
        from coringlab import _rowred as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _rowred_py
        BACKEND = "python"

rref_engine = _impl.rref_inplace


def available_engines() -> dict[str, object]:
    """Every importable engine, keyed by name (for benchmarks/tests)."""
    engines: dict[str, object] = {"python": _rowred_py.rref_inplace}
    try:
        from coringlab import _rowred

        engines["compiled"] = _rowred.rref_inplace
    except ImportError:
        pass
    return engines
