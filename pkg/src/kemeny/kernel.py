"""Backend selection for the compute kernels.

Importing this module picks the compiled extension when it built, falling
back to the pure-Python implementation otherwise.  Set KEMENY_PURE_PYTHON=1
to force the fallback (useful for benchmarking and differential tests).
"""

from __future__ import annotations

import os

from . import _pykernel

__all__ = [
    "backend_name",
    "scan_pairs",
    "walk_hits",
    "kemeny_hits",
    "available_backends",
]


def _select():
    if os.environ.get("KEMENY_PURE_PYTHON", "") not in ("", "0"):
        return _pykernel
    try:
        from . import _ckernel  # built by setup.py when Cython + a C compiler exist
    except ImportError:
        return _pykernel
    return _ckernel


def available_backends() -> dict:
    """Importable kernel modules keyed by backend name, fallback included."""
    out = {_pykernel.backend_name: _pykernel}
    try:
        from . import _ckernel
    except ImportError:
        pass
    else:
        out[_ckernel.backend_name] = _ckernel
    return out


_impl = _select()

backend_name: str = _impl.backend_name
scan_pairs = _impl.scan_pairs
walk_hits = _impl.walk_hits
kemeny_hits = _impl.kemeny_hits
