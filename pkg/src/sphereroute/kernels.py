"""Backend selection for the CSR kernels.

The compiled extension is used when importable; setting
SPHEREROUTE_PURE_PYTHON=1 forces the pure-Python fallback. Both backends
implement identical semantics (see _pykern's module docstring).
"""
from __future__ import annotations

import os

_FORCE_PURE = os.environ.get("SPHEREROUTE_PURE_PYTHON", "").strip().lower() in {
    "1",
    "true",
    "yes",
}

if _FORCE_PURE:
    from . import _pykern as _backend

    BACKEND = "python"
else:
    try:
        from . import _ckern as _backend  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from . import _pykern as _backend  # type: ignore[no-redef]

        BACKEND = "python"

bfs_hops = _backend.bfs_hops
bfs_multi = _backend.bfs_multi
components = _backend.components
hop_distance_bidir = _backend.hop_distance_bidir
dijkstra = _backend.dijkstra


def backend_name() -> str:
    return BACKEND
