"""Backend selection for the hot kernels.

The compiled ``_speedups`` extension is used when it imports and the graph
fits in 64-bit vertex masks; otherwise the pure-Python twin runs.  Set
``RESOLVE_LAB_PURE=1`` to force the pure backend.
"""

import os

import numpy as np

from . import _purekernels as _pure
from ._purekernels import EDGE, INF_CODE, LOCAL, VERTEX

try:
    if os.environ.get("RESOLVE_LAB_PURE") == "1":
        raise ImportError("pure backend forced")
    from . import _speedups as _fast
except ImportError:
    _fast = None

BACKEND = "compiled" if _fast is not None else "pure"

__all__ = [
    "BACKEND", "EDGE", "INF_CODE", "LOCAL", "VERTEX",
    "bfs_distances", "distinguish_masks", "multicover", "use_backend",
]

_active = _fast


def use_backend(name):
    """Switch between ``"compiled"`` and ``"pure"``; returns the previous name."""
    global _active, BACKEND
    previous = BACKEND
    if name == "compiled":
        if _fast is None:
            raise RuntimeError("compiled kernels are not available")
        _active = _fast
    elif name == "pure":
        _active = None
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name
    return previous


def bfs_distances(n, indptr, indices):
    if _active is not None:
        return _active.bfs_distances(n, indptr, indices)
    return _pure.bfs_distances(n, indptr, indices)


def distinguish_masks(codes, kind, cap, eu, ev):
    """Item pairs and their distinguisher bitmasks (list of Python ints)."""
    n = codes.shape[0]
    if _active is not None and n <= 64:
        a, b, masks = _active.distinguish_masks(
            np.ascontiguousarray(codes, dtype=np.int32), kind, cap,
            np.asarray(eu, dtype=np.int32), np.asarray(ev, dtype=np.int32),
        )
        return list(zip(a.tolist(), b.tolist())), masks.tolist()
    return _pure.distinguish_masks(codes, kind, cap, list(eu), list(ev))


def multicover(masks, n, t, limit=-1):
    if _active is not None and n <= 64:
        return _active.multicover(np.asarray(masks, dtype=np.uint64), n, t, limit)
    return _pure.multicover(list(masks), n, t, limit)
