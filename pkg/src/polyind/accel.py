"""Kernel dispatch: numba-compiled when available, plain Python otherwise.

Set ``POLYIND_DISABLE_JIT=1`` to force the interpreted path.  Both paths run
the same source from :mod:`polyind._kernels`; :func:`kernels` hands out
either set explicitly, which is what the benchmark uses.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

from . import _kernels

_NAMES = (
    "popcount",
    "lowbit_index",
    "full_mask",
    "_bfs_order",
    "connected_without",
    "vertex_cut",
    "bfs_distances",
    "power_masks",
    "_clique_cover_bound",
    "max_independent_mask",
    "separating_4cycle",
    "_row_less",
    "refine_colors",
)

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def jit_requested() -> bool:
    flag = os.environ.get("POLYIND_DISABLE_JIT", "").strip().lower()
    return numba is not None and flag not in ("1", "true", "yes", "on")


def _python_kernels() -> SimpleNamespace:
    return SimpleNamespace(jit=False, **{name: getattr(_kernels, name) for name in _NAMES})


_compiled: SimpleNamespace | None = None


def _jit_kernels() -> SimpleNamespace:
    global _compiled
    if _compiled is None:
        # Compile into a private copy of the module namespace so the helpers
        # resolve each other as jitted functions, leaving _kernels untouched.
        env = dict(vars(_kernels))
        for name in _NAMES:
            fn = getattr(_kernels, name)
            clone = type(fn)(fn.__code__, env, fn.__name__, fn.__defaults__, fn.__closure__)
            env[name] = numba.njit(cache=True)(clone)
        _compiled = SimpleNamespace(jit=True, **{name: env[name] for name in _NAMES})
    return _compiled


def kernels(jit: bool | None = None) -> SimpleNamespace:
    """Return the kernel set; ``jit=None`` follows the environment flag."""
    if jit is None:
        jit = jit_requested()
    if jit and numba is None:
        raise RuntimeError("numba is not installed")
    return _jit_kernels() if jit else _python_kernels()


def csr(adjacency) -> tuple[np.ndarray, np.ndarray]:
    """CSR arrays from a sequence of neighbour collections."""
    indptr = np.zeros(len(adjacency) + 1, dtype=np.int64)
    for v, nb in enumerate(adjacency):
        indptr[v + 1] = indptr[v] + len(nb)
    indices = np.fromiter((u for nb in adjacency for u in sorted(nb)), dtype=np.int64,
                          count=int(indptr[-1]))
    return indptr, indices


def as_masks(masks, jit: bool):
    """Convert Python-int masks to the container each path expects."""
    if jit:
        arr = np.empty(len(masks), dtype=np.int64)
        for i, m in enumerate(masks):
            arr[i] = m - (1 << 64) if m >= 1 << 63 else m
        return arr
    return list(masks)


def to_unsigned(mask) -> int:
    return int(mask) & ((1 << 64) - 1)
