"""Selects the compiled kernels when available, else the pure-Python ones.

Set ``ONEBRACE_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels

if os.environ.get("ONEBRACE_PURE"):
    _ckernels = None
else:
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

KERNEL_NAMES = ("assoc", "comm", "brace_law", "star_left_distrib", "star_of_product",
                "star_right_mul", "star_of_sum", "lambda_conjugation", "braid")


def get(name: str, backend: str | None = None):
    """Return the kernel ``name`` for ``backend`` (default: the selected one)."""
    backend = backend or BACKEND
    if backend == "cython":
        if _ckernels is None:
            raise ImportError("compiled kernels are not available")
        return getattr(_ckernels, name)
    return getattr(_pykernels, name)


def prepare(tables: dict[str, np.ndarray], backend: str | None = None) -> dict:
    """Convert int64 tables to what ``backend`` consumes."""
    backend = backend or BACKEND
    if backend == "cython":
        return {k: np.ascontiguousarray(v, dtype=np.int64) for k, v in tables.items()}
    return {k: v.tolist() for k, v in tables.items()}


def _args(identity_kernel: str, t: dict):
    return {
        "assoc_add": ("assoc", (t["add"],)),
        "comm_add": ("comm", (t["add"],)),
        "assoc_mul": ("assoc", (t["mul"],)),
        "brace_law": ("brace_law", (t["add"], t["mul"], t["neg"])),
        "star_left_distrib": ("star_left_distrib", (t["star"], t["add"])),
        "star_of_product": ("star_of_product", (t["star"], t["mul"], t["add"])),
        "star_right_mul": ("star_right_mul", (t["star"], t["mul"], t["add"])),
        "star_of_sum": ("star_of_sum", (t["star"], t["add"], t["lambda"], t["inv"])),
        "lambda_conjugation": ("lambda_conjugation", (t["star"], t["mul"], t["lambda"], t["inv"])),
    }[identity_kernel]


def run_identity_kernel(identity_kernel: str, tables: dict[str, np.ndarray],
                        backend: str | None = None):
    """First violating index tuple for a registered identity kernel, or None."""
    name, args = _args(identity_kernel, prepare(tables, backend))
    hit = get(name, backend)(*args)
    return None if hit is None else tuple(int(i) for i in hit)


def first_braid_violation(U: np.ndarray, V: np.ndarray, backend: str | None = None):
    t = prepare({"U": U, "V": V}, backend)
    hit = get("braid", backend)(t["U"], t["V"])
    return None if hit is None else tuple(int(i) for i in hit)
