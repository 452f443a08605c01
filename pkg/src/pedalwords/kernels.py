"""Backend selection for the enumeration kernel.

The compiled extension is used when it was built and imports cleanly;
otherwise, or when ``PEDALWORDS_PURE_PYTHON=1`` is set, the pure-Python
module with the identical contract is used.  Every call checks the compiled
kernel's word-length limit and drops to Python integers beyond it.
"""
from __future__ import annotations

import os

from . import _kernels_py

_compiled = None
if not os.environ.get("PEDALWORDS_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["cython"] = _compiled

DEFAULT_BACKEND = "cython" if _compiled is not None else "python"

OK = _kernels_py.OK
STATUS_NAMES = {
    _kernels_py.OK: "ok",
    _kernels_py.NOT_ADMISSIBLE: "not admissible",
    _kernels_py.OUTSIDE_C: "fixed point outside the non-degenerate sorted triples",
    _kernels_py.DEGENERATE: "orbit hits a right triangle",
    _kernels_py.ITINERARY_MISMATCH: "itinerary of the fixed point differs from the word",
    _kernels_py.PERIOD_MISMATCH: "exact period of the fixed point differs from the word length",
    _kernels_py.SINGULAR: "singular fixed-point system",
}


def get_backend(name: str | None = None, n: int | None = None):
    """The kernel module called ``name`` (default: the fastest available) usable for length ``n``."""
    name = name or DEFAULT_BACKEND
    try:
        mod = BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable kernel backend {name!r}; have {sorted(BACKENDS)}") from None
    if n is not None and mod.MAX_N is not None and n > mod.MAX_N:
        return _kernels_py
    return mod


def is_admissible(code: int, n: int, backend: str | None = None) -> bool:
    return get_backend(backend, n).is_admissible(code, n)


def solve(code: int, n: int, backend: str | None = None):
    return get_backend(backend, n).solve(code, n)


def scan(n: int, lo: int, hi: int, backend: str | None = None):
    return get_backend(backend, n).scan(n, lo, hi)


def admissible_codes(n: int, lo: int, hi: int, backend: str | None = None) -> list[int]:
    return get_backend(backend, n).admissible_codes(n, lo, hi)
