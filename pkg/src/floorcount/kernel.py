"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled kernel works in 64-bit integers, so callers are routed back to
the Python kernel whenever inputs could overflow it.
"""

from __future__ import annotations

from . import _kernels as _py

try:  # pragma: no cover - depends on build environment
    from . import _speedups as _fast

    HAVE_SPEEDUPS = True
except ImportError:  # pragma: no cover
    _fast = None
    HAVE_SPEEDUPS = False

BACKEND = "cython" if HAVE_SPEEDUPS else "python"

_GUARD = 2**31  # conservative: residuals stay far below 2**63


def _small(cols, phi, b):
    vals = [abs(v) for col in cols for v in col] + [abs(v) for v in phi] + [abs(v) for v in b]
    return max(vals, default=0) < _GUARD and len(phi) <= 60


def make_counter(cols, phi, lower=0, force=None):
    """A SolutionCounter for A z = b, z >= lower, reusable across b."""
    impl = _py
    if force == "python":
        impl = _py
    elif force == "cython":
        impl = _fast
    elif HAVE_SPEEDUPS and _small(cols, phi, ()):
        impl = _fast
    return impl.SolutionCounter(cols, phi, lower)


def count_solutions(cols, phi, b, lower=0):
    if HAVE_SPEEDUPS and _small(cols, phi, b):
        return _fast.count_solutions(cols, phi, b, lower)
    return _py.count_solutions(cols, phi, b, lower)


def enum_solutions(cols, phi, b, lower=0):
    return _py.enum_solutions(cols, phi, b, lower)
