"""Kernel selection for the exact linear algebra hot loops.

The compiled extension ``designideal._speedups`` is preferred when it built
successfully; the pure-Python twin ``designideal._kernel_py`` is always
available. Set ``DESIGNIDEAL_KERNEL=pure`` (or call :func:`use_kernel`) to
force the fallback, e.g. for benchmarking one against the other.
"""

import os

from . import _kernel_py

try:
    from . import _speedups
except ImportError:  # extension not built; pure Python only
    _speedups = None

_KERNELS = {"pure": _kernel_py}
if _speedups is not None:
    _KERNELS["compiled"] = _speedups

_active = _KERNELS.get(
    os.environ.get("DESIGNIDEAL_KERNEL", "compiled"), _kernel_py
)


def available_kernels():
    return tuple(sorted(_KERNELS))


def active_kernel_name():
    return "compiled" if _active is _speedups else "pure"


def use_kernel(name: str):
    """Switch the active kernel; returns the previous kernel name."""
    global _active
    if name not in _KERNELS:
        raise ValueError(f"unknown kernel {name!r}; have {available_kernels()}")
    previous = active_kernel_name()
    _active = _KERNELS[name]
    return previous


def first_nonzero(vec):
    return _active.first_nonzero(vec)


def scale_inplace(vec, factor):
    return _active.scale_inplace(vec, factor)


def reduce_against(vec, rows, pivot_cols):
    return _active.reduce_against(vec, rows, pivot_cols)


def linear_combination(coeffs, rows, length, zero):
    return _active.linear_combination(coeffs, rows, length, zero)


def solve_unique(matrix, rhs, one):
    return _active.solve_unique(matrix, rhs, one)


def invert(matrix, zero, one):
    return _active.invert(matrix, zero, one)


def rank(matrix):
    return _active.rank(matrix)
