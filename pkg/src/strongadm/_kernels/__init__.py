"""Kernel backend selection.

Two interchangeable implementations of the hot propagation loops exist: a
compiled Cython module and a pure-Python reference. The default is the
compiled one when importable; set STRONGADM_KERNEL=py (or =c) to force a
choice, or pass backend="py"/"c" to the solver entry points.
"""

import os

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built; pure Python carries on
    _ckernel = None


def available_backends():
    return ("c", "py") if _ckernel is not None else ("py",)


def resolve_backend(name=None):
    """Map a requested backend name (or None/env/auto) to 'c' or 'py'."""
    if name is None:
        name = os.environ.get("STRONGADM_KERNEL", "auto")
    if name == "auto":
        return "c" if _ckernel is not None else "py"
    if name == "c":
        if _ckernel is None:
            raise RuntimeError(
                "compiled kernel is not available; reinstall the package "
                "or set STRONGADM_KERNEL=py"
            )
        return "c"
    if name == "py":
        return "py"
    raise ValueError(f"unknown kernel backend {name!r} (expected auto, c or py)")
