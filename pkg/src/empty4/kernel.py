"""Search-kernel selection.

The compiled extension (``empty4._kernel``, Cython) is used when importable;
otherwise the pure-Python twin takes over. Set EMPTY4_FORCE_PY_KERNEL=1 to
force the fallback (worker processes inherit the variable, so a forced
parent forces its pool too).
"""

import importlib
import os

from . import _kernel_py

if os.environ.get("EMPTY4_FORCE_PY_KERNEL"):
    _impl = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernel_py
        BACKEND = "python"

is_empty = _impl.is_empty
is_hollow = _impl.is_hollow
canonical = _impl.canonical
enumerate_empty_chunk = _impl.enumerate_empty_chunk
enumerate_classes = _impl.enumerate_classes


def available_backends():
    """Names of the kernel backends importable right now."""
    names = ["python"]
    try:
        importlib.import_module("empty4._kernel")
        names.insert(0, "cython")
    except ImportError:
        pass
    return names


def get_backend(name):
    """Return the kernel module for ``name`` ('cython' or 'python')."""
    if name == "python":
        return _kernel_py
    if name == "cython":
        return importlib.import_module("empty4._kernel")
    raise ValueError(f"unknown kernel backend {name!r}")
