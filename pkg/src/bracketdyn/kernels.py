"""Kernel selection: the compiled extension when present, else pure Python.

``BACKEND`` names the active implementation ("cython" or "python"); the
benchmark CLI compares both when the extension is built.
"""
try:
    from . import _kernels_cy as _impl  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    from . import _kernels_py as _impl

from . import _kernels_py as pure_python

BACKEND = _impl.BACKEND_NAME

encode_paren = _impl.encode_paren
ed = _impl.ed
banded_ed = _impl.banded_ed
ded = _impl.ded
ted = _impl.ted


def implementations():
    """All available kernel modules, keyed by backend name."""
    mods = {pure_python.BACKEND_NAME: pure_python}
    mods[_impl.BACKEND_NAME] = _impl
    return mods
