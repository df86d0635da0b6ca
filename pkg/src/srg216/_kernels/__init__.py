"""Kernel backend selection.

The compiled extension is preferred when it was built; the pure-Python
module is always available.  Library entry points accept an explicit
``backend`` argument, resolved here.  No environment variables are read.
"""

from . import pure

try:
    from . import _core
except ImportError:
    _core = None

HAVE_COMPILED = _core is not None
DEFAULT_BACKEND = "compiled" if HAVE_COMPILED else "pure"

_BACKENDS = {"pure": pure, "compiled": _core}


def get_backend(name=None):
    """Resolve a backend name ('pure', 'compiled', 'auto'/None) to a module."""
    if name is None or name == "auto":
        name = DEFAULT_BACKEND
    if name not in _BACKENDS:
        raise ValueError("unknown kernel backend: %r" % (name,))
    mod = _BACKENDS[name]
    if mod is None:
        raise RuntimeError("compiled kernel backend requested but not built")
    return mod
