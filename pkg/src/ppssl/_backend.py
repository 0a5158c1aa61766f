"""Select the compiled kernel core, falling back to pure numpy.

The compiled extension is preferred when importable; ``_kernels_py`` is the
behavioral twin used otherwise. ``use_backend`` exists for tests and
benchmarks that need to pin one side explicitly.
"""

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover - depends on build environment
    _compiled = None

kernels = _compiled if _compiled is not None else _kernels_py
BACKEND = "cython" if _compiled is not None else "python"


def available_backends():
    out = {"python": _kernels_py}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def use_backend(name: str):
    """Pin the active kernel module ('cython' or 'python'). Returns it."""
    global kernels, BACKEND
    choices = available_backends()
    if name not in choices:
        raise ValueError(f"backend {name!r} not available (have {sorted(choices)})")
    kernels = choices[name]
    BACKEND = name
    return kernels
