"""Backend selection for the hot loops.

The compiled extension ``_ckernels`` is used when it was built; otherwise the
pure-Python ``_pykernels`` module stands in. Both expose the same functions.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_FUNCS = (
    "alternation",
    "first_violation",
    "lex_least_coloring",
    "first_free_order",
    "sign_changes",
    "eliminate_levels",
)

BACKEND = ""


def available() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def use(name: str) -> None:
    """Switch the active backend (``"cython"`` or ``"python"``)."""
    global BACKEND
    if name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e .` with Cython present")
        mod = _ckernels
    elif name == "python":
        mod = _pykernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    g = globals()
    for f in _FUNCS:
        g[f] = getattr(mod, f)
    BACKEND = name


def module(name: str):
    if name == "cython" and _ckernels is None:
        raise RuntimeError("compiled kernels are not built")
    return _ckernels if name == "cython" else _pykernels


use("cython" if _ckernels is not None else "python")
