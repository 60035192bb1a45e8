"""Backend selection for the hot kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` twin. Both expose ``minimalize`` and
``ModpReducer`` with identical behaviour. Reduction over Q always runs in
Python.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_backends = {"python": _pykernels}
if _ckernels is not None:
    _backends["cython"] = _ckernels

BACKEND = "cython" if _ckernels is not None else "python"
_impl = _backends[BACKEND]


def available_backends() -> list[str]:
    return sorted(_backends)


def set_backend(name: str) -> None:
    """Switch the active backend (``"python"`` or ``"cython"``)."""
    global BACKEND, _impl
    if name not in _backends:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    BACKEND = name
    _impl = _backends[name]


def minimalize(exps):
    return _impl.minimalize(exps)


def make_reducer(field):
    if field.is_prime_field:
        return _impl.ModpReducer(field.p)
    return _pykernels.FieldReducer(field)
