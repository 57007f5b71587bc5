"""Hot kernels with a compiled backend and a pure-Python fallback.

The compiled module is used when it imports; :func:`set_backend` switches
explicitly (tests and the benchmark compare both).
"""

from . import _pyalbert

try:
    from . import _albert as _compiled
except ImportError:  # extension not built
    _compiled = None

_LIMIT = 1 << 62
_BACKENDS = {"python": _pyalbert}
if _compiled is not None:
    _BACKENDS["cython"] = _compiled

_active = _BACKENDS.get("cython", _pyalbert)
_table = None


def available() -> list:
    return sorted(_BACKENDS)


def backend() -> str:
    return "cython" if _active is _compiled and _compiled is not None else "python"


def set_backend(name: str) -> None:
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} not available; have {available()}")
    _active = _BACKENDS[name]


def install_table(table) -> None:
    """Install the octonion multiplication table in every backend."""
    global _table
    _table = table
    for mod in _BACKENDS.values():
        mod.set_table(table)


def jordan2(a, b) -> tuple:
    """``AB + BA`` for integer coordinate tuples, exact for any size."""
    if _active is not _pyalbert:
        ma = max(map(abs, a))
        mb = max(map(abs, b))
        # each output coordinate is a sum of at most 48 products a_i * b_j
        if 48 * ma * mb < _LIMIT:
            return _active.jordan2(a, b)
    return _pyalbert.jordan2(a, b)
