import random

import pytest

from dijordan import albert as al
from dijordan import kernels
from dijordan.kernels import _pyalbert


def _pairs(n, seed=0, size=5):
    rng = random.Random(seed)
    return [(tuple(rng.randint(-size, size) for _ in range(27)),
             tuple(rng.randint(-size, size) for _ in range(27))) for _ in range(n)]


def test_python_backend_always_available():
    assert "python" in kernels.available()


@pytest.mark.skipif("cython" not in kernels.available(), reason="compiled kernel not built")
def test_backends_agree():
    mod = kernels._BACKENDS["cython"]
    for a, b in _pairs(200):
        assert tuple(mod.jordan2(a, b)) == tuple(_pyalbert.jordan2(a, b))


def test_large_entries_use_exact_path():
    big = 10 ** 30
    a = (big,) + (0,) * 26
    b = (big,) + (1,) * 26
    assert tuple(kernels.jordan2(a, b)) == tuple(_pyalbert.jordan2(a, b))


def test_set_backend_switches_and_validates():
    before = kernels.backend()
    try:
        kernels.set_backend("python")
        x = al.AlbertElement.unit() * al.AlbertElement.basis(5)
        assert x == al.AlbertElement.basis(5)
        with pytest.raises(ValueError):
            kernels.set_backend("fortran")
    finally:
        kernels.set_backend(before)
