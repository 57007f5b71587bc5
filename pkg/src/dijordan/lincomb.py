"""Sparse linear combinations with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterator, Mapping

from .linalg import format_scalar, scalar
from .order import DEFAULT_ORDER


class LinComb:
    """Immutable finite linear combination ``sum c_k * k`` over the rationals.

    Subclasses fix the kind of basis element and provide ``sort_key`` and
    ``format_key`` for canonical printing.  Zero coefficients are never
    stored, so structural equality is mathematical equality.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, terms=None):
        c: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, v in items:
                w = c.get(k, 0) + scalar(v)
                if w:
                    c[k] = w
                else:
                    c.pop(k, None)
        self._c = c
        self._hash = None

    @classmethod
    def _wrap(cls, c: dict):
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def zero(cls):
        return cls._wrap({})

    @classmethod
    def basis(cls, key, coeff=1):
        return cls._wrap({key: scalar(coeff)}) if coeff else cls._wrap({})

    # mapping-like access
    def items(self):
        return self._c.items()

    def keys(self):
        return self._c.keys()

    def coefficient(self, key) -> Fraction:
        return self._c.get(key, Fraction(0))

    def as_dict(self) -> dict:
        return dict(self._c)

    def __iter__(self) -> Iterator:
        return iter(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __contains__(self, key) -> bool:
        return key in self._c

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return type(self) is type(other) and self._c == other._c
        if other == 0:
            return not self._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._c.items())))
        return self._hash

    # arithmetic
    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        c = dict(self._c)
        for k, v in other._c.items():
            w = c.get(k, 0) + v
            if w:
                c[k] = w
            else:
                c.pop(k, None)
        return self._wrap(c)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, factor):
        if isinstance(factor, LinComb):
            return NotImplemented
        f = scalar(factor)
        if not f:
            return self._wrap({})
        return self._wrap({k: v * f for k, v in self._c.items()})

    __rmul__ = __mul__

    def __truediv__(self, factor):
        return self * (1 / scalar(factor))

    # presentation
    @staticmethod
    def sort_key(key, order=DEFAULT_ORDER):
        return key

    @staticmethod
    def format_key(key) -> str:
        return str(key)

    def sorted_items(self, order=DEFAULT_ORDER):
        return sorted(self._c.items(), key=lambda kv: self.sort_key(kv[0], order))

    def to_string(self, order=DEFAULT_ORDER) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, (k, v) in enumerate(self.sorted_items(order)):
            body = self.format_key(k)
            mag = abs(v)
            text = body if mag == 1 else f"{format_scalar(mag)} {body}"
            if i == 0:
                parts.append(f"-{text}" if v < 0 else text)
            else:
                parts.append(f"{'-' if v < 0 else '+'} {text}")
        return " ".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"{type(self).__name__}({self.to_string()!r})"


def accumulate(dst: dict, key: Hashable, value) -> None:
    w = dst.get(key, 0) + value
    if w:
        dst[key] = w
    else:
        dst.pop(key, None)
