"""Total order on generator symbols.

Declared symbols come first in declaration order, then any other user
symbol lexicographically, then fresh linearization symbols ``x#1, x#2, ...``.
"""

from __future__ import annotations

from typing import Iterable


def is_fresh(name: str) -> bool:
    return "#" in name


def fresh_name(base: str, i: int) -> str:
    return f"{base}#{i}"


class SymbolOrder:
    def __init__(self, names: Iterable[str] = ()):
        self.names = tuple(names)
        self._rank = {n: i for i, n in enumerate(self.names)}

    def key(self, name: str):
        r = self._rank.get(name)
        if r is not None:
            return (0, r, "", 0)
        if is_fresh(name):
            base, _, idx = name.rpartition("#")
            return (2, 0, base, int(idx) if idx.isdigit() else 0)
        return (1, 0, name, 0)

    def word_key(self, letters):
        k = self.key
        return tuple(k(a) for a in letters)

    def sorted(self, names: Iterable[str]) -> list[str]:
        return sorted(names, key=self.key)

    def __repr__(self):
        return f"SymbolOrder({list(self.names)!r})"


DEFAULT_ORDER = SymbolOrder()


def as_order(order) -> SymbolOrder:
    if order is None:
        return DEFAULT_ORDER
    if isinstance(order, SymbolOrder):
        return order
    return SymbolOrder(order)
