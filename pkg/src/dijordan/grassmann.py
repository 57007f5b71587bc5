"""The Grassmann dialgebra: free associative dialgebra modulo ``x -| y + y |- x``.

Normal words are ``x1^ x2 ... xk`` with ``x2 < ... < xk`` in the symbol
order.  Two reducers are provided:

* :func:`rewrite_monomial` applies the oriented relations one step at a time
  (the reference used to check confluence);
* :func:`reduce` uses the closed form: move the central letter to the front
  and sort the tail, each adjacent swap costing a sign, and a repeated tail
  letter giving zero.
"""

from __future__ import annotations

from math import comb
from typing import NamedTuple

from . import diassoc as da
from .diassoc import Dimonomial, Dipoly, format_dimonomial
from .lincomb import LinComb, accumulate
from .order import DEFAULT_ORDER, as_order


class NormalWord(NamedTuple):
    head: str
    tail: tuple

    def dimonomial(self) -> Dimonomial:
        return Dimonomial((self.head,) + self.tail, 0)

    def __str__(self):
        return format_dimonomial(self.dimonomial())


class GrassmannElement(LinComb):
    """Element of the Grassmann dialgebra in the normal-word basis."""

    __slots__ = ()

    @staticmethod
    def sort_key(w, order=DEFAULT_ORDER):
        return (1 + len(w.tail), order.key(w.head), order.word_key(w.tail))

    @staticmethod
    def format_key(w):
        return str(w)

    def to_dipoly(self) -> Dipoly:
        return Dipoly._wrap({w.dimonomial(): a for w, a in self.items()})


def normal_form(m: Dimonomial, order=None):
    """Closed-form reduction of one dimonomial: ``(sign, NormalWord)`` or None."""
    order = as_order(order)
    letters, c = m
    # moving the central letter to the front passes c letters
    sign = -1 if c % 2 else 1
    tail = list(letters[:c] + letters[c + 1:])
    keys = [order.key(a) for a in tail]
    if len(set(keys)) != len(keys):
        return None
    # parity of the sorting permutation via inversion count
    inv = sum(1 for i in range(len(keys)) for j in range(i + 1, len(keys)) if keys[i] > keys[j])
    if inv % 2:
        sign = -sign
    tail.sort(key=order.key)
    return sign, NormalWord(letters[c], tuple(tail))


def reduce(f: Dipoly, order=None) -> GrassmannElement:
    """Normal form of ``f`` in the normal-word basis."""
    order = as_order(order)
    out: dict = {}
    for m, a in f.items():
        r = normal_form(m, order)
        if r is not None:
            accumulate(out, r[1], a * r[0])
    return GrassmannElement._wrap(out)


def sigma(f: Dipoly, order=None) -> GrassmannElement:
    """Projection onto the Grassmann dialgebra (the homomorphism fixing X)."""
    return reduce(f, order)


def basis_count(n: int, k: int) -> int:
    """Number of normal words of degree ``k`` on ``n`` generators."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    return n * comb(n, k - 1)


def normal_words(gens, k: int, order=None):
    from itertools import combinations

    order = as_order(order)
    gens = order.sorted(gens)
    return [NormalWord(h, tail) for h in gens for tail in combinations(gens, k - 1)]


def product(f: GrassmannElement, g: GrassmannElement, op: str, order=None) -> GrassmannElement:
    """Product in the Grassmann dialgebra: multiply representatives, reduce."""
    fd, gd = f.to_dipoly(), g.to_dipoly()
    prod = da.mul_right(fd, gd) if op == "|>" else da.mul_left(fd, gd)
    return reduce(prod, order)


# -- rewriting reference ----------------------------------------------------------
#
# Relations with their leading dimonomial (x, y, z generators):
#   R1  y x^      -> -x^ y            only where the mark is on x
#   R2  x^ y z    -> -x^ z y   (y > z)
#   R3  x y z^    -> -y x z^   (x > y)
#   R4  x x y^    -> 0
#   R5  x^ y y    -> 0
# R2..R5 also apply to a subword that does not contain the mark (their
# leading words stay leading there); R1 does not, its letter image being
# symmetric.

def _successors(m: Dimonomial, order):
    """All one-step rewrites of ``m`` as ``(sign, Dimonomial | None)``."""
    letters, c = m
    n = len(letters)
    gt = lambda a, b: order.key(a) > order.key(b)  # noqa: E731
    out = []
    if c >= 1:
        new = letters[:c - 1] + (letters[c], letters[c - 1]) + letters[c + 1:]
        out.append((-1, Dimonomial(new, c - 1)))
    for i in range(n - 2):
        a, b, d = letters[i:i + 3]
        inside = i <= c <= i + 2
        if (not inside or c == i) and gt(b, d):
            new = letters[:i] + (a, d, b) + letters[i + 3:]
            out.append((-1, Dimonomial(new, c)))
        if (not inside or c == i + 2) and gt(a, b):
            new = letters[:i] + (b, a, d) + letters[i + 3:]
            out.append((-1, Dimonomial(new, c)))
        if (not inside or c == i + 2) and a == b:
            out.append((1, None))
        if (not inside or c == i) and b == d:
            out.append((1, None))
    return out


def rewrite_monomial(m: Dimonomial, order=None, choose=0):
    """Follow one maximal rewriting sequence from ``m``.

    ``choose`` picks which applicable rule fires at each step (taken modulo
    the number available), so different values explore different paths.
    Returns ``(coefficient, irreducible Dimonomial | None)``.
    """
    order = as_order(order)
    sign = 1
    step = 0
    while True:
        succ = _successors(m, order)
        if not succ:
            return sign, m
        s, m = succ[(choose + step) % len(succ)]
        step += 1
        if m is None:
            return 0, None
        sign *= s


def all_normal_forms(m: Dimonomial, order=None, memo: dict | None = None) -> frozenset:
    """Every ``(coefficient, word)`` reachable by some maximal rewriting path.

    A zero result is recorded as ``(0, None)``.  Pass the same ``memo`` dict
    across calls to share work when sweeping many words.
    """
    order = as_order(order)
    if memo is None:
        memo = {}
    stack = [m]
    while stack:
        mono = stack[-1]
        if mono in memo:
            stack.pop()
            continue
        succ = _successors(mono, order)
        pending = [nxt for _, nxt in succ if nxt is not None and nxt not in memo]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        if not succ:
            memo[mono] = frozenset({(1, mono)})
            continue
        res = set()
        for s, nxt in succ:
            if nxt is None:
                res.add((0, None))
            else:
                res.update((0, None) if c == 0 else (s * c, w) for c, w in memo[nxt])
        memo[mono] = frozenset(res)
    return memo[m]


def confluence_sweep(gens, max_degree: int, order=None) -> dict:
    """Map every dimonomial of degree <= ``max_degree`` to its normal-form set."""
    from itertools import product as cartesian

    order = as_order(order)
    memo: dict = {}
    out = {}
    for k in range(1, max_degree + 1):
        for letters in cartesian(sorted(gens, key=order.key), repeat=k):
            for c in range(k):
                m = Dimonomial(letters, c)
                out[m] = all_normal_forms(m, order, memo)
    return out


def reduce_by_rewriting(f: Dipoly, order=None) -> GrassmannElement:
    order = as_order(order)
    out: dict = {}
    for m, a in f.items():
        s, w = rewrite_monomial(m, order)
        if w is not None:
            accumulate(out, NormalWord(w.letters[0], w.letters[1:]), a * s)
    return GrassmannElement._wrap(out)


def is_normal(m: Dimonomial, order=None) -> bool:
    order = as_order(order)
    if m.center != 0:
        return False
    keys = [order.key(a) for a in m.letters[1:]]
    return all(keys[i] < keys[i + 1] for i in range(len(keys) - 1))

