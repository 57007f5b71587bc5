"""The free associative dialgebra over the rationals.

A dimonomial is a word with one marked (central) letter, written
``a1 ... a(k-1) ak^ a(k+1) ... an``.  Internally the mark is stored as the
0-based index ``center``.  Products of dimonomials only concatenate words;
the two products differ in which factor supplies the central letter:

* ``u -| v`` (:func:`mul_left`) keeps the central letter of ``u``;
* ``u |- v`` (:func:`mul_right`) keeps the central letter of ``v``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import NotLinearError
from .lincomb import LinComb, accumulate
from .order import DEFAULT_ORDER

HALF = Fraction(1, 2)

Word = tuple  # tuple[str, ...]


class Dimonomial(NamedTuple):
    letters: tuple
    center: int

    @property
    def central_letter(self) -> str:
        return self.letters[self.center]

    @property
    def degree(self) -> int:
        return len(self.letters)

    def __str__(self):
        return format_dimonomial(self)


def format_word(word) -> str:
    return " ".join(word)


def format_dimonomial(m: Dimonomial) -> str:
    return " ".join(a + "^" if i == m.center else a for i, a in enumerate(m.letters))


class AssocPoly(LinComb):
    """Element of the free associative algebra (keys are letter tuples)."""

    __slots__ = ()

    @staticmethod
    def sort_key(word, order=DEFAULT_ORDER):
        return (len(word), order.word_key(word))

    @staticmethod
    def format_key(word):
        return format_word(word)


class Dipoly(LinComb):
    """Element of the free associative dialgebra (keys are Dimonomials)."""

    __slots__ = ()

    @staticmethod
    def sort_key(m, order=DEFAULT_ORDER):
        return (len(m.letters), order.word_key(m.letters), m.center)

    @staticmethod
    def format_key(m):
        return format_dimonomial(m)


def word(*letters) -> AssocPoly:
    if len(letters) == 1 and not isinstance(letters[0], str):
        letters = tuple(letters[0])
    return AssocPoly._wrap({tuple(letters): Fraction(1)})


def dimonomial(letters: Iterable[str], center: int) -> Dimonomial:
    letters = tuple(letters)
    if not 0 <= center < len(letters):
        raise ValueError(f"central position {center} out of range for {letters}")
    return Dimonomial(letters, center)


def dimono(letters: Iterable[str], center: int, coeff=1) -> Dipoly:
    return Dipoly.basis(dimonomial(letters, center), coeff)


def gen(name: str) -> Dipoly:
    """The generator ``name`` as a degree-one dipolynomial."""
    return Dipoly._wrap({Dimonomial((name,), 0): Fraction(1)})


# -- products ---------------------------------------------------------------

def mul_left(f: Dipoly, g: Dipoly) -> Dipoly:
    """``f -| g``: concatenation, central letter taken from ``f``."""
    out: dict = {}
    for (u, cu), a in f.items():
        for (v, _), b in g.items():
            accumulate(out, Dimonomial(u + v, cu), a * b)
    return Dipoly._wrap(out)


def mul_right(f: Dipoly, g: Dipoly) -> Dipoly:
    """``f |- g``: concatenation, central letter taken from ``g``."""
    out: dict = {}
    for (u, _), a in f.items():
        n = len(u)
        for (v, cv), b in g.items():
            accumulate(out, Dimonomial(u + v, n + cv), a * b)
    return Dipoly._wrap(out)


def assoc_mul(p: AssocPoly, q: AssocPoly) -> AssocPoly:
    out: dict = {}
    for u, a in p.items():
        for v, b in q.items():
            accumulate(out, u + v, a * b)
    return AssocPoly._wrap(out)


def jordan_right(f: Dipoly, g: Dipoly) -> Dipoly:
    """Right Jordan diproduct ``1/2 (f |- g + g -| f)``."""
    return (mul_right(f, g) + mul_left(g, f)) * HALF


def jordan_left(f: Dipoly, g: Dipoly) -> Dipoly:
    """Left Jordan diproduct ``1/2 (f -| g + g |- f)``."""
    return (mul_left(f, g) + mul_right(g, f)) * HALF


def jordan(p: AssocPoly, q: AssocPoly) -> AssocPoly:
    return (assoc_mul(p, q) + assoc_mul(q, p)) * HALF


# -- structure maps -------------------------------------------------------

def bar(f: Dipoly) -> AssocPoly:
    """Image in the quotient by ``span{a |- b - a -| b}``: forget the mark."""
    out: dict = {}
    for (u, _), a in f.items():
        accumulate(out, u, a)
    return AssocPoly._wrap(out)


def involution(f):
    """Reverse every word; the central letter keeps its mark.

    Works on both :class:`Dipoly` and :class:`AssocPoly`.
    """
    if isinstance(f, AssocPoly):
        return AssocPoly._wrap({u[::-1]: a for u, a in f.items()})
    return Dipoly._wrap(
        {Dimonomial(u[::-1], len(u) - 1 - c): a for (u, c), a in f.items()}
    )


star = involution


def symmetrize(u) -> Dipoly:
    """``{u} = u + u*`` for a dimonomial (or any dipolynomial)."""
    if isinstance(u, Dimonomial):
        u = Dipoly.basis(u)
    return u + involution(u)


def is_symmetric(f) -> bool:
    return f == involution(f)


def central_decompose(f: Dipoly) -> dict:
    """Split ``f`` by central letter."""
    parts: dict = {}
    for m, a in f.items():
        parts.setdefault(m.letters[m.center], {})[m] = a
    return {v: Dipoly._wrap(d) for v, d in parts.items()}


def multidegree(letters) -> tuple:
    """Canonical multidegree of a word: sorted ``(letter, count)`` pairs."""
    return tuple(sorted(Counter(letters).items()))


def homogeneous_components(f) -> dict:
    """Split a polynomial or dipolynomial into multihomogeneous parts."""
    parts: dict = {}
    for k, a in f.items():
        letters = k.letters if isinstance(k, Dimonomial) else k
        parts.setdefault(multidegree(letters), {})[k] = a
    return {d: type(f)._wrap(c) for d, c in parts.items()}


def variables(f) -> set:
    out = set()
    for k in f.keys():
        out.update(k.letters if isinstance(k, Dimonomial) else k)
    return out


def degree_in(f, z: str) -> set:
    """Set of degrees in ``z`` over the monomials of ``f``."""
    return {
        (k.letters if isinstance(k, Dimonomial) else k).count(z) for k in f.keys()
    }


# -- dot placement --------------------------------------------------------

def psi_as(f: AssocPoly, z: str) -> Dipoly:
    """Mark the unique occurrence of ``z`` in every monomial.

    Requires every monomial to have degree exactly one in ``z``.
    """
    out: dict = {}
    for u, a in f.items():
        if u.count(z) != 1:
            raise NotLinearError(
                f"monomial {format_word(u)!r} has degree {u.count(z)} in {z!r}; need 1"
            )
        out[Dimonomial(u, u.index(z))] = a
    return Dipoly._wrap(out)


def lift_right(w: AssocPoly) -> Dipoly:
    """``w^|-``: every product points right, so the last letter is central."""
    return Dipoly._wrap({Dimonomial(u, len(u) - 1): a for u, a in w.items()})


def lift_left(w: AssocPoly) -> Dipoly:
    """``w^-|``: the first letter is central."""
    return Dipoly._wrap({Dimonomial(u, 0): a for u, a in w.items()})


# -- substitution ----------------------------------------------------------

def _assoc_product(factors) -> dict:
    acc = {(): Fraction(1)}
    for fac in factors:
        nxt: dict = {}
        for u, a in acc.items():
            for v, b in fac:
                accumulate(nxt, u + v, a * b)
        acc = nxt
    return acc


def substitute(f: Dipoly, z: str, g: Dipoly) -> Dipoly:
    """Replace the variable ``z`` by ``g`` in ``f``.

    A non-central occurrence of ``z`` becomes ``bar(g)``; a central one is
    spliced with the dimonomials of ``g``, whose mark becomes the mark of
    the result.
    """
    gbar = bar(g)
    out: dict = {}
    for (u, c), a in f.items():
        if z not in u:
            accumulate(out, Dimonomial(u, c), a)
            continue
        left = _assoc_product(
            gbar.items() if x == z else ((((x,), Fraction(1)),)) for x in u[:c]
        )
        right = _assoc_product(
            gbar.items() if x == z else ((((x,), Fraction(1)),)) for x in u[c + 1:]
        )
        if u[c] == z:
            mid = list(g.items())
        else:
            mid = [(Dimonomial((u[c],), 0), Fraction(1))]
        for l, la in left.items():
            for (m, mc), ma in mid:
                for r, ra in right.items():
                    accumulate(out, Dimonomial(l + m + r, len(l) + mc), a * la * ma * ra)
    return Dipoly._wrap(out)


def rename(f, mapping: dict):
    """Rename variables letter-by-letter (marks are kept)."""
    if isinstance(f, AssocPoly):
        out: dict = {}
        for u, a in f.items():
            accumulate(out, tuple(mapping.get(x, x) for x in u), a)
        return AssocPoly._wrap(out)
    out = {}
    for (u, c), a in f.items():
        accumulate(out, Dimonomial(tuple(mapping.get(x, x) for x in u), c), a)
    return Dipoly._wrap(out)


def dotted_tetrad(u, a: str, b: str, c: str, dot: int) -> Dipoly:
    """``{u abc}`` with the mark on ``(a, b, c)[dot]``.

    Only ``bar(u)`` matters: ``u`` sits left of the mark.  ``u`` may be a
    Dipoly, an AssocPoly or a single letter.
    """
    if dot not in (0, 1, 2):
        raise ValueError("dot must select one of the three letters (0, 1 or 2)")
    if isinstance(u, str):
        u = word(u)
    ubar = u if isinstance(u, AssocPoly) else bar(u)
    w = mul_right(lift_right(ubar), dimono((a, b, c), dot))
    return symmetrize(w)
