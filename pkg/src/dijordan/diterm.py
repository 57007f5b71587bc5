"""Nonassociative terms and the Jordan expansion maps.

Terms are plain tuples so they hash and compare cheaply:

* a leaf is a ``str`` (a generator name);
* an algebra product ``u v`` is the pair ``(u, v)``;
* a dialgebra product is the triple ``(op, u, v)`` with ``op`` one of
  :data:`RIGHT` (``u |- v``) or :data:`LEFT` (``u -| v``).

Under :func:`J` the single product is read as the Jordan product
``1/2 (ab + ba)`` in the free associative algebra; under :func:`J_di` the
two operations are read as the Jordan diproducts in the free associative
dialgebra.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import diassoc as da
from .diassoc import AssocPoly, Dimonomial, Dipoly
from .errors import DialgebraError, NotLinearError
from .lincomb import LinComb, accumulate
from .order import DEFAULT_ORDER, fresh_name

RIGHT = "|>"
LEFT = "<|"


def is_leaf(t) -> bool:
    return isinstance(t, str)


def is_di(t) -> bool:
    """True if ``t`` is built with dialgebra operations."""
    return not isinstance(t, str) and len(t) == 3


def alg(u, v):
    return (u, v)


def right(u, v):
    return (RIGHT, u, v)


def left(u, v):
    return (LEFT, u, v)


def children(t):
    return t[-2], t[-1]


def leaves(t) -> list:
    if isinstance(t, str):
        return [t]
    a, b = children(t)
    return leaves(a) + leaves(b)


def degree(t) -> int:
    if isinstance(t, str):
        return 1
    a, b = children(t)
    return degree(a) + degree(b)


def contains(t, z: str) -> bool:
    if isinstance(t, str):
        return t == z
    a, b = children(t)
    return contains(a, z) or contains(b, z)


def format_term(t, top: bool = True) -> str:
    if isinstance(t, str):
        return t
    if len(t) == 2:
        body = f"{format_term(t[0], False)} . {format_term(t[1], False)}"
    else:
        body = f"{format_term(t[1], False)} {t[0]} {format_term(t[2], False)}"
    return body if top else f"({body})"


def term_key(t, order=DEFAULT_ORDER):
    """Deterministic sort key: degree, then leaf order, then tree shape."""
    return (degree(t), order.word_key(leaves(t)), _shape_code(t))


def _shape_code(t) -> str:
    if isinstance(t, str):
        return "a"
    if len(t) == 2:
        return "(" + _shape_code(t[0]) + _shape_code(t[1]) + ")"
    return "(" + _shape_code(t[1]) + ("r" if t[0] == RIGHT else "l") + _shape_code(t[2]) + ")"


class TermPoly(LinComb):
    """Linear combination of algebra terms or dialgebra terms."""

    __slots__ = ()

    @staticmethod
    def sort_key(t, order=DEFAULT_ORDER):
        return term_key(t, order)

    @staticmethod
    def format_key(t):
        return format_term(t)

    def is_dialgebraic(self) -> bool:
        return any(is_di(t) for t in self.keys())


def term(t, coeff=1) -> TermPoly:
    return TermPoly.basis(t, coeff)


def as_termpoly(f) -> TermPoly:
    if isinstance(f, TermPoly):
        return f
    return TermPoly.basis(f)


def term_map(f: TermPoly, fn) -> TermPoly:
    """Apply a term -> TermPoly map linearly."""
    out: dict = {}
    for t, a in f.items():
        for s, b in as_termpoly(fn(t)).items():
            accumulate(out, s, a * b)
    return TermPoly._wrap(out)


def term_variables(f) -> set:
    out = set()
    for t in as_termpoly(f).keys():
        out.update(leaves(t))
    return out


# -- Jordan expansions -----------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _J_term(t) -> AssocPoly:
    if isinstance(t, str):
        return AssocPoly._wrap({(t,): Fraction(1)})
    u, v = children(t)
    return da.jordan(_J_term(u), _J_term(v))


@lru_cache(maxsize=1 << 16)
def _J_di_term(t) -> Dipoly:
    if isinstance(t, str):
        return da.gen(t)
    if len(t) == 2:
        raise DialgebraError("J_di needs dialgebra terms; got an algebra product")
    op, u, v = t
    fu, fv = _J_di_term(u), _J_di_term(v)
    if op == RIGHT:
        return da.jordan_right(fu, fv)
    return da.jordan_left(fu, fv)


def _expand(f, fn, zero):
    out: dict = {}
    for t, a in as_termpoly(f).items():
        for k, b in fn(t).items():
            accumulate(out, k, a * b)
    return zero._wrap(out)


def J(f) -> AssocPoly:
    """Rewrite every product of an algebra term polynomial as ``1/2(ab+ba)``."""
    return _expand(f, _J_term, AssocPoly)


def J_di(f) -> Dipoly:
    """Rewrite ``|-``/``-|`` of a dialgebra term polynomial as Jordan diproducts."""
    return _expand(f, _J_di_term, Dipoly)


def evaluate_jordan(t, values: dict) -> Dipoly:
    """J_di with leaves valued in arbitrary dipolynomials."""
    if isinstance(t, str):
        return values[t] if t in values else da.gen(t)
    op, u, v = t
    fu, fv = evaluate_jordan(u, values), evaluate_jordan(v, values)
    return da.jordan_right(fu, fv) if op == RIGHT else da.jordan_left(fu, fv)


# -- operation-forgetting and dot placement -----------------------------------

def bar_term(t):
    """Forget dialgebra operation labels."""
    if isinstance(t, str):
        return t
    if len(t) == 2:
        return (bar_term(t[0]), bar_term(t[1]))
    return (bar_term(t[1]), bar_term(t[2]))


def bar_terms(f: TermPoly) -> TermPoly:
    return term_map(f, bar_term)


def point(t, op: str):
    """All operations of ``t`` set to ``op`` (``u^|-`` or ``u^-|``)."""
    if isinstance(t, str):
        return t
    u, v = children(t)
    return (op, point(u, op), point(v, op))


def lift_term_right(t):
    return point(t, RIGHT)


def lift_term_left(t):
    return point(t, LEFT)


def _psi_term(t, z):
    if t == z:
        return z
    if isinstance(t, str):
        raise NotLinearError(f"term does not contain {z!r}")
    u, v = children(t)
    zu, zv = contains(u, z), contains(v, z)
    if zu and zv:
        raise NotLinearError(f"{z!r} occurs more than once in {format_term(t)}")
    if zu:
        return (LEFT, _psi_term(u, z), point(v, LEFT))
    if zv:
        return (RIGHT, point(u, RIGHT), _psi_term(v, z))
    raise NotLinearError(f"term {format_term(t)} does not contain {z!r}")


def psi_alg(f, z: str) -> TermPoly:
    """Place dialgebra operations so that every sign points at ``z``.

    Every term must have degree exactly one in ``z``.
    """
    f = as_termpoly(f)
    out: dict = {}
    for t, a in f.items():
        if is_di(t):
            t = bar_term(t)
        if leaves(t).count(z) != 1:
            raise NotLinearError(
                f"term {format_term(t)} has degree {leaves(t).count(z)} in {z!r}; need 1"
            )
        accumulate(out, _psi_term(t, z), a)
    return TermPoly._wrap(out)


def central_letter(t) -> str:
    while not isinstance(t, str):
        if len(t) == 2:
            raise DialgebraError("algebra terms have no central letter")
        op, u, v = t
        t = v if op == RIGHT else u
    return t


def _central_index(t) -> int:
    if isinstance(t, str):
        return 0
    op, u, v = t
    if op == RIGHT:
        return degree(u) + _central_index(v)
    return _central_index(u)


def forget_to_diassoc(t) -> Dimonomial:
    """Image of a dialgebra term in the free associative dialgebra."""
    return Dimonomial(tuple(leaves(t)), _central_index(t))


def to_dipoly(f) -> Dipoly:
    out: dict = {}
    for t, a in as_termpoly(f).items():
        accumulate(out, forget_to_diassoc(t), a)
    return Dipoly._wrap(out)


class ZeroForm(NamedTuple):
    """Basis element of the free 0-dialgebra: shape, letters, central index."""

    shape: object
    letters: tuple
    center: int

    def to_term(self):
        """Rebuild the term whose operations all point at the central leaf."""
        def rebuild(s, offset):
            if s is None:
                return self.letters[offset], offset + 1
            lt, mid = rebuild(s[0], offset)
            rt, end = rebuild(s[1], mid)
            op = RIGHT if self.center >= mid else LEFT
            return (op, lt, rt), end

        return rebuild(self.shape, 0)[0]


def _shape(t):
    if isinstance(t, str):
        return None
    u, v = children(t)
    return (_shape(u), _shape(v))


def canonical_0form(t) -> ZeroForm:
    """Canonical representative of ``t`` modulo the two 0-identities."""
    return ZeroForm(_shape(t), tuple(leaves(t)), _central_index(t))


# -- linearization --------------------------------------------------------------

def _replace_occurrences(t, x, names, pos):
    """Replace successive occurrences of ``x`` by ``names`` (pos is a 1-list)."""
    if isinstance(t, str):
        if t == x:
            name = names[pos[0]]
            pos[0] += 1
            return name
        return t
    if len(t) == 2:
        return (_replace_occurrences(t[0], x, names, pos),
                _replace_occurrences(t[1], x, names, pos))
    return (t[0], _replace_occurrences(t[1], x, names, pos),
            _replace_occurrences(t[2], x, names, pos))


def linearize(f, x: str, n: int | None = None) -> TermPoly:
    """Full linearization in ``x``: sum over all ways to give the ``n``
    occurrences of ``x`` the distinct fresh names ``x#1 .. x#n``.

    ``f`` must be homogeneous of degree ``n`` in ``x``.  Identifying the
    fresh variables with ``x`` again gives ``n! * f``.
    """
    f = as_termpoly(f)
    degs = {leaves(t).count(x) for t in f.keys()}
    if n is None:
        if len(degs) > 1:
            raise NotLinearError(f"not homogeneous in {x!r}: degrees {sorted(degs)}")
        n = degs.pop() if degs else 0
    if degs and degs != {n}:
        raise NotLinearError(f"not homogeneous of degree {n} in {x!r}: degrees {sorted(degs)}")
    names = [fresh_name(x, i) for i in range(1, n + 1)]
    out: dict = {}
    for t, a in f.items():
        for perm in itertools.permutations(names):
            accumulate(out, _replace_occurrences(t, x, perm, [0]), a)
    return TermPoly._wrap(out)


def full_linearization(f) -> TermPoly:
    """Linearize in every variable occurring with degree > 1."""
    f = as_termpoly(f)
    for x in sorted(term_variables(f)):
        degs = {leaves(t).count(x) for t in f.keys()}
        if max(degs) > 1:
            f = linearize(f, x)
    return f


def substitute_vars(f, mapping: dict) -> TermPoly:
    """Rename leaves (e.g. identify fresh variables again)."""
    def sub(t):
        if isinstance(t, str):
            return mapping.get(t, t)
        if len(t) == 2:
            return (sub(t[0]), sub(t[1]))
        return (t[0], sub(t[1]), sub(t[2]))

    out: dict = {}
    for t, a in as_termpoly(f).items():
        accumulate(out, sub(t), a)
    return TermPoly._wrap(out)


def is_multilinear(f) -> bool:
    f = as_termpoly(f)
    varsets = set()
    for t in f.keys():
        ls = leaves(t)
        if len(set(ls)) != len(ls):
            return False
        varsets.add(frozenset(ls))
    return len(varsets) <= 1


def term_multidegree(t) -> tuple:
    return tuple(sorted(Counter(leaves(t)).items()))


# -- standard identities ------------------------------------------------------------

def _poly(pairs) -> TermPoly:
    out: dict = {}
    for t, a in pairs:
        accumulate(out, t, Fraction(a))
    return TermPoly._wrap(out)


def commutativity(x1="x1", x2="x2") -> TermPoly:
    return _poly([((x1, x2), 1), ((x2, x1), -1)])


def jordan_identity(x1="x1", x2="x2", x3="x3", x4="x4") -> TermPoly:
    """Multilinear Jordan identity ``J(x1, x2, x3, x4)`` as an algebra term polynomial."""
    return _poly([
        ((x1, (x2, (x3, x4))), 1),
        (((x2, (x1, x3)), x4), 1),
        ((x3, (x2, (x1, x4))), 1),
        (((x1, x2), (x3, x4)), -1),
        (((x1, x3), (x2, x4)), -1),
        (((x3, x2), (x1, x4)), -1),
    ])


def right_commutativity(x1="x1", x2="x2") -> TermPoly:
    """``x1 |- x2 - x2 -| x1``."""
    return _poly([((RIGHT, x1, x2), 1), ((LEFT, x2, x1), -1)])


def dotted_jordan_identities(names=("x1", "x2", "x3", "x4")) -> list:
    """The four dotted Jordan identities: every sign points at one variable."""
    j = jordan_identity(*names)
    return [psi_alg(j, z) for z in names]


def jordan_dialgebra_identities(names=("x1", "x2", "x3", "x4")) -> list:
    return [right_commutativity(names[0], names[1])] + dotted_jordan_identities(names)


def zero_identities(x="x", y="y", z="z") -> list:
    """The two identities defining 0-dialgebras."""
    return [
        _poly([((RIGHT, (LEFT, x, y), z), 1), ((RIGHT, (RIGHT, x, y), z), -1)]),
        _poly([((LEFT, x, (RIGHT, y, z)), 1), ((LEFT, x, (LEFT, y, z)), -1)]),
    ]


def associative_dialgebra_identities(x="x", y="y", z="z") -> list:
    """0-identities plus the three associator identities."""
    return zero_identities(x, y, z) + [
        _poly([((RIGHT, (RIGHT, x, y), z), 1), ((RIGHT, x, (RIGHT, y, z)), -1)]),
        _poly([((LEFT, (LEFT, x, y), z), 1), ((LEFT, x, (LEFT, y, z)), -1)]),
        _poly([((LEFT, (RIGHT, x, y), z), 1), ((RIGHT, x, (LEFT, y, z)), -1)]),
    ]
