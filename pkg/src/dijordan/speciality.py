"""Graded ideals of the free special Jordan dialgebra on two generators and
the tetrad criterion for speciality of its quotients."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import diassoc as da
from .diassoc import HALF, Dimonomial, Dipoly
from .errors import DegreeBoundError, DialgebraError
from .linalg import Echelon
from .membership import DIALGEBRA, jordan_span
from .order import as_order

DEFAULT_BOUND = 6
GENERATORS = ("x", "y")


def _degree(f: Dipoly) -> int:
    degs = {m.degree for m in f.keys()}
    if len(degs) != 1:
        raise DialgebraError(f"expected a homogeneous element, got degrees {sorted(degs)}")
    return degs.pop()


def _key(order):
    return lambda m: Dipoly.sort_key(m, order)


def algebra_component(d: int, gens=GENERATORS, bound: int = DEFAULT_BOUND, order=None) -> list:
    """Basis of the degree-``d`` part of the free special Jordan dialgebra."""
    if d > bound:
        raise DegreeBoundError(f"degree {d} exceeds bound {bound}")
    order = as_order(order)
    gens = order.sorted(gens)
    out = []
    for counts in itertools.product(range(d + 1), repeat=len(gens)):
        if sum(counts) != d:
            continue
        md = [(g, c) for g, c in zip(gens, counts) if c]
        out.extend(jordan_span(md, DIALGEBRA, bound=bound, order=order).basis())
    return out


def _products(a: Dipoly, w: Dipoly):
    yield da.jordan_right(a, w)
    yield da.jordan_left(a, w)
    yield da.jordan_right(w, a)
    yield da.jordan_left(w, a)


class GradedIdeal:
    """Ideal of the free special Jordan dialgebra generated by homogeneous elements.

    The degree-``n`` part is spanned by the generators of degree ``n`` and
    the four diproducts of an algebra element of degree ``p`` with an ideal
    element of degree ``n - p``.  Lower components are final once computed,
    so one pass per degree reaches the fixpoint.
    """

    def __init__(self, generators, gens=GENERATORS, bound: int = DEFAULT_BOUND, order=None):
        self.order = as_order(order)
        self.gens = tuple(self.order.sorted(gens))
        self.bound = bound
        self.generators = [g for g in generators if g]
        self._seeds: dict[int, list] = {}
        for g in self.generators:
            self._seeds.setdefault(_degree(g), []).append(g)
        self._components: dict[int, Echelon] = {}
        self._algebra: dict[int, list] = {}

    def algebra(self, p: int) -> list:
        if p not in self._algebra:
            self._algebra[p] = algebra_component(p, self.gens, self.bound, self.order)
        return self._algebra[p]

    def _build(self, n: int) -> Echelon:
        ech = Echelon(_key(self.order))
        for g in self._seeds.get(n, []):
            ech.add(g.as_dict())
        for q in range(1, n):
            if all(s > q for s in self._seeds):
                continue
            lower = self.component(q)
            if not lower.rank:
                continue
            for a in self.algebra(n - q):
                for row in lower.basis():
                    w = Dipoly._wrap(dict(row))
                    for prod in _products(a, w):
                        if prod:
                            ech.add(prod.as_dict())
        return ech

    def component(self, n: int) -> Echelon:
        if n > self.bound:
            raise DegreeBoundError(f"degree {n} exceeds bound {self.bound}")
        if n not in self._components:
            self._components[n] = self._build(n)
        return self._components[n]

    def basis(self, n: int) -> list:
        return [Dipoly._wrap(dict(r)) for r in self.component(n).basis()]

    def rank(self, n: int) -> int:
        return self.component(n).rank

    def contains(self, f: Dipoly):
        """Return ``(member, residual)`` for a homogeneous ``f``."""
        if not f:
            return True, Dipoly.zero()
        residual, _ = self.component(_degree(f)).reduce(f.as_dict())
        return not residual, Dipoly._wrap(residual)

    def closure_is_stable(self, n: int) -> bool:
        """Rebuild degree ``n`` from scratch and compare ranks."""
        return self._build(n).rank == self.rank(n)


def ideal_component(generators, d: int, gens=GENERATORS, bound: int = DEFAULT_BOUND,
                    order=None) -> GradedIdeal:
    ideal = GradedIdeal(generators, gens, bound, order)
    ideal.component(d)
    return ideal


@dataclass
class TetradVerdict:
    generator: Dipoly
    tetrad: Dipoly
    member: bool
    residual: Dipoly


@dataclass
class QuotientReport:
    special: bool
    tetrads: list = field(default_factory=list)
    ranks: dict = field(default_factory=dict)


def quotient_speciality_check(generators, gens=GENERATORS, bound: int = DEFAULT_BOUND,
                              order=None, ideal: GradedIdeal | None = None) -> QuotientReport:
    """Is the quotient by the ideal generated by ``generators`` special?

    Special iff ``{u x^ x y}`` and ``{u y^ y x}`` lie in the ideal for
    every generator ``u``.
    """
    order = as_order(order)
    x, y = order.sorted(gens)
    generators = [g for g in generators if g]
    if ideal is None:
        ideal = GradedIdeal(generators, (x, y), bound, order)
    verdicts = []
    for u in generators:
        n = _degree(u) + 3
        if n > bound:
            raise DegreeBoundError(f"tetrads of degree {n} exceed bound {bound}")
        for a, b in ((x, y), (y, x)):
            t = da.dotted_tetrad(u, a, a, b, 0)
            member, residual = ideal.contains(t)
            verdicts.append(TetradVerdict(u, t, member, residual))
    ranks = {n: ideal.rank(n) for n in sorted(ideal._components)}
    return QuotientReport(all(v.member for v in verdicts), verdicts, ranks)


# -- the exceptional two-generated quotient -----------------------------------------

def exceptional_generator(x: str = "x", y: str = "y") -> Dipoly:
    """``k = 1/2 (x^ x + x x^) - 1/2 (y^ y + y y^)``."""
    return (da.dimono((x, x), 0) + da.dimono((x, x), 1)
            - da.dimono((y, y), 0) - da.dimono((y, y), 1)) * HALF


@dataclass
class ExceptionalQuotientCertificate:
    k: Dipoly
    f: Dipoly
    closed_form: Dipoly
    matches_closed_form: bool
    f_symmetric: bool
    k_in_ideal: bool
    ranks: dict
    f_in_ideal: bool
    residual: Dipoly
    tetrads: QuotientReport

    @property
    def exceptional(self) -> bool:
        return self.matches_closed_form and not self.f_in_ideal

    def __bool__(self):
        return self.exceptional


def verify_theorem3(x: str = "x", y: str = "y", bound: int = DEFAULT_BOUND) -> ExceptionalQuotientCertificate:
    """Certify that the quotient by the ideal generated by ``k`` is exceptional.

    Builds ``f = {k x x^ y}``, checks it against ``{x x x x^ y} - {y y x x^ y}``,
    computes the degree-5 ideal component and tests ``f`` against it.
    """
    order = as_order((x, y))
    k = exceptional_generator(x, y)
    f = da.dotted_tetrad(k, x, x, y, 1)
    closed = (da.symmetrize(Dimonomial((x, x, x, x, y), 3))
              - da.symmetrize(Dimonomial((y, y, x, x, y), 3)))
    ideal = GradedIdeal([k], (x, y), bound, order)
    k_in, _ = ideal.contains(k)
    member, residual = ideal.contains(f)
    report = quotient_speciality_check([k], (x, y), bound, order, ideal)
    ranks = {n: ideal.rank(n) for n in range(2, 6)}
    return ExceptionalQuotientCertificate(
        k=k, f=f, closed_form=closed, matches_closed_form=(f == closed),
        f_symmetric=da.is_symmetric(f), k_in_ideal=k_in, ranks=ranks,
        f_in_ideal=member, residual=residual, tetrads=report,
    )
