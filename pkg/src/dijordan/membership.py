"""Deciding membership in the images of the Jordan expansion maps.

Everything is decided one multihomogeneous component at a time: both
expansion maps preserve multidegree, and the dialgebra map also preserves the
central letter, so a component is a Jordan (di)polynomial exactly when each
of its pieces is.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import diassoc as da
from . import diterm as dt
from .diassoc import AssocPoly, Dimonomial, Dipoly
from .diterm import RIGHT, TermPoly
from .errors import DegreeBoundError, DialgebraError, NotLinearError
from .linalg import Echelon
from .lincomb import accumulate
from .order import as_order

DEFAULT_BOUND = 8

ALGEBRA = "algebra"
DIALGEBRA = "dialgebra"


# -- enumeration of Jordan monomials ----------------------------------------------

def _splits(counts):
    """All ``(d1, d2)`` with ``d1 + d2 = counts`` and both nonzero."""
    ranges = [range(c + 1) for c in counts]
    total = sum(counts)
    for d1 in itertools.product(*ranges):
        s = sum(d1)
        if 0 < s < total:
            yield d1, tuple(c - a for c, a in zip(counts, d1))


def jordan_monomials(multidegree, flavor: str = ALGEBRA, central: str | None = None,
                     atoms=None):
    """Nonassociative monomials of the given multidegree.

    ``multidegree`` is a sequence of ``(variable, count)`` pairs.  In the
    algebra flavor only one of ``uv``/``vu`` is produced (they expand alike).
    In the dialgebra flavor only ``|-`` nodes are produced, since
    ``a -|o b = b |-o a``; the central letter of such a tree is its rightmost
    leaf, which ``central`` can pin.

    ``atoms`` optionally maps extra leaf labels to ``(counts, central_letter)``
    so that fixed dipolynomials (tetrads) can serve as leaves.
    """
    names = [v for v, _ in multidegree]
    target = tuple(c for _, c in multidegree)
    atom_list = []
    for label, (acounts, acentral) in (atoms or {}).items():
        atom_list.append((label, tuple(acounts.get(v, 0) for v in names), acentral))
    memo: dict = {}

    def gen(counts, need):
        key = (counts, need)
        if key in memo:
            return memo[key]
        out = []
        if sum(counts) == 1:
            v = names[counts.index(1)]
            if need is None or need == v:
                out.append(v)
        for label, acounts, acentral in atom_list:
            if acounts == counts and (need is None or need == acentral):
                out.append(label)
        if flavor == ALGEBRA:
            for d1, d2 in _splits(counts):
                if d1 < d2:
                    continue
                left, right = gen(d1, None), gen(d2, None)
                if d1 == d2:
                    out.extend((left[i], left[j]) for i in range(len(left)) for j in range(i, len(left)))
                else:
                    out.extend((u, v) for u in left for v in right)
        else:
            for d1, d2 in _splits(counts):
                left, right = gen(d1, None), gen(d2, need)
                out.extend((RIGHT, u, v) for u in left for v in right)
        memo[key] = out
        return out

    return gen(target, central)


def _normalize_multidegree(multidegree, order) -> tuple:
    if isinstance(multidegree, dict):
        items = multidegree.items()
    else:
        items = multidegree
    return tuple(sorted(((v, c) for v, c in items if c), key=lambda vc: order.key(vc[0])))


class JordanSpan:
    """Row-reduced image of all Jordan monomials of one multidegree.

    Each basis row remembers which combination of monomials produced it, so
    membership comes with an explicit preimage.
    """

    def __init__(self, multidegree, flavor: str = ALGEBRA, central: str | None = None,
                 bound: int = DEFAULT_BOUND, order=None, atoms=None):
        order = as_order(order)
        self.multidegree = _normalize_multidegree(multidegree, order)
        self.flavor = flavor
        self.central = central
        self.order = order
        total = sum(c for _, c in self.multidegree)
        if total > bound:
            raise DegreeBoundError(f"total degree {total} exceeds bound {bound}")
        if flavor == ALGEBRA:
            self._kind = AssocPoly
            key = lambda w: AssocPoly.sort_key(w, order)  # noqa: E731
        elif flavor == DIALGEBRA:
            self._kind = Dipoly
            key = lambda m: Dipoly.sort_key(m, order)  # noqa: E731
        else:
            raise ValueError(f"unknown flavor {flavor!r}")
        atom_values = {}
        atom_shapes = {}
        for label, value in (atoms or {}).items():
            (mdeg,) = da.homogeneous_components(value).keys()
            (ac,) = da.central_decompose(value).keys()
            atom_values[label] = value
            atom_shapes[label] = (dict(mdeg), ac)
        self.atoms = atom_values
        self.monomials = jordan_monomials(self.multidegree, flavor, central, atom_shapes)
        self.echelon = Echelon(key)
        for t in self.monomials:
            self.echelon.add(self.expand(t).as_dict(), {t: Fraction(1)})

    def expand(self, t):
        if self.flavor == ALGEBRA:
            return dt.J(t)
        if self.atoms:
            return dt.evaluate_jordan(t, self.atoms)
        return dt.J_di(t)

    @property
    def dimension(self) -> int:
        return self.echelon.rank

    def basis(self) -> list:
        return [self._kind._wrap(dict(r)) for r in self.echelon.basis()]

    def decide(self, f):
        """Return ``(member, preimage, residual)`` for a homogeneous ``f``."""
        residual, combo = self.echelon.reduce(f.as_dict())
        if residual:
            return False, None, self._kind._wrap(residual)
        return True, TermPoly._wrap(combo), None


_SPAN_CACHE: dict = {}


def jordan_span(multidegree, flavor: str = ALGEBRA, central: str | None = None,
                bound: int = DEFAULT_BOUND, order=None) -> JordanSpan:
    """Cached :class:`JordanSpan` of one multidegree component."""
    order = as_order(order)
    md = _normalize_multidegree(multidegree, order)
    key = (md, flavor, central, order.names)
    span = _SPAN_CACHE.get(key)
    if span is None:
        span = JordanSpan(md, flavor, central, bound, order)
        _SPAN_CACHE[key] = span
    elif sum(c for _, c in md) > bound:
        raise DegreeBoundError(f"total degree {sum(c for _, c in md)} exceeds bound {bound}")
    return span


# -- certificates -----------------------------------------------------------------------

@dataclass
class MembershipCertificate:
    verdict: bool
    query: object
    preimage: TermPoly | None = None
    residual: object = None
    routes: dict = field(default_factory=dict)

    def expansion(self):
        if self.preimage is None:
            return None
        if isinstance(self.query, Dipoly):
            return dt.J_di(self.preimage)
        return dt.J(self.preimage)

    def verify(self) -> bool:
        """Re-expand the witness: exact equality for yes, nonzero residual for no."""
        if self.verdict:
            return self.expansion() == self.query
        return self.residual is not None and bool(self.residual)

    def __bool__(self):
        return self.verdict


def _checked(cert: MembershipCertificate) -> MembershipCertificate:
    if not cert.verify():
        raise RuntimeError("membership certificate failed to re-expand to the query")
    return cert


def is_jordan_polynomial(f: AssocPoly, bound: int = DEFAULT_BOUND, order=None) -> MembershipCertificate:
    """Is ``f`` in the image of the Jordan expansion of the free algebra?"""
    if isinstance(f, Dipoly):
        raise TypeError("use is_jordan_dipolynomial for dipolynomials")
    preimage, residual = TermPoly.zero(), AssocPoly.zero()
    routes = {}
    for md, comp in da.homogeneous_components(f).items():
        ok, pre, res = jordan_span(md, ALGEBRA, bound=bound, order=order).decide(comp)
        routes[md] = "span"
        if ok:
            preimage = preimage + pre
        else:
            residual = residual + res
    if residual:
        return _checked(MembershipCertificate(False, f, residual=residual, routes=routes))
    return _checked(MembershipCertificate(True, f, preimage=preimage, routes=routes))


def _fresh(v: str, taken) -> str:
    z = v + "'"
    while z in taken:
        z += "'"
    return z


def _rename_central(part: Dipoly, z: str) -> Dipoly:
    out = {}
    for (u, c), a in part.items():
        out[Dimonomial(u[:c] + (z,) + u[c + 1:], c)] = a
    return Dipoly._wrap(out)


def _via_algebra(part: Dipoly, v: str, bound, order):
    """Rename the marked letter to a fresh ``z`` and decide in the algebra.

    When ``v`` occurs only once per dimonomial this is an equivalence; in
    general only a positive answer transfers (substitute ``z := v``).
    """
    z = _fresh(v, da.variables(part))
    g = _rename_central(part, z)
    cert = is_jordan_polynomial(da.bar(g), bound=bound, order=order)
    if cert.verdict:
        pre = dt.substitute_vars(dt.psi_alg(cert.preimage, z), {z: v})
        return True, pre, None
    residual = da.rename(da.psi_as(cert.residual, z), {z: v})
    return False, None, residual


def is_jordan_dipolynomial(f: Dipoly, method: str = "auto", bound: int = DEFAULT_BOUND,
                           order=None) -> MembershipCertificate:
    """Is ``f`` a Jordan dipolynomial?

    ``method``:

    * ``"fast"`` - only for pieces linear in their central variable: decide
      the renamed piece in the free algebra (an exact equivalence there);
    * ``"span"`` - row-reduce the dialgebra expansions directly;
    * ``"auto"`` - fast where it applies, otherwise try the renamed piece as
      a sufficient test and fall back to the span.
    """
    if not isinstance(f, Dipoly):
        raise TypeError("expected a Dipoly")
    if method not in ("auto", "fast", "span"):
        raise ValueError(f"unknown method {method!r}")
    preimage, residual = TermPoly.zero(), Dipoly.zero()
    routes = {}
    for md, comp in da.homogeneous_components(f).items():
        if sum(c for _, c in md) > bound:
            raise DegreeBoundError(f"total degree {sum(c for _, c in md)} exceeds bound {bound}")
        for v, part in da.central_decompose(comp).items():
            linear = dict(md)[v] == 1
            if method == "fast" and not linear:
                raise NotLinearError(f"piece with central letter {v!r} is not linear in {v!r}")
            if method == "span":
                route = "span"
                ok, pre, res = jordan_span(md, DIALGEBRA, central=v, bound=bound,
                                           order=order).decide(part)
            elif linear:
                route = "fast"
                ok, pre, res = _via_algebra(part, v, bound, order)
            else:
                ok, pre, res = _via_algebra(part, v, bound, order)
                route = "renamed"
                if not ok:
                    route = "span"
                    ok, pre, res = jordan_span(md, DIALGEBRA, central=v, bound=bound,
                                               order=order).decide(part)
            routes[(md, v)] = route
            if ok:
                preimage = preimage + pre
            else:
                residual = residual + res
    if residual:
        return _checked(MembershipCertificate(False, f, residual=residual, routes=routes))
    return _checked(MembershipCertificate(True, f, preimage=preimage, routes=routes))


def symmetric_check(f: Dipoly) -> bool:
    """Is ``f`` fixed by the involution?"""
    return da.is_symmetric(f)


# -- symmetric elements through generators and dotted tetrads ----------------------------

def tetrad_label(m: Dimonomial) -> str:
    return "{" + da.format_dimonomial(m) + "}"


def dotted_tetrads(variables, multidegree=None) -> dict:
    """Dotted tetrads ``{a^ b c d}`` (distinct) and ``{a^ a b c}`` on ``variables``.

    Restricted to those fitting inside ``multidegree`` when given.
    """
    variables = list(variables)
    out = {}
    cap = dict(multidegree) if multidegree is not None else None

    def fits(letters):
        if cap is None:
            return True
        cnt = {}
        for a in letters:
            cnt[a] = cnt.get(a, 0) + 1
        return all(cap.get(a, 0) >= n for a, n in cnt.items())

    for a, b, c, d in itertools.permutations(variables, 4):
        letters = (a, b, c, d)
        if fits(letters):
            m = Dimonomial(letters, 0)
            out[tetrad_label(m)] = da.symmetrize(m)
    for a, b, c in itertools.permutations(variables, 3):
        letters = (a, a, b, c)
        if fits(letters):
            m = Dimonomial(letters, 0)
            out[tetrad_label(m)] = da.symmetrize(m)
    return out


@dataclass
class HermDecomposition:
    expression: TermPoly
    atoms: dict

    @property
    def uses_tetrads(self) -> bool:
        return any(label.startswith("{") for label in dt.term_variables(self.expression))

    def evaluate(self) -> Dipoly:
        out: dict = {}
        for t, a in self.expression.items():
            for m, b in dt.evaluate_jordan(t, self.atoms).items():
                accumulate(out, m, a * b)
        return Dipoly._wrap(out)


def herm_decompose(f: Dipoly, bound: int = 6, order=None) -> HermDecomposition:
    """Write a symmetric ``f`` through Jordan diproducts of generators and
    dotted tetrads.

    The span of all products whose leaves are generators or tetrads is
    row-reduced per multidegree and central letter; failure to find an
    expression raises, since one always exists.
    """
    if not da.is_symmetric(f):
        raise DialgebraError("herm_decompose needs a symmetric dipolynomial")
    expression = TermPoly.zero()
    used = {}
    for md, comp in da.homogeneous_components(f).items():
        total = sum(c for _, c in md)
        if total > bound:
            raise DegreeBoundError(f"total degree {total} exceeds bound {bound}")
        atoms = dotted_tetrads([v for v, _ in md], md)
        for v, part in da.central_decompose(comp).items():
            span = JordanSpan(md, DIALGEBRA, central=v, bound=bound, order=order, atoms=atoms)
            ok, pre, _ = span.decide(part)
            if not ok:
                raise RuntimeError(f"no expression found for the component {part}")
            expression = expression + pre
            for label in dt.term_variables(pre):
                if label in atoms:
                    used[label] = atoms[label]
    dec = HermDecomposition(expression, used)
    if dec.evaluate() != f:
        raise RuntimeError("decomposition does not re-evaluate to the input")
    return dec


# -- identities of special Jordan (di)algebras ---------------------------------------

def special_expansion(f):
    """Expansion of a term polynomial in the free special Jordan (di)algebra."""
    f = dt.as_termpoly(f)
    if f.is_dialgebraic():
        return dt.J_di(f)
    return dt.J(f)


def holds_in_special_dialgebras(f) -> bool:
    """Does ``f`` vanish in every special Jordan dialgebra?

    Since the image of the free dialgebra is free in that class, this is the
    same as ``f`` expanding to zero at distinct generators.
    """
    return not special_expansion(f)


@dataclass
class MacdonaldReport:
    holds_for_all: bool
    expansion: Dipoly
    message: str


def macdonald_check(f, z: str) -> MacdonaldReport:
    """Identity test for ``f(x, y, z^)``: linear in ``z``, ``z`` central.

    If ``f`` vanishes in all special Jordan dialgebras it vanishes in all
    Jordan dialgebras.  A nonzero expansion refutes ``f`` whatever its
    shape, so centrality and the two-variable limit are only enforced
    before a positive verdict.
    """
    f = dt.as_termpoly(f)
    others = set()
    shape_problem = None
    for t in f.keys():
        if not dt.is_di(t) and not isinstance(t, str):
            raise DialgebraError("macdonald_check expects dialgebra terms")
        ls = dt.leaves(t)
        if ls.count(z) != 1:
            raise NotLinearError(f"term {dt.format_term(t)} is not linear in {z!r}")
        if shape_problem is None and dt.central_letter(t) != z:
            shape_problem = f"{z!r} is not the central letter of {dt.format_term(t)}"
        others.update(a for a in ls if a != z)
    exp = dt.J_di(f)
    if exp:
        return MacdonaldReport(False, exp, "not an identity of special Jordan dialgebras: expansion is nonzero")
    if shape_problem is None and len(others) > 2:
        shape_problem = f"at most two variables besides {z!r} allowed; got {sorted(others)}"
    if shape_problem:
        raise DialgebraError(shape_problem)
    return MacdonaldReport(True, exp, "identity of ALL Jordan dialgebras (by the Macdonald analogue)")
