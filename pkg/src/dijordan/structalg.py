"""Finite-dimensional algebras and dialgebras given by structure constants.

Vectors are sparse dicts ``index -> Fraction``.  An algebra has one table
under the key ``"."``; a dialgebra has two, under ``"|>"`` and ``"<|"``.
A table maps a pair of basis indices to the sparse vector of their product.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction

from . import diterm as dt
from .diassoc import Dimonomial, format_dimonomial
from .diterm import LEFT, RIGHT
from .errors import DialgebraError, IdentityFailure, NotMultilinearError
from .linalg import Echelon, add_scaled, format_scalar

ALG = "."
HALF = Fraction(1, 2)


class StructureAlgebra:
    def __init__(self, labels, tables: dict):
        self.labels = list(labels)
        self.tables = {}
        n = len(self.labels)
        for op, table in tables.items():
            if op not in (ALG, RIGHT, LEFT):
                raise DialgebraError(f"unknown operation {op!r}")
            clean = {}
            for (i, j), vec in table.items():
                if not (0 <= i < n and 0 <= j < n):
                    raise DialgebraError(f"table index ({i}, {j}) out of range")
                vec = {k: Fraction(v) for k, v in vec.items() if v}
                if vec:
                    clean[(i, j)] = vec
            self.tables[op] = clean
        ops = set(self.tables)
        if ops not in ({ALG}, {RIGHT, LEFT}):
            raise DialgebraError("need one table '.' or two tables '|>' and '<|'")
        self.equal_products = self.is_dialgebra and self.tables[RIGHT] == self.tables[LEFT]

    @property
    def dimension(self) -> int:
        return len(self.labels)

    @property
    def is_dialgebra(self) -> bool:
        return RIGHT in self.tables

    def __repr__(self):
        kind = "dialgebra" if self.is_dialgebra else "algebra"
        return f"<StructureAlgebra {kind} dim={self.dimension}>"

    def basis_vector(self, i: int) -> dict:
        return {i: Fraction(1)}

    def mul(self, op: str, u: dict, v: dict) -> dict:
        table = self.tables[op]
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                prod = table.get((i, j))
                if prod:
                    add_scaled(out, prod, a * b)
        return out

    def element(self, coords) -> "Element":
        if isinstance(coords, dict):
            return Element(self, {k: Fraction(v) for k, v in coords.items() if v})
        if len(coords) != self.dimension:
            raise DialgebraError(f"expected {self.dimension} coordinates")
        return Element(self, {i: Fraction(v) for i, v in enumerate(coords) if v})

    # -- JSON --------------------------------------------------------------------------

    def to_json(self) -> str:
        tables = {
            op: [[i, j, k, format_scalar(c)] for (i, j), vec in sorted(t.items())
                 for k, c in sorted(vec.items())]
            for op, t in self.tables.items()
        }
        return json.dumps({"labels": self.labels, "tables": tables}, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "StructureAlgebra":
        data = json.loads(text)
        tables = {}
        for op, entries in data["tables"].items():
            t: dict = {}
            for i, j, k, c in entries:
                t.setdefault((i, j), {})[k] = Fraction(c)
            tables[op] = t
        return cls(data["labels"], tables)

    def permuted(self, perm) -> "StructureAlgebra":
        """Same algebra with basis element ``i`` renumbered to ``perm[i]``."""
        labels = [None] * self.dimension
        for i, p in enumerate(perm):
            labels[p] = self.labels[i]
        tables = {
            op: {(perm[i], perm[j]): {perm[k]: c for k, c in vec.items()}
                 for (i, j), vec in t.items()}
            for op, t in self.tables.items()
        }
        return StructureAlgebra(labels, tables)


@dataclass
class Element:
    algebra: StructureAlgebra
    coords: dict

    def __add__(self, other):
        out = dict(self.coords)
        add_scaled(out, other.coords, Fraction(1))
        return Element(self.algebra, out)

    def __sub__(self, other):
        out = dict(self.coords)
        add_scaled(out, other.coords, Fraction(-1))
        return Element(self.algebra, out)

    def __mul__(self, factor):
        f = Fraction(factor)
        return Element(self.algebra, {k: v * f for k, v in self.coords.items() if f})

    __rmul__ = __mul__

    def product(self, op: str, other: "Element") -> "Element":
        return Element(self.algebra, self.algebra.mul(op, self.coords, other.coords))

    def __bool__(self):
        return bool(self.coords)

    def dense(self) -> list:
        return [self.coords.get(i, Fraction(0)) for i in range(self.algebra.dimension)]


# -- evaluation -------------------------------------------------------------------------

def _op_of(A: StructureAlgebra, t) -> str:
    if len(t) == 2:
        if A.is_dialgebra:
            raise DialgebraError("algebra term evaluated in a dialgebra")
        return ALG
    if not A.is_dialgebra:
        raise DialgebraError("dialgebra term evaluated in an algebra")
    return t[0]


def evaluate_term(A: StructureAlgebra, t, values: dict, memo: dict | None = None) -> dict:
    """Value of a term with leaves assigned sparse vectors."""
    if memo is None:
        memo = {}

    def ev(s):
        if isinstance(s, str):
            return values[s]
        key = dt.bar_term(s) if A.equal_products else s
        if key in memo:
            return memo[key]
        u, v = dt.children(s)
        r = A.mul(_op_of(A, s), ev(u), ev(v))
        memo[key] = r
        return r

    return ev(t)


def evaluate(A: StructureAlgebra, f, values: dict) -> dict:
    """Value of a term polynomial at an assignment of sparse vectors (or Elements)."""
    values = {k: (v.coords if isinstance(v, Element) else v) for k, v in values.items()}
    memo: dict = {}
    out: dict = {}
    for t, a in dt.as_termpoly(f).items():
        add_scaled(out, evaluate_term(A, t, values, memo), a)
    return out


@dataclass
class IdentityCheck:
    holds: bool
    counterexample: dict | None = None
    value: dict | None = None

    def __bool__(self):
        return self.holds


def _shape_table(A, t, memo):
    """Every nonzero value of term shape ``t`` over all basis tuples.

    Keyed by the tuple of basis indices at the leaves (left to right).
    Leaf names are irrelevant, so shapes are shared across terms.
    """
    if isinstance(t, str):
        return None
    key = dt._shape_code(t) if not A.equal_products else dt._shape_code(dt.bar_term(t))
    if key in memo:
        return memo[key]
    u, v = dt.children(t)
    left = _shape_table(A, u, memo)
    right = _shape_table(A, v, memo)
    if left is None:
        left = {(i,): {i: Fraction(1)} for i in range(A.dimension)}
    if right is None:
        right = {(i,): {i: Fraction(1)} for i in range(A.dimension)}
    op = _op_of(A, t)
    table = A.tables[op]
    out = {}
    for au, vu in left.items():
        for av, vv in right.items():
            prod: dict = {}
            for i, a in vu.items():
                for j, b in vv.items():
                    p = table.get((i, j))
                    if p:
                        add_scaled(prod, p, a * b)
            if prod:
                out[au + av] = prod
    memo[key] = out
    return out


def holds_identity(A: StructureAlgebra, f) -> IdentityCheck:
    """Exhaustive check of a multilinear identity over all basis tuples.

    Complete by multilinearity.  Work is proportional to the number of
    basis tuples with a nonzero partial product, so sparse (graded,
    truncated) algebras are cheap.
    """
    f = dt.as_termpoly(f)
    if not f:
        return IdentityCheck(True)
    if not dt.is_multilinear(f):
        raise NotMultilinearError("holds_identity needs a multilinear identity; linearize first")
    names = sorted(dt.term_variables(f))
    memo: dict = {}
    total: dict = {}
    for t, a in f.items():
        ls = dt.leaves(t)
        pos = [ls.index(n) for n in names]
        if isinstance(t, str):
            table = {(i,): {i: Fraction(1)} for i in range(A.dimension)}
        else:
            table = _shape_table(A, t, memo)
        for assign, vec in table.items():
            canon = tuple(assign[p] for p in pos)
            acc = total.setdefault(canon, {})
            add_scaled(acc, vec, a)
    for canon in sorted(total):
        vec = total[canon]
        if vec:
            witness = {n: A.labels[i] for n, i in zip(names, canon)}
            return IdentityCheck(False, witness, vec)
    return IdentityCheck(True)


def holds_identity_random(A: StructureAlgebra, f, trials: int = 50, seed: int = 0,
                          low: int = -2, high: int = 2) -> IdentityCheck:
    """Evaluate at random integer-coordinate elements (a one-sided test)."""
    rng = random.Random(seed)
    f = dt.as_termpoly(f)
    names = sorted(dt.term_variables(f))
    for _ in range(trials):
        values = {n: {i: Fraction(c) for i in range(A.dimension)
                      if (c := rng.randint(low, high))} for n in names}
        vec = evaluate(A, f, values)
        if vec:
            return IdentityCheck(False, values, vec)
    return IdentityCheck(True)


# -- constructions ----------------------------------------------------------------------

def equal_products_dialgebra(A: StructureAlgebra) -> StructureAlgebra:
    """Dialgebra whose two products are both the product of ``A``."""
    t = A.tables[ALG]
    return StructureAlgebra(A.labels, {RIGHT: t, LEFT: t})


def plus_dialgebra(D: StructureAlgebra) -> StructureAlgebra:
    """``D^(+)``: ``a |-o b = 1/2(a |- b + b -| a)``, ``a -|o b = 1/2(a -| b + b |- a)``."""
    n = D.dimension
    right, left = {}, {}
    for i in range(n):
        for j in range(n):
            r: dict = {}
            add_scaled(r, D.tables[RIGHT].get((i, j), {}), HALF)
            add_scaled(r, D.tables[LEFT].get((j, i), {}), HALF)
            l: dict = {}
            add_scaled(l, D.tables[LEFT].get((i, j), {}), HALF)
            add_scaled(l, D.tables[RIGHT].get((j, i), {}), HALF)
            if r:
                right[(i, j)] = r
            if l:
                left[(i, j)] = l
    return StructureAlgebra(D.labels, {RIGHT: right, LEFT: left})


def truncated_free_dialgebra(gens, d: int, limit: int = 2000) -> StructureAlgebra:
    """Free associative dialgebra on ``gens`` with products of degree > ``d`` set to 0."""
    gens = list(gens)
    basis = [Dimonomial(w, c) for k in range(1, d + 1)
             for w in itertools.product(gens, repeat=k) for c in range(k)]
    if len(basis) > limit:
        raise DialgebraError(f"dimension {len(basis)} exceeds limit {limit}")
    index = {m: i for i, m in enumerate(basis)}
    right, left = {}, {}
    for i, (u, cu) in enumerate(basis):
        for j, (v, cv) in enumerate(basis):
            if len(u) + len(v) > d:
                continue
            right[(i, j)] = {index[Dimonomial(u + v, len(u) + cv)]: Fraction(1)}
            left[(i, j)] = {index[Dimonomial(u + v, cu)]: Fraction(1)}
    return StructureAlgebra([format_dimonomial(m) for m in basis], {RIGHT: right, LEFT: left})


def truncated_free_algebra(gens, d: int) -> StructureAlgebra:
    """Free associative algebra on ``gens`` truncated above degree ``d``."""
    gens = list(gens)
    basis = [w for k in range(1, d + 1) for w in itertools.product(gens, repeat=k)]
    index = {w: i for i, w in enumerate(basis)}
    table = {}
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            if len(u) + len(v) <= d:
                table[(i, j)] = {index[u + v]: Fraction(1)}
    return StructureAlgebra([" ".join(w) for w in basis], {ALG: table})


def check_zero_identities(D: StructureAlgebra) -> IdentityCheck:
    for ident in dt.zero_identities():
        res = holds_identity(D, ident)
        if not res:
            return res
    return IdentityCheck(True)


@dataclass
class BarQuotient:
    algebra: StructureAlgebra | None
    columns: list          # D-basis index representing each quotient basis vector
    kernel: Echelon        # row-reduced basis of D0
    source_dimension: int

    def project(self, vec: dict) -> dict:
        residual, _ = self.kernel.reduce(vec)
        pos = {c: i for i, c in enumerate(self.columns)}
        return {pos[c]: a for c, a in residual.items()}

    def projection_matrix(self) -> list:
        """Rows indexed by the D basis, columns by the quotient basis."""
        n = len(self.columns)
        out = []
        for i in range(self.source_dimension):
            row = [Fraction(0)] * n
            for k, a in self.project({i: Fraction(1)}).items():
                row[k] = a
            out.append(row)
        return out


def bar_algebra(D: StructureAlgebra) -> BarQuotient:
    """Quotient ``D / D0`` with ``D0 = span{a |- b - a -| b}``.

    The 0-identities are checked first: they make ``D0`` an ideal and the
    quotient product well defined.
    """
    if not D.is_dialgebra:
        raise DialgebraError("bar_algebra needs a dialgebra")
    res = check_zero_identities(D)
    if not res:
        raise IdentityFailure(f"0-identities fail at {res.counterexample}")
    n = D.dimension
    kernel = Echelon()
    for i in range(n):
        for j in range(n):
            diff = dict(D.tables[RIGHT].get((i, j), {}))
            add_scaled(diff, D.tables[LEFT].get((i, j), {}), Fraction(-1))
            if diff:
                kernel.add(diff)
    pivots = set(kernel.rows)
    columns = [c for c in range(n) if c not in pivots]
    q = BarQuotient(None, columns, kernel, n)
    table = {}
    for a, i in enumerate(columns):
        for b, j in enumerate(columns):
            prod = q.project(D.tables[RIGHT].get((i, j), {}))
            if prod:
                table[(a, b)] = prod
    q.algebra = StructureAlgebra([D.labels[c] for c in columns], {ALG: table})
    return q


def split_null_extension(D: StructureAlgebra) -> tuple:
    """``D^ = bar(D) + D`` with ``bar(a) . x = a |- x``, ``x . bar(a) = x -| a``, ``D . D = 0``.

    Returns ``(algebra, quotient)``; quotient basis vectors come first.
    """
    q = bar_algebra(D)
    m = len(q.columns)
    n = D.dimension
    labels = ["bar(" + D.labels[c] + ")" for c in q.columns] + list(D.labels)
    table = {}
    for (a, b), vec in q.algebra.tables[ALG].items():
        table[(a, b)] = dict(vec)
    for a, i in enumerate(q.columns):
        for j in range(n):
            r = D.tables[RIGHT].get((i, j))
            if r:
                table[(a, m + j)] = {m + k: c for k, c in r.items()}
            l = D.tables[LEFT].get((j, i))
            if l:
                table[(m + j, a)] = {m + k: c for k, c in l.items()}
    return StructureAlgebra(labels, {ALG: table}), q
