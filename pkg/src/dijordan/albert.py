"""Rational octonions, the Albert algebra of Hermitian 3x3 octonion matrices,
and certification of s-identities by evaluation in it.

Octonion basis convention: three Cayley-Dickson doublings of the rationals
with ``mu = -1`` and

    (a, b)(c, d) = (ac + mu * conj(d) b,  d a + b conj(c)),   conj(a, b) = (conj a, -b),

the new basis vectors of each step being ``(0, e_i)``.  This gives
``e_i e_i = -1`` for ``i = 1..7`` and ``e1 e2 = e3``; the full table is
:data:`OCTONION_TABLE`.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path

from . import diterm as dt
from . import kernels
from .diterm import LEFT, RIGHT, TermPoly
from .errors import DialgebraError, NotMultilinearError
from .linalg import Echelon, format_scalar
from .structalg import ALG, StructureAlgebra

MU = Fraction(-1)


# -- Cayley-Dickson doubling -------------------------------------------------------------

def rationals() -> tuple:
    """The rationals as a 1-dimensional algebra with trivial involution."""
    return StructureAlgebra(["1"], {ALG: {(0, 0): {0: 1}}}), [1]


def cayley_dickson(base: StructureAlgebra, conj: list, mu=MU) -> tuple:
    """Double ``base`` (with diagonal involution ``conj`` given as signs).

    Returns the doubled algebra and its involution signs.
    """
    n = base.dimension
    mu = Fraction(mu)
    t = base.tables[ALG]

    def prod(i, j):
        return t.get((i, j), {})

    table: dict = {}

    def put(i, j, vec, shift, scale=1):
        if vec:
            table[(i, j)] = {k + shift: c * scale for k, c in vec.items()}

    for i in range(n):
        for j in range(n):
            put(i, j, prod(i, j), 0)                              # (e_i, 0)(e_j, 0)
            put(i, n + j, prod(j, i), n)                          # (e_i, 0)(0, e_j) = (0, e_j e_i)
            put(n + i, j, prod(i, j), n, conj[j])                 # (0, e_i)(e_j, 0) = (0, e_i conj e_j)
            put(n + i, n + j, prod(j, i), 0, mu * conj[j])        # (0, e_i)(0, e_j) = (mu conj(e_j) e_i, 0)
    labels = [f"e{k}" for k in range(2 * n)]
    return StructureAlgebra(labels, {ALG: table}), list(conj) + [-1] * n


def octonion_algebra() -> tuple:
    alg, conj = rationals()
    for _ in range(3):
        alg, conj = cayley_dickson(alg, conj)
    return alg, conj


def _single_term_table(alg: StructureAlgebra) -> list:
    n = alg.dimension
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            ((k, c),) = alg.tables[ALG][(i, j)].items()
            row.append((int(c), k))
        out.append(row)
    return out


OCTONIONS, OCTONION_CONJ = octonion_algebra()
OCTONION_TABLE = _single_term_table(OCTONIONS)
kernels.install_table(OCTONION_TABLE)


class Octonion:
    __slots__ = ("c",)

    def __init__(self, coords):
        coords = tuple(Fraction(x) for x in coords)
        if len(coords) != 8:
            raise ValueError("an octonion has 8 coordinates")
        self.c = coords

    @classmethod
    def unit(cls, i: int) -> "Octonion":
        return cls([1 if k == i else 0 for k in range(8)])

    def __add__(self, other):
        return Octonion([a + b for a, b in zip(self.c, other.c)])

    def __sub__(self, other):
        return Octonion([a - b for a, b in zip(self.c, other.c)])

    def __neg__(self):
        return Octonion([-a for a in self.c])

    def __mul__(self, other):
        if not isinstance(other, Octonion):
            return Octonion([a * other for a in self.c])
        out = [Fraction(0)] * 8
        for i, a in enumerate(self.c):
            if a:
                row = OCTONION_TABLE[i]
                for j, b in enumerate(other.c):
                    if b:
                        s, k = row[j]
                        out[k] += s * a * b
        return Octonion(out)

    __rmul__ = __mul__

    def conj(self) -> "Octonion":
        return Octonion([a * s for a, s in zip(self.c, OCTONION_CONJ)])

    def norm(self) -> Fraction:
        return sum(a * a for a in self.c)

    def __eq__(self, other):
        return isinstance(other, Octonion) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return "Octonion(" + ", ".join(format_scalar(a) for a in self.c) + ")"


# -- the Albert algebra ------------------------------------------------------------------

DIM = 27
_SLOTS = {(0, 1): 3, (0, 2): 11, (1, 2): 19}


def _normalize(nums, den):
    g = den
    for x in nums:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if den < 0:
        g = -g
    if g != 1:
        nums = tuple(x // g for x in nums)
        den //= g
    return tuple(nums), den


class AlbertElement:
    """Hermitian 3x3 octonion matrix, stored as 27 integer numerators over one denominator.

    Coordinates: ``[d1, d2, d3, a12 (8), a13 (8), a23 (8)]``; the lower
    triangle holds the conjugates.  ``a * b`` is the Jordan product
    ``1/2 (AB + BA)`` when ``b`` is an AlbertElement, scaling otherwise.
    """

    __slots__ = ("nums", "den")

    def __init__(self, nums, den: int = 1):
        if len(nums) != DIM:
            raise ValueError("an Albert element has 27 coordinates")
        self.nums, self.den = _normalize(tuple(int(x) for x in nums), int(den))

    @classmethod
    def from_coords(cls, coords) -> "AlbertElement":
        coords = [Fraction(c) for c in coords]
        den = 1
        for c in coords:
            den = den * c.denominator // gcd(den, c.denominator)
        return cls([c.numerator * (den // c.denominator) for c in coords], den)

    @classmethod
    def from_matrix(cls, diag, a12: Octonion, a13: Octonion, a23: Octonion) -> "AlbertElement":
        return cls.from_coords(list(diag) + list(a12.c) + list(a13.c) + list(a23.c))

    @classmethod
    def zero(cls):
        return cls([0] * DIM)

    @classmethod
    def unit(cls):
        return cls([1, 1, 1] + [0] * 24)

    @classmethod
    def basis(cls, k: int):
        return cls([1 if i == k else 0 for i in range(DIM)])

    @classmethod
    def diagonal_idempotent(cls, i: int):
        return cls.basis(i)

    @property
    def coords(self) -> tuple:
        return tuple(Fraction(x, self.den) for x in self.nums)

    def entry(self, i: int, j: int) -> Octonion:
        c = self.coords
        if i == j:
            return Octonion([c[i]] + [0] * 7)
        if i < j:
            s = _SLOTS[(i, j)]
            return Octonion(c[s:s + 8])
        return self.entry(j, i).conj()

    def __add__(self, other):
        d = self.den * other.den
        return AlbertElement([a * other.den + b * self.den for a, b in zip(self.nums, other.nums)], d)

    def __sub__(self, other):
        return self + other * -1

    def __neg__(self):
        return self * -1

    def __mul__(self, other):
        if isinstance(other, AlbertElement):
            return albert_product(self, other)
        f = Fraction(other)
        return AlbertElement([a * f.numerator for a in self.nums], self.den * f.denominator)

    def __rmul__(self, factor):
        return self * factor

    def __bool__(self):
        return any(self.nums)

    def __eq__(self, other):
        return isinstance(other, AlbertElement) and self.nums == other.nums and self.den == other.den

    def __hash__(self):
        return hash((self.nums, self.den))

    def __repr__(self):
        return "AlbertElement([" + ", ".join(format_scalar(c) for c in self.coords) + "])"

    def to_strings(self) -> list:
        return [format_scalar(c) for c in self.coords]


def albert_product(a: AlbertElement, b: AlbertElement) -> AlbertElement:
    """Jordan product ``1/2 (ab + ba)`` of Hermitian octonion matrices."""
    return AlbertElement(kernels.jordan2(a.nums, b.nums), 2 * a.den * b.den)


def albert_algebra() -> StructureAlgebra:
    """The 27-dimensional Albert algebra by structure constants."""
    basis = [AlbertElement.basis(k) for k in range(DIM)]
    table = {}
    for i in range(DIM):
        for j in range(DIM):
            p = albert_product(basis[i], basis[j])
            vec = {k: c for k, c in enumerate(p.coords) if c}
            if vec:
                table[(i, j)] = vec
    return StructureAlgebra(albert_labels(), {ALG: table})


def albert_labels() -> list:
    out = ["E11", "E22", "E33"]
    for pos in ("12", "13", "23"):
        out.extend(f"e{k}[{pos}]" for k in range(8))
    return out


def albert_as_dialgebra() -> StructureAlgebra:
    """The Albert algebra as a dialgebra with both products equal to the Jordan product."""
    table = albert_algebra().tables[ALG]
    return StructureAlgebra(albert_labels(), {RIGHT: table, LEFT: table})


def annihilator_rank() -> int:
    """Rank of ``x -> (x o e_1, ..., x o e_27)``; 27 means ``x o J = 0`` forces ``x = 0``."""
    basis = [AlbertElement.basis(k) for k in range(DIM)]
    ech = Echelon()
    for x in basis:
        row = {}
        for j, e in enumerate(basis):
            for k, c in enumerate((x * e).coords):
                if c:
                    row[(j, k)] = c
        ech.add(row)
    return ech.rank


def random_element(rng: random.Random, low: int = -2, high: int = 2) -> AlbertElement:
    return AlbertElement([rng.randint(low, high) for _ in range(DIM)])


def evaluate_albert(f, values: dict, memo: dict | None = None) -> AlbertElement:
    """Evaluate an algebra or dialgebra term polynomial in the Albert algebra.

    Dialgebra operations are both read as the Jordan product, so subterm
    values are shared through their operation-free shape.
    """
    if memo is None:
        memo = {}

    def ev(t):
        if isinstance(t, str):
            return values[t]
        key = dt.bar_term(t)
        r = memo.get(key)
        if r is None:
            u, v = dt.children(t)
            r = albert_product(ev(u), ev(v))
            memo[key] = r
        return r

    out = AlbertElement.zero()
    for t, a in dt.as_termpoly(f).items():
        out = out + ev(t) * a
    return out


# -- Glennie's identity --------------------------------------------------------------------

DATA_DIR = Path(__file__).with_name("data")
G8_FILE = DATA_DIR / "glennie_g8_v1.txt"


def _tp(t) -> TermPoly:
    return dt.term(t)


def _prod(f: TermPoly, g: TermPoly) -> TermPoly:
    out: dict = {}
    for s, a in f.items():
        for t, b in g.items():
            key = (s, t)
            out[key] = out.get(key, 0) + a * b
    return TermPoly({k: v for k, v in out.items() if v})


def u_operator(x: TermPoly, w: TermPoly) -> TermPoly:
    """``U_x(w) = 2 x(xw) - (xx) w``."""
    return _prod(x, _prod(x, w)) * 2 - _prod(_prod(x, x), w)


def triple(a: TermPoly, b: TermPoly, c: TermPoly) -> TermPoly:
    """``{a, b, c} = 2 ((ab)c + a(bc) - (ac)b)``."""
    return (_prod(_prod(a, b), c) + _prod(a, _prod(b, c)) - _prod(_prod(a, c), b)) * 2


def glennie_h8(x: str, y: str, z: str) -> TermPoly:
    X, Y, Z = _tp(x), _tp(y), _tp(z)
    xy = _prod(X, Y)
    return (triple(u_operator(X, u_operator(Y, Z)), Z, xy)
            - u_operator(X, u_operator(Y, u_operator(Z, xy))))


def glennie_g8(x: str = "x", y: str = "y", z: str = "z") -> TermPoly:
    """``G8 = H8(x, y, z) - H8(y, x, z)``, degree 3 in ``x`` and ``y``, 2 in ``z``."""
    return glennie_h8(x, y, z) - glennie_h8(y, x, z)


def load_g8(path: Path | None = None) -> TermPoly:
    """Read the stored G8 expansion (one signed term per line)."""
    from .parsing import parse_algterm_poly

    text = (path or G8_FILE).read_text()
    body = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    return parse_algterm_poly(" ".join(body))


def linearized_g8(path: Path | None = None) -> TermPoly:
    return dt.full_linearization(load_g8(path))


# -- s-identity certificates -----------------------------------------------------------------

S_IDENTITY = "s-identity"
NOT_SPECIAL = "not a special identity"
NOT_S_IDENTITY = "not an s-identity"
INCONCLUSIVE = "inconclusive"


def identity_hash(g: TermPoly) -> str:
    return hashlib.sha256(g.to_string().encode()).hexdigest()[:16]


@dataclass
class SIdentityCertificate:
    identity: TermPoly
    verdict: str
    special_side_zero: bool
    witness: dict | None = None
    value: AlbertElement | None = None
    dialgebra_side: dict = field(default_factory=dict)
    seed: int = 0
    trials: int = 0

    @property
    def positive(self) -> bool:
        return self.verdict == S_IDENTITY

    def verify(self) -> bool:
        """Replay the stored evaluations exactly."""
        if (not dt.J(self.identity)) != self.special_side_zero:
            return False
        if self.witness is None:
            return self.value is None
        value = evaluate_albert(self.identity, self.witness)
        if value != self.value or not value:
            return False
        for z, entry in self.dialgebra_side.items():
            psi = dt.psi_alg(self.identity, z)
            if bool(dt.J_di(psi)) == entry["special_zero"]:
                return False
            if evaluate_albert(psi, self.witness) != entry["albert_value"]:
                return False
        return True

    def to_json(self) -> dict:
        out = {
            "identity_hash": identity_hash(self.identity),
            "terms": len(self.identity),
            "degree": max(dt.degree(t) for t in self.identity.keys()),
            "verdict": self.verdict,
            "special_side_zero": self.special_side_zero,
            "seed": self.seed,
            "trials": self.trials,
        }
        if self.witness is not None:
            out["witness"] = {v: e.to_strings() for v, e in sorted(self.witness.items())}
            out["value"] = self.value.to_strings()
        out["dialgebra_side"] = {
            z: {"special_zero": e["special_zero"], "albert_nonzero": bool(e["albert_value"])}
            for z, e in sorted(self.dialgebra_side.items())
        }
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def certify_sidentity(g, seed: int = 0, trials: int = 8, low: int = -2, high: int = 2,
                      max_degree: int = 8) -> SIdentityCertificate:
    """Certify that a multilinear ``g`` is an s-identity.

    1. special side: ``J(g) = 0``;
    2. Jordan side: seeded search for Albert elements with coordinates in
       ``[low, high]`` at which ``g`` is nonzero;
    3. dialgebra side: for every variable ``z``, the sign placement at ``z``
       expands to zero in the free associative dialgebra and evaluates to
       the same nonzero value in the Albert algebra viewed as a dialgebra.

    Without a witness the verdict is ``"not an s-identity"`` below degree 8
    (no s-identities exist there) and ``"inconclusive"`` otherwise.
    """
    g = dt.as_termpoly(g)
    if not g:
        raise DialgebraError("the zero polynomial is not an identity candidate")
    if any(dt.is_di(t) for t in g.keys()):
        raise DialgebraError("certify_sidentity expects algebra terms")
    if not dt.is_multilinear(g):
        raise NotMultilinearError("certify_sidentity needs a multilinear polynomial; linearize first")
    degree = max(dt.degree(t) for t in g.keys())
    if degree > max_degree:
        raise DialgebraError(f"degree {degree} exceeds {max_degree}")
    special_zero = not dt.J(g)
    if not special_zero:
        return SIdentityCertificate(g, NOT_SPECIAL, False, seed=seed)
    names = sorted(dt.term_variables(g))
    rng = random.Random(seed)
    witness = value = None
    used = 0
    for _ in range(trials):
        used += 1
        values = {v: random_element(rng, low, high) for v in names}
        val = evaluate_albert(g, values)
        if val:
            witness, value = values, val
            break
    if witness is None:
        verdict = NOT_S_IDENTITY if degree <= 7 else INCONCLUSIVE
        return SIdentityCertificate(g, verdict, True, seed=seed, trials=used)
    di_side = {}
    for z in names:
        psi = dt.psi_alg(g, z)
        di_side[z] = {
            "special_zero": not dt.J_di(psi),
            "albert_value": evaluate_albert(psi, witness),
        }
    ok = all(e["special_zero"] and e["albert_value"] for e in di_side.values())
    verdict = S_IDENTITY if ok else INCONCLUSIVE
    return SIdentityCertificate(g, verdict, True, witness, value, di_side, seed, used)
