import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from dijordan import diassoc as da
from dijordan.diassoc import AssocPoly, Dimonomial, Dipoly
from dijordan.diterm import LEFT, RIGHT

LETTERS = ("x", "y", "z", "t")

coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(bool)


@st.composite
def dimonomials(draw, letters=LETTERS, max_len=4):
    word = tuple(draw(st.lists(st.sampled_from(letters), min_size=1, max_size=max_len)))
    return Dimonomial(word, draw(st.integers(0, len(word) - 1)))


@st.composite
def dipolys(draw, letters=LETTERS, max_len=4, max_terms=4):
    out = Dipoly.zero()
    for m in draw(st.lists(dimonomials(letters, max_len), max_size=max_terms)):
        out = out + Dipoly({m: draw(coeffs)})
    return out


@st.composite
def assocpolys(draw, letters=LETTERS, max_len=4, max_terms=4):
    out = AssocPoly.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        w = tuple(draw(st.lists(st.sampled_from(letters), min_size=1, max_size=max_len)))
        out = out + AssocPoly({w: draw(coeffs)})
    return out


def _tree(draw, leaves, di):
    if len(leaves) == 1:
        return leaves[0]
    k = draw(st.integers(1, len(leaves) - 1))
    u, v = _tree(draw, leaves[:k], di), _tree(draw, leaves[k:], di)
    if di:
        return (draw(st.sampled_from((LEFT, RIGHT))), u, v)
    return (u, v)


@st.composite
def alg_terms(draw, letters=LETTERS, max_degree=6, di=False):
    leaves = draw(st.lists(st.sampled_from(letters), min_size=1, max_size=max_degree))
    return _tree(draw, leaves, di)


@st.composite
def z_terms(draw, letters=("x", "y", "t"), max_degree=6, di=False):
    """Algebra terms containing ``z`` exactly once."""
    others = draw(st.lists(st.sampled_from(letters), min_size=0, max_size=max_degree - 1))
    leaves = list(others)
    leaves.insert(draw(st.integers(0, len(others))), "z")
    return _tree(draw, leaves, di)


def random_term(rng: random.Random, letters, degree: int, di=False, force=None):
    leaves = [rng.choice(letters) for _ in range(degree)]
    if force is not None:
        leaves[rng.randrange(degree)] = force
    def build(ls):
        if len(ls) == 1:
            return ls[0]
        k = rng.randint(1, len(ls) - 1)
        u, v = build(ls[:k]), build(ls[k:])
        return (rng.choice((LEFT, RIGHT)), u, v) if di else (u, v)
    return build(leaves)


def random_dipoly_z(rng: random.Random, max_degree=5, letters=("x", "y")) -> Dipoly:
    """Random element of DiAs_z: each dimonomial has z once, as its central letter."""
    n = rng.randint(1, max_degree)
    out = Dipoly.zero()
    for _ in range(rng.randint(1, 4)):
        rest = [rng.choice(letters) for _ in range(n - 1)]
        pos = rng.randint(0, n - 1)
        word = tuple(rest[:pos] + ["z"] + rest[pos:])
        out = out + da.dimono(word, pos, Fraction(rng.randint(-2, 2)))
    return out


@pytest.fixture
def rng():
    return random.Random(0)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.TITLES):
        if n in mod.RESULTS:
            terminalreporter.write_line(mod.line(n))
        else:
            terminalreporter.write_line(f"criterion {n:2d}: NOT RUN  {mod.TITLES[n]}")
