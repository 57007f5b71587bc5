from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from dijordan import diassoc as da
from dijordan.diassoc import Dimonomial, Dipoly
from dijordan.errors import NotLinearError
from dijordan.parsing import parse_assoc, parse_dipoly as P

from conftest import assocpolys, dipolys

H = F(1, 2)


def test_products_on_generators():
    assert da.mul_left(P("x"), P("y")) == P("x^ y")
    assert da.mul_right(P("x"), P("y")) == P("x y^")
    assert da.mul_left(P("x y^"), P("z")) == P("x y^ z")
    assert da.mul_left(P("x y^"), P("2 z - w")) == P("2 x y^ z - x y^ w")
    assert da.mul_right(P("x"), da.mul_right(P("x"), P("y"))) == P("x x y^")


def test_times_associator_example():
    lhs = da.mul_left(da.mul_right(P("x"), P("y")), P("z"))
    rhs = da.mul_right(P("x"), da.mul_left(P("y"), P("z")))
    assert lhs == rhs == P("x y^ z")


def test_bar_examples():
    assert not da.bar(P("x y^ - x^ y"))
    assert da.bar(P("x^ y + x y^")) == parse_assoc("2 x y")


def test_involution_examples():
    assert da.involution(P("x^ y")) == P("y x^")
    assert da.involution(P("x y^ z")) == P("z y^ x")


def test_symmetrize_examples():
    assert da.symmetrize(Dimonomial(("x", "x", "y", "z"), 0)) == P("x^ x y z + z y x x^")
    assert da.symmetrize(Dimonomial(("x",), 0)) == P("2 x")
    u = Dimonomial(("x", "y", "z"), 2)
    assert da.symmetrize(u) == da.symmetrize(da.involution(Dipoly.basis(u)))


def test_jordan_diproducts():
    assert da.jordan_right(P("x"), P("y")) == P("1/2 x y^ + 1/2 y^ x")
    assert da.jordan_right(P("x"), P("x")) == P("1/2 x x^ + 1/2 x^ x")


def test_central_decompose():
    parts = da.central_decompose(P("x y^ + y^ x + x^ y"))
    assert parts == {"y": P("x y^ + y^ x"), "x": P("x^ y")}
    assert da.central_decompose(Dipoly.zero()) == {}


def test_psi_as():
    assert da.psi_as(parse_assoc("x z y"), "z") == P("x z^ y")
    assert da.psi_as(parse_assoc("x y z + z x y"), "z") == P("x y z^ + z^ x y")
    with pytest.raises(NotLinearError):
        da.psi_as(parse_assoc("z x z"), "z")
    with pytest.raises(NotLinearError):
        da.psi_as(parse_assoc("x y"), "z")


def test_lifts():
    w = parse_assoc("x y z")
    assert da.lift_right(w) == P("x y z^")
    assert da.lift_left(w) == P("x^ y z")


def test_substitute_examples():
    k = P("1/2 x^ x + 1/2 x x^ - 1/2 y^ y - 1/2 y y^")
    lhs = da.substitute(P("z^ z"), "z", k)
    rhs = da.mul_left(k, P("x^ x - y^ y"))
    assert lhs == rhs
    g = P("x y^ + 3 y^ x")
    assert da.substitute(P("x"), "x", g) == g
    assert da.substitute(P("y^ x"), "x", P("z^")) == P("y^ z")


def test_dotted_tetrad_examples():
    assert da.dotted_tetrad(P("x"), "y", "z", "t", 0) == P("x y^ z t + t z y^ x")
    k = P("1/2 x^ x + 1/2 x x^ - 1/2 y^ y - 1/2 y y^")
    t = da.dotted_tetrad(k, "x", "x", "y", 0)
    assert t == P("{x x x^ x y} - {y y x^ x y}")
    assert da.bar(t) == parse_assoc("x x x x y + y x x x x - y y x x y - y x x y y")


def test_equality_is_letters_plus_dot():
    assert Dimonomial(("x", "y"), 0) != Dimonomial(("x", "y"), 1)


@settings(max_examples=60, deadline=None)
@given(dipolys(), dipolys(), dipolys())
def test_dialgebra_axioms_random(f, g, h):
    L, R = da.mul_left, da.mul_right
    assert L(L(f, g), h) == L(f, L(g, h)) == L(f, R(g, h))
    assert R(R(f, g), h) == R(f, R(g, h)) == R(L(f, g), h)
    assert L(R(f, g), h) == R(f, L(g, h))


@settings(max_examples=60, deadline=None)
@given(dipolys(), dipolys())
def test_involution_axioms(f, g):
    s = da.involution
    assert s(s(f)) == f
    assert s(da.mul_right(f, g)) == da.mul_left(s(g), s(f))
    assert s(da.mul_left(f, g)) == da.mul_right(s(g), s(f))


@settings(max_examples=60, deadline=None)
@given(dipolys(), dipolys())
def test_bar_is_a_morphism(f, g):
    prod = da.assoc_mul(da.bar(f), da.bar(g))
    assert da.bar(da.mul_right(f, g)) == prod == da.bar(da.mul_left(f, g))


@settings(max_examples=60, deadline=None)
@given(dipolys(), dipolys())
def test_right_commutativity_of_diproducts(f, g):
    assert da.jordan_right(f, g) == da.jordan_left(g, f)


@settings(max_examples=60, deadline=None)
@given(dipolys())
def test_central_decompose_partitions(f):
    parts = da.central_decompose(f)
    total = Dipoly.zero()
    for v, part in parts.items():
        assert all(m.letters[m.center] == v for m in part.keys())
        total = total + part
    assert total == f


@settings(max_examples=60, deadline=None)
@given(assocpolys(letters=("x", "y")))
def test_psi_bar_roundtrip(f):
    # make every monomial linear in z
    g = da.assoc_mul(f, da.word("z")) if f else da.word("z")
    assert da.bar(da.psi_as(g, "z")) == g
    d = da.psi_as(g, "z")
    assert da.psi_as(da.bar(d), "z") == d


@settings(max_examples=60, deadline=None)
@given(dipolys(), assocpolys())
def test_left_product_ignores_right_mark(u, v):
    assert da.mul_left(u, da.lift_left(v)) == da.mul_left(u, da.lift_right(v))
