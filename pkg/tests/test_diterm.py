import math
from collections import Counter

import pytest
from hypothesis import given, settings

from dijordan import diassoc as da
from dijordan import diterm as dt
from dijordan.diterm import TermPoly
from dijordan.errors import NotLinearError
from dijordan.parsing import parse_assoc, parse_dipoly as P, parse_term_poly as T

from conftest import alg_terms, dipolys, z_terms


def test_J_examples():
    assert dt.J(T("x . y")) == parse_assoc("1/2 x y + 1/2 y x")
    assert dt.J(T("x . x")) == parse_assoc("x x")
    assert dt.J(T("(x . y) . x")) == parse_assoc("1/2 x y x + 1/4 y x x + 1/4 x x y")


def test_J_di_examples():
    assert dt.J_di(T("x |> y")) == P("1/2 x y^ + 1/2 y^ x")
    assert dt.J_di(T("x <| y")) == P("1/2 x^ y + 1/2 y x^")


def test_psi_alg_examples():
    assert dt.psi_alg(T("x . (y . z)"), "z") == T("x |> (y |> z)")
    assert dt.psi_alg(T("(z . x) . y"), "z") == T("(z <| x) <| y")
    # subtrees without z point away from z
    assert dt.psi_alg(T("(x . y) . z"), "z") == T("(x |> y) |> z")
    assert dt.psi_alg(T("z . (x . y)"), "z") == T("z <| (x <| y)")
    with pytest.raises(NotLinearError):
        dt.psi_alg(T("z . z"), "z")
    with pytest.raises(NotLinearError):
        dt.psi_alg(T("x . y"), "z")


def test_linearize_examples():
    f = T("x . (x . y)")
    lin = dt.linearize(f, "x", 2)
    assert lin == T("x#1 . (x#2 . y) + x#2 . (x#1 . y)")
    back = dt.substitute_vars(lin, {"x#1": "x", "x#2": "x"})
    assert back == f * 2


def test_linearize_instance_count():
    t = T("((x . y) . (x . z)) . ((x . y) . (z . y))")
    assert sorted(Counter(dt.leaves(next(iter(t.keys())))).values()) == [2, 3, 3]
    lin = dt.linearize(t, "x", 3)
    assert len(lin) == math.factorial(3)
    with pytest.raises(NotLinearError):
        dt.linearize(T("x . y + (x . x) . y"), "x")


def test_canonical_0form_examples():
    a = dt.canonical_0form(T_("(x <| y) |> z"))
    b = dt.canonical_0form(T_("(x |> y) |> z"))
    assert a == b and a.center == 2
    a = dt.canonical_0form(T_("x <| (y |> z)"))
    b = dt.canonical_0form(T_("x <| (y <| z)"))
    assert a == b and a.center == 0
    assert dt.canonical_0form("x").center == 0
    # the rebuilt term points every operation at the central leaf
    assert a.to_term() == T_("x <| (y <| z)")


def T_(text):
    return next(iter(T(text).keys()))


def test_forget_to_diassoc():
    assert dt.forget_to_diassoc(T_("(x |> y) <| z")) == da.dimonomial("xyz", 1)
    assert dt.forget_to_diassoc(T_("x |> (y <| z)")) == da.dimonomial("xyz", 1)
    for text in ("(x |> y) <| z", "x <| (y |> z)", "(x <| y) |> z"):
        t = T_(text)
        assert dt.forget_to_diassoc(t).center == dt.canonical_0form(t).center


def test_identities_are_special():
    for f in dt.jordan_dialgebra_identities():
        assert not dt.J_di(f)
    assert not dt.J(dt.jordan_identity())
    assert not dt.J(dt.commutativity())


def test_zero_identities_expand_to_zero_in_diassoc():
    for f in dt.associative_dialgebra_identities():
        assert not dt.to_dipoly(f)


@settings(max_examples=200, deadline=None)
@given(z_terms())
def test_psi_commutes_with_expansion(t):
    f = TermPoly.basis(t)
    assert da.psi_as(dt.J(f), "z") == dt.J_di(dt.psi_alg(f, "z"))


@settings(max_examples=150, deadline=None)
@given(alg_terms(di=True))
def test_J_di_commutes_with_bar(t):
    f = TermPoly.basis(t)
    assert da.bar(dt.J_di(f)) == dt.J(dt.bar_terms(f))


@settings(max_examples=150, deadline=None)
@given(alg_terms(di=True))
def test_J_di_images_are_symmetric(t):
    img = dt.J_di(TermPoly.basis(t))
    assert da.involution(img) == img


@settings(max_examples=150, deadline=None)
@given(z_terms())
def test_psi_output_is_centered_on_z(t):
    for s in dt.psi_alg(TermPoly.basis(t), "z").keys():
        m = dt.forget_to_diassoc(s)
        assert m.letters.count("z") == 1 and m.letters[m.center] == "z"


@settings(max_examples=200, deadline=None)
@given(dipolys(max_len=3), alg_terms(max_degree=4))
def test_product_mark_placement(u, v):
    f = TermPoly.basis(v)
    a = da.mul_left(u, da.lift_left(dt.J(f)))
    b = da.mul_left(u, dt.J_di(TermPoly.basis(dt.lift_term_left(v))))
    c = da.mul_left(u, dt.J_di(TermPoly.basis(dt.lift_term_right(v))))
    assert a == b == c
    a = da.mul_right(da.lift_right(dt.J(f)), u)
    b = da.mul_right(dt.J_di(TermPoly.basis(dt.lift_term_right(v))), u)
    c = da.mul_right(dt.J_di(TermPoly.basis(dt.lift_term_left(v))), u)
    assert a == b == c
