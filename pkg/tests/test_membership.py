import random
from fractions import Fraction as F

import pytest

from dijordan import diassoc as da
from dijordan import diterm as dt
from dijordan import grassmann as gr
from dijordan import membership as mb
from dijordan.diassoc import Dimonomial
from dijordan.errors import DegreeBoundError, DialgebraError, NotLinearError
from dijordan.linalg import rank
from dijordan.parsing import parse_assoc as A, parse_dipoly as P, parse_term_poly as T

from conftest import random_dipoly_z


def test_span_dimensions():
    assert mb.jordan_span([("x", 1), ("y", 1)], mb.DIALGEBRA).dimension == 2
    assert mb.jordan_span([("x", 1)], mb.DIALGEBRA).dimension == 1
    assert mb.jordan_span([("x", 1)], mb.ALGEBRA).dimension == 1


def test_tetrad_outside_classical_span():
    span = mb.jordan_span([("x", 1), ("y", 1), ("z", 1), ("t", 1)], mb.ALGEBRA)
    ok, _, residual = span.decide(A("x y z t + t z y x"))
    assert not ok and residual


def test_bound_is_enforced():
    with pytest.raises(DegreeBoundError):
        mb.jordan_span([("x", 5), ("y", 4)], mb.ALGEBRA)
    with pytest.raises(DegreeBoundError):
        mb.is_jordan_polynomial(A("x x x"), bound=2)


def test_classical_membership_examples():
    cert = mb.is_jordan_polynomial(A("1/2 x y + 1/2 y x"))
    assert cert.verdict and cert.preimage == T("x . y")
    assert not mb.is_jordan_polynomial(A("x y z t + t z y x"))
    cert = mb.is_jordan_polynomial(A("x y x"))
    assert cert.verdict and cert.verify()
    assert dt.J(T("2 (x . y) . x - (x . x) . y")) == A("x y x")


def test_dialgebra_membership_examples():
    cert = mb.is_jordan_dipolynomial(P("x y^ + y^ x"))
    assert cert.verdict and dt.J_di(cert.preimage) == P("x y^ + y^ x")
    assert mb.is_jordan_dipolynomial(P("x^")).verdict
    for method in ("auto", "span"):
        cert = mb.is_jordan_dipolynomial(P("{x^ x y z}"), method=method)
        assert not cert.verdict and cert.verify()


def test_fast_rejects_nonlinear_centers():
    with pytest.raises(NotLinearError):
        mb.is_jordan_dipolynomial(P("x^ x"), method="fast")


def test_renamed_route_is_used_for_repeated_centers():
    cert = mb.is_jordan_dipolynomial(P("x^ x + x x^"))
    assert cert.verdict
    assert set(cert.routes.values()) == {"renamed"}


def test_non_member_has_grassmann_witness_when_it_exists():
    f = P("{x^ x y z}")
    assert gr.sigma(f, ("x", "y", "z"))
    # and every degree >= 2 Jordan dipolynomial dies under sigma
    for t in mb.jordan_span([("x", 2), ("y", 1), ("z", 1)], mb.DIALGEBRA).basis():
        assert not gr.sigma(t)


def test_symmetric_check():
    assert mb.symmetric_check(P("{x^ x y z}"))
    assert not mb.symmetric_check(P("x^ y"))
    for t in mb.jordan_span([("x", 2), ("y", 2)], mb.DIALGEBRA).basis():
        assert mb.symmetric_check(t)


def test_dotted_tetrads_shapes():
    tets = mb.dotted_tetrads(["x", "y", "z"], [("x", 2), ("y", 1), ("z", 1)])
    assert "{x^ x y z}" in tets
    for label, value in tets.items():
        assert mb.symmetric_check(value)


def test_herm_decompose_examples():
    dec = mb.herm_decompose(P("{x^ x y z}"))
    assert dec.uses_tetrads and dec.evaluate() == P("{x^ x y z}")
    dec = mb.herm_decompose(P("x y^ + y^ x"))
    assert not dec.uses_tetrads
    assert dec.expression == T("2 x |> y")
    with pytest.raises(DialgebraError):
        mb.herm_decompose(P("x^ y"))


def test_herm_decompose_two_generators_is_tetrad_free():
    rng = random.Random(1)
    for _ in range(15):
        d = rng.randint(2, 5)
        m = Dimonomial(tuple(rng.choice("xy") for _ in range(d)), rng.randrange(d))
        f = da.symmetrize(m)
        dec = mb.herm_decompose(f)
        assert not dec.uses_tetrads
        assert dec.evaluate() == f


def test_holds_in_special_dialgebras():
    assert mb.holds_in_special_dialgebras(T("x |> y - y <| x"))
    assert not mb.holds_in_special_dialgebras(T("x |> y - y |> x"))
    for f in dt.dotted_jordan_identities():
        assert mb.holds_in_special_dialgebras(f)


def test_macdonald_examples():
    assert mb.macdonald_check(T("x |> z - z <| x"), "z").holds_for_all
    rep = mb.macdonald_check(T("x |> z - z |> x"), "z")
    assert not rep.holds_for_all and rep.expansion
    # an instance of a dotted Jordan identity with the mark on z
    f = dt.substitute_vars(dt.psi_alg(dt.jordan_identity("x", "y", "x", "z"), "z"), {})
    assert mb.macdonald_check(f, "z").holds_for_all


def test_macdonald_preconditions():
    with pytest.raises(NotLinearError):
        mb.macdonald_check(T("z |> z"), "z")
    with pytest.raises(DialgebraError):
        mb.macdonald_check(T("(z |> x) - (x <| z)"), "z")
    with pytest.raises(DialgebraError):
        mb.macdonald_check(T("x |> (y |> (t |> z)) - ((z <| t) <| y) <| x"), "z")
    # a refutation needs no preconditions beyond linearity
    assert not mb.macdonald_check(T("z |> x"), "z").holds_for_all


def test_span_level_psi_commutation():
    md = [("x", 2), ("y", 1), ("z", 1)]
    classical = mb.jordan_span(md, mb.ALGEBRA).basis()
    lifted = [da.psi_as(b, "z").as_dict() for b in classical]
    di = [b.as_dict() for b in mb.jordan_span(md, mb.DIALGEBRA, central="z").basis()]
    assert rank(lifted) == rank(di) == rank(lifted + di)


def test_fast_and_span_agree_on_random_inputs():
    rng = random.Random(11)
    for _ in range(25):
        f = random_dipoly_z(rng, max_degree=4)
        a = mb.is_jordan_dipolynomial(f, method="fast")
        b = mb.is_jordan_dipolynomial(f, method="span")
        assert a.verdict == b.verdict
        assert a.verify() and b.verify()


def test_certificate_verify_detects_tampering():
    cert = mb.is_jordan_polynomial(A("x y + y x"))
    assert cert.verify()
    cert.preimage = cert.preimage * F(3)
    assert not cert.verify()
