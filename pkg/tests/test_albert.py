import random

import pytest

from dijordan import albert as al
from dijordan import diterm as dt
from dijordan import structalg as sa
from dijordan.errors import DialgebraError, NotMultilinearError
from dijordan.parsing import parse_term_poly as T


def rand_oct(rng):
    return al.Octonion([rng.randint(-3, 3) for _ in range(8)])


def test_octonion_units():
    e = al.Octonion.unit
    for i in range(1, 8):
        assert e(i) * e(i) == -e(0)
        assert e(i).conj() == -e(i)
    assert e(1) * e(2) == e(3)


def test_octonions_alternative_and_normed():
    rng = random.Random(4)
    for _ in range(100):
        a, b = rand_oct(rng), rand_oct(rng)
        assert (a * b) * b == a * (b * b)
        assert (a * a) * b == a * (a * b)
        assert (a * b).norm() == a.norm() * b.norm()
        assert (a * b).conj() == b.conj() * a.conj()


def test_octonions_not_associative():
    e = al.Octonion.unit
    assert (e(1) * e(2)) * e(4) != e(1) * (e(2) * e(4))


def test_albert_basics():
    e11 = al.AlbertElement.diagonal_idempotent(0)
    assert e11 * e11 == e11
    one = al.AlbertElement.unit()
    rng = random.Random(1)
    for _ in range(20):
        a, b = al.random_element(rng), al.random_element(rng)
        assert one * a == a
        assert a * b == b * a


def test_albert_elements_are_hermitian():
    rng = random.Random(2)
    a = al.random_element(rng)
    for i in range(3):
        for j in range(3):
            assert a.entry(j, i) == a.entry(i, j).conj()


def test_albert_structure_table():
    A = al.albert_algebra()
    assert A.dimension == 27
    assert sa.holds_identity_random(A, dt.commutativity(), trials=20)
    assert sa.holds_identity_random(A, dt.jordan_identity(), trials=20)
    assert not sa.holds_identity_random(A, T("(x . y) . z - x . (y . z)"), trials=5)


def test_albert_dialgebra():
    D = al.albert_as_dialgebra()
    assert D.equal_products
    for f in dt.jordan_dialgebra_identities():
        assert sa.holds_identity_random(D, f, trials=5)
    q = sa.bar_algebra(D)
    assert q.algebra.dimension == 27
    assert q.algebra.tables[sa.ALG] == al.albert_algebra().tables[sa.ALG]


def test_annihilator_rank():
    assert al.annihilator_rank() == 27


def test_psi_images_evaluate_like_the_identity():
    D = al.albert_as_dialgebra()
    rng = random.Random(7)
    g = dt.jordan_identity()
    values = {v: al.random_element(rng) for v in dt.term_variables(g)}
    plain = al.evaluate_albert(g, values)
    dvals = {v: {k: c for k, c in enumerate(e.coords) if c} for v, e in values.items()}
    for z in sorted(dt.term_variables(g)):
        psi = dt.psi_alg(g, z)
        assert al.evaluate_albert(psi, values) == plain
        assert sa.evaluate(D, psi, dvals) == {k: c for k, c in enumerate(plain.coords) if c}


def test_g8_file_matches_construction():
    g = al.load_g8()
    assert g == al.glennie_g8()
    assert len(g) == 40
    assert not dt.J(g)


def test_certify_rejects_bad_input():
    with pytest.raises(NotMultilinearError):
        al.certify_sidentity(T("x . x"))
    with pytest.raises(DialgebraError):
        al.certify_sidentity(T("x |> y"))


def test_certify_negative_verdicts():
    c = al.certify_sidentity(dt.jordan_identity())
    assert c.verdict == al.NOT_S_IDENTITY and c.special_side_zero
    c = al.certify_sidentity(dt.commutativity())
    assert c.verdict == al.NOT_S_IDENTITY
    c = al.certify_sidentity(T("(x . y) . z - x . (y . z)"))
    assert c.verdict == al.NOT_SPECIAL and not c.special_side_zero
    assert c.verify()


def test_identity_hash_is_stable():
    assert al.identity_hash(dt.commutativity()) == al.identity_hash(T("x1 . x2 - x2 . x1"))
