import itertools
import random
from fractions import Fraction as F

import pytest

from dijordan import diterm as dt
from dijordan import structalg as sa
from dijordan.diterm import LEFT, RIGHT
from dijordan.errors import DialgebraError, IdentityFailure, NotMultilinearError
from dijordan.parsing import parse_term_poly as T


@pytest.fixture(scope="module")
def small():
    return sa.truncated_free_dialgebra("xy", 3)


def test_truncated_dimensions(small):
    assert small.dimension == 34
    assert sa.truncated_free_algebra("x", 2).dimension == 2


def test_size_limit():
    with pytest.raises(DialgebraError):
        sa.truncated_free_dialgebra("xyz", 5, limit=100)


def test_associative_dialgebra_axioms_hold(small):
    for f in dt.associative_dialgebra_identities():
        assert sa.holds_identity(small, f)


def test_plus_dialgebra_identities(small):
    plus = sa.plus_dialgebra(small)
    assert sa.holds_identity(plus, dt.right_commutativity())
    res = sa.holds_identity(plus, T("x1 |> x2 - x2 |> x1"))
    assert not res
    assert res.counterexample == {"x1": "x^", "x2": "y^"}


def test_holds_identity_needs_multilinear(small):
    with pytest.raises(NotMultilinearError):
        sa.holds_identity(small, T("x |> x"))


def test_bar_of_equal_products_is_same_algebra():
    A = sa.truncated_free_algebra("xy", 3)
    q = sa.bar_algebra(sa.equal_products_dialgebra(A))
    assert q.algebra.tables[sa.ALG] == A.tables[sa.ALG]
    assert q.algebra.dimension == A.dimension


def test_bar_of_free_dialgebra_is_free_algebra():
    D = sa.truncated_free_dialgebra("x", 2)
    q = sa.bar_algebra(D)
    A = sa.truncated_free_algebra("x", 2)
    assert q.algebra.dimension == A.dimension == 2
    # x . x = x x in both
    assert q.algebra.mul(sa.ALG, {0: F(1)}, {0: F(1)}) == {1: F(1)}
    assert A.mul(sa.ALG, {0: F(1)}, {0: F(1)}) == {1: F(1)}


def test_projection_is_a_morphism(small):
    q = sa.bar_algebra(small)
    rng = random.Random(2)
    for _ in range(30):
        i, j = rng.randrange(small.dimension), rng.randrange(small.dimension)
        for op in (RIGHT, LEFT):
            lhs = q.project(small.mul(op, {i: F(1)}, {j: F(1)}))
            rhs = q.algebra.mul(sa.ALG, q.project({i: F(1)}), q.project({j: F(1)}))
            assert lhs == rhs
    assert len(q.projection_matrix()) == small.dimension


def test_bar_rejects_non_zero_dialgebras():
    bad = sa.StructureAlgebra(["a", "b"], {RIGHT: {(0, 0): {1: 1}}, LEFT: {(0, 1): {0: 1}}})
    with pytest.raises(IdentityFailure):
        sa.bar_algebra(bad)


def test_split_null_extension(small):
    plus = sa.plus_dialgebra(small)
    hat, q = sa.split_null_extension(plus)
    m = len(q.columns)
    assert hat.dimension == m + plus.dimension
    # the module part squares to zero
    for i, j in itertools.product(range(m, hat.dimension), repeat=2):
        assert not hat.mul(sa.ALG, {i: F(1)}, {j: F(1)})
    assert sa.holds_identity(hat, dt.commutativity())
    assert sa.holds_identity(hat, dt.jordan_identity())


def test_json_roundtrip(small):
    again = sa.StructureAlgebra.from_json(small.to_json())
    assert again.labels == small.labels and again.tables == small.tables


def test_holds_identity_invariant_under_basis_permutation(small):
    plus = sa.plus_dialgebra(small)
    perm = list(range(plus.dimension))
    random.Random(5).shuffle(perm)
    shuffled = plus.permuted(perm)
    for f in (dt.right_commutativity(), T("x1 |> x2 - x2 |> x1"), dt.jordan_dialgebra_identities()[1]):
        assert bool(sa.holds_identity(plus, f)) == bool(sa.holds_identity(shuffled, f))


def test_random_evaluation_agrees_with_exhaustive(small):
    plus = sa.plus_dialgebra(small)
    assert sa.holds_identity_random(plus, dt.right_commutativity(), trials=10)
    assert not sa.holds_identity_random(plus, T("x1 |> x2 - x2 |> x1"), trials=10)


def test_element_arithmetic(small):
    a = small.element({0: 1})
    b = small.element({1: 2})
    assert (a + b - b).coords == a.coords
    assert (a * 3).coords == {0: F(3)}
    assert a.product(RIGHT, b).coords == small.mul(RIGHT, {0: F(1)}, {1: F(2)})
