import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from instances import (
    FIXTURES,
    brute_force_escalier,
    random_functional_set,
    random_point_instance,
    sympy_rank,
)
from qbasis import (
    FunctionalSet,
    Polynomial,
    corner,
    escalier,
    from_points,
    grevlex,
    is_independent_mod_ideal,
    lex,
    lex_i,
    normal_form,
    random_order,
)
from qbasis.errors import DegenerateFunctionalSet, DimensionMismatch
from qbasis.functionals import evaluation_matrix
from qbasis.linalg import Echelon, rank, solve
from qbasis.serialize import functional_set_from_json

EX31_ESCALIER = {(0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 2), (1, 0, 1), (2, 0, 1)}
FOUR_POINTS = [(0, 0), (Fraction(11, 10), Fraction(-1, 10)), (Fraction(1, 10), Fraction(9, 10)), (1, 1)]


def load(name):
    return functional_set_from_json(json.loads((FIXTURES / name).read_text()))


def check_contracts(theta, result):
    assert len(result.escalier) == len(theta)
    assert list(result.corners) == corner(result.escalier)
    lms = [g.leading_monomial(result.order) for g in result.groebner]
    assert sorted(lms) == sorted(result.corners)
    for g in result.groebner:
        assert g.coefficient(g.leading_monomial(result.order)) == 1
        assert all(e in result.escalier for e in g.support() if e != g.leading_monomial(result.order))
        assert theta.annihilates(g)


@pytest.mark.parametrize("i", [1, 2, 3])
def test_hermite_conditions(i):
    theta = load("example31.json")
    result = escalier(theta, lex_i(3, i))
    assert result.escalier.exponents == EX31_ESCALIER
    check_contracts(theta, result)


@pytest.mark.parametrize("order", [lex(2), lex(2, [2, 1]), grevlex(2), random_order(2, random.Random(3))])
def test_cartesian_set_every_order(order):
    theta = load("sec2-cartesian.json")
    result = escalier(theta, order)
    assert result.escalier.exponents == {(0, 0), (1, 0), (2, 0), (0, 1)}
    check_contracts(theta, result)


def test_four_points_elimination_orders():
    theta = from_points(FOUR_POINTS)
    r1 = escalier(theta, lex_i(2, 1))
    r2 = escalier(theta, lex_i(2, 2))
    assert r1.escalier.exponents == {(0, 0), (0, 1), (0, 2), (0, 3)}
    assert r2.escalier.exponents == {(0, 0), (1, 0), (2, 0), (3, 0)}
    # independent route: univariate Vandermonde on the distinct coordinates
    assert sympy_rank([[p[1] ** k for k in range(4)] for p in [tuple(map(Fraction, q)) for q in FOUR_POINTS]]) == 4
    assert sympy_rank([[p[0] ** k for k in range(4)] for p in [tuple(map(Fraction, q)) for q in FOUR_POINTS]]) == 4


def test_is_independent_examples():
    theta = from_points(FOUR_POINTS)
    assert is_independent_mod_ideal(theta, [(0, 0), (1, 0), (0, 1), (2, 0)])
    assert is_independent_mod_ideal(theta, [(0, 0), (1, 0), (0, 1), (0, 2)])
    assert is_independent_mod_ideal(theta, [(0, 0), (1, 0), (0, 1), (1, 1)])
    single = from_points([(3, 5)])
    assert not is_independent_mod_ideal(single, [(0, 0), (1, 0)])
    assert not is_independent_mod_ideal(single, [(0, 0), (0, 1)])
    with pytest.raises(DimensionMismatch):
        is_independent_mod_ideal(single, [(0, 0, 0)])


def test_single_point_gb():
    theta = from_points([(2, -1, Fraction(1, 3))])
    result = escalier(theta, grevlex(3))
    assert result.escalier.exponents == {(0, 0, 0)}
    x = [Polynomial.variable(3, i) for i in (1, 2, 3)]
    assert set(result.groebner) == {x[0] - 2, x[1] + 1, x[2] - Fraction(1, 3)}


def test_normal_form_examples():
    theta = from_points([(3,)])
    result = escalier(theta, lex(1))
    x = Polynomial.variable(1, 1)
    assert normal_form(result, x * x) == Polynomial.constant(1, 9)
    assert (x * x)((3,)) == 9
    theta31 = load("example31.json")
    r31 = escalier(theta31, grevlex(3))
    inside = Polynomial(3, {e: k + 1 for k, e in enumerate(sorted(EX31_ESCALIER))})
    assert normal_form(r31, inside) == inside
    for g in r31.groebner:
        assert normal_form(r31, g).is_zero()


def test_degenerate_functional_set():
    # valid input is never degenerate; force it by repeating a condition
    theta = from_points([(0,), (1,)])

    class Dup(FunctionalSet):
        def functionals(self):
            fs = super().functionals()
            return fs + fs[:1]

    dup = Dup(theta.dimension, theta.sites)
    with pytest.raises(DegenerateFunctionalSet):
        escalier(dup, lex(1))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        escalier(from_points([(0, 0)]), lex(3))


def test_linalg_helpers():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([]) == 0
    assert solve([[2, 0], [0, 4]], [2, 2]) == [1, Fraction(1, 2)]
    ech = Echelon(3)
    assert ech.insert("a", [1, 1, 0])
    assert ech.insert("b", [0, 1, 1])
    assert not ech.insert("c", [1, 2, 1])
    residual, combo = ech.reduce([2, 3, 1])
    assert not any(residual)
    assert combo == {"a": 2, "b": 1}


def _random_instance(seed):
    rng = random.Random(seed)
    theta = random_functional_set(rng, 5) if seed % 2 else from_points(random_point_instance(rng, 6))
    return theta, random_order(theta.dimension, rng)


@pytest.mark.parametrize("seed", range(40))
def test_matches_brute_force(seed):
    theta, order = _random_instance(seed)
    result = escalier(theta, order)
    assert result.escalier.exponents == brute_force_escalier(theta, order)
    check_contracts(theta, result)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000), st.dictionaries(st.tuples(*[st.integers(0, 4)] * 3), st.integers(-5, 5), max_size=6))
def test_normal_form_properties(seed, coeffs):
    rng = random.Random(seed)
    theta = random_functional_set(rng, 6, max_d=3)
    d = theta.dimension
    order = random_order(d, rng)
    result = escalier(theta, order)
    f = Polynomial(d, {e[:d]: c for e, c in coeffs.items()})
    r = normal_form(result, f)
    assert all(e in result.escalier for e in r.support())
    assert theta.annihilates(f - r)
    assert normal_form(result, r) == r
    g = Polynomial.variable(d, 1) * 3 + 1
    assert normal_form(result, f + g) == r + normal_form(result, g)
    # independent route: solve the interpolation system on the éscalier
    N = result.escalier.sorted()
    funcs = theta.functionals()
    rhs = [sum((c * evaluation_matrix([fn], [e])[0][0] for e, c in f.items()), Fraction(0)) for fn in funcs]
    coef = solve(evaluation_matrix(theta, N), rhs)
    assert r == Polynomial(d, dict(zip(N, coef)))


@pytest.mark.parametrize("seed", range(50))
def test_equal_leading_monomials_give_equal_bases(seed):
    rng = random.Random(1000 + seed)
    theta = random_functional_set(rng, 6) if seed % 2 else from_points(random_point_instance(rng))
    a = escalier(theta, random_order(theta.dimension, rng))
    b = escalier(theta, random_order(theta.dimension, rng))
    same_lm = sorted(a.leading_monomials) == sorted(b.leading_monomials)
    assert same_lm == (a.escalier == b.escalier)
    if same_lm:
        assert set(a.groebner) == set(b.groebner)
