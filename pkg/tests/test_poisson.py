import random
from fractions import Fraction

import flint
import pytest

from sharedorbits.chevalley import chevalley_algebra
from sharedorbits.poisson import (
    DEFAULT_SEED,
    grade_rule_holds,
    grading_check,
    heisenberg_check,
    lie_poisson_algebra,
    moment_equivariance_violations,
    moment_homomorphism_violations,
    moment_image_rank_one,
    quadratic_span_dim,
    random_rational,
    sp_min_cover_model,
    standard_semidirect,
    symplectic_model,
    symplectic_model_report,
    theorem7_transitivity,
    semidirect_trials,
)


def _random_monomial_poly(alg, rng, max_degree=3):
    p = alg.constant(rng.choice([1, 2, -1, Fraction(1, 2)]))
    for _ in range(rng.randint(1, max_degree)):
        p = p * alg.coordinate(rng.randrange(len(alg.names)))
    return p


@pytest.mark.parametrize("t", ["A1", "A2", "B2", "G2"])
def test_lie_poisson_jacobi_and_leibniz(t):
    alg = lie_poisson_algebra(chevalley_algebra(t))
    rng = random.Random(DEFAULT_SEED)
    br = alg.bracket
    for _ in range(25):
        f, g, h = (_random_monomial_poly(alg, rng) for _ in range(3))
        jac = br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))
        assert jac.is_zero
        assert br(f, g * h) == br(f, g) * h + g * br(f, h)
        assert br(f, g) == -br(g, f)


def test_lie_poisson_on_coordinates():
    L = chevalley_algebra("A1")
    alg = lie_poisson_algebra(L)
    for i in range(L.dim):
        for j in range(L.dim):
            b = alg.bracket(alg.coordinate(i), alg.coordinate(j))
            expect = alg.constant(0)
            for k, c in L.bracket_basis(i, j).items():
                expect = expect + alg.coordinate(k) * alg.constant(c)
            assert b == expect


@pytest.mark.parametrize("t", ["A1", "B2", "G2", "A3", "B3"])
def test_grading_rule(t):
    rep = grading_check(chevalley_algebra(t), 50, DEFAULT_SEED)
    assert rep.passed, rep.to_text()


def test_grade_rule_rejects_inhomogeneous():
    alg = symplectic_model(1).algebra
    z1, z2 = alg.coordinate(0), alg.coordinate(1)
    assert grade_rule_holds(alg, z1 * z1, z2)
    assert not grade_rule_holds(alg, z1 * z1 + z1, z2)
    assert grading_check(alg, 50, DEFAULT_SEED).passed


@pytest.mark.parametrize("n", [1, 2, 3])
def test_symplectic_model(n):
    model = sp_min_cover_model(n)
    assert quadratic_span_dim(model) == n * (2 * n + 1)
    assert moment_homomorphism_violations(model) == 0
    assert moment_equivariance_violations(model) == 0
    assert heisenberg_check(model)
    assert moment_image_rank_one(model)


def test_degenerate_form_is_not_heisenberg():
    beta = flint.fmpq_mat(4, 4)
    beta[0, 2], beta[2, 0] = 1, -1
    assert not heisenberg_check(symplectic_model(2, beta))


@pytest.mark.parametrize("n", [2, 3])
def test_symplectic_model_report(n):
    rep = symplectic_model_report(n)
    assert rep.passed, rep.to_text()


def test_semidirect_examples():
    s = standard_semidirect("sl2")
    assert s.dim == 5 and s.algebra.jacobi_violations() == 0
    rng = random.Random(1)
    for _ in range(10):
        mu = random_rational(rng, 3)
        assert theorem7_transitivity(s, mu, [0, 0])[2]
    assert not theorem7_transitivity(s, [0, 0, 0], [1, 0])[2]
    s3 = standard_semidirect("sl3")
    for _ in range(20):
        ds, dr, eq = theorem7_transitivity(s3, random_rational(rng, 8), random_rational(rng, 3))
        assert dr <= ds and not eq


@pytest.mark.parametrize("name", ["sl2", "sl3", "sp4"])
def test_semidirect_trials(name):
    res = semidirect_trials(standard_semidirect(name), 100, DEFAULT_SEED)
    assert res == {"trials": 100, "agree": 100, "lambda_zero": 50, "lambda_nonzero": 50}


def test_semidirect_rejects_invariants():
    from sharedorbits.modules import trivial_module
    from sharedorbits.poisson import SemidirectSum

    L = chevalley_algebra("A1")
    with pytest.raises(ValueError):
        SemidirectSum(L, trivial_module(L))
