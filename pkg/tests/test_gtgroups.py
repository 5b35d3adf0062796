"""Group law, torsor action, flows and degree-by-degree lifting."""

import pytest

from cyclogt.series import Series, exp_series, log_series
from cyclogt.tkn import PHI_ALPHABET, t0_free_alphabet
from cyclogt.relations import PairGH
from cyclogt.solve import graded_nullspace, system
from cyclogt.gtgroups import (LiftError, anti_realization, exp_flow,
                              group_residual_vector, ihara_bracket,
                              lie_residual_suite, lift_to, min_valid_degree,
                              multiply, torsor_act)

N, D = 2, 4


def _lie_pair(d_src, degree=D):
    space = graded_nullspace(system("grtm", N), d_src)
    phi, psi = space.basis[0]
    return PairGH(Series(PHI_ALPHABET, degree, phi.terms),
                  Series(t0_free_alphabet(N), degree, psi.terms), N, degree, "lie")


@pytest.fixture(scope="module")
def v1():
    return _lie_pair(1)


@pytest.fixture(scope="module")
def v3():
    return _lie_pair(3)


@pytest.fixture(scope="module")
def g1(v1):
    return exp_flow(v1)


@pytest.fixture(scope="module")
def g3(v3):
    return exp_flow(v3)


def test_exp_flow_of_zero_is_identity():
    vz = PairGH.from_lie(Series.zero(PHI_ALPHABET, D),
                         Series.zero(t0_free_alphabet(N), D), N, D)
    e = exp_flow(vz)
    assert log_series(e.first).is_zero() and log_series(e.second).is_zero()


def test_exp_flow_lands_in_the_group(g1, g3):
    assert not group_residual_vector(g1)
    assert not group_residual_vector(g3)
    assert min_valid_degree(g1) == D + 1


def test_exp_flow_rejects_non_solutions():
    al = t0_free_alphabet(N)
    bad = PairGH.from_lie(Series.zero(PHI_ALPHABET, 2), Series.gen(al, "A", 2), N, 2)
    with pytest.raises(ValueError):
        exp_flow(bad)


def test_group_law(g1, g3):
    e = PairGH.identity(N, D)
    assert multiply(g1, e).first == g1.first and multiply(e, g1).second == g1.second
    lhs = multiply(multiply(g1, g3), g1)
    rhs = multiply(g1, multiply(g3, g1))
    assert lhs.first == rhs.first and lhs.second == rhs.second
    assert not group_residual_vector(multiply(g1, g3))


def test_torsor_action_is_the_group_law_on_the_group(g1, g3):
    p = torsor_act(g1, g3)
    q = multiply(g1, g3)
    assert p.first == q.first and p.second == q.second


def test_anti_realization_reverses_products(g1, g3):
    _, h12 = anti_realization(multiply(g1, g3))
    _, h1 = anti_realization(g1)
    _, h3 = anti_realization(g3)
    x = Series.gen(t0_free_alphabet(N), "B(1)", D)
    assert h12(x) == h3(h1(x))


def test_ihara_bracket_closes_and_jacobi(v1, v3):
    br = ihara_bracket(v1, v3)
    assert lie_residual_suite(br)
    assert not br.second.is_zero()

    def j(a, b, c):
        return ihara_bracket(a, ihara_bracket(b, c))

    cyc = [j(v1, v3, br), j(v3, br, v1), j(br, v1, v3)]
    assert sum((p.first for p in cyc), Series.zero(PHI_ALPHABET, D)).is_zero()
    assert sum((p.second for p in cyc), Series.zero(t0_free_alphabet(N), D)).is_zero()


def test_lift_repairs_a_plain_exponential(v1):
    p = PairGH(exp_series(v1.first), exp_series(v1.second), N, D, "group")
    n0 = min_valid_degree(p)
    assert n0 <= D
    q = lift_to(p, n0)
    assert not group_residual_vector(q)
    # the lift only changes degrees >= n0
    assert {w: c for w, c in q.second.terms.items() if len(w) < n0} == \
        {w: c for w, c in p.second.terms.items() if len(w) < n0}


def test_lift_error_type_exists():
    assert issubclass(LiftError, RuntimeError)
