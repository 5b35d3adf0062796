"""Residuals of the defining relations on known elements."""

from fractions import Fraction

import pytest

from cyclogt.series import Series, exp_series
from cyclogt.tkn import PHI_ALPHABET, t0_free_alphabet
from cyclogt.relations import (PairGH, check_mu, full_suite, rescale,
                               residual_broadhurst, residual_distribution,
                               residual_mixed_pentagon, residual_pentagon)
from cyclogt.solve import graded_nullspace, system


def test_identity_pair_passes_everything():
    for N in (1, 2, 3):
        p = PairGH.identity(N, 4)
        assert all(c["zero"] for c in full_suite(p))


def test_degree_three_generator_passes_the_phi_relations():
    space = graded_nullspace(system("grt1"), 3)
    assert space.dim == 1
    sig3, _ = space.basis[0]
    p = PairGH.from_lie(sig3, Series.zero(t0_free_alphabet(1), 3), 1, 3)
    reports = {c["relation"]: c["zero"] for c in full_suite(p)}
    assert reports["duality"] and reports["hexagon"]
    assert reports["pentagon"] and reports["special"]


def test_pentagon_violated_by_a_generator():
    a = Series.gen(PHI_ALPHABET, "A", 2)
    res = residual_pentagon(a, "lie")
    assert not res.zero and res.lowest_nonzero_degree == 1


def test_mixed_pentagon_kills_plain_a():
    al = t0_free_alphabet(2)
    p = PairGH.from_lie(Series.zero(PHI_ALPHABET, 2), Series.gen(al, "A", 2), 2, 2)
    res = residual_mixed_pentagon(p)
    assert not res.zero and res.lowest_nonzero_degree == 1


def test_distribution_on_the_degree_one_solution():
    N = 2
    space = graded_nullspace(system("mixed_pentagon", N), 1)
    for phi, psi in space.basis:
        p = PairGH.from_lie(phi, psi, N, 1)
        assert residual_distribution(p, 1).zero


def test_broadhurst_duality_of_b1():
    al = t0_free_alphabet(2)
    x = Series.gen(al, "B(1)", 2)
    res, alpha = residual_broadhurst(x, "lie")
    # tau(B(1)) + B(1) = -A - B(0) is cancelled exactly by alpha = 1
    assert alpha == Fraction(1) and res.zero
    bad, _ = residual_broadhurst(Series.gen(al, "A", 2), "lie")
    assert not bad.zero


def test_rescale_normalizes_c_ab():
    ab = Series.gen(PHI_ALPHABET, "A", 3).bracket(Series.gen(PHI_ALPHABET, "B", 3))
    g = exp_series(ab.scale(Fraction(3, 2)))
    assert check_mu(g, Fraction(6))
    h = rescale(g, Fraction(6))
    assert h.coeff_labels("A", "B") == Fraction(1, 24)
    assert check_mu(h, Fraction(1))
    with pytest.raises(ValueError):
        rescale(g, Fraction(5))


def test_group_mode_residual_matches_lie_at_lowest_degree():
    space = graded_nullspace(system("grt1"), 3)
    sig3 = Series(PHI_ALPHABET, 4, space.basis[0][0].terms)
    assert residual_pentagon(exp_series(sig3), "group").zero
    a = Series.gen(PHI_ALPHABET, "A", 4)
    bad = a.bracket(a.bracket(Series.gen(PHI_ALPHABET, "B", 4)))
    lie = residual_pentagon(bad, "lie")
    grp = residual_pentagon(exp_series(bad), "group")
    assert grp.lowest_nonzero_degree == lie.lowest_nonzero_degree == 3
    low = {w: c for w, c in grp.value.terms.items() if len(w) == 3}
    assert low == {w: c for w, c in lie.value.terms.items() if len(w) == 3}
