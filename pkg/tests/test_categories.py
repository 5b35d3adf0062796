"""Universal module-category model and its twists."""

import pytest

from cyclogt.series import Series, exp_series
from cyclogt.tkn import PHI_ALPHABET, t0_free_alphabet
from cyclogt.relations import PairGH
from cyclogt.solve import graded_nullspace, system
from cyclogt.gtgroups import exp_flow
from cyclogt.categories import (CatMorphism, ParenObject, RingRN, TwistedStructure,
                                all_axioms_pass, check_axioms, compose,
                                identity_morphism, inverse, ring_rn_add,
                                ring_rn_mul, ring_rn_neg, ring_rn_to_int,
                                swap_morphism)

N, D = 2, 3


@pytest.fixture(scope="module")
def untwisted():
    return TwistedStructure.untwisted(N, D)


@pytest.fixture(scope="module")
def certified():
    phi = Series.zero(PHI_ALPHABET, D)
    psi = Series.zero(t0_free_alphabet(N), D)
    for d in (1, 3):
        a, b = graded_nullspace(system("grtm", N), d).basis[0]
        phi = phi + Series(PHI_ALPHABET, D, a.terms)
        psi = psi + Series(t0_free_alphabet(N), D, b.terms)
    return TwistedStructure.from_pair(exp_flow(PairGH.from_lie(phi, psi, N, D)))


def test_untwisted_module_axioms(untwisted):
    for fam in ("I", "II", "IV"):
        assert all_axioms_pass(check_axioms(untwisted, fam, max_total=4))


def test_untwisted_base_axioms(untwisted):
    for fam in ("iii", "i"):
        assert all_axioms_pass(check_axioms(untwisted, fam, max_total=4))


def test_certified_twist_passes_all_axioms(certified):
    for fam in ("I", "II", "IV", "iii", "i"):
        assert all_axioms_pass(check_axioms(certified, fam, max_total=4))


def test_exp_a_twist_breaks_the_module_pentagon():
    al = t0_free_alphabet(N)
    st = TwistedStructure(N, D, Series.one(PHI_ALPHABET, D),
                          exp_series(Series.gen(al, "A", D)))
    reports = check_axioms(st, "I", max_total=4)
    assert not all_axioms_pass(reports)
    assert min(r["lowest_nonzero_degree"] for r in reports if not r["zero"]) == 1


def test_morphism_group_laws():
    X = ParenObject.comb(2)
    Y = ParenObject.comb(1)
    s = swap_morphism(X, Y, N, D)
    assert compose(s, inverse(s)).is_identity()
    assert compose(inverse(s), s).is_identity()
    idx = identity_morphism(X.tensor(Y), "C", N, D)
    assert compose(s, idx).perm == s.perm


def test_ring_rn_axioms_sample():
    xs = [RingRN(3, a, r) for a in range(3) for r in (-1, 0, 2)]
    for x in xs:
        for y in xs:
            assert ring_rn_add(x, y) == ring_rn_add(y, x)
            assert ring_rn_mul(x, y) == ring_rn_mul(y, x)
            assert ring_rn_add(x, ring_rn_neg(x)) == RingRN(3, 0, 0)
            for z in xs[:4]:
                assert ring_rn_mul(x, ring_rn_add(y, z)) == \
                    ring_rn_add(ring_rn_mul(x, y), ring_rn_mul(x, z))


def test_ring_rn_isomorphism_to_integers():
    for n in (2, 3):
        for a in range(n):
            for r in range(-2, 3):
                for b in range(n):
                    for s in range(-2, 3):
                        x, y = RingRN(n, a, r), RingRN(n, b, s)
                        assert ring_rn_to_int(ring_rn_add(x, y)) == \
                            ring_rn_to_int(x) + ring_rn_to_int(y)
                        assert ring_rn_to_int(ring_rn_mul(x, y)) == \
                            ring_rn_to_int(x) * ring_rn_to_int(y)
