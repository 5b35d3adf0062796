"""Lyndon bases, Dynkin projection, BCH."""

import random
from fractions import Fraction

from cyclogt.series import Alphabet, Series, exp_series
from cyclogt.freelie import (bch, is_lie, lie_project, lyndon_basis, lyndon_words,
                             witt_number)

AB = Alphabet(("A", "B"), 1)


def test_witt_known_values():
    # necklace counts for a rank-2 free Lie algebra
    assert [witt_number(2, d) for d in range(1, 9)] == [2, 1, 2, 3, 6, 9, 18, 30]
    assert witt_number(3, 4) == 18


def test_lyndon_counts_match_witt():
    for rank in (2, 3):
        for d in range(1, 7):
            assert len(lyndon_words(rank, d)) == witt_number(rank, d)


def test_lyndon_basis_is_independent_lie_set():
    basis = lyndon_basis(AB, 4)
    assert len(basis) == witt_number(2, 4)
    for el in basis:
        assert is_lie(el.expansion)


def test_lie_project_idempotent_and_detects():
    rng = random.Random(2)
    x = Series.zero(AB, 4)
    for el in lyndon_basis(AB, 3) + lyndon_basis(AB, 4):
        x = x + el.expansion.scale(Fraction(rng.randint(-3, 3)))
    assert lie_project(x) == x
    assert is_lie(x)
    aa = Series.gen(AB, "A", 4)
    assert not is_lie(aa.mul(aa))
    assert lie_project(lie_project(aa.mul(aa))) == lie_project(aa.mul(aa))


def test_bch_low_degree_coefficients():
    a = Series.gen(AB, "A", 3)
    b = Series.gen(AB, "B", 3)
    z = bch(a, b)
    expected = (a + b + a.bracket(b).scale(Fraction(1, 2))
                + a.bracket(a.bracket(b)).scale(Fraction(1, 12))
                + b.bracket(b.bracket(a)).scale(Fraction(1, 12)))
    assert z == expected


def test_bch_matches_group_product():
    a = Series.gen(AB, "A", 5).scale(Fraction(1, 2))
    b = Series.gen(AB, "B", 5) + Series.gen(AB, "A", 5).bracket(Series.gen(AB, "B", 5))
    assert exp_series(bch(a, b)) == exp_series(a).mul(exp_series(b))


def test_bch_associativity_sample():
    a = Series.gen(AB, "A", 5)
    b = Series.gen(AB, "B", 5)
    c = a.bracket(b) + b
    assert bch(bch(a, b), c) == bch(a, bch(b, c))
