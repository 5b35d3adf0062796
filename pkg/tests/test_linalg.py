"""Exact sparse linear algebra."""

import random
from fractions import Fraction

from cyclogt.linalg import SparseRowSpace, nullspace, rank_mod_p, solve_affine


def F(x):
    return Fraction(x)


def rand_matrix(rng, nrows, ncols, rank):
    base = [[F(rng.randint(-3, 3)) for _ in range(ncols)] for _ in range(rank)]
    rows = []
    for _ in range(nrows):
        coeffs = [F(rng.randint(-2, 2)) for _ in range(rank)]
        rows.append([sum(c * base[k][j] for k, c in enumerate(coeffs))
                     for j in range(ncols)])
    return rows


def test_nullspace_annihilates():
    rng = random.Random(9)
    rows = rand_matrix(rng, 8, 6, 3)
    ns = nullspace(rows, 6)
    for v in ns:
        for r in rows:
            assert sum(c * x for c, x in zip(r, v)) == 0
    # rank-nullity against an independent elimination
    space = SparseRowSpace()
    for r in rows:
        space.add({j: c for j, c in enumerate(r) if c})
    assert len(ns) == 6 - space.rank


def test_nullspace_trivial_full_rank():
    rows = [[F(1), F(0)], [F(0), F(1)]]
    assert nullspace(rows, 2) == []


def test_solve_affine_consistent_and_not():
    rows = [[F(1), F(2)], [F(0), F(1)]]
    sol = solve_affine(rows, [F(5), F(2)], 2)
    assert sol is not None
    x, freedom = sol
    assert x == [F(1), F(2)] and freedom == 0
    assert solve_affine([[F(1), F(1)], [F(2), F(2)]], [F(1), F(3)], 2) is None


def test_solve_affine_underdetermined():
    sol = solve_affine([[F(1), F(1)]], [F(2)], 2)
    assert sol is not None
    x, freedom = sol
    assert x[0] + x[1] == 2 and freedom == 1


def test_rank_mod_p_agrees_generically():
    rng = random.Random(4)
    for _ in range(5):
        rows = rand_matrix(rng, 7, 5, rng.randint(1, 4))
        sparse = [{j: c for j, c in enumerate(r) if c} for r in rows]
        space = SparseRowSpace()
        for r in sparse:
            space.add(dict(r))
        assert rank_mod_p([r for r in sparse if r], 10007) == space.rank
