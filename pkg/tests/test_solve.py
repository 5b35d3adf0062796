"""Graded nullspaces, dimension tables, implication checks."""

from cyclogt.freelie import witt_number
from cyclogt.solve import (SolutionSpace, dims_report, free_dims_report,
                           graded_nullspace, implication_check, system)


def test_unknown_basis_counts():
    sys2 = system("grtm", 2)
    for d in (1, 2, 3):
        # phi over 2 letters plus psi over N+1 letters
        assert len(sys2.unknown_basis(d)) == witt_number(2, d) + witt_number(3, d)


def test_grt1_dims_low_degrees():
    rep = dims_report(system("grt1"), 4)
    assert rep["dims"] == [0, 0, 1, 0]


def test_free_dims_report():
    assert free_dims_report(5, 4)["dims"] == [5, 10, 40, 150]


def test_prime_probe_consistency():
    space = graded_nullspace(system("grt1"), 3, prime_probe=10007)
    assert space.dim == 1


def test_basis_vectors_satisfy_the_relations():
    sys3 = system("grtm", 3)
    for d in (1, 2):
        for phi, psi in graded_nullspace(sys3, d).basis:
            assert sys3.is_solution(phi, psi, d)


def test_column_order_does_not_change_the_space():
    sys2 = system("grtm", 2)
    a = graded_nullspace(sys2, 2)
    b = graded_nullspace(sys2, 2, column_order="reversed")
    assert a.dim == b.dim and a.rank == b.rank


def test_implication_small():
    r = implication_check(system("pentagon_cc"), system("duality_hexagons"), 3)
    assert r["holds"] and r["dim"] == 1


def test_grtm_collapses_to_grt1_at_n_equal_one():
    # with a single residue class the cyclotomic system adds nothing new
    for d in (1, 2, 3):
        dim_g = graded_nullspace(system("grt1"), d).dim
        dim_m = graded_nullspace(system("grtm", 1), d).dim
        assert dim_m == dim_g


def test_solution_space_json_roundtrip():
    space = graded_nullspace(system("grtm", 2), 1)
    back = SolutionSpace.from_json(space.to_json())
    assert back.dim == space.dim and back.basis == space.basis
    assert back.N == 2 and back.degree == 1
