"""Degree-graded solver: solution spaces, dimension tables, implication checks.

All defining relations are linear in a homogeneous unknown pair of fixed
degree, so the degree-d solution space of a relation system is the exact
rational nullspace of one sparse matrix over Lyndon coordinates.  A prime
field probe is available as a cross-check only; the certified answer is
always the exact one, and a probe mismatch raises instead of being absorbed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .freelie import lyndon_basis, witt_number
from .linalg import nullspace, rank_mod_p
from .series import Series, series_to_json, series_from_json
from .tkn import PHI_ALPHABET, AlgebraId, pbw_ambient_dims, t0_free_alphabet
from .relations import (PairGH, residual_broadhurst, residual_distribution,
                        residual_duality_hexagon, residual_mixed_pentagon,
                        residual_octagon, residual_pentagon, residual_special)


def _r_duality(p):
    return residual_duality_hexagon(p.first, "lie")[0].value


def _r_hexagon(p):
    return residual_duality_hexagon(p.first, "lie")[1].value


def _r_pentagon(p):
    return residual_pentagon(p.first, "lie").value


def _r_special(p):
    return residual_special(p.first, "lie").value


def _r_mixed_pentagon(p):
    return residual_mixed_pentagon(p).value


def _r_octagon(p):
    return residual_octagon(p, "lie").value


def _r_special_b(p):
    return residual_special(p.second, "lie", cyclotomic=True, N=p.N).value


def _r_broadhurst(p):
    return residual_broadhurst(p.second, "lie")[0].value


def _r_distribution(nprime):
    def r(p):
        return residual_distribution(p, nprime).value
    r.__name__ = f"distribution_{nprime}"
    return r


@dataclass(frozen=True)
class RelationSystem:
    """A named set of Lie-mode relations plus vanishing-coefficient constraints.

    components selects which of the pair's slots carry unknowns; the other
    slot is pinned to zero.  coeff_zero entries are (slot, label tuple) and
    only bind at the degree equal to the word length.
    """

    name: str
    N: int
    residuals: tuple
    components: tuple = ("phi", "psi")
    coeff_zero: tuple = ()

    def unknown_basis(self, d: int) -> list[tuple[Series, Series]]:
        phi0 = Series.zero(PHI_ALPHABET, d)
        psi0 = Series.zero(t0_free_alphabet(self.N), d)
        cols = []
        if "phi" in self.components:
            for el in lyndon_basis(PHI_ALPHABET, d):
                cols.append((el.expansion, psi0))
        if "psi" in self.components:
            for el in lyndon_basis(t0_free_alphabet(self.N), d):
                cols.append((phi0, el.expansion))
        return cols

    def residual_vector(self, phi: Series, psi: Series, d: int) -> dict:
        """All residuals and constraint values of a pair, as one sparse vector."""
        p = PairGH(phi, psi, self.N, d, "lie")
        vec: dict = {}
        for k, fn in enumerate(self.residuals):
            for w, c in fn(p).terms.items():
                vec[(k, w)] = c
        for k, (slot, labels) in enumerate(self.coeff_zero):
            if len(labels) != d:
                continue
            s = phi if slot == "phi" else psi
            c = s.coeff_labels(*labels)
            if c:
                vec[("coeff", k)] = c
        return vec

    def is_solution(self, phi: Series, psi: Series, d: int) -> bool:
        return not self.residual_vector(phi, psi, d)


def _divisors_proper(N: int):
    return [m for m in range(1, N) if N % m == 0]


def system(name: str, N: int = 1) -> RelationSystem:
    """Registry of the shipped relation systems."""
    if name == "grt1":
        return RelationSystem("grt1", 1,
                              (_r_duality, _r_hexagon, _r_pentagon, _r_special),
                              components=("phi",))
    if name == "duality_hexagons":
        return RelationSystem("duality_hexagons", 1, (_r_duality, _r_hexagon),
                              components=("phi",))
    if name == "pentagon_cc":
        return RelationSystem("pentagon_cc", 1, (_r_pentagon,),
                              components=("phi",),
                              coeff_zero=(("phi", ("B",)), ("phi", ("A", "B"))))
    if name == "mixed_pentagon":
        return RelationSystem(f"mixed_pentagon", N, (_r_mixed_pentagon,))
    if name == "mixed_pentagon_cc":
        return RelationSystem("mixed_pentagon_cc", N, (_r_mixed_pentagon,),
                              coeff_zero=(("psi", ("B(0)",)),
                                          ("psi", ("A", "B(0)"))))
    if name == "octagon":
        return RelationSystem("octagon", N, (_r_octagon,))
    if name == "distribution":
        return RelationSystem("distribution", N,
                              tuple(_r_distribution(m) for m in _divisors_proper(N)))
    if name == "ca_zero":
        return RelationSystem("ca_zero", N, (),
                              coeff_zero=(("psi", ("A",)),))
    if name == "grtm":
        return RelationSystem("grtm", N,
                              (_r_duality, _r_hexagon, _r_pentagon, _r_special,
                               _r_mixed_pentagon, _r_octagon, _r_special_b),
                              coeff_zero=(("psi", ("B(0)",)),))
    if name == "grtmd":
        base = system("grtm", N)
        return RelationSystem("grtmd", N,
                              base.residuals
                              + tuple(_r_distribution(m) for m in _divisors_proper(N)),
                              coeff_zero=base.coeff_zero)
    if name == "grtmb2":
        base = system("grtm", 2)
        return RelationSystem("grtmb2", 2, base.residuals + (_r_broadhurst,),
                              coeff_zero=base.coeff_zero)
    raise ValueError(f"unknown relation system {name!r}")


@dataclass
class SolutionSpace:
    system: str
    N: int
    degree: int
    basis: list  # of (phi, psi) Series pairs
    ncols: int
    rank: int
    timestamp: float = field(default_factory=time.time)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "system": self.system,
            "N": self.N,
            "degree": self.degree,
            "basis": [{"first": series_to_json(a), "second": series_to_json(b)}
                      for a, b in self.basis],
            "ambient_dims": pbw_ambient_dims(AlgebraId("t", 4, self.N), self.degree),
            "ncols": self.ncols,
            "rank": self.rank,
            "timestamp": self.timestamp,
        }

    @classmethod
    def from_json(cls, obj) -> "SolutionSpace":
        basis = [(series_from_json(e["first"]), series_from_json(e["second"]))
                 for e in obj["basis"]]
        return cls(obj["system"], obj["N"], obj["degree"], basis,
                   obj["ncols"], obj["rank"], obj.get("timestamp", 0.0))


def _assemble(sys: RelationSystem, d: int, column_order: str = "default"):
    cols = sys.unknown_basis(d)
    if column_order == "reversed":
        cols = cols[::-1]
    col_vecs = [sys.residual_vector(phi, psi, d) for phi, psi in cols]
    row_keys = sorted({k for v in col_vecs for k in v},
                      key=lambda k: (str(k[0]), str(k[1])))
    rows = [[v.get(key, Fraction(0)) for v in col_vecs] for key in row_keys]
    return cols, rows


def graded_nullspace(sys: RelationSystem, d: int, prime_probe: int | None = None,
                     column_order: str = "default") -> SolutionSpace:
    """Exact basis of the homogeneous degree-d solutions of a system."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    cols, rows = _assemble(sys, d, column_order)
    ncols = len(cols)
    ns = nullspace(rows, ncols)
    rank = ncols - len(ns)
    if prime_probe is not None:
        sparse_rows = [{j: r[j] for j in range(ncols) if r[j]} for r in rows]
        probe_rank = rank_mod_p([r for r in sparse_rows if r], prime_probe)
        if probe_rank != rank:
            raise RuntimeError(
                f"prime-field probe rank {probe_rank} (mod {prime_probe}) "
                f"disagrees with the exact rank {rank}")
    basis = []
    for vec in ns:
        phi = Series.zero(PHI_ALPHABET, d)
        psi = Series.zero(t0_free_alphabet(sys.N), d)
        for c, (p_, s_) in zip(vec, cols):
            if c:
                phi = phi + p_.scale(c)
                psi = psi + s_.scale(c)
        basis.append((phi, psi))
    return SolutionSpace(sys.name, sys.N, d, basis, ncols, rank)


def implication_check(sys_a: RelationSystem, sys_b: RelationSystem, d: int) -> dict:
    """Does every degree-d solution of sys_a satisfy sys_b?

    Returns {"holds": bool, "dim": nullspace dim of sys_a, "witness": pair or
    None}.  The two systems must share N and the unknown components.
    """
    if sys_a.N != sys_b.N or sys_a.components != sys_b.components:
        raise ValueError("implication checks need a common unknown space")
    space = graded_nullspace(sys_a, d)
    for phi, psi in space.basis:
        if not sys_b.is_solution(phi, psi, d):
            return {"holds": False, "dim": space.dim, "witness": (phi, psi)}
    return {"holds": True, "dim": space.dim, "witness": None}


def dims_report(sys: RelationSystem, d_max: int,
                prime_probe: int | None = None) -> dict:
    rows = []
    for d in range(1, d_max + 1):
        space = graded_nullspace(sys, d, prime_probe=prime_probe)
        rows.append({"degree": d, "dim": space.dim,
                     "ncols": space.ncols, "rank": space.rank})
    return {"system": sys.name, "N": sys.N,
            "dims": [r["dim"] for r in rows], "per_degree": rows}


def free_dims_report(rank: int, d_max: int) -> dict:
    """Control row: graded dimensions of a free Lie algebra by the Witt formula."""
    dims = [witt_number(rank, d) for d in range(1, d_max + 1)]
    return {"system": "free", "rank": rank, "dims": dims,
            "per_degree": [{"degree": d + 1, "dim": dims[d]} for d in range(d_max)]}
