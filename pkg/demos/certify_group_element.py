"""Build a certified cyclotomic group element and watch the lift repair a bad one.

We take the degree-1 and degree-3 solutions of the N=2 relation system,
integrate their sum to a group element with exp_flow, and confirm every
group-mode residual vanishes.  Then we deliberately use the naive
exponential instead (which is only correct to the lowest degree) and repair
it degree by degree with lift_to.
"""

from cyclogt.series import Series, exp_series
from cyclogt.tkn import PHI_ALPHABET, t0_free_alphabet
from cyclogt.relations import PairGH, full_suite
from cyclogt.solve import graded_nullspace, system
from cyclogt.gtgroups import exp_flow, group_residual_vector, lift_to, min_valid_degree

N, D = 2, 4
al = t0_free_alphabet(N)

phi = Series.zero(PHI_ALPHABET, D)
psi = Series.zero(al, D)
for d in (1, 3):
    a, b = graded_nullspace(system("grtm", N), d).basis[0]
    phi = phi + Series(PHI_ALPHABET, D, a.terms)
    psi = psi + Series(al, D, b.terms)

v = PairGH.from_lie(phi, psi, N, D)
p = exp_flow(v)
print("exp_flow element: residuals all zero:", not group_residual_vector(p))
for line in full_suite(p):
    print(f"  {line['relation']:<16} zero={line['zero']}")

q = PairGH(exp_series(phi), exp_series(psi), N, D, "group")
n0 = min_valid_degree(q)
print(f"\nnaive exponential is only valid below degree {n0}")
r = lift_to(q, n0)
print("after lift_to: residuals all zero:", not group_residual_vector(r))
print("lift preserved the low degrees:",
      all(c == r.second.terms.get(w) for w, c in q.second.terms.items()
          if len(w) < n0))
