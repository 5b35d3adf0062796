"""Twist the universal module category and check the coherence axioms.

The untwisted structure satisfies the module axioms by construction.
Twisting by a certified group pair keeps every axiom intact, while twisting
by an arbitrary group-like series breaks the module pentagon immediately.
"""

import time

from cyclogt.series import Series, exp_series
from cyclogt.tkn import PHI_ALPHABET, t0_free_alphabet
from cyclogt.relations import PairGH
from cyclogt.solve import graded_nullspace, system
from cyclogt.gtgroups import exp_flow
from cyclogt.categories import TwistedStructure, check_axioms

N, D = 2, 3


def run(name, st):
    t0 = time.time()
    for fam in ("I", "II", "IV", "iii", "i"):
        reports = check_axioms(st, fam, max_total=4)
        bad = [r for r in reports if not r["zero"]]
        status = "ok" if not bad else f"{len(bad)} violations, first at degree " \
            f"{min(r['lowest_nonzero_degree'] for r in bad)}"
        print(f"  axiom ({fam}): {len(reports)} instances, {status}")
    print(f"  [{time.time() - t0:.1f}s]")


print("untwisted universal structure:")
run("untwisted", TwistedStructure.untwisted(N, D))

phi = Series.zero(PHI_ALPHABET, D)
psi = Series.zero(t0_free_alphabet(N), D)
for d in (1, 3):
    a, b = graded_nullspace(system("grtm", N), d).basis[0]
    phi = phi + Series(PHI_ALPHABET, D, a.terms)
    psi = psi + Series(t0_free_alphabet(N), D, b.terms)
pair = exp_flow(PairGH.from_lie(phi, psi, N, D))

print("\ntwist by a certified group pair:")
run("certified", TwistedStructure.from_pair(pair))

print("\ntwist by the uncertified pair (1, exp(A)):")
run("exp(A)", TwistedStructure(N, D, Series.one(PHI_ALPHABET, D),
                               exp_series(Series.gen(t0_free_alphabet(N), "A", D))))
