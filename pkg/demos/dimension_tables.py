"""Print the graded dimension tables of the shipped relation systems.

The free-Lie Witt numbers are included as a control row: a relation system
whose dims track a Witt row behaves like a free Lie algebra on that many
generators in the range shown.
"""

from cyclogt.solve import dims_report, free_dims_report, system

DMAX = 4

rows = [
    ("free rank 2", free_dims_report(2, DMAX)),
    ("grt1", dims_report(system("grt1"), DMAX)),
    ("grtm N=2", dims_report(system("grtm", 2), DMAX)),
    ("grtmd N=2", dims_report(system("grtmd", 2), DMAX)),
    ("grtmb2", dims_report(system("grtmb2"), DMAX)),
    ("grtm N=3", dims_report(system("grtm", 3), DMAX)),
]

print(f"{'system':<12}" + "".join(f"d={d:<4}" for d in range(1, DMAX + 1)))
for name, rep in rows:
    print(f"{name:<12}" + "".join(f"{v:<6}" for v in rep["dims"]))

print()
print("grtm N=2 has a one-dimensional space in degree 1 (the cyclotomic")
print("direction B(1)) and another in degree 3; grt1 only wakes up at degree 3.")
