"""Command line front end: dimension tables, residual checks, theorem runs.

Exit codes: 0 all checks pass, 2 a mathematical check failed (nonzero
residual or violated containment), 1 usage or I/O error.  Reports are JSON
with the run configuration embedded; the printed tables are rendered from
the same JSON, never computed separately.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .freelie import lie_project
from .series import Series, series_from_json
from .tkn import PHI_ALPHABET, s_map, t0_free_alphabet, tau_map
from .relations import PairGH, full_suite, residual_broadhurst
from .solve import dims_report, free_dims_report, graded_nullspace, implication_check, system
from .gtgroups import exp_flow, multiply


# degree caps that keep runs desk-scale; lift with --force
DESK_LIMITS = {"dims": 6, "check": 8, "verify-theorems": 5}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract reserves 2 for math failures
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(1)


def _emit(report: dict, out_path, render) -> None:
    text = json.dumps(report, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    for line in render(report):
        print(line)


def _table(rows: list[dict], columns: list[str]) -> list[str]:
    cells = [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) if cells else len(c)
              for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
    return lines


def _config(args, command: str) -> dict:
    keep = ("system", "N", "max_degree", "mode", "input", "out",
            "prime_probe", "exact_only", "force", "rank", "theorem")
    cfg = {k: getattr(args, k) for k in keep if hasattr(args, k)}
    cfg["command"] = command
    return cfg


def _check_cap(command: str, degree: int, force: bool) -> None:
    cap = DESK_LIMITS[command]
    if degree > cap and not force:
        sys.stderr.write(f"error: degree {degree} exceeds the desk-scale cap "
                         f"{cap} for {command}; pass --force to override\n")
        sys.exit(1)


def cmd_dims(args) -> int:
    _check_cap("dims", args.max_degree, args.force)
    if args.exact_only and args.prime_probe:
        sys.stderr.write("error: --exact-only conflicts with --prime-probe\n")
        sys.exit(1)
    if args.system == "free":
        if args.rank is None:
            sys.stderr.write("error: --system free needs --rank\n")
            sys.exit(1)
        body = free_dims_report(args.rank, args.max_degree)
    else:
        try:
            sys_ = system(args.system, args.N)
        except ValueError as exc:
            sys.stderr.write(f"error: {exc}\n")
            sys.exit(1)
        body = dims_report(sys_, args.max_degree, prime_probe=args.prime_probe)
    report = {"config": _config(args, "dims"), "version": __version__, **body}

    def render(rep):
        head = [f"graded dimensions, system={rep['system']}"
                + (f", N={rep['N']}" if "N" in rep else f", rank={rep['rank']}")]
        return head + _table(rep["per_degree"],
                             ["degree", "dim", "ncols", "rank"]
                             if "ncols" in rep["per_degree"][0]
                             else ["degree", "dim"])

    _emit(report, args.out, render)
    return 0


def _pair_from_json(obj: dict) -> PairGH:
    first = series_from_json(obj["first"])
    second = series_from_json(obj["second"])
    return PairGH(first, second, int(obj["N"]), int(obj["degree"]), obj["mode"])


def cmd_check(args) -> int:
    try:
        with open(args.input) as fh:
            obj = json.load(fh)
        pair = _pair_from_json(obj)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        sys.stderr.write(f"error: cannot read pair from {args.input}: {exc}\n")
        sys.exit(1)
    if args.mode and args.mode != pair.mode:
        sys.stderr.write(f"error: --mode {args.mode} but the input file "
                         f"declares mode {pair.mode}\n")
        sys.exit(1)
    _check_cap("check", pair.degree, args.force)
    checks = full_suite(pair)
    ok = all(c["zero"] for c in checks)
    report = {"config": _config(args, "check"), "version": __version__,
              "N": pair.N, "degree": pair.degree, "mode": pair.mode,
              "all_zero": ok, "checks": checks}

    def render(rep):
        head = [f"relation residuals, N={rep['N']}, degree<={rep['degree']}, "
                f"mode={rep['mode']}"]
        rows = [{**c, "zero": "yes" if c["zero"] else "NO"} for c in rep["checks"]]
        tail = ["all residuals zero" if rep["all_zero"] else "VIOLATED"]
        return head + _table(rows, ["relation", "variant", "N", "zero",
                                    "lowest_nonzero_degree"]) + tail

    _emit(report, args.out, render)
    return 0 if ok else 2


def _thm_hexagons(d_max: int) -> list[dict]:
    out = []
    for d in range(1, d_max + 1):
        r = implication_check(system("pentagon_cc"), system("duality_hexagons"), d)
        out.append({"theorem": "pentagon_implies_hexagons", "N": 1, "degree": d,
                    "dim": r["dim"], "holds": r["holds"]})
    return out


def _thm_distribution(d_max: int, Ns=(2, 3)) -> list[dict]:
    out = []
    for N in Ns:
        for d in range(1, d_max + 1):
            r = implication_check(system("mixed_pentagon", N),
                                  system("distribution", N), d)
            ca = implication_check(system("mixed_pentagon", N),
                                   system("ca_zero", N), d)
            out.append({"theorem": "mixed_pentagon_implies_distribution",
                        "N": N, "degree": d, "dim": r["dim"],
                        "holds": r["holds"] and ca["holds"]})
    return out


def _thm_octagon(d_max: int) -> list[dict]:
    out = []
    for d in range(1, d_max + 1):
        r = implication_check(system("mixed_pentagon_cc", 2), system("octagon", 2), d)
        out.append({"theorem": "mixed_pentagon_implies_octagon", "N": 2,
                    "degree": d, "dim": r["dim"], "holds": r["holds"]})
    return out


def _thm_broadhurst(d_max: int) -> list[dict]:
    d = max(2, min(d_max, 4))
    al = t0_free_alphabet(2)
    probe = lie_project(Series.gen(al, "A", d)
                        .mul(Series.gen(al, "B(1)", d))) + Series.gen(al, "B(0)", d)
    tau = tau_map(d)
    involutive = (tau(tau(probe)) - probe).is_zero()
    s = s_map(d)
    s4 = s(s(s(s(probe_t := _t4_probe(d)))))
    s_order_4 = (s4 - probe_t).is_zero()
    # alpha is additive along the group law
    sysb = system("grtmb2", 2)
    vs = [graded_nullspace(sysb, dd).basis for dd in (1, 3)]
    dims_ok = all(len(b) >= 1 for b in vs)
    additive = True
    if dims_ok:
        def at_degree(pair):
            phi, psi = pair
            return PairGH.from_lie(Series(PHI_ALPHABET, d, phi.terms),
                                   Series(al, d, psi.terms), 2, d)
        p1 = exp_flow(at_degree(vs[0][0]))
        p2 = exp_flow(at_degree(vs[1][0]))
        a1 = residual_broadhurst(p1.second, "group")[1]
        a2 = residual_broadhurst(p2.second, "group")[1]
        a12 = residual_broadhurst(multiply(p1, p2).second, "group")[1]
        additive = a12 == a1 + a2
    return [{"theorem": "broadhurst_torsor", "N": 2, "degree": d,
             "dim": sum(len(b) for b in vs),
             "holds": involutive and s_order_4 and dims_ok and additive}]


def _t4_probe(d: int):
    from .tkn import AlgebraId, algebra_alphabet
    al = algebra_alphabet(AlgebraId("t", 4, 2))
    labels = sorted(al.labels)
    x = Series.gen(al, labels[0], d)
    for lab in labels[1:3]:
        x = x + lie_project(x.mul(Series.gen(al, lab, d)))
    return x


THEOREMS = {
    "hexagons": _thm_hexagons,
    "distribution": _thm_distribution,
    "octagon": _thm_octagon,
    "broadhurst": _thm_broadhurst,
}


def cmd_verify_theorems(args) -> int:
    _check_cap("verify-theorems", args.max_degree, args.force)
    names = [args.theorem] if args.theorem else list(THEOREMS)
    if any(n not in THEOREMS for n in names):
        sys.stderr.write(f"error: unknown theorem {args.theorem!r}; "
                         f"choices: {', '.join(THEOREMS)}\n")
        sys.exit(1)
    results = []
    for name in names:
        fn = THEOREMS[name]
        if name == "distribution" and args.N:
            results.extend(fn(args.max_degree, Ns=(args.N,)))
        else:
            results.extend(fn(args.max_degree))
    ok = all(r["holds"] for r in results)
    report = {"config": _config(args, "verify-theorems"), "version": __version__,
              "all_hold": ok, "results": results}

    def render(rep):
        rows = [{**r, "status": "green" if r["holds"] else "RED"}
                for r in rep["results"]]
        tail = ["all theorems hold" if rep["all_hold"] else "THEOREM VIOLATED"]
        return _table(rows, ["theorem", "N", "degree", "dim", "status"]) + tail

    _emit(report, args.out, render)
    return 0 if ok else 2


def build_parser() -> _Parser:
    parser = _Parser(prog="cyclogt", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--N", type=int, default=None)
        p.add_argument("--max-degree", type=int, default=4)
        p.add_argument("--out", default=None)
        p.add_argument("--force", action="store_true")

    p_dims = sub.add_parser("dims", help="graded dimension tables")
    common(p_dims)
    p_dims.add_argument("--system", required=True)
    p_dims.add_argument("--rank", type=int, default=None,
                        help="generator count for --system free")
    p_dims.add_argument("--prime-probe", type=int, default=None)
    p_dims.add_argument("--exact-only", action="store_true")
    p_dims.set_defaults(fn=cmd_dims)

    p_check = sub.add_parser("check", help="run the relation suite on a pair")
    common(p_check)
    p_check.add_argument("--input", required=True)
    p_check.add_argument("--mode", choices=("lie", "group"), default=None)
    p_check.set_defaults(fn=cmd_check)

    p_ver = sub.add_parser("verify-theorems", help="run the shipped theorem checks")
    common(p_ver)
    p_ver.add_argument("--theorem", default=None)
    p_ver.set_defaults(fn=cmd_verify_theorems)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "N", None) is None:
        args.N = 1 if args.command == "dims" else args.N
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
