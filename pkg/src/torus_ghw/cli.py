"""Command-line interface: ``torus-ghw <command> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

import numpy as np

from . import formulas as fm
from .errors import BadParams, FormulaUnavailable, GHWError, Infeasible
from .evalcode import build_code, hilbert_profile
from .field import factorize, field_make
from .geometry import (PointSet, bipartite_exponents, bipartite_points, load_points, load_toric,
                       toric_points, torus_points)
from .linalg import rank
from .ghw import (DEFAULT_CONFIG, NOT_COMPUTED, OracleConfig, WeightHierarchy, duality_complete,
                  ghw_exact, hierarchy_exact, is_r_mds)
from .poly import construct_zero_maximizers, format_poly, zero_set

SCHEMA = 1
EXIT_DISAGREE = 1
EXIT_ERROR = 3
METHODS = ("oracle", "formula", "duality")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


# -- point sets and configuration ------------------------------------------------------


def _add_point_options(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--torus", nargs=2, type=int, metavar=("Q", "S"),
                   help="projective torus in P^{S-1} over GF(Q)")
    g.add_argument("--toric", metavar="FILE", help="toric set from an exponent-matrix file")
    g.add_argument("--bipartite", nargs=3, type=int, metavar=("Q", "M", "N"),
                   help="toric set of the edges of K_{M,N} over GF(Q)")
    g.add_argument("--points", metavar="FILE", help="explicit projective points")


def _add_cap_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-n-exhaustive", type=int, default=None,
                   help="largest code length for the exact oracle (default 24, or $TORUS_GHW_MAX_N)")
    p.add_argument("--max-codewords", type=int, default=None,
                   help="largest codeword count for full enumeration (default 10^7)")
    p.add_argument("--max-work", type=int, default=None,
                   help="node budget of a single exact search")


def _config(args) -> OracleConfig:
    cfg = DEFAULT_CONFIG
    return OracleConfig(
        max_n_exhaustive=args.max_n_exhaustive if args.max_n_exhaustive is not None else cfg.max_n_exhaustive,
        max_codewords=args.max_codewords if args.max_codewords is not None else cfg.max_codewords,
        max_work=args.max_work if args.max_work is not None else cfg.max_work,
    )


def _point_set(args) -> PointSet:
    if args.torus:
        q, s = args.torus
        return torus_points(field_make(q), s)
    if args.bipartite:
        q, m, n = args.bipartite
        return bipartite_points(field_make(q), m, n)
    if args.toric:
        return load_toric(args.toric)
    return load_points(args.points)


def _degrees(values: Sequence[int]) -> list[int]:
    for d in values:
        if d < 0:
            raise BadParams(f"degrees must be non-negative, got {d}")
    return sorted(set(values))


# -- hierarchies by method --------------------------------------------------------------


def _formula_hierarchy(X: PointSet, d: int, k: int, a_inv: int) -> WeightHierarchy:
    fm.require_torus(X.kind)
    return fm.torus_formula_hierarchy(X.field.q, X.s, d, k, a_inv)


def _duality_hierarchy(X: PointSet, d: int, a_inv: int, config: OracleConfig) -> WeightHierarchy:
    # on a torus the dual of C(d) is C(a - d) up to coordinate scaling
    if X.kind != "torus":
        raise FormulaUnavailable(f"the duality method needs a complete intersection, not a {X.kind} set")
    n = len(X)
    if d > a_inv:
        return WeightHierarchy.uniform(n, range(1, n + 1), "duality")
    H = hierarchy_exact(build_code(X, a_inv - d), config)
    return duality_complete(H, n)


def _agreement(a: WeightHierarchy | None, b: WeightHierarchy | None) -> str:
    if a is None or b is None:
        return NOT_COMPUTED
    pairs = [(x, y) for x, y in zip(a.weights, b.weights) if x is not None and y is not None]
    if len(a.weights) != len(b.weights) or any(x != y for x, y in pairs):
        return "disagree"
    return "agree" if pairs else NOT_COMPUTED


def _merge(k: int, n: int, results: dict) -> WeightHierarchy:
    weights, tags = [None] * k, [NOT_COMPUTED] * k
    for name in ("oracle", "duality", "formula"):
        H = results.get(name)
        if H is None:
            continue
        for i, (w, t) in enumerate(zip(H.weights, H.methods)):
            if weights[i] is None and w is not None:
                weights[i], tags[i] = w, t
    return WeightHierarchy(n, k, tuple(weights), tuple(tags))


def _record(X: PointSet, d: int, method: str, config: OracleConfig, a_inv: int) -> dict:
    C = build_code(X, d)
    n, k = C.n, C.k
    wanted = METHODS if method == "all" else (method,)
    results, errors = {}, {}
    for name in wanted:
        try:
            if name == "oracle":
                results[name] = hierarchy_exact(C, config)
            elif name == "formula":
                results[name] = _formula_hierarchy(X, d, k, a_inv)
            else:
                results[name] = _duality_hierarchy(X, d, a_inv, config)
        except (Infeasible, FormulaUnavailable) as exc:
            if method != "all":
                raise
            errors[name] = {"kind": exc.kind, "message": str(exc)}
    merged = _merge(k, n, results)
    rec = {"d": d, "n": n, "k": k, "reg": a_inv + 1, "a_inv": a_inv,
           "weights": list(merged.weights), "methods": list(merged.methods)}
    if method == "all":
        rec["by_method"] = {name: (results[name].to_dict() if name in results else None)
                            for name in METHODS}
        rec["agreement"] = {
            "formula_vs_oracle": _agreement(results.get("formula"), results.get("oracle")),
            "duality_vs_oracle": _agreement(results.get("duality"), results.get("oracle")),
            "formula_vs_duality": _agreement(results.get("formula"), results.get("duality")),
        }
        if errors:
            rec["unavailable"] = errors
    rec["violations"] = merged.violations()
    return rec


def _fatal(rec: dict) -> bool:
    return bool(rec["violations"]) or "disagree" in rec.get("agreement", {}).values()


def _a_inv(X: PointSet) -> int:
    return hilbert_profile(X).a_inv


def cmd_hierarchy(args) -> int:
    X = _point_set(args)
    config = _config(args)
    a_inv = _a_inv(X)
    records = [_record(X, d, args.method, config, a_inv) for d in _degrees(args.d)]
    report = {"schema": SCHEMA, "command": "hierarchy", "points": X.describe(),
              "method": args.method, "records": records}
    print(_dump(report))
    return EXIT_DISAGREE if any(_fatal(r) for r in records) else 0


def cmd_table(args) -> int:
    if args.dmax < 1:
        return _usage_error("table", "--dmax must be at least 1")
    X = _point_set(args)
    config = _config(args)
    a_inv = _a_inv(X)
    records = [_record(X, d, args.method, config, a_inv) for d in range(1, args.dmax + 1)]
    n = len(X)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d"] + [f"d{r}" for r in range(1, n + 1)])
        for rec in records:
            cells = ["" if x is None else x for x in rec["weights"]]
            w.writerow([rec["d"]] + cells + [""] * (n - len(cells)))
        sys.stdout.write(buf.getvalue())
    else:
        print(_dump({"schema": SCHEMA, "command": "table", "points": X.describe(),
                     "method": args.method, "dmax": args.dmax, "records": records}))
    bad = [rec["d"] for rec in records if _fatal(rec)]
    if bad:
        print(_dump({"schema": SCHEMA, "error": {"kind": "disagreement", "degrees": bad}}), file=sys.stderr)
        return EXIT_DISAGREE
    return 0


def zeros_report(q: int, s: int, d: int) -> dict:
    F = field_make(q)
    X = torus_points(F, s)
    f, g = construct_zero_maximizers(F, s, d)
    zf, zg = zero_set(f, X), zero_set(g, X)
    vf, vg = f.evaluate_all(X), g.evaluate_all(X)
    independent = rank(np.vstack([f.coefficient_vector(), g.coefficient_vector()]), F) == 2
    nonvanishing = bool(np.any(vf != 0) and np.any(vg != 0))
    count = len(zf & zg)
    expected = fm.z2(q, s, d)
    return {"schema": SCHEMA, "command": "zeros", "q": q, "s": s, "d": d, "n": len(X),
            "F": format_poly(f), "G": format_poly(g), "count": count, "z2": expected,
            "independent": independent, "nonvanishing": nonvanishing,
            "agreement": "agree" if count == expected and independent and nonvanishing else "disagree"}


def cmd_zeros(args) -> int:
    if not args.torus:
        raise BadParams("zeros needs --torus Q S")
    q, s = args.torus
    rep = zeros_report(q, s, args.d)
    print(_dump(rep))
    return 0 if rep["agreement"] == "agree" else EXIT_DISAGREE


def cmd_hilbert(args) -> int:
    X = _point_set(args)
    prof = hilbert_profile(X)
    out = {"schema": SCHEMA, "command": "hilbert", "points": X.describe(), **prof.to_dict()}
    if args.d:
        out["at"] = {str(d): prof[d] for d in _degrees(args.d)}
    print(_dump(out))
    return 0


def cmd_code_export(args) -> int:
    X = _point_set(args)
    C = build_code(X, args.d)
    if args.format == "text":
        sys.stdout.write(C.to_text())
    else:
        print(_dump({"schema": SCHEMA, "command": "code export", "points": X.describe(),
                     "d": args.d, **C.to_dict()}))
    return 0


# -- verify ---------------------------------------------------------------------------


def _prime_powers(lo: int, hi: int) -> list[int]:
    return [q for q in range(lo, hi + 1) if len(factorize(q)) == 1]


class _Suite:
    def __init__(self, name: str):
        self.name, self.checks, self.skipped, self.failures = name, 0, 0, []

    def check(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def line(self) -> str:
        status = "PASS" if not self.failures else "FAIL"
        return f"{status} {self.name}: {self.checks} checks, {len(self.failures)} failures, {self.skipped} skipped"


def _toric_grid(qmax: int, smax: int) -> list[PointSet]:
    """Tori plus a few other toric sets, all over prime powers ``3 <= q <= qmax``."""
    out = []
    for q in _prime_powers(3, qmax):
        F = field_make(q)
        for s in range(2, smax + 1):
            out.append(torus_points(F, s))
            if s >= 3 and q > 3:
                # degenerate torus: X1 = 1 and the last coordinate raised to the
                # smallest prime dividing q - 1, a proper subgroup of the torus
                e = min(factorize(q - 1))
                A = np.vstack([np.zeros((1, s - 1), dtype=np.int64), np.eye(s - 1, dtype=np.int64)])
                A[-1, -1] = e
                out.append(toric_points(F, A))
        for m, n in ((2, 2), (2, 3)):
            if m * n <= smax:
                out.append(toric_points(F, bipartite_exponents(m, n)))
    return out


def _label(X: PointSet, d: int | None = None) -> str:
    desc = X.describe()
    core = f"{desc['kind']} q={desc['q']} s={desc['s']} n={desc['n']}"
    if desc["kind"] == "toric":
        core += f" exponents={desc['exponents']}"
    return core if d is None else f"{core} d={d}"


def run_verify(qmax: int, smax: int, config: OracleConfig, out=None) -> int:
    out = out or sys.stdout
    fq, fs = max(qmax, 9), max(smax, 6)
    suites = {name: _Suite(name) for name in (
        "formula-vs-oracle", "zero-bounds", "duality", "monotonicity", "singleton",
        "hilbert-sum", "unified-d2", "zeros")}
    hierarchies: dict = {}

    def hier(X, d):
        key = (id(X), d)
        if key not in hierarchies:
            hierarchies[key] = hierarchy_exact(build_code(X, d), config)
        return hierarchies[key]

    # formula-only suites over the wider grid
    S = suites["zero-bounds"]
    for q in _prime_powers(3, fq):
        for s in range(3, fs + 1):
            top = (q - 2) * (s - 1)
            Z1 = {d: fm.z1(q, s, d) for d in range(1, top + 1)}
            Z2 = {d: fm.z2(q, s, d) for d in range(1, top + 1)}
            for d in range(1, top + 1):
                for dp in range(1, d):
                    t = f"q={q} s={s} d'={dp} d={d}"
                    S.check(Z1[dp] <= Z1[d], f"Z1 monotone {t}")
                    S.check(Z2[dp] <= Z2[d], f"Z2 monotone {t}")
                    S.check(Z2[dp] <= Z1[dp] <= Z2[d] <= Z1[d], f"Z chain {t}")
                if s < fs:
                    S.check((q - 1) * Z1[d] == fm.z1(q, s + 1, d), f"Z1 scaling q={q} s={s} d={d}")
                    S.check((q - 1) * Z2[d] <= fm.z2(q, s + 1, d), f"Z2 scaling q={q} s={s} d={d}")
    S = suites["unified-d2"]
    for q in _prime_powers(3, fq):
        for s in range(2, fs + 1):
            for d in range(1, (q - 2) * (s - 1) + 3):
                S.check(fm.d2_branches(q, s, d) == fm.d2_unified(q, s, d), f"q={q} s={s} d={d}")

    # code-level suites over the requested grid
    for X in _toric_grid(qmax, smax):
        q, s, n = X.field.q, X.s, len(X)
        prof = hilbert_profile(X)
        a = prof.a_inv
        if X.kind == "torus":
            S = suites["hilbert-sum"]
            for d in range(0, a + 1):
                S.check(prof[d] + prof[a - d] == n, f"{_label(X, d)}")
            if s >= 3 and n <= 10**5:
                S = suites["zeros"]
                for d in range(1, (q - 2) * (s - 1) + 1):
                    rep = zeros_report(q, s, d)
                    S.check(rep["agreement"] == "agree", f"{_label(X, d)} count={rep['count']} z2={rep['z2']}")
        if n > config.max_n_exhaustive:
            for name in ("formula-vs-oracle", "duality", "monotonicity", "singleton"):
                suites[name].skipped += 1
            continue
        try:
            if X.kind == "torus":
                S = suites["formula-vs-oracle"]
                for d in range(1, a + 2):
                    C = build_code(X, d)
                    S.check(fm.d1_torus(q, s, d) == ghw_exact(C, 1, config), f"d1 {_label(X, d)}")
                    if C.k >= 2:
                        S.check(fm.d2_torus(q, s, d) == ghw_exact(C, 2, config), f"d2 {_label(X, d)}")
                S = suites["duality"]
                for d in range(0, a + 1):
                    H = hier(X, d)
                    D = duality_complete(hier(X, a - d), n) if a - d >= 0 else None
                    S.check(D is not None and D.weights == H.weights, f"{_label(X, d)}")
                    S.check(duality_complete(duality_complete(H, n), n).weights == H.weights,
                            f"round trip {_label(X, d)}")
            S = suites["monotonicity"]
            for d in range(1, a + 1):
                H0, H1 = hier(X, d), hier(X, d + 1)
                for r in range(1, H0.k + 1):
                    w0, w1 = H0[r], H1[r]
                    ok = w1 <= w0 and (w1 == w0 if w0 == r else w1 < w0)
                    S.check(ok, f"{_label(X, d)} r={r} d_r={w0} next={w1}")
            S = suites["singleton"]
            for d in range(1, a + 2):
                H = hier(X, d)
                C = build_code(X, d)
                S.check(not H.violations(), f"{_label(X, d)} {H.violations()}")
                mds = [is_r_mds(C, r, H[r]) for r in range(1, H.k + 1)]
                first = next((i for i, m in enumerate(mds) if m), None)
                S.check(first is None or all(mds[first:]), f"MDS persistence {_label(X, d)}")
        except Infeasible:
            for name in ("formula-vs-oracle", "duality", "monotonicity", "singleton"):
                suites[name].skipped += 1

    failed = False
    for S in suites.values():
        print(S.line(), file=out)
        for what in S.failures[:20]:
            print(f"  failing tuple: {what}", file=out)
        failed |= bool(S.failures)
    return EXIT_DISAGREE if failed else 0


def cmd_verify(args) -> int:
    qmax, smax = args.grid
    if qmax < 3 or smax < 2:
        raise BadParams("--grid needs qmax >= 3 and smax >= 2")
    return run_verify(qmax, smax, _config(args))


# -- entry point -------------------------------------------------------------------------


def _usage_error(cmd: str, message: str) -> int:
    print(_dump({"schema": SCHEMA, "error": {"kind": "usage", "command": cmd, "message": message}}),
          file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torus-ghw",
                                     description="Generalized Hamming weights of evaluation codes on toric sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hierarchy", help="weight hierarchy of C_X(d)")
    _add_point_options(p)
    p.add_argument("--d", type=int, nargs="+", required=True, help="degree(s)")
    p.add_argument("--method", choices=METHODS + ("all",), default="oracle")
    _add_cap_options(p)
    p.set_defaults(func=cmd_hierarchy)

    p = sub.add_parser("table", help="hierarchies for d = 1..dmax")
    _add_point_options(p)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--method", choices=METHODS + ("all",), default="oracle")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_cap_options(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("zeros", help="two forms with the most common zeros on the torus")
    _add_point_options(p)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("verify", help="run the consistency suites over a parameter grid")
    p.add_argument("--grid", nargs=2, type=int, required=True, metavar=("QMAX", "SMAX"))
    _add_cap_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hilbert", help="Hilbert function, regularity index and a-invariant")
    _add_point_options(p)
    p.add_argument("--d", type=int, nargs="*", default=[], help="also report these degrees")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("code", help="code utilities")
    code_sub = p.add_subparsers(dest="code_command", required=True)
    e = code_sub.add_parser("export", help="generator matrix of C_X(d)")
    _add_point_options(e)
    e.add_argument("--d", type=int, required=True)
    e.add_argument("--format", choices=("json", "text"), default="json")
    e.set_defaults(func=cmd_code_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GHWError as exc:
        print(_dump({"schema": SCHEMA, "error": {"kind": exc.kind, "message": str(exc)}}), file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(_dump({"schema": SCHEMA, "error": {"kind": "io", "message": str(exc)}}), file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
