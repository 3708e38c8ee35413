"""Command-line driver: ``covres <command> ...``.

Exit codes: 0 success or pass, 1 verification failure, 2 usage error.
JSON output carries ``schema_version``; tables and CSV are for humans.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time

from . import cache
from .partitions import EMPTY, Partition, parse_partition

SCHEMA_VERSION = 1

log = logging.getLogger("covres")


class UsageError(ValueError):
    pass


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r} ({exc})") from None


def _fmt_part(p) -> str:
    return "(" + ",".join(map(str, p)) + ")" if p else "∅"


# --- output ------------------------------------------------------------------------------


def _table(rows: list[dict], columns: list[str]) -> str:
    cells = [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    line = "  ".join(c.ljust(w) for c, w in zip(columns, widths))
    out = [line, "  ".join("-" * w for w in widths)]
    out += ["  ".join(x.ljust(w) for x, w in zip(row, widths)) for row in cells]
    return "\n".join(s.rstrip() for s in out)


def emit(args, payload: dict, rows: list[dict], columns: list[str], title: str | None = None):
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, **payload}
        print(json.dumps(doc, indent=2, sort_keys=False))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow(r)
        print(buf.getvalue(), end="")
    else:
        if title:
            print(title)
        print(_table(rows, columns))


# --- parse-time validation ---------------------------------------------------------------


def _check_r(flavor: str, r: int):
    if r < 1:
        raise UsageError(f"r must be positive, got {r}")
    if flavor == "skew" and r % 2:
        raise UsageError(f"the skew flavor needs r even, got r={r}")


def _check_n(n: int, r: int):
    if n <= r:
        raise UsageError(f"need n > r, got n={n}, r={r}")


# --- commands ----------------------------------------------------------------------------


def cmd_shape(args) -> int:
    from .euler import shape_for

    _check_r(args.flavor, args.r)
    shape = shape_for(args.chi, args.r, args.flavor, args.source) if args.tmax is None else None
    if shape is None:
        from .shapes import resolution_shape

        if args.source != "resolution":
            raise UsageError("--tmax applies to the resolution source only")
        shape = resolution_shape(args.chi, args.r, args.flavor, args.tmax)
    rows = [{"t": t, "lambda": _fmt_part(lam), "size": lam.size} for t, lam in shape.summands()]
    emit(args, shape.to_json(), rows, ["t", "lambda", "size"], f"chi={_fmt_part(args.chi)} r={args.r} flavor={args.flavor}")
    return 0


def cmd_tilting(args) -> int:
    from .shapes import tilting_summands

    _check_r(args.flavor, args.r)
    _check_n(args.n, args.r)
    out = tilting_summands(args.n, args.r, args.flavor, args.variant)
    payload = {"n": args.n, "r": args.r, "flavor": args.flavor, "variant": args.variant, "summands": [p.to_json() for p in out]}
    emit(args, payload, [{"chi": _fmt_part(p)} for p in out], ["chi"])
    return 0


def cmd_char(args) -> int:
    from .characters import char_so, char_sp, o_dimension, sp_dimension, sym_algebra_slice, wedge_of_wedge2_character

    if args.kind in ("sp", "so"):
        if args.kind == "sp":
            ch, dim = char_sp(args.mu, args.m), sp_dimension(args.mu, args.m)
            payload = {"group": "sp", "mu": args.mu.to_json(), "m": args.m}
        else:
            ch, dim = char_so(args.mu, args.r), o_dimension(args.mu, args.r)
            payload = {"group": "so", "mu": args.mu.to_json(), "r": args.r}
        terms = sorted(ch.terms.items(), reverse=True)
        payload["terms"] = [{"exponent": list(e), "coeff": c} for e, c in terms]
        rows = [{"exponent": " ".join(map(str, e)), "coeff": c} for e, c in terms]
        if args.eval_dim:
            payload["dimension"] = dim
            if ch.evaluate_at_one() != dim and args.kind == "sp":
                raise AssertionError("character dimension disagrees with the Weyl dimension formula")
            rows = [{"exponent": "dimension", "coeff": dim}] + (rows if args.terms else [])
        emit(args, payload, rows, ["exponent", "coeff"])
        return 0
    if args.kind == "wedge":
        exp = wedge_of_wedge2_character(args.k, args.n)
        payload = {"k": args.k, "n": args.n, "expansion": exp.to_json()}
    else:
        exp = sym_algebra_slice(args.gen, args.d, args.n)
        payload = {"gen": args.gen, "d": args.d, "n": args.n, "expansion": exp.to_json()}
    rows = [{"partition": _fmt_part(p), "mult": c} for p, c in exp.sorted_items()]
    emit(args, payload, rows, ["partition", "mult"])
    return 0


def cmd_branch(args) -> int:
    from .branching import restrict

    _check_r(args.flavor, args.r)
    table = restrict(args.lam, args.r, args.flavor, args.method)
    rows = [{"mu": _fmt_part(p), "m": c} for p, c in table.mults.sorted_items()]
    emit(args, table.to_json(), rows, ["mu", "m"], f"lambda={_fmt_part(args.lam)} r={args.r} method={table.method}")
    return 0


def _report_rows(report):
    rows = []
    for d in report.degrees:
        row = {"degree": d.degree, "status": "pass" if d.passed else "fail", "detail": d.detail}
        if d.lhs is not None:
            row["lhs"] = repr(d.lhs)
            row["rhs"] = repr(d.rhs)
        rows.append(row)
    return rows


def _emit_report(args, report, columns):
    payload = report.to_json(timing=args.timing)
    title = f"{report.kind}: {'PASS' if report.passed else 'FAIL'}"
    if args.timing:
        title += f" ({report.elapsed:.2f}s)"
    emit(args, payload, _report_rows(report), columns, title)
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    _check_r(args.flavor, args.r)
    if args.what == "euler":
        from .euler import verify_euler

        report = verify_euler(args.chi, args.r, args.flavor, args.degree, args.source, args.jobs)
        return _emit_report(args, report, ["degree", "status", "lhs", "rhs"])
    from .oracle import cross_check

    report = cross_check(args.chi, args.r, args.degree, args.flavor)
    return _emit_report(args, report, ["degree", "status", "detail"])


def cmd_oracle(args) -> int:
    from .oracle import invariant_dimension

    _check_r(args.flavor, args.r)
    dims = [invariant_dimension(args.chi, args.r, d, args.flavor) for d in range(args.degree + 1)]
    payload = {"chi": args.chi.to_json(), "r": args.r, "flavor": args.flavor, "dims": dims}
    emit(args, payload, [{"degree": d, "dim": x} for d, x in enumerate(dims)], ["degree", "dim"])
    return 0


def cmd_pieri(args) -> int:
    from . import pieri

    if args.what == "nonvanishing":
        if args.alpha is None or args.beta is None:
            raise UsageError("pieri nonvanishing needs --alpha and --beta")
        ok = pieri.verify_nonvanishing(args.alpha, args.beta, args.dim)
        payload = {"alpha": args.alpha.to_json(), "beta": args.beta.to_json(), "dim": args.dim, "nonzero": ok}
        emit(args, payload, [{"alpha": _fmt_part(args.alpha), "beta": _fmt_part(args.beta), "nonzero": ok}], ["alpha", "beta", "nonzero"])
        return 0 if ok else 1
    if args.what == "sweep":
        rows, ok = [], True
        for alpha, beta, n in pieri.nonvanishing_pairs(args.max_size, args.dim):
            res = pieri.verify_nonvanishing(alpha, beta, n)
            ok &= res
            rows.append({"alpha": _fmt_part(alpha), "beta": _fmt_part(beta), "dim": n, "nonzero": res})
        payload = {"max_size": args.max_size, "max_dim": args.dim, "status": "pass" if ok else "fail", "pairs": rows}
        emit(args, payload, rows, ["alpha", "beta", "dim", "nonzero"])
        return 0 if ok else 1
    _check_r("skew", args.r)
    system = pieri.solve_pieri_system(args.chi, args.r, args.seed)
    payload = system.to_json()
    payload["complex"] = pieri.verify_system(system)
    status = payload["complex"]
    rows = [{"pi": _fmt_part(e["pi"]), "tau": _fmt_part(e["tau"]), "scalar": e["scalar"]} for e in payload["edges"]]
    if args.verify_homology:
        report = pieri.verify_complex_homology(args.chi, args.r, args.degree, system)
        payload["homology"] = report.to_json(timing=args.timing)
        status = status and report.passed
        rows += [{"pi": f"degree {d.degree}", "tau": "pass" if d.passed else "fail", "scalar": d.detail} for d in report.degrees]
    emit(args, payload, rows, ["pi", "tau", "scalar"])
    return 0 if status else 1


def selftest_checks():
    """(name, thunk) pairs; each thunk returns True on success."""
    from . import pieri
    from .branching import stable_tables_agree
    from .characters import wedge_of_wedge2_character
    from .euler import verify_euler
    from .oracle import cross_check
    from .partitions import conjugate, enumerate_q_minus1, from_frobenius, partitions_of, to_frobenius
    from .shapes import closed_form_shape, resolution_shape

    return [
        ("partitions: conjugate involution", lambda: all(conjugate(conjugate(p)) == p for n in range(9) for p in partitions_of(n))),
        ("partitions: Frobenius round trip", lambda: all(from_frobenius(to_frobenius(p)) == p for n in range(1, 9) for p in partitions_of(n))),
        ("shapes: chi=(2,1), r=4", lambda: resolution_shape((2, 1), 4).terms == {0: [Partition((2, 1))], 1: [Partition((2, 1, 1, 1))]}),
        ("shapes: closed form agrees (r=6)", lambda: closed_form_shape((2, 2, 2), 6).terms == resolution_shape((2, 2, 2), 6).terms),
        ("characters: wedge2 decomposition k<=4", lambda: all(
            set(wedge_of_wedge2_character(k, 6)) == set(enumerate_q_minus1(2 * k, 6))
            and set(wedge_of_wedge2_character(k, 6).values()) <= {1}
            for k in range(5)
        )),
        ("branching: stable equals peel", lambda: all(stable_tables_agree(lam, 4, "skew") for n in range(5) for lam in partitions_of(n, 2))),
        ("euler: skew r=4 chi=(1,1) D=8", lambda: verify_euler((1, 1), 4, "skew", 8).passed),
        ("euler: symmetric r=3 chi=(1) D=6", lambda: verify_euler((1,), 3, "symmetric", 6).passed),
        ("oracle: skew r=4 chi=(1) d<=2", lambda: cross_check((1,), 4, 2, "skew").passed),
        ("pieri: non-vanishing sweep |alpha|<=6", lambda: all(pieri.verify_nonvanishing(a, b, n) for a, b, n in pieri.nonvanishing_pairs(6, 5))),
        ("pieri: homology chi=(1,1) r=4 D=4", lambda: pieri.verify_complex_homology((1, 1), 4, 4).passed),
    ]


def cmd_selftest(args) -> int:
    rows, ok = [], True
    for name, check in selftest_checks():
        start = time.perf_counter()
        try:
            res = bool(check())
            err = ""
        except Exception as exc:  # reported, not raised: selftest summarises
            res, err = False, f"{type(exc).__name__}: {exc}"
        ok &= res
        row = {"check": name, "status": "pass" if res else "fail", "detail": err}
        if args.timing:
            row["seconds"] = f"{time.perf_counter() - start:.2f}"
        rows.append(row)
    cols = ["check", "status", "detail"] + (["seconds"] if args.timing else [])
    emit(args, {"status": "pass" if ok else "fail", "checks": rows}, rows, cols)
    return 0 if ok else 1


# --- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")
    common.add_argument("--cache-dir", help=f"cache location (default: ${cache.ENV_VAR} or the user cache dir)")
    common.add_argument("--no-cache", action="store_true", help="disable the on-disk cache")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for degree-parallel work")
    common.add_argument("--timing", action="store_true", help="include elapsed times (breaks byte-determinism)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="covres", description="Resolutions of modules of covariants, with exact cross-checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def flavored(sp):
        sp.add_argument("--flavor", choices=["skew", "symmetric"], default="skew")
        sp.add_argument("--r", type=int, required=True)

    s = sub.add_parser("shape", parents=[common], help="resolution shape of M_Q(chi)")
    flavored(s)
    s.add_argument("--chi", type=_partition, default=EMPTY)
    s.add_argument("--tmax", type=int)
    s.add_argument("--source", choices=["resolution", "closed"], default="resolution")
    s.set_defaults(func=cmd_shape)

    s = sub.add_parser("tilting", parents=[common], help="summand index sets of the tilting bundle")
    flavored(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--variant", choices=["main", "big"], default="main")
    s.set_defaults(func=cmd_tilting)

    s = sub.add_parser("char", parents=[common], help="characters and plethysm slices")
    s.add_argument("kind", choices=["sp", "so", "wedge", "sym"])
    s.add_argument("--mu", type=_partition, default=EMPTY)
    s.add_argument("--m", type=int, help="rank of Sp(2m)")
    s.add_argument("--r", type=int, help="dimension for SO(r)")
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--d", type=int, default=1)
    s.add_argument("--n", type=int, default=4, help="number of GL variables")
    s.add_argument("--gen", choices=["wedge2", "sym2"], default="wedge2")
    s.add_argument("--eval-dim", action="store_true", help="report the dimension")
    s.add_argument("--terms", action="store_true", help="with --eval-dim, also list the terms")
    s.set_defaults(func=cmd_char)

    s = sub.add_parser("branch", parents=[common], help="GL -> Sp / O restriction")
    flavored(s)
    s.add_argument("--lambda", dest="lam", type=_partition, required=True)
    s.add_argument("--method", choices=["auto", "stable", "peel"], default="auto")
    s.set_defaults(func=cmd_branch)

    s = sub.add_parser("verify", parents=[common], help="Euler characteristic or oracle verification")
    s.add_argument("what", choices=["euler", "oracle"])
    flavored(s)
    s.add_argument("--chi", type=_partition, default=EMPTY)
    s.add_argument("--degree", type=int, default=8)
    s.add_argument("--source", choices=["resolution", "closed"], default="resolution")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", parents=[common], help="brute-force invariant dimensions")
    s.add_argument("what", choices=["invdim"])
    flavored(s)
    s.add_argument("--chi", type=_partition, default=EMPTY)
    s.add_argument("--degree", type=int, default=3)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("pieri", parents=[common], help="Pieri systems and the non-vanishing check")
    s.add_argument("what", choices=["solve", "nonvanishing", "sweep"])
    s.add_argument("--r", type=int, default=4)
    s.add_argument("--chi", type=_partition, default=EMPTY)
    s.add_argument("--seed", type=int, help="random rescaling and spanning tree, for independent solves")
    s.add_argument("--verify-homology", action="store_true")
    s.add_argument("--degree", type=int, default=6)
    s.add_argument("--alpha", type=_partition)
    s.add_argument("--beta", type=_partition)
    s.add_argument("--dim", type=int, default=6, help="dimension of R for nonvanishing / sweep")
    s.add_argument("--max-size", type=int, default=8)
    s.set_defaults(func=cmd_pieri)

    s = sub.add_parser("selftest", parents=[common], help="quick invariant suite over all modules")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    cache.configure(args.cache_dir, enabled=not args.no_cache)
    if args.command == "char":
        if args.kind == "sp" and args.m is None:
            parser.error("char sp needs --m")
        if args.kind == "so" and args.r is None:
            parser.error("char so needs --r")
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"covres: error: {exc}", file=sys.stderr)
        return 2
    finally:
        store = cache.active()
        if store is not None:
            log.info("cache %s: %d hits, %d misses", store.root, store.hits, store.misses)


if __name__ == "__main__":
    sys.exit(main())
