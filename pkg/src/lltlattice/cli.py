"""Command-line surface: compute, verify, stats.

Exit codes: 0 success, 1 some verification failed, 2 bad parameters or parse
error, 3 cross-engine mismatch.  All randomness flows from --seed (default 1),
so identical invocations produce byte-identical output.  LLTLATTICE_WORKERS
(or --workers) sets the worker-pool size for independent verification cases;
results are emitted in deterministic order regardless of completion order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import identities
from .algebra import LaurentPoly
from .shapes import (
    SkewShapeTuple,
    bandwidth,
    column_range,
    d_stat,
    dtilde_stat,
    inv_stat,
    m_bruteforce,
    m_formula,
    n_stat,
    parse_shape_text,
)
from .tableaux import EngineMismatch, llt
from .yangbaxter import lstar_ybe_check, ybe_check

QUICK_SHAPES = [
    ("3;2", "0;0"),
    ("3,3;3,1", "2,1;1,0"),
    ("1;1", "0;0"),
    ("2,1", "0,0"),
]


def format_grouped(p: LaurentPoly) -> str:
    """Render with the t-degree outermost, monomials in canonical order."""
    if p.is_zero():
        return "0"
    ti = p.vars.t_index
    groups: dict[int, dict] = {}
    for e, c in p.terms.items():
        inner = e[:ti] + e[ti + 1:] + (0,)
        groups.setdefault(e[ti], {})[inner] = c
    names = p.vars.names()
    names = names[:ti] + names[ti + 1:] + ["t"]
    chunks = []
    for texp in sorted(groups):
        inner_terms = sorted(groups[texp].items(), reverse=True)
        monos = []
        for e, c in inner_terms:
            factors = [
                name if pw == 1 else f"{name}^{pw}"
                for name, pw in zip(names, e)
                if pw
            ]
            body = "*".join(factors) if factors else "1"
            monos.append(body if c == 1 else f"{c}*{body}" if c != -1 else f"-{body}")
        inner = " + ".join(monos).replace("+ -", "- ")
        if texp == 0:
            chunks.append(f"({inner})")
        elif texp == 1:
            chunks.append(f"t*({inner})")
        else:
            chunks.append(f"t^{texp}*({inner})")
    return " + ".join(chunks)


def _parse_shape(args) -> SkewShapeTuple:
    beta = parse_shape_text(args.beta)
    if args.gamma:
        gamma = parse_shape_text(args.gamma)
    else:
        gamma = tuple((0,) * len(b) for b in beta)
    return SkewShapeTuple(beta, gamma)


def cmd_compute(args) -> int:
    try:
        shape = _parse_shape(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        poly = llt(shape, args.n, engine=args.engine)
    except EngineMismatch as exc:
        print("engine mismatch:", file=sys.stderr)
        print(f"  tableaux: {exc.tableaux_value.serialize()}", file=sys.stderr)
        print(f"  lattice:  {exc.lattice_value.serialize()}", file=sys.stderr)
        return 3
    if args.format == "json":
        print(poly.serialize())
    else:
        print(format_grouped(poly))
    return 0


def cmd_stats(args) -> int:
    try:
        shape = _parse_shape(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    r, s = column_range(shape)
    out = {
        "shape": shape.text(),
        "r": r,
        "s": s,
        "band": bandwidth(shape),
        "m": m_bruteforce(shape),
    }
    if shape.is_straight():
        out["m_formula"] = m_formula(shape.beta)
        if all(len(p) == 1 for p in shape.beta):
            comp = tuple(p[0] for p in shape.beta)
            out["inv"] = inv_stat(comp)
            out["n_mu"] = n_stat(tuple(sorted(comp, reverse=True)))
        lengths = {len(p) for p in shape.beta}
        if len(lengths) == 1:
            out["d"] = d_stat(shape.beta)
            if args.M is not None:
                try:
                    out["dtilde"] = dtilde_stat(shape.beta, args.M)
                except ValueError as exc:
                    print(f"error: {exc}", file=sys.stderr)
                    return 2
    print(json.dumps(out, sort_keys=True))
    return 0


# -- verify ------------------------------------------------------------------


def _verify_case(task):
    """Top-level dispatcher so cases stay picklable for the worker pool."""
    name, kwargs = task
    fn = {
        "ybe": ybe_check,
        "lstar-ybe": lstar_ybe_check,
        "symmetry": identities.verify_symmetry,
        "inv-coinv": identities.verify_inv_coinv,
        "hl": identities.verify_hl,
        "modified-hl": identities.verify_modified_hl,
        "box-skew": identities.verify_box_skew,
        "complement": identities.verify_complement,
        "lstar": identities.verify_lstar,
        "cauchy": identities.verify_cauchy,
        "skew-cauchy": identities.verify_skew_cauchy,
        "cauchy-rot": identities.verify_cauchy_rot,
        "engine-equivalence": identities.verify_engine_equivalence,
    }[name]
    return fn(**kwargs)


def _run_cases(cases, workers: int):
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_verify_case, cases))
    return [_verify_case(c) for c in cases]


def _all_cases(seed: int, quick: bool):
    import random

    rng = random.Random(seed)
    cases = [
        ("ybe", {"k": 1, "mode": "symbolic"}),
        ("ybe", {"k": 2, "mode": "symbolic"}),
        ("ybe", {"k": 3, "mode": "numeric", "seed": seed, "trials": 3}),
        ("lstar-ybe", {"k": 1, "mode": "symbolic"}),
        ("lstar-ybe", {"k": 2, "mode": "symbolic"}),
    ]
    for beta, gamma in QUICK_SHAPES:
        shape = SkewShapeTuple(parse_shape_text(beta), parse_shape_text(gamma))
        cases.append(("symmetry", {"shape": shape, "n": 2}))
        cases.append(("inv-coinv", {"shape": shape, "n": 2}))
    n_random = 3 if quick else 12
    for _ in range(n_random):
        shape = identities.random_skew_tuple(rng, max_k=3, max_rows=2, max_part=3)
        cases.append(("symmetry", {"shape": shape, "n": 2}))
        cases.append(("inv-coinv", {"shape": shape, "n": 2}))
    for mu in ([2, 1], [3, 2]) if quick else ([2, 1], [3, 2], [2, 2, 1], [3, 1]):
        cases.append(("hl", {"mu": tuple(mu), "n": 2}))
        cases.append(("modified-hl", {"mu": tuple(mu), "n": 2}))
    cases.append(("box-skew", {"lam": ((1, 0), (1, 1)), "M": 4, "n": 2}))
    cases.append(("complement", {"lam": ((2, 1), (1, 0)), "M": 4, "n": 2}))
    cases.append(("lstar", {"lam": ((1, 0), (0, 0)), "n": 2, "Ms": (3, 4, 5)}))
    if quick:
        cases.append(("cauchy", {"n": 1, "k": 1, "D": 4}))
        cases.append(("cauchy-rot", {"n": 1, "k": 2, "D": 3}))
    else:
        for n, k, D in ((1, 1, 4), (2, 1, 4), (1, 2, 4), (2, 2, 3)):
            cases.append(("cauchy", {"n": n, "k": k, "D": D}))
            cases.append(("cauchy-rot", {"n": n, "k": k, "D": D}))
        cases.append(
            ("skew-cauchy", {"mu": ((1, 0), (0, 0)), "n": 2, "k": 2, "D": 3})
        )
        cases.append(("engine-equivalence", {"trials": 25, "seed": seed}))
    return cases


def _emit_report(report, fmt: str):
    if fmt == "json":
        print(json.dumps(report.to_json_dict(), sort_keys=True))
        return
    if hasattr(report, "checked"):
        line = f"{report.status} {report.name} k={report.k} mode={report.mode} checked={report.checked}"
        if report.failed:
            line += f" failed={report.failed}"
        print(line)
        if report.first_failure:
            print(f"  first failure: {json.dumps(report.first_failure, sort_keys=True)}")
    else:
        print(f"{report.status} {report.name} {json.dumps(report.params, sort_keys=True)}")
        if report.witness:
            print(f"  context: {report.witness['context']}")
            print(f"  lhs: {json.dumps(report.witness['lhs'], sort_keys=True)}")
            print(f"  rhs: {json.dumps(report.witness['rhs'], sort_keys=True)}")


def cmd_verify(args) -> int:
    workers = args.workers or int(os.environ.get("LLTLATTICE_WORKERS", "1"))
    try:
        if args.identity == "all":
            cases = _all_cases(args.seed, args.quick)
        elif args.identity in ("ybe", "lstar-ybe"):
            cases = [
                (
                    args.identity,
                    {"k": args.k, "mode": args.mode, "seed": args.seed, "trials": args.trials}
                    if args.mode == "numeric"
                    else {"k": args.k, "mode": args.mode},
                )
            ]
        elif args.identity in ("symmetry", "inv-coinv"):
            shape = _parse_shape(args)
            case_kwargs = {"shape": shape, "n": args.n}
            if args.identity == "symmetry":
                case_kwargs["engine"] = args.engine
            cases = [(args.identity, case_kwargs)]
        elif args.identity in ("hl", "modified-hl"):
            mu = parse_shape_text(args.mu)[0] if ";" not in args.mu else None
            if mu is None:
                raise ValueError("--mu takes a single partition")
            case_kwargs = {"mu": mu, "n": args.n}
            if args.identity == "hl":
                case_kwargs["engine"] = args.engine
            cases = [(args.identity, case_kwargs)]
        elif args.identity in ("box-skew", "complement"):
            lam = parse_shape_text(args.lam)
            cases = [
                (args.identity,
                 {"lam": lam, "M": args.M, "n": args.n, "engine": args.engine})
            ]
        elif args.identity == "lstar":
            lam = parse_shape_text(args.lam)
            Ms = tuple(int(v) for v in args.M_list.split(","))
            cases = [("lstar", {"lam": lam, "n": args.n, "Ms": Ms, "engine": args.engine})]
        elif args.identity == "cauchy":
            cases = [
                ("cauchy",
                 {"n": args.n, "k": args.k, "D": args.degree, "engine": args.engine})
            ]
        elif args.identity == "cauchy-rot":
            cases = [("cauchy-rot", {"n": args.n, "k": args.k, "D": args.degree})]
        elif args.identity == "skew-cauchy":
            mu = parse_shape_text(args.mu)
            cases = [
                ("skew-cauchy", {"mu": mu, "n": args.n, "k": args.k, "D": args.degree})
            ]
        else:
            raise ValueError(f"unknown identity {args.identity!r}")
    except (ValueError, AttributeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    reports = _run_cases(cases, workers)
    for report in reports:
        _emit_report(report, args.format)
    n_failed = sum(0 if r.passed else 1 for r in reports)
    print(f"summary: {len(reports) - n_failed}/{len(reports)} passed")
    return 1 if n_failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lltlattice",
        description="Coinversion LLT polynomials and their verified identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute one LLT polynomial")
    pc.add_argument("--beta", required=True, help='e.g. "3,3;3,1"')
    pc.add_argument("--gamma", default=None, help='e.g. "2,1;1,0" (default: zeros)')
    pc.add_argument("--n", type=int, required=True, help="number of x variables")
    pc.add_argument("--engine", choices=("tableaux", "lattice", "both"), default="both")
    pc.add_argument("--format", choices=("json", "text"), default="text")
    pc.set_defaults(func=cmd_compute)

    ps = sub.add_parser("stats", help="combinatorial statistics of a shape")
    ps.add_argument("--beta", required=True)
    ps.add_argument("--gamma", default=None)
    ps.add_argument("--M", type=int, default=None, help="box columns for dtilde")
    ps.set_defaults(func=cmd_stats)

    pv = sub.add_parser("verify", help="machine-verify an identity")
    pv.add_argument(
        "identity",
        choices=(
            "ybe", "lstar-ybe", "symmetry", "inv-coinv", "hl", "modified-hl",
            "box-skew", "complement", "lstar", "cauchy", "skew-cauchy",
            "cauchy-rot", "all",
        ),
    )
    pv.add_argument("--k", type=int, default=2)
    pv.add_argument("--n", type=int, default=2)
    pv.add_argument("--M", type=int, default=4)
    pv.add_argument("--M-list", default="3,4,5", help="comma list of M values for lstar")
    pv.add_argument("--degree", "-D", type=int, default=3, help="x-degree truncation bound")
    pv.add_argument("--beta", default="1;1")
    pv.add_argument("--gamma", default=None)
    pv.add_argument("--mu", default="2,1")
    pv.add_argument("--lam", default="1,0;1,1")
    pv.add_argument("--engine", choices=("tableaux", "lattice", "both"), default="tableaux")
    pv.add_argument("--mode", choices=("symbolic", "numeric"), default="symbolic")
    pv.add_argument("--trials", type=int, default=3)
    pv.add_argument("--seed", type=int, default=1, help="seed for all randomness")
    pv.add_argument("--quick", action="store_true", help="minimal parameters")
    pv.add_argument("--workers", type=int, default=0, help="worker processes (env LLTLATTICE_WORKERS)")
    pv.add_argument("--format", choices=("json", "text"), default="text")
    pv.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
