"""Command-line surface: construct, measure, verify, export-graph, sweep.

Exit codes: 0 success (and all claims passing), 1 verification failure,
2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import verify as verify_mod
from .constructions import (
    address_fn,
    chaf,
    desensitize,
    from_descriptor,
    haf,
    maf,
    to_descriptor,
    tradeoff,
    tradeoff_profile,
)
from .core import (
    BooleanFunction,
    CertificateCollection,
    DEFAULT_TABLE_CAP,
    PartialAssignment,
    TruthTable,
)
from .measures import (
    DEFAULT_SEED,
    DEFAULT_TOL,
    SensitivityGraph,
    compute_measures,
    graph_dot_text,
    graph_edges_text,
)

_METHODS = {
    "auto": "auto",
    "dense": "dense",
    "matfree": "matrix-free",
    "components": "component-wise",
    "analytic": "analytic",
}

# sweep rows are closed-form; reject parameters whose arity leaves int64
MAX_SWEEP_ARITY = 1 << 62


@dataclass
class RunConfig:
    seed: int = DEFAULT_SEED
    tolerance: float = DEFAULT_TOL
    threads: int = 1
    materialize_cap: int = DEFAULT_TABLE_CAP


def resolve_threads(flag: int | None, env: dict | None = None) -> int:
    """--threads wins over SENSILAB_THREADS wins over all available."""
    if flag is not None:
        if flag < 1:
            raise ValueError("--threads must be at least 1")
        return flag
    env = os.environ if env is None else env
    raw = env.get("SENSILAB_THREADS")
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"SENSILAB_THREADS={raw!r} is not an integer") from None
        if value < 1:
            raise ValueError("SENSILAB_THREADS must be at least 1")
        return value
    return os.cpu_count() or 1


def _config_from(args) -> RunConfig:
    return RunConfig(
        seed=args.seed if args.seed is not None else DEFAULT_SEED,
        tolerance=args.tol if args.tol is not None else DEFAULT_TOL,
        threads=resolve_threads(args.threads),
        materialize_cap=(
            args.materialize_cap if args.materialize_cap is not None else DEFAULT_TABLE_CAP
        ),
    )


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def load_function(path: str) -> BooleanFunction:
    """Read a .tt truth-table file or a .json construction descriptor."""
    if path.endswith(".tt"):
        table = TruthTable.load(path)
        return BooleanFunction.from_table(table, name=os.path.basename(path))
    if path.endswith(".json"):
        with open(path) as fh:
            obj = json.load(fh)
        return from_descriptor(obj)
    raise ValueError(f"unrecognized function file {path!r} (expected .tt or .json)")


def _load_certificates(path: str, arity: int) -> CertificateCollection:
    with open(path) as fh:
        obj = json.load(fh)
    if not isinstance(obj, list) or not all(isinstance(e, str) for e in obj):
        raise ValueError("certificate file must be a JSON list of 0/1/* strings")
    members = tuple(PartialAssignment.from_string(e) for e in obj)
    for memb in members:
        if memb.arity != arity:
            raise ValueError(
                f"certificate {memb.to_string()!r} has arity {memb.arity}, function has {arity}"
            )
    return CertificateCollection(1, members, unambiguous=True)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=lambda v: int(v, 0), default=None)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--materialize-cap", type=int, default=None, dest="materialize_cap")

    parser = argparse.ArgumentParser(
        prog="sensilab",
        description="constructions, measures, and verification for Boolean function sensitivity",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a function and write it out")
    p.add_argument(
        "family",
        choices=["haf", "chaf", "maf", "address", "tradeoff", "desensitized"],
    )
    p.add_argument("--r", type=int)
    p.add_argument("--rs", type=_int_list)
    p.add_argument("--k", type=int)
    p.add_argument("--as", dest="as_", type=_int_list)
    p.add_argument("--bs", dest="bs_", type=_int_list)
    p.add_argument("--base", help="function file the desensitized family wraps")
    p.add_argument("--certs", help="JSON list of 0/1/* strings for desensitized")
    p.add_argument("--out", required=True)

    p = sub.add_parser("measure", parents=[common], help="measure a function file")
    p.add_argument("--fn", required=True)
    p.add_argument("--measures", required=True, help="comma list: s0,s1,s,deg,lambda,c0,c1,uc1")
    p.add_argument("--method", choices=sorted(_METHODS), default="auto")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument(
        "suite",
        choices=["theorem1", "simon", "subgraph", "lemmas", "desens", "tradeoff", "maf"],
    )
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--as", dest="as_", type=_int_list)
    p.add_argument("--bs", dest="bs_", type=_int_list)
    p.add_argument("--samples", type=int)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--arities", type=_int_list)
    p.add_argument("--fn")
    p.add_argument("--certs")
    p.add_argument("--method", choices=sorted(_METHODS))
    p.add_argument("--csv", help="also write a CSV summary here")

    p = sub.add_parser("export-graph", parents=[common], help="emit the sensitivity graph")
    p.add_argument("--fn", required=True)
    p.add_argument("--format", required=True, choices=["dot", "edges"])
    p.add_argument("--component", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("sweep", parents=[common], help="closed-form parameter sweep")
    p.add_argument("family", choices=["tradeoff"])
    p.add_argument("--g-range", dest="g_range", required=True, help="inclusive range a..b")
    p.add_argument("--ratio", required=True, help="l:m outer:inner code counts")
    p.add_argument("--out", default=None)

    return parser


def _cmd_construct(args, config: RunConfig) -> int:
    family = args.family
    if family == "haf":
        if args.r is None:
            raise ValueError("haf needs --r")
        fn = haf(args.r)
    elif family == "chaf":
        if args.rs is None:
            raise ValueError("chaf needs --rs")
        fn = chaf(args.rs)
    elif family == "maf":
        if args.k is None:
            raise ValueError("maf needs --k")
        fn = maf(args.k)
    elif family == "address":
        if args.k is None:
            raise ValueError("address needs --k")
        fn = address_fn(args.k)
    elif family == "tradeoff":
        if args.as_ is None:
            raise ValueError("tradeoff needs --as (and optionally --bs)")
        fn = tradeoff(args.as_, args.bs_ or [])
    else:
        if args.base is None:
            raise ValueError("desensitized needs --base")
        base = load_function(args.base)
        if args.certs is not None:
            certs = _load_certificates(args.certs, base.arity)
        else:
            certs = base.meta.certificates if base.meta is not None else None
            if certs is None:
                raise ValueError(
                    "desensitized needs --certs unless the base carries its own collection"
                )
        fn = desensitize(base, certs)

    out = args.out
    if out.endswith(".tt"):
        fn.table(config.materialize_cap).save(out)
    elif out.endswith(".json"):
        with open(out, "w") as fh:
            json.dump(to_descriptor(fn), fh, indent=2)
            fh.write("\n")
    else:
        raise ValueError(f"output {out!r} must end in .tt or .json")
    print(f"wrote {out} ({fn.name}, arity {fn.arity})")
    return 0


def _cmd_measure(args, config: RunConfig) -> int:
    fn = load_function(args.fn)
    names = [part for part in args.measures.split(",") if part]
    report = compute_measures(
        fn,
        names,
        method=_METHODS[args.method],
        tol=config.tolerance,
        seed=config.seed,
        materialize_cap=config.materialize_cap,
        source=args.fn,
    )
    print(report.to_json())
    return 0


def _cmd_verify(args, config: RunConfig) -> int:
    suite = args.suite
    method = _METHODS[args.method] if args.method else None
    if suite == "theorem1":
        claims = verify_mod.verify_theorem1(
            args.r if args.r is not None else 2,
            lambda_method=method,
            seed=config.seed,
        )
    elif suite == "simon":
        ns = [args.n] if args.n is not None else [2, 3, 4]
        claims = []
        for n in ns:
            claims.extend(verify_mod.verify_simon(n, threads=config.threads))
    elif suite == "subgraph":
        claims = verify_mod.verify_subgraph_lemma(
            args.n if args.n is not None else 3,
            samples=args.samples,
            seed=config.seed,
        )
    elif suite == "lemmas":
        if args.fn is not None:
            fn = load_function(args.fn)
            claims = verify_mod.verify_lemma_chain(fn, name=os.path.basename(args.fn))
            claims.extend(verify_mod.verify_edge_bound(fn, name=os.path.basename(args.fn)))
        else:
            claims = verify_mod.verify_lemma_chain_random(
                arities=args.arities or tuple(range(4, 11)),
                count=args.count,
                seed=config.seed,
            )
    elif suite == "desens":
        if args.fn is not None:
            fn = load_function(args.fn)
            if args.certs is not None:
                certs = _load_certificates(args.certs, fn.arity)
            elif fn.meta is not None and fn.meta.certificates is not None:
                certs = fn.meta.certificates
            else:
                raise ValueError("desens needs --certs unless the function carries a collection")
            claims = verify_mod.verify_desensitization(fn, certs, name=os.path.basename(args.fn))
        else:
            # default instance: OR on two bits with its standard partition
            table = TruthTable(2, np.array([0, 1, 1, 1], dtype=np.uint8))
            fn = BooleanFunction.from_table(table, name="or2")
            certs = CertificateCollection(
                1,
                (
                    PartialAssignment.from_string("1*"),
                    PartialAssignment.from_string("01"),
                ),
                unambiguous=True,
            )
            claims = verify_mod.verify_desensitization(fn, certs, name="or2")
    elif suite == "tradeoff":
        as_ = args.as_ if args.as_ is not None else [2]
        bs_ = args.bs_ if args.bs_ is not None else [2]
        claims = verify_mod.verify_tradeoff(as_, bs_, lambda_method=method, seed=config.seed)
    else:
        ks = [args.k] if args.k is not None else [2, 3, 4]
        claims = []
        for k in ks:
            claims.extend(verify_mod.verify_maf_proposition(k))
    print(verify_mod.claims_to_json(claims))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(verify_mod.claims_to_csv(claims))
    return 0 if verify_mod.all_pass(claims) else 1


def _cmd_export_graph(args, config: RunConfig) -> int:
    fn = load_function(args.fn)
    if fn.arity > 16:
        raise ValueError(f"graph export capped at arity 16, got {fn.arity}")
    graph = SensitivityGraph(fn, cap=config.materialize_cap)
    if args.format == "dot":
        text = graph_dot_text(graph, component=args.component)
    else:
        text = graph_edges_text(graph, component=args.component)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _parse_range(text: str) -> range:
    parts = text.split("..")
    if len(parts) != 2:
        raise ValueError(f"range must look like a..b, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"range must look like a..b with integers, got {text!r}") from None
    return range(lo, hi + 1)


def _parse_ratio(text: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"ratio must look like l:m, got {text!r}")
    try:
        l, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"ratio must look like l:m with integers, got {text!r}") from None
    if l < 1 or m < 0:
        raise ValueError("ratio needs at least one outer code and a non-negative inner count")
    return l, m


def _cmd_sweep(args, config: RunConfig) -> int:
    gs = _parse_range(args.g_range)
    l, m = _parse_ratio(args.ratio)
    lines = ["n,s0,s1,lambda_sq,c_hat"]
    for g in gs:
        if g < 0:
            raise ValueError("g must be non-negative (code orders start at 2)")
        as_ = [2 + g] * l
        bs_ = [2 + g] * m
        prof = tradeoff_profile(as_, bs_)
        if prof["arity"] > MAX_SWEEP_ARITY:
            raise ValueError(f"g={g} overflows the sweep arity budget")
        c_hat = prof["s0"] / (prof["s0"] + prof["s1"])
        lines.append(
            f"{prof['arity']},{prof['s0']},{prof['s1']},{prof['lambda_sq']},{c_hat!r}"
        )
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from(args)
        if args.command == "construct":
            return _cmd_construct(args, config)
        if args.command == "measure":
            return _cmd_measure(args, config)
        if args.command == "verify":
            return _cmd_verify(args, config)
        if args.command == "export-graph":
            return _cmd_export_graph(args, config)
        if args.command == "sweep":
            return _cmd_sweep(args, config)
        raise AssertionError(args.command)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
