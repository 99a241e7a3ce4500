"""Command-line interface.

Every subcommand except `gen` prints one JSON report document on stdout;
`gen` prints the edge-list interchange format. Logs go to stderr only. Exit
codes: 0 success/accept/true, 1 reject/false, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__, experiments
from . import generators as gen
from .graph import (
    EdgeListFormatError,
    Graph,
    InfiniteRadiusError,
    read_edgelist,
    write_edgelist,
)
from .oracle import (
    EnumerationCapError,
    count_unbalanced_placements,
    is_graph_z_balanced,
    unbalancedness_decision,
)
from .scoring import scores
from .spectral import estimate_acceptance, spectral_certificate
from .traversal import traversal_certificate

SCHEMA_VERSION = 1


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _placement(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated vertex list: {text!r}") from exc


def _frac_json(f: Fraction) -> dict:
    return {"num": f.numerator, "den": f.denominator}


def _read_graph(path: str) -> Graph:
    if path == "-":
        return read_edgelist(sys.stdin)
    return read_edgelist(path)


def _emit_graph(g: Graph, path: str, comments=()) -> None:
    if path == "-":
        write_edgelist(g, sys.stdout, comments)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            write_edgelist(g, fh, comments)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="facbal", description=__doc__)
    p.add_argument("--threads", type=int, default=experiments.default_threads(),
                   help="worker cap for multi-seed experiments")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="emit a generated graph as edge-list text")
    gsub = g.add_subparsers(dest="family", required=True)
    p_gnd = gsub.add_parser("gnd", help="Erdős–Rényi sample with expected degree d")
    p_gnd.add_argument("--n", type=int, required=True)
    p_gnd.add_argument("--d", type=float, required=True)
    p_gnd.add_argument("--seed", type=int, required=True)
    p_gnd.add_argument("--output", default="-")
    for name in ("path", "cycle", "complete", "empty", "star"):
        p_fam = gsub.add_parser(name)
        p_fam.add_argument("--n", type=int, required=True,
                           help="vertex count (leaf count for star)")
        p_fam.add_argument("--output", default="-")
    p_thm3 = gsub.add_parser("thm3", help="root-overlay graph on a random base")
    p_thm3.add_argument("--n", type=int, required=True, help="originals; perfect square")
    p_thm3.add_argument("--seed", type=int, required=True)
    p_thm3.add_argument("--output", default="-")
    p_fig3 = gsub.add_parser("fig3", help="four-branch tree with no equal-score pair")
    p_fig3.add_argument("--output", default="-")
    for host in (gsub, sub):  # `reduce` works both nested under gen and top-level
        p_red = host.add_parser("reduce", help="dominating-set reduction instance")
        p_red.add_argument("--input", required=True, help="edge list; '-' for stdin")
        p_red.add_argument("--h", dest="budget", type=int, required=True)
        p_red.add_argument("--bag", type=int, default=None, help="bag size (default n^3)")
        p_red.add_argument("--output", default="-")
        p_red.add_argument("--sidecar", default=None,
                           help="path for the JSON sidecar (default: stderr)")

    p_score = sub.add_parser("score", help="exact player scores for a placement")
    p_score.add_argument("--input", required=True)
    p_score.add_argument("--placement", type=_placement, required=True)
    p_score.add_argument("--z", type=_fraction, default=None)

    p_bal = sub.add_parser("check-balanced", help="exhaustive z-balancedness verdict")
    p_bal.add_argument("--input", required=True)
    p_bal.add_argument("--k", type=int, required=True)
    p_bal.add_argument("--z", type=_fraction, required=True)
    p_bal.add_argument("--cap", type=int, default=None)
    p_bal.add_argument("--count", action="store_true",
                       help="also sweep all placements and count violations")

    p_unb = sub.add_parser("unbalanced", help="is some player's score strictly below s?")
    p_unb.add_argument("--input", required=True)
    p_unb.add_argument("--k", type=int, required=True)
    p_unb.add_argument("--s", type=_fraction, required=True)
    p_unb.add_argument("--cap", type=int, default=None)

    p_ct = sub.add_parser("certify-traversal", help="ball-size balancedness certificate")
    p_ct.add_argument("--input", required=True)
    p_ct.add_argument("--k", type=int, required=True)
    p_ct.add_argument("--delta", type=_fraction, required=True)

    p_cs = sub.add_parser("certify-spectral", help="spectral balancedness certificate")
    p_cs.add_argument("--input", required=True)
    p_cs.add_argument("--seed", type=int, required=True)
    p_cs.add_argument("--trials", type=int, default=None,
                      help="estimate acceptance probability over this many runs")

    p_exp = sub.add_parser("experiment", help="multi-seed measurement harnesses")
    p_exp.add_argument("name", choices=experiments.EXPERIMENT_NAMES)
    p_exp.add_argument("--n", type=int, required=True)
    p_exp.add_argument("--d", type=float, default=None)
    p_exp.add_argument("--k", type=int, default=2)
    p_exp.add_argument("--delta", type=_fraction, default=Fraction(1, 10))
    p_exp.add_argument("--gap", type=_fraction, default=Fraction(1, 10))
    p_exp.add_argument("--seeds", type=int, default=20)
    p_exp.add_argument("--seed0", type=int, default=1)
    p_exp.add_argument("--seed", type=int, default=1, help="seed for single-graph experiments")
    p_exp.add_argument("--placements", type=int, default=100)
    p_exp.add_argument("--trials", type=int, default=20)
    p_exp.add_argument("--sample", type=int, default=50)
    p_exp.add_argument("--cert", choices=("traversal", "spectral"), default="traversal")
    return p


def _handle_gen(args) -> int:
    family = args.family if args.cmd == "gen" else "reduce"
    if family == "gnd":
        g = gen.sample_gnd(args.n, args.d, args.seed)
        _emit_graph(g, args.output, comments=[f"gnd n={args.n} d={args.d} seed={args.seed}"])
    elif family in ("path", "cycle", "complete", "empty"):
        g = getattr(gen, family)(args.n)
        _emit_graph(g, args.output)
    elif family == "star":
        _emit_graph(gen.star(args.n), args.output)
    elif family == "thm3":
        inst = gen.unbalanced_expander(args.n, args.seed)
        _emit_graph(
            inst.graph,
            args.output,
            comments=[
                f"root {inst.root}",
                f"new_vertices {inst.new_vertices[0]}..{inst.new_vertices[-1]}",
                f"seed_used {inst.seed_used} retries {inst.retries}",
            ],
        )
    elif family == "fig3":
        g, labels = gen.four_branch_tree()
        comments = [f"label {name} {vid}" for name, vid in labels.items()]
        _emit_graph(g, args.output, comments=comments)
    elif family == "reduce":
        base = _read_graph(args.input)
        inst = gen.dominating_set_reduction(base, args.budget, args.bag)
        _emit_graph(inst.graph, args.output)
        sidecar = json.dumps(inst.to_json_dict(), sort_keys=True)
        if args.sidecar:
            with open(args.sidecar, "w", encoding="utf-8") as fh:
                fh.write(sidecar + "\n")
        else:
            print(sidecar, file=sys.stderr)
    else:  # pragma: no cover - argparse restricts the choices
        raise ValueError(f"unknown family {family!r}")
    return 0


def _dispatch(args) -> tuple[int, dict | None, dict | None]:
    """Returns (exit_code, result_payload, params_echo); payload None for gen."""
    if args.cmd in ("gen", "reduce"):
        return _handle_gen(args), None, None

    if args.cmd == "score":
        g = _read_graph(args.input)
        rep = scores(g, args.placement)
        if args.z is not None:
            rep = rep.with_balance(args.z)
        params = {"input": args.input, "placement": list(args.placement),
                  "z": None if args.z is None else _frac_json(args.z)}
        code = 1 if rep.balanced is False else 0
        return code, rep.to_json_dict(), params

    if args.cmd == "check-balanced":
        g = _read_graph(args.input)
        kwargs = {} if args.cap is None else {"max_placements": args.cap}
        verdict = is_graph_z_balanced(g, args.k, args.z, **kwargs)
        payload = verdict.to_json_dict()
        if args.count:
            payload["violations"] = count_unbalanced_placements(g, args.k, args.z, **kwargs)
        params = {"input": args.input, "k": args.k, "z": _frac_json(args.z),
                  "cap": args.cap, "count": args.count}
        return (0 if verdict.balanced else 1), payload, params

    if args.cmd == "unbalanced":
        g = _read_graph(args.input)
        kwargs = {} if args.cap is None else {"max_placements": args.cap}
        decision = unbalancedness_decision(g, args.k, args.s, **kwargs)
        params = {"input": args.input, "k": args.k, "s": _frac_json(args.s), "cap": args.cap}
        return (0 if decision.answer else 1), decision.to_json_dict(), params

    if args.cmd == "certify-traversal":
        g = _read_graph(args.input)
        cert = traversal_certificate(g, args.k, args.delta)
        params = {"input": args.input, "k": args.k, "delta": _frac_json(args.delta)}
        return (0 if cert.accepted else 1), cert.to_json_dict(), params

    if args.cmd == "certify-spectral":
        g = _read_graph(args.input)
        params = {"input": args.input, "seed": args.seed, "trials": args.trials}
        if args.trials is None:
            cert = spectral_certificate(g, args.seed)
            return (0 if cert.accepted else 1), cert.to_json_dict(), params
        est = estimate_acceptance(g, args.trials, args.seed)
        return (0 if est.exceeds_bar else 1), est.to_json_dict(), params

    if args.cmd == "experiment":
        params: dict = {"n": args.n}
        if args.name == "thm1-score-gap":
            params.update(d=args.d, k=args.k, seeds=args.seeds, seed0=args.seed0,
                          placements_per_seed=args.placements, gap_fraction=args.gap)
        elif args.name == "thm3-n2-profile":
            params.update(seed=args.seed, sample_originals=args.sample)
        elif args.name == "spectral-gap":
            params.update(d=args.d, seeds=args.seeds, seed0=args.seed0)
        elif args.name == "cert-rates":
            params.update(cert=args.cert, d=args.d, seeds=args.seeds, seed0=args.seed0)
            if args.cert == "traversal":
                params.update(k=args.k, delta=args.delta)
            else:
                params.update(trials=args.trials)
        if params.get("d", 0) is None:
            raise ValueError(f"experiment {args.name} requires --d")
        result = experiments.run_experiment(args.name, threads=args.threads, **params)
        echo = {k: (_frac_json(v) if isinstance(v, Fraction) else v) for k, v in params.items()}
        echo["name"] = args.name
        return 0, result, echo

    raise ValueError(f"unknown subcommand {args.cmd!r}")  # pragma: no cover


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    started = time.perf_counter()
    try:
        code, payload, params = _dispatch(args)
    except (EdgeListFormatError, InfiniteRadiusError, EnumerationCapError,
            ValueError, OSError, RuntimeError) as exc:
        print(f"facbal: error: {exc}", file=sys.stderr)
        return 2
    if payload is not None:
        seeds = {k: v for k, v in (params or {}).items() if k in ("seed", "seed0")}
        report = {
            "tool": "facbal",
            "version": __version__,
            "schema_version": SCHEMA_VERSION,
            "subcommand": args.cmd if args.cmd != "experiment" else f"experiment:{args.name}",
            "params": params,
            "seeds": seeds or None,
            "result": payload,
            "elapsed_ms": (time.perf_counter() - started) * 1000.0,
        }
        print(json.dumps(report, sort_keys=True))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
