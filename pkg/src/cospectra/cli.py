"""Command-line front end: ``cospectra generate | verify | reproduce-paper``.

Exit codes: 0 when every requested or claimed property holds, 1 when one
fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from . import constructions as cons
from .errors import CospectraError, DegenerateSeed
from .exact_matrix import IntMatrix
from .formats import GRAPH6_HEADER, export_dot, export_graph6, import_graph6, parse_seed
from .graph_model import DEFAULT_ISO_BOUND, Graph, is_isomorphic, refinement_certificate
from .reference_examples import EXAMPLE_ISO_BOUND, EXAMPLES, check_example
from .spectra import (
    adjacency_charpoly,
    adjacency_cospectral,
    float_spectrum,
    normalized_cospectral,
    normalized_float_spectrum,
    normalized_laplacian_charpoly,
    poly_witness,
)

SCHEMA = 1
EXIT_OK, EXIT_CLAIM, EXIT_INPUT = 0, 1, 2
FORMATS = ("graph6", "dot", "json-report")
CLAIMS = ("adjacency", "normalized", "non-isomorphic")
WORKERS_ENV = "COSPECTRA_WORKERS"


class InputError(Exception):
    """Bad command-line input; reported with the offending field and exit code 2."""

    def __init__(self, field: str, msg: str):
        super().__init__(f"{field}: {msg}")


# input helpers ---------------------------------------------------------------


def _seed_arg(text: str | None, field: str) -> IntMatrix | None:
    if text is None:
        return None
    try:
        return parse_seed(text)
    except CospectraError as exc:
        raise InputError(field, str(exc)) from exc


def _read_text(path: str, field: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(field, f"cannot read {path}: {exc.strerror or exc}") from exc


def _list_arg(text: str, allowed: Sequence[str], field: str) -> list[str]:
    items = [s.strip() for s in text.split(",") if s.strip()]
    for s in items:
        if s not in allowed:
            raise InputError(field, f"unknown value {s!r} (choose from {', '.join(allowed)})")
    if not items:
        raise InputError(field, "empty list")
    return items


def _workers(arg: int | None) -> int:
    if arg is not None:
        value, field = arg, "--workers"
    else:
        raw = os.environ.get(WORKERS_ENV, "1")
        field = WORKERS_ENV
        try:
            value = int(raw)
        except ValueError:
            raise InputError(field, f"not an integer: {raw!r}") from None
    if value < 1:
        raise InputError(field, f"must be at least 1, got {value}")
    return value


def _load_graph6(path: str) -> Graph:
    lines = [ln for ln in _read_text(path, path).splitlines() if ln.strip()]
    if len(lines) != 1:
        raise InputError(path, f"expected exactly one graph6 line, found {len(lines)}")
    try:
        return import_graph6(lines[0])
    except CospectraError as exc:
        raise InputError(path, str(exc)) from exc


def _emit(report: dict | list, out: str | None) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# verdict helpers ---------------------------------------------------------------


def isomorphism_verdict(g: Graph, h: Graph, bound: int) -> dict:
    """Certificates first, exact search up to ``bound``; above it certificates only."""
    cert = refinement_certificate(g, h)
    if cert is None and g.order <= bound:
        v = is_isomorphic(g, h, bound=bound)
        return {"holds": v.holds, "method": "search", "witness": v.witness}
    if cert is None and adjacency_charpoly(g) != adjacency_charpoly(h):
        cert = {"reason": "adjacency polynomials differ"}
    if cert is not None:
        return {"holds": False, "method": "certificate", "witness": cert}
    return {"holds": None, "method": "certificate only",
            "witness": {"reason": f"undecided: order {g.order} above bound {bound}"}}


def _pair_verdicts(job: tuple) -> dict:
    a, b, g, h, bound = job
    return {
        "members": [a, b],
        "adjacency": adjacency_cospectral(g, h, with_spectra=False).to_dict(),
        "normalized": normalized_cospectral(g, h, with_spectra=False).to_dict(),
        "isomorphism": isomorphism_verdict(g, h, bound),
    }


def _map(fn, jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return list(pool.map(fn, jobs))


def graph_summary(g: Graph) -> dict:
    lap = normalized_laplacian_charpoly(g)
    return {
        "order": g.order,
        "edges": len(g.edges()),
        "graph6": export_graph6(g),
        "adjacency_charpoly": adjacency_charpoly(g).tolist(),
        "normalized_charpoly": poly_witness(lap),
        "spectrum": [round(x, 4) + 0.0 for x in float_spectrum(g.adjacency)],
        "normalized_spectrum": [round(x, 4) + 0.0 for x in normalized_float_spectrum(g)],
    }


# generate ----------------------------------------------------------------------


def _build(args) -> tuple[dict[str, Graph], str, dict, frozenset, object]:
    """Returns (named graphs, construction, params, claims, degenerate flag)."""
    if args.B is not None and args.B_file is not None:
        raise InputError("--B", "give either --B or --B-file, not both")
    if args.B_file is not None:
        B = _seed_arg(_read_text(args.B_file, "--B-file"), "--B-file")
    elif args.B is not None:
        B = _seed_arg(args.B, "--B")
    else:
        raise InputError("--B", "a seed matrix is required (--B or --B-file)")
    G = _seed_arg(args.G, "--G")
    Gp = _seed_arg(args.Gprime, "--Gprime")
    E = _seed_arg(args.E, "--E")
    F = _seed_arg(args.F, "--F")
    kind = args.construction
    opts = {"allow_zero_lines": args.allow_zero_lines}

    def need(value, field):
        if value is None:
            raise InputError(field, f"required for construction {kind}")
        return value

    try:
        if kind == "Fk":
            n = need(args.n, "--n")
            fam = cons.construct_family(B, n, **opts)
            ks = fam.divisors
            if args.k is not None:
                ks = [int(x) for x in _list_arg(args.k, [str(d) for d in cons.divisors(n)], "--k")]
            graphs = {f"k={d}": g for d, g in zip(fam.divisors, fam.members) if d in ks}
            return graphs, kind, {**fam.params.to_dict(), "divisors": list(ks)}, fam.claims, None
        opts["iso_bound"] = args.iso_bound
        if kind == "I":
            pair = cons.construct_I(B, need(args.n, "--n"), **opts)
        elif kind == "III":
            pair = cons.construct_III(B, need(args.n, "--n"), **opts)
        elif kind == "II":
            pair = cons.construct_II(B, need(G, "--G"), need(Gp, "--Gprime"), **opts)
        elif kind == "IV":
            pair = cons.construct_IV(B, need(G, "--G"), need(Gp, "--Gprime"), **opts)
        else:
            pair = cons.construct_IV_general(B, need(Gp, "--Gprime"), need(E, "--E"), need(F, "--F"), G, **opts)
    except CospectraError as exc:
        raise InputError(kind, str(exc)) from exc
    return {"left": pair.left, "right": pair.right}, kind, pair.params.to_dict(), pair.claims, pair.degenerate


def _labels(index: int, order: int) -> list[str]:
    return [f"{v + 1}" + "'" * index for v in range(order)]


def cmd_generate(args) -> int:
    formats = _list_arg(args.format, FORMATS, "--format")
    workers = _workers(args.workers)
    t0 = time.perf_counter()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DegenerateSeed)
        graphs, kind, params, claims, degenerate = _build(args)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    t_build = time.perf_counter() - t0

    t0 = time.perf_counter()
    names = list(graphs)
    jobs = [(a, b, graphs[a], graphs[b], args.iso_bound) for a, b in itertools.combinations(names, 2)]
    verdicts = _map(_pair_verdicts, jobs, workers)
    summaries = {nm: graph_summary(g) for nm, g in graphs.items()}
    t_verify = time.perf_counter() - t0

    files = []
    out_dir = Path(args.out_dir)
    if {"graph6", "dot", "json-report"} & set(formats):
        out_dir.mkdir(parents=True, exist_ok=True)
    for i, (nm, g) in enumerate(graphs.items()):
        stem = f"{kind}_{nm.replace('=', '')}"
        if "graph6" in formats:
            path = out_dir / f"{stem}.g6"
            path.write_text(GRAPH6_HEADER + export_graph6(g) + "\n")
            files.append(str(path))
        if "dot" in formats:
            path = out_dir / f"{stem}.dot"
            primes = {"left": 1, "right": 0}.get(nm, i)
            path.write_text(export_dot(g, labels=_labels(primes, g.order), name=stem.replace("-", "_")))
            files.append(str(path))

    failed = [
        f"{v['members'][0]}/{v['members'][1]} {claim}"
        for v in verdicts for claim in ("adjacency", "normalized")
        if claim in claims and not v[claim]["holds"]
    ]
    report = {
        "schema": SCHEMA,
        "construction": kind,
        "params": params,
        "claims": sorted(claims),
        "orders": {nm: g.order for nm, g in graphs.items()},
        "graphs": summaries,
        "verdicts": verdicts,
        "degenerate": degenerate,
        "claims_hold": not failed,
        "files": files,
        "timings": {"build_s": round(t_build, 4), "verify_s": round(t_verify, 4)},
    }
    if "json-report" in formats:
        path = out_dir / f"{kind}_report.json"
        files.append(str(path))
        path.write_text(json.dumps(report, indent=2) + "\n")
    _emit(report, args.out)
    for f in failed:
        print(f"claim failed: {f}", file=sys.stderr)
    return EXIT_CLAIM if failed else EXIT_OK


# verify ------------------------------------------------------------------------


def cmd_verify(args) -> int:
    claims = _list_arg(args.claims, CLAIMS, "--claims")
    g, h = _load_graph6(args.left), _load_graph6(args.right)
    t0 = time.perf_counter()
    results: dict[str, dict] = {}
    ok = True
    for claim in claims:
        if claim == "adjacency":
            d = adjacency_cospectral(g, h).to_dict()
        elif claim == "normalized":
            d = normalized_cospectral(g, h).to_dict()
        else:
            iso = isomorphism_verdict(g, h, args.iso_bound)
            d = {"claim": "non-isomorphic",
                 "holds": None if iso["holds"] is None else not iso["holds"],
                 "method": iso["method"], "witness": iso["witness"]}
        results[claim] = d
        ok = ok and d["holds"] is True
    report = {
        "schema": SCHEMA,
        "inputs": [args.left, args.right],
        "orders": [g.order, h.order],
        "verdicts": results,
        "claims_hold": ok,
        "timings": {"verify_s": round(time.perf_counter() - t0, 4)},
    }
    _emit(report, args.out)
    return EXIT_OK if ok else EXIT_CLAIM


# reproduce-paper -------------------------------------------------------------------


def _load_fixtures(path: str | None) -> list[dict]:
    if path is None:
        return EXAMPLES
    try:
        data = json.loads(_read_text(path, "--fixtures"))
    except json.JSONDecodeError as exc:
        raise InputError("--fixtures", f"invalid JSON: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(x, dict) and "name" in x for x in data):
        raise InputError("--fixtures", "expected a JSON list of example objects with a 'name'")
    return data


def cmd_reproduce(args) -> int:
    examples = _load_fixtures(args.fixtures)
    rows = []
    print(f"{'example':<8} {'order':>5}  result")
    for ex in examples:
        t0 = time.perf_counter()
        res = check_example(ex, iso_bound=args.iso_bound)
        dt = time.perf_counter() - t0
        print(f"{res.name:<8} {ex.get('order', '?'):>5}  {'PASS' if res.passed else 'FAIL'}")
        for nm, text in res.printed.items():
            print(f"         {nm} expected: {text}")
            print(f"         {nm} computed: {{{', '.join(f'{round(x, 4) + 0.0:.4f}' for x in res.spectra[nm])}}}")
        for f in res.failures:
            print(f"         ! {f}")
        rows.append({
            "name": res.name,
            "passed": res.passed,
            "failures": res.failures,
            "printed_spectra": res.printed,
            "computed_spectra": {nm: [round(x, 4) + 0.0 for x in xs] for nm, xs in res.spectra.items()},
            "seconds": round(dt, 4),
        })
    if args.out:
        _emit({"schema": SCHEMA, "examples": rows}, args.out)
    failed = [r["name"] for r in rows if not r["passed"]]
    if failed:
        print(f"failed examples: {', '.join(failed)}", file=sys.stderr)
        return EXIT_CLAIM
    return EXIT_OK


# parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cospectra", description="Build and verify cospectral graph pairs.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="build a cospectral pair or family")
    gen.add_argument("--construction", required=True, choices=["I", "Fk", "II", "III", "IV", "IVg"])
    gen.add_argument("--B", help='seed matrix rows, e.g. "10;11;11"')
    gen.add_argument("--B-file", dest="B_file", help="file holding the seed matrix text")
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", help="comma-separated divisors of n to keep (Fk only)")
    gen.add_argument("--G")
    gen.add_argument("--Gprime")
    gen.add_argument("--E")
    gen.add_argument("--F")
    gen.add_argument("--out-dir", default=".")
    gen.add_argument("--format", default="graph6", help=f"comma-separated subset of {', '.join(FORMATS)}")
    gen.add_argument("--out", help="write the JSON report here instead of stdout")
    gen.add_argument("--workers", type=int, help=f"process pool size (default ${WORKERS_ENV} or 1)")
    gen.add_argument("--iso-bound", type=int, default=DEFAULT_ISO_BOUND)
    gen.add_argument("--allow-zero-lines", action="store_true")
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="check claims about two graph6 files")
    ver.add_argument("left")
    ver.add_argument("right")
    ver.add_argument("--claims", default="adjacency", help=f"comma-separated subset of {', '.join(CLAIMS)}")
    ver.add_argument("--iso-bound", type=int, default=DEFAULT_ISO_BOUND)
    ver.add_argument("--out")
    ver.set_defaults(func=cmd_verify)

    rep = sub.add_parser("reproduce-paper", help="rebuild the worked examples and check expected values")
    rep.add_argument("--fixtures", help="JSON file replacing the built-in examples")
    rep.add_argument("--iso-bound", type=int, default=EXAMPLE_ISO_BOUND)
    rep.add_argument("--out", help="also write a JSON summary here")
    rep.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
