"""Command-line driver.

Subcommands: complete, chains, basis, resolve, verify, dualize, cy-check,
example.  Input comes from --example plus parameter flags, from a JSON
document path, or from standard input ("-").  The machine-readable report
goes to standard output as JSON; diagnostics go to standard error.

Exit codes: 0 success, 1 verification failure, 2 cap or fuel exhaustion,
3 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__
from .ambiguities import AmbiguityEnumerator
from .completion import check_diamond, complete, complete_generators
from .docio import (document_for_example, parse_document, poly_json,
                    serialize_document, system_json, tensor_json,
                    tensor_latex)
from .errors import (CapExceeded, DiamondUnverified, FuelExhausted,
                     InputError, PathAlgError)
from .examples import EXAMPLE_NAMES, build_example, down_up_cy_check
from .resolution import Resolution, koszul_report

_EXIT_VERIFY = 1
_EXIT_CAP = 2
_EXIT_INPUT = 3


def _add_common(p):
    p.add_argument("--example", choices=EXAMPLE_NAMES,
                   help="use a registry example instead of an input file")
    p.add_argument("--system", help="cubic variant: R1, R2 or initial")
    p.add_argument("--n", type=int, help="qci exponent of x")
    p.add_argument("--m", type=int, help="qci exponent of y")
    p.add_argument("--xi", help="commutation parameter (scalar literal)")
    p.add_argument("--alpha", help="down-up parameter")
    p.add_argument("--beta", help="down-up parameter")
    p.add_argument("--gamma", help="down-up parameter")
    p.add_argument("--monomial", action="store_true",
                   help="replace the mixed rule value by zero")
    p.add_argument("--input", help="JSON problem document (path or '-')")
    p.add_argument("-N", "--degree", type=int, default=3,
                   help="top homological degree")
    p.add_argument("--length-cap", type=int, default=None,
                   help="path-length cap (default 64; 6 for basis)")
    p.add_argument("--fuel", type=int,
                   default=int(os.environ.get("PATHALG_FUEL", 200_000)))
    p.add_argument("--degree-cap", type=int, default=12)
    p.add_argument("--max-rounds", type=int, default=200)
    p.add_argument("--strict-prec", action="store_true",
                   help="check the support condition with the reachability "
                        "oracle instead of the graded shortcut")
    p.add_argument("--latex", action="store_true",
                   help="add tensor-notation renderings to the report")
    p.add_argument("--self-test", action="store_true",
                   help="run the embedded expected-value fixtures")


def _example_params(args):
    params = {}
    if args.system:
        params["system"] = args.system
    for key in ("n", "m"):
        if getattr(args, key) is not None:
            params[key] = getattr(args, key)
    for key in ("xi", "alpha", "beta", "gamma"):
        if getattr(args, key) is not None:
            params[key] = getattr(args, key)
    if args.monomial:
        params["monomial"] = True
    return params


def _cap(args, default=64):
    return default if args.length_cap is None else args.length_cap


def _load(args):
    """(field, quiver, order, system, generators, document-dict)."""
    if args.example:
        ex = build_example(args.example, **_example_params(args))
        doc = document_for_example(ex)
        return ex.field, ex.quiver, ex.order, ex.system, [], doc
    if not args.input:
        raise InputError("provide --example or --input")
    text = sys.stdin.read() if args.input == "-" else \
        open(args.input, "r", encoding="utf-8").read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not valid JSON: {exc}") from exc
    pd = parse_document(doc)
    return pd.field, pd.quiver, pd.order, pd.system, pd.generators, doc


def _report(args, command, doc, result, started):
    return {
        "tool": "pathalg",
        "version": __version__,
        "command": command,
        "input_sha256": hashlib.sha256(
            json.dumps(doc, sort_keys=True).encode()).hexdigest(),
        "result": result,
        "timing": {"seconds": round(time.time() - started, 6)},
    }


def _emit(report):
    json.dump(report, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _resolution(field, quiver, order, system, args):
    return Resolution(system, order, length_cap=_cap(args), fuel=args.fuel)


def cmd_complete(args, started):
    field, quiver, order, system, generators, doc = _load(args)
    if order is None:
        raise InputError("completion needs an order specification")
    kwargs = dict(max_rounds=args.max_rounds, degree_cap=args.degree_cap,
                  fuel=args.fuel)
    if system is not None:
        result = complete(system, order, **kwargs)
    else:
        result = complete_generators(field, quiver, order, generators,
                                     **kwargs)
    payload = {
        "status": result.status,
        "rounds": result.rounds,
        "rules": system_json(result.system),
        "derivation": result.log,
    }
    _emit(_report(args, "complete", doc, payload, started))
    return 0 if result.status == "complete" else _EXIT_CAP


def cmd_chains(args, started):
    field, quiver, order, system, generators, doc = _load(args)
    if system is None:
        raise InputError("the chains command needs rules, not generators")
    enum = AmbiguityEnumerator(system)
    degrees = {}
    for n in range(-1, args.degree + 1):
        items, truncated = enum.degree(n, _cap(args))
        degrees[str(n)] = {
            "truncated": truncated,
            "chains": [{
                "path": quiver.path_str(a.path),
                "left": [quiver.path_str(u) for u in a.left],
                "right": [quiver.path_str(v) for v in a.right],
            } for a in items],
        }
    _emit(_report(args, "chains", doc, {"degrees": degrees}, started))
    return 0


def cmd_basis(args, started):
    field, quiver, order, system, generators, doc = _load(args)
    if system is None:
        raise InputError("the basis command needs rules, not generators")
    basis = system.irreducible_basis(_cap(args, default=6))
    by_len = {}
    for p in basis:
        by_len.setdefault(len(p.word), []).append(quiver.path_str(p))
    payload = {
        "paths": [quiver.path_str(p) for p in basis],
        "counts": {str(k): len(v) for k, v in sorted(by_len.items())},
    }
    _emit(_report(args, "basis", doc, payload, started))
    return 0


def cmd_resolve(args, started):
    field, quiver, order, system, generators, doc = _load(args)
    if system is None:
        raise InputError("the resolve command needs rules, not generators")
    res = _resolution(field, quiver, order, system, args)
    res.extend(args.degree)
    tables = {}
    for n in range(0, args.degree + 1):
        entry = []
        for q in res.generators(n):
            item = {"gen": quiver.path_str(q),
                    "terms": tensor_json(field, quiver,
                                         res.differential(n)[q])}
            if args.latex:
                item["latex"] = tensor_latex(field, quiver,
                                             res.differential(n)[q])
            entry.append(item)
        tables[str(n)] = entry
    payload = {
        "termination": res.diamond.termination,
        "resolution_length": res.resolution_length(args.degree),
        "differentials": tables,
    }
    _emit(_report(args, "resolve", doc, payload, started))
    return 0


def cmd_verify(args, started):
    field, quiver, order, system, generators, doc = _load(args)
    if system is None:
        raise InputError("the verify command needs rules, not generators")
    res = _resolution(field, quiver, order, system, args)
    rep = res.verify(args.degree, strict_prec=args.strict_prec,
                     reaches_fuel=min(args.fuel, 20_000))
    rep["degrees"] = {str(k): v for k, v in sorted(rep["degrees"].items())}
    _emit(_report(args, "verify", doc, rep, started))
    return 0 if rep["all_ok"] else _EXIT_VERIFY


def cmd_dualize(args, started):
    field, quiver, order, system, generators, doc = _load(args)
    if system is None:
        raise InputError("the dualize command needs rules, not generators")
    res = _resolution(field, quiver, order, system, args)
    res.extend(args.degree)
    dual = res.dual_tables(args.degree)
    tables = {}
    for n in sorted(dual):
        entry = []
        for p in sorted(dual[n], key=lambda p: p.skey):
            item = {"gen": quiver.path_str(p),
                    "terms": tensor_json(field, quiver, dual[n][p])}
            if args.latex:
                item["latex"] = tensor_latex(field, quiver, dual[n][p])
            entry.append(item)
        tables[str(n)] = entry
    _emit(_report(args, "dualize", doc, {"dual_differentials": tables},
                  started))
    return 0


def cmd_cy_check(args, started):
    if args.example not in (None, "down-up"):
        raise InputError("cy-check applies to the down-up family")
    report = down_up_cy_check(args.alpha, args.beta, args.gamma,
                              length_cap=_cap(args), fuel=args.fuel)
    doc = document_for_example(build_example(
        "down-up", **{k: v for k, v in (("alpha", args.alpha),
                                        ("beta", args.beta),
                                        ("gamma", args.gamma))
                      if v is not None}))
    _emit(_report(args, "cy-check", doc, report, started))
    return 0 if report["diagram_commutes"] else _EXIT_VERIFY


def cmd_example(args, started):
    if not args.example_name:
        raise InputError("example needs a name")
    args.example = args.example_name
    ex = build_example(args.example, **_example_params(args))
    doc = document_for_example(ex)
    payload = {"document": doc}
    code = 0
    if args.self_test:
        from .selftest import run_self_test
        results = run_self_test(args.example, _example_params(args),
                                length_cap=_cap(args), fuel=args.fuel)
        payload["self_test"] = results
        code = 0 if all(results.values()) else _EXIT_VERIFY
    _emit(_report(args, "example", doc, payload, started))
    return code


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pathalg",
        description="Rewriting, completion and bimodule resolutions over "
                    "path algebras")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in (("complete", cmd_complete), ("chains", cmd_chains),
                     ("basis", cmd_basis), ("resolve", cmd_resolve),
                     ("verify", cmd_verify), ("dualize", cmd_dualize),
                     ("cy-check", cmd_cy_check)):
        p = sub.add_parser(name)
        _add_common(p)
        p.set_defaults(func=fn)
    pex = sub.add_parser("example")
    pex.add_argument("example_name", choices=EXAMPLE_NAMES)
    _add_common(pex)
    pex.set_defaults(func=cmd_example)
    return parser


def run(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.time()
    try:
        return args.func(args, started)
    except (CapExceeded, FuelExhausted) as exc:
        print(f"pathalg: {exc}", file=sys.stderr)
        return _EXIT_CAP
    except (InputError, DiamondUnverified) as exc:
        print(f"pathalg: {exc}", file=sys.stderr)
        return _EXIT_INPUT
    except PathAlgError as exc:
        print(f"pathalg: {exc}", file=sys.stderr)
        return _EXIT_VERIFY
    except OSError as exc:
        print(f"pathalg: {exc}", file=sys.stderr)
        return _EXIT_INPUT


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
