"""Command line front end: ``cyclocat <command> ...``.

Every command has a plain-text form (default) and a JSON form (``--json``).
``batch`` runs a JSON array of requests and writes an array of reports.
Exit codes: 0 success, 1 domain error, 2 usage error or malformed batch file.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .classify import (
    aut_2group,
    count_classes_bruteforce,
    count_classes_formula,
    is_equivalent,
    orbits,
)
from .cocycle import CocycleSpec, omega_exponent, verify_cocycle, verify_normalized
from .diagram import normalize, verify_snake
from .dsl import ast_to_json, elaborate, parse
from .pointed import constant_by_associators, constant_of, verify_pentagon


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, so re-serializing a parsed report is byte-identical."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


# -- commands ----------------------------------------------------------------------
#
# Each command takes a dict of parameters and returns (json_result, text_lines).


def _spec(p) -> CocycleSpec:
    return CocycleSpec(p["n"], p.get("zeta", 1))


def cmd_omega(p):
    spec = _spec(p)
    e = omega_exponent(spec.n, spec.a, p["i"], p["j"], p["k"])
    return {"exponent": e}, [f"theta^{e}"]


def cmd_verify_cocycle(p):
    spec = _spec(p)
    res = {"cocycle": verify_cocycle(spec), "normalized": verify_normalized(spec)}
    return res, [f"cocycle identity: {_yes(res['cocycle'])}", f"normalized: {_yes(res['normalized'])}"]


def cmd_constant(p):
    spec = _spec(p)
    j = p.get("j", 1)
    chain = constant_by_associators(spec, j)
    closed = constant_of(spec, j)
    res = {"exponent": chain.e, "closed_form_exponent": closed.e, "agree": chain == closed}
    return res, [f"theta^{chain.e}"]


def cmd_pentagon(p):
    ok = verify_pentagon(_spec(p))
    return {"pentagon": ok}, [f"pentagon: {_yes(ok)}"]


def cmd_normalize(p):
    spec = _spec(p)
    w = elaborate(parse(p["expr"]), spec, max_atoms=p.get("max_atoms"))
    trace = [] if p.get("trace") else None
    nf = normalize(w, trace=trace, max_atoms=p.get("max_atoms"))
    res = nf.to_json()
    lines = list(trace or [])
    lines.append(f"{nf.scalar} * {nf.shape()} : {nf.dom} -> {nf.cod}")
    if trace is not None:
        res["trace"] = trace
    return res, lines


def cmd_parse(p):
    ast = ast_to_json(parse(p["expr"]))
    return ast, [dumps(ast)]


def cmd_snake(p):
    spec = _spec(p)
    ks = [p["k"]] if p.get("k") is not None else list(range(spec.n))
    for k in ks:
        if not 0 <= k < spec.n:
            raise ValueError(f"k must satisfy 0 <= k < {spec.n}, got {k}")
    results = {str(k): verify_snake(spec, k) for k in ks}
    return {"snake": results, "holds": all(results.values())}, [
        f"k={k}: {_yes(v)}" for k, v in results.items()
    ]


def cmd_equivalent(p):
    ok, j = is_equivalent(p["n"], p["a"], p["b"])
    return {"equivalent": ok, "witness": j}, [f"equivalent (j={j})" if ok else "not equivalent"]


def cmd_count(p):
    n = p["n"]
    c = count_classes_formula(n)
    res = {"n": n, "count": c}
    lines = [str(c)]
    if p.get("oracle"):
        res["bruteforce"] = count_classes_bruteforce(n)
        lines.append(f"bruteforce: {res['bruteforce']}")
        if res["bruteforce"] != c:
            raise ValueError(f"formula {c} disagrees with orbit count {res['bruteforce']}")
    if p.get("explain"):
        orbs = orbits(n)
        res["orbits"] = orbs
        lines += ["orbit: {" + ", ".join(map(str, o)) + "}" for o in orbs]
    return res, lines


def sweep_rows(max_n: int) -> list[dict]:
    return [
        {
            "n": n,
            "c_formula": count_classes_formula(n),
            "c_bruteforce": count_classes_bruteforce(n),
            "pi0_sizes": [len(aut_2group(n, a).pi0) for a in range(n)],
        }
        for n in range(1, max_n + 1)
    ]


def cmd_sweep(p):
    if p["max"] < 1:
        raise ValueError("--max must be at least 1")
    rows = sweep_rows(p["max"])
    out = p.get("out")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(dumps(rows) + "\n")
    lines = [f"n={r['n']} c={r['c_formula']} bruteforce={r['c_bruteforce']}" for r in rows]
    return rows, lines


def cmd_autgroup(p):
    tg = aut_2group(p["n"], p.get("zeta", 1))
    res = tg.to_json()
    res["aut_of_functor_order"] = tg.n
    lines = [
        "pi0 = {" + ", ".join(map(str, tg.pi0)) + "}",
        f"pi1 = Z_{tg.n}",
        f"Aut(F_(X,lambda)) = Z_{tg.n}",
    ]
    if not p.get("explain"):
        del res["nonunit_solutions"]
    elif tg.nonunit_solutions:
        lines.append("non-unit solutions of a*j^2 = a: " + ", ".join(map(str, tg.nonunit_solutions)))
    else:
        lines.append("no non-unit solutions of a*j^2 = a")
    return res, lines


def _yes(b: bool) -> str:
    return "holds" if b else "FAILS"


COMMANDS = {
    "omega": cmd_omega,
    "verify-cocycle": cmd_verify_cocycle,
    "constant": cmd_constant,
    "pentagon": cmd_pentagon,
    "normalize": cmd_normalize,
    "parse": cmd_parse,
    "snake": cmd_snake,
    "equivalent": cmd_equivalent,
    "count": cmd_count,
    "sweep": cmd_sweep,
    "autgroup": cmd_autgroup,
}


# -- batch -------------------------------------------------------------------------


class BatchFormatError(ValueError):
    pass


def load_batch(text: str) -> list[dict]:
    """A batch file is a JSON array of objects ``{"command": name, <params>}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BatchFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(data, list):
        raise BatchFormatError("batch file must contain a JSON array")
    for i, item in enumerate(data):
        if not isinstance(item, dict) or not isinstance(item.get("command"), str):
            raise BatchFormatError(f"item {i} must be an object with a string 'command'")
    return data


def run_request(req: dict) -> dict:
    params = {k.replace("-", "_"): v for k, v in req.items() if k != "command"}
    report = {"request": req, "version": __version__}
    start = time.perf_counter()
    try:
        fn = COMMANDS.get(req["command"])
        if fn is None:
            raise ValueError(f"unknown command {req['command']!r}")
        params.pop("out", None)  # a batch never writes side files
        result, _ = fn(params)
        report.update(ok=True, result=result)
    except KeyError as exc:
        report.update(ok=False, error={"type": "MissingParameter", "message": f"missing {exc.args[0]!r}"})
    except (ValueError, TypeError, ArithmeticError) as exc:
        report.update(ok=False, error={"type": type(exc).__name__, "message": str(exc)})
    report["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return report


def run_batch(requests: list[dict], jobs: int = 1) -> list[dict]:
    """Reports in input order, whatever the completion order."""
    if jobs <= 1:
        return [run_request(r) for r in requests]
    with ThreadPoolExecutor(jobs) as pool:
        return list(pool.map(run_request, requests))


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclocat", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"cyclocat {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help, n=True, zeta=True):
        sp = sub.add_parser(name, help=help)
        if n:
            sp.add_argument("--n", type=int, required=True, help="modulus")
        if zeta:
            sp.add_argument("--zeta", type=int, default=1, metavar="A", help="zeta = theta^A (default 1)")
        sp.add_argument("--json", action="store_true", help="print JSON")
        return sp

    sp = add("omega", "evaluate the cocycle omega(i, j, k)")
    for name in "ijk":
        sp.add_argument(f"--{name}", type=int, required=True)
    add("verify-cocycle", "check the 3-cocycle identity exhaustively")
    sp = add("constant", "constant of delta_j computed from associators")
    sp.add_argument("--j", type=int, default=1)
    add("pentagon", "check the pentagon axiom on simple objects")
    sp = add("normalize", "normal form of a diagram word")
    sp.add_argument("--expr", required=True)
    sp.add_argument("--trace", action="store_true", help="print each rewrite step")
    sp.add_argument("--max-atoms", type=int, default=None)
    sp = add("parse", "dump the syntax tree of a diagram expression", n=False, zeta=False)
    sp.add_argument("--expr", required=True)
    sp = add("snake", "check the zigzag identities")
    sp.add_argument("--k", type=int, default=None, help="check one k (default: all)")
    sp = add("equivalent", "decide equivalence of Vect^{theta^a} and Vect^{theta^b}", zeta=False)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp = add("count", "number of equivalence classes c(n)", zeta=False)
    sp.add_argument("--oracle", action="store_true", help="cross-check by orbit enumeration")
    sp.add_argument("--explain", action="store_true", help="list the orbits")
    sp = add("sweep", "tabulate counts and pi0 sizes for n = 1..max", n=False, zeta=False)
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--out", default=None, help="write the table as JSON to this file")
    sp = add("autgroup", "invariants of the autoequivalence 2-group")
    sp.add_argument("--explain", action="store_true", help="report non-unit solutions")
    sp = sub.add_parser("batch", help="run a JSON array of requests")
    sp.add_argument("file", help="batch file, or - for stdin")
    sp.add_argument("--out", default=None, help="write reports here instead of stdout")
    sp.add_argument("--jobs", type=int, default=1)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "batch":
        return _main_batch(args)
    params = {k: v for k, v in vars(args).items() if k not in ("command", "json")}
    try:
        result, lines = COMMANDS[args.command](params)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(dumps(result))
    else:
        for line in lines:
            print(line)
    return 0


def _main_batch(args) -> int:
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        requests = load_batch(text)
    except (OSError, BatchFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = dumps(run_batch(requests, args.jobs))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
