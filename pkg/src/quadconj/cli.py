"""Command-line front end.

Every command prints one JSON document (``--json``, the default) or a short
human-readable summary (``--pretty``). Exact rationals are written as strings
such as ``"-3/2"``; residues mod p as their least non-negative representative.

Exit codes: 0 success, 1 user error (bad input or flags), 2 internal error.
With ``--batch`` each line of stdin is run as a separate command line and one
JSON document is printed per line; the exit code is the largest seen.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from fractions import Fraction

from . import census as census_mod
from .exactnum import GF, QQ, Mod, QuadExt
from .normalform import are_conjugate, classify
from .parser import ParseError, format_map, format_moebius, parse_map
from .ratmap import DegenerateMapError

SCHEMA = 1

EXIT_OK = 0
EXIT_USER = 1
EXIT_INTERNAL = 2


class UserError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UserError(message)


def jsonable(x, field=QQ):
    """Convert library values to JSON-safe data, keeping numbers exact."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction, Mod)):
        return str(x.v) if isinstance(x, Mod) else field.to_str(field(x))
    if isinstance(x, QuadExt):
        return {"x": jsonable(x.x, field), "y": jsonable(x.y, field), "d": jsonable(x.d, field)}
    if isinstance(x, dict):
        return {str(k): jsonable(v, field) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v, field) for v in x]
    return str(x)


def _field(args):
    if args.field == "q":
        if args.p is not None:
            raise UserError("--p is only meaningful with --field fp")
        return QQ
    if args.p is None:
        raise UserError("--field fp requires --p <prime>")
    if args.p <= 3 or any(args.p % q == 0 for q in range(2, int(args.p**0.5) + 1)):
        raise UserError(f"--p must be a prime > 3, got {args.p}")
    return GF(args.p)


def _field_name(F):
    return "Q" if F == QQ else f"F_{F.p}"


def _witness(h, F):
    if h is None:
        return None
    return {"matrix": jsonable(list(h.entries), F), "map": format_moebius(h)}


def _doc(command, F, inputs):
    return {"schema": SCHEMA, "command": command, "field": _field_name(F), "inputs": inputs, "errors": []}


def _parse_all(texts, F):
    maps = []
    for text in texts:
        try:
            maps.append(parse_map(text, F))
        except ParseError as e:
            raise UserError(f"{e.message} at position {e.position}\n  {text}\n  {' ' * e.position}^") from None
        except DegenerateMapError as e:
            raise UserError(f"{e} in {text!r}") from None
    return maps


def _classification_fields(c, F, witness):
    out = {
        "sigma": jsonable(list(c.sigma.as_tuple()), F),
        "aut_class": str(c.aut_class),
        "normal_form": {
            "case": c.normal_form.case,
            "params": jsonable(c.normal_form.params(), F),
            "map": format_map(c.normal_form.to_map(F)),
        },
    }
    if witness:
        out["witness"] = _witness(c.witness, F)
    return out


def cmd_invariants(args, F):
    (phi,) = _parse_all([args.map], F)
    from .moduli import sigma_invariants

    doc = _doc("invariants", F, [format_map(phi)])
    doc["sigma"] = jsonable(list(sigma_invariants(phi).as_tuple()), F)
    return doc


def cmd_classify(args, F):
    (phi,) = _parse_all([args.map], F)
    doc = _doc("classify", F, [format_map(phi)])
    doc.update(_classification_fields(classify(phi, trivial_witness=args.witness), F, args.witness))
    return doc


def cmd_normalize(args, F):
    (phi,) = _parse_all([args.map], F)
    doc = _doc("normalize", F, [format_map(phi)])
    doc.update(_classification_fields(classify(phi, trivial_witness=True), F, True))
    return doc


def cmd_same_class(args, F):
    phi, psi = _parse_all([args.map1, args.map2], F)
    doc = _doc("same-class", F, [format_map(phi), format_map(psi)])
    dec = are_conjugate(phi, psi, witness=args.witness)
    doc["conjugate"] = dec.conjugate
    doc["geometric"] = dec.geometric
    doc["certificate"] = jsonable(dec.certificate, F)
    if args.witness:
        doc["witness"] = _witness(dec.witness, F)
    return doc


def _primes(lo, hi):
    return [n for n in range(lo, hi + 1) if n > 3 and all(n % q for q in range(2, int(n**0.5) + 1))]


def cmd_census(args, F):
    if args.p is not None and args.max_p is not None:
        raise UserError("give either --p or --max-p, not both")
    if args.p is not None:
        primes = [args.p]
    elif args.max_p is not None:
        primes = _primes(5, args.max_p)
    else:
        primes = [5, 7, 11]
    if not primes:
        raise UserError("no primes > 3 in range")
    reports = []
    for p in primes:
        try:
            reports.append(census_mod.crosscheck(p, jobs=args.jobs, allow_large=args.allow_large))
        except ValueError as e:
            raise UserError(str(e)) from None
    doc = {"schema": SCHEMA, "command": "census", "errors": [], "reports": []}
    for r in reports:
        d = json.loads(r.to_json())
        d["mismatches"] = jsonable(d["mismatches"])
        doc["reports"].append(d)
    doc["table"] = census_mod.format_table(reports)
    return doc


def cmd_selftest(args, F):
    from .fixtures import run_fixtures

    results = run_fixtures()
    doc = {"schema": SCHEMA, "command": "selftest", "errors": [], "results": results}
    doc["passed"] = all(r["ok"] for r in results)
    return doc


COMMANDS = {
    "invariants": cmd_invariants,
    "classify": cmd_classify,
    "normalize": cmd_normalize,
    "same-class": cmd_same_class,
    "census": cmd_census,
    "selftest": cmd_selftest,
}


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--field", choices=["q", "fp"], default="q")
    common.add_argument("--p", type=int, default=None)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="pretty", action="store_false", default=False)
    out.add_argument("--pretty", dest="pretty", action="store_true")

    ap = _Parser(prog="quadconj", description="Classify quadratic rational maps up to conjugacy.")
    ap.add_argument("--batch", action="store_true", help="read one command per line from stdin")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    p = sub.add_parser("invariants", parents=[common], help="multiplier invariants (sigma1, sigma2)")
    p.add_argument("map")
    p = sub.add_parser("classify", parents=[common], help="automorphism class and normal form")
    p.add_argument("map")
    p.add_argument("--witness", action="store_true")
    p = sub.add_parser("normalize", parents=[common], help="normal form with conjugating map")
    p.add_argument("map")
    p = sub.add_parser("same-class", parents=[common], help="decide conjugacy of two maps")
    p.add_argument("map1")
    p.add_argument("map2")
    p.add_argument("--witness", action="store_true")
    p = sub.add_parser("census", help="brute-force orbit census over small prime fields")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--max-p", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-large", action="store_true", help=argparse.SUPPRESS)
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", dest="pretty", action="store_false", default=False)
    out.add_argument("--pretty", dest="pretty", action="store_true")
    p = sub.add_parser("selftest", help="run the built-in fixture suite")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", dest="pretty", action="store_false", default=False)
    out.add_argument("--pretty", dest="pretty", action="store_true")
    return ap


def _pretty(doc) -> str:
    cmd = doc.get("command")
    if doc.get("errors"):
        return "error: " + "; ".join(doc["errors"])
    if cmd == "census":
        return doc["table"]
    if cmd == "selftest":
        lines = [f"{'ok  ' if r['ok'] else 'FAIL'} {r['name']}" for r in doc["results"]]
        return "\n".join(lines + [f"passed: {doc['passed']}"])
    lines = []
    for key in ("inputs", "sigma", "aut_class", "normal_form", "conjugate", "geometric", "witness", "certificate"):
        if key in doc:
            lines.append(f"{key}: {json.dumps(doc[key]) if not isinstance(doc[key], str) else doc[key]}")
    return "\n".join(lines)


def run(argv, stdout=None, stderr=None, stdin=None) -> int:
    """Run one command line; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    pretty = "--pretty" in argv
    try:
        args = build_parser().parse_args(argv)
        if args.batch:
            return _batch(stdin or sys.stdin, stdout, stderr)
        if args.command is None:
            raise UserError("missing command (one of: " + ", ".join(COMMANDS) + ")")
        F = _field(args) if args.command not in ("census", "selftest") else QQ
        doc = COMMANDS[args.command](args, F)
        code = EXIT_OK
        if args.command == "census" and any(r["mismatches"] for r in doc["reports"]):
            code = EXIT_INTERNAL
        if args.command == "selftest" and not doc["passed"]:
            code = EXIT_INTERNAL
    except UserError as e:
        print(f"quadconj: {e}", file=stderr)
        msg = str(e).split("\n")[0]
        doc, code = {"schema": SCHEMA, "command": argv[0] if argv else None, "errors": [msg]}, EXIT_USER
    except Exception as e:  # anything else is a bug in the library
        print(f"quadconj: internal error: {e}", file=stderr)
        doc, code = {"schema": SCHEMA, "command": argv[0] if argv else None, "errors": [f"internal: {e}"]}, EXIT_INTERNAL
    print(_pretty(doc) if pretty else json.dumps(doc, sort_keys=True), file=stdout)
    return code


def _batch(lines, stdout, stderr) -> int:
    worst = EXIT_OK
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            argv = shlex.split(line)
        except ValueError as e:
            print(f"quadconj: {e}", file=stderr)
            worst = max(worst, EXIT_USER)
            continue
        if "--batch" in argv:
            print("quadconj: --batch cannot be nested", file=stderr)
            worst = max(worst, EXIT_USER)
            continue
        worst = max(worst, run(argv, stdout, stderr))
    return worst


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
