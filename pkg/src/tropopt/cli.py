"""Command-line front end.

Usage::

    tropopt solve      --input problem.json [--semifield TAG] [--show-permutation]
    tropopt eval       --input problem_with_x.json
    tropopt spectral   --input matrix.json [--show-permutation]
    tropopt star       --input matrix.json
    tropopt solve-ineq --input ineq.json --kind upper|fixed
    tropopt verify     --input problem.json [--verify-grid LO HI STEP]

Results go to stdout as JSON, diagnostics to stderr. Exit codes: 0 success,
1 usage or I/O error, 2 ill-posed problem, 3 malformed input, 4 no regular
solution.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    CostGuard,
    DimensionError,
    DomainError,
    IllPosed,
    MalformedInput,
    NoRegularSolution,
)
from .inequalities import solve_fixed, solve_upper
from .linalg import bounded_star
from .oracle import GridSpec, grid_minimize
from .serialization import (
    dumps,
    encode_scalar,
    loads,
    matrix_from_json,
    matrix_to_json,
    resolve_tag,
    vector_from_json,
    vector_to_json,
)
from .solver import Problem, objective, solve
from .spectral import spectral_radius
from .structure import normal_form

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ILL_POSED = 2
EXIT_MALFORMED = 3
EXIT_NO_REGULAR = 4

VERBS = ("solve", "eval", "spectral", "star", "solve-ineq", "verify")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(prog="tropopt", description="Tropical linear algebra and extremal problems.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb in VERBS:
        sp = sub.add_parser(verb)
        sp.add_argument("--input", required=True, metavar="PATH", help="JSON input file ('-' for stdin)")
        sp.add_argument("--semifield", metavar="TAG", help="reject inputs tagged with another semifield")
        sp.add_argument("--show-permutation", action="store_true", help="include normal-form data")
        if verb == "solve-ineq":
            sp.add_argument("--kind", choices=("upper", "fixed"), required=True)
        if verb == "verify":
            sp.add_argument("--verify-grid", nargs=3, type=float, metavar=("LO", "HI", "STEP"),
                            default=(-5.0, 5.0, 0.25))
    return parser


def _read(path):
    if path == "-":
        return loads(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _tag(doc, override):
    inner = doc.get("tag") if isinstance(doc, dict) else None
    return resolve_tag(inner, override)


def _matrix(doc, override):
    if isinstance(doc, dict) and "data" not in doc:
        if "A" not in doc:
            raise MalformedInput("expected a matrix object or an object with key 'A'")
        return matrix_from_json(doc["A"], _tag(doc, override))
    if isinstance(doc, dict):
        return matrix_from_json(doc, resolve_tag(doc.get("tag"), override))
    return matrix_from_json(doc, resolve_tag(override))


def _problem(doc, override):
    if not isinstance(doc, dict):
        raise MalformedInput("problem must be a JSON object")
    missing = [k for k in ("A", "p", "q") if k not in doc]
    if missing:
        raise MalformedInput(f"problem lacks keys {missing}")
    A, sf = matrix_from_json(doc["A"], _tag(doc, override))
    p = vector_from_json(doc["p"], sf)
    q = vector_from_json(doc["q"], sf)
    try:
        return Problem(A, p, q, sf)
    except (DomainError, DimensionError) as exc:
        raise MalformedInput(str(exc)) from None


def _normal_form_json(A, sf):
    return normal_form(A, sf).to_dict()


def cmd_solve(args, doc):
    P = _problem(doc, args.semifield)
    sf = P.semifield
    S = solve(P)
    J = list(S.upper_support)
    out = {
        "tag": sf.name,
        "mu": encode_scalar(S.mu, sf),
        "lambda": encode_scalar(S.lam, sf),
        "delta": encode_scalar(S.delta, sf),
        "coupling": encode_scalar(S.coupling, sf),
        "B": matrix_to_json(S.B, sf),
        "lower": vector_to_json(S.lower, sf),
        "upper": {"support": J, "values": vector_to_json(S.upper[J], sf)},
    }
    if args.show_permutation:
        out["normal_form"] = _normal_form_json(P.A, sf)
    return out


def cmd_eval(args, doc):
    P = _problem(doc, args.semifield)
    if "x" not in doc:
        raise MalformedInput("eval needs key 'x'")
    x = vector_from_json(doc["x"], P.semifield)
    return {"tag": P.semifield.name, "value": encode_scalar(objective(P, x), P.semifield)}


def cmd_spectral(args, doc):
    A, sf = _matrix(doc, args.semifield)
    res = spectral_radius(A, sf)
    out = {
        "tag": sf.name,
        "lambda": encode_scalar(res.radius, sf),
        "blocks": [
            {"block": i, "lambda": encode_scalar(v, sf), "indices": list(idx)}
            for i, v, idx in res.blocks
        ],
    }
    if args.show_permutation:
        out["normal_form"] = _normal_form_json(A, sf)
    return out


def cmd_star(args, doc):
    A, sf = _matrix(doc, args.semifield)
    if A.shape[0] != A.shape[1]:
        raise MalformedInput("star needs a square matrix")
    return matrix_to_json(bounded_star(A, sf), sf)


def cmd_solve_ineq(args, doc):
    if not isinstance(doc, dict) or "A" not in doc:
        raise MalformedInput("inequality input must be an object with key 'A'")
    A, sf = matrix_from_json(doc["A"], _tag(doc, args.semifield))
    if args.kind == "upper":
        if "d" not in doc:
            raise MalformedInput("upper inequality needs key 'd'")
        sol = solve_upper(A, vector_from_json(doc["d"], sf), sf)
        return {"tag": sf.name, "bound": vector_to_json(sol.bound, sf), "free": list(sol.free)}
    if "b" not in doc:
        raise MalformedInput("fixed-point inequality needs key 'b'")
    sol = solve_fixed(A, vector_from_json(doc["b"], sf), sf)
    out = {"tag": sf.name, "generator": matrix_to_json(sol.generator, sf),
           "lower": vector_to_json(sol.lower, sf)}
    if args.show_permutation:
        out["normal_form"] = _normal_form_json(A, sf)
    return out


def cmd_verify(args, doc):
    P = _problem(doc, args.semifield)
    sf = P.semifield
    S = solve(P)
    lo, hi, step = args.verify_grid
    value, argmin = grid_minimize(P, GridSpec(lo, hi, step, P.n))
    gap = value - S.mu if sf.maximizing else S.mu - value
    return {
        "tag": sf.name,
        "mu": encode_scalar(S.mu, sf),
        "grid_value": encode_scalar(value, sf),
        "gap": encode_scalar(gap, "max-plus"),
        "argmin": vector_to_json(argmin, sf),
        "grid": {"lo": lo, "hi": hi, "step": step},
    }


COMMANDS = {
    "solve": cmd_solve,
    "eval": cmd_eval,
    "spectral": cmd_spectral,
    "star": cmd_star,
    "solve-ineq": cmd_solve_ineq,
    "verify": cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def fail(code, msg):
        print(f"tropopt {args.verb}: {msg}", file=sys.stderr)
        return code

    try:
        doc = _read(args.input)
    except OSError as exc:
        return fail(EXIT_USAGE, f"cannot read {args.input}: {exc}")
    except json.JSONDecodeError as exc:
        return fail(EXIT_USAGE, f"invalid JSON in {args.input}: {exc}")
    except MalformedInput as exc:
        return fail(EXIT_MALFORMED, exc)

    try:
        if args.semifield is not None:
            resolve_tag(args.semifield)
        out = COMMANDS[args.verb](args, doc)
    except IllPosed as exc:
        return fail(EXIT_ILL_POSED, exc)
    except NoRegularSolution as exc:
        return fail(EXIT_NO_REGULAR, exc)
    except (MalformedInput, DomainError, DimensionError, CostGuard) as exc:
        return fail(EXIT_MALFORMED, exc)

    sys.stdout.write(dumps(out))
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
