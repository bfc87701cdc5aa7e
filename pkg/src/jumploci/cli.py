"""Command-line front end.

    jumploci build SPEC
    jumploci query SPEC --rho RHO -i I [-r R]
    jumploci verify SPEC (--auto | --chars CHARS) [--complex FILE]
    jumploci group-verify SPEC (--auto | --chars CHARS)
    jumploci ps-check SPEC (--auto | --chars CHARS) [-l L]
    jumploci obstruct SPEC [--points CHARS]

SPEC and CHARS are file paths or inline JSON. Every payload goes to stdout (or
--output) as sorted-key JSON; diagnostics go to stderr as one JSON line.

Exit codes: 0 success (or verification passed), 1 verification failed,
2 malformed input, 3 invariant violation, 4 float character where exact
arithmetic is required.
"""
import argparse
import json
import sys

from .chain import EquivariantComplex, validate
from .construction import SpaceSpec, build_space
from .errors import InvariantViolation, UnsupportedRepresentation
from .groups import build_group
from .laurent import LaurentPoly
from .loci import ps_check, sigma_dim, space_dims, verify_group, verify_main
from .obstruction import obstruction_verdict
from .samplers import auto_characters, dedupe
from .scalars import Character, Scalar

EXIT_FAIL, EXIT_INPUT, EXIT_INVARIANT, EXIT_FLOAT = 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code, kind, message):
        super().__init__(message)
        self.code, self.kind = code, kind


def _load_json(text_or_path, what):
    text = text_or_path
    if not text_or_path.lstrip().startswith(("{", "[")):
        try:
            with open(text_or_path) as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(EXIT_INPUT, "io", f"cannot read {what} {text_or_path!r}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_INPUT, "malformed-json", f"{what}: {exc}") from None


def parse_target(obj):
    """(n, k, polys) from spec JSON; k = 1 means the group construction."""
    if not isinstance(obj, dict):
        raise CliError(EXIT_INPUT, "invalid-spec", "spec must be a JSON object")
    n, k = obj.get("n"), obj.get("k", 1)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise CliError(EXIT_INPUT, "invalid-spec", f"n must be a positive integer, got {n!r}")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise CliError(EXIT_INPUT, "invalid-spec", f"k must be a positive integer, got {k!r}")
    raw = obj.get("polys", [])
    if not isinstance(raw, list):
        raise CliError(EXIT_INPUT, "invalid-spec", "polys must be a list")
    try:
        polys = tuple(LaurentPoly.from_json(f, n) for f in raw)
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(EXIT_INPUT, "invalid-spec", f"bad polynomial: {exc}") from None
    return n, k, polys


def _characters(args, n, polys):
    chars = []
    if args.auto:
        chars += auto_characters(n, polys, seed=args.seed)
    if args.chars:
        raw = _load_json(args.chars, "characters")
        if not isinstance(raw, list):
            raise CliError(EXIT_INPUT, "invalid-characters", "characters must be a JSON list")
        chars += [_parse_character(c, n) for c in raw]
    if not chars:
        raise CliError(EXIT_INPUT, "invalid-characters", "no characters: pass --auto or --chars")
    return dedupe(chars)


def _parse_character(obj, n):
    try:
        rho = Character.from_json(obj)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise CliError(EXIT_INPUT, "invalid-characters", f"bad character {obj!r}: {exc}") from None
    if rho.n != n:
        raise CliError(EXIT_INPUT, "invalid-characters", f"character {obj!r} has {rho.n} coordinates, expected {n}")
    return rho


def _require_exact(chars, args):
    if args.float:
        raise CliError(EXIT_FLOAT, "float-character", f"{args.command} is exact-only; drop --float")
    for rho in chars:
        if not rho.is_exact:
            raise CliError(EXIT_FLOAT, "float-character", f"float character {rho!r} where exact arithmetic is required")


def cmd_build(args):
    n, k, polys = parse_target(_load_json(args.spec, "spec"))
    if k == 1:
        return build_group(n, polys).to_json(), 0
    C = build_space(SpaceSpec(n, k, polys))
    bad = validate(C)
    if bad is not None:
        raise CliError(EXIT_INVARIANT, "invariant-violation", str(bad))
    return C.to_json(), 0


def cmd_query(args):
    n, k, polys = parse_target(_load_json(args.spec, "spec"))
    rho = _parse_character(_load_json(args.rho, "character"), n)
    if args.float:
        rho = Character([Scalar.from_complex(c.to_complex()) for c in rho])
    if args.r < 1:
        raise CliError(EXIT_INPUT, "invalid-query", "r must be >= 1")
    target = build_group(n, polys) if k == 1 else SpaceSpec(n, k, polys)
    try:
        dim = sigma_dim(target, rho, args.i)
    except ValueError as exc:
        raise CliError(EXIT_INPUT, "invalid-query", str(exc)) from None
    payload = {"member": dim >= args.r, "dim": dim, "degree": args.i, "r": args.r, "character": rho.to_json()}
    if not rho.is_exact:
        payload["exploratory_float"] = True
    return payload, 0


def _load_complex(path):
    try:
        C = EquivariantComplex.from_json(_load_json(path, "complex"))
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(EXIT_INPUT, "invalid-complex", str(exc)) from None
    return C


def cmd_verify(args):
    n, k, polys = parse_target(_load_json(args.spec, "spec"))
    if k == 1:
        return cmd_group_verify(args)
    chars = _characters(args, n, polys)
    _require_exact(chars, args)
    spec = SpaceSpec(n, k, polys)
    C = _load_complex(args.complex) if args.complex else None
    try:
        report = verify_main(spec, chars, complex_=C, jobs=args.jobs)
    except InvariantViolation as exc:
        raise CliError(EXIT_INVARIANT, "invariant-violation", str(exc)) from None
    return report.to_json(), 0 if report.passed else EXIT_FAIL


def cmd_group_verify(args):
    n, _, polys = parse_target(_load_json(args.spec, "spec"))
    chars = _characters(args, n, polys)
    _require_exact(chars, args)
    report = verify_group(n, polys, chars, jobs=args.jobs)
    return report.to_json(), 0 if report.passed else EXIT_FAIL


def cmd_ps_check(args):
    n, k, polys = parse_target(_load_json(args.spec, "spec"))
    if k < 2:
        raise CliError(EXIT_INPUT, "invalid-spec", "ps-check needs a space spec with k >= 2")
    chars = _characters(args, n, polys)
    _require_exact(chars, args)
    spec = SpaceSpec(n, k, polys)
    if args.l is not None and not 0 <= args.l <= k:
        raise CliError(EXIT_INPUT, "unsupported-degree", f"l must lie in 0..{k}")
    levels = [args.l] if args.l is not None else list(range(k + 1))
    records = []
    for rho in chars:
        dims = space_dims(spec, rho)
        for l in levels:
            records.append({"character": rho.to_json(), "l": l, "dims": list(dims), "pass": ps_check(spec, rho, l)})
    ok = all(r["pass"] for r in records)
    return {"verdict": "pass" if ok else "fail", "records": records}, 0 if ok else EXIT_FAIL


def cmd_obstruct(args):
    n, _, polys = parse_target(_load_json(args.spec, "spec"))
    points = None
    if args.points:
        raw = _load_json(args.points, "points")
        points = [_parse_character(c, n) for c in raw]
    try:
        verdict = obstruction_verdict(n, polys, claimed_points=points)
    except UnsupportedRepresentation as exc:
        raise CliError(EXIT_FLOAT, "float-character", str(exc)) from None
    return verdict.to_json(), 0


COMMANDS = {
    "build": cmd_build,
    "query": cmd_query,
    "verify": cmd_verify,
    "group-verify": cmd_group_verify,
    "ps-check": cmd_ps_check,
    "obstruct": cmd_obstruct,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact arithmetic (default)")
    mode.add_argument("--float", action="store_true", help="float-complex characters; exploratory queries only")
    common.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes for character batches")
    common.add_argument("--output", metavar="PATH", help="write the JSON payload here instead of stdout")

    chars = argparse.ArgumentParser(add_help=False)
    chars.add_argument("--chars", metavar="CHARS", help="JSON list of characters (file or inline)")
    chars.add_argument("--auto", action="store_true", help="sample characters on and off the locus")
    chars.add_argument("--seed", type=int, default=0, help="seed for --auto sampling")

    parser = argparse.ArgumentParser(prog="jumploci", description="Cohomology jump loci of the M(n, k; f) spaces and groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="emit the equivariant complex (k >= 2) or presentation (k = 1)")
    p.add_argument("spec")

    p = sub.add_parser("query", parents=[common], help="dim H^i and membership in Sigma^i_r at one character")
    p.add_argument("spec")
    p.add_argument("--rho", required=True, help="character JSON")
    p.add_argument("-i", type=int, required=True, help="cohomological degree")
    p.add_argument("-r", type=int, default=1, help="rank threshold")

    p = sub.add_parser("verify", parents=[common, chars], help="check the jump loci against Z at many characters")
    p.add_argument("spec")
    p.add_argument("--complex", metavar="FILE", help="use this complex instead of the built one")

    p = sub.add_parser("group-verify", parents=[common, chars], help="check Sigma^1 of the presented group")
    p.add_argument("spec")

    p = sub.add_parser("ps-check", parents=[common, chars], help="pointwise union identity of Sigma and V loci")
    p.add_argument("spec")
    p.add_argument("-l", type=int, default=None, help="top degree of the union (default: every l <= k)")

    p = sub.add_parser("obstruct", parents=[common], help="is Z a union of torsion-translated subtori?")
    p.add_argument("spec")
    p.add_argument("--points", metavar="CHARS", help="characters claimed to exhaust a finite Z (n >= 2)")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        payload, code = COMMANDS[args.command](args)
    except CliError as exc:
        print(json.dumps({"error": exc.kind, "message": str(exc)}, sort_keys=True), file=sys.stderr)
        return exc.code
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
