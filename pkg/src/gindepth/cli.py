"""Command-line front end: ``gindepth <command> FILE [flags]``.

Exit codes: 0 success, 2 obstructed or failed-criterion verdict, 1 error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from .criteria import (
    artinian_section,
    codim_from_pure_powers,
    prime_obstruction_scan,
    section_depth_pipeline,
)
from .errors import GinDepthError
from .field import field_from_spec
from .groebner import gin, reduced_basis_and_initial
from .hilbert import format_poly, series_of_monomial_quotient
from .identities import verify_monomial_ideal, verify_polynomial_ideal
from .monomial import desc_key
from .monomial_ideal import is_borel_type, is_borel_type_by_colons
from .parse import parse_ideal

COMMANDS = ("hilbert", "in", "gin", "borel", "obstruct", "depth", "section", "verify")
EXIT_OK, EXIT_ERROR, EXIT_VERDICT = 0, 1, 2

CHAR0_CAVEAT = "regularity uses a characteristic-zero formula; over F_p it is heuristic"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _gens(J) -> list[str]:
    # lowest degree first, grevlex-descending within a degree
    gens = sorted(J.gens, key=lambda m: (m.degree, desc_key(m.exponents)))
    return [str(m) for m in gens]


def _series_dict(hs) -> dict:
    upto = max(len(hs.reduced) - 1, 0)
    return {
        "numerator": list(hs.numerator),
        "q": list(hs.reduced),
        "q_text": format_poly(hs.reduced),
        "dim": hs.dim,
        "e": list(hs.coefficients(upto).values) if hs.dim >= 0 else [],
        "multiplicity": hs.multiplicity,
    }


def _monomial_or_initial(ideal_file):
    if ideal_file.is_monomial:
        return ideal_file.monomial_ideal()
    return reduced_basis_and_initial(ideal_file.ideal)[1]


def cmd_hilbert(f, args, warnings):
    J = _monomial_or_initial(f)
    return {"initial_ideal": _gens(J), **_series_dict(series_of_monomial_quotient(J))}, True


def cmd_in(f, args, warnings):
    G, J = reduced_basis_and_initial(f.ideal)
    return {"groebner_basis": [str(g) for g in G], "initial_ideal": _gens(J)}, True


def cmd_gin(f, args, warnings):
    g = gin(f.ideal, trials=args.trials, seed=args.seed)
    if not g.agreed:
        warnings.append("gin trials disagreed; majority value used")
    if not g.borel:
        warnings.append("gin sample is not of Borel type; bad sample, re-seed")
    return {
        "gin": _gens(g.gin),
        "agreed": g.agreed,
        "borel": g.borel,
        "seeds": list(g.seeds),
        "votes": list(g.votes),
    }, True


def cmd_borel(f, args, warnings):
    J = f.monomial_ideal()
    ok = is_borel_type(J)
    return {"borel_type": ok, "colon_characterization": is_borel_type_by_colons(J)}, ok


def _rcheck_dict(c) -> dict:
    return {
        "r": c.r,
        "hypothesis_holds": c.hypothesis_holds,
        "u": str(c.u) if c.u is not None else None,
        "conclusion1": c.conclusion1,
        "conclusion2": c.conclusion2,
        "conclusion3": c.conclusion3,
        "extra_generators": [str(m) for m in c.extra_generators],
        "violated": c.violated,
        "reason": c.reason,
    }


def cmd_obstruct(f, args, warnings):
    rep = prime_obstruction_scan(f.monomial_ideal())
    warnings.append("primality of the input is not checked")
    return {
        "borel_type": rep.borel,
        "verdict": rep.verdict,
        "obstructed_at": rep.obstructed_at,
        "reason": rep.reason,
        "checks": [_rcheck_dict(c) for c in rep.checks],
    }, rep.consistent


def _depth_dict(rep) -> dict:
    return {
        "s": rep.s,
        "r": rep.r,
        "d": rep.d,
        "gin": _gens(rep.gin),
        "gin_seeds": list(rep.gin_seeds),
        "section_initial": _gens(rep.section_initial),
        "e_P": list(rep.e_P),
        "e_Ps": list(rep.e_Ps),
        "part1_holds": rep.part1_holds,
        "criterion_triggered": rep.criterion_triggered,
        "depth_claim": rep.depth_claim,
        "gin_depth_crosscheck": rep.gin_depth_crosscheck,
        "regularity": rep.regularity,
        "warnings": list(rep.warnings),
    }


def cmd_depth(f, args, warnings):
    P = f.ideal
    if args.s is not None:
        reports = [section_depth_pipeline(P, args.s, seed=args.seed, trials=args.trials)]
    else:
        J = gin(P, trials=args.trials, seed=args.seed).gin
        d = P.n - codim_from_pure_powers(J)
        reports = [section_depth_pipeline(P, s, seed=args.seed, trials=args.trials)
                   for s in range(1, d + 1)]
    if f.field.is_prime_field:
        warnings.append(CHAR0_CAVEAT)
    warnings.append("primality of the input is not checked")
    claims = [r.depth_claim for r in reports if r.depth_claim is not None]
    return {
        "reports": [_depth_dict(r) for r in reports],
        "depth_claim": claims[0] if claims else None,
        "gin_depth": reports[0].gin_depth_crosscheck if reports else None,
    }, all(r.ok for r in reports)


def cmd_section(f, args, warnings):
    rep = artinian_section(f.monomial_ideal())
    return {
        "c": rep.c,
        "d": rep.d,
        "deg_SJ": rep.deg_SJ,
        "deg_artinian": rep.deg_artinian,
        "rank": rep.rank,
        "jump_is_one": rep.jump_is_one,
        "generators_in_c_plus_1_vars": rep.generators_in_c_plus_1_vars,
        "x_c_plus_1_occurs": rep.x_c_plus_1_occurs,
        "depth": rep.depth,
        "almost_cm_claim": rep.almost_cm_claim,
        "violations": list(rep.violations),
    }, not rep.violations


def cmd_verify(f, args, warnings):
    if f.is_monomial:
        checks = verify_monomial_ideal(f.monomial_ideal())
    else:
        checks = verify_polynomial_ideal(f.ideal, seed=args.seed, trials=args.trials)
    rows = [
        {
            "name": c.name,
            "params": dict(sorted(c.params.items())),
            "holds": c.holds,
            "lhs": _gens(c.lhs) if c.lhs is not None else None,
            "rhs": _gens(c.rhs) if c.rhs is not None else None,
            "detail": c.detail,
        }
        for c in checks
    ]
    ok = all(c.holds for c in checks)
    return {"checks": rows, "all_hold": ok}, ok


HANDLERS = {
    "hilbert": cmd_hilbert,
    "in": cmd_in,
    "gin": cmd_gin,
    "borel": cmd_borel,
    "obstruct": cmd_obstruct,
    "depth": cmd_depth,
    "section": cmd_section,
    "verify": cmd_verify,
}


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("file", help="ideal file ('-' reads stdin)")
    common.add_argument("--field", default="p:32003", help="q or p:<prime> (default p:32003)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=3)
    common.add_argument("--json", action="store_true", help="emit a JSON document")

    parser = _Parser(prog="gindepth", description="Generic initial ideals, Hilbert series and depth tests.")
    parser.add_argument("--version", action="version", version=f"gindepth {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "depth":
            p.add_argument("--s", type=int, default=None, help="number of hyperplanes")
    return parser


def run(argv, stdin_text: str | None = None) -> tuple[dict, int]:
    """Parse argv, run the command and return (report, exit code)."""
    return execute(build_parser().parse_args(argv), stdin_text)


def execute(args, stdin_text: str | None = None) -> tuple[dict, int]:
    field = field_from_spec(args.field)
    if args.file == "-":
        text = stdin_text if stdin_text is not None else sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    f = parse_ideal(text, field)
    warnings: list[str] = []
    result, ok = HANDLERS[args.command](f, args, warnings)
    report = {
        "command": args.command,
        "input_digest": hashlib.sha256(text.encode("utf-8")).hexdigest(),
        "ring": f.n,
        "field": field.spec,
        "seed": args.seed,
        "trials": args.trials,
        "result": result,
        "warnings": warnings,
    }
    return report, EXIT_OK if ok else EXIT_VERDICT


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return ", ".join(_cell(x) for x in v) if v else "(none)"
    if isinstance(v, dict):
        return " ".join(f"{k}={_cell(x)}" for k, x in sorted(v.items()))
    return str(v)


def _table(rows: list[dict]) -> list[str]:
    cols = list(dict.fromkeys(k for r in rows for k in r))
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    out = [fmt.format(*cols), fmt.format(*("-" * w for w in widths))]
    out.extend(fmt.format(*row) for row in cells)
    return ["  " + line.rstrip() for line in out]


def to_text(report: dict) -> str:
    lines = [f"{k:<13} {_cell(report[k])}" for k in
             ("command", "ring", "field", "seed", "trials", "input_digest")]
    lines.append("")
    result = report["result"]
    width = max((len(k) for k in result), default=0)
    for k in sorted(result):
        v = result[k]
        if isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{k}:")
            lines.extend(_table(v))
        else:
            lines.append(f"{k:<{width}}  {_cell(v)}")
    if report["warnings"]:
        lines.append("")
        lines.extend(f"warning: {w}" for w in report["warnings"])
    return "\n".join(lines)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
        report, code = execute(args)
    except UsageError as exc:
        print(f"gindepth: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (GinDepthError, ValueError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(to_json(report) if args.json else to_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
