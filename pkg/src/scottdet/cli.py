"""Command-line front end.

Subcommands: ``verify``, ``expand``, ``phi-table``, ``examples`` and
``selftest``.  Exit codes: 0 success, 1 verification mismatch, 2 degenerate
instance, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInstanceError, UsageError
from .identity import TheoremInstance, verify_theorem
from .poly import format_coeff
from .symfunc import phi, render_monomial_basis, schur_box_spec

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_DEGENERATE = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class CliConfig:
    command: str
    n: int | None = None
    r: int | None = None
    x_values: tuple | None = None
    xi: Fraction | None = None
    backend: str = "exact"
    seed: int = 0
    output: str = "text"
    strict_printed_form: bool = False
    p: int | None = None
    ones: bool = False


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _x_values(text, r):
    if text is None or text == "symbolic":
        return None
    if text == "ones":
        return (Fraction(1),) * r
    return tuple(_rational(part) for part in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="scottdet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def size_args(p, required=True):
        p.add_argument("--n", type=int, required=required, help="matrix order / root-of-unity conductor")
        p.add_argument("--r", type=int, required=required, help="cardinality of x")

    def output_arg(p):
        p.add_argument("--output", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="check the identity on one instance")
    size_args(v)
    v.add_argument("--x", required=True,
                   help='comma-separated rationals p/q, "ones" or "symbolic"')
    v.add_argument("--xi", required=True, help='rational p/q or "symbolic"')
    v.add_argument("--backend", choices=("exact", "float"), default="exact")
    v.add_argument("--strict-printed-form", action="store_true",
                   help="also evaluate det * Delta(y) Delta(z) and report it")
    output_arg(v)

    e = sub.add_parser("expand", help="monomial expansion of the specialized Schur function")
    size_args(e)
    e.add_argument("--p", type=int, required=True, help="last index, 0 <= p <= n-1")
    output_arg(e)

    t = sub.add_parser("phi-table", help="phi_k for k = 0..(n-1)r")
    size_args(t)
    t.add_argument("--ones", action="store_true", help="evaluate at x = (1, ..., 1)")
    output_arg(t)

    sub.add_parser("examples", help="re-derive the worked examples and diff against golden text")

    s = sub.add_parser("selftest", help="seeded randomized property suites")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--backend", choices=("exact", "float"), default="exact")
    return parser


def _join_values(argv):
    # "--xi -2/3" would read -2/3 as an option; glue values to their flag
    out, argv = [], list(argv)
    i = 0
    while i < len(argv):
        if argv[i] in ("--x", "--xi") and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def parse_config(argv) -> CliConfig:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_join_values(argv))
    cfg = CliConfig(command=args.command)
    for name in ("n", "r", "backend", "seed", "output", "strict_printed_form", "p", "ones"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if args.command == "verify":
        cfg.x_values = _x_values(args.x, args.r)
        cfg.xi = None if args.xi == "symbolic" else _rational(args.xi)
    if cfg.n is not None and cfg.n < 1 or cfg.r is not None and cfg.r < 1:
        raise UsageError("n and r must be positive")
    return cfg


def _scalar_text(value):
    if isinstance(value, list):
        return "[" + ", ".join(value) + "]"
    return str(value)


def cmd_verify(cfg: CliConfig, out) -> int:
    inst = TheoremInstance(cfg.n, cfg.r, cfg.x_values, cfg.xi, cfg.backend)
    report = verify_theorem(inst, strict_printed_form=cfg.strict_printed_form)
    if cfg.output == "json":
        print(report.to_json(), file=out)
    else:
        data = report.to_dict()
        xs = "symbolic" if data["x"] is None else ",".join(data["x"])
        print(f"n={cfg.n} r={cfg.r} x={xs} xi={data['xi'] or 'symbolic'} "
              f"backend={cfg.backend}", file=out)
        print(f"lhs = {_scalar_text(data['lhs'])}", file=out)
        print(f"rhs = {_scalar_text(data['rhs'])}", file=out)
        print(f"equal: {'yes' if report.equal else 'NO'}", file=out)
        print(f"sign: observed {report.observed_sign:+d}, formula {report.expected_sign:+d}",
              file=out)
        if report.printed_form is not None:
            pf = data["printed_form"]
            print(f"product reading det*Delta(y)*Delta(z) = {_scalar_text(pf['lhs'])}", file=out)
            print(f"product reading equal: {'yes' if pf['equal'] else 'no'}", file=out)
    return EXIT_OK if report.equal else EXIT_MISMATCH


def cmd_expand(cfg: CliConfig, out) -> int:
    poly = schur_box_spec(cfg.p, cfg.n, cfg.r)
    text = render_monomial_basis(poly)
    if cfg.output == "json":
        print(json.dumps({"n": cfg.n, "r": cfg.r, "p": cfg.p, "expansion": text,
                          "canonical": poly.render()}, ensure_ascii=False), file=out)
    else:
        print(text, file=out)
    return EXIT_OK


def cmd_phi_table(cfg: CliConfig, out) -> int:
    rows = []
    for k in range((cfg.n - 1) * cfg.r + 1):
        poly = phi(k, cfg.n, cfg.r)
        if cfg.ones:
            value = format_coeff(poly.eval([Fraction(1)] * cfg.r)).removesuffix("/1")
        else:
            value = render_monomial_basis(poly)
        rows.append({"k": k, "phi": value})
    if cfg.output == "json":
        print(json.dumps(rows, ensure_ascii=False), file=out)
    else:
        print("k\tphi_k" + (" at x=1^r" if cfg.ones else ""), file=out)
        for row in rows:
            print(f"{row['k']}\t{row['phi']}", file=out)
    return EXIT_OK


def cmd_examples(cfg: CliConfig, out) -> int:
    from .worked_examples import run_all

    first = None
    for check in run_all():
        status = "PASS" if check.ok else "FAIL"
        line = f"{status} {check.name}: {check.produced}"
        if check.note:
            line += f"  [{check.note}]"
        print(line, file=out)
        if not check.ok and first is None:
            first = check
    if first is not None:
        print(f"first failure: {first.name}\n  produced: {first.produced}\n"
              f"  golden:   {first.golden}\n  identity holds: {first.identity_ok}", file=out)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_selftest(cfg: CliConfig, out) -> int:
    from .selftest import run_selftest

    results = run_selftest(cfg.seed, cfg.backend)
    for result in results:
        print(result.line(), file=out)
    return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


COMMANDS = {
    "verify": cmd_verify,
    "expand": cmd_expand,
    "phi-table": cmd_phi_table,
    "examples": cmd_examples,
    "selftest": cmd_selftest,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        # argparse exits on --help and on parse errors
        return exc.code
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[cfg.command](cfg, out)
    except DegenerateInstanceError as exc:
        print(f"degenerate instance: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
