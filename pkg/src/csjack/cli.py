"""Command line driver.

Subcommands: jack (build one polynomial), verify (run property suites),
spectrum (quasi-momenta and energies), convert (basis conversion of a
polynomial read from a file or stdin).  Output is byte deterministic for
fixed inputs.  Exit codes: 0 success, 1 domain error, 2 bad flags, 3 a
verification suite reported a failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import rodrigues, spectrum, suites, symbases
from .errors import AlgebraError
from .partitions import Partition, partitions_of
from .polyring import LaurentPoly, VarContext


def _parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    return Partition(int(x) for x in text.split(","))


def _parse_beta(text: str):
    if text == "sym":
        return None
    return Fraction(text)


def _emit(args, payload: str):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _coeff_str(c, beta_value) -> str:
    if beta_value is None:
        return str(c)
    return str(c.specialize(beta_value))


def cmd_jack(args) -> int:
    lam = _parse_partition(args.lam)
    ctx = VarContext(args.nvars)
    if len(lam) == ctx.nvars and not args.allow_shift:
        print(
            f"error: l(lambda) = {len(lam)} requires l(lambda) <= N-1 = {ctx.nvars - 1} "
            "(pass --allow-shift for the boost reduction)",
            file=sys.stderr,
        )
        return 1
    result = rodrigues.jack(lam, ctx, args.normalization)
    beta_value = _parse_beta(args.beta)
    if args.format == "json":
        obj = result.to_json()
        obj["beta"] = "sym" if beta_value is None else str(beta_value)
        if beta_value is not None:
            obj["c"] = str(result.c.specialize(beta_value))
            for entry in obj["monomial_expansion"]:
                coeff = result.polynomial.coefficient(
                    Partition(entry["partition"]).pad(ctx.nvars)
                )
                entry["coeff"] = str(coeff.specialize(beta_value))
        payload = json.dumps(obj, indent=2) + "\n"
    else:
        lines = [
            f"jack lambda={list(lam)} nvars={ctx.nvars} normalization={args.normalization}",
            f"c = {_coeff_str(result.c, beta_value)}",
        ]
        rows = [
            (f"m[{','.join(map(str, Partition(e)))}]", _coeff_str(c, beta_value))
            for e, c in result.polynomial.sorted_terms()
            if all(a >= b for a, b in zip(e, e[1:]))
        ]
        width = max(len(r[0]) for r in rows) if rows else 0
        lines += [f"{name:<{width}}  {val}" for name, val in rows]
        payload = "\n".join(lines) + "\n"
    _emit(args, payload)
    return 0


def cmd_verify(args) -> int:
    results = suites.run_suite(args.suite, args.max_degree, args.max_nvars, args.threads)
    failed = 0
    lines = []
    for r in results:
        if r.passed:
            lines.append(f"PASS {r.name}")
        else:
            failed += 1
            lines.append(f"FAIL {r.name}: {r.detail}")
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    _emit(args, "\n".join(lines) + "\n")
    return 3 if failed else 0


def _length_scale(length) -> float | None:
    """Numeric value of 2*pi/L when L is a plain rational, else None."""
    if length == "2pi":
        return None
    return 2 * math.pi / float(length)


def cmd_spectrum(args) -> int:
    params = spectrum.ModelParams(
        nparticles=args.nparticles,
        beta=Fraction(args.beta),
        q=Fraction(args.q),
        length=args.length if args.length == "2pi" else Fraction(args.length),
    )
    if args.all_degree is not None:
        lams = [
            lam
            for n in range(args.all_degree + 1)
            for lam in partitions_of(n, params.nparticles)
        ]
    else:
        lams = [_parse_partition(args.lam)]
    records = [spectrum.spectrum_record(lam, params) for lam in lams]
    ground = spectrum.ground_energy(params)
    if args.format == "json":
        obj = {
            "params": {
                "nparticles": params.nparticles,
                "beta": str(params.beta),
                "q": str(params.q),
                "length": str(params.length),
            },
            "units": {
                "momentum": spectrum.MOMENTUM_UNIT,
                "energy": spectrum.ENERGY_UNIT,
                "ground_energy": spectrum.GROUND_ENERGY_UNIT,
            },
            "ground_energy": str(ground),
            "states": [r.to_json() for r in records],
        }
        payload = json.dumps(obj, indent=2) + "\n"
    else:
        lines = [
            f"spectrum nparticles={params.nparticles} beta={params.beta} "
            f"q={params.q} length={params.length}",
            f"ground energy = {ground} * {spectrum.GROUND_ENERGY_UNIT}",
        ]
        scale = _length_scale(params.length)
        for r in records:
            kappa = ", ".join(str(k) for k in r.kappa)
            line = (
                f"lambda={list(r.lam)} kappa=[{kappa}] momentum={r.momentum} "
                f"energy={r.energy}"
            )
            if scale is not None:
                line += f" energy_value={float(r.energy) * scale * scale:.12g}"
            lines.append(line)
        payload = "\n".join(lines) + "\n"
    _emit(args, payload)
    return 0


def cmd_convert(args) -> int:
    if args.input:
        with open(args.input) as fh:
            obj = json.load(fh)
    else:
        obj = json.load(sys.stdin)
    if "monomial_expansion" in obj:
        ctx = VarContext(int(obj["nvars"]))
        poly = LaurentPoly.zero(ctx)
        for entry in obj["monomial_expansion"]:
            coeff = entry["coeff"]
            coeff = (
                symbases.FieldElement.from_json(coeff)
                if isinstance(coeff, dict)
                else symbases.FieldElement([Fraction(coeff)])
            )
            poly = poly + symbases.monomial_sym(Partition(entry["partition"]), ctx).scale(coeff)
    elif "terms" in obj:
        poly = LaurentPoly.from_json(obj)
        ctx = poly.ctx
    elif "coords" in obj:
        ctx = VarContext(int(obj["nvars"]))
        poly = symbases.BasisExpansion.from_json(obj, ctx).reconstruct()
    else:
        print("error: unrecognized polynomial payload", file=sys.stderr)
        return 1
    if args.nvars and args.nvars != ctx.nvars:
        print(
            f"error: input declares {ctx.nvars} variables, flags say {args.nvars}",
            file=sys.stderr,
        )
        return 1
    expansion = symbases.expand_in_basis(poly, args.to)
    obj = expansion.to_json()
    obj["nvars"] = ctx.nvars
    _emit(args, json.dumps(obj, indent=2) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csjack",
        description="Exact Jack polynomials, operator verification, and model spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_jack = sub.add_parser("jack", help="build one Jack polynomial")
    p_jack.add_argument("--lambda", dest="lam", required=True, help="comma separated parts, 0 for empty")
    p_jack.add_argument("--nvars", type=int, required=True)
    p_jack.add_argument("--normalization", choices=rodrigues.NORMALIZATIONS, default="monic")
    p_jack.add_argument("--format", choices=("json", "text"), default="json")
    p_jack.add_argument("--beta", default="sym", help='"sym", an integer, or p/q')
    p_jack.add_argument("--allow-shift", action="store_true", help="accept l(lambda) = N via the boost")
    p_jack.add_argument("--output", default=None)
    p_jack.set_defaults(func=cmd_jack)

    p_verify = sub.add_parser("verify", help="run a property suite")
    p_verify.add_argument(
        "--suite",
        choices=sorted(suites.SUITES) + ["all"],
        default="all",
    )
    p_verify.add_argument("--max-degree", type=int, default=4)
    p_verify.add_argument("--max-nvars", type=int, default=3)
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.add_argument("--output", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_spec = sub.add_parser("spectrum", help="quasi-momenta and energies")
    p_spec.add_argument("--lambda", dest="lam", default="0")
    p_spec.add_argument("--all-degree", type=int, default=None, help="list every state up to this degree")
    p_spec.add_argument("--nparticles", type=int, required=True)
    p_spec.add_argument("--beta", required=True)
    p_spec.add_argument("--q", default="0")
    p_spec.add_argument("--length", default="2pi", help='"2pi" or a rational circumference')
    p_spec.add_argument("--format", choices=("json", "text"), default="text")
    p_spec.add_argument("--output", default=None)
    p_spec.set_defaults(func=cmd_spectrum)

    p_conv = sub.add_parser("convert", help="expand a polynomial in the m or p basis")
    p_conv.add_argument("--to", choices=(symbases.MONOMIAL, symbases.POWER_SUM), required=True)
    p_conv.add_argument("--input", default=None, help="JSON file; stdin when omitted")
    p_conv.add_argument("--nvars", type=int, default=None)
    p_conv.add_argument("--output", default=None)
    p_conv.set_defaults(func=cmd_convert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
