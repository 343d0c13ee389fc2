"""Command line surface.

All integers are printed as decimal strings (values overflow 64-bit from
m around 16 on) and rationals as {"num": ..., "den": ...} objects.  Exit
codes: 0 for success / verified, 2 when a verification scan found a
counterexample, 1 for any error (including bad usage, so that 2 stays
reserved for counterexamples).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bernoulli, bundles, genera, lattices, plumbing, verify
from .exact import BezoutPair

USAGE_ERROR = 1


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 means "counterexample" here
    def error(self, message):  # noqa: D102
        self.print_usage(sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _frac(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _bezout_json(b: BezoutPair | None) -> dict | None:
    if b is None:
        return None
    return {
        "c": str(b.c),
        "d": str(b.d),
        "for_numerator": str(b.for_numerator),
        "for_denominator": str(b.for_denominator),
    }


def _record_fields(rec: bernoulli.BernoulliRecord) -> dict:
    return {
        "n": str(rec.n),
        "abs_num": str(rec.abs_value.numerator),
        "abs_den": str(rec.abs_value.denominator),
        "num4": str(rec.num4),
        "j": str(rec.j),
    }


def _emit(data) -> None:
    print(json.dumps(data, indent=2))


def _cmd_bernoulli(args) -> int:
    if args.range:
        records = list(bernoulli.record_range(args.n))
    else:
        records = [bernoulli.bernoulli_record(args.n)]
    rows = [_record_fields(r) for r in records]
    if args.format == "json":
        _emit(rows if args.range else rows[0])
    elif args.format == "csv":
        print("n,abs_num,abs_den,num4,j")
        for row in rows:
            print(",".join(row.values()))
    else:
        for row in rows:
            print(
                f"n={row['n']}  |B|={row['abs_num']}/{row['abs_den']}  "
                f"num4={row['num4']}  j={row['j']}"
            )
    return 0


def _cmd_coeffs(args) -> int:
    if args.genus == "S":
        g = genera.stolz_class_coeffs(args.m, plumbing.canonical_bezout(args.m))
    else:
        g = genera.genus_coeffs(args.genus, args.m)
    data = {
        "genus": args.genus,
        "m": str(args.m),
        "coeff_p_top": _frac(g.coeff_p_top),
        "coeff_p_half_sq": _frac(g.coeff_p_half_sq),
    }
    if args.format == "json":
        _emit(data)
    else:
        print(
            f"{args.genus}_{args.m}: p_top {g.coeff_p_top}, "
            f"p_half^2 {g.coeff_p_half_sq}"
        )
    return 0


def _cmd_plumbing(args) -> int:
    lattices.OrdParameter(args.ord, args.m)  # validate even though unused below
    prof = plumbing.profile(args.m)
    even = args.m % 2 == 0
    data = {
        "m": str(args.m),
        "sigma_m": str(prof.sigma),
        "bp_order": str(plumbing.bp_order(args.m)),
        "pk2_Q": str(plumbing.pk2_of_Q(args.m // 2)) if even else None,
        "s_Q": str(plumbing.s_of_Q(args.m)) if args.m >= 2 else None,
        "bezout": _bezout_json(prof.bezout),
    }
    if args.format == "json":
        _emit(data)
    else:
        for key, value in data.items():
            print(f"{key}: {value}")
    return 0


def _variant(name: str) -> str:
    return {"full": "full_kernel", "sig4": "signature_in_4Z"}[name]


def _cmd_lattice(args) -> int:
    basis = lattices.generator_invariants(args.m, args.ord, _variant(args.variant))
    structure = lattices.kernel_structure(args.m, args.ord)
    rows = [
        {
            "label": label,
            "sigma": str(v.sigma),
            "ahat": str(v.ahat),
            "p_top": str(v.p_top),
            "p_half_sq": str(v.p_half_sq),
        }
        for label, v in basis.generators
    ]
    if args.format == "csv":
        print("label,sigma,ahat,p_top,p_half_sq")
        for row in rows:
            print(",".join(row.values()))
    else:
        _emit(
            {
                "m": str(args.m),
                "ord": str(args.ord),
                "variant": basis.variant,
                "structure": str(structure),
                "generators": rows,
            }
        )
    return 0


def _cmd_minimal(args) -> int:
    value, exponent = lattices.minimal_signature(args.m, args.ord)
    data = {
        "m": str(args.m),
        "ord": str(args.ord),
        "minimal_signature": str(value),
        "exponent_i": str(exponent) if exponent is not None else None,
        "minimal_ahat": str(lattices.minimal_ahat(args.m)) if args.m >= 2 else None,
    }
    _emit(data)
    return 0


def _cmd_bundle(args) -> int:
    report = bundles.divisibility_report(args.m, args.ord)
    _emit(
        {
            "m": str(report.m),
            "ord": str(report.ord.value),
            "signature_divisor": str(report.signature_divisor),
            "ahat_divisor": (
                str(report.ahat_divisor) if report.ahat_divisor is not None else None
            ),
            "signature_4_realizable": bundles.signature_4_realizable(args.m),
            "realizable_at_genus": report.realizable_at_genus,
            "non_admissible_signature_divisor": (
                str(report.non_admissible_signature_divisor)
                if report.non_admissible_signature_divisor is not None
                else None
            ),
            "non_admissible_ahat_divisor": (
                str(report.non_admissible_ahat_divisor)
                if report.non_admissible_ahat_divisor is not None
                else None
            ),
        }
    )
    return 0


def _cmd_kappa_basis(args) -> int:
    exprs = bundles.kappa_basis(args.m, args.ord)
    _emit(
        {
            "m": str(args.m),
            "ord": str(args.ord),
            "basis": [
                {
                    "coeff_p_top": _frac(e.coeff_p_top),
                    "coeff_p_half_sq": _frac(e.coeff_p_half_sq),
                }
                for e in exprs
            ],
        }
    )
    return 0


def _cmd_verify(args) -> int:
    fn = verify.CLAIMS[args.claim]
    if args.max is not None:
        m_max = args.max
    elif args.full:
        m_max = verify.FULL_RANGES[args.claim]
    else:
        m_max = verify.DESK_RANGES[args.claim]
    report = fn(
        m_max,
        workers=args.workers,
        checkpoint_path=args.checkpoint,
    )
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print("m,kind,detail")
        for w in report.counterexamples:
            rest = {k: v for k, v in w.items() if k not in ("m", "kind")}
            detail = ";".join(f"{k}={v}" for k, v in rest.items())
            print(f"{w['m']},{w.get('kind', '')},{detail}")
    else:
        print(
            f"{report.claim}: {report.status} on {report.m_min}..{report.m_max} "
            f"({report.wall_time_seconds:.1f}s)"
        )
        for w in report.counterexamples:
            print(f"  m={w['m']} {w}")
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hclat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", help="Bernoulli/tangent records")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--range", action="store_true", help="emit all records 1..n")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.set_defaults(fn=_cmd_bernoulli)

    p = sub.add_parser("coeffs", help="genus coefficients on {p_top, p_half^2}")
    p.add_argument("--genus", choices=genera.GENERA + ("S",), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(fn=_cmd_coeffs)

    p = sub.add_parser("plumbing", help="plumbing invariants in dimension 4m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--ord", type=int, default=1)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(fn=_cmd_plumbing)

    p = sub.add_parser("lattice", help="characteristic-number lattice generators")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--ord", type=int, default=1)
    p.add_argument("--variant", choices=("full", "sig4"), default="full")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=_cmd_lattice)

    p = sub.add_parser("minimal", help="minimal signature and A-hat genus")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--ord", type=int, default=1)
    p.set_defaults(fn=_cmd_minimal)

    p = sub.add_parser("bundle", help="divisibility for bundles over surfaces")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--ord", type=int, default=1)
    p.set_defaults(fn=_cmd_bundle)

    p = sub.add_parser("kappa-basis", help="integral kappa-class basis")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--ord", type=int, default=1)
    p.set_defaults(fn=_cmd_kappa_basis)

    p = sub.add_parser("verify", help="long-range verification scans")
    p.add_argument("claim", choices=sorted(verify.CLAIMS))
    p.add_argument("--max", type=int, default=None, help="scan bound on m")
    p.add_argument(
        "--full",
        action="store_true",
        help="use the full published range (hour-scale for the largest)",
    )
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--checkpoint", default=None, help="checkpoint file path")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    if sys.get_int_max_str_digits() < 2_000_000:
        sys.set_int_max_str_digits(2_000_000)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
