"""Command-line front end.  Every result is one JSON object per line on stdout."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .algebraic import NotDominant, PeriodicSpec, periodic_to_cubic, periodic_to_rational
from .delta import DeltaResult, delta, delta_inverse, delta_n
from .exact import DomainError, PlanePoint
from .farey import expand, parse_sequence
from .numberfield import AlgebraicNumber
from .render import render_partition
from .singularity import lemma_inequality_check, monte_carlo, ratio_series

EXIT_OK, EXIT_DOMAIN, EXIT_NOT_DOMINANT = 0, 2, 3


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"malformed rational {text!r} (expected p/q)") from exc


def parse_point(text: str) -> PlanePoint:
    parts = text.split(",")
    if len(parts) != 2:
        raise DomainError(f"malformed point {text!r} (expected x,y)")
    return PlanePoint(parse_rational(parts[0]), parse_rational(parts[1]))


def _rat(v: Fraction) -> str:
    return str(Fraction(v))


def _algebraic(a: AlgebraicNumber) -> dict:
    lo, hi = a.isolating_interval
    return {"min_poly": list(a.min_poly.coeffs), "interval": [_rat(lo), _rat(hi)],
            "approx": float(a)}


def delta_record(r: DeltaResult) -> dict:
    return {"value": str(r.value), "error_bound": _rat(r.error_bound), "depth_used": r.depth_used,
            "exact": r.exact, "boundary": r.boundary,
            "approx": [float(r.value.x), float(r.value.y)]}


def _parse_seq(text: str):
    try:
        return parse_sequence(text, strict=False)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def _read_config(path: str) -> dict[str, str]:
    out = {}
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise DomainError(f"bad config line {line!r}")
        out[key.strip()] = value.strip()
    return out


def _cmd_expand(args) -> list[dict]:
    seq = expand(parse_point(args.point), args.depth)
    return [{"sequence": str(seq), "raw_depth": seq.raw_length,
             "termination": seq.termination.value, "ties": list(seq.ties)}]


def _cmd_delta(args) -> list[dict]:
    p = parse_point(args.point)
    if args.depth is not None:
        value = delta_n(p, args.depth)
        return [{"value": str(value), "depth_used": args.depth,
                 "approx": [float(value.x), float(value.y)]}]
    return [delta_record(delta(p, parse_rational(args.tol)))]


def _cmd_inverse(args) -> list[dict]:
    return [delta_record(delta_inverse(parse_point(args.point), parse_rational(args.tol)))]


def _spec(args) -> PeriodicSpec:
    return PeriodicSpec(_parse_seq(args.preperiod or ""), _parse_seq(args.period))


def _cmd_cubic(args) -> list[dict]:
    r = periodic_to_cubic(_spec(args))
    (xa, xb), (ya, yb) = r.point_interval
    return [{"alpha": _algebraic(r.alpha), "beta": _algebraic(r.beta),
             "eigenvalue": _algebraic(r.eigenvalue), "field_degree": r.field_degree,
             "algebra_dimension": r.algebra_dimension,
             "box": [[_rat(xa), _rat(xb)], [_rat(ya), _rat(yb)]]}]


def _cmd_rational(args) -> list[dict]:
    return [{"value": str(periodic_to_rational(_spec(args)))}]


def _cmd_ratio(args) -> list[dict]:
    return [{"n": r.n, "s_n": r.s_n, "radii_product": r.radii_product, "ratio": _rat(r.ratio)}
            for r in ratio_series(_parse_seq(args.sequence))]


def _cmd_mc(args) -> list[dict]:
    cfg = _read_config(args.config) if args.config else {}
    samples = args.samples if args.samples is not None else int(cfg.get("samples", 1000))
    depth = args.depth if args.depth is not None else int(cfg.get("depth", 60))
    seed = args.seed if args.seed is not None else int(cfg.get("seed", 42))
    workers = args.workers if args.workers is not None else int(cfg.get("workers", 1))
    s = monte_carlo(samples, depth, seed, workers)
    return [{"samples": s.samples, "depth": s.depth,
             "sn_over_n": {str(q): v for q, v in s.sn_over_n.items()},
             "log3_ratio": {str(q): v for q, v in s.log3_ratio.items()}}]


def _cmd_lemma(args) -> list[dict]:
    out = []
    for item in args.tuple:
        parts = item.split(",")
        if len(parts) != 4:
            raise DomainError(f"expected x,y,z,L, got {item!r}")
        x, y, z = (int(v) for v in parts[:3])
        L = parse_rational(parts[3])
        out.append({"x": x, "y": y, "z": z, "L": _rat(L), "holds": lemma_inequality_check(x, y, z, L)})
    return out


def _cmd_render(args) -> list[dict]:
    svg = render_partition(args.kind, args.depth, scale=args.scale)
    Path(args.output).write_text(svg)
    return [{"output": args.output, "kind": args.kind, "depth": args.depth,
             "triangles": 3 ** args.depth}]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fareybary", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="Farey expansion of a rational point")
    p.add_argument("--point", required=True)
    p.add_argument("--depth", type=int, default=64)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("delta", help="evaluate the Farey-Bary map")
    p.add_argument("--point", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--depth", type=int, help="piecewise-linear approximant at this depth")
    g.add_argument("--tol", help="rational tolerance for the limit map")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("inverse", help="preimage under the Farey-Bary map")
    p.add_argument("--point", required=True)
    p.add_argument("--tol", required=True)
    p.set_defaults(func=_cmd_inverse)

    for name, func in (("periodic-cubic", _cmd_cubic), ("periodic-rational", _cmd_rational)):
        p = sub.add_parser(name)
        p.add_argument("--period", required=True)
        p.add_argument("--preperiod", default="")
        p.set_defaults(func=func)

    p = sub.add_parser("ratio", help="bary/Farey area ratios along a sequence")
    p.add_argument("--sequence", required=True)
    p.set_defaults(func=_cmd_ratio)

    p = sub.add_parser("mc", help="Monte Carlo statistics of s_n/n and the area ratio")
    p.add_argument("--config", help="key=value file with samples, depth, seed, workers")
    p.add_argument("--samples", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.set_defaults(func=_cmd_mc)

    p = sub.add_parser("lemma", help="check the corner-triangle inequality")
    p.add_argument("--tuple", action="append", required=True, metavar="x,y,z,L")
    p.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("render", help="SVG of a partition")
    p.add_argument("--kind", choices=("farey", "bary"), required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--scale", type=int, default=600)
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        records = args.func(args)
    except NotDominant as exc:
        print(json.dumps({"error": "not-dominant", "message": str(exc)}), file=sys.stderr)
        return EXIT_NOT_DOMINANT
    except (DomainError, ValueError) as exc:
        print(json.dumps({"error": "domain", "message": str(exc)}), file=sys.stderr)
        return EXIT_DOMAIN
    for rec in records:
        print(json.dumps(rec))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
