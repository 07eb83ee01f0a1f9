"""The absurf command line front end.

Results go to stdout as JSON; errors go to stderr as single-line JSON.
Exit codes: 0 success, 2 parse/validation error, 3 computation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .criteria import (
    koszul_verdict,
    kvery_verdict,
    multiple_for_np,
    np_max,
    np_verdict,
)
from .errors import AbsurfError, InvalidSpec, ParseError
from .exactmath import parse_scalar, scalar_text
from .pell import continued_fraction_sqrt, pell_fundamental
from .seshadri import (
    SeshadriResult,
    parse_surface_spec,
    self_intersection,
    seshadri_elliptic_square,
    seshadri_interval_very_general,
    seshadri_picard_one,
)
from .svg import render_region_svg
from .sweep import SweepPlan, run_sweep


class _Parser(argparse.ArgumentParser):
    # argparse exits on error; surface a ParseError instead so main() can
    # emit machine-readable JSON and the documented exit code
    def error(self, message):
        raise ParseError(message)


def _parse_inclusive_range(text: str, what: str) -> tuple[int, int, int]:
    parts = text.split(":")
    if len(parts) not in (1, 2, 3):
        raise ParseError(f"bad {what} {text!r}; expected START:STOP[:STEP]")
    try:
        numbers = [int(part) for part in parts]
    except ValueError as exc:
        raise ParseError(f"bad {what} {text!r}: {exc}") from exc
    if len(numbers) == 1:
        return numbers[0], numbers[0], 1
    if len(numbers) == 2:
        return numbers[0], numbers[1], 1
    return numbers[0], numbers[1], numbers[2]


def _parse_triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(f"expected b1,b2,b3 integers, got {text!r}")
    try:
        b1, b2, b3 = (int(part) for part in parts)
    except ValueError as exc:
        raise ParseError(f"expected b1,b2,b3 integers, got {text!r}") from exc
    return b1, b2, b3


def _seshadri_payload(result: SeshadriResult, l2: int) -> dict:
    payload: dict = {}
    if result.is_exact:
        payload["value"] = scalar_text(result.value)
    else:
        lo, hi = result.interval
        payload["interval"] = {"lo": scalar_text(lo), "hi": scalar_text(hi)}
    payload["witness"] = result.witness
    payload["l2"] = l2
    return payload


def _cmd_pell(args) -> dict:
    cf = continued_fraction_sqrt(args.n)
    solution = pell_fundamental(args.n)
    return {
        "n": args.n,
        "x": str(solution.x),
        "y": str(solution.y),
        "cf": {"a0": cf.integer_part, "period": list(cf.period)},
    }


def _cmd_seshadri(args) -> dict:
    if args.surface == "picard1":
        return _seshadri_payload(seshadri_picard_one(args.d), 2 * args.d)
    if args.surface == "exe":
        b1, b2, b3 = _parse_triple(args.b)
        result = seshadri_elliptic_square(b1, b2, b3)
        return _seshadri_payload(result, 2 * (b1 * b2 + b2 * b3 + b3 * b1))
    result = seshadri_interval_very_general(args.d1, args.d2)
    return _seshadri_payload(result, 2 * args.d1 * args.d2)


def _cmd_np(args) -> dict:
    spec = parse_surface_spec(args.spec)
    if args.max_p:
        result = np_max(spec, args.assert_eps_nonintegral)
        return {
            "spec": args.spec,
            "max_p": result.max_p,
            "trace": [verdict.to_json_dict() for verdict in result.trace],
        }
    if args.p is None:
        raise ParseError("np needs --p <int> or --max-p")
    return np_verdict(spec, args.p, args.assert_eps_nonintegral).to_json_dict()


def _cmd_kva(args) -> dict:
    return kvery_verdict(parse_surface_spec(args.spec), args.k).to_json_dict()


def _cmd_koszul(args) -> dict:
    return koszul_verdict(parse_surface_spec(args.spec)).to_json_dict()


def _cmd_multiple(args) -> dict:
    spec = parse_surface_spec(args.spec)
    m = multiple_for_np(spec, args.p, args.assert_eps_nonintegral)
    return {"spec": args.spec, "p": args.p, "multiple": m}


def _cmd_sweep(args) -> dict:
    start, stop, step = _parse_inclusive_range(args.range, "--range")
    p_start, p_stop, p_step = _parse_inclusive_range(args.p_range, "--p-range")
    if p_step != 1:
        raise ParseError("--p-range does not take a step")
    plan = SweepPlan(
        spec_template=args.template,
        start=start,
        stop=stop,
        step=step,
        p_start=p_start,
        p_stop=p_stop,
        output_format=args.format,
        output_path=args.out,
    )
    rows = run_sweep(plan)
    return {"rows": len(rows), "out": args.out, "format": args.format}


def _cmd_region(args) -> dict:
    eps = parse_scalar(args.eps)
    alpha = parse_scalar(args.alpha) if args.alpha is not None else None
    document = render_region_svg(eps, alpha, scale=args.scale)
    with open(args.svg, "w", encoding="utf-8") as handle:
        handle.write(document)
    return {"svg": args.svg}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="absurf",
        description=(
            "Exact syzygy, very-ampleness and Koszulness decisions for "
            "polarized abelian surfaces.  Surface specs: picard1:d=<int> | "
            "vg:d1=<int>,d2=<int> | exe:b=<int>,<int>,<int> | "
            "explicit:l2=<int>,eps=<scalar>.  Explicit specs are taken at "
            "face value beyond eps^2 <= L^2."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pell = sub.add_parser("pell", help="fundamental solution of x^2 - n*y^2 = 1")
    pell.add_argument("n", type=int)
    pell.set_defaults(handler=_cmd_pell)

    seshadri = sub.add_parser("seshadri", help="exact Seshadri constant or interval")
    surface = seshadri.add_subparsers(dest="surface", required=True)
    picard1 = surface.add_parser("picard1")
    picard1.add_argument("--d", type=int, required=True)
    exe = surface.add_parser("exe")
    exe.add_argument("--b", required=True, help="b1,b2,b3")
    vg = surface.add_parser("vg")
    vg.add_argument("--d1", type=int, required=True)
    vg.add_argument("--d2", type=int, required=True)
    seshadri.set_defaults(handler=_cmd_seshadri)

    np_cmd = sub.add_parser("np", help="property N_p verdict")
    np_cmd.add_argument("--spec", required=True)
    np_cmd.add_argument("--p", type=int)
    np_cmd.add_argument("--max-p", action="store_true")
    np_cmd.add_argument("--assert-eps-nonintegral", action="store_true")
    np_cmd.set_defaults(handler=_cmd_np)

    kva = sub.add_parser("kva", help="k-very-ampleness verdict")
    kva.add_argument("--spec", required=True)
    kva.add_argument("--k", type=int, required=True)
    kva.set_defaults(handler=_cmd_kva)

    koszul = sub.add_parser("koszul", help="Koszul property verdict")
    koszul.add_argument("--spec", required=True)
    koszul.set_defaults(handler=_cmd_koszul)

    multiple = sub.add_parser("multiple", help="certified multiple for N_p")
    multiple.add_argument("--spec", required=True)
    multiple.add_argument("--p", type=int, required=True)
    multiple.add_argument("--assert-eps-nonintegral", action="store_true")
    multiple.set_defaults(handler=_cmd_multiple)

    sweep_cmd = sub.add_parser("sweep", help="verdict table over a spec family")
    sweep_cmd.add_argument("--template", required=True, help="spec string with one {} placeholder")
    sweep_cmd.add_argument("--range", required=True, help="START:STOP[:STEP], inclusive")
    sweep_cmd.add_argument("--p-range", required=True, help="START:STOP, inclusive")
    sweep_cmd.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep_cmd.add_argument("--out", required=True)
    sweep_cmd.set_defaults(handler=_cmd_sweep)

    region = sub.add_parser("region", help="SVG plot of the proof regions")
    region.add_argument("--eps", required=True)
    region.add_argument("--alpha")
    region.add_argument("--svg", required=True)
    region.add_argument("--scale", type=float, default=100.0)
    region.set_defaults(handler=_cmd_region)

    return parser


def _emit_error(exc: Exception) -> None:
    record = {"error": type(exc).__name__, "message": str(exc)}
    print(json.dumps(record), file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload = args.handler(args)
    except (ParseError, InvalidSpec) as exc:
        _emit_error(exc)
        return 2
    except (AbsurfError, OSError, ValueError) as exc:
        _emit_error(exc)
        return 3
    print(json.dumps(payload, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
