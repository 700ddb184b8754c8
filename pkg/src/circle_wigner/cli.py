"""Command-line front end: ``circle-wigner {grid,marginal,curve,verify}``.

Exit status is 0 on success, 1 for invalid options or failed verification
checks, 2 for numerical failures (non-convergence, inconsistent results).
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import marginals, moments, verify
from .errors import ConsistencyError, ConvergenceError, DomainError
from .quadrature import QuadratureConfig
from .state import StateParams, normalize
from .wigner import WignerGrid, eval_grid

FORMAT_TAG = "circle-wigner v1"
EXIT_OK, EXIT_INVALID, EXIT_NUMERICAL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad options; 2 is reserved for numerical failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _num(x):
    return format(float(x), ".17g")


# -- serialization ------------------------------------------------------------

def header(kind, params: StateParams | None = None, **fields):
    parts = [FORMAT_TAG, kind] + [f"{k}={v}" for k, v in fields.items()]
    if params is not None:
        parts += [f"lambda={_num(params.lam)}", f"l={params.l}", f"eps={_num(params.eps)}",
                  f"theta_bar={_num(params.theta_bar)}"]
    return "# " + "; ".join(parts)


def grid_to_csv(grid: WignerGrid):
    lines = [header("grid", grid.state_descriptor, variant=grid.variant), "theta,p,value"]
    for i, th in enumerate(grid.theta_values):
        for j, p in enumerate(grid.p_values):
            lines.append(f"{_num(th)},{_num(p)},{_num(grid.values[i, j])}")
    return "\n".join(lines) + "\n"


def _params_dict(params: StateParams):
    return {"lambda": params.lam, "l": params.l, "eps": params.eps, "theta_bar": params.theta_bar}


def grid_to_json(grid: WignerGrid):
    doc = {
        "format": FORMAT_TAG,
        "kind": "grid",
        "variant": grid.variant,
        "state": _params_dict(grid.state_descriptor),
        "theta_values": grid.theta_values.tolist(),
        "p_values": grid.p_values.tolist(),
        "values": grid.values.tolist(),
        "max_abs_imag_residue": grid.max_abs_imag_residue,
        "spot_check_error": grid.spot_check_error,
        "spot_check_count": grid.spot_check_count,
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def grid_from_json(text):
    """Inverse of :func:`grid_to_json`."""
    doc = json.loads(text)
    if doc.get("format") != FORMAT_TAG or doc.get("kind") != "grid":
        raise ValueError("not a circle-wigner grid document")
    st = doc["state"]
    return WignerGrid(
        variant=doc["variant"],
        theta_values=np.array(doc["theta_values"], dtype=float),
        p_values=np.array(doc["p_values"], dtype=float),
        values=np.array(doc["values"], dtype=float),
        state_descriptor=StateParams(lam=st["lambda"], l=st["l"], eps=st["eps"],
                                     theta_bar=st["theta_bar"]),
        max_abs_imag_residue=doc["max_abs_imag_residue"],
        spot_check_error=doc["spot_check_error"],
        spot_check_count=doc["spot_check_count"],
    )


def series_to_csv(x_name, x, values, head):
    lines = [head, f"{x_name},value"]
    lines += [f"{_num(a)},{_num(b)}" for a, b in zip(x, values)]
    return "\n".join(lines) + "\n"


def series_to_json(kind, x_name, x, values, params=None, **meta):
    doc = {"format": FORMAT_TAG, "kind": kind, x_name: list(map(float, x)),
           "value": list(map(float, values)), **meta}
    if params is not None:
        doc["state"] = _params_dict(params)
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def curve_to_csv(points, eps, l):
    lines = [header("curve", eps=_num(eps), l=l), "lambda,delta_L,delta_theta_full,delta_theta_half"]
    for p in points:
        lines.append(",".join(_num(v) for v in (p.lam, p.delta_L, p.delta_theta_full, p.delta_theta_half)))
    return "\n".join(lines) + "\n"


def curve_to_json(points, eps, l):
    doc = {
        "format": FORMAT_TAG,
        "kind": "curve",
        "eps": eps,
        "l": l,
        "points": [
            {"lambda": p.lam, "delta_L": p.delta_L, "delta_theta_full": p.delta_theta_full,
             "delta_theta_half": p.delta_theta_half}
            for p in points
        ],
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


# -- argument handling --------------------------------------------------------

def _add_state_args(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--lambda", dest="lam", type=float, help="width parameter lambda > 0")
    g.add_argument("--q", type=float, help="nome q = exp(-1/(2 lambda)), 0 < q < 1")
    p.add_argument("--l", type=int, default=0, help="integer part of lbar (default 0)")
    p.add_argument("--eps", type=float, default=0.0, help="fractional part of lbar in [0, 1)")
    p.add_argument("--theta-bar", type=float, default=0.0, help="phase offset in [-pi, pi]")


def _add_output_args(p):
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser():
    parser = _Parser(prog="circle-wigner", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("grid", help="Wigner function on a (theta, p) grid")
    _add_state_args(g)
    g.add_argument("--variant", choices=("full", "half"), default="full")
    g.add_argument("--theta-points", type=int, default=101)
    g.add_argument("--p-min", type=float, default=-2.0, help="lowest m = p - l (default -2)")
    g.add_argument("--p-max", type=float, default=2.0, help="highest m = p - l (default 2)")
    g.add_argument("--p-points", type=int, default=81)
    g.add_argument("--tol", type=float, default=1e-10, help="quadrature tolerance for spot checks")
    _add_output_args(g)

    m = sub.add_parser("marginal", help="momentum or angle marginal distribution")
    _add_state_args(m)
    m.add_argument("--variant", choices=("full", "half"), default="full")
    m.add_argument("--axis", choices=("p", "theta"), default="p")
    m.add_argument("--points", type=int, default=401)
    m.add_argument("--p-min", type=float, default=-2.0, help="lowest m = p - l (axis p)")
    m.add_argument("--p-max", type=float, default=2.0, help="highest m = p - l (axis p)")
    _add_output_args(m)

    c = sub.add_parser("curve", help="(Delta L, Delta theta) uncertainty curve")
    c.add_argument("--eps", type=float, default=0.5)
    c.add_argument("--l", type=int, default=0)
    c.add_argument("--lambda-min", type=float, default=1e-3)
    c.add_argument("--lambda-max", type=float, default=1e2)
    c.add_argument("--lambda-points", type=int, default=41)
    _add_output_args(c)

    v = sub.add_parser("verify", help="run the built-in consistency checks")
    v.add_argument("--tol", type=float, default=1e-10)
    return parser


def _params(args):
    try:
        if args.q is not None:
            return StateParams.from_q(args.q, l=args.l, eps=args.eps, theta_bar=args.theta_bar)
        return StateParams(lam=args.lam, l=args.l, eps=args.eps, theta_bar=args.theta_bar)
    except DomainError as exc:
        raise UsageError(f"{_flag_for(exc)}: {exc}") from None


def _flag_for(exc):
    word = str(exc).split()[0]
    return {"lambda": "--lambda", "l": "--l", "eps": "--eps", "theta_bar": "--theta-bar",
            "q": "--q"}.get(word, "options")


def _validate_grid_like(args, count_flags):
    if args.p_min >= args.p_max:
        raise UsageError("--p-min must be smaller than --p-max")
    for flag in count_flags:
        if getattr(args, flag.lstrip("-").replace("-", "_")) < 2:
            raise UsageError(f"{flag} must be at least 2")


def _emit(text, output):
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_grid(args):
    _validate_grid_like(args, ("--theta-points", "--p-points"))
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    params = _params(args)
    state = normalize(params)
    grid = eval_grid(state, args.variant, args.theta_points, params.l + args.p_min,
                     params.l + args.p_max, args.p_points,
                     cfg=QuadratureConfig(abs_tolerance=args.tol))
    grid.check_invariants()
    _emit(grid_to_json(grid) if args.format == "json" else grid_to_csv(grid), args.output)
    return EXIT_OK


def cmd_marginal(args):
    _validate_grid_like(args, ("--points",))
    params = _params(args)
    state = normalize(params)
    if args.axis == "p":
        x = np.linspace(params.l + args.p_min, params.l + args.p_max, args.points)
        y = marginals.marginal_p(state, x, args.variant)
    else:
        x = np.linspace(-np.pi, np.pi, args.points)
        y = marginals.marginal_theta(state, x, args.variant)
    kind = f"marginal_{args.axis}"
    if args.format == "json":
        text = series_to_json(kind, args.axis, x, y, params, variant=args.variant)
    else:
        text = series_to_csv(args.axis, x, y, header(kind, params, variant=args.variant))
    _emit(text, args.output)
    return EXIT_OK


def cmd_curve(args):
    if not 0.0 <= args.eps < 1.0:
        raise UsageError("--eps must lie in [0, 1)")
    if not 0 < args.lambda_min < args.lambda_max:
        raise UsageError("--lambda-min must be positive and below --lambda-max")
    if args.lambda_points < 2:
        raise UsageError("--lambda-points must be at least 2")
    lams = np.logspace(math.log10(args.lambda_min), math.log10(args.lambda_max), args.lambda_points)
    points = moments.uncertainty_curve(args.eps, args.l, lams)
    text = curve_to_json(points, args.eps, args.l) if args.format == "json" else curve_to_csv(points, args.eps, args.l)
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args):
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    ok = True
    for name, passed, detail in verify.run_all(args.tol):
        ok &= bool(passed)
        print(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
    return EXIT_OK if ok else EXIT_INVALID


COMMANDS = {"grid": cmd_grid, "marginal": cmd_marginal, "curve": cmd_curve, "verify": cmd_verify}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"circle-wigner: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ConvergenceError, ConsistencyError) as exc:
        print(f"circle-wigner: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
