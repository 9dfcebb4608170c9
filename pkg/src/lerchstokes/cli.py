"""Command-line front end: a thin client over the service handlers.

By default requests are executed in-process; with --url they are POSTed to
a running server instead.  Exit codes: 0 success, 1 usage, 2 domain error,
3 precision/tail/convergence error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import (ConvergenceError, DomainError, PoleError,
                     PrecisionError, TailError)
from .service import (EvalRequest, ImprovedRequest, PoincareRequest,
                      StokesRequest, TableRequest, default_digits,
                      handle_eval, handle_improved, handle_poincare,
                      handle_stokes, handle_table)

EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_PRECISION = 3

TABLE1_GRID = ["0.30", "0.40", "0.45", "0.48", "0.49", "0.50", "0.51",
               "0.52", "0.55", "0.60", "0.70"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _add_common(sp):
    sp.add_argument("--lambda", dest="lam", default="1",
                    help='lambda in (0,1], decimal or fraction like 2/3')
    sp.add_argument("--a-mod", required=True, help="|a| > 0")
    sp.add_argument("--theta", default="0", help="arg(a) in units of pi")
    sp.add_argument("--s", default="4", help="real part of s")
    sp.add_argument("--s-im", default="0", help="imaginary part of s")
    sp.add_argument("--digits", type=int, default=None,
                    help=f"decimal digits (default ${default_digits()} or "
                         f"LERCH_DIGITS)")
    sp.add_argument("--schedule", default=None,
                    help="explicit truncation indices 'N0,N1,.../N0p,N1p,...'")
    sp.add_argument("--format", choices=("csv", "json"), default="json")
    sp.add_argument("--out", default="-", help="output path, '-' for stdout")
    sp.add_argument("--url", default=None,
                    help="POST to a running server instead of in-process")


def build_parser() -> _Parser:
    parser = _Parser(prog="lerchstokes")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eval", help="reference oracle value of L(lam,a,s)")
    _add_common(sp)

    sp = sub.add_parser("poincare", help="truncated algebraic expansion")
    _add_common(sp)
    sp.add_argument("--k-terms", type=int, default=5)

    sp = sub.add_parser("improved", help="exact exponentially improved value")
    _add_common(sp)
    sp.add_argument("--breakdown", action="store_true",
                    help="include per-m blocks and remainders")

    sp = sub.add_parser("stokes", help="single Stokes multiplier S_n(theta)")
    _add_common(sp)
    sp.add_argument("--n", type=int, default=0)

    sp = sub.add_parser("table", help="multiplier sweep over a theta grid")
    _add_common(sp)
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--grid", default=None,
                    help="comma-separated theta/pi values; default is the "
                         "+/- transition grid")
    return parser


def _parse_schedule(text: Optional[str]):
    if text is None:
        return None
    try:
        n_part, np_part = text.split("/")
        from .service import ScheduleModel
        return ScheduleModel(N=[int(x) for x in n_part.split(",")],
                             Nprime=[int(x) for x in np_part.split(",")])
    except (ValueError, IndexError):
        print(f"error: malformed --schedule {text!r}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _common_fields(args) -> dict:
    return dict(lam=args.lam, a_mod=args.a_mod, theta_over_pi=args.theta,
                s_re=args.s, s_im=args.s_im, digits=args.digits)


def _build_request(args):
    common = _common_fields(args)
    sched = _parse_schedule(args.schedule)
    if args.command == "eval":
        return "/eval", EvalRequest(**common), handle_eval
    if args.command == "poincare":
        return "/poincare", PoincareRequest(**common, k_terms=args.k_terms), \
            handle_poincare
    if args.command == "improved":
        return "/improved", ImprovedRequest(**common, schedule=sched,
                                            breakdown=args.breakdown), \
            handle_improved
    if args.command == "stokes":
        return "/stokes", StokesRequest(**common, n=args.n, schedule=sched), \
            handle_stokes
    grid = (args.grid.split(",") if args.grid
            else TABLE1_GRID + ["-" + g for g in TABLE1_GRID])
    return "/table", TableRequest(**common, n=args.n, schedule=sched,
                                  theta_grid_over_pi=grid), handle_table


def _emit(args, response) -> None:
    data = response.model_dump()
    if args.format == "csv" and args.command == "table":
        from .stokes import CSV_COLUMNS
        lines = [",".join(CSV_COLUMNS)]
        for row in data["rows"]:
            lines.append(",".join("" if row[c] is None else str(row[c])
                                  for c in CSV_COLUMNS))
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(data, indent=2) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)


def _post_remote(url: str, path: str, request):
    import httpx

    resp = httpx.post(url.rstrip("/") + path, json=request.model_dump(),
                      timeout=None)
    if resp.status_code == 400:
        raise DomainError(resp.json().get("detail", resp.text))
    if resp.status_code == 422:
        raise PrecisionError(resp.json().get("detail", resp.text))
    resp.raise_for_status()
    return resp.json()


class _RemoteResponse:
    """Duck-typed stand-in so _emit can treat remote results uniformly."""

    def __init__(self, data):
        self._data = data

    def model_dump(self):
        return self._data


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    path, request, handler = _build_request(args)
    try:
        if args.url:
            response = _RemoteResponse(_post_remote(args.url, path, request))
        else:
            response = handler(request)
    except (PoleError, DomainError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (PrecisionError, TailError, ConvergenceError) as exc:
        print(f"precision error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    _emit(args, response)
    return 0


if __name__ == "__main__":
    sys.exit(main())
