"""
Command line front end.

    python -m heps.cli bound --lambda 1 --Lambda 3
    python -m heps.cli curve --tau-min 0.01 --tau-max 0.99 --steps 99 --out curve.csv
    python -m heps.cli lab corpus --name cone --n 512 --domain -1,1 --out cone.grid

Exit codes: 0 success, 1 runtime failure, 2 invalid input, 3 output I/O failure,
4 malformed grid file.
"""
import argparse
import logging
import math
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from heps.cli.export import curve_to_csv, curve_to_svg, to_json
from heps.config import settings
from heps.core import upper_bound_ass, upper_bound_ndim
from heps.errors import GridFormatError, HepsError, InvalidInputError
from heps.lab import (
    a_envelope,
    corpus,
    decay_fit,
    lemma_check,
    read_grid,
    theta,
    write_grid,
)
from heps.lab.grid import GridFunction
from heps.models import Ellipticity
from heps.solver import (
    bound_report,
    curve_table,
    m0_maximizer,
    m0_note,
    solve_system,
)

logger = logging.getLogger("heps.cli")

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_INPUT = 2
EXIT_OUTPUT = 3
EXIT_GRID = 4

# options whose value may start with '-' (e.g. --domain -1,1)
SIGNED_PAIR_OPTIONS = ("--domain", "--point")


class OutputError(Exception):
    """Writing a result file failed"""


def _pair(text: str) -> Tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated numbers, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number pair: {text!r}")


def _add_ellipticity(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--lambda", dest="lam", type=float, required=required,
                        default=None if required else settings.HEPS_ELLIPTICITY_LOWER,
                        help="Lower ellipticity constant.")
    parser.add_argument("--Lambda", dest="lam_upper", type=float, required=required,
                        default=None if required else settings.HEPS_ELLIPTICITY_UPPER,
                        help="Upper ellipticity constant.")


def build_cli() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heps",
        description="Bounds for the Hessian integrability exponent of Pucci supersolutions.",
    )
    parser.add_argument(
        "--log-level",
        default=settings.HEPS_LOG_LEVEL,
        help="Logging level for diagnostics on stderr (default from HEPS_LOG_LEVEL).",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    bound = commands.add_parser("bound", help="Two-sided estimate at one ellipticity.")
    _add_ellipticity(bound, required=True)

    curve = commands.add_parser("curve", help="Sweep tau and write the bound curves.")
    curve.add_argument("--tau-min", type=float, default=0.01)
    curve.add_argument("--tau-max", type=float, default=0.99)
    curve.add_argument("--steps", type=int, default=99)
    curve.add_argument("--out", type=Path, required=True)
    curve.add_argument("--format", choices=("csv", "svg"), default="csv")
    curve.add_argument("--threads", type=int, default=None,
                       help="Worker threads; defaults to HEPS_THREADS (0 = sequential).")

    solve = commands.add_parser("solve", help="Solve the tangency system for one c.")
    solve.add_argument("--c", type=float, required=True)

    m0_cmd = commands.add_parser("m0", help="sup of x^n / (-ln(1 - x)).")
    m0_cmd.add_argument("--n", type=int, default=2)

    lab = commands.add_parser("lab", help="Grid experiments.")
    lab_commands = lab.add_subparsers(dest="lab_command", required=True)

    lab_corpus = lab_commands.add_parser("corpus", help="Sample a corpus function to a grid file.")
    lab_corpus.add_argument("--name", required=True)
    lab_corpus.add_argument("--n", type=int, default=257)
    lab_corpus.add_argument("--domain", type=_pair, default=(-1.0, 1.0))
    lab_corpus.add_argument("--out", type=Path, required=True)

    lab_envelope = lab_commands.add_parser("envelope", help="Write Gamma_u^a as a grid file.")
    lab_envelope.add_argument("--grid", type=Path, required=True)
    lab_envelope.add_argument("--a", type=float, default=0.0)
    lab_envelope.add_argument("--method", choices=("hull", "legendre"), default="hull")
    lab_envelope.add_argument("--out", type=Path, required=True)

    lab_theta = lab_commands.add_parser("theta", help="Curvature function at a point.")
    lab_theta.add_argument("--grid", type=Path, required=True)
    lab_theta.add_argument("--point", type=_pair, required=True)
    lab_theta.add_argument("--method", choices=("lp", "bisection"), default="lp")

    lab_decay = lab_commands.add_parser("decay", help="Fit the level-set decay exponent.")
    lab_decay.add_argument("--grid", type=Path, required=True)
    lab_decay.add_argument("--t0", type=float, default=2.0)
    lab_decay.add_argument("--ratio", type=float, default=None,
                           help="Threshold ratio; defaults to the intrinsic 1 + delta_star.")
    lab_decay.add_argument("--count", type=int, default=5)
    _add_ellipticity(lab_decay, required=False)

    lab_lemma = lab_commands.add_parser("lemma", help="Check the sliding-paraboloid measure estimate.")
    lab_lemma.add_argument("--grid", type=Path, required=True)
    _add_ellipticity(lab_lemma, required=True)
    lab_lemma.add_argument("--a", type=float, required=True)
    lab_lemma.add_argument("--delta", type=float, required=True)
    return parser


def _join_signed_values(argv: Sequence[str]) -> List[str]:
    """Rewrite ``--domain -1,1`` as ``--domain=-1,1`` so argparse keeps the value."""
    out: List[str] = []
    items = list(argv)
    k = 0
    while k < len(items):
        item = items[k]
        if item in SIGNED_PAIR_OPTIONS and k + 1 < len(items) and items[k + 1].startswith("-"):
            out.append(f"{item}={items[k + 1]}")
            k += 2
            continue
        out.append(item)
        k += 1
    return out


def _ellipticity(args: argparse.Namespace) -> Ellipticity:
    return Ellipticity(lower=args.lam, upper=args.lam_upper)


def _load_grid(path: Path) -> GridFunction:
    try:
        return read_grid(path)
    except OSError as exc:
        raise InvalidInputError(f"cannot read grid file {path}: {exc.strerror or exc}")


def _write_text(path: Path, text: str) -> None:
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc.strerror or exc}")


def _write_grid(grid: GridFunction, path: Path) -> None:
    try:
        write_grid(grid, path)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc.strerror or exc}")


def cmd_bound(args: argparse.Namespace) -> Dict[str, Any]:
    ell = _ellipticity(args)
    report = bound_report(ell)
    return {
        "tau": report.tau,
        "c": report.c,
        "lower_opt": report.eps_lower_opt,
        "lower_interp": report.eps_lower_interp,
        "upper_ass": upper_bound_ass(ell),
        "upper_ndim_3": upper_bound_ndim(3, ell),
        "ratio": report.ratio,
        "theorem_product": (1.0 / ell.tau + 1.0) * report.eps_lower_opt,
    }


def cmd_curve(args: argparse.Namespace) -> Dict[str, Any]:
    table = curve_table(args.tau_min, args.tau_max, args.steps, threads=args.threads)
    text = curve_to_csv(table) if args.format == "csv" else curve_to_svg(table)
    _write_text(args.out, text)
    logger.info("wrote %s rows to %s", len(table.rows), args.out)
    return {"out": str(args.out), "format": args.format, "rows": len(table.rows)}


def cmd_solve(args: argparse.Namespace) -> Dict[str, Any]:
    point = solve_system(args.c, 2)
    return {
        "c": point.c,
        "x_c": point.x_c,
        "d_c": point.d_c,
        "residuals": [point.residual_value, point.residual_slope],
        "boundary_flag": point.boundary_flag,
    }


def cmd_m0(args: argparse.Namespace) -> Dict[str, Any]:
    maximizer, value = m0_maximizer(args.n)
    document: Dict[str, Any] = {"n": args.n, "m0": value, "maximizer": maximizer}
    if args.n == 2:
        document["note"] = m0_note()
    return document


def cmd_lab(args: argparse.Namespace) -> Optional[Dict[str, Any]]:
    if args.lab_command == "corpus":
        grid = corpus(args.name, args.n, args.domain)
        _write_grid(grid, args.out)
        return {"name": args.name, "out": str(args.out), "nx": grid.nx, "ny": grid.ny, "h": grid.h}

    u = _load_grid(args.grid)
    if args.lab_command == "envelope":
        envelope = a_envelope(u, args.a, method=args.method)
        _write_grid(envelope, args.out)
        return {"a": args.a, "out": str(args.out)}
    if args.lab_command == "theta":
        node = u.node_at(*args.point)
        value = theta(u, node, method=args.method)
        return {"point": list(u.position(node)), "node": list(node), "theta": value,
                "infinite": math.isinf(value)}
    if args.lab_command == "decay":
        fit = decay_fit(u, args.t0, ratio=args.ratio, count=args.count, ell=_ellipticity(args))
        document = fit.model_dump()
        document["epsilon_hat"] = fit.epsilon_hat
        return document
    if args.lab_command == "lemma":
        return lemma_check(u, _ellipticity(args), args.a, args.delta).model_dump()
    raise InvalidInputError(f"unknown lab command {args.lab_command!r}")


COMMANDS = {
    "bound": cmd_bound,
    "curve": cmd_curve,
    "solve": cmd_solve,
    "m0": cmd_m0,
    "lab": cmd_lab,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_cli()
    args = parser.parse_args(_join_signed_values(sys.argv[1:] if argv is None else argv))
    logging.basicConfig(
        level=str(args.log_level).upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )

    try:
        document = COMMANDS[args.command](args)
    except GridFormatError as exc:
        logger.error("malformed grid file: %s", exc)
        return EXIT_GRID
    except (InvalidInputError, ValidationError) as exc:
        logger.error("invalid input: %s", exc)
        return EXIT_INPUT
    except OutputError as exc:
        logger.error("%s", exc)
        return EXIT_OUTPUT
    except HepsError as exc:
        logger.error("%s", exc)
        return EXIT_RUNTIME

    if document is not None:
        print(to_json(document))
    return EXIT_OK
