"""
Command line entry point.

    python cli.py jones --pd trefoil.pd --route both
    python cli.py tutte --pd "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"
    python cli.py twist --pd knot.pd
    python cli.py bounds --coeffs 1,-4,11,-23 ... --min-exp -12 --crossings 13
    python cli.py verify --pd knot.pd
    python cli.py census-scan --in data/census_fixture.csv --out-dir out/ --ti 1,2,3,4
    python cli.py serve

Exit status: 0 on success, 1 on a validation or identity failure, 2 on usage errors.
"""
import argparse
import logging
import os
import sys
import dotenv
import uvicorn
from pydantic import ValidationError
from typing import Any, Dict, List, Optional

from knots.census import FILTERS, run_census
from knots.diagram import checkerboard_graphs, is_alternating, positive_checkerboard, writhe
from knots.errors import KnotToolkitError
from knots.invariants import twist_number_from_graphs, twist_profile, verify_diagram, volume_bounds
from knots.jones import ROUTES, jones_by_route
from knots.tutte import tutte_deletion_contraction
from utils.request_utils import (
    OUTPUT_FORMATS,
    format_output,
    load_diagram,
    parse_coefficients,
    polynomial_from_coefficients,
)

# Load environment variables
dotenv.load_dotenv()

# Configure logging
log_level = os.getenv("LOG_LEVEL", "ERROR").upper()
logging.basicConfig(
    level=getattr(logging, log_level, logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    datefmt='%Y-%m-%d %H:%M:%S'
)
logger = logging.getLogger(__name__)


def _coefficient_text(poly) -> str:
    return " ".join(f"{e}:{c}" for e, c in poly.coefficients())


def _jones(args) -> List[Dict[str, Any]]:
    diagram = load_diagram(args.pd)
    jones = jones_by_route(diagram, args.route)
    return [{
        "polynomial": jones.poly.render(descending=args.descending),
        "coefficients": _coefficient_text(jones.poly),
        "route": args.route,
        "writhe": writhe(diagram),
    }]


def _tutte(args) -> List[Dict[str, Any]]:
    diagram = load_diagram(args.pd)
    if args.graph == "positive":
        graph = positive_checkerboard(diagram)
    else:
        purple, gold = checkerboard_graphs(diagram)
        graph = purple if args.graph == "purple" else gold
    return [{
        "polynomial": tutte_deletion_contraction(graph).render(),
        "graph": args.graph,
        "vertices": graph.vertex_count,
        "edges": graph.edge_count,
    }]


def _twist(args) -> List[Dict[str, Any]]:
    diagram = load_diagram(args.pd)
    jones = jones_by_route(diagram, "both")
    profile = twist_profile(jones)
    record = {
        "polynomial": jones.poly.render(),
        "span": profile.span,
        "twist_numbers": ",".join(str(t) for t in profile.twist_numbers),
    }
    if is_alternating(diagram):
        record["twist_from_graphs"] = twist_number_from_graphs(diagram)
    return [record]


def _bounds(args) -> List[Dict[str, Any]]:
    if args.coeffs is not None:
        poly = polynomial_from_coefficients(parse_coefficients(args.coeffs), args.min_exp)
        crossings = args.crossings
    else:
        diagram = load_diagram(args.pd)
        poly = jones_by_route(diagram, "both").poly
        crossings = args.crossings if args.crossings is not None else diagram.crossing_count
    profile = twist_profile(poly)
    bounds = volume_bounds(profile, crossings)
    return [{"twist": profile.twist(1), **bounds.model_dump()}]


def _verify(args) -> List[Dict[str, Any]]:
    report = verify_diagram(load_diagram(args.pd))
    record = {
        "jones": report.jones,
        "T(K)": report.twist_number if report.twist_number is not None else report.jones_twist_number,
        **{name: "pass" if ok else "FAIL" for name, ok in report.checks.items()},
        "result": "pass" if report.passed else "FAIL",
    }
    args.failed = not report.passed
    return [record]


def _census(args) -> List[Dict[str, Any]]:
    ti = parse_coefficients(args.ti) if args.ti else None
    summary = run_census(args.input, args.out_dir, ti, args.filter, args.allow_any_ti, args.jobs)
    args.failed = bool(summary["route_mismatches"] or summary["bound_violations"])
    return [summary]


def _serve(args) -> List[Dict[str, Any]]:
    logger.info(f"Starting HTTP service on {args.host}:{args.port}")
    uvicorn.run("main:app", host=args.host, port=args.port)
    return []


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knots", description="Jones polynomials, twist numbers and volume bounds of knots")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_output(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--format", choices=OUTPUT_FORMATS, default="text", help="Output format")
        p.add_argument("--out", default=None, help="Write output to this file instead of stdout")
        return p

    p = with_output(sub.add_parser("jones", help="Jones polynomial of a PD code"))
    p.add_argument("--pd", required=True, help="PD file or inline PD string")
    p.add_argument("--route", choices=ROUTES, default="both")
    p.add_argument("--descending", action="store_true", help="Print highest exponent first")
    p.set_defaults(handler=_jones)

    p = with_output(sub.add_parser("tutte", help="Tutte polynomial of a checkerboard graph"))
    p.add_argument("--pd", required=True)
    p.add_argument("--graph", choices=("positive", "purple", "gold"), default="positive")
    p.set_defaults(handler=_tutte)

    p = with_output(sub.add_parser("twist", help="Twist numbers T_i from the Jones polynomial"))
    p.add_argument("--pd", required=True)
    p.set_defaults(handler=_twist)

    p = with_output(sub.add_parser("bounds", help="Hyperbolic volume bounds"))
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--pd")
    source.add_argument("--coeffs", help="Comma-separated coefficients a_n..a_m (use --coeffs=-1,... if the first is negative)")
    p.add_argument("--min-exp", type=int, default=0, help="Exponent of the first coefficient")
    p.add_argument("--crossings", type=int, default=None, help="Crossing number for the Adams bound")
    p.set_defaults(handler=_bounds)

    p = with_output(sub.add_parser("verify", help="Check the coefficient and twist-number identities on one diagram"))
    p.add_argument("--pd", required=True)
    p.set_defaults(handler=_verify)

    p = with_output(sub.add_parser("census-scan", help="Scan a census CSV and emit scatter data"))
    p.add_argument("--in", dest="input", required=True, help="Census CSV")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--ti", default=None, help="Comma-separated twist indices, default from config")
    p.add_argument("--filter", choices=FILTERS, default=None)
    p.add_argument("--allow-any-ti", action="store_true", help="Allow twist indices above 4")
    p.add_argument("--jobs", type=int, default=None, help="Parallel jobs, default from config")
    p.set_defaults(handler=_census)

    p = sub.add_parser("serve", help="Run the HTTP service")
    p.add_argument("--host", default="0.0.0.0")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=_serve, format="text", out=None)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 2
    args.failed = False
    logger.info(f"Running command {args.command}")
    try:
        records = args.handler(args)
        if records:
            text = format_output(records, args.format)
            if args.out:
                with open(args.out, "w") as f:
                    f.write(text)
            else:
                sys.stdout.write(text)
    except KnotToolkitError as e:
        logger.error(f"{args.command} failed: {type(e).__name__}: {e}")
        sys.stderr.write(f"error: {type(e).__name__}: {e}\n")
        return 1
    except OSError as e:
        logger.error(f"{args.command} failed: {e}")
        sys.stderr.write(f"error: {e}\n")
        return 1
    except ValidationError as e:
        logger.error(f"{args.command} failed validation: {e}")
        sys.stderr.write(f"error: ValidationError: {e}\n")
        return 1
    return 1 if args.failed else 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
