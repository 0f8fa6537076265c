import argparse
import sys


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out-dir", "-o", default=".", help="Directory for the artifacts")


def _add_check_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--checks",
        nargs="+",
        help="Mesh checks to run (all by default). Full names (planarity, convexity, "
        "pairwise-intersection, combinatorics) or codes (PLN, CVX, PWI, CMB)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="highgenus",
        description="Construct and certify high-genus polyhedral surfaces with exact arithmetic.",
    )
    parser.add_argument(
        "--log-level", default="INFO", choices=["DEBUG", "INFO", "WARN", "ERROR"]
    )
    commands = parser.add_subparsers(dest="command", required=True)

    ringel = commands.add_parser("ringel", help="Neighborly triangulation on 12s+7 vertices")
    source = ringel.add_mutually_exclusive_group(required=True)
    source.add_argument("--s", type=int, help="Build the surface on n = 12s+7 vertices")
    source.add_argument("--network", help="Trace a current graph file instead")
    ringel.add_argument(
        "--current-graph",
        action="store_true",
        help="Also write the current graph the scheme is generated from",
    )
    _add_output_options(ringel)

    heffter = commands.add_parser("heffter", help="Heffter's neighborly surface over F_q")
    heffter.add_argument("--q", type=int, required=True, help="Field order, q = 4g+1")
    heffter.add_argument(
        "--generator",
        type=int,
        help="Canonical index of the multiplicative generator (smallest by default)",
    )
    heffter.add_argument(
        "--triangulate", action="store_true", help="Use the stellar triangulation"
    )
    _add_output_options(heffter)

    mirror = commands.add_parser("mirror", help="The mirror surface Q_m in the m-cube")
    mirror.add_argument("--m", type=int, required=True)
    mirror.add_argument(
        "--triangulate", action="store_true", help="Split every quad along its parity diagonal"
    )
    _add_output_options(mirror)

    realize = commands.add_parser("realize", help="Realize Q_m in R^3 and certify it")
    realize.add_argument("--m", type=int, required=True)
    realize.add_argument("--eps", default="1/4", help="Deformation parameter, e.g. 1/4 or 0.25")
    realize.add_argument("--f0", type=int, default=0, help="Index of the base facet")
    realize.add_argument("--out", help="Mesh file; .json, .off or .obj")
    realize.add_argument("--format", choices=["json", "off", "obj"])
    realize.add_argument(
        "--decimals", type=int, default=12, help="Decimal places in OFF/OBJ coordinates"
    )
    realize.add_argument("--triangulate", action="store_true")
    realize.add_argument(
        "--force",
        action="store_true",
        help="Write the mesh even if certification fails",
    )
    _add_check_options(realize)
    _add_output_options(realize)

    verify = commands.add_parser("verify", help="Re-certify a mesh file")
    verify.add_argument("input", help="Mesh file: JSON, or OFF/OBJ with a .json sidecar")
    verify.add_argument("--out", help="Write the certificate JSON here")
    _add_check_options(verify)
    _add_output_options(verify)

    report = commands.add_parser("report", help="Markdown report of a surface or mesh file")
    report.add_argument("input")
    report.add_argument("--out", help="Markdown file (stdout by default)")
    report.add_argument(
        "--no-collapse",
        action="store_true",
        help="Don't use collapsible sections in the report",
    )
    _add_check_options(report)
    _add_output_options(report)
    return parser


def cli(argv: list[str] | None = None):
    parser = build_parser()
    args = parser.parse_args(argv)

    import logging

    logging.basicConfig(level=getattr(logging, args.log_level))

    from pydantic import ValidationError

    from .config import RunConfig
    from .errors import HighGenusError

    try:
        config = RunConfig(
            command=args.command,
            s=getattr(args, "s", None),
            q=getattr(args, "q", None),
            m=getattr(args, "m", None),
            epsilon=getattr(args, "eps", "1/4"),
            f0=getattr(args, "f0", 0),
            generator=getattr(args, "generator", None),
            input=getattr(args, "input", None),
            network=getattr(args, "network", None),
            out=getattr(args, "out", None),
            out_dir=args.out_dir,
            format=getattr(args, "format", None),
            decimals=getattr(args, "decimals", 12),
            triangulate=getattr(args, "triangulate", False),
            current_graph=getattr(args, "current_graph", False),
            force=getattr(args, "force", False),
            no_collapse=getattr(args, "no_collapse", False),
            checks=getattr(args, "checks", None),
        )
    except ValidationError as e:
        parser.error(f"invalid arguments: {e.errors()[0]['loc'][0]}: {e.errors()[0]['msg']}")
    except HighGenusError as e:
        logging.getLogger(__name__).critical(str(e))
        sys.exit(e.exit_code)

    from .main import main

    sys.exit(main(config))


if __name__ == "__main__":
    cli()
