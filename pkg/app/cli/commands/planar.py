import argparse

from app.cli.schemas import CliConfig, PlanarResponse
from app.cli.services import planar_service


def register(subparsers: argparse._SubParsersAction, parents: list) -> None:
    parser = subparsers.add_parser("planar", parents=parents, help="plane model of X(G_{m,2}) for odd m")
    parser.add_argument("-m", type=int, required=True)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, config: CliConfig) -> PlanarResponse:
    return planar_service(args.m, config)
