import argparse

from app.cli.schemas import CliConfig, TracePolyResponse
from app.cli.services import trace_poly_service


def register(subparsers: argparse._SubParsersAction, parents: list) -> None:
    parser = subparsers.add_parser("trace-poly", parents=parents, help="F(a, b) = tr(A^a B^-b)")
    parser.add_argument("-a", type=int, required=True)
    parser.add_argument("-b", type=int, required=True)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, config: CliConfig) -> TracePolyResponse:
    return trace_poly_service(args.a, args.b)
