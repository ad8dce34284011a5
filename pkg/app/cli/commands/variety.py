import argparse
from typing import Union

from app.cli.render import render_dot
from app.cli.schemas import CliConfig, VarietyResponse
from app.cli.services import variety_report, variety_service


def register(subparsers: argparse._SubParsersAction, parents: list) -> None:
    parser = subparsers.add_parser("variety", parents=parents, help="lines, components and intersection matrix")
    parser.add_argument("-m", type=int, required=True)
    parser.add_argument("-n", type=int, required=True)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, config: CliConfig) -> Union[VarietyResponse, str]:
    report = variety_report(args.m, args.n)
    if config.format == "dot":
        return render_dot(report)
    return variety_service(report)
