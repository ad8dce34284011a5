import argparse

from app.cli.schemas import CliConfig, FamilyResponse
from app.cli.services import FAMILY_KINDS, family_service


def register(subparsers: argparse._SubParsersAction, parents: list) -> None:
    parser = subparsers.add_parser("family", parents=parents, help="univariate families, cyclotomic and trace forms")
    parser.add_argument("kind", choices=FAMILY_KINDS)
    parser.add_argument("k", type=int)
    parser.add_argument("--factor", action="store_true", help="factor f, s or sigma into q-polynomials")
    parser.add_argument("--theta", type=float, help="compare f_k or h_k at 2cos(theta) with the closed form")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, config: CliConfig) -> FamilyResponse:
    return family_service(args.kind, args.k, factor=args.factor, theta=args.theta)
