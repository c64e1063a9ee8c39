"""Command-line surface: argparse in, CommandRequest through BBPService, JSON or text out."""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Union

from pydantic import BaseModel, ValidationError

from bbpkit import __version__
from bbpkit.config import Settings, get_settings
from bbpkit.exceptions import BBPError, ParseError, UsageError
from bbpkit.formulas.display import render_formula, render_tag
from bbpkit.models import (
    BBPFormula,
    CatalogListing,
    CommandOutcome,
    CommandRequest,
    ErrorBody,
    ErrorResponse,
    SplitResult,
    Subcommand,
    VerificationReport,
)
from bbpkit.models.command import PARAMS_BY_SUBCOMMAND
from bbpkit.services import BBPService

logger = logging.getLogger(__name__)


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors flow through the BBPError path."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = CommandParser(
        prog="bbpkit",
        description="Generate, transform and verify BBP-type formulas for log s and pi.",
    )
    parser.add_argument("--json", action="store_true", help="write JSON to standard output")
    parser.add_argument("--log-level", default=None, help="override BBP_LOG_LEVEL")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    gen = sub.add_parser("gen", help="instantiate the order-n series at s")
    gen.add_argument("--n", required=True)
    gen.add_argument("--s", required=True)
    gen.add_argument("--regroup")
    gen.add_argument("--base")

    regroup = sub.add_parser("regroup", help="regroup the order-n series at s modulo m")
    regroup.add_argument("--n", required=True)
    regroup.add_argument("--s", required=True)
    regroup.add_argument("--m", required=True)
    regroup.add_argument("--base")

    split = sub.add_parser("split", help="real and imaginary parts of a complex formula")
    split.add_argument("--input")
    split.add_argument("--n")
    split.add_argument("--s")
    split.add_argument("--m")
    split.add_argument("--base")

    combine = sub.add_parser("combine", help="exact linear combination of formulas")
    combine.add_argument("--terms", nargs="+", required=True, metavar="COEFF:NAME")

    catalog = sub.add_parser("catalog", help="show a stored formula or list them all")
    catalog.add_argument("name", nargs="?")
    catalog.add_argument("--verify", action="store_true")
    catalog.add_argument("--bits")

    verify = sub.add_parser("verify", help="compare a formula with its target constant")
    verify.add_argument("name")
    verify.add_argument("--bits")

    digits = sub.add_parser("digits", help="extract digits at a position")
    digits.add_argument("name")
    digits.add_argument("--pos", required=True)
    digits.add_argument("--count", required=True)
    digits.add_argument("--base", default="16")

    null = sub.add_parser("null", help="derive a null formula")
    null.add_argument("--derive", required=True, choices=["bbp16", "base64"])

    roots = sub.add_parser("roots", help="locate the roots of C_n")
    roots.add_argument("--n", required=True)
    roots.add_argument("--tol")

    eff = sub.add_parser("efficiency", help="nonzero coefficients per bit of base")
    eff.add_argument("name")

    subgroup = sub.add_parser("subgroup", help="write k through 2 and 2^N +- 1")
    subgroup.add_argument("--k", required=True)
    subgroup.add_argument("--nmax", required=True)
    subgroup.add_argument("--formula", action="store_true")
    return parser


def request_from_args(args: argparse.Namespace) -> CommandRequest:
    """Collect every supplied option as a string; multi-value options stay lists."""
    skip = {"subcommand", "json", "log_level"}
    parameters: Dict[str, Union[str, List[str]]] = {}
    for key, value in vars(args).items():
        if key in skip or value is None or value is False:
            continue
        if isinstance(value, list):
            parameters[key] = [str(v) for v in value]
            continue
        parameters[key] = "true" if value is True else str(value)
    return CommandRequest(subcommand=args.subcommand, parameters=parameters, json_output=args.json)


def _render_report(report: VerificationReport) -> str:
    status = "verified" if report.verified else "NOT verified"
    value = report.formula_interval
    return (
        f"{report.name or 'formula'} {status} against {render_tag(report.target)} at {report.bits} bits\n"
        f"  formula   in [{float(value.lower):.17g}, {float(value.upper):.17g}]\n"
        f"  reference in [{float(report.reference_interval.lower):.17g}, "
        f"{float(report.reference_interval.upper):.17g}]"
    )


def render(result: BaseModel) -> str:
    """Text rendering; formulas in summation notation."""
    if isinstance(result, BBPFormula):
        text = render_formula(result)
        verification = getattr(result, "verification", None)
        if verification is not None:
            text += "\n" + _render_report(verification)
        return text
    if isinstance(result, SplitResult):
        return f"{render_formula(result.real)}\n{render_formula(result.imaginary)}"
    if isinstance(result, VerificationReport):
        return _render_report(result)
    if isinstance(result, CatalogListing):
        width = max(len(e.name) for e in result.entries)
        return "\n".join(f"{e.name.ljust(width)}  {e.description}" for e in result.entries)
    lines = []
    for key, value in result.model_dump(mode="json").items():
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _error_outcome(exc: BBPError, json_output: bool) -> CommandOutcome:
    body = ErrorResponse(error=ErrorBody(**exc.to_dict()))
    if json_output:
        output = body.model_dump_json(indent=2, exclude_none=True)
    else:
        output = f"error: {body.model_dump_json(exclude_none=True)}"
    return CommandOutcome(exit_code=exc.exit_code, output=output, failed=True)


def run(request: CommandRequest, settings: Optional[Settings] = None) -> CommandOutcome:
    """Parse the parameters into their typed model, dispatch, and render."""
    service = BBPService(settings or get_settings())
    handlers: Dict[Subcommand, Callable] = {
        Subcommand.GEN: service.gen,
        Subcommand.REGROUP: service.regroup,
        Subcommand.SPLIT: service.split,
        Subcommand.COMBINE: service.combine,
        Subcommand.CATALOG: service.catalog,
        Subcommand.VERIFY: service.verify,
        Subcommand.DIGITS: service.digits,
        Subcommand.NULL: service.null,
        Subcommand.ROOTS: service.roots,
        Subcommand.EFFICIENCY: service.efficiency,
        Subcommand.SUBGROUP: service.subgroup,
    }
    try:
        try:
            params = PARAMS_BY_SUBCOMMAND[request.subcommand].model_validate(request.parameters)
        except ValidationError as exc:
            raise ParseError(
                "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors())
            ) from exc
        logger.debug("running %s with %s", request.subcommand.value, params)
        result = handlers[request.subcommand](params)
    except BBPError as exc:
        logger.debug("%s failed: %s", request.subcommand.value, exc)
        return _error_outcome(exc, request.json_output)

    if request.json_output:
        return CommandOutcome(exit_code=0, output=result.model_dump_json(indent=2))
    return CommandOutcome(exit_code=0, output=render(result))


def _emit(outcome: CommandOutcome, json_output: bool) -> int:
    stream = sys.stderr if outcome.failed and not json_output else sys.stdout
    print(outcome.output, file=stream)
    return outcome.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        json_output = "--json" in argv
        return _emit(_error_outcome(exc, json_output), json_output)
    settings = get_settings()
    logging.basicConfig(
        level=(args.log_level or settings.BBP_LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    return _emit(run(request_from_args(args), settings), args.json)
