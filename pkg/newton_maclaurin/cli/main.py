"""
Command-line interface for the Newton-Maclaurin lab.

Every command reads a JSON input document (--input FILE, inline JSON or
"-" for stdin) and prints a human readable line or, with --json, the JSON
payload. --assert turns a failed inequality into exit code 1.

Exit codes: 0 ok, 1 violated, 2 input error, 3 hypothesis error.
"""

import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Sequence, Type

import click

from .. import __version__
from ..arith import format_rational
from ..condition_c import check_condition_c
from ..constructions import (
    augment,
    build_P1,
    build_P2,
    build_P3,
    derived_triple,
    special_lagrangian_alpha,
    verify_interlacing,
    verify_P3_real_rooted,
    verify_P_decomposition,
)
from ..errors import HypothesisError, InputError
from ..inequalities import (
    certify_complex,
    general_newton_Q,
    general_newton_S,
    maclaurin_chain_S,
    newton_gap_E,
    newton_gap_S,
    q_gap,
    sigma_gap,
    theta,
)
from ..schema import (
    AlphaQuery,
    AugmentQuery,
    ChainQuery,
    CombinationQuery,
    ConstructQuery,
    LabModel,
    LagrangianQuery,
    MeansQuery,
    SearchConfig,
    SweepQuery,
    ThetaQuery,
    VectorQuery,
)
from ..search import find_counterexample, sweep_gap
from ..symmfn import e_mean, q_eval, s_eval, sigma_all
from ..utils import load_input, setup_logging

logger = logging.getLogger(__name__)

EXIT_CODES = {"ok": 0, "violated": 1, "input-error": 2, "hypothesis-error": 3}


@dataclass
class CommandResult:
    """Outcome of one invocation: a status and the JSON payload."""

    status: str
    payload: Dict[str, Any] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


def io_options(func: Callable) -> Callable:
    """Options shared by every command."""
    func = click.option(
        "--assert", "check", is_flag=True,
        help="Exit with code 1 when the checked inequality fails",
    )(func)
    func = click.option(
        "--input", "-i", "source",
        help="JSON input document: a file path, an inline JSON object or - for stdin",
    )(func)
    func = click.option("--json", "as_json", is_flag=True, help="Print the JSON payload")(func)
    return func


def width_option(func: Callable) -> Callable:
    """--width for commands that report isolating intervals."""
    return click.option("--width", "-w", help="Isolation width for the reported roots, e.g. 1/1000000")(func)


def _load(source: Optional[str], as_json: bool, model: Type[LabModel], **overrides: Any) -> Any:
    state = click.get_current_context().ensure_object(dict)
    state["as_json"] = as_json
    return load_input(source, model, overrides)


def _require(value: Optional[int], name: str) -> int:
    if value is None:
        raise InputError(f"the input document needs the field {name!r}")
    return value


def _emit(payload: Dict[str, Any], text: str, as_json: bool, check: bool = False, holds: Optional[bool] = None) -> None:
    """Print the result and record it for run()."""
    status = "violated" if check and holds is False else "ok"
    click.echo(json.dumps(payload) if as_json else text)
    click.get_current_context().ensure_object(dict)["result"] = CommandResult(status, payload)


def _emit_report(report: Any, as_json: bool, check: bool) -> None:
    _emit(report.to_json(), str(report), as_json, check, report.holds)


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False),
    default="WARNING",
    help="Set the logging level",
)
@click.option(
    "--json-logs",
    is_flag=True,
    help="Output logs in JSON format",
)
@click.version_option(version=__version__)
def cli(log_level: str, json_logs: bool) -> None:
    """Newton-Maclaurin lab - exact checks of Newton-Maclaurin type inequalities."""
    setup_logging(log_level, json_logs)


@cli.command()
@io_options
def sigma(as_json: bool, source: Optional[str], check: bool) -> None:
    """Elementary symmetric functions sigma_k(x); all of them when k is absent."""
    query = _load(source, as_json, VectorQuery)
    sigmas = sigma_all(query.x)
    if query.k is None:
        values = [format_rational(v) for v in sigmas]
        _emit({"sigma": values}, "\n".join(f"sigma_{k} = {v}" for k, v in enumerate(values)), as_json)
        return
    value = format_rational(sigmas[query.k]) if 0 <= query.k < len(sigmas) else "0"
    _emit({"k": query.k, "sigma": value}, f"sigma_{query.k} = {value}", as_json)


@cli.command("e-mean")
@io_options
def e_mean_command(as_json: bool, source: Optional[str], check: bool) -> None:
    """Symmetric mean E_k(x) = sigma_k(x) / C(n, k)."""
    query = _load(source, as_json, VectorQuery)
    k = _require(query.k, "k")
    value = format_rational(e_mean(query.x, k))
    _emit({"k": k, "E": value}, f"E_{k} = {value}", as_json)


@cli.command("eval-s")
@io_options
def eval_s(as_json: bool, source: Optional[str], check: bool) -> None:
    """S_{k;s}(x) = E_k + sum_i alpha_i E_{k-i}."""
    query = _load(source, as_json, CombinationQuery)
    value = format_rational(s_eval(query.x, query.alpha, query.k))
    _emit({"k": query.k, "value": value}, f"S_{query.k} = {value}", as_json)


@cli.command("eval-q")
@io_options
def eval_q(as_json: bool, source: Optional[str], check: bool) -> None:
    """Q_{k;s}(x) = sigma_k + sum_i alpha_i sigma_{k-i}."""
    query = _load(source, as_json, CombinationQuery)
    value = format_rational(q_eval(query.x, query.alpha, query.k))
    _emit({"k": query.k, "value": value}, f"Q_{query.k} = {value}", as_json)


@cli.command("condition-c")
@io_options
@width_option
def condition_c(as_json: bool, source: Optional[str], check: bool, width: Optional[str]) -> None:
    """Decide whether t^s + alpha_1 t^(s-1) + ... + alpha_s has only real roots."""
    query = _load(source, as_json, AlphaQuery, width=width)
    if query.width is None:
        report = check_condition_c(query.alpha)
    else:
        report = check_condition_c(query.alpha, query.width)
    _emit_report(report, as_json, check)


@cli.command("gap-e")
@io_options
def gap_e(as_json: bool, source: Optional[str], check: bool) -> None:
    """Classical Newton inequality E_k^2 >= E_{k-1} E_{k+1}."""
    query = _load(source, as_json, VectorQuery)
    _emit_report(newton_gap_E(query.x, _require(query.k, "k")), as_json, check)


@cli.command("gap-sigma")
@io_options
def gap_sigma(as_json: bool, source: Optional[str], check: bool) -> None:
    """sigma_k^2 - sigma_{k-1} sigma_{k+1} >= theta sigma_k^2."""
    query = _load(source, as_json, VectorQuery)
    _emit_report(sigma_gap(query.x, _require(query.k, "k")), as_json, check)


@cli.command("gap-s")
@io_options
def gap_s(as_json: bool, source: Optional[str], check: bool) -> None:
    """Newton inequality for S: S_k^2 >= S_{k-1} S_{k+1}."""
    query = _load(source, as_json, CombinationQuery)
    _emit_report(newton_gap_S(query.x, query.alpha, query.k), as_json, check)


@cli.command("gap-q")
@io_options
def gap_q(as_json: bool, source: Optional[str], check: bool) -> None:
    """Newton inequality for Q: Q_k^2 - Q_{k-1} Q_{k+1} >= theta Q_k^2."""
    query = _load(source, as_json, CombinationQuery)
    _emit_report(q_gap(query.x, query.alpha, query.k), as_json, check)


@cli.command()
@io_options
def maclaurin(as_json: bool, source: Optional[str], check: bool) -> None:
    """Maclaurin chain S_1 >= S_2^(1/2) >= ... >= S_k^(1/k)."""
    query = _load(source, as_json, CombinationQuery)
    _emit_report(maclaurin_chain_S(query.x, query.alpha, query.k), as_json, check)


@cli.command("chain-s")
@io_options
def chain_s(as_json: bool, source: Optional[str], check: bool) -> None:
    """General Newton form S_l S_{k-1} >= S_{l-1} S_k."""
    query = _load(source, as_json, ChainQuery)
    _emit_report(general_newton_S(query.x, query.alpha, query.l, query.k), as_json, check)


@cli.command("chain-q")
@io_options
def chain_q(as_json: bool, source: Optional[str], check: bool) -> None:
    """General Newton form Q_l Q_{k-1} >= (1 + Theta) Q_{l-1} Q_k."""
    query = _load(source, as_json, ChainQuery)
    _emit_report(general_newton_Q(query.x, query.alpha, query.l, query.k), as_json, check)


@cli.command("certify-complex")
@io_options
def certify_complex_command(as_json: bool, source: Optional[str], check: bool) -> None:
    """Certify that sum_j C(n,j) E_j t^(n-j) has non-real roots."""
    query = _load(source, as_json, MeansQuery)
    certificate = certify_complex(query.E, query.alpha, query.k)
    if certificate is None:
        _emit({"has_complex_roots": None}, "no certificate: the gap is nonnegative", as_json)
        return
    _emit(certificate.to_json(), str(certificate), as_json)


@cli.group()
def construct() -> None:
    """Derived polynomials P1, P2, P3 and their root structure."""


@construct.command("p1")
@io_options
def construct_p1(as_json: bool, source: Optional[str], check: bool) -> None:
    """P1(t) = P'(t) / n."""
    query = _load(source, as_json, ConstructQuery)
    p1 = build_P1(query.x)
    _emit({"polynomial": p1.to_json()}, f"P1(t) = {p1}", as_json)


@construct.command("p2")
@io_options
def construct_p2(as_json: bool, source: Optional[str], check: bool) -> None:
    """P2(t) = t P1(t) - P(t)."""
    query = _load(source, as_json, ConstructQuery)
    p2 = build_P2(query.x)
    _emit({"polynomial": p2.to_json()}, f"P2(t) = {p2}", as_json)


@construct.command("p3")
@io_options
def construct_p3(as_json: bool, source: Optional[str], check: bool) -> None:
    """P3(t) = P2(t) + b P1(t)."""
    query = _load(source, as_json, ConstructQuery)
    p3 = build_P3(query.x, query.b)
    _emit({"polynomial": p3.to_json()}, f"P3(t) = {p3}", as_json)


@construct.command("decompose")
@io_options
def construct_decompose(as_json: bool, source: Optional[str], check: bool) -> None:
    """Check P(t) = t P1(t) - P2(t)."""
    query = _load(source, as_json, ConstructQuery)
    triple = derived_triple(query.x)
    holds = verify_P_decomposition(query.x)
    payload = {"holds": holds, **triple.to_json()}
    text = f"P = {triple.P}, P1 = {triple.P1}, P2 = {triple.P2}: identity {'holds' if holds else 'FAILS'}"
    _emit(payload, text, as_json, check, holds)


@construct.command("interlace")
@io_options
@width_option
def construct_interlace(as_json: bool, source: Optional[str], check: bool, width: Optional[str]) -> None:
    """Check that the roots of P1 and P2 interlace."""
    query = _load(source, as_json, ConstructQuery, width=width)
    if query.width is None:
        report = verify_interlacing(query.x)
    else:
        report = verify_interlacing(query.x, query.width)
    _emit_report(report, as_json, check)


@construct.command("p3-real")
@io_options
@width_option
def construct_p3_real(as_json: bool, source: Optional[str], check: bool, width: Optional[str]) -> None:
    """Check that P3 has only real roots."""
    query = _load(source, as_json, ConstructQuery, width=width)
    if query.width is None:
        report = verify_P3_real_rooted(query.x, query.b)
    else:
        report = verify_P3_real_rooted(query.x, query.b, query.width)
    _emit_report(report, as_json, check)


@cli.command("augment")
@io_options
def augment_command(as_json: bool, source: Optional[str], check: bool) -> None:
    """Y_s = (beta, x), whose sigma_k equal Q_{k;s}(x)."""
    query = _load(source, as_json, AugmentQuery)
    y = [format_rational(v) for v in augment(query.x, query.beta)]
    _emit({"y": y}, f"Y = ({', '.join(y)})", as_json)


@cli.command()
@io_options
def lagrangian(as_json: bool, source: Optional[str], check: bool) -> None:
    """The special Lagrangian operator as sign * C * S_{K;s}."""
    query = _load(source, as_json, LagrangianQuery)
    form = special_lagrangian_alpha(query.n)
    _emit(form.to_json(), str(form), as_json)


@cli.command()
@io_options
@click.option("--seed", type=int, help="Seed of the sample streams (required here or in the document)")
@click.option("--samples", type=int, help="Sample budget")
@click.option("--workers", type=int, default=1, show_default=True, help="Worker processes")
def search(
    as_json: bool, source: Optional[str], check: bool,
    seed: Optional[int], samples: Optional[int], workers: int,
) -> None:
    """Random search for a negative Newton gap where Condition C fails."""
    cfg = _load(source, as_json, SearchConfig, seed=seed, samples=samples)
    witness = find_counterexample(cfg, workers=workers)
    if witness is None:
        _emit({"found": False}, f"no violation in {cfg.samples} samples", as_json)
        return
    _emit({"found": True, **witness.to_json()}, str(witness), as_json, check, holds=False)


@cli.command()
@io_options
@click.option("--workers", type=int, default=1, show_default=True, help="Worker processes")
def sweep(as_json: bool, source: Optional[str], check: bool, workers: int) -> None:
    """Evaluate a Newton gap over a grid of x vectors."""
    query = _load(source, as_json, SweepQuery)
    reports = sweep_gap(query.alpha, query.k, query.grid, query.form, workers=workers)
    holds = all(r.holds for r in reports)
    payload = {"holds": holds, "reports": [r.to_json() for r in reports]}
    _emit(payload, "\n".join(str(r) for r in reports), as_json, check, holds)


@cli.command("theta")
@io_options
def theta_command(as_json: bool, source: Optional[str], check: bool) -> None:
    """theta(n, s, k) = ((C_{n+s}^k)^2 - C_{n+s}^{k-1} C_{n+s}^{k+1}) / (C_{n+s}^k)^2."""
    query = _load(source, as_json, ThetaQuery)
    value = format_rational(theta(query.n, query.s, query.k))
    _emit({"theta": value}, f"theta = {value}", as_json)


def _failure(state: Dict[str, Any], status: str, message: str, **extra: Any) -> CommandResult:
    payload = {"status": status, "error": message, **extra}
    logger.debug(f"Command failed with {status}: {message}", exc_info=True)
    click.echo(f"Error: {message}", err=True)
    if state.get("as_json"):
        click.echo(json.dumps(payload))
    return CommandResult(status, payload)


def run(argv: Sequence[str]) -> CommandResult:
    """Run one command line and return its status and payload."""
    state: Dict[str, Any] = {}
    try:
        cli.main(args=list(argv), prog_name="newton-maclaurin", standalone_mode=False, obj=state)
    except HypothesisError as e:
        return _failure(state, "hypothesis-error", str(e), hypothesis=e.hypothesis)
    except click.ClickException as e:
        return _failure(state, "input-error", e.format_message())
    except ValueError as e:
        return _failure(state, "input-error", str(e))
    return state.get("result", CommandResult("ok"))


def main() -> None:
    sys.exit(run(sys.argv[1:]).exit_code)


if __name__ == "__main__":
    main()
