"""Command line interface for oinftyideals.

Every command reads an instance file and prints a report::

    oinfty analyze instance.json --format json
    oinfty local instance.json --gamma 0

Exit codes: 0 on success, 2 on invalid input, 3 when a size limit or search
budget is exceeded, 4 when an internal invariant breaks.
"""
from __future__ import annotations

from fractions import Fraction
import functools
import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import click

from .abelian import GroupElem
from .condition import check_condition
from .exceptions import (
    BudgetExceededError,
    ConditionNotViolatedError,
    Error,
    InternalInvariantBrokenError,
    InvalidElementError,
    InvalidGroupError,
    InvalidInstanceError,
    NotFiniteError,
    SizeLimitError,
    UnsupportedRepresentationError,
)
from .instance import InstanceSpec
from .invariant import h_set, InvariantPair, InvariantSet
from .lattice import enumerate_ideals
from .monoid import WeightSystem
from .prim import is_closed_in_prim, prim_space
from .prime import in_delta, is_prime_set, principal_base
from .structure import connes_spectrum, fiber_report, flags, k_theory
from .ypair import CirclePoint, local_subquotients, YPair

logger = logging.getLogger(__name__)

EXIT_INVALID = 2
EXIT_LIMIT = 3
EXIT_INTERNAL = 4

_INVALID = (
    InvalidInstanceError,
    InvalidElementError,
    InvalidGroupError,
    NotFiniteError,
    UnsupportedRepresentationError,
    ConditionNotViolatedError,
)
_LIMIT = (SizeLimitError, BudgetExceededError)


class Context:
    """Loaded instance and effective options of one invocation."""

    def __init__(
        self,
        instance: InstanceSpec,
        fmt: str,
        size_limit: Optional[int],
        budget: Optional[int],
        window: Optional[int],
    ) -> None:
        """Inits the context; unset options fall back to the instance file."""
        self.instance = instance
        self.format = fmt
        self.size_limit = size_limit or instance.size_limit
        self.window = window
        self.weights: WeightSystem = instance.weights(budget or instance.search_budget)

    def elements(self, text: str, field: str) -> List[GroupElem]:
        """Parses ``"a,b;c,d"`` into elements."""
        elements = []
        for chunk in text.split(";"):
            if not chunk.strip():
                continue
            try:
                coords = [int(c) for c in chunk.split(",")]
            except ValueError as e:
                raise InvalidInstanceError(field, f"{chunk!r} is not an integer vector") from e
            elements.append(self.instance.element(coords, field))
        return elements

    def set_from(self, data: Any, field: str) -> InvariantSet:
        """Returns the set described by "full", "empty" or bases and points."""
        if data == "full":
            return InvariantSet.full(self.weights)
        if data in ("empty", None):
            return InvariantSet.empty(self.weights)
        if not isinstance(data, dict):
            raise InvalidInstanceError(field, f"{data!r} is not a set descriptor")
        bases = [self.instance.element(v, field) for v in data.get("bases", [])]
        points = [self.instance.element(v, field) for v in data.get("points", [])]
        return InvariantSet.principal(self.weights, bases, points)


def _render_text(data: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    lines: List[str] = []
    if isinstance(data, dict):
        for key in sorted(data):
            value = data[key]
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(value)}")
        return lines
    for item in data:
        if isinstance(item, dict):
            lines.append(f"{pad}-")
            lines.extend(_render_text(item, indent + 1))
        else:
            lines.append(f"{pad}- {json.dumps(item)}")
    return lines


def _emit(ctx: Context, data: Dict[str, Any], rdf: Optional[Callable[[], Any]] = None) -> None:
    if ctx.format == "json":
        click.echo(json.dumps(data, sort_keys=True, indent=2))
    elif ctx.format == "turtle":
        if rdf is None:
            raise InvalidInstanceError("--format", "turtle is available for ideals and prim only")
        click.echo(rdf(), nl=False)
    else:
        click.echo("\n".join(_render_text(data)))


def _command(func: Callable[..., None]) -> Callable[..., None]:
    """Adds the shared arguments and maps errors onto exit codes."""

    @click.argument("spec_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
    @click.option(
        "--format", "fmt", type=click.Choice(["text", "json", "turtle"]), default="text"
    )
    @click.option("--size-limit", type=click.IntRange(min=1), default=None)
    @click.option(
        "--budget", type=click.IntRange(min=1), default=None, envvar="OINFTY_BUDGET"
    )
    @click.option("--window", type=click.IntRange(min=0), default=None)
    @click.option("--verbose", is_flag=True, help="Log debug records to stderr.")
    @functools.wraps(func)
    def wrapper(
        spec_file: Path,
        fmt: str,
        size_limit: Optional[int],
        budget: Optional[int],
        window: Optional[int],
        verbose: bool,
        **kwargs: Any,
    ) -> None:
        if verbose:
            logging.basicConfig(level=logging.DEBUG)
        try:
            instance = InstanceSpec.load(spec_file)
            func(Context(instance, fmt, size_limit, budget, window), **kwargs)
        except _INVALID as e:
            _fail(e, EXIT_INVALID)
        except _LIMIT as e:
            _fail(e, EXIT_LIMIT)
        except InternalInvariantBrokenError as e:
            _fail(e, EXIT_INTERNAL)

    return wrapper


def _fail(error: Error, code: int) -> None:
    click.echo(f"error: {type(error).__name__}: {error.msg}", err=True)
    raise SystemExit(code)


@click.group()
@click.version_option(package_name="oinftyideals")
def cli() -> None:
    """Ideal structure of O-infinity crossed products by quasi-free actions."""


@cli.command()
@_command
def analyze(ctx: Context) -> None:
    """Flags, condition, spectrum and K-theory."""
    weights = ctx.weights
    spectrum = connes_spectrum(weights)
    data = flags(weights).to_json()
    data["condition_report"] = check_condition(weights).to_json()
    data["spectrum"] = "full" if spectrum.is_full else spectrum.to_json(ctx.window)
    data.update(k_theory(weights).to_json())
    _emit(ctx, data)


@cli.command()
@_command
def ideals(ctx: Context) -> None:
    """The lattice of gauge-invariant ideals (finite groups)."""
    lattice = enumerate_ideals(ctx.weights, ctx.size_limit)
    _emit(ctx, lattice.to_json(), lattice.to_rdf)


@cli.command()
@_command
def prim(ctx: Context) -> None:
    """The primitive ideal space."""
    report = prim_space(ctx.weights, ctx.size_limit)
    _emit(ctx, report.to_json(ctx.window), report.to_rdf)


@cli.command()
@_command
def condition(ctx: Context) -> None:
    """Whether every ideal is gauge invariant."""
    _emit(ctx, check_condition(ctx.weights).to_json())


@cli.command()
@_command
def spectrum(ctx: Context) -> None:
    """The strong Connes spectrum."""
    s = connes_spectrum(ctx.weights)
    _emit(ctx, {"spectrum": s.to_json(ctx.window), "full": s.is_full})


@cli.command()
@_command
def ktheory(ctx: Context) -> None:
    """K-groups of the crossed product."""
    _emit(ctx, k_theory(ctx.weights).to_json())


@cli.command()
@click.option("--set", "elements", required=True, help='Generators "a,b;c,d" or "full".')
@_command
def prime(ctx: Context, elements: str) -> None:
    """Primeness of the invariant set generated by elements."""
    if elements.strip() == "full":
        x = InvariantSet.full(ctx.weights)
    else:
        x = InvariantSet.principal(ctx.weights, ctx.elements(elements, "--set"))
    base = principal_base(x)
    _emit(
        ctx,
        {
            "set": x.to_json(ctx.window),
            "prime": is_prime_set(x),
            "principal": None if base is None else base.to_json(),
            "delta": in_delta(x),
        },
    )


@cli.command()
@click.option(
    "--input",
    "z_file",
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="json file with full, points, xinf and lambda.",
)
@_command
def closed(ctx: Context, z_file: Path) -> None:
    """Whether a set of primitive ideals is closed."""
    report = check_condition(ctx.weights)
    if report.satisfied:
        raise ConditionNotViolatedError(ctx.weights.to_json(), "the condition holds")
    try:
        data = json.loads(z_file.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise InvalidInstanceError(str(z_file), f"cannot read input: {e}") from e
    if not isinstance(data, dict):
        raise InvalidInstanceError("input", "document must be a json object")
    points = []
    for point in data.get("points", []):
        if not isinstance(point, dict):
            raise InvalidInstanceError("points", f"{point!r} is not a point")
        gamma = ctx.instance.element(point.get("gamma", []), "points.gamma")
        try:
            angle = Fraction(str(point.get("angle", "0")))
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidInstanceError("points.angle", f"{point!r} has no rational angle") from e
        points.append(CirclePoint(report.projection(gamma), angle))
    y = YPair(
        report,
        ctx.set_from(data.get("full"), "full"),
        points,
        ctx.set_from(data.get("xinf"), "xinf"),
    )
    lambda_sets = [ctx.set_from(x, "lambda") for x in data.get("lambda", [])]
    _emit(ctx, {"closed": is_closed_in_prim(ctx.weights, y, lambda_sets)})


@cli.command()
@click.option("--n", "n", required=True, type=click.IntRange(min=1))
@click.option("--set", "elements", default="full", help='Generators of X, default "full".')
@_command
def fibers(ctx: Context, n: int, elements: str) -> None:
    """Fibers at depth n of the pair (X, H_X)."""
    if elements.strip() == "full":
        x = InvariantSet.full(ctx.weights)
    else:
        x = InvariantSet.principal(ctx.weights, ctx.elements(elements, "--set"))
    entries = fiber_report(InvariantPair(x, h_set(x)), n)
    _emit(ctx, {"n": n, "fibers": [e.to_json(ctx.window) for e in entries]})


@cli.command()
@click.option("--gamma", required=True, help='Coordinates "a,b".')
@_command
def local(ctx: Context, gamma: str) -> None:
    """Subquotients around one point when the condition fails."""
    elements = ctx.elements(gamma, "--gamma")
    if len(elements) != 1:
        raise InvalidInstanceError("--gamma", "expected exactly one element")
    report = check_condition(ctx.weights)
    _emit(ctx, local_subquotients(ctx.weights, report, elements[0]).to_json(ctx.window))
