"""CLI interface for sylowscope."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

import click
from rich.console import Console
from rich.table import Table

from sylowscope import __version__
from sylowscope.catalog import (
    family_from_tag,
    order_closed_form,
    parse_group,
    render_group,
    render_pattern,
    sporadic_records,
)
from sylowscope.classifier import classify, classify_sylow2, is_elementary_abelian
from sylowscope.config import Config
from sylowscope.enumerator import (
    congruence_conditions,
    enumerate_by_structure,
    instantiate,
    parse_structure,
)
from sylowscope.exceptions import (
    ConfigError,
    GroupSyntaxError,
    GroupValidityError,
    PreconditionError,
    StructureSyntaxError,
    SylowScopeError,
)
from sylowscope.models import (
    CongruenceReport,
    EnumMatch,
    GroupId,
    OutputRecord,
    Scope,
    SylowVerdict,
    VerdictKind,
)
from sylowscope.tables import factored_order, order_cyclotomic
from sylowscope.verify import SUITES, run_suite

console = Console()
err_console = Console(stderr=True)

_KIND_STYLE = {
    VerdictKind.TRIVIAL: "dim",
    VerdictKind.ABELIAN: "green",
    VerdictKind.NONABELIAN: "red",
}


class InvalidInputError(click.ClickException):
    """A well-formed request naming something outside the group universe."""

    exit_code = 2


class InputSyntaxError(click.ClickException):
    """A request that could not be parsed."""

    exit_code = 3


@contextmanager
def _handle_errors() -> Iterator[None]:
    try:
        yield
    except (GroupSyntaxError, StructureSyntaxError) as e:
        raise InputSyntaxError(str(e)) from e
    except (GroupValidityError, PreconditionError) as e:
        raise InvalidInputError(str(e)) from e
    except SylowScopeError as e:
        raise click.ClickException(str(e)) from e


def _emit(command: str, query: dict[str, Any], result: dict[str, Any]) -> None:
    click.echo(OutputRecord(command=command, query=query, result=result).to_json())


def _table(ctx: click.Context, title: str, *columns: str) -> Table:
    quiet = ctx.obj["quiet"]
    table = Table(title=None if quiet else title, show_header=not quiet)
    for column in columns:
        table.add_column(column)
    return table


def _verdict_payload(verdict: SylowVerdict) -> dict[str, Any]:
    return {
        "group": render_group(verdict.group),
        "r": verdict.r,
        "m": verdict.m if isinstance(verdict.m, int) else str(verdict.m),
        "t": verdict.t,
        "kind": str(verdict.kind),
        "rule": str(verdict.rule),
        "structure": verdict.render_structure() if verdict.structure else None,
    }


@click.group()
@click.version_option(version=__version__, prog_name="sylowscope")
@click.option("--debug", is_flag=True, help="Enable debug logging.")
@click.option("--json", "json_output", is_flag=True, default=None, help="Emit JSON lines.")
@click.option("--quiet", is_flag=True, help="Omit table titles and headers.")
@click.pass_context
def main(ctx: click.Context, debug: bool, json_output: bool | None, quiet: bool) -> None:
    """Classify the Sylow subgroups of finite simple groups."""
    if debug:
        logging.basicConfig(
            level=logging.DEBUG,
            format="%(name)s %(levelname)s: %(message)s",
        )
    ctx.ensure_object(dict)
    try:
        config = Config.load()
    except ConfigError as e:
        raise click.ClickException(str(e)) from e
    ctx.obj["config"] = config
    ctx.obj["json"] = config.json_output if json_output is None else json_output
    ctx.obj["quiet"] = quiet


@main.command("classify")
@click.option("--group", "group_text", required=True, help='Group, e.g. "PSL(3,4)" or "Co1".')
@click.option("--prime", "r", type=int, required=True, help="The prime r.")
@click.option("--elementary", is_flag=True, help="Also decide whether it is elementary abelian.")
@click.pass_context
def classify_cmd(ctx: click.Context, group_text: str, r: int, elementary: bool) -> None:
    """Classify the Sylow r-subgroup of a simple group."""
    with _handle_errors():
        group = parse_group(group_text)
        verdict = classify_sylow2(group) if r == 2 else classify(group, r)
        check = (
            is_elementary_abelian(group, r)
            if elementary and r != 2 and verdict.kind is not VerdictKind.NONABELIAN
            else None
        )

    if ctx.obj["json"]:
        result = _verdict_payload(verdict)
        if check is not None:
            result["elementary"] = check.elementary
            result["elementary_basis"] = check.basis
        _emit("classify", {"group": group_text, "prime": r}, result)
        return

    style = _KIND_STYLE[verdict.kind]
    console.print(
        f"[bold]{render_group(group)}[/bold], r = {r}: [{style}]{verdict.kind}[/{style}] "
        f"{verdict.render_structure()}  [dim](m = {verdict.m}, t = {verdict.t}, "
        f"rule {verdict.rule})[/dim]"
    )
    if check is not None:
        answer = "elementary abelian" if check.elementary else "not elementary abelian"
        console.print(f"  {answer} [dim]({check.basis})[/dim]")
        if check.witness is not None:
            console.print(f"  [dim]elementary iff {check.witness.render()}[/dim]")


@main.command("walter")
@click.option("--group", "group_text", required=True, help="Group expression.")
@click.pass_context
def walter_cmd(ctx: click.Context, group_text: str) -> None:
    """Decide whether the Sylow 2-subgroup is abelian (Walter's list)."""
    with _handle_errors():
        group = parse_group(group_text)
        verdict = classify_sylow2(group)

    if ctx.obj["json"]:
        _emit("walter", {"group": group_text}, _verdict_payload(verdict))
        return
    style = _KIND_STYLE[verdict.kind]
    console.print(
        f"[bold]{render_group(group)}[/bold], r = 2: [{style}]{verdict.kind}[/{style}] "
        f"{verdict.render_structure()}"
    )


@main.command("order")
@click.option("--group", "group_text", required=True, help="Group expression.")
@click.option("--factored", is_flag=True, help="Show the prime factorisation.")
@click.option("--check", is_flag=True, help="Compare the cyclotomic and closed-form orders.")
@click.pass_context
def order_cmd(ctx: click.Context, group_text: str, factored: bool, check: bool) -> None:
    """Print the order of a simple group."""
    with _handle_errors():
        group = parse_group(group_text)
        closed = order_closed_form(group)
        factors = factored_order(group) if factored else None
        cyclotomic = order_cyclotomic(group) if check and group.family.is_lie else None

    result: dict[str, Any] = {"group": render_group(group), "order": str(closed)}
    if factors is not None:
        result["factored"] = factors.render()
    if check:
        result["cyclotomic"] = None if cyclotomic is None else str(cyclotomic)
        result["equal"] = None if cyclotomic is None else cyclotomic == closed

    if ctx.obj["json"]:
        _emit("order", {"group": group_text}, result)
        return
    console.print(f"|{render_group(group)}| = {closed}")
    if factors is not None:
        console.print(f"  = {factors.render()}")
    if check:
        if cyclotomic is None:
            console.print("[dim]no cyclotomic form for this family[/dim]")
        elif cyclotomic == closed:
            console.print("[green]cyclotomic and closed-form orders agree[/green]")
        else:
            console.print(f"[red]cyclotomic order differs: {cyclotomic}[/red]")


def _match_groups(match: EnumMatch) -> str:
    if match.sporadic_name is not None:
        return match.sporadic_name
    if match.q is not None:
        return ", ".join(render_group(GroupId(match.family, n=n, q=match.q)) for n in match.ranks)
    if not match.ranks:
        return render_pattern(match.family, None)
    return ", ".join(render_pattern(match.family, n) for n in match.ranks)


def _match_payload(match: EnumMatch) -> dict[str, Any]:
    return {
        "family": str(match.family),
        "groups": _match_groups(match),
        "ranks": list(match.ranks),
        "m": match.m if isinstance(match.m, int) else str(match.m),
        "structure": match.structure.render(),
        "q": match.q,
        "condition": (
            None
            if match.condition is None
            else {"modulus": match.condition.modulus, "residues": list(match.condition.residues)}
        ),
        "valuation": match.valuation,
        "rules": [str(rule) for rule in match.rules],
    }


@main.command("enumerate")
@click.option("--prime", "r", type=int, required=True, help="The odd prime r.")
@click.option("--structure", required=True, help='Target type, e.g. "C5^2" or "C25^3".')
@click.option(
    "--scope",
    "scopes",
    type=click.Choice([s.value for s in Scope]),
    multiple=True,
    help="Restrict to alternating, lie or sporadic groups (repeatable).",
)
@click.option("--rank-bound", type=int, default=None, help="Largest rank parameter searched.")
@click.option(
    "--concrete",
    type=int,
    is_flag=False,
    flag_value=0,
    default=None,
    help="List concrete groups with q up to this bound (default from config).",
)
@click.pass_context
def enumerate_cmd(
    ctx: click.Context,
    r: int,
    structure: str,
    scopes: tuple[str, ...],
    rank_bound: int | None,
    concrete: int | None,
) -> None:
    """Find the simple groups whose Sylow r-subgroup has a given abelian type."""
    config: Config = ctx.obj["config"]
    bound = rank_bound if rank_bound is not None else config.rank_bound
    q_bound = config.concrete_bound if concrete == 0 else concrete
    wanted = tuple(Scope(s) for s in scopes) or tuple(Scope)

    with _handle_errors():
        base, s, k = parse_structure(structure)
        if base != r:
            raise StructureSyntaxError(f"structure '{structure}' is not an {r}-group")
        found = enumerate_by_structure(r, s, k, wanted, bound)
        concrete_groups = (
            {id(match): instantiate(match, q_bound) for match in found}
            if q_bound is not None
            else {}
        )

    if ctx.obj["json"]:
        query = {"prime": r, "structure": structure, "scope": [str(s) for s in wanted],
                 "rank_bound": bound, "concrete": q_bound}  # fmt: skip
        for match in found:
            result = _match_payload(match)
            if q_bound is not None:
                result["instances"] = [render_group(g) for g in concrete_groups[id(match)]]
            _emit("enumerate", query, result)
        return

    if not found:
        console.print("[yellow]No simple groups found.[/yellow]")
        return

    table = _table(ctx, f"Sylow {r}-subgroup {structure}", "Groups", "m", "Condition", "Rule")
    for match in found:
        condition = match.condition.render() if match.condition is not None else "—"
        if match.valuation > 1:
            condition += f", v_{r}(q^{match.m} - 1) = {match.valuation}"
        groups = _match_groups(match)
        if q_bound is not None and match.q is None and match.condition is not None:
            instances = concrete_groups[id(match)]
            groups += "\n  " + (", ".join(map(render_group, instances)) or "none up to the bound")
        table.add_row(groups, str(match.m), condition, ", ".join(map(str, match.rules)))
    console.print(table)


def _report_payload(report: CongruenceReport) -> dict[str, Any]:
    return {
        "family": str(report.family),
        "group": render_pattern(report.family, report.n),
        "r": report.r,
        "m": report.m,
        "modulus": report.residues.modulus,
        "residues": list(report.residues.residues),
        "criterion": report.criterion,
        "abelian": report.abelian,
        "structure": report.structure.render(),
        "rule": str(report.rule),
    }


@main.command("congruences")
@click.option("--family", "family_text", required=True, help='Family tag, e.g. "PSL" or "E8".')
@click.option(
    "--rank", "n", type=int, default=None,
    help="Rank parameter n: degree for PSL/PSU, half the dimension for PSp/POmega.",
)  # fmt: skip
@click.option("--prime", "r", type=int, required=True, help="The odd prime r.")
@click.option("--m", "m", type=int, default=None, help="Order of q mod r (default: every m).")
@click.pass_context
def congruences_cmd(
    ctx: click.Context, family_text: str, n: int | None, r: int, m: int | None
) -> None:
    """Residue classes of q with an elementary abelian Sylow r-subgroup."""
    with _handle_errors():
        family = family_from_tag(family_text)
        if r < 3:
            raise PreconditionError(f"congruences need an odd prime, got {r}")
        orders = [m] if m is not None else [d for d in range(1, r) if (r - 1) % d == 0]
        reports = [congruence_conditions(family, n, r, order) for order in orders]

    if ctx.obj["json"]:
        query = {"family": family_text, "rank": n, "prime": r, "m": m}
        for report in reports:
            _emit("congruences", query, _report_payload(report))
        return

    title = f"{render_pattern(family, n)} at r = {r}"
    table = _table(ctx, title, "m", "Sylow", "Residues of q", "Rule")
    for report in reports:
        if report.abelian:
            sylow = f"[green]{report.structure.render()}[/green]"
        else:
            sylow = f"[red]nonabelian[/red] (e_L(mr) = {report.criterion})"
        table.add_row(str(report.m), sylow, report.residues.render(), str(report.rule))
    console.print(table)


@main.command("sporadic")
@click.pass_context
def sporadic_cmd(ctx: click.Context) -> None:
    """Print the sporadic groups with their orders and abelian Sylow cells."""
    primes = (3, 5, 7, 11, 13)
    records = sporadic_records()

    if ctx.obj["json"]:
        for record in records:
            _emit(
                "sporadic",
                {"name": record.name},
                {
                    "name": record.name,
                    "order": str(record.order.value),
                    "factored": record.order.render(),
                    "abelian_odd_primes": sorted(record.abelian_odd_primes),
                },
            )
        return

    table = _table(ctx, "Sporadic groups", "Group", "Order", *map(str, primes))
    for record in records:
        cells = ["+" if r in record.abelian_odd_primes else "" for r in primes]
        table.add_row(record.name, record.order.render(), *cells)
    console.print(table)


@main.command("verify")
@click.option("--suite", default="all", help=f"One of: {', '.join(SUITES)}, all.")
@click.pass_context
def verify_cmd(ctx: click.Context, suite: str) -> None:
    """Run the verification sweeps."""
    if suite != "all" and suite not in SUITES:
        raise InputSyntaxError(f"unknown suite '{suite}' (choose from {', '.join(SUITES)}, all)")
    with _handle_errors():
        results = run_suite(suite)

    if ctx.obj["json"]:
        for result in results:
            _emit(
                "verify",
                {"suite": suite},
                {
                    "check": result.name,
                    "passed": result.passed,
                    "checked": result.checked,
                    "failures": list(result.failures),
                    "findings": list(result.findings),
                },
            )
    else:
        table = _table(ctx, f"Verification: {suite}", "Check", "Status", "Checked")
        for result in results:
            status = "[green]PASS[/green]" if result.passed else "[red]FAIL[/red]"
            table.add_row(result.name, status, str(result.checked))
        console.print(table)
        for result in results:
            for failure in result.failures:
                err_console.print(f"[red]{result.name}: {failure}[/red]")
            for finding in result.findings:
                console.print(f"[yellow]finding[/yellow] {result.name}: {finding}")

    if not all(result.passed for result in results):
        ctx.exit(1)


@main.group()
def config() -> None:
    """Manage configuration."""


@config.command("show")
def show_config() -> None:
    """Display current configuration."""
    cfg = _load_config()
    table = Table(title="Configuration")
    table.add_column("Key", style="cyan")
    table.add_column("Value")
    table.add_row("rank_bound", str(cfg.rank_bound))
    table.add_row("concrete_bound", str(cfg.concrete_bound))
    table.add_row("json_output", str(cfg.json_output).lower())
    console.print(table)


@config.command("set-rank-bound")
@click.argument("bound", type=click.IntRange(min=1))
def set_rank_bound(bound: int) -> None:
    """Set the default rank bound for enumerate."""
    cfg = _load_config()
    cfg.rank_bound = bound
    _save_config(cfg)
    console.print(f"[green]Rank bound set to {bound}.[/green]")


@config.command("set-concrete-bound")
@click.argument("bound", type=click.IntRange(min=2))
def set_concrete_bound(bound: int) -> None:
    """Set the default bound on q for enumerate --concrete."""
    cfg = _load_config()
    cfg.concrete_bound = bound
    _save_config(cfg)
    console.print(f"[green]Concrete bound set to {bound}.[/green]")


@config.command("set-json")
@click.argument("enabled", type=click.BOOL)
def set_json(enabled: bool) -> None:
    """Make JSON lines the default output (true/false)."""
    cfg = _load_config()
    cfg.json_output = enabled
    _save_config(cfg)
    console.print(f"[green]JSON output {'enabled' if enabled else 'disabled'}.[/green]")


def _load_config() -> Config:
    try:
        return Config.load()
    except ConfigError as e:
        raise click.ClickException(str(e)) from e


def _save_config(cfg: Config) -> None:
    try:
        cfg.save()
    except ConfigError as e:
        raise click.ClickException(str(e)) from e

