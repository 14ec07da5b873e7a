"""CLI entry point for constella."""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Annotated, Any

import typer
from rich.console import Console
from rich.table import Table

from .constellation import Constellation, c_0_E, c_d_E, c_E, check_constellation, natural_order
from .errors import AlgebraError, NotAssociative, ResourceLimitError
from .families import (
    NAMED_MONOIDS,
    Composition,
    full_transformation_monoid,
    left_total_partition_monoid,
    left_total_relation_monoid,
    named_monoid,
    partial_transformation_monoid,
    partition_monoid,
    relation_monoid,
    symmetric_inverse_monoid,
)
from .formats import (
    constellation_from_dict,
    dumps,
    hasse_dot,
    is_constellation_data,
    load_monoid,
    monoid_from_dict,
    monoid_to_dict,
    read_json,
    table_tsv,
)
from .idempotents import (
    IdempotentSet,
    Selector,
    analysis_report,
    check_modal_laws,
    idempotent_set,
    idempotents,
    largest_protomodal_idempotents,
    maximal_left_pre_reduced,
    maximal_right_pre_reduced,
    meet_table,
    modal_action,
    modal_obstruction,
)
from .laws import LawReport, LawResult
from .monoid import FiniteMonoid, FiniteSemigroup, UnaryAlgebra, adjoin_zero
from .restriction import (
    check_demigroup,
    check_left_restriction,
    check_right_restriction,
    natural_order_restriction,
    rest,
    rest0,
    rrest,
)
from .scenarios import ExampleId, run_scenario
from .zappa_szep import check_zs_laws, two_actions

# Log records go to stderr, stdout stays machine-readable
logging.basicConfig(
    level=logging.INFO,
    format="%(name)s - %(levelname)s - %(message)s",
)

EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

app = typer.Typer(
    name="constella",
    help="Build finite monoids, their E-completions, and verify the laws they satisfy.",
    no_args_is_help=True,
)

console = Console()


class Family(str, Enum):
    TTRANSF = "ttransf"
    PTRANSF = "ptransf"
    SYM_INVERSE = "sym-inverse"
    REL = "rel"
    TREL = "trel"
    PARTITION = "partition"
    LT_PARTITION = "lt-partition"
    TABLE = "table"
    NAMED = "named"


class Variant(str, Enum):
    C = "c"
    C0 = "c0"
    CD = "cd"
    REST = "rest"
    REST0 = "rest0"
    RREST = "rrest"


class Laws(str, Enum):
    CONSTELLATION = "constellation"
    LEFT_RESTRICTION = "left-restriction"
    RIGHT_RESTRICTION = "right-restriction"
    DEMIGROUP = "demigroup"
    MODAL = "modal"
    ZS = "zs"


class ReportFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class ArtifactFormat(str, Enum):
    JSON = "json"
    TSV = "tsv"
    DOT = "dot"


E_SET_HELP = (
    "all, one, max-right-pre-reduced, max-left-pre-reduced, min-of-range, kernel-min, "
    "largest-protomodal, or comma-separated element labels"
)


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Map library exceptions to exit codes: 1 check failure, 2 usage, 3 resource cap."""
    try:
        yield
    except ResourceLimitError as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(EXIT_RESOURCE) from e
    except AlgebraError as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(EXIT_CHECK_FAILED) from e
    except (FileNotFoundError, KeyError, ValueError) as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(EXIT_USAGE) from e


def _usage(message: str) -> typer.Exit:
    console.print(f"[red]Error:[/red] {message}")
    return typer.Exit(EXIT_USAGE)


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        typer.echo(text, nl=False)
        return
    output.write_text(text, encoding="utf-8")
    console.print(f"[green]Wrote {output}[/green]", highlight=False)


def _degree(target: str) -> int:
    try:
        return int(target)
    except ValueError:
        raise _usage(f"expected a degree, got {target!r}") from None


def _as_monoid(obj: FiniteSemigroup | UnaryAlgebra) -> FiniteMonoid:
    base = obj.base if isinstance(obj, UnaryAlgebra) else obj
    if not isinstance(base, FiniteMonoid):
        raise _usage("this command needs a monoid (set 'one' in the table file)")
    return base


def _as_algebra(obj: FiniteSemigroup | UnaryAlgebra) -> UnaryAlgebra:
    if not isinstance(obj, UnaryAlgebra):
        raise _usage("this command needs a unary algebra (add 'unary' to the table file)")
    return obj


def resolve_e_set(monoid: FiniteMonoid, choice: str) -> IdempotentSet:
    """Turn an ``--e-set`` value into an idempotent set of ``monoid``."""
    if choice == "all":
        return idempotents(monoid)
    if choice == "one":
        return IdempotentSet(monoid, (monoid.one,))
    if choice == "max-right-pre-reduced":
        return maximal_right_pre_reduced(monoid)
    if choice == "max-left-pre-reduced":
        return maximal_left_pre_reduced(monoid)
    if choice in (Selector.MIN_OF_RANGE.value, Selector.KERNEL_MIN.value):
        return maximal_right_pre_reduced(monoid, Selector(choice))
    if choice == "largest-protomodal":
        return largest_protomodal_idempotents(monoid).chosen
    labels = [label.strip() for label in choice.split(",") if label.strip()]
    if not labels:
        raise _usage(f"empty --e-set {choice!r}")
    return idempotent_set(monoid, labels)


def _build(family: Family, target: str, composition: Composition) -> Any:
    if family is Family.TABLE:
        return load_monoid(Path(target))
    if family is Family.NAMED:
        return named_monoid(target)
    n = _degree(target)
    if family is Family.TTRANSF:
        return full_transformation_monoid(n)
    if family is Family.PTRANSF:
        return partial_transformation_monoid(n)
    if family is Family.SYM_INVERSE:
        return symmetric_inverse_monoid(n)
    if family is Family.REL:
        return relation_monoid(n, composition)
    if family is Family.TREL:
        return left_total_relation_monoid(n)
    if family is Family.PARTITION:
        return partition_monoid(n)
    return left_total_partition_monoid(n)


@app.callback()
def main(
    verbose: Annotated[
        bool,
        typer.Option("--verbose", "-v", help="Log debug output to stderr"),
    ] = False,
) -> None:
    """Finite-algebra toolkit for left and right E-completions of monoids."""
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)


@app.command()
def build(
    family: Annotated[Family, typer.Argument(help="Monoid family")],
    target: Annotated[
        str,
        typer.Argument(help="Degree n, table file (table) or built-in name (named)"),
    ],
    adjoin_zero_flag: Annotated[
        bool,
        typer.Option("--adjoin-zero", help="Adjoin a new zero element"),
    ] = False,
    composition: Annotated[
        Composition,
        typer.Option("--composition", help="Relation composition (rel only)"),
    ] = Composition.ORDINARY,
    output: Annotated[
        Path | None,
        typer.Option("--output", "-o", help="Write the JSON here instead of stdout"),
    ] = None,
) -> None:
    """Build a monoid family member and print it as JSON."""
    if family is Family.NAMED and target not in NAMED_MONOIDS:
        raise _usage(f"unknown named monoid {target!r}; choose from {', '.join(NAMED_MONOIDS)}")
    with _exit_codes():
        if adjoin_zero_flag and family is Family.TTRANSF:
            obj: Any = full_transformation_monoid(_degree(target), with_zero=True)
        elif adjoin_zero_flag and family is Family.TREL:
            obj = left_total_relation_monoid(_degree(target), with_zero=True)
        else:
            obj = _build(family, target, composition)
            if adjoin_zero_flag:
                if not isinstance(obj, FiniteMonoid):
                    raise _usage(f"--adjoin-zero needs a plain monoid, {family.value} has a unary")
                obj = adjoin_zero(obj)
        _emit(dumps(monoid_to_dict(obj)), output)


def _analysis_table(report: dict[str, Any]) -> Table:
    table = Table(title="Idempotent analysis")
    table.add_column("Property", style="cyan")
    table.add_column("Value")
    e_set = report["e_set"]
    table.add_row("size", str(report["size"]))
    table.add_row("idempotents", ", ".join(report["idempotents"]))
    table.add_row("E", ", ".join(e_set["members"]))
    for flag in ("right_pre_reduced", "right_reduced", "left_pre_reduced", "left_reduced"):
        table.add_row(flag.replace("_", " "), str(e_set[flag]))
    protomodal = report["protomodal"]
    value = str(protomodal["holds"])
    if "equalizer" in protomodal:
        value += f" (Eq = {{{', '.join(protomodal['equalizer'])}}})"
    table.add_row("protomodal", value)
    inductive = report["inductive"]
    if inductive is not None:
        value = str(inductive["inductive"])
        if inductive["failed_condition"]:
            value += f" ({inductive['failed_condition']} at {inductive['witness']})"
        table.add_row("inductive", value)
    table.add_row("largest protomodal", ", ".join(report["largest_protomodal"]))
    return table


@app.command()
def analyze(
    file: Annotated[Path, typer.Argument(help="Monoid JSON file")],
    e_set: Annotated[
        str,
        typer.Option("--e-set", "-e", help=E_SET_HELP),
    ] = "max-right-pre-reduced",
    fmt: Annotated[
        ReportFormat,
        typer.Option("--format", "-f", help="Output format"),
    ] = ReportFormat.TEXT,
) -> None:
    """Report reducedness, protomodality, the modal action and inductivity."""
    with _exit_codes():
        monoid = _as_monoid(load_monoid(file))
        report = analysis_report(monoid, resolve_e_set(monoid, e_set))
    if fmt is ReportFormat.JSON:
        typer.echo(dumps(report), nl=False)
        return
    console.print(_analysis_table(report))
    modal = report["modal_action"]
    if modal is not None:
        table = Table(title="Modal action t·e")
        table.add_column("t", style="cyan")
        for column in modal["columns"]:
            table.add_column(column)
        for t, row in modal["rows"].items():
            table.add_row(t, *row)
        console.print(table)


def _complete(
    obj: FiniteSemigroup | UnaryAlgebra, variant: Variant, choice: str | None
) -> Constellation | UnaryAlgebra:
    if variant is Variant.CD:
        algebra = _as_algebra(obj)
        base = _as_monoid(algebra)
        if choice is None:
            return c_d_E(algebra, IdempotentSet(base, algebra.projections))
        return c_d_E(algebra, resolve_e_set(base, choice))
    monoid = _as_monoid(obj)
    if variant is Variant.RREST:
        return rrest(monoid, resolve_e_set(monoid, choice or "max-left-pre-reduced"))
    chosen = resolve_e_set(monoid, choice or "max-right-pre-reduced")
    if variant is Variant.C:
        return c_E(monoid, chosen)
    if variant is Variant.C0:
        return c_0_E(monoid, chosen)
    if variant is Variant.REST:
        return rest(chosen, monoid)
    return rest0(chosen, monoid)


@app.command()
def complete(
    file: Annotated[Path, typer.Argument(help="Monoid or unary algebra JSON file")],
    variant: Annotated[
        Variant,
        typer.Option("--variant", help="Completion to build"),
    ] = Variant.C,
    e_set: Annotated[
        str | None,
        typer.Option("--e-set", "-e", help=E_SET_HELP),
    ] = None,
    fmt: Annotated[
        ArtifactFormat,
        typer.Option("--format", "-f", help="json, tsv (product table) or dot (natural order)"),
    ] = ArtifactFormat.JSON,
    output: Annotated[
        Path | None,
        typer.Option("--output", "-o", help="Write here instead of stdout"),
    ] = None,
) -> None:
    """Construct an E-completion: a constellation (c, c0, cd) or a restriction monoid."""
    with _exit_codes():
        result = _complete(load_monoid(file), variant, e_set)
        if isinstance(result, Constellation):
            labels = result.all_labels
            if fmt is ArtifactFormat.JSON:
                text = dumps(result.to_dict())
            elif fmt is ArtifactFormat.TSV:
                text = table_tsv(result.product, labels)
            else:
                text = hasse_dot(natural_order(result), labels, name=variant.value)
        else:
            labels = result.base.all_labels
            if fmt is ArtifactFormat.JSON:
                text = dumps(monoid_to_dict(result))
            elif fmt is ArtifactFormat.TSV:
                text = table_tsv(result.mul, labels)
            else:
                text = hasse_dot(natural_order_restriction(result), labels, name=variant.value)
    _emit(text, output)


def _associativity_report(
    data: dict[str, Any], error: NotAssociative
) -> tuple[LawReport, tuple[str, ...] | None]:
    report = LawReport(subject="associativity")
    report.results.append(LawResult("associative", passed=False, witness=error.witness))
    labels = data.get("labels")
    return report, tuple(labels) if labels is not None else None


def _law_report(
    data: dict[str, Any], laws: Laws, choice: str
) -> tuple[LawReport, tuple[str, ...] | None]:
    if laws is Laws.CONSTELLATION:
        if not is_constellation_data(data):
            raise _usage("constellation laws need a constellation file (from 'complete')")
        p = constellation_from_dict(data)
        return check_constellation(p), p.all_labels
    try:
        obj = monoid_from_dict(data, validate=False)
    except NotAssociative as exc:
        return _associativity_report(data, exc)
    if laws in (Laws.LEFT_RESTRICTION, Laws.RIGHT_RESTRICTION, Laws.DEMIGROUP):
        algebra = _as_algebra(obj)
        labels = algebra.base.all_labels
        if laws is Laws.LEFT_RESTRICTION:
            return check_left_restriction(algebra), labels
        if laws is Laws.RIGHT_RESTRICTION:
            return check_right_restriction(algebra), labels
        return check_demigroup(algebra), labels
    monoid = _as_monoid(obj)
    chosen = resolve_e_set(monoid, choice)
    if laws is Laws.ZS:
        acts, meets = two_actions(monoid, chosen)
        return check_zs_laws(monoid, acts, meets), monoid.all_labels
    action = modal_action(monoid, chosen)
    if action is None:
        report = LawReport(subject="modal action")
        report.results.append(
            LawResult("exists", passed=False, witness=modal_obstruction(monoid, chosen))
        )
        return report, monoid.all_labels
    return check_modal_laws(monoid, chosen, action, meet_table(chosen)), monoid.all_labels


@app.command()
def verify(
    file: Annotated[Path, typer.Argument(help="Monoid, unary algebra or constellation JSON")],
    laws: Annotated[
        Laws,
        typer.Option("--laws", "-l", help="Axiom system to check"),
    ] = Laws.LEFT_RESTRICTION,
    e_set: Annotated[
        str,
        typer.Option("--e-set", "-e", help=f"For modal and zs: {E_SET_HELP}"),
    ] = "max-right-pre-reduced",
) -> None:
    """Check an axiom system; prints the JSON report, exits 1 with the least witness."""
    with _exit_codes():
        report, labels = _law_report(read_json(file), laws, e_set)
    typer.echo(dumps(report.to_dict(labels)), nl=False)
    if not report.passed:
        raise typer.Exit(EXIT_CHECK_FAILED)


@app.command()
def reproduce(
    example: Annotated[ExampleId, typer.Argument(help="Worked example to reproduce")],
    fmt: Annotated[
        ReportFormat,
        typer.Option("--format", "-f", help="Output format"),
    ] = ReportFormat.TEXT,
) -> None:
    """Rerun a worked example and compare against its golden values."""
    with _exit_codes():
        result = run_scenario(example)
    if fmt is ReportFormat.JSON:
        typer.echo(dumps(result.to_dict()), nl=False)
    else:
        for line in result.transcript():
            typer.echo(line)
        status = "[green]all checks passed[/green]" if result.passed else "[red]FAILED[/red]"
        console.print(status)
    if not result.passed:
        raise typer.Exit(EXIT_CHECK_FAILED)


if __name__ == "__main__":
    app()
