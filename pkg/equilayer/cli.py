"""Command-line interface for equivariant layer bases."""

from __future__ import annotations

import json
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path

import typer
from rich.console import Console
from rich.table import Table

from equilayer.core.config import settings
from equilayer.core.exceptions import (
    EquilayerError,
    InvalidInputError,
    VerificationError,
)
from equilayer.core.logging import setup_logging
from equilayer.fixtures import APPENDICES
from equilayer.models.partition import IntegerPartition
from equilayer.schemas.common import ErrorResponse
from equilayer.schemas.layer import LayerSpec
from equilayer.schemas.payloads import (
    BasisMatrixPayload,
    BratteliLevelPayload,
    DimensionReport,
    ProductBasisPayload,
    SetPartitionPayload,
    VerificationReport,
)
from equilayer.services.equimap import bias_basis, full_basis
from equilayer.services.pattern import pattern_from_basis
from equilayer.services.product import demarcation_embed, product_basis
from equilayer.services.quiver import bratteli_levels, build_quiver, walk_count
from equilayer.services.verification import (
    AppendixService,
    DimensionService,
    VerificationService,
)
from equilayer.services.young import (
    addable_boxes,
    enumerate_partitions,
    removable_boxes,
    specht_dimension,
)

app = typer.Typer(
    help="Bases of permutation-equivariant linear layers.",
    no_args_is_help=True,
    add_completion=False,
)
console = Console(stderr=True)


class BasisFormat(StrEnum):
    JSON = "json"
    CSV = "csv"
    PATTERN = "pattern"


class ProductFormat(StrEnum):
    JSON = "json"
    PATTERN = "pattern"


@dataclass
class RunOptions:
    force: bool = False
    workers: int = 1
    seed: int = settings.DEFAULT_SEED
    trials: int = settings.DEFAULT_TRIALS
    output: Path | None = None


@contextmanager
def _exit_on_error(*, as_json: bool = False) -> Iterator[None]:
    try:
        yield
    except EquilayerError as exc:
        if as_json:
            typer.echo(
                ErrorResponse(
                    error=type(exc).__name__,
                    message=exc.message,
                    exit_code=exc.exit_code,
                    details=exc.details or None,
                ).model_dump_json()
            )
            raise typer.Exit(exc.exit_code) from exc
        console.print(f"[red]❌ Error: {exc.message}[/red]")
        if exc.details:
            console.print(exc.details)
        raise typer.Exit(exc.exit_code) from exc


def _options(ctx: typer.Context) -> RunOptions:
    return ctx.obj if isinstance(ctx.obj, RunOptions) else RunOptions()


def _emit(ctx: typer.Context, text: str) -> None:
    target = _options(ctx).output
    if target is None:
        typer.echo(text)
        return
    target.write_text(text + "\n", encoding="utf-8")
    console.print(f"✅ Wrote {target}")


def _layer_args(
    n: int | None, k: int | None, l: int | None, spec: str | None  # noqa: E741
) -> LayerSpec | tuple[int, int, int]:
    if spec is not None:
        if any(v is not None for v in (n, k, l)):
            raise InvalidInputError("Pass either --spec or --n/--k/--l, not both")
        return LayerSpec.parse(spec)
    if n is None or k is None or l is None:
        raise InvalidInputError("Pass --n, --k and --l (or --spec)")
    return n, k, l


@app.callback()
def main(
    ctx: typer.Context,
    log_level: str | None = typer.Option(
        None, "--log-level", help="Logging level (defaults to LOG_LEVEL)"
    ),
    force: bool = typer.Option(False, "--force", "-f", help="Ignore size caps"),
    workers: int = typer.Option(
        settings.WORKERS, "--workers", min=1, help="Threads for basis generation"
    ),
    seed: int = typer.Option(settings.DEFAULT_SEED, "--seed", help="Random seed"),
    trials: int = typer.Option(
        settings.DEFAULT_TRIALS, "--trials", min=0, help="Random permutations per check"
    ),
    output: Path | None = typer.Option(
        None, "--output", "-o", help="Write results to a file instead of stdout"
    ),
) -> None:
    """Compute, emit and verify equivariant layer bases."""

    setup_logging(log_level or settings.LOG_LEVEL)
    ctx.obj = RunOptions(
        force=force, workers=workers, seed=seed, trials=trials, output=output
    )


@app.command()
def dims(
    ctx: typer.Context,
    n: int | None = typer.Option(None, "--n", min=1, help="Set size n"),
    k: int | None = typer.Option(None, "--k", min=0, help="Input order k"),
    l: int | None = typer.Option(None, "--l", min=0, help="Output order l"),  # noqa: E741
    spec: str | None = typer.Option(None, "--spec", help="Product spec, e.g. 2:2->1,4:1->1"),
    as_json: bool = typer.Option(False, "--json", help="Print the report as JSON"),
) -> None:
    """Layer dimension from set partitions, cross-checked against the quiver."""

    with _exit_on_error(as_json=as_json):
        target = _layer_args(n, k, l, spec)
        service = DimensionService()
        report: DimensionReport = (
            service.product(target)
            if isinstance(target, LayerSpec)
            else service.single(*target)
        )

    if as_json:
        _emit(ctx, report.model_dump_json(indent=2))
    else:
        lines = [f"restricted_bell: {report.restricted_bell}"]
        for label, value in (
            ("bell", report.bell),
            ("kernel", report.kernel_dimension),
            ("quiver", report.quiver_dimension),
            ("global", report.global_dimension),
        ):
            if value is not None:
                lines.append(f"{label}: {value}")
        _emit(ctx, "\n".join(lines))
    if not report.agree:
        console.print("[red]❌ Dimension counts disagree[/red]")
        raise typer.Exit(1)


@app.command()
def basis(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", min=1, help="Set size n"),
    k: int = typer.Option(..., "--k", min=0, help="Input order k"),
    l: int = typer.Option(..., "--l", min=0, help="Output order l"),  # noqa: E741
    fmt: BasisFormat = typer.Option(BasisFormat.JSON, "--format", help="Output format"),
    include_bias: bool = typer.Option(
        False, "--include-bias", help="Also emit the bias basis of order l"
    ),
) -> None:
    """Emit the orbit basis of Hom(M_n^k, M_n^l)."""

    options = _options(ctx)
    with _exit_on_error(as_json=fmt == BasisFormat.JSON):
        weights = full_basis(n, k, l, workers=options.workers, force=options.force)
        bias = bias_basis(n, l, force=options.force) if include_bias else []

        if fmt == BasisFormat.PATTERN:
            sections = [pattern_from_basis(weights).render()]
            if bias:
                sections.append(pattern_from_basis(bias).render())
            text = "\n\n".join(sections)
        elif fmt == BasisFormat.CSV:
            lines = ["kind;matrix;row;col"]
            for kind, matrices in (("weight", weights), ("bias", bias)):
                for index, matrix in enumerate(matrices, start=1):
                    lines.extend(f"{kind};{index};{r};{c}" for r, c in matrix.entries)
            text = "\n".join(lines)
        else:
            document: dict[str, object] = {
                "n": n,
                "k": k,
                "l": l,
                "weights": [
                    BasisMatrixPayload.from_matrix(m).model_dump(mode="json")
                    for m in weights
                ],
            }
            if include_bias:
                document["bias"] = [
                    BasisMatrixPayload.from_matrix(m).model_dump(mode="json")
                    for m in bias
                ]
            text = json.dumps(document)
    _emit(ctx, text)


@app.command()
def quiver(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", min=2, help="Set size n"),
    power: int | None = typer.Option(None, "--power", min=0, help="Walk length"),
    source: str | None = typer.Option(None, "--from", help="Start partition, e.g. (6)"),
    target: str | None = typer.Option(None, "--to", help="End partition, e.g. (6)"),
) -> None:
    """McKay quiver adjacency as CSV, or walk counts with --power."""

    with _exit_on_error():
        q = build_quiver(n)
        if power is None:
            if source or target:
                raise InvalidInputError("--from and --to need --power")
            text = q.to_csv()
        else:
            start = IntegerPartition.parse(source) if source else q.nodes[0]
            if target:
                text = str(walk_count(q, start, IntegerPartition.parse(target), power))
            else:
                text = "\n".join(
                    f"{node.label};{walk_count(q, start, node, power)}" for node in q.nodes
                )
    _emit(ctx, text)


@app.command()
def bratteli(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", min=2, help="Set size n"),
    levels: int = typer.Option(..., "--levels", min=0, help="Last integer level"),
) -> None:
    """Bratteli diagram rows, one JSON object per level."""

    with _exit_on_error():
        rows = [
            BratteliLevelPayload.from_level(level).model_dump_json()
            for level in bratteli_levels(n, levels)
        ]
    _emit(ctx, "\n".join(rows))


def _print_report(report: VerificationReport) -> None:
    table = Table(title=f"Verification {report.target} (seed {report.seed})")
    table.add_column("check")
    table.add_column("result")
    table.add_column("count", justify="right")
    for check in report.checks:
        table.add_row(
            check.name,
            "[green]PASS[/green]" if check.passed else "[red]FAIL[/red]",
            str(check.count),
        )
    console.print(table)


@app.command()
def verify(
    ctx: typer.Context,
    n: int | None = typer.Option(None, "--n", min=1, help="Set size n"),
    k: int | None = typer.Option(None, "--k", min=0, help="Input order k"),
    l: int | None = typer.Option(None, "--l", min=0, help="Output order l"),  # noqa: E741
    spec: str | None = typer.Option(None, "--spec", help="Product spec"),
    seed: int | None = typer.Option(None, "--seed", help="Overrides the global seed"),
    trials: int | None = typer.Option(None, "--trials", min=0, help="Overrides the global trials"),
    oracle: bool = typer.Option(False, "--oracle", help="Compare against brute-force orbits"),
    as_json: bool = typer.Option(False, "--json", help="Print the report as JSON"),
) -> None:
    """Run the property suite; exits 1 on the first failing check."""

    options = _options(ctx)
    with _exit_on_error(as_json=as_json):
        target = _layer_args(n, k, l, spec)
        service = VerificationService(
            trials=options.trials if trials is None else trials,
            seed=options.seed if seed is None else seed,
        )
        if isinstance(target, LayerSpec):
            report = service.verify_product(target, force=options.force)
        else:
            report = service.verify_single(
                *target, oracle=oracle, force=options.force
            )

        failure = report.first_failure()
        if failure is not None:
            details: dict[str, object] = {"check": failure.name, "detail": failure.detail}
            if as_json:
                details["report"] = report.model_dump(mode="json")
            else:
                _print_report(report)
            raise VerificationError(f"{failure.name} failed", details=details)

    if as_json:
        _emit(ctx, report.model_dump_json(indent=2))
    else:
        _print_report(report)
        typer.echo(f"✅ {len(report.checks)} checks passed for {report.target}")


@app.command()
def appendix(
    ctx: typer.Context,
    which: str | None = typer.Option(
        None, "--which", help=f"One of {', '.join(APPENDICES)}; all when omitted"
    ),
) -> None:
    """Regenerate the appendix matrices and compare them with the fixtures."""

    service = AppendixService()
    lines: list[str] = []
    failed = False
    with _exit_on_error():
        for key in [which] if which else APPENDICES:
            for outcome in service.check(key):
                fixture = outcome.fixture
                rows, cols = fixture.shape
                status = "PASS" if outcome.passed else "FAIL"
                classes = outcome.generated.class_count
                line = f"{status} {fixture.name} {rows}x{cols} {classes} classes"
                if not outcome.passed:
                    failed = True
                    if outcome.first_difference is not None:
                        r, c = outcome.first_difference
                        line += f" (first difference at row {r + 1}, col {c + 1})"
                lines.append(line)
    _emit(ctx, "\n".join(lines))
    if failed:
        raise typer.Exit(1)


@app.command()
def product(
    ctx: typer.Context,
    spec: str = typer.Option(..., "--spec", help="Product spec, e.g. 2:1->1,2:1->1"),
    fmt: ProductFormat = typer.Option(ProductFormat.JSON, "--format", help="Output format"),
    embed: bool = typer.Option(False, "--embed", help="Show each tuple's global embedding"),
) -> None:
    """Emit the basis of a layer equivariant to a product of symmetric groups."""

    options = _options(ctx)
    with _exit_on_error(as_json=fmt == ProductFormat.JSON):
        layer = LayerSpec.parse(spec)
        matrices = product_basis(layer, force=options.force)
        embeddings = [demarcation_embed(m.source) for m in matrices] if embed else []

        if fmt == ProductFormat.PATTERN:
            text = pattern_from_basis(matrices).render()
            if embeddings:
                text += "\n\n" + "\n".join(
                    f"{index}: {m.source} => {partition}"
                    for index, (m, (partition, _)) in enumerate(
                        zip(matrices, embeddings, strict=True), start=1
                    )
                )
        else:
            document: dict[str, object] = {
                "spec": str(layer),
                "matrices": [
                    ProductBasisPayload.from_matrix(m, str(layer)).model_dump(mode="json")
                    for m in matrices
                ],
            }
            if embeddings:
                document["embeddings"] = [
                    {
                        "l": split.l,
                        "k": split.k,
                        "blocks": SetPartitionPayload.from_partition(partition).model_dump(),
                    }
                    for partition, split in embeddings
                ]
            text = json.dumps(document)
    _emit(ctx, text)


@app.command()
def young(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", min=1, help="Partition size n"),
) -> None:
    """Partitions of n with their Specht dimensions and corner boxes."""

    with _exit_on_error():
        lines = ["partition;dimension;removable;addable"]
        for lam in enumerate_partitions(n):
            lines.append(
                ";".join(
                    [
                        lam.label,
                        str(specht_dimension(lam)),
                        " ".join(f"({r},{c})" for r, c in removable_boxes(lam)),
                        " ".join(f"({r},{c})" for r, c in addable_boxes(lam)),
                    ]
                )
            )
    _emit(ctx, "\n".join(lines))


if __name__ == "__main__":
    app()
