"""Command-line front end; a thin client over the service handlers.

Exit codes: 0 success, 1 check failure, 2 usage error. Every command accepts
--json and emits the same envelope the HTTP service returns. Text output
omits timings so identical inputs give byte-identical output.
"""
from __future__ import annotations

import json
import sys

import click

from .service.handlers import (
    handle_basis,
    handle_classify,
    handle_export,
    handle_game,
    handle_sample,
    handle_verify,
)
from .service.models import (
    BasisRequest,
    ClassifyRequest,
    ExportRequest,
    GameRequest,
    RunReport,
    SampleRequest,
    VerifyRequest,
)


def _emit_json(report: RunReport) -> None:
    click.echo(json.dumps(report.model_dump(by_alias=True, exclude_none=True), indent=2))


def _finish(report: RunReport) -> None:
    if not report.passed:
        sys.exit(1)


def _bool(value: bool) -> str:
    return "true" if value else "false"


@click.group()
def main() -> None:
    """Exact workbench for one-query pattern classification of Boolean functions."""


@main.command("basis")
@click.option("--rank", type=int, required=True, help="Hierarchy rank n; 4**n members.")
@click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True
)
@click.option("--json", "as_json", is_flag=True, help="Alias for --format json.")
def cmd_basis(rank: int, fmt: str, as_json: bool) -> None:
    """List every basis member with its index and imbalance ratio."""
    try:
        report = handle_basis(BasisRequest(rank=rank))
    except ValueError as e:
        raise click.UsageError(str(e))
    if as_json or fmt == "json":
        _emit_json(report)
    else:
        for entry in report.results:
            click.echo(f"{entry.index}: {entry.pattern}  ratio {entry.ratio}")
    _finish(report)


@main.command("classify")
@click.option("--pattern", type=str, default=None, help="Pattern bits, MSB-first.")
@click.option("--rank", type=int, default=None, help="Rank of a basis member to classify.")
@click.option("--index", type=int, default=None, help="Index of the basis member.")
@click.option("--state", "include_state", is_flag=True, help="Include the final state.")
@click.option("--faithful", is_flag=True, help="Materialize the |-> output register.")
@click.option("--json", "as_json", is_flag=True)
def cmd_classify(
    pattern: str | None, rank: int | None, index: int | None,
    include_state: bool, faithful: bool, as_json: bool,
) -> None:
    """Classify a hidden pattern with a single oracle query."""
    req = ClassifyRequest(
        pattern=pattern, rank=rank, index=index,
        include_state=include_state, faithful=faithful,
    )
    try:
        report = handle_classify(req)
    except ValueError as e:
        raise click.UsageError(str(e))
    if as_json:
        _emit_json(report)
    else:
        r = report.results[0]
        click.echo(f"pattern: {r.pattern}")
        click.echo(f"rank: {report.rank}")
        click.echo(f"index: {r.index}")
        click.echo(f"bits: {r.bits}")
        click.echo(f"probability: {r.probability:.12g}")
        click.echo(f"queries_used: {r.queries_used}")
        if r.negation_of_member:
            click.echo("negation_of_member: true")
        if r.out_of_promise:
            click.echo("out_of_promise: true")
        if r.state is not None:
            click.echo("state: " + " ".join(f"{a:.12g}" for a in r.state))
    _finish(report)


@main.command("verify")
@click.option("--rank-max", type=int, default=2, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def cmd_verify(rank_max: int, as_json: bool) -> None:
    """Run every named brute-force check suite up to a rank."""
    try:
        report = handle_verify(VerifyRequest(rank_max=rank_max))
    except ValueError as e:
        raise click.UsageError(str(e))
    if as_json:
        _emit_json(report)
    else:
        for entry in report.results:
            click.echo(f"rank {entry.rank} {entry.check}: {entry.passed}/{entry.total}")
        click.echo(f"pass: {_bool(report.passed)}")
    _finish(report)


@main.command("sample")
@click.option("--pattern", type=str, required=True)
@click.option("--shots", type=int, default=2048, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def cmd_sample(pattern: str, shots: int, seed: int, as_json: bool) -> None:
    """Draw seeded measurement shots from the circuit's final state."""
    try:
        report = handle_sample(SampleRequest(pattern=pattern, shots=shots, seed=seed))
    except ValueError as e:
        raise click.UsageError(str(e))
    if as_json:
        _emit_json(report)
    else:
        for entry in report.results:
            click.echo(f"{entry.outcome}: {entry.count}")
    _finish(report)


@main.command("export")
@click.option("--pattern", type=str, required=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@click.option("--json", "as_json", is_flag=True)
def cmd_export(pattern: str, out: str | None, as_json: bool) -> None:
    """Emit the circuit in the one-gate-per-line text format."""
    try:
        report = handle_export(ExportRequest(pattern=pattern))
    except ValueError as e:
        raise click.UsageError(str(e))
    text = report.results[0].circuit
    if out is not None:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if as_json:
        _emit_json(report)
    elif out is not None:
        click.echo(f"wrote {out}")
    else:
        click.echo(text, nl=False)
    _finish(report)


@main.command("game")
@click.option("--rank", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--allow-negation", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
def cmd_game(rank: int, seed: int, allow_negation: bool, as_json: bool) -> None:
    """Play one Alice/Bob round: Bob hides a member, Alice gets one query."""
    try:
        report = handle_game(GameRequest(rank=rank, seed=seed, allow_negation=allow_negation))
    except ValueError as e:
        raise click.UsageError(str(e))
    if as_json:
        _emit_json(report)
    else:
        t = report.results[0]
        click.echo(f"rank: {report.rank}")
        click.echo(f"seed: {t.seed}")
        click.echo(f"bob_index: {t.bob_index}")
        click.echo(f"bob_negated: {_bool(t.bob_negated)}")
        click.echo(f"alice_index: {t.alice_index}")
        if t.alice_claims_negation is not None:
            click.echo(f"alice_claims_negation: {_bool(t.alice_claims_negation)}")
        click.echo(f"disambiguation_used: {_bool(t.disambiguation_used)}")
        click.echo(f"queries_used: {t.queries_used}")
        click.echo(f"winner: {t.winner}")
    _finish(report)


@main.command("serve")
@click.option("--host", type=str, default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def cmd_serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("bfpqc.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
