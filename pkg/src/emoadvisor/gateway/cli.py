"""Command-line interface: run, front, analyze, infer, serve.

Every subcommand exits 0 on success and nonzero with a one-line message on
failure; unknown flags print usage and exit 2. ``infer`` defaults to the
offline backend, so the whole CLI works without network access.
"""

from __future__ import annotations

import json
from pathlib import Path

import click

from ..analytics import (
    MIN_CATEGORIZE_SIZE,
    AnalyticsError,
    ParetoFront,
    analytics_document,
    categorize_variables,
    extremes,
    knee_index,
)
from ..benchmark import build_schema, make_benchmark_instance
from ..inference import (
    BackendConfig,
    ContextError,
    InferenceError,
    Persona,
    PersonaError,
    PromptError,
    ReportError,
    ReportStore,
    build_context,
    build_prompt,
    infer,
    render_report,
)
from ..inference.context import fmt_cost, fmt_impact, fmt_value
from ..nsga2 import EngineError, NsgaParams, export_front_csv, import_front_csv, run_nsga2
from ..schema import SchemaError, VariableSchema, VariableSpec
from .config import ConfigError, load_config
from .errors import ApiError
from .store import StoreError

_FAILURES = (
    EngineError,
    AnalyticsError,
    ContextError,
    InferenceError,
    PersonaError,
    PromptError,
    ReportError,
    SchemaError,
    ConfigError,
    StoreError,
    ApiError,
    OSError,
)


def _fail(exc: Exception) -> "click.ClickException":
    return click.ClickException(str(exc))


def _load_front(path: str) -> tuple[ParetoFront, tuple[str, ...]]:
    try:
        return import_front_csv(path, instance_ref=f"csv:{Path(path).name}")
    except _FAILURES as exc:
        raise _fail(exc) from None


def _schema_for(front: ParetoFront, names: tuple[str, ...]) -> VariableSchema:
    """The benchmark schema when names match it; otherwise one inferred
    from the data (observed bounds, no units)."""
    bench = build_schema()
    if list(names) == list(bench.names):
        return bench
    X = front.variables()
    specs = []
    for j, name in enumerate(names):
        lo = float(X[:, j].min())
        hi = float(X[:, j].max())
        if not lo < hi:
            lo, hi = lo - 0.5, hi + 0.5
        specs.append(
            VariableSpec(
                index=j + 1,
                name=name,
                unit="",
                lower=lo,
                upper=hi,
                better_direction="higher",
            )
        )
    return VariableSchema(variables=tuple(specs))


def _row_line(front: ParetoFront, position: int) -> str:
    ind = front[position]
    return (
        f"Sol. {position + 1}: total cost {fmt_cost(ind.f.total_cost)} M$,"
        f" environmental impact {fmt_impact(ind.f.environmental_impact)}"
    )


@click.group()
def main():
    """Multi-objective optimization runs, front analytics, and briefings."""


@main.command("run")
@click.option("--seed", type=int, default=0, show_default=True, help="Engine RNG seed.")
@click.option(
    "--instance-seed",
    type=int,
    default=0,
    show_default=True,
    help="Benchmark instance seed.",
)
@click.option("--pop", type=int, default=500, show_default=True, help="Population size.")
@click.option("--gens", type=int, default=250, show_default=True, help="Generations.")
@click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True),
    default="front.csv",
    show_default=True,
    help="Front export destination (CSV).",
)
def run_command(seed: int, instance_seed: int, pop: int, gens: int, out: str):
    """Execute an optimization run and export its front as CSV."""
    try:
        params = NsgaParams(population_size=pop, generations=gens, seed=seed)
        instance = make_benchmark_instance(seed=instance_seed)
        result = run_nsga2(instance, params)
        export_front_csv(result, out)
    except _FAILURES as exc:
        raise _fail(exc) from None
    final_hv = result.per_generation_stats[-1]["hypervolume"] if gens else float("nan")
    click.echo(
        f"run complete: {len(result.front)} front solutions after {gens} generations"
        f" (hypervolume {final_hv:.4f}); wrote {out}"
    )


@main.command("front")
@click.option(
    "--front",
    "front_path",
    type=click.Path(exists=True, dir_okay=False),
    required=True,
    help="Front CSV to read.",
)
@click.option("--limit", type=int, default=None, help="Print at most this many rows.")
def front_command(front_path: str, limit: int | None):
    """Print a front export's solutions."""
    front, _ = _load_front(front_path)
    count = len(front) if limit is None else max(0, min(limit, len(front)))
    for position in range(count):
        click.echo(_row_line(front, position))
    if count < len(front):
        click.echo(f"... ({len(front) - count} more of {len(front)})")


@main.command("analyze")
@click.option(
    "--front",
    "front_path",
    type=click.Path(exists=True, dir_okay=False),
    required=True,
    help="Front CSV to analyze.",
)
@click.option(
    "--what",
    type=click.Choice(["summary", "extremes", "knee", "tiers"]),
    default="summary",
    show_default=True,
    help="Which analysis to print.",
)
def analyze_command(front_path: str, what: str):
    """Report extremes, the knee, or variable-importance tiers."""
    front, names = _load_front(front_path)
    schema = _schema_for(front, names)
    try:
        if what == "extremes":
            ext = extremes(front)
            click.echo("lowest cost:   " + _row_line(front, ext.min_cost_index))
            click.echo("lowest impact: " + _row_line(front, ext.min_impact_index))
        elif what == "knee":
            click.echo("knee: " + _row_line(front, knee_index(front)))
        elif what == "tiers":
            if len(front) < MIN_CATEGORIZE_SIZE:
                raise click.ClickException(
                    f"tiers need at least {MIN_CATEGORIZE_SIZE} solutions,"
                    f" front has {len(front)}"
                )
            tiers = categorize_variables(front, schema)
            for tier_name in ("primary", "secondary", "additional"):
                indices = getattr(tiers, tier_name)
                shown = ", ".join(
                    f"{schema.variables[i - 1].name} ({tiers.scores[i - 1]:.2f})"
                    for i in indices
                )
                click.echo(f"{tier_name}: {shown if shown else '(none)'}")
        else:
            doc = analytics_document(front, schema)
            cost_span = doc["extent"]["total_cost"]
            impact_span = doc["extent"]["environmental_impact"]
            click.echo(
                f"{len(front)} solutions; total cost"
                f" [{fmt_cost(cost_span[0])}, {fmt_cost(cost_span[1])}] M$;"
                f" environmental impact"
                f" [{fmt_impact(impact_span[0])}, {fmt_impact(impact_span[1])}]"
            )
            if doc["knee"] is not None:
                click.echo("knee: " + _row_line(front, doc["knee"]["index"]))
    except AnalyticsError as exc:
        raise _fail(exc) from None


@main.command("infer")
@click.option(
    "--front",
    "front_path",
    type=click.Path(exists=True, dir_okay=False),
    required=True,
    help="Front CSV providing the context.",
)
@click.option(
    "--selection",
    default="",
    help="Comma-separated 0-based front positions to highlight.",
)
@click.option(
    "--template",
    type=click.Choice(
        ["categorize", "tradeoff_analysis", "solution_brief", "expertise_tailored", "stakeholder_goal"]
    ),
    default=None,
    help="Named prompt template (overrides --question).",
)
@click.option("--question", default="", help="Free-form question when no template is given.")
@click.option(
    "--expertise",
    type=click.Choice(["domain_expert", "mid_technical", "executive"]),
    default="executive",
    show_default=True,
)
@click.option(
    "--goal",
    type=click.Choice(
        ["environmental", "investor", "community", "regulatory", "socioeconomic", "none"]
    ),
    default="none",
    show_default=True,
)
@click.option(
    "--register",
    type=click.Choice(["technical", "plain"]),
    default="plain",
    show_default=True,
)
@click.option(
    "--offline/--live",
    "offline",
    default=True,
    show_default=True,
    help="Backend mode; live reads endpoint/model/token settings from the environment.",
)
@click.option(
    "--reports",
    type=click.Path(file_okay=False),
    default=None,
    help="Directory to persist the report into (optional).",
)
@click.option(
    "--format",
    "render_format",
    type=click.Choice(["plain", "structured"]),
    default="plain",
    show_default=True,
)
def infer_command(
    front_path: str,
    selection: str,
    template: str | None,
    question: str,
    expertise: str,
    goal: str,
    register: str,
    offline: bool,
    reports: str | None,
    render_format: str,
):
    """Generate a persona-tailored briefing about a front."""
    front, names = _load_front(front_path)
    schema = _schema_for(front, names)
    try:
        positions = [int(tok) for tok in selection.split(",") if tok.strip() != ""]
    except ValueError:
        raise click.ClickException(f"--selection must be comma-separated integers, got {selection!r}")
    if template is None and question == "":
        raise click.ClickException("pass --template or a non-empty --question")
    try:
        persona = Persona(expertise=expertise, goal=goal, language_register=register)
        tiers = categorize_variables(front, schema) if len(front) >= MIN_CATEGORIZE_SIZE else None
        context = build_context(
            front, analytics_document(front, schema), positions, tiers, schema=schema
        )
        prompt = build_prompt(context, persona, question=question, template=template)
        if offline:
            cfg = BackendConfig()
        else:
            cfg = load_config().backend_config("live")
        store = ReportStore(reports) if reports is not None else None
        report = infer(prompt, cfg, store=store)
    except _FAILURES as exc:
        raise _fail(exc) from None
    click.echo(render_report(report, render_format))


@main.command("serve")
@click.option("--host", default=None, help="Bind address (default from config).")
@click.option("--port", type=int, default=None, help="Bind port (default from config).")
@click.option("--store", "store_path", type=click.Path(file_okay=False), default=None)
@click.option(
    "--config",
    "config_file",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="JSON config file (flags and environment still win).",
)
@click.option("--workers", type=int, default=None, help="Concurrent optimization workers.")
@click.option(
    "--backend-mode",
    type=click.Choice(["offline", "live"]),
    default=None,
    help="Default inference backend mode.",
)
def serve_command(
    host: str | None,
    port: int | None,
    store_path: str | None,
    config_file: str | None,
    workers: int | None,
    backend_mode: str | None,
):
    """Start the HTTP API."""
    import uvicorn

    from .api import create_app
    from .service import GatewayService

    try:
        config = load_config(
            config_file=config_file,
            overrides={
                "bind_host": host,
                "bind_port": port,
                "store_path": store_path,
                "worker_count": workers,
                "backend_mode": backend_mode,
            },
        )
        service = GatewayService(config)
    except _FAILURES as exc:
        raise _fail(exc) from None
    app = create_app(service)
    click.echo(
        f"serving on http://{config.bind_host}:{config.bind_port}"
        f" (store: {config.store_path}, backend: {config.backend_mode})"
    )
    uvicorn.run(app, host=config.bind_host, port=config.bind_port, log_level="warning")


if __name__ == "__main__":
    main()
