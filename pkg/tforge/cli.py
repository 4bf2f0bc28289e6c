"""Command-line front end for tutte-forge.

Exit codes: 0 when the command succeeds or a check passes, 1 for a semantic
negative (not T-equivalent, not isomorphic, a check failed) and 2 for usage,
input or configuration errors.
"""

import json
import logging
import re
from contextlib import contextmanager, nullcontext
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Optional

import typer
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from tforge.constructions import (
    TerminalList,
    W0Spec,
    glue,
    rotor_flip_pair,
    validate_w0,
    w0_flip_pair,
    w0_reversed_pair,
    whitney_twist,
)
from tforge.corpus import corpus, get_entry, run_entry
from tforge.graph.io import read_graph, render_graph, write_graph
from tforge.graph.models import Multigraph
from tforge.iso.canon import canonical_code
from tforge.iso.search import find_isomorphism
from tforge.phigen import (
    WitnessDocument,
    attach_rotors_with_witness,
    build_psi_digraph,
    certify_phi_prime,
    check_cycle_pairing,
    default_menu,
    directed_cycles,
    enumerate_phi_witnesses,
    generate,
    read_witness,
    run_pipeline,
    verify_new_member,
    write_witness,
)
from tforge.runtime.config import ForgeConfig
from tforge.runtime.exceptions import ForgeError
from tforge.runtime.logging_config import setup_logging, with_log_level
from tforge.runtime.performance import get_monitor
from tforge.tutte.engine import EngineConfig, TutteEngine
from tforge.tutte.oracle import tutte_subset_expansion
from tforge.verify import (
    EquivalenceReport,
    check_expansion_all,
    check_necessary,
    check_theorem_partitions,
    check_theorem_subsets,
    random_glue_probe,
)

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="tforge",
    help="tutte-forge - exact Tutte polynomials and T-equivalent graph constructions",
    no_args_is_help=True,
)
console = Console()
err_console = Console(stderr=True)

EXIT_NEGATIVE = 1
EXIT_ERROR = 2


@dataclass
class CliState:
    """Resolved configuration shared by every command of one invocation."""

    config: ForgeConfig
    engine_config: EngineConfig

    @property
    def max_vertices(self) -> int:
        return self.config.iso.max_vertices

    def engine(self) -> TutteEngine:
        return TutteEngine(self.engine_config)


class EngineChoice(str, Enum):
    DC = "dc"
    SUBSET = "subset"


@contextmanager
def forge_errors() -> Iterator[None]:
    """Report ForgeError on stderr and exit with status 2."""
    try:
        yield
    except ForgeError as e:
        err_console.print(f"[red]Error:[/red] {e}", highlight=False)
        raise typer.Exit(EXIT_ERROR)


def _state(ctx: typer.Context) -> CliState:
    return ctx.obj


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise typer.BadParameter(f"{what} must be a comma list of integers, got {text!r}")


def _terminals(graph: Multigraph, name: str) -> TerminalList:
    return TerminalList.named(graph, name)


def _print_report(report: EquivalenceReport, as_json: bool) -> None:
    if as_json:
        typer.echo(json.dumps(report.to_dict(), indent=2))
    else:
        console.print(report.render())
        for note in report.notes:
            console.print(f"[dim]{note}[/dim]", highlight=False)
    if not report.passed:
        raise typer.Exit(EXIT_NEGATIVE)


def _print_stats(engine: Optional[TutteEngine]) -> None:
    if engine is not None:
        table = Table(title="Engine statistics")
        table.add_column("Counter", style="cyan")
        table.add_column("Value", justify="right")
        for name, value in engine.stats.to_dict().items():
            table.add_row(name, str(value))
        for name, value in engine.cache.stats().items():
            table.add_row(f"cache.{name}", str(value))
        console.print(table)

    timings = Table(title="Timings")
    timings.add_column("Operation", style="cyan")
    timings.add_column("Calls", justify="right")
    timings.add_column("Total (s)", justify="right")
    timings.add_column("Max (s)", justify="right")
    for name, stats in sorted(get_monitor().get_all_stats().items()):
        timings.add_row(
            name, str(stats.call_count), f"{stats.total_time:.4f}", f"{stats.max_time:.4f}"
        )
    console.print(timings)


# =============================================================================
# Root callback
# =============================================================================


@app.callback()
def main(
    ctx: typer.Context,
    config_file: Optional[Path] = typer.Option(None, "--config", "-c", help="Config file path"),
    log_level: Optional[str] = typer.Option(
        None, "--log-level", help="Log level (DEBUG, INFO, WARNING, ERROR)"
    ),
    parallel: Optional[int] = typer.Option(
        None, "--parallel", "-p", min=1, help="Parallel tasks for top-level blocks"
    ),
    no_memo: bool = typer.Option(False, "--no-memo", help="Disable the engine memo cache"),
):
    """Load configuration and logging before any command runs."""
    with forge_errors():
        config = ForgeConfig.load_or_default(config_file)

    level = (log_level or config.logging.level).upper()
    if not isinstance(getattr(logging, level, None), int):
        raise typer.BadParameter(f"invalid log level {level!r}", param_hint="--log-level")
    setup_logging(
        level,
        log_file=Path(config.logging.file) if config.logging.file else None,
        colored=config.logging.colored,
    )

    with forge_errors():
        engine_config = EngineConfig.from_settings(config.engine)
        if parallel is not None:
            engine_config.parallel_tasks = parallel
        if no_memo:
            engine_config.memo_enabled = False
    logger.debug(f"Engine config: {engine_config.to_dict()}")
    ctx.obj = CliState(config, engine_config)


# =============================================================================
# Polynomials and isomorphism
# =============================================================================


@app.command()
def compute(
    ctx: typer.Context,
    graph_file: Path = typer.Argument(..., help="Graph in the text format"),
    engine_choice: EngineChoice = typer.Option(
        EngineChoice.DC, "--engine", "-e", help="dc (deletion-contraction) or subset (oracle)"
    ),
    stats: bool = typer.Option(False, "--stats", help="Print engine statistics and timings"),
    evaluate: Optional[str] = typer.Option(
        None, "--evaluate", help="Also print the value at X,Y (integers or fractions)"
    ),
):
    """Print the Tutte polynomial of a graph."""
    state = _state(ctx)
    point = None
    if evaluate is not None:
        parts = evaluate.split(",")
        try:
            point = tuple(Fraction(p.strip()) for p in parts)
        except (ValueError, ZeroDivisionError):
            point = None
        if point is None or len(point) != 2:
            raise typer.BadParameter(f"expected X,Y, got {evaluate!r}", param_hint="--evaluate")

    with forge_errors():
        g = read_graph(graph_file)
        engine = None
        if engine_choice == EngineChoice.SUBSET:
            poly = tutte_subset_expansion(g, state.config.engine.oracle_edge_limit)
        else:
            engine = state.engine()
            poly = engine.compute(g)

    typer.echo(str(poly))
    if point is not None:
        typer.echo(f"T({point[0]},{point[1]}) = {poly.evaluate(*point)}")
    if stats:
        _print_stats(engine)


@app.command()
def equal(
    ctx: typer.Context,
    file_a: Path = typer.Argument(..., help="First graph"),
    file_b: Path = typer.Argument(..., help="Second graph"),
):
    """Exit 0 when the two graphs are T-equivalent, 1 otherwise."""
    with forge_errors():
        g, h = read_graph(file_a), read_graph(file_b)
        engine = _state(ctx).engine()
        same = engine.compute(g) == engine.compute(h)
    if same:
        typer.echo("T-EQUIVALENT")
        return
    typer.echo("NOT-T-EQUIVALENT")
    raise typer.Exit(EXIT_NEGATIVE)


@app.command()
def iso(
    ctx: typer.Context,
    file_a: Path = typer.Argument(..., help="First graph"),
    file_b: Path = typer.Argument(..., help="Second graph"),
):
    """Print an isomorphism as i->j pairs, or NOT-ISOMORPHIC (exit 1)."""
    with forge_errors():
        g, h = read_graph(file_a), read_graph(file_b)
        mapping = find_isomorphism(g, h, _state(ctx).max_vertices)
    if mapping is None:
        typer.echo("NOT-ISOMORPHIC")
        raise typer.Exit(EXIT_NEGATIVE)
    typer.echo(mapping.render())


@app.command()
def canon(
    ctx: typer.Context,
    graph_file: Path = typer.Argument(..., help="Graph in the text format"),
):
    """Print the canonical code of a graph in hex."""
    with forge_errors():
        code = canonical_code(read_graph(graph_file), _state(ctx).max_vertices)
    typer.echo(code.hex())


# =============================================================================
# Constructions
# =============================================================================


@app.command("glue")
def glue_command(
    host_file: Path = typer.Argument(..., help="Host graph G"),
    host_list: str = typer.Argument(..., help="Terminal list name in G"),
    other_file: Path = typer.Argument(..., help="Attached graph W"),
    other_list: str = typer.Argument(..., help="Terminal list name in W"),
    output: Path = typer.Option(..., "--output", "-o", help="Where to write G ⊔ W"),
):
    """Glue W onto G by identifying the two terminal lists in order."""
    with forge_errors():
        g, w = read_graph(host_file), read_graph(other_file)
        glued = glue(_terminals(g, host_list), _terminals(w, other_list), name=output.stem)
        write_graph(glued, output)
    console.print(
        f"[green]✓[/green] {output}: {glued.num_vertices} vertices, {glued.num_edges} edges",
        highlight=False,
    )


@app.command()
def twist(
    graph_file: Path = typer.Argument(..., help="Graph to twist"),
    cut: str = typer.Option(..., "--cut", help="The two cut vertices, e.g. 1,5"),
    side: str = typer.Option(..., "--side", help="Vertices of the side to re-attach"),
    output: Path = typer.Option(..., "--output", "-o", help="Where to write the twisted graph"),
):
    """Whitney twist at a 2-cut."""
    cut_ids = _int_list(cut, "--cut")
    if len(cut_ids) != 2:
        raise typer.BadParameter("expected exactly two cut vertices", param_hint="--cut")
    with forge_errors():
        g = read_graph(graph_file)
        twisted = whitney_twist(g, (cut_ids[0], cut_ids[1]), _int_list(side, "--side"))
        write_graph(twisted.with_name(output.stem), output)
    console.print(f"[green]✓[/green] Wrote {output}", highlight=False)


def _write_pair(
    straight: Multigraph, flipped: Multigraph, output: Path, flipped_out: Path
) -> None:
    write_graph(straight.with_name(output.stem), output)
    write_graph(flipped.with_name(flipped_out.stem), flipped_out)
    console.print(f"[green]✓[/green] Wrote {output} and {flipped_out}", highlight=False)


def _report_pair(state: CliState, straight: Multigraph, flipped: Multigraph) -> None:
    engine = state.engine()
    same = engine.compute(straight) == engine.compute(flipped)
    mark = "[green]✓[/green]" if same else "[red]✗[/red]"
    console.print(f"{mark} T-equivalent: {same}")
    if not same:
        raise typer.Exit(EXIT_NEGATIVE)


@app.command("rotor-flip")
def rotor_flip(
    ctx: typer.Context,
    rotor_file: Path = typer.Argument(..., help="Rotor graph R"),
    rotor_list: str = typer.Argument(..., help="Terminal list of R forming a vertex orbit"),
    stator_file: Path = typer.Argument(..., help="Stator graph W"),
    stator_list: str = typer.Argument(..., help="Terminal list of W"),
    output: Path = typer.Option(..., "--output", "-o", help="Where to write R ⊔ W"),
    flipped_out: Path = typer.Option(..., "--flipped", help="Where to write the flipped graph"),
    force: bool = typer.Option(False, "--force", help="Build even if the orbit check fails"),
    check: bool = typer.Option(False, "--check", help="Compare the Tutte polynomials"),
):
    """Build a rotor and its flip glued to the same stator."""
    state = _state(ctx)
    with forge_errors():
        r, w = read_graph(rotor_file), read_graph(stator_file)
        straight, flipped = rotor_flip_pair(
            _terminals(r, rotor_list), _terminals(w, stator_list), force, state.max_vertices
        )
        _write_pair(straight, flipped, output, flipped_out)
        if check:
            _report_pair(state, straight, flipped)


def _w0_spec(w0: Multigraph, w_name: str, x_name: str) -> W0Spec:
    """W0Spec with r = |x-list| and g = |w-list| / r read from named terminal lists."""
    x_list, w_list = w0.terminal(x_name), w0.terminal(w_name)
    r = len(x_list)
    return W0Spec(w0, w_list, x_list, r=r, g=max(1, len(w_list) // max(1, r)))


@app.command("w0-flip")
def w0_flip(
    ctx: typer.Context,
    rotor_file: Path = typer.Argument(..., help="Rotor graph R with r*g terminals"),
    rotor_list: str = typer.Argument(..., help="Terminal list of R"),
    w0_file: Path = typer.Argument(..., help="The W0 gadget"),
    y_file: Path = typer.Argument(..., help="Graph Y glued to the x-list"),
    y_list: str = typer.Argument(..., help="Terminal list of Y (length r)"),
    output: Path = typer.Option(..., "--output", "-o", help="Where to write R ⊔ W"),
    flipped_out: Path = typer.Option(..., "--flipped", help="Where to write the second graph"),
    w_name: str = typer.Option("w", "--w-list", help="Terminal list of W0 meeting R"),
    x_name: str = typer.Option("x", "--x-list", help="Terminal list of W0 meeting Y"),
    reversed_x: bool = typer.Option(
        False, "--reversed-x", help="Glue the second graph to W0 with the x-list reversed"
    ),
    force: bool = typer.Option(False, "--force", help="Skip the hypothesis checks"),
    check: bool = typer.Option(False, "--check", help="Compare the Tutte polynomials"),
):
    """Flip a rotor of order r*g against a W0 assembly."""
    state = _state(ctx)
    with forge_errors():
        r, w0, y = read_graph(rotor_file), read_graph(w0_file), read_graph(y_file)
        spec = _w0_spec(w0, w_name, x_name)
        build = w0_reversed_pair if reversed_x else w0_flip_pair
        straight, flipped = build(
            _terminals(r, rotor_list), spec, _terminals(y, y_list), force, state.max_vertices
        )
        _write_pair(straight, flipped, output, flipped_out)
        if check:
            _report_pair(state, straight, flipped)


app.command("theorem5", help="Alias of w0-flip.")(w0_flip)


@app.command("w0-check")
def w0_check(
    ctx: typer.Context,
    w0_file: Path = typer.Argument(..., help="The W0 gadget"),
    w_name: str = typer.Option("w", "--w-list", help="Terminal list of W0 meeting R"),
    x_name: str = typer.Option("x", "--x-list", help="Terminal list of W0 meeting Y"),
    as_json: bool = typer.Option(False, "--json", help="Print the report as JSON"),
):
    """Validate the rotation and reflection conditions of a W0 gadget."""
    with forge_errors():
        w0 = read_graph(w0_file)
        spec = _w0_spec(w0, w_name, x_name)
        report = validate_w0(spec, _state(ctx).max_vertices)
    if as_json:
        typer.echo(json.dumps(report.to_dict(), indent=2))
    elif report.valid:
        console.print(
            f"[green]✓ valid[/green] phi={report.phi} rho={report.rho} "
            f"c={report.c} c'={report.c_prime}",
            highlight=False,
        )
    else:
        console.print("[red]✗ invalid[/red]")
        for violation in report.violations:
            console.print(f"  - {violation}", highlight=False)
    if not report.valid:
        raise typer.Exit(EXIT_NEGATIVE)


# =============================================================================
# Phi subcommands
# =============================================================================


phi_app = typer.Typer(help="Certify quaternions and grow them by rotor attachment")
app.add_typer(phi_app, name="phi")


def _write_graph_pair(
    g: Multigraph, h: Multigraph, g_out: Optional[Path], h_out: Optional[Path]
) -> None:
    if g_out:
        write_graph(g.with_name(g_out.stem), g_out)
    if h_out:
        write_graph(h.with_name(h_out.stem), h_out)


@phi_app.command("certify")
def phi_certify(
    ctx: typer.Context,
    g_file: Path = typer.Argument(..., help="Graph G"),
    e: int = typer.Argument(..., help="Edge id e in G"),
    h_file: Path = typer.Argument(..., help="Graph H"),
    f: int = typer.Argument(..., help="Edge id f in H"),
    psi_index: int = typer.Option(0, "--psi-index", help="Which psi of the enumeration to keep"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write a witness file"),
):
    """Find phi: G\\e -> H\\f and psi: G/e -> H/f (exit 1 if none exist)."""
    state = _state(ctx)
    with forge_errors():
        g, h = read_graph(g_file), read_graph(h_file)
        first = certify_phi_prime(g, e, h, f, state.max_vertices)
        if first is None:
            typer.echo("NOT-CERTIFIED")
            raise typer.Exit(EXIT_NEGATIVE)
        choices = enumerate_phi_witnesses(g, e, h, f, state.max_vertices, phi=first.phi)
        if not 0 <= psi_index < len(choices):
            raise typer.BadParameter(
                f"psi index {psi_index} outside [0, {len(choices) - 1}]", param_hint="--psi-index"
            )
        witness = choices[psi_index]
        typer.echo(f"phi: {witness.phi.render()}")
        typer.echo(f"psi: {witness.psi.render()}")
        typer.echo(f"psi choice: {psi_index} of {len(choices)}")
        if output:
            write_witness(WitnessDocument(witness, [], str(g_file), str(h_file)), output)


@phi_app.command("digraph")
def phi_digraph(
    witness_file: Path = typer.Argument(..., help="Witness file"),
    as_json: bool = typer.Option(False, "--json", help="Print as JSON"),
):
    """Print the arcs of D_psi."""
    with forge_errors():
        digraph = build_psi_digraph(read_witness(witness_file).witness)
    if as_json:
        typer.echo(json.dumps(digraph.to_dict(), indent=2))
        return
    for i, j in digraph.arcs:
        typer.echo(f"{i} -> {j}")


@phi_app.command("cycles")
def phi_cycles(
    witness_file: Path = typer.Argument(..., help="Witness file"),
):
    """Print the directed cycles of D_psi and check how they pair e's and f's ends."""
    with forge_errors():
        witness = read_witness(witness_file).witness
        cycles = directed_cycles(build_psi_digraph(witness))
        for cycle in cycles:
            check_cycle_pairing(witness, cycle)
            typer.echo("(" + ",".join(str(i) for i in cycle) + ")")
    logger.info(f"{len(cycles)} cycles in D_psi")


def _parse_menu(text: Optional[str]) -> dict[int, str]:
    if not text:
        return {}
    # rotor names such as K1,3 contain commas, so split only before SIZE=
    overrides = {}
    for chunk in re.split(r",\s*(?=\d+=)", text.strip()):
        size, sep, name = chunk.strip().partition("=")
        if not sep or not size.isdigit() or not name:
            raise typer.BadParameter(f"expected SIZE=ROTOR, got {chunk!r}", param_hint="--menu")
        overrides[int(size)] = name.strip()
    return overrides


def _verdict_table(rows: list[tuple[str, dict]]) -> Table:
    table = Table(title="Generated pairs")
    table.add_column("psi", style="cyan")
    table.add_column("In Phi'")
    table.add_column("T-equal")
    table.add_column("Isomorphic")

    def mark(value: Optional[bool]) -> str:
        if value is None:
            return "[yellow]?[/yellow]"
        return "[green]✓[/green]" if value else "[red]✗[/red]"

    for label, verdict in rows:
        table.add_row(
            label,
            mark(verdict["in_phi_prime"]),
            mark(verdict["t_equivalent"]),
            "yes" if verdict["isomorphic"] else ("no" if verdict["isomorphic"] is False else "?"),
        )
    return table


@phi_app.command("generate")
def phi_generate(
    ctx: typer.Context,
    witness_file: Path = typer.Argument(..., help="Seed witness file"),
    menu: Optional[str] = typer.Option(
        None, "--menu", help="Rotor overrides by orbit size, e.g. 3=K3,4=C4"
    ),
    all_psi: bool = typer.Option(
        False, "--all-psi", help="Run once per psi for the witness's phi instead of its psi only"
    ),
    output: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Write the seed plus rotor assignments for replay"
    ),
    g_out: Optional[Path] = typer.Option(None, "--g-out", help="Write the grown G"),
    h_out: Optional[Path] = typer.Option(None, "--h-out", help="Write the grown H"),
    as_json: bool = typer.Option(False, "--json", help="Print results as JSON"),
):
    """Attach a rotor along every cycle of D_psi and verify the new pair."""
    state = _state(ctx)
    with forge_errors():
        document = read_witness(witness_file)
        seed = document.witness
        rotor_menu = default_menu(_parse_menu(menu))
        engine = state.engine()
        if all_psi:
            pairs = generate(
                seed.g,
                seed.e,
                seed.h,
                seed.f,
                rotor_menu,
                phi=seed.phi,
                engine=engine,
                max_vertices=state.max_vertices,
            )
        else:
            pairs = [
                run_pipeline(seed, rotor_menu, engine=engine, max_vertices=state.max_vertices)
            ]

        first = pairs[0]
        if output:
            write_witness(
                WitnessDocument(
                    first.seed, first.assignments, document.g_source, document.h_source
                ),
                output,
            )
        _write_graph_pair(first.result.g, first.result.h, g_out, h_out)

    if as_json:
        typer.echo(json.dumps([p.to_dict() for p in pairs], indent=2))
    else:
        rows = [(str(p.seed.psi_index), p.verdict.to_dict()) for p in pairs]
        console.print(_verdict_table(rows))
    if not all(p.verdict.passed for p in pairs):
        raise typer.Exit(EXIT_NEGATIVE)


@phi_app.command("verify")
def phi_verify(
    ctx: typer.Context,
    witness_file: Path = typer.Argument(..., help="Witness file, may carry rotor assignments"),
    g_out: Optional[Path] = typer.Option(None, "--g-out", help="Write the replayed G"),
    h_out: Optional[Path] = typer.Option(None, "--h-out", help="Write the replayed H"),
):
    """Replay a witness file's rotor assignments and verify the result."""
    state = _state(ctx)
    with forge_errors():
        document = read_witness(witness_file)
        witness = document.witness
        if document.assignments:
            witness = attach_rotors_with_witness(witness, document.assignments)
        verdict = verify_new_member(
            witness.g,
            witness.h,
            witness.e,
            witness.f,
            witness=witness,
            engine=state.engine(),
            max_vertices=state.max_vertices,
        )
        _write_graph_pair(witness.g, witness.h, g_out, h_out)

    console.print(_verdict_table([(str(witness.psi_index), verdict.to_dict())]))
    for note in verdict.notes:
        console.print(f"[dim]{note}[/dim]", highlight=False)
    if not verdict.passed:
        raise typer.Exit(EXIT_NEGATIVE)


# =============================================================================
# Check subcommands
# =============================================================================


check_app = typer.Typer(help="Verify T-equivalence conditions on terminal-list pairs")
app.add_typer(check_app, name="check")


def _terminal_pair(
    g_file: Path, g_list: str, h_file: Path, h_list: str
) -> tuple[TerminalList, TerminalList]:
    g, h = read_graph(g_file), read_graph(h_file)
    return _terminals(g, g_list), _terminals(h, h_list)


@check_app.command("subsets")
def check_subsets(
    ctx: typer.Context,
    g_file: Path = typer.Argument(..., help="Graph G"),
    g_list: str = typer.Argument(..., help="Terminal list of G"),
    h_file: Path = typer.Argument(..., help="Graph H"),
    h_list: str = typer.Argument(..., help="Terminal list of H"),
    as_json: bool = typer.Option(False, "--json", help="Print the report as JSON"),
):
    """T(G_S) = T(H_S) for every set S of terminal pairs."""
    state = _state(ctx)
    with forge_errors():
        gt, ht = _terminal_pair(g_file, g_list, h_file, h_list)
        report = check_theorem_subsets(
            gt, ht, state.engine(), max_k=state.config.verify.subset_max_k
        )
    _print_report(report, as_json)


@check_app.command("partitions")
def check_partitions(
    ctx: typer.Context,
    g_file: Path = typer.Argument(..., help="Graph G"),
    g_list: str = typer.Argument(..., help="Terminal list of G"),
    h_file: Path = typer.Argument(..., help="Graph H"),
    h_list: str = typer.Argument(..., help="Terminal list of H"),
    as_json: bool = typer.Option(False, "--json", help="Print the report as JSON"),
):
    """T(G(P)) = T(H(P)) for every partition P of the terminals."""
    state = _state(ctx)
    with forge_errors():
        gt, ht = _terminal_pair(g_file, g_list, h_file, h_list)
        report = check_theorem_partitions(
            gt, ht, state.engine(), max_k=state.config.verify.partition_max_k
        )
    _print_report(report, as_json)


@check_app.command("necessary")
def check_necessary_command(
    g_file: Path = typer.Argument(..., help="Graph G"),
    g_list: str = typer.Argument(..., help="Terminal list of G"),
    h_file: Path = typer.Argument(..., help="Graph H"),
    h_list: str = typer.Argument(..., help="Terminal list of H"),
    as_json: bool = typer.Option(False, "--json", help="Print the report as JSON"),
):
    """Equal loop counts and equal terminal-pair multiplicities."""
    with forge_errors():
        report = check_necessary(*_terminal_pair(g_file, g_list, h_file, h_list))
    _print_report(report, as_json)


@check_app.command("expansion")
def check_expansion(
    ctx: typer.Context,
    g_file: Path = typer.Argument(..., help="Connected graph G"),
    g_list: str = typer.Argument(..., help="Terminal list of G"),
    as_json: bool = typer.Option(False, "--json", help="Print the report as JSON"),
):
    """Compare T(G_S) with its expansion over partition quotients, for every S."""
    state = _state(ctx)
    with forge_errors():
        gt = _terminals(read_graph(g_file), g_list)
        report = check_expansion_all(
            gt, state.engine(), max_k=state.config.verify.subset_max_k, strict=False
        )
    _print_report(report, as_json)


@check_app.command("probe")
def check_probe(
    ctx: typer.Context,
    g_file: Path = typer.Argument(..., help="Graph G"),
    g_list: str = typer.Argument(..., help="Terminal list of G"),
    h_file: Path = typer.Argument(..., help="Graph H"),
    h_list: str = typer.Argument(..., help="Terminal list of H"),
    seed: int = typer.Option(0, "--seed", help="Random seed"),
    trials: Optional[int] = typer.Option(None, "--trials", min=1, help="Number of random W"),
    no_precheck: bool = typer.Option(
        False, "--no-precheck", help="Skip the partition condition pre-check"
    ),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log every trial on stderr"),
    as_json: bool = typer.Option(False, "--json", help="Print the report as JSON"),
):
    """Glue random graphs W onto both sides and compare the Tutte polynomials."""
    state = _state(ctx)
    settings = state.config.verify
    scope = with_log_level(logging.getLogger("tforge.verify"), "INFO") if verbose else nullcontext()
    with forge_errors(), scope:
        gt, ht = _terminal_pair(g_file, g_list, h_file, h_list)
        report = random_glue_probe(
            gt,
            ht,
            trials=trials or settings.probe_trials,
            seed=seed,
            extra_vertices=settings.probe_extra_vertices,
            multiplicity_cap=settings.probe_multiplicity_cap,
            loop_probability=settings.probe_loop_probability,
            engine=state.engine(),
            precheck=not no_precheck,
        )
    _print_report(report, as_json)


# =============================================================================
# Corpus subcommands
# =============================================================================


corpus_app = typer.Typer(help="Built-in example graphs and their assertions")
app.add_typer(corpus_app, name="corpus")


@corpus_app.command("list")
def corpus_list():
    """List corpus entries."""
    table = Table(title="Corpus")
    table.add_column("Name", style="cyan")
    table.add_column("Topic")
    table.add_column("Graphs", justify="right")
    table.add_column("Assertions", justify="right")
    for entry in corpus():
        table.add_row(entry.name, entry.topic, str(len(entry.graphs)), str(len(entry.assertions)))
    console.print(table)


@corpus_app.command("show")
def corpus_show(
    name: str = typer.Argument(..., help="Entry name"),
):
    """Show an entry's description, marked edges and graphs in the text format."""
    with forge_errors():
        entry = get_entry(name)
    console.print(Panel(entry.description, title=f"{entry.name} ({entry.topic})"), highlight=False)
    for key, edge in entry.marked_edges.items():
        console.print(f"marked edge {key}: {edge}", highlight=False)
    for key, graph in entry.graphs.items():
        console.print(f"[bold]{key}[/bold]")
        typer.echo(render_graph(graph), nl=False)
    for assertion in entry.assertions:
        console.print(f"  - {assertion.name}", highlight=False)


@corpus_app.command("run")
def corpus_run(
    ctx: typer.Context,
    name: Optional[str] = typer.Argument(None, help="Entry name (all entries when omitted)"),
    as_json: bool = typer.Option(False, "--json", help="Print results as JSON"),
):
    """Run corpus assertions; exit 1 if any fails."""
    state = _state(ctx)
    with forge_errors():
        entries = [get_entry(name)] if name else corpus()
    engine = state.engine()
    results = [run_entry(entry, engine) for entry in entries]

    if as_json:
        typer.echo(json.dumps([r.to_dict() for r in results], indent=2))
    else:
        for result in results:
            table = Table(title=result.entry, show_header=False)
            table.add_column("Status")
            table.add_column("Assertion")
            table.add_column("Detail", style="dim")
            for outcome in result.outcomes:
                status = "[green]✓[/green]" if outcome.passed else "[red]✗[/red]"
                table.add_row(status, outcome.name, outcome.detail)
            console.print(table)
    if not all(r.passed for r in results):
        raise typer.Exit(EXIT_NEGATIVE)


if __name__ == "__main__":
    app()
