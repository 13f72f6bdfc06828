import functools
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

import click
import numpy as np
from pydantic import ValidationError

from .config import (DEFAULT_ALPHA, DEFAULT_BETA, DEFAULT_SEED, LASSO_BOUND_FACTOR, LOG_LEVEL,
                     MC_DEFAULT_RUNS, MC_HORIZON_FACTOR)
from .errors import GameSyntaxError, SemanticError, StochTmplError, StructuralError
from .extraction import (PlayTranscript, TableAdversary, UniformAdversary, extract_parameterized, extract_pure,
                         play, replay_probability)
from .game import OBJECTIVE_KINDS, Edge, Owner, make_objective
from .gamefile import GameFile, parse_game
from .graph import adapt_app
from .models import AdversaryTable, ObjectiveSpec, SimulationReport, TemplateDocument
from .synthesis import synthesize
from .template import combine
from .verify.monte_carlo import monte_carlo
from .verify.oracle import oracle_winning_set

logger = logging.getLogger(__name__)


def emit(payload) -> None:
    click.echo(json.dumps(payload, indent=2, default=str))


def status(message: str) -> None:
    click.echo(message, err=True)


def handles_errors(f):
    """Turn package errors into a JSON diagnostic on stdout and the matching exit code."""
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except StochTmplError as e:
            emit(e.to_dict())
            status(f"❌ {e}")
            sys.exit(e.exit_code)
    return wrapper


# --- INPUTS ---

def load_game(path: str) -> GameFile:
    return parse_game(Path(path).read_text())


def load_template(path: str) -> TemplateDocument:
    try:
        return TemplateDocument.model_validate_json(Path(path).read_text())
    except ValidationError as e:
        raise GameSyntaxError(f"{path}: {e.errors()[0]['msg']}", 1) from e


def parse_targets(gf: GameFile, target: Optional[str]) -> List[int]:
    return gf.resolve_all(target.split(",")) if target else []


def parse_edges(gf: GameFile, text: str) -> List[Edge]:
    edges = []
    for item in text.split(","):
        if not item.strip():
            continue
        if ":" not in item:
            raise GameSyntaxError(f"edge '{item}' is not of the form src:dst", 1)
        src, dst = item.split(":", 1)
        u, v = gf.resolve(src), gf.resolve(dst)
        if not gf.game.has_edge(u, v):
            raise StructuralError(f"({u},{v}) is not an edge of the game")
        if gf.game.owners[u] != Owner.EVEN:
            raise StructuralError(f"({u},{v}) does not leave an Even vertex")
        edges.append((u, v))
    return edges


def objective_of(gf: GameFile, kind: str, target: Optional[str]):
    return make_objective(kind, gf.game, parse_targets(gf, target), gf.priorities)


def template_context(gf: GameFile, doc: TemplateDocument):
    """The template, its winning set and its objective, re-synthesizing the set when the file lacks it."""
    template = doc.to_template(gf.game)
    objective = doc.objective.to_objective(gf.game, gf.priorities) if doc.objective else None
    winning = doc.winning(gf.game)
    if winning is None:
        if objective is None:
            raise SemanticError("template file has neither a winning_set nor an objective")
        winning = synthesize(gf.game, objective).winning_set
    return template, winning, objective


objective_option = click.option("--objective", "kind", type=click.Choice(sorted(OBJECTIVE_KINDS)), required=True)
target_option = click.option("--target", default=None, help="Comma-separated vertex ids or names.")


# --- COMMANDS ---

@click.group()
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for fixpoint traces.")
def cli(verbose: int):
    """⚖️ Strategy templates for stochastic games."""
    level = {0: LOG_LEVEL, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@cli.command()
@click.argument("game", type=click.Path(exists=True, dir_okay=False))
@objective_option
@target_option
@handles_errors
def solve(game, kind, target):
    gf = load_game(game)
    result = synthesize(gf.game, objective_of(gf, kind, target))
    emit({"objective": kind, "winning_set": list(result.winning_set)})


@cli.command()
@click.argument("game", type=click.Path(exists=True, dir_okay=False))
@objective_option
@target_option
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@handles_errors
def template(game, kind, target, output):
    gf = load_game(game)
    objective = objective_of(gf, kind, target)
    result = synthesize(gf.game, objective)
    doc = TemplateDocument.from_template(result.template, result.winning_set, objective)
    text = doc.model_dump_json(indent=2)
    if output:
        Path(output).write_text(text + "\n")
        status(f"✅ template written to {output}")
    click.echo(text)


@cli.command()
@click.argument("game", type=click.Path(exists=True, dir_okay=False))
@click.argument("template_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--mode", type=click.Choice(["pure", "param"]), default="pure")
@click.option("--alpha", default=str(DEFAULT_ALPHA))
@click.option("--beta", default=str(DEFAULT_BETA))
@click.option("--seed", type=int, default=DEFAULT_SEED)
@click.option("--start", default=None, help="Play from this vertex and print the transcript.")
@click.option("--steps", type=int, default=20)
@click.option("--replay", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Transcript whose Even moves are scored under the mixed strategy.")
@handles_errors
def extract(game, template_file, mode, alpha, beta, seed, start, steps, replay):
    gf = load_game(game)
    t, winning, _ = template_context(gf, load_template(template_file))
    if mode == "pure":
        state = extract_pure(gf.game, t, winning)
    else:
        state = extract_parameterized(gf.game, t, winning, alpha, beta, seed)

    if replay:
        if mode != "param":
            raise SemanticError("--replay scores transcripts under the mixed strategy; use --mode param")
        probs = replay_probability(state, PlayTranscript.parse(Path(replay).read_text()))
        emit({"even_step_probabilities": [str(p) for p in probs], "all_positive": all(p > 0 for p in probs)})
        return
    if start is not None:
        transcript = play(state, gf.resolve(start), steps, np.random.default_rng(seed), UniformAdversary(), seed)
        click.echo(transcript.dump(), nl=False)
        return

    payload = {"mode": mode, "support": {str(v): list(s) for v, s in sorted(state.support.items())}}
    if mode == "pure":
        payload["stalled"] = sorted(state.stalled)
    else:
        payload.update(alpha=str(state.alpha), beta=str(state.beta), seed=seed)
    emit(payload)


@cli.command()
@click.argument("game", type=click.Path(exists=True, dir_okay=False))
@click.argument("template_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--runs", type=int, default=MC_DEFAULT_RUNS)
@click.option("--horizon", type=int, default=None, help="Defaults to a multiple of |V|.")
@click.option("--seed", type=int, default=DEFAULT_SEED)
@click.option("--adversary", default="uniform", help="'uniform' or 'table:<file>'.")
@click.option("--mode", type=click.Choice(["pure", "param"]), default="param")
@click.option("--alpha", default=str(DEFAULT_ALPHA))
@click.option("--beta", default=str(DEFAULT_BETA))
@click.option("--start", default=None, help="Defaults to the smallest vertex of the winning set.")
@click.option("--json", "as_json", is_flag=True)
@handles_errors
def simulate(game, template_file, runs, horizon, seed, adversary, mode, alpha, beta, start, as_json):
    gf = load_game(game)
    t, winning, objective = template_context(gf, load_template(template_file))
    if objective is None:
        raise SemanticError("template file does not record its objective")

    if adversary == "uniform":
        odd = UniformAdversary()
    elif adversary.startswith("table:"):
        table = AdversaryTable.model_validate_json(Path(adversary[len("table:"):]).read_text())
        odd = TableAdversary(table.check(gf.game))
    else:
        raise SemanticError(f"unknown adversary '{adversary}'")

    if start is None:
        if not winning:
            raise SemanticError("winning set is empty; give --start")
        start_vertex = next(iter(winning))
    else:
        start_vertex = gf.resolve(start)

    state = (extract_pure(gf.game, t, winning) if mode == "pure"
             else extract_parameterized(gf.game, t, winning, alpha, beta, seed))
    horizon = horizon or MC_HORIZON_FACTOR * gf.game.num_vertices
    status(f"🎲 simulating {runs} runs of {horizon} steps")
    stats = monte_carlo(gf.game, state, odd, objective, start_vertex, runs, horizon, seed, template=t)
    report = SimulationReport.from_stats(stats)
    click.echo(report.model_dump_json(indent=2) if as_json else report.to_text(), nl=as_json)


@cli.command(name="combine")
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@click.option("--game", "game_path", type=click.Path(exists=True, dir_okay=False), default=None, help="Check vertex-level conflicts against this game.")
@handles_errors
def combine_cmd(first, second, game_path):
    d1, d2 = load_template(first), load_template(second)
    gf = load_game(game_path) if game_path else None
    game = gf.game if gf else None
    winning = None
    if gf is not None and (d1.winning_set is not None or d2.winning_set is not None):
        winning = gf.game.vertex_set((d1.winning_set or []) + (d2.winning_set or []))
    merged = combine(d1.to_template(game), d2.to_template(game), game, winning)
    objective = d1.objective or d2.objective
    doc = TemplateDocument.from_template(merged, winning)
    doc.objective = objective
    click.echo(doc.model_dump_json(indent=2))


@cli.command()
@click.argument("game", type=click.Path(exists=True, dir_okay=False))
@click.argument("template_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--disable", required=True, help="Comma-separated src:dst edges.")
@click.option("-k", "--bound", type=int, default=None, help="Lasso size bound for the re-check.")
@click.option("--fresh/--no-fresh", default=True, help="Also time a fresh synthesis.")
@handles_errors
def adapt(game, template_file, disable, bound, fresh):
    gf = load_game(game)
    t, winning, objective = template_context(gf, load_template(template_file))
    if objective is None:
        raise SemanticError("template file does not record its objective")
    disabled = parse_edges(gf, disable)

    status("🚀 Starting adapt workflow...")
    result = adapt_app.invoke({
        "messages": [],
        "game": gf.game,
        "objective": objective,
        "template": t,
        "winning": winning,
        "disabled": disabled,
        "k": bound or LASSO_BOUND_FACTOR * gf.game.num_vertices,
        "run_fresh": fresh,
        "adapt_timings": [],
        "errors": [],
    })
    for line in result.get("messages", []):
        status(line)
    report = result["report"]
    click.echo(report.model_dump_json(indent=2))
    if report.verdict == "conflict":
        sys.exit(4)


@cli.command()
@click.argument("game", type=click.Path(exists=True, dir_okay=False))
@objective_option
@target_option
@click.option("--oracle", is_flag=True, required=True, help="Compare against the brute-force oracle.")
@handles_errors
def verify(game, kind, target, oracle):
    gf = load_game(game)
    objective = objective_of(gf, kind, target)
    synthesized = synthesize(gf.game, objective).winning_set
    brute = oracle_winning_set(gf.game, objective)
    agree = synthesized == brute
    status("✅ oracle agrees" if agree else "❌ oracle disagrees")
    emit({
        "objective": ObjectiveSpec.from_objective(objective).model_dump(),
        "synthesis": list(synthesized),
        "oracle": list(brute),
        "agree": agree,
    })


if __name__ == "__main__":
    cli()
