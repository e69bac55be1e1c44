"""Command-line entry points.

Exit codes: 0 success, 1 domain error (bad file, invalid foil, cap
exceeded), 2 usage error.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from .core import (
    EnumerationCapExceeded,
    load_scenario,
    parse_allocation,
)
from .negotiation import (
    chain_to_json,
    fair_allocation,
    selfishness_bound,
    verify_fairness,
)
from .beliefs import belief_from_json, optimal_counterfactual, validate_counterfactual
from .explanation import (
    NEGOTIATION_TREE,
    baseline_explanation,
    explain,
    render_explanation,
)
from .noiselab import export_csv, run_noise_sweep, run_subset_sweep

DOMAIN_ERRORS = (ValueError, EnumerationCapExceeded, OSError, KeyError)


def _load_scenario(path: str):
    try:
        return load_scenario(path)
    except FileNotFoundError:
        raise click.ClickException(f"scenario file not found: {path}")
    except ValueError as e:
        raise click.ClickException(str(e))


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise click.ClickException(f"file not found: {path}")
    except json.JSONDecodeError as e:
        raise click.ClickException(f"{path}: not valid JSON ({e})")


@click.group()
def main() -> None:
    """Negotiation-aware task allocation, counterfactuals and explanations."""


@main.command()
@click.argument("scenario_path", metavar="SCENARIO")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--verify/--no-verify", default=True, help="Run the fairness certificate.")
def solve(scenario_path: str, fmt: str, verify: bool) -> None:
    """Compute the negotiation-aware fair allocation for SCENARIO."""
    scenario = _load_scenario(scenario_path)
    try:
        allocation, chain = fair_allocation(scenario)
    except EnumerationCapExceeded as e:
        raise click.ClickException(str(e))
    verdict = verify_fairness(scenario, allocation, chain) if verify else None
    if fmt == "json":
        out = {
            "allocation": allocation,
            "acceptStep": chain.outcome[1],
            "selfishnessBounds": [
                selfishness_bound(scenario, allocation, i)
                for i in range(scenario.num_humans)
            ],
            "chain": chain_to_json(chain),
        }
        if verdict is not None:
            out["fairnessCertificate"] = verdict.passed
        click.echo(json.dumps(out, indent=2, sort_keys=True))
        return
    step = chain.outcome[1]
    click.echo(f"fair allocation: {allocation} (accepted at step {step})")
    for i in range(scenario.num_humans):
        click.echo(f"  human {i}: cost {selfishness_bound(scenario, allocation, i):.6g}")
    click.echo(f"chain: {len(chain.nodes)} offers; {step} rejected before acceptance")
    if verdict is not None:
        click.echo(f"fairness certificate: {'pass' if verdict.passed else 'FAIL'}")


@main.command()
@click.argument("scenario_path", metavar="SCENARIO")
@click.argument("beliefs_path", metavar="BELIEFS")
@click.argument("allocation", metavar="ALLOCATION")
@click.option("--agent", type=int, required=True, help="Questioning human's index.")
def counterfactual(scenario_path: str, beliefs_path: str, allocation: str, agent: int) -> None:
    """Best foil ALLOCATION's owner would raise, or "none"."""
    scenario = _load_scenario(scenario_path)
    obj = _read_json(beliefs_path)
    try:
        if isinstance(obj, list):
            obj = next(b for b in obj if int(b.get("owner", -1)) == agent)
        belief = belief_from_json(scenario, obj)
        if belief.owner != agent:
            raise ValueError(
                f"belief file is for agent {belief.owner}, not {agent}"
            )
        o = parse_allocation(allocation, scenario.num_humans, scenario.num_tasks)
        cf = optimal_counterfactual(scenario, belief, o)
    except StopIteration:
        raise click.ClickException(f"no belief for agent {agent} in {beliefs_path}")
    except DOMAIN_ERRORS as e:
        raise click.ClickException(str(e))
    click.echo(cf.allocation if cf else "none")


@main.command(name="explain")
@click.argument("scenario_path", metavar="SCENARIO")
@click.argument("allocation", metavar="ALLOCATION")
@click.argument("foil", metavar="FOIL")
@click.option("--agent", type=int, required=True, help="Questioning human's index.")
@click.option("--style", type=click.Choice(["tree", "vacuous", "verbose"]), default="tree")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "dot"]), default="text")
def explain_cmd(scenario_path: str, allocation: str, foil: str, agent: int, style: str, fmt: str) -> None:
    """Refute FOIL against ALLOCATION for --agent."""
    scenario = _load_scenario(scenario_path)
    try:
        parse_allocation(allocation, scenario.num_humans, scenario.num_tasks)
        parse_allocation(foil, scenario.num_humans, scenario.num_tasks)
        verdict = validate_counterfactual(scenario, allocation, foil, agent)
        if not verdict.ok:
            raise ValueError(f"invalid foil (property {verdict.violated}): {verdict.reason}")
        if style == "tree":
            e = explain(scenario, allocation, foil, agent, enforce_guarantee=False)
        else:
            e = baseline_explanation(scenario, allocation, foil, agent, style)
    except DOMAIN_ERRORS as e:
        raise click.ClickException(str(e))
    click.echo(render_explanation(e, fmt), nl=False)
    if e.style == NEGOTIATION_TREE and not e.guarantee_holds:
        click.echo(
            "note: the replay does not refute this foil; "
            "the questioner would come out ahead.",
            err=True,
        )


@main.command(name="sweep-noise")
@click.argument("config_path", metavar="CONFIG")
@click.option("--out", "out_path", required=True, help="CSV output path.")
def sweep_noise(config_path: str, out_path: str) -> None:
    """Run the noise-radius sweep described by CONFIG."""
    cfg = _read_json(config_path)
    try:
        scenario = _load_scenario(str(cfg["scenario"]))
        result = run_noise_sweep(
            scenario,
            epsilons=list(cfg["epsilons"]),
            mode=str(cfg.get("mode", "PN")),
            trials=int(cfg.get("trials", 10)),
            delta=cfg.get("discount"),
            seed=int(cfg.get("seed", 0)),
        )
        export_csv(result, out_path)
    except DOMAIN_ERRORS as e:
        raise click.ClickException(str(e))
    for a in result.aggregates:
        click.echo(f"epsilon={a.epsilon}: mean={a.mean:.4g} stddev={a.stddev:.4g}")
    click.echo(f"wrote {out_path}")


@main.command(name="sweep-subset")
@click.argument("config_path", metavar="CONFIG")
@click.option("--out", "out_path", required=True, help="CSV output path.")
def sweep_subset(config_path: str, out_path: str) -> None:
    """Run the exact-knowledge subset sweep described by CONFIG."""
    cfg = _read_json(config_path)
    try:
        scenario = _load_scenario(str(cfg["scenario"]))
        result = run_subset_sweep(
            scenario,
            subset_sizes=list(cfg["subsetSizes"]),
            mus=list(cfg["mus"]),
            trials=int(cfg.get("trials", 5)),
            delta=cfg.get("discount"),
            seed=int(cfg.get("seed", 0)),
            normalizer=cfg.get("normalizer"),
        )
        export_csv(result, out_path)
    except DOMAIN_ERRORS as e:
        raise click.ClickException(str(e))
    for a in result.aggregates:
        click.echo(
            f"k={a.subset_k} mu={a.mu}: mean={a.mean:.4g} stddev={a.stddev:.4g}"
        )
    click.echo(f"wrote {out_path}")


@main.command()
@click.option("--port", type=int, default=None, help="Defaults to $NEGALLOC_PORT or 8000.")
@click.option("--host", default="127.0.0.1")
@click.option("--scenario-dir", type=click.Path(), default=None,
              help="Directory of scenario JSON files loaded at startup.")
def serve(port: int | None, host: str, scenario_dir: str | None) -> None:
    """Run the HTTP/JSON service (and static web UI when built)."""
    import uvicorn

    from .service import create_app

    if port is None:
        port = int(os.environ.get("NEGALLOC_PORT", "8000"))
    app = create_app(scenario_dir=scenario_dir)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    sys.exit(main())
