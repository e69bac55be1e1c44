"""HTTP/JSON service exposing the engine to scripts and the web UI.

All handlers are stateless over immutable scenario snapshots; the only
synchronized mutation is id allocation and snapshot insertion. Identifiers
are never reused; posting a changed scenario yields a fresh id.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .core import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapExceeded,
    Scenario,
    hamming_neighbors,
    parse_allocation,
    scenario_from_json,
    scenario_to_json,
)
from .negotiation import chain_to_json, fair_allocation, selfishness_bound
from .beliefs import (
    BeliefModel,
    belief_from_json,
    belief_to_json,
    exact_belief,
    optimal_counterfactual,
    validate_counterfactual,
)
from .explanation import explain, explanation_to_json
from .noiselab import NoiseConfig, build_belief_model, run_noise_sweep, run_subset_sweep


class SessionStore:
    """In-memory scenario and belief snapshots with monotone ids."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._counter = 0
        self.scenarios: dict[str, Scenario] = {}
        self.beliefs: dict[tuple[str, int], BeliefModel] = {}
        self._fair_cache: dict[str, tuple[str, dict]] = {}

    def add(self, scenario: Scenario) -> str:
        with self._lock:
            self._counter += 1
            sid = f"s{self._counter}"
            self.scenarios[sid] = scenario
        return sid

    def put_belief(self, sid: str, belief: BeliefModel) -> None:
        with self._lock:
            self.beliefs[(sid, belief.owner)] = belief

    def get_belief(self, sid: str, agent: int) -> BeliefModel | None:
        return self.beliefs.get((sid, agent))

    def fair(self, sid: str) -> tuple[str, dict]:
        cached = self._fair_cache.get(sid)
        if cached is None:
            allocation, chain = fair_allocation(self.scenarios[sid])
            cached = (allocation, chain_to_json(chain))
            with self._lock:
                self._fair_cache[sid] = cached
        return cached


def _error(status: int, message: str, **extra) -> JSONResponse:
    return JSONResponse({"error": message, **extra}, status_code=status)


async def _body(request: Request) -> dict | None:
    try:
        obj = await request.json()
    except json.JSONDecodeError:
        return None
    return obj if isinstance(obj, dict) else None


def create_app(
    scenario_dir: str | None = None,
    static_dir: str | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> FastAPI:
    app = FastAPI(title="negalloc", docs_url=None, redoc_url=None)
    store = SessionStore()
    app.state.store = store

    if scenario_dir:
        for path in sorted(Path(scenario_dir).glob("*.json")):
            try:
                store.add(scenario_from_json(json.loads(path.read_text())))
            except (ValueError, json.JSONDecodeError):
                continue  # skip non-scenario files

    def _scenario_or_none(sid: str) -> Scenario | None:
        return store.scenarios.get(sid)

    @app.post("/api/scenarios")
    async def post_scenario(request: Request):
        obj = await _body(request)
        if obj is None:
            return _error(400, "request body must be a scenario JSON object")
        try:
            scenario = scenario_from_json(obj)
        except ValueError as e:
            return _error(400, str(e))
        size = scenario.num_humans ** scenario.num_tasks
        if size > cap:
            return _error(
                413,
                f"scenario has {size} allocations, above the cap of {cap}",
                allocations=size,
            )
        sid = store.add(scenario)
        if scenario_dir:
            Path(scenario_dir, f"{sid}.json").write_text(
                json.dumps(scenario_to_json(scenario), indent=2) + "\n"
            )
        return {"id": sid}

    @app.get("/api/scenarios/{sid}")
    async def get_scenario(sid: str):
        scenario = _scenario_or_none(sid)
        if scenario is None:
            return _error(404, f"unknown scenario id {sid!r}")
        return {"id": sid, **scenario_to_json(scenario)}

    @app.get("/api/scenarios/{sid}/fair")
    async def get_fair(sid: str):
        scenario = _scenario_or_none(sid)
        if scenario is None:
            return _error(404, f"unknown scenario id {sid!r}")
        try:
            allocation, chain = store.fair(sid)
        except EnumerationCapExceeded as e:
            return _error(413, str(e))
        return {
            "allocation": allocation,
            "acceptStep": chain["spe"]["acceptStep"],
            "selfishnessBounds": [
                selfishness_bound(scenario, allocation, i)
                for i in range(scenario.num_humans)
            ],
            "chain": chain,
        }

    @app.get("/api/scenarios/{sid}/neighbors")
    async def get_neighbors(sid: str, base: str = ""):
        scenario = _scenario_or_none(sid)
        if scenario is None:
            return _error(404, f"unknown scenario id {sid!r}")
        if not base:
            base, _ = store.fair(sid)
        try:
            parse_allocation(base, scenario.num_humans, scenario.num_tasks)
        except ValueError as e:
            return _error(400, str(e))
        return {
            "base": base,
            "neighbors": hamming_neighbors(base, scenario.num_humans),
        }

    @app.post("/api/scenarios/{sid}/beliefs")
    async def post_beliefs(sid: str, request: Request):
        scenario = _scenario_or_none(sid)
        if scenario is None:
            return _error(404, f"unknown scenario id {sid!r}")
        obj = await _body(request)
        if obj is None:
            return _error(400, "request body must be a JSON object")
        try:
            if "noise" in obj:
                spec = obj["noise"]
                agent = int(obj["agent"])
                config = NoiseConfig(
                    mode=str(spec.get("mode", "PN")),
                    epsilon=float(spec.get("epsilon", 0.0)),
                    seed=int(spec.get("seed", 0)),
                )
                rng = np.random.default_rng(config.seed)
                belief = build_belief_model(
                    scenario,
                    agent,
                    frozenset(int(a) for a in obj.get("exact", ())),
                    config,
                    rng,
                )
            else:
                belief = belief_from_json(scenario, obj)
        except (ValueError, KeyError, TypeError) as e:
            return _error(400, f"invalid belief specification: {e}")
        store.put_belief(sid, belief)
        return belief_to_json(belief)

    @app.get("/api/scenarios/{sid}/optimal-counterfactual")
    async def get_optimal_counterfactual(sid: str, agent: int):
        scenario = _scenario_or_none(sid)
        if scenario is None:
            return _error(404, f"unknown scenario id {sid!r}")
        if not 0 <= agent < scenario.num_humans:
            return _error(400, f"agent must be a human index below {scenario.num_humans}")
        belief = store.get_belief(sid, agent)
        provenance = "stored"
        if belief is None:
            belief = exact_belief(scenario, agent)
            provenance = "exact-default"
        allocation, _ = store.fair(sid)
        cf = optimal_counterfactual(scenario, belief, allocation)
        return {
            "agent": agent,
            "proposal": allocation,
            "beliefProvenance": provenance,
            "counterfactual": cf.allocation if cf else None,
            "chain": chain_to_json(cf.chain) if cf else None,
        }

    @app.post("/api/scenarios/{sid}/counterfactual")
    async def post_counterfactual(sid: str, request: Request):
        scenario = _scenario_or_none(sid)
        if scenario is None:
            return _error(404, f"unknown scenario id {sid!r}")
        obj = await _body(request)
        if obj is None:
            return _error(400, "request body must be a JSON object")
        try:
            agent = int(obj["agent"])
            foil = str(obj["allocation"])
        except (KeyError, ValueError, TypeError):
            return _error(400, "body must carry 'agent' and 'allocation'")
        proposal, _ = store.fair(sid)
        try:
            verdict = validate_counterfactual(scenario, proposal, foil, agent)
        except ValueError as e:
            return _error(400, str(e))
        verdict_json = {
            "ok": verdict.ok,
            "violatedProperty": verdict.violated,
            "reason": verdict.reason,
            "hammingDistance": verdict.distance,
            "proposalCost": verdict.proposal_cost,
            "foilCost": verdict.foil_cost,
        }
        if verdict.violated == 1:
            return JSONResponse(
                {"verdict": verdict_json, "violatedProperty": 1},
                status_code=422,
            )
        if verdict.violated == 2:
            # The foil costs the questioner at least as much as the proposal,
            # so no refutation tree is needed: the comparison itself settles it.
            return {
                "verdict": verdict_json,
                "outcome": "acceptance",
                "explanation": None,
            }
        e = explain(scenario, proposal, foil, agent, enforce_guarantee=False)
        return {
            "verdict": verdict_json,
            "outcome": "refuted" if e.guarantee_holds else "foil-stands",
            "explanation": explanation_to_json(e),
        }

    @app.post("/api/experiments/noise")
    async def post_noise_experiment(request: Request):
        obj = await _body(request)
        if obj is None:
            return _error(400, "request body must be a JSON object")
        sid = obj.get("scenarioId")
        scenario = _scenario_or_none(sid)
        if scenario is None:
            return _error(404, f"unknown scenario id {sid!r}")
        try:
            result = run_noise_sweep(
                scenario,
                epsilons=list(obj["epsilons"]),
                mode=str(obj.get("mode", "PN")),
                trials=int(obj.get("trials", 10)),
                delta=obj.get("discount"),
                seed=int(obj.get("seed", 0)),
            )
        except EnumerationCapExceeded as e:
            return _error(413, str(e))
        except (ValueError, KeyError, TypeError) as e:
            return _error(400, f"invalid experiment config: {e}")
        return result.to_json()

    @app.post("/api/experiments/subset")
    async def post_subset_experiment(request: Request):
        obj = await _body(request)
        if obj is None:
            return _error(400, "request body must be a JSON object")
        sid = obj.get("scenarioId")
        scenario = _scenario_or_none(sid)
        if scenario is None:
            return _error(404, f"unknown scenario id {sid!r}")
        try:
            result = run_subset_sweep(
                scenario,
                subset_sizes=list(obj["subsetSizes"]),
                mus=list(obj["mus"]),
                trials=int(obj.get("trials", 5)),
                delta=obj.get("discount"),
                seed=int(obj.get("seed", 0)),
                normalizer=obj.get("normalizer"),
            )
        except EnumerationCapExceeded as e:
            return _error(413, str(e))
        except (ValueError, KeyError, TypeError) as e:
            return _error(400, f"invalid experiment config: {e}")
        return result.to_json()

    if static_dir is None:
        static_dir = os.environ.get("NEGALLOC_STATIC", "frontend/dist")
    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
