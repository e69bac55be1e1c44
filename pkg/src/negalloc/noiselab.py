"""Belief-noise injection and the explanation-length experiment sweeps.

Noisy cost vectors live in an L2 ball around the true vector whose radius is
the noise magnitude times the largest true entry, clipped to non-negative
values. Three flavors: unconstrained ("random"), optimistic ("ON",
componentwise overestimates) and pessimistic ("PN", componentwise
underestimates). The sweeps measure how noisy beliefs change the length of
the negotiation-tree explanations a team ends up needing.

All randomness flows from one master seed through documented spawn keys, so
trials are reproducible and independently parallelizable:
per-sample stream = SeedSequence(seed, spawn_key=(sweep indices..., agent)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .core import (
    Allocation,
    DEFAULT_ENUMERATION_CAP,
    PerformanceModel,
    Scenario,
    TABLE,
)
from .beliefs import BeliefModel, make_belief_model, optimal_counterfactual
from .explanation import explain
from .negotiation import fair_allocation

RANDOM = "random"
ON = "ON"
PN = "PN"
NOISE_MODES = (RANDOM, ON, PN)

DEFAULT_ATTEMPTS = 1000


@dataclass(frozen=True)
class NoiseConfig:
    """Noise flavor and magnitude for one experiment arm."""

    mode: str
    epsilon: float
    seed: int = 0
    trials: int = 1

    def __post_init__(self) -> None:
        if self.mode not in NOISE_MODES:
            raise ValueError(f"unknown noise mode {self.mode!r}; expected {NOISE_MODES}")
        if self.epsilon < 0:
            raise ValueError("epsilon must be >= 0")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


def sample_noisy_costs(
    true_vec: Sequence[float],
    epsilon: float,
    mode: str,
    rng: np.random.Generator,
    max_attempts: int = DEFAULT_ATTEMPTS,
) -> np.ndarray:
    """Draw one noisy version of ``true_vec``.

    The sample sits within L2 distance epsilon * max(true_vec) of the true
    vector and is componentwise >= 0; ON samples additionally dominate the
    true vector, PN samples are dominated by it. Constrained modes rejection-
    sample inside the ball up to ``max_attempts`` and then project the last
    draw onto the constraint box (projection onto a convex set containing
    the center never leaves the ball). Infinite entries (incapable markers)
    pass through untouched.
    """
    if mode not in NOISE_MODES:
        raise ValueError(f"unknown noise mode {mode!r}; expected {NOISE_MODES}")
    if epsilon < 0:
        raise ValueError("epsilon must be >= 0")
    vec = np.asarray(true_vec, dtype=float)
    out = vec.copy()
    mask = np.isfinite(vec)
    base = vec[mask]
    d = base.size
    if d == 0:
        return out
    radius = epsilon * float(base.max())
    if radius == 0.0:
        return out

    def draw() -> np.ndarray:
        direction = rng.standard_normal(d)
        norm = float(np.linalg.norm(direction))
        while norm == 0.0:
            direction = rng.standard_normal(d)
            norm = float(np.linalg.norm(direction))
        magnitude = radius * rng.random() ** (1.0 / d)
        return base + direction / norm * magnitude

    if mode == RANDOM:
        point = np.maximum(draw(), 0.0)
    elif mode == ON:
        point = draw()
        for _ in range(max_attempts - 1):
            if (point >= base).all():
                break
            point = draw()
        point = np.maximum(point, base)
    else:  # PN
        point = draw()
        for _ in range(max_attempts - 1):
            if (point >= 0.0).all() and (point <= base).all():
                break
            point = draw()
        point = np.clip(point, 0.0, base)
    out[mask] = point
    return out


def build_belief_model(
    scenario: Scenario,
    owner: int,
    exact_set: frozenset[int] | set[int],
    noise: NoiseConfig,
    rng: np.random.Generator,
) -> BeliefModel:
    """Materialize one human's noisy view of the problem.

    Rows of agents in ``exact_set`` (and always the owner's own) are copied
    verbatim; every other human row is drawn via :func:`sample_noisy_costs`,
    in agent order. A table performance model gets its own sampled value
    table unless the allocator index is in ``exact_set``; derived performance
    kinds follow mechanically from the believed rows.
    """
    exact = frozenset(exact_set) | {owner}
    rows = []
    for h in range(scenario.num_humans):
        if h in exact:
            rows.append(scenario.costs[h])
        else:
            rows.append(
                tuple(
                    float(c)
                    for c in sample_noisy_costs(
                        scenario.costs[h], noise.epsilon, noise.mode, rng
                    )
                )
            )
    performance = None
    if scenario.performance.model == TABLE and scenario.allocator not in exact:
        assert scenario.performance.values is not None
        sampled = sample_noisy_costs(
            scenario.performance.values, noise.epsilon, noise.mode, rng
        )
        performance = PerformanceModel(TABLE, tuple(float(v) for v in sampled))
    elif scenario.performance.model == TABLE:
        performance = scenario.performance
    return make_belief_model(
        scenario,
        owner,
        believed_costs=tuple(rows),
        believed_performance=performance,
        exact=exact,
    )


# -- sweep results -------------------------------------------------------------

NOISE_SWEEP = "noise"
SUBSET_SWEEP = "subset"


@dataclass(frozen=True)
class NoiseRow:
    epsilon: float
    mode: str
    trial: int
    agent: int
    expl_length: int


@dataclass(frozen=True)
class NoiseAggregate:
    epsilon: float
    mean: float
    stddev: float


@dataclass(frozen=True)
class SubsetRow:
    subset_k: int
    mu: float
    trial: int
    agent: int
    expl_length: int
    rel_length: float


@dataclass(frozen=True)
class SubsetAggregate:
    subset_k: int
    mu: float
    mean: float
    stddev: float


@dataclass(frozen=True)
class SweepResult:
    kind: str
    rows: tuple
    aggregates: tuple
    normalizer: float | None = None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "normalizer": self.normalizer,
            "rows": [_as_dict(r) for r in self.rows],
            "aggregates": [_as_dict(a) for a in self.aggregates],
        }


def _as_dict(record) -> dict:
    return {k: getattr(record, k) for k in record.__dataclass_fields__}


def _stream(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=tuple(key)))


def _explanation_length_for(
    scenario: Scenario,
    fair: Allocation,
    belief: BeliefModel,
    delta: float,
    cap: int,
) -> int:
    # The lab measures the replay tree shown to the human whether or not it
    # refutes the foil, so guarantee enforcement stays off here.
    cf = optimal_counterfactual(scenario, belief, fair, delta)
    if cf is None:
        return 0
    e = explain(
        scenario, fair, cf.allocation, belief.owner, delta, cap,
        enforce_guarantee=False,
    )
    return e.length


def run_noise_sweep(
    scenario: Scenario,
    epsilons: Sequence[float],
    mode: str,
    trials: int,
    delta: float | None = None,
    seed: int = 0,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> SweepResult:
    """Explanation length as a function of the noise radius.

    Per (epsilon, trial): every human gets a fresh belief (only its own row
    exact), raises its optimal counterfactual against the fair allocation,
    and the resulting explanation length is recorded (0 when no
    counterfactual exists). The fair allocation itself uses true costs once;
    noise never touches the allocator.
    """
    if delta is None:
        delta = scenario.discount
    fair, _chain = fair_allocation(scenario, cap)
    rows: list[NoiseRow] = []
    for ei, eps in enumerate(epsilons):
        config = NoiseConfig(mode=mode, epsilon=eps, seed=seed, trials=trials)
        for trial in range(trials):
            for agent in range(scenario.num_humans):
                rng = _stream(seed, ei, trial, agent)
                belief = build_belief_model(scenario, agent, frozenset(), config, rng)
                length = _explanation_length_for(scenario, fair, belief, delta, cap)
                rows.append(
                    NoiseRow(
                        epsilon=eps,
                        mode=mode,
                        trial=trial,
                        agent=agent,
                        expl_length=length,
                    )
                )
    aggregates = []
    for eps in epsilons:
        lengths = [r.expl_length for r in rows if r.epsilon == eps]
        aggregates.append(
            NoiseAggregate(
                epsilon=eps,
                mean=float(np.mean(lengths)),
                stddev=float(np.std(lengths)),
            )
        )
    return SweepResult(kind=NOISE_SWEEP, rows=tuple(rows), aggregates=tuple(aggregates))


def run_subset_sweep(
    scenario: Scenario,
    subset_sizes: Sequence[int],
    mus: Sequence[float],
    trials: int,
    delta: float | None = None,
    seed: int = 0,
    normalizer: float | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> SweepResult:
    """Explanation length as exact knowledge spreads over more teammates.

    For each subset size k and pessimistic-noise radius mu: each human knows
    a uniformly drawn k-subset of its teammates exactly and sees the rest
    (and any table performance model) through PN noise. Lengths are reported
    relative to ``normalizer`` (defaults to the allocation count n^m).
    """
    if delta is None:
        delta = scenario.discount
    n = scenario.num_humans
    for k in subset_sizes:
        if not 0 <= k <= n - 1:
            raise ValueError(f"subset size {k} outside [0, {n - 1}]")
    if normalizer is None:
        normalizer = float(n ** scenario.num_tasks)
    fair, _chain = fair_allocation(scenario, cap)
    rows: list[SubsetRow] = []
    for ki, k in enumerate(subset_sizes):
        for mi, mu in enumerate(mus):
            config = NoiseConfig(mode=PN, epsilon=mu, seed=seed, trials=trials)
            for trial in range(trials):
                for agent in range(n):
                    rng = _stream(seed, ki, mi, trial, agent)
                    teammates = [h for h in range(n) if h != agent]
                    known = rng.choice(teammates, size=k, replace=False)
                    belief = build_belief_model(
                        scenario, agent, frozenset(int(a) for a in known), config, rng
                    )
                    length = _explanation_length_for(scenario, fair, belief, delta, cap)
                    rows.append(
                        SubsetRow(
                            subset_k=k,
                            mu=mu,
                            trial=trial,
                            agent=agent,
                            expl_length=length,
                            rel_length=length / normalizer,
                        )
                    )
    aggregates = []
    for k in subset_sizes:
        for mu in mus:
            rel = [r.rel_length for r in rows if r.subset_k == k and r.mu == mu]
            aggregates.append(
                SubsetAggregate(
                    subset_k=k,
                    mu=mu,
                    mean=float(np.mean(rel)),
                    stddev=float(np.std(rel)),
                )
            )
    return SweepResult(
        kind=SUBSET_SWEEP,
        rows=tuple(rows),
        aggregates=tuple(aggregates),
        normalizer=normalizer,
    )


# -- CSV export ----------------------------------------------------------------


def _csv_num(v) -> str:
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return str(v)


def export_csv(result: SweepResult, path: str | Path) -> Path:
    """Write rows plus an aggregate section; byte-identical on re-export."""
    if not result.rows:
        raise ValueError("refusing to export an empty sweep result")
    lines: list[str] = []
    if result.kind == NOISE_SWEEP:
        lines.append("epsilon,mode,trial,agent,expl_length")
        for r in result.rows:
            lines.append(
                f"{_csv_num(r.epsilon)},{r.mode},{r.trial},{r.agent},{r.expl_length}"
            )
        lines.append("epsilon,mean,stddev")
        for a in result.aggregates:
            lines.append(f"{_csv_num(a.epsilon)},{_csv_num(a.mean)},{_csv_num(a.stddev)}")
    elif result.kind == SUBSET_SWEEP:
        lines.append("subset_k,mu,trial,agent,expl_length,rel_length")
        for r in result.rows:
            lines.append(
                f"{r.subset_k},{_csv_num(r.mu)},{r.trial},{r.agent},"
                f"{r.expl_length},{_csv_num(r.rel_length)}"
            )
        lines.append("subset_k,mu,mean,stddev")
        for a in result.aggregates:
            lines.append(
                f"{a.subset_k},{_csv_num(a.mu)},{_csv_num(a.mean)},{_csv_num(a.stddev)}"
            )
    else:
        raise ValueError(f"unknown sweep kind {result.kind!r}")
    path = Path(path)
    path.write_text("\n".join(lines) + "\n")
    return path
