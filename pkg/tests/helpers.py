"""Shared scenario builders for the test suite."""

from __future__ import annotations

import numpy as np

from negalloc import PerformanceModel, Scenario


def projects_2x5() -> Scenario:
    """The 2-human / 5-task running example with makespan performance."""
    return Scenario(
        num_humans=2,
        tasks=("t1", "t2", "t3", "t4", "t5"),
        costs=(
            (0.3, 0.5, 0.4, 0.077, 0.8),
            (0.4, 0.7, 0.077, 0.49, 0.13),
        ),
        performance=PerformanceModel("makespan"),
        discount=0.9,
    )


def random_scenario(
    seed: int,
    n: int | None = None,
    m: int | None = None,
    delta: float = 0.9,
) -> Scenario:
    """Uniform-[0,1] cost scenario; n in {2,3}, m in {2,3,4} unless given."""
    rng = np.random.default_rng(seed)
    if n is None:
        n = int(rng.integers(2, 4))
    if m is None:
        m = int(rng.integers(2, 5))
    costs = tuple(tuple(float(c) for c in rng.random(m)) for _ in range(n))
    return Scenario(
        num_humans=n,
        tasks=tuple(f"t{j + 1}" for j in range(m)),
        costs=costs,
        performance=PerformanceModel("makespan"),
        discount=delta,
    )
