"""Core domain types and allocation primitives.

A task-allocation problem assigns each of ``m`` indivisible tasks to one of
``n`` human agents. An allocation is written as a base-n string of length m:
position ``j`` holds the index of the human performing task ``j``. Agent
index ``n`` is reserved for the centralized allocator, whose cost is the
team-performance metric rather than a per-task sum.

Everything in this module is a pure function over immutable values.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

#: Allocations travel as plain base-n strings ("01001"); helpers below
#: validate and convert. Lexicographic order on the string equals
#: lexicographic order on the underlying assignment.
Allocation = str

DEFAULT_DISCOUNT = 0.9
DEFAULT_ENUMERATION_CAP = 10**6

MAKESPAN = "makespan"
TOTAL = "total"
TABLE = "table"
PERFORMANCE_MODELS = (MAKESPAN, TOTAL, TABLE)

#: Marker used in JSON files for a task an agent cannot perform at all.
INCAPABLE = "incapable"


class EnumerationCapExceeded(ValueError):
    """Raised when n^m exceeds the configured enumeration cap."""

    def __init__(self, num_allocations: int, cap: int):
        self.num_allocations = num_allocations
        self.cap = cap
        super().__init__(
            f"refusing to enumerate {num_allocations} allocations "
            f"(cap is {cap})"
        )


@dataclass(frozen=True)
class PerformanceModel:
    """Team-performance cost attached to a whole allocation.

    model:
        "makespan"  max of the humans' costs (time until the last one is done)
        "total"     sum of the humans' costs
        "table"     explicit per-allocation lookup; ``values`` holds n^m
                    non-negative entries in lexicographic allocation order
    """

    model: str = MAKESPAN
    values: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if self.model not in PERFORMANCE_MODELS:
            raise ValueError(
                f"unknown performance model {self.model!r}; "
                f"expected one of {PERFORMANCE_MODELS}"
            )
        if self.model == TABLE:
            if self.values is None:
                raise ValueError("table performance model requires values")
            if any(v < 0 for v in self.values):
                raise ValueError("performance table entries must be >= 0")
        elif self.values is not None:
            raise ValueError(f"{self.model} performance model takes no values")


@dataclass(frozen=True)
class Scenario:
    """The allocation problem: agents, tasks, costs, performance, discounting.

    costs[i][j] is human i's true cost for task j; non-negative, with
    ``math.inf`` allowed as an explicit incapable sentinel. ``discount`` is
    the per-negotiation-step cost inflation base, in (0, 1].
    """

    num_humans: int
    tasks: tuple[str, ...]
    costs: tuple[tuple[float, ...], ...]
    performance: PerformanceModel = PerformanceModel()
    discount: float = DEFAULT_DISCOUNT

    def __post_init__(self) -> None:
        n, m = self.num_humans, len(self.tasks)
        if n < 1:
            raise ValueError("need at least one human agent")
        if m < 1:
            raise ValueError("need at least one task")
        if len(self.costs) != n:
            raise ValueError(f"expected {n} cost rows, got {len(self.costs)}")
        for i, row in enumerate(self.costs):
            if len(row) != m:
                raise ValueError(f"cost row {i} has {len(row)} entries, expected {m}")
            for j, c in enumerate(row):
                if math.isnan(c) or c < 0:
                    raise ValueError(f"cost[{i}][{j}] = {c!r} must be >= 0")
        if not 0 < self.discount <= 1:
            raise ValueError(f"discount {self.discount} outside (0, 1]")
        if self.performance.model == TABLE:
            expected = n ** m
            got = len(self.performance.values or ())
            if got != expected:
                raise ValueError(
                    f"performance table has {got} entries, expected n^m = {expected}"
                )

    @property
    def num_tasks(self) -> int:
        return len(self.tasks)

    @property
    def allocator(self) -> int:
        """Agent index of the centralized allocator (one past the humans)."""
        return self.num_humans

    @property
    def agents(self) -> range:
        """All agent indices: humans 0..n-1 plus the allocator n."""
        return range(self.num_humans + 1)


def parse_allocation(text: str, n: int, m: int) -> Allocation:
    """Validate ``text`` as a base-n allocation string of length m.

    Returns the canonical string form. Errors name the offending position.
    """
    if len(text) != m:
        raise ValueError(
            f"allocation {text!r} has length {len(text)}, expected {m}"
        )
    if n > 10:
        raise ValueError("string encoding supports at most 10 humans")
    for pos, ch in enumerate(text):
        if not ch.isdigit():
            raise ValueError(f"allocation {text!r}: non-digit at position {pos}")
        if int(ch) >= n:
            raise ValueError(
                f"allocation {text!r}: digit {ch} >= agent count {n} at position {pos}"
            )
    return text


def format_allocation(assignment: Sequence[int], n: int) -> Allocation:
    """Inverse of :func:`assignment_of`: digits from agent indices."""
    if n > 10:
        raise ValueError("string encoding supports at most 10 humans")
    out = []
    for pos, agent in enumerate(assignment):
        if not 0 <= agent < n:
            raise ValueError(f"agent index {agent} at position {pos} outside [0, {n})")
        out.append(str(agent))
    return "".join(out)


def assignment_of(o: Allocation) -> tuple[int, ...]:
    return tuple(int(ch) for ch in o)


def tasks_of(o: Allocation, agent: int) -> tuple[int, ...]:
    """Task positions assigned to ``agent`` under allocation ``o``."""
    return tuple(j for j, ch in enumerate(o) if int(ch) == agent)


def hamming_distance(a: Allocation, b: Allocation) -> int:
    if len(a) != len(b):
        raise ValueError("allocations differ in length")
    return sum(1 for x, y in zip(a, b) if x != y)


def agent_cost(scenario: Scenario, o: Allocation, agent: int) -> float:
    """Cost borne by ``agent`` under ``o``.

    Humans pay the sum of their assigned tasks' costs (0 when assigned
    nothing); the allocator pays the team-performance cost.
    """
    if agent == scenario.allocator:
        return performance_cost(scenario, o)
    if not 0 <= agent < scenario.num_humans:
        raise ValueError(
            f"agent index {agent} outside [0, {scenario.allocator}]"
        )
    row = scenario.costs[agent]
    return sum(row[j] for j in tasks_of(o, agent))


def performance_cost(scenario: Scenario, o: Allocation) -> float:
    """Team-performance cost of ``o`` under the scenario's model."""
    perf = scenario.performance
    if perf.model == TABLE:
        assert perf.values is not None
        return perf.values[allocation_index(o, scenario.num_humans)]
    human_costs = [
        agent_cost(scenario, o, i) for i in range(scenario.num_humans)
    ]
    if perf.model == MAKESPAN:
        return max(human_costs)
    return sum(human_costs)


def allocation_index(o: Allocation, n: int) -> int:
    """Rank of ``o`` in lexicographic enumeration order (base-n value)."""
    idx = 0
    for ch in o:
        idx = idx * n + int(ch)
    return idx


def enumerate_allocations(
    n: int, m: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[Allocation]:
    """All n^m allocations in lexicographic order.

    Refuses (naming n^m) when the count exceeds ``cap``.
    """
    count = n ** m
    if count > cap:
        raise EnumerationCapExceeded(count, cap)
    if n == 1:
        return ["0" * m]
    out: list[Allocation] = []
    digits = [0] * m
    for _ in range(count):
        out.append("".join(str(d) for d in digits))
        for pos in range(m - 1, -1, -1):
            digits[pos] += 1
            if digits[pos] < n:
                break
            digits[pos] = 0
    return out


def hamming_neighbors(o: Allocation, n: int) -> list[Allocation]:
    """All m*(n-1) allocations one edit away from ``o``, lexicographic.

    ``o`` itself is never included.
    """
    parse_allocation(o, n, len(o))
    out = []
    for pos, ch in enumerate(o):
        for agent in range(n):
            if agent != int(ch):
                out.append(o[:pos] + str(agent) + o[pos + 1:])
    out.sort()
    return out


def discounted_cost(cost: float, step: int, discount: float) -> float:
    """Effective cost of settling at negotiation ``step``.

    Delay inflates cost multiplicatively: cost / discount**step. Identity at
    step 0 or discount 1.
    """
    if not 0 < discount <= 1:
        raise ValueError(f"discount {discount} outside (0, 1]")
    if step < 0:
        raise ValueError("step must be >= 0")
    if step == 0 or discount == 1.0:
        return cost
    return cost / discount ** step


# -- scenario JSON -----------------------------------------------------------
#
# {"agents": 2, "tasks": ["t1", ...], "costs": [[...], [...]],
#  "performance": {"model": "makespan" | "total" | "table", "values": [...]},
#  "discount": 0.9}
#
# Cost entries may be the string "incapable", stored as +inf.


def _cost_from_json(v: object) -> float:
    if isinstance(v, str):
        if v == INCAPABLE:
            return math.inf
        raise ValueError(f"unexpected cost entry {v!r}")
    if isinstance(v, (int, float)):
        return float(v)
    raise ValueError(f"unexpected cost entry {v!r}")


def _cost_to_json(c: float) -> object:
    return INCAPABLE if math.isinf(c) else c


def scenario_from_json(obj: dict) -> Scenario:
    try:
        n = int(obj["agents"])
        tasks = tuple(str(t) for t in obj["tasks"])
        costs = tuple(
            tuple(_cost_from_json(v) for v in row) for row in obj["costs"]
        )
    except KeyError as e:
        raise ValueError(f"scenario JSON missing field {e.args[0]!r}") from None
    perf_obj = obj.get("performance", {"model": MAKESPAN})
    model = perf_obj.get("model", MAKESPAN)
    if model == "totalTime":  # accepted alias
        model = TOTAL
    values = perf_obj.get("values")
    performance = PerformanceModel(
        model=model,
        values=tuple(float(v) for v in values) if values is not None else None,
    )
    discount = float(obj.get("discount", DEFAULT_DISCOUNT))
    return Scenario(
        num_humans=n,
        tasks=tasks,
        costs=costs,
        performance=performance,
        discount=discount,
    )


def scenario_to_json(scenario: Scenario) -> dict:
    perf: dict[str, object] = {"model": scenario.performance.model}
    if scenario.performance.values is not None:
        perf["values"] = list(scenario.performance.values)
    return {
        "agents": scenario.num_humans,
        "tasks": list(scenario.tasks),
        "costs": [[_cost_to_json(c) for c in row] for row in scenario.costs],
        "performance": perf,
        "discount": scenario.discount,
    }


def load_scenario(path: str | Path) -> Scenario:
    path = Path(path)
    try:
        obj = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise ValueError(f"{path}: not valid JSON ({e})") from None
    if not isinstance(obj, dict):
        raise ValueError(f"{path}: scenario JSON must be an object")
    try:
        return scenario_from_json(obj)
    except ValueError as e:
        raise ValueError(f"{path}: {e}") from None


def dump_scenario(scenario: Scenario, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(scenario_to_json(scenario), indent=2) + "\n"
    )


def scale_costs(scenario: Scenario, factor: float) -> Scenario:
    """Scenario with every cost (human rows and table) multiplied by factor."""
    if factor <= 0:
        raise ValueError("scale factor must be > 0")
    costs = tuple(tuple(c * factor for c in row) for row in scenario.costs)
    perf = scenario.performance
    if perf.model == TABLE:
        assert perf.values is not None
        perf = PerformanceModel(TABLE, tuple(v * factor for v in perf.values))
    return replace(scenario, costs=costs, performance=perf)
