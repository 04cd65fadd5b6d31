from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from enum import Enum

from .graph import Edge, Graph
from .settings import settings
from .utils import sorted_edges

__all__ = ["Status", "Event", "ReductionTrace", "Instance"]

logger = logging.getLogger(__name__)


class Status(Enum):
    REDUCED = "reduced"
    REJECTED_NO_INSTANCE = "rejected_no_instance"
    REJECTED_BUDGET = "rejected_budget"

    @property
    def rejected(self) -> bool:
        return self is not Status.REDUCED


@dataclass
class Event:
    """One rule firing."""

    rule: int | str
    witness: dict
    removed: list[int] = field(default_factory=list)
    forced: list[Edge] = field(default_factory=list)
    k_after: int = 0

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "witness": self.witness,
            "removed": sorted(self.removed),
            "forced": [list(e) for e in self.forced],
            "k_after": self.k_after,
        }


@dataclass
class ReductionTrace:
    """Everything a kernelization run did, in order."""

    problem: str
    n: int
    m: int
    k: int
    events: list[Event] = field(default_factory=list)
    status: Status = Status.REDUCED
    final: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "problem": self.problem,
            "initial": {"n": self.n, "m": self.m, "k": self.k},
            "events": [e.to_json() for e in self.events],
            "final": {"status": self.status.value, **self.final},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=settings.trace_indent)

    def write(self, path):
        with open(path, "w") as f:
            f.write(self.dumps() + "\n")

    @property
    def removed(self) -> list[int]:
        return sorted(v for e in self.events for v in e.removed)

    @property
    def forced(self) -> list[Edge]:
        return [f for e in self.events for f in e.forced]


class Instance:
    """
    The working state of a kernelization: graph, budget, forced edges and trace.

    The rules mutate it in place. Vertex ids stay the ones of the input graph.
    """

    def __init__(self, graph: Graph, k: int, problem: str):
        if k < 0:
            raise ValueError(f"the budget must be nonnegative, got {k}")
        self.graph = graph.copy()
        self.k = k
        self.k_initial = k
        self.forced: list[Edge] = []
        self.trace = ReductionTrace(problem, graph.n, graph.m, k)

    @property
    def status(self) -> Status:
        return self.trace.status

    @property
    def done(self) -> bool:
        return self.status.rejected

    def reject(self, status: Status, rule, witness: dict):
        logger.info("rule %s rejects the instance (%s)", rule, status.value)
        self.trace.status = status
        self.trace.events.append(Event(rule, witness, k_after=self.k))

    def remove(self, rule, witness: dict, vertices):
        vertices = sorted(vertices)
        logger.info("rule %s removes %d vertices, k=%d", rule, len(vertices), self.k)
        self.graph.remove_vertices(vertices)
        self.trace.events.append(Event(rule, witness, removed=vertices, k_after=self.k))

    def force(self, rule, witness: dict, pair: Edge):
        assert not self.graph.has_edge(*pair), f"forced pair {pair} is already an edge"
        assert self.k > 0
        self.graph.add_edges([pair])
        self.forced.append(pair)
        self.k -= 1
        logger.info("rule %s forces %s, k=%d", rule, pair, self.k)
        self.trace.events.append(Event(rule, witness, forced=[pair], k_after=self.k))

    def finish(self, **extra):
        """Fill the final section of the trace."""

        self.trace.final = {
            "n": self.graph.n,
            "m": self.graph.m,
            "k": self.k,
            "forced": [list(e) for e in sorted_edges(self.forced)],
            "labels": self.graph.vertices(),
            **extra,
        }
