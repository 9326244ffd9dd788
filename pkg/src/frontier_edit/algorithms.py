"""Uniform ``(instance) -> (distance, counters)`` entry points."""

from __future__ import annotations

from typing import Callable

from .basic import basic_distance
from .core import ProblemInstance, WorkCounters, instance_from_texts
from .frontier import frontier_distance
from .ukkonen import ukkonen_distance


def _basic(inst: ProblemInstance) -> tuple[int, WorkCounters]:
    c = WorkCounters(iterations=inst.m, cell_touches=(inst.m + 1) * (inst.n + 1))
    return basic_distance(inst), c


def _ukkonen(inst: ProblemInstance) -> tuple[int, WorkCounters]:
    c = WorkCounters()
    return ukkonen_distance(inst, c), c


def _frontier(inst: ProblemInstance) -> tuple[int, WorkCounters]:
    return frontier_distance(inst)


ALGORITHMS: dict[str, Callable[[ProblemInstance], tuple[int, WorkCounters]]] = {
    "frontier": _frontier,
    "ukkonen": _ukkonen,
    "basic": _basic,
}


def edit_distance(x: str | bytes, y: str | bytes, algo: str = "frontier") -> int:
    return ALGORITHMS[algo](instance_from_texts(x, y))[0]
