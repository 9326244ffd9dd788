"""Exact edit distance: dominance-frontier, banded and basic dynamic programs."""

from .algorithms import ALGORITHMS, edit_distance
from .basic import basic_distance
from .core import (
    Alphabet,
    CellCoord,
    ProblemInstance,
    Sequence,
    WorkCounters,
    build_alphabet,
    diagonal_of,
    instance_from_texts,
    make_instance,
)
from .frontier import frontier_distance
from .lookahead import LookaheadTable, build_lookahead, next_match
from .ukkonen import banded_distance_at_most, ukkonen_distance

__all__ = [
    "ALGORITHMS",
    "Alphabet",
    "CellCoord",
    "LookaheadTable",
    "ProblemInstance",
    "Sequence",
    "WorkCounters",
    "banded_distance_at_most",
    "basic_distance",
    "build_alphabet",
    "build_lookahead",
    "diagonal_of",
    "edit_distance",
    "frontier_distance",
    "instance_from_texts",
    "make_instance",
    "next_match",
    "ukkonen_distance",
]
