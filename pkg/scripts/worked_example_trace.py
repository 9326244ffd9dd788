"""Level-by-level frontier lists for the worked example GATCGCGACC / ACTTCTA."""

import sys

from frontier_edit import instance_from_texts
from frontier_edit.frontier import Half, frontier_distance


def show(state) -> None:
    print(f"score {state.D} iteration  (boundary row {state.boundary if state.boundary >= 0 else '-'})")
    for half in (Half.LEFT, Half.RIGHT):
        cells = " ".join(f"({c.i},{c.j})={c.value}" for c in state.list_cells(half))
        print(f"  {half.value:5} {cells}")


def main() -> None:
    a, b = (sys.argv[1], sys.argv[2]) if len(sys.argv) == 3 else ("GATCGCGACC", "ACTTCTA")
    s, counters = frontier_distance(instance_from_texts(a, b), debug=True, observer=show)
    print(f"distance {s}; {counters.as_dict()}")


if __name__ == "__main__":
    main()
