"""Graphviz DOT export of the partition lattice with path counts at each vertex."""

from __future__ import annotations

from .closedform import count_closed
from .partitions import Partition, shapes_in_box

# one arrowhead per unit vector, cycled if r exceeds the list
ARROWHEADS = ("normal", "diamond", "dot", "box", "inv", "tee")
MAX_R = 3
MAX_COORDINATE = 6


def node_id(shape) -> str:
    return "p_" + "_".join(str(x) for x in shape)


def node_label(shape) -> str:
    return f"({','.join(str(x) for x in shape)}) : {count_closed(Partition(shape)).value}"


def young_graph_dot(r: int, max_coordinate: int, enforce_caps: bool = True) -> str:
    if r < 1 or max_coordinate < 0:
        raise ValueError("r must be positive and max_coordinate non-negative")
    if enforce_caps and (r > MAX_R or max_coordinate > MAX_COORDINATE):
        raise ValueError(f"graph caps exceeded: r <= {MAX_R}, max_coordinate <= {MAX_COORDINATE}")
    shapes = shapes_in_box(r, max_coordinate)
    present = set(shapes)
    lines = [f'digraph "Lambda{r}" {{', "  rankdir=LR;", "  node [shape=box];"]
    for s in shapes:
        lines.append(f'  {node_id(s)} [label="{node_label(s)}"];')
    for s in shapes:
        for i in range(r):
            t = list(s)
            t[i] += 1
            t = tuple(t)
            if t in present:
                head = ARROWHEADS[i % len(ARROWHEADS)]
                lines.append(f'  {node_id(s)} -> {node_id(t)} [arrowhead={head}, label="d{i + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
