"""Path counting by iterating the shift-sum operator on antisymmetric vertex functions.

A vertex function is stored only on its fundamental domain: points with
strictly decreasing, non-negative coordinates.  Every other point of Z^r
is reached by sorting (picking up the sign of the sorting permutation) or
is zero (negative or repeated coordinate).  Antisymmetry therefore holds
by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import BoxOverflow, DimensionMismatch
from .partitions import Partition, as_partition, mu


def sort_sign(x: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort x into strictly decreasing order.

    Returns (sign, sorted) where sign is the parity of the sorting
    permutation, or (0, ()) if x has a repeated entry.
    """
    xs = list(x)
    sign = 1
    # insertion sort: each adjacent swap flips the sign
    for i in range(1, len(xs)):
        j = i
        while j > 0 and xs[j - 1] < xs[j]:
            xs[j - 1], xs[j] = xs[j], xs[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and xs[j - 1] == xs[j]:
            return 0, ()
        if j + 1 < len(xs) and xs[j] == xs[j + 1]:
            return 0, ()
    return sign, tuple(xs)


def in_fundamental_domain(x: Sequence[int]) -> bool:
    return all(x[i] > x[i + 1] for i in range(len(x) - 1)) and (not x or x[-1] >= 0)


def _normalize_box(box, r: int) -> tuple[int, ...] | None:
    if box is None:
        return None
    if isinstance(box, int):
        return (box,) * r
    box = tuple(box)
    if len(box) != r:
        raise DimensionMismatch(f"box has {len(box)} axes, expected {r}")
    return box


@dataclass(frozen=True)
class VertexFunction:
    """Antisymmetric integer function on Z^r, stored on its fundamental domain.

    ``box`` is an inclusive per-axis upper bound on stored coordinates
    (None means unbounded).
    """

    r: int
    values: Mapping[tuple[int, ...], int]
    box: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "box", _normalize_box(self.box, self.r))
        clean = {}
        for key, val in self.values.items():
            key = tuple(key)
            if len(key) != self.r:
                raise DimensionMismatch(f"key {key} has length {len(key)}, expected {self.r}")
            if not in_fundamental_domain(key):
                raise ValueError(f"key {key} is outside the fundamental domain")
            if self.box is not None and any(k > b for k, b in zip(key, self.box)):
                raise BoxOverflow(f"key {key} exceeds box {self.box}")
            if val:
                clean[key] = int(val)
        object.__setattr__(self, "values", clean)

    @classmethod
    def initial(cls, r: int, box=None) -> VertexFunction:
        """v_0: the unit mass at r* = (r-1, ..., 0)."""
        return cls(r, {tuple(range(r - 1, -1, -1)): 1}, box)

    def __call__(self, x: Sequence[int]) -> int:
        return evaluate(self, x)

    def support(self):
        return self.values.keys()


def evaluate(v: VertexFunction, x: Sequence[int]) -> int:
    if len(x) != v.r:
        raise DimensionMismatch(f"point {tuple(x)} has {len(x)} coordinates, expected {v.r}")
    if any(c < 0 for c in x):
        return 0
    sign, key = sort_sign(x)
    if sign == 0:
        return 0
    return sign * v.values.get(key, 0)


def shift_sum_at(v: VertexFunction, x: Sequence[int]) -> int:
    """T_r[v](x) = sum_i v(x - delta_i), evaluated pointwise at any x in Z^r."""
    total = 0
    for i in range(v.r):
        y = list(x)
        y[i] -= 1
        total += evaluate(v, y)
    return total


def transition(v: VertexFunction, clip: bool = False) -> VertexFunction:
    """Apply T_r once.

    Points pushed past the box raise BoxOverflow, or are dropped when
    ``clip`` is set (safe whenever the dropped points cannot reach the
    target, since moves only increase coordinates).
    """
    r, box = v.r, v.box
    out: dict[tuple[int, ...], int] = {}
    for y, val in v.values.items():
        for i in range(r):
            # y strictly decreasing: y + delta_i is either strictly
            # decreasing or has y_i + 1 == y_{i-1} (repeated, contributes 0)
            if i > 0 and y[i] + 1 == y[i - 1]:
                continue
            x = y[:i] + (y[i] + 1,) + y[i + 1:]
            if box is not None and x[i] > box[i]:
                if clip:
                    continue
                raise BoxOverflow(f"point {x} leaves box {box}")
            out[x] = out.get(x, 0) + val
    return VertexFunction(r, out, box)


def iterates(r: int, n: int, box=None, clip: bool = False):
    """Yield v_0, v_1, ..., v_n."""
    v = VertexFunction.initial(r, box)
    yield v
    for _ in range(n):
        v = transition(v, clip=clip)
        yield v


@dataclass(frozen=True)
class LatticePathCount:
    shape: Partition
    count: int

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("path count cannot be negative")

    def __int__(self):
        return self.count


def count_paths(lam: Partition | Sequence[int], r: int | None = None) -> LatticePathCount:
    """f^lambda as v_n(lambda + r*), n = |lambda|.

    The box is the target mu itself, per axis: coordinates never decrease
    along a path, so nothing outside it can reach mu.
    """
    lam = as_partition(lam)
    if r is None:
        r = max(lam.height(), 1)
    target = mu(lam, r).entries
    v = None
    for v in iterates(r, lam.size(), box=target, clip=True):
        pass
    return LatticePathCount(lam, evaluate(v, target))


def recursion_check(lam: Partition | Sequence[int], r: int | None = None) -> bool:
    """f^lambda == sum_i f^(lambda - delta_i), illegal predecessors counting 0."""
    lam = as_partition(lam)
    if r is None:
        r = max(lam.height(), 1)
    parts = lam.padded(r)
    lhs = count_paths(lam, r).count
    rhs = 0
    for i in range(r):
        pred = list(parts)
        pred[i] -= 1
        if pred[i] < 0 or (i + 1 < r and pred[i] < pred[i + 1]):
            continue
        rhs += count_paths(Partition(tuple(pred)), r).count
    return lhs == rhs
