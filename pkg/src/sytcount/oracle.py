"""Brute-force ground truth by backtracking over row-length vectors.

Shares no code with the vertex-function DP on purpose: the walk here is
over partitions themselves, adding one cell to a row at each step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ShapeTooLarge
from .partitions import Partition, as_partition

DEFAULT_CAP = 16


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def path(self) -> list[int]:
        """Row index (0-based) receiving label k, for k = 1..n."""
        where = {}
        for i, row in enumerate(self.rows):
            for x in row:
                where[x] = i
        return [where[k] for k in range(1, len(where) + 1)]


def is_standard(t: Tableau) -> bool:
    rows = t.rows
    if tuple(len(r) for r in rows if r) != t.shape.stripped:
        return False
    labels = sorted(x for row in rows for x in row)
    if labels != list(range(1, len(labels) + 1)):
        return False
    for row in rows:
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return False
    for i in range(len(rows) - 1):
        for j in range(len(rows[i + 1])):
            if rows[i][j] >= rows[i + 1][j]:
                return False
    return True


def _target(lam: Partition, cap: int) -> list[int]:
    if lam.size() > cap:
        raise ShapeTooLarge(f"|{lam}| = {lam.size()} exceeds oracle cap {cap}")
    return list(lam.stripped)


def _paths(target: list[int]) -> Iterator[list[int]]:
    """Every legal growth sequence from the empty shape to target."""
    h = len(target)
    cur = [0] * h
    path: list[int] = []
    n = sum(target)

    def rec():
        if len(path) == n:
            yield list(path)
            return
        for i in range(h):
            if cur[i] < target[i] and (i == 0 or cur[i - 1] > cur[i]):
                cur[i] += 1
                path.append(i)
                yield from rec()
                path.pop()
                cur[i] -= 1

    yield from rec()


def enumerate_tableaux(lam: Partition | Sequence[int], cap: int = DEFAULT_CAP) -> list[Tableau]:
    lam = as_partition(lam)
    target = _target(lam, cap)
    out = []
    for path in _paths(target):
        rows: list[list[int]] = [[] for _ in target]
        for label, i in enumerate(path, start=1):
            rows[i].append(label)
        out.append(Tableau(lam, tuple(tuple(r) for r in rows)))
    return out


def count_oracle(lam: Partition | Sequence[int], cap: int = DEFAULT_CAP) -> int:
    lam = as_partition(lam)
    target = _target(lam, cap)
    h = len(target)
    cur = [0] * h
    remaining = sum(target)

    def rec(remaining: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for i in range(h):
            if cur[i] < target[i] and (i == 0 or cur[i - 1] > cur[i]):
                cur[i] += 1
                total += rec(remaining - 1)
                cur[i] -= 1
        return total

    return rec(remaining)
