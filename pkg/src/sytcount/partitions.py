"""Partitions (shapes), the staircase shift and slice generation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import HeightExceedsR, NotAPartition


@dataclass(frozen=True, eq=False)
class Partition:
    """A weakly decreasing tuple of non-negative integers.

    Trailing zeros are kept as given, but two partitions compare equal
    (and hash equal) when they differ only by trailing zeros.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        for p in self.parts:
            if p < 0:
                raise NotAPartition(f"negative part in {self.parts}")
        for i in range(len(self.parts) - 1):
            if self.parts[i] < self.parts[i + 1]:
                raise NotAPartition(f"{self.parts} is not weakly decreasing")

    @property
    def stripped(self) -> tuple[int, ...]:
        parts = self.parts
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        return parts[:end]

    def size(self) -> int:
        return sum(self.parts)

    def height(self) -> int:
        return len(self.stripped)

    def padded(self, r: int) -> tuple[int, ...]:
        """Parts as an r-tuple, zero-filled; raises if height > r."""
        if self.height() > r:
            raise HeightExceedsR(f"shape {self} has height {self.height()} > r={r}")
        s = self.stripped
        return s + (0,) * (r - len(s))

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.stripped == other.stripped
        return NotImplemented

    def __hash__(self):
        return hash(self.stripped)

    def __lt__(self, other: Partition) -> bool:
        return self.stripped < other.stripped

    def __len__(self):
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return ",".join(str(p) for p in self.parts) if self.parts else "0"

    def __repr__(self):
        return f"Partition({self.parts})"


def validate(parts: Iterable[int]) -> Partition:
    return Partition(tuple(parts))


def parse(text: str) -> Partition:
    """Parse the comma-separated form used on the command line ("5,2,1")."""
    text = text.strip()
    if not text:
        return Partition(())
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise NotAPartition(f"cannot parse shape {text!r}") from exc
    return Partition(tuple(parts))


@dataclass(frozen=True)
class StaircaseVector:
    entries: tuple[int, ...]

    @classmethod
    def rstar(cls, r: int) -> StaircaseVector:
        """The reversed staircase (r-1, ..., 1, 0)."""
        if r < 1:
            raise ValueError("r must be positive")
        return cls(tuple(range(r - 1, -1, -1)))

    def is_shifted_lattice_point(self) -> bool:
        """Strictly decreasing with a non-negative last entry."""
        e = self.entries
        return all(e[i] > e[i + 1] for i in range(len(e) - 1)) and (not e or e[-1] >= 0)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def mu(lam: Partition, r: int) -> StaircaseVector:
    """lambda + r*, i.e. (lam_1 + r - 1, lam_2 + r - 2, ..., lam_r)."""
    if r < 1:
        raise ValueError("r must be positive")
    parts = lam.padded(r)
    return StaircaseVector(tuple(p + r - 1 - k for k, p in enumerate(parts)))


def partitions_of(n: int, max_height: int) -> list[Partition]:
    """All partitions of n with at most max_height parts, reverse-lex order."""
    if n < 0:
        return []
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        if len(prefix) == max_height:
            return
        for p in range(min(remaining, cap), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def shapes_in_box(r: int, max_part: int) -> list[tuple[int, ...]]:
    """All r-tuples that are partitions with every part <= max_part."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], cap: int):
        if len(prefix) == r:
            out.append(tuple(prefix))
            return
        for p in range(cap, -1, -1):
            prefix.append(p)
            rec(prefix, p)
            prefix.pop()

    rec([], max_part)
    out.sort(key=lambda t: (sum(t), tuple(-x for x in t)))
    return out


def as_partition(shape: Partition | Sequence[int]) -> Partition:
    return shape if isinstance(shape, Partition) else Partition(tuple(shape))
