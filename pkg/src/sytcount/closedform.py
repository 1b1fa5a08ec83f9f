"""Closed-form counts: generalized multinomial times the Vandermonde of mu,
and the two-row binomial difference."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Sequence

from .errors import InternalNonInteger, NotAPartition
from .partitions import Partition, as_partition, mu

_fact_lock = threading.Lock()
_fact_table: list[int] = [1]


def factorial(k: int) -> int:
    """Exact k!, memoized by extending a shared table."""
    if k < 0:
        raise ValueError("factorial of a negative number")
    table = _fact_table
    if k < len(table):
        return table[k]
    with _fact_lock:
        while len(table) <= k:
            table.append(table[-1] * len(table))
        return table[k]


@dataclass(frozen=True)
class ExactCount:
    value: int
    method: str

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f"negative count {self.value} from {self.method}")

    def __int__(self):
        return self.value


def count_closed(lam: Partition | Sequence[int], r: int | None = None) -> ExactCount:
    """n!/(mu_1! ... mu_r!) * prod_{i<j} (mu_i - mu_j), mu = lambda + r*."""
    lam = as_partition(lam)
    if r is None:
        r = max(lam.height(), 1)
    m = mu(lam, r).entries
    num = factorial(lam.size())
    for i in range(r):
        for j in range(i + 1, r):
            num *= m[i] - m[j]
    den = 1
    for mk in m:
        den *= factorial(mk)
    q, rem = divmod(num, den)
    if rem:
        raise InternalNonInteger(f"{num} / {den} is not an integer for shape {lam}")
    return ExactCount(q, "closed")


def count_two_row(k: int, l: int) -> ExactCount:
    """f^(k,l) = C(k+l, k) - C(k+l, k+1)."""
    if l < 0 or k < l:
        raise NotAPartition(f"({k},{l}) is not a two-row partition")
    return ExactCount(math.comb(k + l, k) - math.comb(k + l, k + 1), "tworow")
