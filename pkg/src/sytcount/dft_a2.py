"""Height-3 counts through a discrete Fourier transform on the A2 lattice.

The slice of height-3 shapes is embedded in A2 by P(x, y, z) = <x-z+2, y-z+1>;
the three row moves become alpha, beta and -alpha-beta.  Walks confined to
the alcove u > v > 0, u < K are the alternating sum of free walks over the
affine Weyl group images of the start, which is periodic modulo the lattice
K*Z<(2,1), (1,2)>.  That quotient is isomorphic to Z_K x Z_3K, and on it the
free walk operator is diagonalized by the grid of frequencies
(w1, w2) in [0, K) x [0, 3K) with K = side + 1.

The pairing between a point <u, v> and a frequency (w1, w2) is

    <u, v> . (w1, w2) = v*w1/K + (u - 2v)*w2/(3K)

which is the unique pairing making the transition symbol below the symbol of
the three moves alpha, beta, -alpha-beta.  Under it, the forward transform of
the signed start mass equals the three-sine closed form exactly.

The shape lambda = (a, b, c) needs side >= a + 2: the walk reaches
u = a + 2 and must stay off the wall u = K.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import HeightExceedsThree, PrecisionBudgetExceeded, ToleranceExceeded
from .partitions import Partition, as_partition

DEFAULT_TOLERANCE = 0.25
DEFAULT_MAX_N = 24
MODES = ("derived", "verbatim")


class A2Point(NamedTuple):
    """The point u*alpha + v*beta, alpha = (1, 0), beta = (-1/2, sqrt(3)/2)."""

    u: int
    v: int

    def __add__(self, other):
        return A2Point(self.u + other.u, self.v + other.v)

    def __neg__(self):
        return A2Point(-self.u, -self.v)

    def cartesian(self) -> tuple[float, float]:
        return (self.u - 0.5 * self.v, self.v * math.sqrt(3) / 2)


ALPHA = A2Point(1, 0)
BETA = A2Point(0, 1)


def _linear(x: int, y: int, z: int) -> A2Point:
    return A2Point(x - z, y - z)


def _height3(lam) -> tuple[int, int, int]:
    lam = as_partition(lam)
    if lam.height() > 3:
        raise HeightExceedsThree(f"shape {lam} has height {lam.height()} > 3")
    return lam.padded(3)


def embed(lam: Partition | Sequence[int]) -> A2Point:
    """P(a, b, c) = <a - c + 2, b - c + 1>."""
    a, b, c = _height3(lam)
    return A2Point(a - c + 2, b - c + 1)


def move_images() -> tuple[A2Point, A2Point, A2Point]:
    """Images of delta_1, delta_2, delta_3 under the linear part of P."""
    return (_linear(1, 0, 0), _linear(0, 1, 0), _linear(0, 0, 1))


def start_images() -> list[tuple[A2Point, int]]:
    """The signed images of r* = (2, 1, 0) under S_3, pushed into A2.

    These are the nonzero values of the antisymmetric initial mass.
    """
    from itertools import permutations

    base = (2, 1, 0)
    out = []
    for perm in permutations(range(3)):
        inv = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
        x = tuple(base[p] for p in perm)
        out.append((_linear(*x), -1 if inv % 2 else 1))
    return out


@dataclass(frozen=True)
class DftGrid:
    """Complex values on frequencies (w1, w2), 0 <= w1 <= side, 0 <= w2 <= 3*side + 2."""

    side: int
    values: np.ndarray

    def __post_init__(self):
        k = self.side + 1
        if self.values.shape != (k, 3 * k):
            raise ValueError(f"grid shape {self.values.shape} != {(k, 3 * k)}")

    @property
    def period(self) -> int:
        return self.side + 1

    def __getitem__(self, idx):
        return self.values[idx]


def frequencies(side: int) -> tuple[np.ndarray, np.ndarray]:
    k = side + 1
    return np.meshgrid(np.arange(k), np.arange(3 * k), indexing="ij")


def torus_coords(p: A2Point, side: int) -> tuple[int, int]:
    """Rectangular coordinates of p in Z_K x Z_3K (K = side + 1)."""
    k = side + 1
    return (p.v % k, (p.u - 2 * p.v) % (3 * k))


def symbol_T(side: int) -> DftGrid:
    """Fourier symbol of R^alpha + R^beta + R^(-alpha-beta)."""
    k = side + 1
    w1, w2 = frequencies(side)
    vals = (
        np.exp(-2j * np.pi * w2 / (3 * k))
        + np.exp(-2j * np.pi * (w1 / k - 2 * w2 / (3 * k)))
        + np.exp(-2j * np.pi * (-w1 / k + w2 / (3 * k)))
    )
    return DftGrid(side, vals)


def initial_state_verbatim(side: int) -> DftGrid:
    """2i[-sin(2 pi w1/K) - sin(2 pi (w1 - w2)/K) + sin(2 pi (2 w1 - w2)/K)]."""
    k = side + 1
    w1, w2 = frequencies(side)
    vals = 2j * (
        -np.sin(2 * np.pi * w1 / k)
        - np.sin(2 * np.pi * (w1 - w2) / k)
        + np.sin(2 * np.pi * (2 * w1 - w2) / k)
    )
    return DftGrid(side, vals)


def signed_start_mass(side: int) -> np.ndarray:
    """Real-space antisymmetric initial mass on the K x 3K torus."""
    k = side + 1
    mass = np.zeros((k, 3 * k))
    for p, sign in start_images():
        mass[torus_coords(p, side)] += sign
    return mass


def initial_state_derived(side: int) -> DftGrid:
    """Forward DFT of the signed start mass."""
    return DftGrid(side, np.fft.fft2(signed_start_mass(side)))


def initial_state(side: int, mode: str = "derived") -> DftGrid:
    if mode == "derived":
        return initial_state_derived(side)
    if mode == "verbatim":
        return initial_state_verbatim(side)
    raise ValueError(f"unknown V0 mode {mode!r}; expected one of {MODES}")


def symbol_power(t: np.ndarray, n: int) -> np.ndarray:
    """t**n elementwise; exp(n log t) off the zero set."""
    out = np.empty_like(t)
    nz = np.abs(t) > 0
    out[nz] = np.exp(n * np.log(t[nz]))
    out[~nz] = 1.0 if n == 0 else 0.0
    return out


@dataclass(frozen=True)
class DftCount:
    raw: complex
    rounded: int
    residual: float
    side: int
    mode: str

    def is_valid(self, tolerance: float = DEFAULT_TOLERANCE) -> bool:
        return self.residual < tolerance

    def __int__(self):
        return self.rounded


def side_for(lam: Partition | Sequence[int]) -> int:
    """Smallest side whose alcove contains every walk to lam."""
    a, _, _ = _height3(lam)
    return a + 2


def count_dft(
    lam: Partition | Sequence[int],
    mode: str = "derived",
    tolerance: float = DEFAULT_TOLERANCE,
    max_n: int | None = DEFAULT_MAX_N,
    side: int | None = None,
    check: bool = True,
) -> DftCount:
    """f^(a,b,c) as (1/3K^2) sum_w e^{2 pi i <P(lam), w>} T(w)^n V0(w).

    ``check=False`` returns the result even when the residual is out of
    tolerance (for reporting).
    """
    a, b, c = _height3(lam)
    n = a + b + c
    if max_n is not None and n > max_n:
        raise PrecisionBudgetExceeded(f"n = {n} exceeds the double-precision budget {max_n}")
    if side is None:
        side = a + 2
    k = side + 1
    t = symbol_T(side).values
    v0 = initial_state(side, mode).values
    w1, w2 = frequencies(side)
    s, tt = torus_coords(embed((a, b, c)), side)
    phase = np.exp(2j * np.pi * (s * w1 / k + tt * w2 / (3 * k)))
    raw = complex((phase * symbol_power(t, n) * v0).sum() / (3 * k * k))
    rounded = int(round(raw.real))
    residual = abs(raw - rounded)
    result = DftCount(raw, rounded, residual, side, mode)
    if check and residual >= tolerance:
        raise ToleranceExceeded(
            f"DFT count for {(a, b, c)} is {raw}, residual {residual:.3g} >= {tolerance}"
        )
    return result
