"""Sparse multivariate Laurent polynomials with exact integer coefficients."""

from __future__ import annotations

from itertools import permutations
from typing import Mapping, Sequence

from .errors import DimensionMismatch
from .partitions import Partition, as_partition


class LaurentPoly:
    """Map from integer exponent vectors (negatives allowed) to nonzero ints."""

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: Mapping[Sequence[int], int] | None = None):
        self.r = r
        clean: dict[tuple[int, ...], int] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != r:
                raise DimensionMismatch(f"exponent {exps} has length {len(exps)}, expected {r}")
            coeff = int(coeff)
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
        self.terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def constant(cls, r: int, c: int = 1) -> LaurentPoly:
        return cls(r, {(0,) * r: c})

    @classmethod
    def variable(cls, r: int, i: int) -> LaurentPoly:
        """x_{i+1} (0-based index i)."""
        e = [0] * r
        e[i] = 1
        return cls(r, {tuple(e): 1})

    def _check(self, other: LaurentPoly):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.r != self.r:
            raise DimensionMismatch(f"cannot combine r={self.r} with r={other.r}")
        return None

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.r, other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly(self.r, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.r, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.r, {k: c * other for k, c in self.terms.items()})
        return multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.r, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.r == other.r and self.terms == other.terms

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"LaurentPoly(r={self.r}, {render_text(self)!r})"

    def __str__(self):
        return render_text(self)

    def coefficient(self, m: Sequence[int]) -> int:
        return coefficient(self, m)

    def shift(self, m: Sequence[int]) -> LaurentPoly:
        """Multiply by the monomial x^m (division when m is negated)."""
        if len(m) != self.r:
            raise DimensionMismatch(f"shift {tuple(m)} has length {len(m)}, expected {self.r}")
        return LaurentPoly(self.r, {tuple(a + b for a, b in zip(k, m)): c for k, c in self.terms.items()})

    def swap(self, i: int, j: int) -> LaurentPoly:
        """Substitute x_i <-> x_j (0-based)."""
        out = {}
        for k, c in self.terms.items():
            k = list(k)
            k[i], k[j] = k[j], k[i]
            out[tuple(k)] = c
        return LaurentPoly(self.r, out)


def multiply(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if p.r != q.r:
        raise DimensionMismatch(f"cannot multiply r={p.r} by r={q.r}")
    out: dict[tuple[int, ...], int] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            k = tuple(a + b for a, b in zip(e1, e2))
            out[k] = out.get(k, 0) + c1 * c2
    return LaurentPoly(p.r, out)


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def vandermonde(r: int) -> LaurentPoly:
    """Alternating sum over permutations of x^(sigma(r*))."""
    if r < 1:
        raise ValueError("r must be positive")
    rstar = tuple(range(r - 1, -1, -1))
    terms = {}
    for perm in permutations(range(r)):
        terms[tuple(rstar[perm[k]] for k in range(r))] = permutation_sign(perm)
    return LaurentPoly(r, terms)


def step_poly(r: int) -> LaurentPoly:
    """t_r = x_1 + ... + x_r."""
    return LaurentPoly(r, {tuple(1 if k == i else 0 for k in range(r)): 1 for i in range(r)})


def walk_polys(n: int, r: int):
    """Yield t_r^k * V_r for k = 0..n, one multiplication by t_r per step."""
    p = vandermonde(r)
    t = step_poly(r)
    yield p
    for _ in range(n):
        p = multiply(p, t)
        yield p


def genfun(n: int, r: int) -> LaurentPoly:
    """F_{n,r} = t_r^n V_r / x^{r*}."""
    p = None
    for p in walk_polys(n, r):
        pass
    return p.shift(tuple(-(r - 1 - k) for k in range(r)))


def coefficient(p: LaurentPoly, m: Sequence[int]) -> int:
    if len(m) != p.r:
        raise DimensionMismatch(f"exponent {tuple(m)} has length {len(m)}, expected {p.r}")
    return p.terms.get(tuple(m), 0)


def count_via_genfun(lam: Partition | Sequence[int], r: int | None = None) -> int:
    lam = as_partition(lam)
    if r is None:
        r = max(lam.height(), 1)
    parts = lam.padded(r)
    return coefficient(genfun(lam.size(), r), parts)


# ---- rendering -------------------------------------------------------------

def grevlex_key(exps: Sequence[int]):
    """Sort key; ascending sort puts the grevlex-largest term first."""
    return (-sum(exps), tuple(e for e in reversed(exps)))


def sorted_terms(p: LaurentPoly) -> list[tuple[tuple[int, ...], int]]:
    return sorted(p.terms.items(), key=lambda kv: grevlex_key(kv[0]))


def _factor(i: int, e: int) -> str:
    return f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"


def render_monomial(exps: Sequence[int], coeff: int) -> str:
    """Unsigned rendering of |coeff| * x^exps, e.g. '2*x1^2*x2' or 'x2^5/x1'."""
    num = [_factor(i, e) for i, e in enumerate(exps) if e > 0]
    den = [_factor(i, -e) for i, e in enumerate(exps) if e < 0]
    c = abs(coeff)
    if num:
        head = "*".join(num) if c == 1 else f"{c}*" + "*".join(num)
    else:
        head = str(c)
    if not den:
        return head
    tail = den[0] if len(den) == 1 else "(" + "*".join(den) + ")"
    return f"{head}/{tail}"


def render_text(p: LaurentPoly) -> str:
    terms = sorted_terms(p)
    if not terms:
        return "0"
    pieces = []
    for idx, (exps, c) in enumerate(terms):
        body = render_monomial(exps, c)
        if idx == 0:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


def to_records(p: LaurentPoly) -> list[dict]:
    return [{"exponents": list(exps), "coefficient": str(c)} for exps, c in sorted_terms(p)]


def from_records(r: int, records) -> LaurentPoly:
    return LaurentPoly(r, {tuple(rec["exponents"]): int(rec["coefficient"]) for rec in records})
