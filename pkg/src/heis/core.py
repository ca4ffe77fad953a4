"""The real Heisenberg group H_n(R).

Elements are triples (x, y, t) with x, y in R^n and t in R, multiplied by

    (x, y, t) (x', y', t') = (x + x', y + y', t + t' + x' . y).

The inverse forced by this law is (-x, -y, -t + x . y); the naive sign flip
(-x, -y, -t) multiplies to (0, 0, -x . y) and is *not* a left or right
inverse unless x . y = 0.  See tests for the regression pinning this down.

Also provided: the anisotropic dilations (x, y, t) -> (r x, r y, r^2 t),
which are group automorphisms, and reduction modulo the integer subgroup
H_n(Z) to a canonical representative in the half-open cube [0, 1)^(2n+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import DimensionError, ParameterError


def _as_vector(v: Sequence[float]) -> Tuple[float, ...]:
    out = tuple(float(c) for c in v)
    if not out:
        raise DimensionError("vectors must have length n >= 1")
    if not all(math.isfinite(c) for c in out):
        raise ParameterError("vector components must be finite")
    return out


def _dot(a: Sequence[float], b: Sequence[float]) -> float:
    return sum(ai * bi for ai, bi in zip(a, b))


@dataclass(frozen=True)
class RealElement:
    """A point (x, y, t) of H_n(R)."""

    x: Tuple[float, ...]
    y: Tuple[float, ...]
    t: float

    def __post_init__(self):
        object.__setattr__(self, "x", _as_vector(self.x))
        object.__setattr__(self, "y", _as_vector(self.y))
        object.__setattr__(self, "t", float(self.t))
        if len(self.x) != len(self.y):
            raise DimensionError(
                f"x has length {len(self.x)} but y has length {len(self.y)}"
            )
        if not math.isfinite(self.t):
            raise ParameterError("t must be finite")

    @property
    def n(self) -> int:
        return len(self.x)

    @staticmethod
    def identity(n: int) -> "RealElement":
        if n < 1:
            raise DimensionError("n must be >= 1")
        return RealElement((0.0,) * n, (0.0,) * n, 0.0)


def mul(g: RealElement, h: RealElement) -> RealElement:
    """Group product g h; the central slot picks up h.x . g.y."""
    if g.n != h.n:
        raise DimensionError(f"dimension mismatch: {g.n} vs {h.n}")
    x = tuple(a + b for a, b in zip(g.x, h.x))
    y = tuple(a + b for a, b in zip(g.y, h.y))
    t = g.t + h.t + _dot(h.x, g.y)
    return RealElement(x, y, t)


def inverse(g: RealElement) -> RealElement:
    """The two-sided inverse (-x, -y, -t + x . y)."""
    return RealElement(
        tuple(-c for c in g.x),
        tuple(-c for c in g.y),
        -g.t + _dot(g.x, g.y),
    )


def naive_inverse(g: RealElement) -> RealElement:
    """The plain sign flip (-x, -y, -t).

    Not an inverse when x . y != 0: mul(g, naive_inverse(g)) = (0, 0, -x . y).
    Kept as a regression witness.
    """
    return RealElement(tuple(-c for c in g.x), tuple(-c for c in g.y), -g.t)


@dataclass(frozen=True)
class Dilation:
    """The scaling delta_r: (x, y, t) -> (r x, r y, r^2 t), r > 0."""

    r: float

    def __post_init__(self):
        object.__setattr__(self, "r", float(self.r))
        if not (self.r > 0.0 and math.isfinite(self.r)):
            raise ParameterError(f"dilation parameter must be positive and finite, got {self.r}")


def dilate(d: Dilation, g: RealElement) -> RealElement:
    r = d.r
    return RealElement(
        tuple(r * c for c in g.x),
        tuple(r * c for c in g.y),
        r * r * g.t,
    )


@dataclass(frozen=True)
class CosetReduction:
    """Result of reducing g modulo H_n(Z): gamma . g = rep with rep in [0,1)^(2n+1).

    gamma is returned as its integer triple (k, l, m); rep is the canonical
    coset representative.
    """

    k: Tuple[int, ...]
    l: Tuple[int, ...]
    m: int
    rep: RealElement


def _frac_split(v: float) -> Tuple[int, float]:
    """Write v = -k + f with f in [0, 1); returns (k, f)."""
    k = -math.floor(v)
    f = v + k
    # floor can leave f == 1.0 for v just below an integer
    if f >= 1.0:
        k -= 1
        f -= 1.0
    if f < 0.0:
        k += 1
        f += 1.0
    return k, f


def coset_reduce(g: RealElement) -> CosetReduction:
    """Left-translate g by the unique gamma in H_n(Z) landing it in [0,1)^(2n+1).

    With gamma = (k, l, m), the product gamma . g is
    (k + x, l + y, m + t + x . l), so k and l are fixed coordinatewise by
    x and y, and m is then fixed by t + x . l.
    """
    k, rx = zip(*(_frac_split(c) for c in g.x))
    l, ry = zip(*(_frac_split(c) for c in g.y))
    m, rt = _frac_split(g.t + _dot(g.x, l))
    return CosetReduction(tuple(k), tuple(l), m, RealElement(rx, ry, rt))


def embed_integer(k: Sequence[int], l: Sequence[int], m: int) -> RealElement:
    """The inclusion H_n(Z) -> H_n(R) on an integer triple."""
    return RealElement(tuple(float(c) for c in k), tuple(float(c) for c in l), float(m))
