"""The complex Heisenberg group and its affine action on the upper half-space.

Elements are pairs (z, t) with z in C^n and t real, multiplied by

    (z, t) (z', t') = (z + z', t + t' + 2 Im sum_j z_j conj(z'_j)).

Here the cocycle is antisymmetric, so (-z, -t) genuinely inverts (z, t).

The group acts on the closure of

    U = { (w, sigma) in C^n x C : Im sigma > |w|^2 }

by the complex-affine maps

    A_(z,t)(w, sigma) = (w + z, sigma + t + i |z|^2 + 2 i sum_j w_j conj(z_j)),

which preserve the height Im sigma - |w|^2 exactly, hence map the domain to
itself and its boundary to its boundary.  The anisotropic dilations
(z, t) -> (r z, r^2 t) and (w, sigma) -> (r w, r^2 sigma) intertwine the
action and scale the height by r^2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import DimensionError, ParameterError

BOUNDARY_TOL = 1e-12


def _as_cvector(v: Sequence[complex]) -> Tuple[complex, ...]:
    out = tuple(complex(c) for c in v)
    if not out:
        raise DimensionError("vectors must have length n >= 1")
    if not all(cmath.isfinite(c) for c in out):
        raise ParameterError("vector components must be finite")
    return out


@dataclass(frozen=True)
class ComplexElement:
    """A pair (z, t) with z in C^n and t real."""

    z: Tuple[complex, ...]
    t: float

    def __post_init__(self):
        object.__setattr__(self, "z", _as_cvector(self.z))
        object.__setattr__(self, "t", float(self.t))
        if not math.isfinite(self.t):
            raise ParameterError("t must be finite")

    @property
    def n(self) -> int:
        return len(self.z)

    @staticmethod
    def identity(n: int) -> "ComplexElement":
        if n < 1:
            raise DimensionError("n must be >= 1")
        return ComplexElement((0j,) * n, 0.0)


def cmul(g: ComplexElement, h: ComplexElement) -> ComplexElement:
    if g.n != h.n:
        raise DimensionError(f"dimension mismatch: {g.n} vs {h.n}")
    twist = 2.0 * sum((a * b.conjugate() for a, b in zip(g.z, h.z)), 0j).imag
    return ComplexElement(
        tuple(a + b for a, b in zip(g.z, h.z)),
        g.t + h.t + twist,
    )


def cinverse(g: ComplexElement) -> ComplexElement:
    """(-z, -t); exact here since sum z_j conj(z_j) is real."""
    return ComplexElement(tuple(-c for c in g.z), -g.t)


@dataclass(frozen=True)
class SiegelPoint:
    """A point (w, sigma) of C^n x C, classified by its height Im sigma - |w|^2."""

    w: Tuple[complex, ...]
    sigma: complex

    def __post_init__(self):
        object.__setattr__(self, "w", _as_cvector(self.w))
        object.__setattr__(self, "sigma", complex(self.sigma))
        if not cmath.isfinite(self.sigma):
            raise ParameterError("sigma must be finite")

    @property
    def n(self) -> int:
        return len(self.w)


def height(p: SiegelPoint) -> float:
    """Im sigma - |w|^2; positive inside the domain, zero on its boundary."""
    return p.sigma.imag - sum(abs(c) ** 2 for c in p.w)


def classify(p: SiegelPoint, tol: float = BOUNDARY_TOL) -> str:
    """'interior', 'boundary' or 'outside' by the sign of the height."""
    ht = height(p)
    if ht > tol:
        return "interior"
    if ht < -tol:
        return "outside"
    return "boundary"


def act(g: ComplexElement, p: SiegelPoint) -> SiegelPoint:
    """The affine automorphism A_(z,t); preserves the height exactly."""
    if g.n != p.n:
        raise DimensionError(f"dimension mismatch: {g.n} vs {p.n}")
    cross = sum((wj * zj.conjugate() for wj, zj in zip(p.w, g.z)), 0j)
    znorm2 = sum(abs(c) ** 2 for c in g.z)
    sigma = p.sigma + g.t + 1j * znorm2 + 2j * cross
    return SiegelPoint(tuple(a + b for a, b in zip(p.w, g.z)), sigma)


def act_compose_check(g: ComplexElement, g2: ComplexElement, p: SiegelPoint,
                      tol: float = 1e-12) -> bool:
    """Does acting by g after g2 agree with acting by the product g g2?

    Componentwise comparison, relative to max(1, magnitudes involved).
    """
    lhs = act(g, act(g2, p))
    rhs = act(cmul(g, g2), p)
    scale = max(
        1.0,
        max(abs(c) for c in lhs.w + rhs.w),
        abs(lhs.sigma),
        abs(rhs.sigma),
    )
    dev = max(
        max(abs(a - b) for a, b in zip(lhs.w, rhs.w)),
        abs(lhs.sigma - rhs.sigma),
    )
    return dev <= tol * scale


@dataclass(frozen=True)
class ComplexDilation:
    """Scaling by r > 0: (z, t) -> (r z, r^2 t) and (w, sigma) -> (r w, r^2 sigma)."""

    r: float

    def __post_init__(self):
        object.__setattr__(self, "r", float(self.r))
        if not (self.r > 0.0 and math.isfinite(self.r)):
            raise ParameterError(f"dilation parameter must be positive and finite, got {self.r}")


def cdilate(d: ComplexDilation, g: ComplexElement) -> ComplexElement:
    return ComplexElement(tuple(d.r * c for c in g.z), d.r * d.r * g.t)


def domain_dilate(d: ComplexDilation, p: SiegelPoint) -> SiegelPoint:
    """Scales the height by exactly r^2, so preserves domain and boundary."""
    return SiegelPoint(tuple(d.r * c for c in p.w), d.r * d.r * p.sigma)
