"""Finite clock-and-shift realization of the translation/modulation operators.

Functions live on the periodic grid ([0, L) intersect hZ)^n with h = L/N.
Shifts are quantized as x = (L/N) p and modulations as y = q/(lambda L) with
integer vectors p, q; then the translation T, modulation U and scalar C
operators satisfy the commutation relation

    U_y o T_x = T_x o U_y o C_alpha,   alpha = exp(2 pi i (q . p) / N)

*exactly* (up to complex rounding), because T is a coordinate permutation and
U is a diagonal of N-th roots of unity.  With central times quantized as
t = s / (lambda N), the map (p, q, s) -> T o U o C_{exp(2 pi i s / N)} is a
homomorphism from the quantized Heisenberg group; its kernel is the triples
with p, q, s all divisible by N.

A central-difference directional derivative and a coordinate multiplication
operator are also provided, with a measured commutator defect against the
constant-times-identity that the continuum commutator equals; the defect
decays at second order in h on the seam-free interior of the grid.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, TextIO, Tuple

import numpy as np

from .errors import DimensionError, ParameterError

MAX_GRID_POINTS = 2**20


@dataclass(frozen=True)
class GridSpec:
    """Discretization data: dimension n, N samples per axis, period L, scale lambda."""

    n: int
    N: int
    L: float = 1.0
    lam: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError("n must be >= 1")
        if self.N < 2:
            raise ParameterError("N must be >= 2")
        if not (self.L > 0 and math.isfinite(self.L)):
            raise ParameterError("L must be positive and finite")
        if not (self.lam > 0 and math.isfinite(self.lam)):
            raise ParameterError("lambda must be positive and finite")
        if self.N**self.n > MAX_GRID_POINTS:
            raise ParameterError(
                f"grid with N^n = {self.N**self.n} points exceeds the {MAX_GRID_POINTS} guard"
            )

    @property
    def h(self) -> float:
        return self.L / self.N

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self.N,) * self.n


class GridFunction:
    """Complex samples over the periodic grid; immutable after construction."""

    __slots__ = ("spec", "values")

    def __init__(self, spec: GridSpec, values):
        arr = np.asarray(values, dtype=np.complex128)
        if arr.size == spec.N**spec.n and arr.ndim == 1:
            arr = arr.reshape(spec.shape)
        if arr.shape != spec.shape:
            raise DimensionError(
                f"values have shape {arr.shape}, expected {spec.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise ParameterError("grid samples must be finite")
        arr = arr.copy()
        arr.flags.writeable = False
        self.spec = spec
        self.values = arr

    @classmethod
    def _wrap(cls, spec: GridSpec, arr: np.ndarray) -> "GridFunction":
        """Adopt a freshly computed array without copying or re-validating.

        Only for operator outputs: the array must be owned by the caller and
        already have the grid's shape.
        """
        obj = object.__new__(cls)
        arr.flags.writeable = False
        obj.spec = spec
        obj.values = arr
        return obj

    @staticmethod
    def sample(spec: GridSpec, func: Callable[..., complex]) -> "GridFunction":
        """Sample func(w_1, ..., w_n) at the grid coordinates."""
        coords = np.meshgrid(*(np.arange(spec.N) * spec.h for _ in range(spec.n)),
                             indexing="ij")
        return GridFunction(spec, np.vectorize(func)(*coords))

    @staticmethod
    def basis(spec: GridSpec, flat_index: int) -> "GridFunction":
        v = np.zeros(spec.shape, dtype=np.complex128)
        v.flat[flat_index] = 1.0
        return GridFunction(spec, v)

    def max_abs_diff(self, other: "GridFunction") -> float:
        if self.spec != other.spec:
            raise DimensionError("grid functions live on different grids")
        return float(np.max(np.abs(self.values - other.values)))


def _check_vec(v: Sequence, n: int, name: str) -> np.ndarray:
    arr = np.asarray(v)
    if arr.shape != (n,):
        raise DimensionError(f"{name} must be an n-vector of length {n}, got shape {arr.shape}")
    return arr


def apply_T(p: Sequence[int], f: GridFunction) -> GridFunction:
    """Cyclic translation: out[j] = f[j - p mod N].  An exact permutation."""
    pv = _check_vec(p, f.spec.n, "p").astype(int)
    rolled = np.roll(f.values, shift=tuple(pv), axis=tuple(range(f.spec.n)))
    return GridFunction._wrap(f.spec, rolled)


def _index_phase(q: np.ndarray, spec: GridSpec) -> np.ndarray:
    """exp(2 pi i (q . j) / N) over all multi-indices j."""
    total = np.zeros(spec.shape)
    for axis in range(spec.n):
        shape = [1] * spec.n
        shape[axis] = spec.N
        total = total + (q[axis] * np.arange(spec.N)).reshape(shape)
    return np.exp(2j * np.pi * total / spec.N)


def apply_U(q: Sequence[int], f: GridFunction) -> GridFunction:
    """Modulation: multiply sample j by exp(2 pi i (q . j) / N).

    With y = q/(lambda L) and w = j L / N this is exactly
    exp(2 pi i lambda y . w)."""
    qv = _check_vec(q, f.spec.n, "q").astype(int)
    return GridFunction._wrap(f.spec, _index_phase(qv, f.spec) * f.values)


def apply_C(alpha: complex, f: GridFunction) -> GridFunction:
    """Multiplication by a unimodular scalar."""
    if abs(abs(alpha) - 1.0) > 1e-12:
        raise ParameterError(f"alpha must have unit modulus, got |alpha| = {abs(alpha)}")
    return GridFunction._wrap(f.spec, complex(alpha) * f.values)


def weyl_alpha(p: Sequence[int], q: Sequence[int], spec: GridSpec) -> complex:
    """The scalar exp(2 pi i (q . p) / N) with U o T = T o U o C_alpha."""
    pv = _check_vec(p, spec.n, "p").astype(int)
    qv = _check_vec(q, spec.n, "q").astype(int)
    return cmath.exp(2j * cmath.pi * int(np.dot(qv, pv)) / spec.N)


# --- the representation -----------------------------------------------------

@dataclass(frozen=True)
class QuantizedTriple:
    """(p, q, s): shift p, modulation q, central phase step s."""

    p: Tuple[int, ...]
    q: Tuple[int, ...]
    s: int

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(int(c) for c in self.p))
        object.__setattr__(self, "q", tuple(int(c) for c in self.q))
        object.__setattr__(self, "s", int(self.s))
        if len(self.p) == 0 or len(self.p) != len(self.q):
            raise DimensionError("p and q must have equal length n >= 1")

    @property
    def n(self) -> int:
        return len(self.p)


def triple_mul(g: QuantizedTriple, h: QuantizedTriple) -> QuantizedTriple:
    """The Heisenberg law on quantized triples: central slot gains h.p . g.q."""
    if g.n != h.n:
        raise DimensionError(f"dimension mismatch: {g.n} vs {h.n}")
    return QuantizedTriple(
        tuple(a + b for a, b in zip(g.p, h.p)),
        tuple(a + b for a, b in zip(g.q, h.q)),
        g.s + h.s + sum(a * b for a, b in zip(h.p, g.q)),
    )


def triple_inverse(g: QuantizedTriple) -> QuantizedTriple:
    return QuantizedTriple(
        tuple(-c for c in g.p),
        tuple(-c for c in g.q),
        -g.s + sum(a * b for a, b in zip(g.p, g.q)),
    )


def rep(g: QuantizedTriple, spec: GridSpec) -> Callable[[GridFunction], GridFunction]:
    """The operator T_p o U_q o C_alpha with alpha = exp(2 pi i s / N).

    Matrix-free: returns a function applying the permutation, the diagonal
    phase and the scalar in turn.
    """
    if g.n != spec.n:
        raise DimensionError(f"triple has dimension {g.n}, grid has {spec.n}")
    alpha = cmath.exp(2j * cmath.pi * g.s / spec.N)

    def operator(f: GridFunction) -> GridFunction:
        return apply_T(g.p, apply_U(g.q, apply_C(alpha, f)))

    return operator


def dense_matrix(op: Callable[[GridFunction], GridFunction], spec: GridSpec) -> np.ndarray:
    """Materialize an operator as a dense matrix (small grids only)."""
    size = spec.N**spec.n
    if size > 256:
        raise ParameterError(f"dense materialization limited to 256 points, got {size}")
    cols = [op(GridFunction.basis(spec, j)).values.ravel() for j in range(size)]
    return np.stack(cols, axis=1)


def is_identity_operator(op: Callable[[GridFunction], GridFunction], spec: GridSpec,
                         tol: float = 1e-12) -> bool:
    """Check op = id on the full standard basis of grid functions."""
    size = spec.N**spec.n
    for j in range(size):
        e = GridFunction.basis(spec, j)
        if op(e).max_abs_diff(e) > tol:
            return False
    return True


# --- differentiation / multiplication commutator ----------------------------

def directional_difference(nu: Sequence[float], f: GridFunction) -> GridFunction:
    """Central-difference directional derivative with weights nu.

    Per axis: (f(w + h e_a) - f(w - h e_a)) / (2 h), combined with weights
    nu_a; second-order accurate on smooth periodic samples.
    """
    nv = _check_vec(nu, f.spec.n, "nu").astype(float)
    h = f.spec.h
    out = np.zeros(f.spec.shape, dtype=np.complex128)
    for axis in range(f.spec.n):
        if nv[axis] == 0.0:
            continue
        forward = np.roll(f.values, -1, axis=axis)
        backward = np.roll(f.values, 1, axis=axis)
        out = out + nv[axis] * (forward - backward) / (2.0 * h)
    return GridFunction(f.spec, out)


def coordinate_multiply(u: Sequence[float], f: GridFunction) -> GridFunction:
    """Multiply by the linear functional w -> w . u evaluated at grid coordinates."""
    uv = _check_vec(u, f.spec.n, "u").astype(float)
    spec = f.spec
    mu = np.zeros(spec.shape)
    for axis in range(spec.n):
        shape = [1] * spec.n
        shape[axis] = spec.N
        mu = mu + (uv[axis] * np.arange(spec.N) * spec.h).reshape(shape)
    return GridFunction(spec, mu * f.values)


def commutator_defect(nu: Sequence[float], u: Sequence[float], f: GridFunction) -> float:
    """Max interior deviation of the discrete [D_nu, M_mu] f from (nu . u) f.

    The coordinate functional is not periodic, so points whose difference
    stencil crosses the wrap seam are excluded (a margin of
    max(1, ceil(max |nu_a|)) samples on each side of every axis).
    """
    nv = _check_vec(nu, f.spec.n, "nu").astype(float)
    uv = _check_vec(u, f.spec.n, "u").astype(float)
    d_of_m = directional_difference(nv, coordinate_multiply(uv, f))
    m_of_d = coordinate_multiply(uv, directional_difference(nv, f))
    expected = float(np.dot(nv, uv)) * f.values
    defect = np.abs(d_of_m.values - m_of_d.values - expected)
    margin = max(1, math.ceil(float(np.max(np.abs(nv)))))
    if 2 * margin >= f.spec.N:
        raise ParameterError("grid too small for the seam-exclusion margin")
    interior = tuple(slice(margin, f.spec.N - margin) for _ in range(f.spec.n))
    return float(np.max(defect[interior]))


# --- text serialization -----------------------------------------------------

def write_grid_function(f: GridFunction, stream: TextIO) -> None:
    """Header `n N L lambda`, then one `re im` sample per line, row-major."""
    spec = f.spec
    stream.write(f"{spec.n} {spec.N} {spec.L:.17g} {spec.lam:.17g}\n")
    for v in f.values.ravel():
        stream.write(f"{v.real:.17g} {v.imag:.17g}\n")


def read_grid_function(stream: TextIO) -> GridFunction:
    header = stream.readline().split()
    if len(header) != 4:
        raise ParameterError("grid function header must be `n N L lambda`")
    n, N = int(header[0]), int(header[1])
    L, lam = float(header[2]), float(header[3])
    spec = GridSpec(n, N, L, lam)
    values = []
    for line in stream:
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParameterError(f"expected `re im`, got {line.strip()!r}")
        values.append(complex(float(parts[0]), float(parts[1])))
    if len(values) != N**n:
        raise ParameterError(f"expected {N**n} samples, got {len(values)}")
    return GridFunction(spec, np.array(values))
