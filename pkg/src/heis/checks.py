"""Seeded property-check suites behind the CLI's *-check verbs.

Every suite takes an integer seed and a trial count and returns a plain-text
report plus a pass flag.  Randomness comes from numpy's default PCG64
generator seeded directly with the given seed, and all numbers are printed
with fixed formatting, so identical seeds give byte-identical reports.
"""

from __future__ import annotations

from typing import List, Tuple

import numpy as np

from . import core, grid, lattice, siegel

DIL_FACTORS = (0.5, 1.0, 2.0, 10.0)


def _fmt(v: float) -> str:
    return f"{v:.3e}"


def _verdict(lines: List[str], ok: bool) -> Tuple[str, bool]:
    lines.append("result: " + ("PASS" if ok else "FAIL"))
    return "\n".join(lines) + "\n", ok


def relation_check(n: int) -> Tuple[str, bool]:
    """Exhaustive defining-relation check for H_n(Z)."""
    report = lattice.check_relations(n)
    lines = [f"relcheck: n={n}", f"relations checked: {report.checked}"]
    for bad in report.counterexamples:
        lines.append(f"counterexample: {bad}")
    lines.append(f"counterexamples: {len(report.counterexamples)}")
    return _verdict(lines, report.ok)


def _random_grid_function(rng: np.random.Generator, spec: grid.GridSpec) -> grid.GridFunction:
    shape = spec.shape
    return grid.GridFunction(spec, rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def rep_check(n: int, N: int, trials: int, seed: int,
              L: float = 1.0, lam: float = 1.0, tol: float = 1e-12) -> Tuple[str, bool]:
    """Weyl relation, homomorphism, inverse, and kernel checks on the grid."""
    spec = grid.GridSpec(n, N, L, lam)
    rng = np.random.default_rng(seed)
    lines = [f"rep-check: n={n} N={N} L={L:.17g} lambda={lam:.17g} trials={trials} seed={seed}"]

    max_weyl = 0.0
    max_hom = 0.0
    max_inv = 0.0
    for trial in range(trials):
        p = tuple(int(v) for v in rng.integers(0, N, size=n))
        q = tuple(int(v) for v in rng.integers(0, N, size=n))
        s = int(rng.integers(0, N))
        p2 = tuple(int(v) for v in rng.integers(0, N, size=n))
        q2 = tuple(int(v) for v in rng.integers(0, N, size=n))
        s2 = int(rng.integers(0, N))
        f = _random_grid_function(rng, spec)
        if trial == 0:
            lines.append(f"first sample: p={p} q={q} s={s} p'={p2} q'={q2} s'={s2}")

        # U T = T U C_alpha, and the reverse orientation with conj(alpha)
        alpha = grid.weyl_alpha(p, q, spec)
        lhs = grid.apply_U(q, grid.apply_T(p, f))
        rhs = grid.apply_T(p, grid.apply_U(q, grid.apply_C(alpha, f)))
        max_weyl = max(max_weyl, lhs.max_abs_diff(rhs))
        lhs2 = grid.apply_T(p, grid.apply_U(q, f))
        rhs2 = grid.apply_C(alpha.conjugate(), grid.apply_U(q, grid.apply_T(p, f)))
        max_weyl = max(max_weyl, lhs2.max_abs_diff(rhs2))

        g = grid.QuantizedTriple(p, q, s)
        g2 = grid.QuantizedTriple(p2, q2, s2)
        composed = grid.rep(g, spec)(grid.rep(g2, spec)(f))
        direct = grid.rep(grid.triple_mul(g, g2), spec)(f)
        max_hom = max(max_hom, composed.max_abs_diff(direct))

        undone = grid.rep(grid.triple_inverse(g), spec)(grid.rep(g, spec)(f))
        max_inv = max(max_inv, undone.max_abs_diff(f))

    kernel_ok = True
    for s in range(2 * N):
        is_id = grid.is_identity_operator(
            grid.rep(grid.QuantizedTriple((0,) * n, (0,) * n, s), spec), spec, tol
        )
        if is_id != (s % N == 0):
            kernel_ok = False
            lines.append(f"kernel violation at s={s}")
    nontrivial = grid.QuantizedTriple((1,) + (0,) * (n - 1), (0,) * n, 0)
    if grid.is_identity_operator(grid.rep(nontrivial, spec), spec, tol):
        kernel_ok = False
        lines.append("kernel violation: nontrivial shift acts as identity")

    lines.append(f"max weyl-relation deviation: {_fmt(max_weyl)}")
    lines.append(f"max homomorphism deviation: {_fmt(max_hom)}")
    lines.append(f"max inverse deviation: {_fmt(max_inv)}")
    lines.append(f"kernel check: {'ok' if kernel_ok else 'FAILED'}")
    ok = kernel_ok and max(max_weyl, max_hom, max_inv) <= tol
    return _verdict(lines, ok)


def commutator_check(N: int, ratio_lo: float = 3.5, ratio_hi: float = 4.5,
                     L: float = 1.0) -> Tuple[str, bool]:
    """Second-order convergence of the difference/multiplication commutator.

    Measures the interior defect for f = sin(2 pi w / L), mu(w) = w, nu = 1
    at resolutions N and 2N; halving the step should shrink the defect by
    about four.
    """
    defects = []
    for res in (N, 2 * N):
        spec = grid.GridSpec(1, res, L, 1.0)
        w = np.arange(res) * spec.h
        f = grid.GridFunction(spec, np.sin(2.0 * np.pi * w / L))
        defects.append(grid.commutator_defect((1.0,), (1.0,), f))
    ratio = defects[0] / defects[1]
    lines = [
        f"commutator: N={N} L={L:.17g} f=sin(2*pi*w/L) mu(w)=w nu=1",
        f"interior defect at N={N}: {_fmt(defects[0])}",
        f"interior defect at N={2 * N}: {_fmt(defects[1])}",
        f"defect ratio: {ratio:.6f}",
    ]
    return _verdict(lines, ratio_lo <= ratio <= ratio_hi)


def _random_real_element(rng: np.random.Generator, n: int, bound: float) -> core.RealElement:
    v = rng.uniform(-bound, bound, size=2 * n + 1)
    return core.RealElement(tuple(v[:n]), tuple(v[n:2 * n]), float(v[2 * n]))


def group_check(n: int, trials: int, seed: int, bound: float = 10.0,
                tol: float = 1e-9) -> Tuple[str, bool]:
    """Associativity, identity, corrected inverse and dilation homomorphism
    for H_n(R), plus coset-reduction recomposition."""
    rng = np.random.default_rng(seed)
    e = core.RealElement.identity(n)
    lines = [f"group-check: n={n} trials={trials} seed={seed} bound={bound:.17g}"]

    def dev(a: core.RealElement, b: core.RealElement) -> float:
        return max(
            max(abs(p - q) for p, q in zip(a.x, b.x)),
            max(abs(p - q) for p, q in zip(a.y, b.y)),
            abs(a.t - b.t),
        )

    max_assoc = max_inv = max_dil = max_coset = 0.0
    ident_ok = True
    for trial in range(trials):
        g = _random_real_element(rng, n, bound)
        h = _random_real_element(rng, n, bound)
        k = _random_real_element(rng, n, bound)
        if trial == 0:
            lines.append(f"first sample: g={g.x}|{g.y}|{g.t:.6f}")
        max_assoc = max(max_assoc, dev(core.mul(core.mul(g, h), k),
                                       core.mul(g, core.mul(h, k))))
        max_inv = max(max_inv, dev(core.mul(g, core.inverse(g)), e))
        max_inv = max(max_inv, dev(core.mul(core.inverse(g), g), e))
        if core.mul(g, e) != g or core.mul(e, g) != g:
            ident_ok = False
        r = core.Dilation(float(rng.uniform(0.1, 10.0)))
        max_dil = max(max_dil, dev(core.dilate(r, core.mul(g, h)),
                                   core.mul(core.dilate(r, g), core.dilate(r, h))))
        red = core.coset_reduce(g)
        gamma = core.embed_integer(red.k, red.l, red.m)
        max_coset = max(max_coset, dev(core.mul(gamma, g), red.rep))

    lines.append(f"max associativity deviation: {_fmt(max_assoc)}")
    lines.append(f"max inverse deviation: {_fmt(max_inv)}")
    lines.append(f"max dilation-homomorphism deviation: {_fmt(max_dil)}")
    lines.append(f"max coset recomposition deviation: {_fmt(max_coset)}")
    lines.append(f"two-sided identity exact: {'ok' if ident_ok else 'FAILED'}")
    ok = ident_ok and max(max_assoc, max_inv, max_dil) <= tol and max_coset <= 1e-12
    return _verdict(lines, ok)


def siegel_check(n: int, trials: int, seed: int, bound: float = 10.0,
                 tol: float = 1e-10) -> Tuple[str, bool]:
    """Height invariance, action composition, and dilation equivariance."""
    rng = np.random.default_rng(seed)
    lines = [f"siegel-check: n={n} trials={trials} seed={seed} bound={bound:.17g}"]

    def rand_cvec(size: int) -> Tuple[complex, ...]:
        v = rng.uniform(-bound, bound, size=2 * size)
        return tuple(complex(v[2 * j], v[2 * j + 1]) for j in range(size))

    max_height = 0.0
    max_equiv = 0.0
    compose_fails = 0
    for trial in range(trials):
        g = siegel.ComplexElement(rand_cvec(n), float(rng.uniform(-bound, bound)))
        g2 = siegel.ComplexElement(rand_cvec(n), float(rng.uniform(-bound, bound)))
        p = siegel.SiegelPoint(rand_cvec(n), complex(*rng.uniform(-bound, bound, size=2)))
        if trial == 0:
            lines.append(f"first sample: z={g.z} t={g.t:.6f}")

        max_height = max(max_height, abs(siegel.height(siegel.act(g, p)) - siegel.height(p)))
        if not siegel.act_compose_check(g, g2, p):
            compose_fails += 1
        for r in DIL_FACTORS:
            d = siegel.ComplexDilation(r)
            lhs = siegel.domain_dilate(d, siegel.act(g, p))
            rhs = siegel.act(siegel.cdilate(d, g), siegel.domain_dilate(d, p))
            scale = max(1.0, max(abs(c) for c in lhs.w), abs(lhs.sigma))
            devn = max(
                max(abs(a - b) for a, b in zip(lhs.w, rhs.w)),
                abs(lhs.sigma - rhs.sigma),
            ) / scale
            max_equiv = max(max_equiv, devn)

    lines.append(f"max height-invariance deviation: {_fmt(max_height)}")
    lines.append(f"composition-identity failures: {compose_fails}")
    lines.append(f"max dilation-equivariance deviation: {_fmt(max_equiv)}")
    ok = max_height <= tol and compose_fails == 0 and max_equiv <= tol
    return _verdict(lines, ok)
