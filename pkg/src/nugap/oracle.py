"""Exact reference computations from known transfer functions: chordal
supremum, gated nu-gap, analytic index check, stability margin, and the
finite-length Toeplitz induced norm.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import PoleOnUnitCircle
from .indexcheck import IndexCheckResult, winding_number, MAX_PHASE_STEP
from .lti import freq_response, impulse_response

DEFAULT_GRID = 1 << 16
REFINE_TOL = 1e-8
_INV_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OracleResult:
    chordal_sup: float
    omega_star: float
    in_c: bool
    wno_f1: int
    wno_f2: int
    nu_gap: float
    grid_size: int

    def to_dict(self):
        return {
            "chordal_sup": self.chordal_sup,
            "omega_star": self.omega_star,
            "in_C": self.in_c,
            "wno_f1": self.wno_f1,
            "wno_f2": self.wno_f2,
            "nu_gap": self.nu_gap,
            "grid_size": self.grid_size,
        }


def chordal_distance(g1, g2):
    """|g1 - g2| / sqrt((1+|g1|^2)(1+|g2|^2)), the Riemann-sphere chord."""
    g1 = np.asarray(g1, dtype=complex)
    g2 = np.asarray(g2, dtype=complex)
    d = np.abs(g1 - g2) / np.sqrt((1.0 + np.abs(g1) ** 2) * (1.0 + np.abs(g2) ** 2))
    return d if d.ndim else float(d)


def _check_circle_poles(tf):
    p = tf.poles()
    if p.size and np.any(np.abs(np.abs(p) - 1.0) < 1e-9):
        raise PoleOnUnitCircle("pole within 1e-9 of the unit circle")


def _golden_max(fun, a, b, tol):
    c = b - _INV_GOLDEN * (b - a)
    d = a + _INV_GOLDEN * (b - a)
    fc, fd = fun(c), fun(d)
    while (b - a) > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_GOLDEN * (b - a)
            fd = fun(d)
    x = 0.5 * (a + b)
    return x, fun(x)


def _sup_on_circle(fun, coarse_grid=DEFAULT_GRID, tol=REFINE_TOL):
    """Dense scan of [0, pi] plus golden-section refinement of the best bracket."""
    omega = np.linspace(0.0, np.pi, coarse_grid)
    vals = fun(omega)
    k = int(np.argmax(vals))
    lo = omega[max(k - 1, 0)]
    hi = omega[min(k + 1, coarse_grid - 1)]
    x, v = _golden_max(lambda w: float(fun(np.asarray([w]))[0]), lo, hi, tol)
    if v >= vals[k]:
        return float(v), float(x)
    return float(vals[k]), float(omega[k])


def chordal_sup(tf1, tf2, coarse_grid=DEFAULT_GRID, tol=REFINE_TOL):
    """Supremum over frequency of the chordal distance, with its maximizer.

    Conjugate symmetry of real-coefficient plants confines the scan to
    [0, pi].
    """
    _check_circle_poles(tf1)
    _check_circle_poles(tf2)

    def fun(omega):
        return chordal_distance(freq_response(tf1, omega), freq_response(tf2, omega))

    return _sup_on_circle(fun, coarse_grid, tol)


def exact_index_check(tf1, tf2, grid=DEFAULT_GRID, tol_f=1e-3):
    """Analytic version of the data-driven check: f1 = 1 + |G0|^2 and
    f2 = 1 + G conj(G0) sampled on a dense unit-circle grid.

    tf1 plays the nominal role G0, tf2 the plant role G.
    """
    if grid < 1024:
        raise ValueError("grid must be >= 1024")
    _check_circle_poles(tf1)
    _check_circle_poles(tf2)
    omega = 2.0 * np.pi * np.arange(grid) / grid
    g0 = freq_response(tf1, omega)
    g = freq_response(tf2, omega)
    f1 = (1.0 + np.abs(g0) ** 2).astype(complex)
    f2 = 1.0 + g * np.conj(g0)
    tol_eff = tol_f * float(np.median(np.abs(f2)))
    m1 = float(np.min(np.abs(f1)))
    m2 = float(np.min(np.abs(f2)))
    wno1, theta1, step1 = winding_number(f1, strict=False)
    wno2, theta2, step2 = winding_number(f2, strict=False)
    max_step = max(step1, step2)
    coarse = max_step > MAX_PHASE_STEP
    in_c = (m1 > tol_eff) and (m2 > tol_eff) and (wno1 == wno2) and not coarse
    return IndexCheckResult(
        m1=m1,
        m2=m2,
        wno_f1=wno1,
        wno_f2=wno2,
        in_c=in_c,
        theta1=theta1,
        theta2=theta2,
        max_phase_step=max_step,
        tol_f_effective=tol_eff,
        coarse_grid=coarse,
    )


def nu_gap(tf1, tf2, grid=DEFAULT_GRID):
    """Gated metric: chordal supremum if the index condition holds, else 1."""
    idx = exact_index_check(tf1, tf2, grid)
    value, omega_star = chordal_sup(tf1, tf2, grid)
    return OracleResult(
        chordal_sup=value,
        omega_star=omega_star,
        in_c=idx.in_c,
        wno_f1=idx.wno_f1,
        wno_f2=idx.wno_f2,
        nu_gap=value if idx.in_c else 1.0,
        grid_size=grid,
    )


def _closed_loop_denominator(g0, c):
    """1 + C*G0 as a polynomial fraction; returns its numerator polynomial."""
    ng, dg = g0.as_polynomial_fraction()
    nc, dc = c.as_polynomial_fraction()
    return np.polynomial.polynomial.polyadd(
        np.convolve(dc, dg), np.convolve(nc, ng)
    )


def closed_loop_stable(g0, c, tol=1e-9):
    """Root-radius test on the characteristic polynomial of 1 + C*G0."""
    char = _closed_loop_denominator(g0, c)
    char = np.trim_zeros(char, "b")
    if char.size == 0:
        return False
    if char.size == 1:
        return True
    roots = np.roots(char)
    return np.all(np.abs(roots) < 1.0 - tol)


def stability_margin(g0, c, grid=DEFAULT_GRID):
    """b_{G0,C}: inverse peak of the closed-loop map norm, 0 if unstable.

    For SISO the largest singular value of the 2x2 closed-loop map has the
    closed form sqrt(1+|G0|^2) sqrt(1+|C|^2) / |1 + C G0|.
    """
    _check_circle_poles(g0)
    if not closed_loop_stable(g0, c):
        return 0.0

    def fun(omega):
        rg = freq_response(g0, omega)
        rc = freq_response(c, omega)
        return (
            np.sqrt(1.0 + np.abs(rg) ** 2)
            * np.sqrt(1.0 + np.abs(rc) ** 2)
            / np.abs(1.0 + rc * rg)
        )

    peak, _ = _sup_on_circle(fun, grid)
    return 1.0 / peak


def induced_norm_toeplitz(tf, n, rel_tol=1e-10, rng=None):
    """Largest singular value of the N-by-N lower-triangular Toeplitz
    operator built from the impulse response, by power iteration on the
    normal operator.
    """
    if n > 4096:
        raise ValueError("N capped at 4096")
    g = impulse_response(tf, n)
    if rng is None:
        rng = np.random.default_rng(0)
    x = rng.standard_normal(n)
    x /= np.linalg.norm(x)
    lam = 0.0
    for _ in range(10 * n):
        y = _kernels.toeplitz_rmatvec(g, _kernels.toeplitz_matvec(g, x))
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return 0.0
        if abs(norm - lam) <= rel_tol * max(norm, 1e-300):
            lam = norm
            break
        lam = norm
        x = y / norm
    return float(np.sqrt(lam))
