"""Discrete-time SISO LTI plants: frequency response, simulation, composition.

Coefficient convention: numerator and denominator are stored in ascending
powers of the unit delay z^-1, with a separate integer input delay so pure
dead time never inflates polynomial order.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import (
    NonFiniteOutput,
    NonPositiveTimeConstant,
    PoleOnGrid,
    PoleOnUnitCircle,
)

STABILITY_TOL = 1e-9


@dataclass(frozen=True)
class DiscreteTransferFunction:
    """Rational SISO system in z^-1 plus an integer input delay."""

    numerator_coeffs: np.ndarray
    denominator_coeffs: np.ndarray
    input_delay: int = 0
    sample_time: float = 1.0

    def __post_init__(self):
        num = np.atleast_1d(np.asarray(self.numerator_coeffs, dtype=float))
        den = np.atleast_1d(np.asarray(self.denominator_coeffs, dtype=float))
        if not (np.all(np.isfinite(num)) and np.all(np.isfinite(den))):
            raise ValueError("coefficients must be finite")
        if den[0] == 0.0:
            raise ValueError("leading denominator coefficient must be nonzero")
        if self.input_delay < 0:
            raise ValueError("input_delay must be nonnegative")
        if self.sample_time <= 0:
            raise ValueError("sample_time must be positive")
        object.__setattr__(self, "numerator_coeffs", num)
        object.__setattr__(self, "denominator_coeffs", den)

    def poles(self):
        """Roots of the denominator in the z plane."""
        den = self.denominator_coeffs
        if den.shape[0] == 1:
            return np.array([], dtype=complex)
        # c0 + c1 z^-1 + ... + cm z^-m  ->  c0 z^m + ... + cm
        return np.roots(den)

    def is_stable(self, tol=STABILITY_TOL):
        p = self.poles()
        return p.size == 0 or np.max(np.abs(p)) < 1.0 - tol

    def as_polynomial_fraction(self):
        """(numerator, denominator) in ascending z^-1 with the delay folded in."""
        num = np.concatenate([np.zeros(self.input_delay), self.numerator_coeffs])
        return num, self.denominator_coeffs.copy()


@dataclass(frozen=True)
class SignalRecord:
    """Real-valued time-domain record."""

    samples: np.ndarray
    sample_time: float = 1.0

    def __post_init__(self):
        s = np.asarray(self.samples, dtype=float)
        if s.ndim != 1:
            raise ValueError("samples must be one-dimensional")
        if not np.all(np.isfinite(s)):
            raise ValueError("samples must be finite")
        if self.sample_time <= 0:
            raise ValueError("sample_time must be positive")
        object.__setattr__(self, "samples", s)

    def __len__(self):
        return self.samples.shape[0]


@dataclass(frozen=True)
class NoiseSpec:
    """Additive i.i.d. Gaussian measurement noise at the output."""

    variance: float = 0.0
    enabled: bool = False

    def __post_init__(self):
        if self.variance < 0:
            raise ValueError("variance must be nonnegative")


NO_NOISE = NoiseSpec(0.0, False)


def freq_response(tf, omega):
    """Evaluate the transfer function at z = e^{j omega} (rad/sample).

    Accepts a scalar or an array of frequencies.
    """
    omega = np.asarray(omega, dtype=float)
    z_inv = np.exp(-1j * omega)
    num = np.polynomial.polynomial.polyval(z_inv, tf.numerator_coeffs)
    den = np.polynomial.polynomial.polyval(z_inv, tf.denominator_coeffs)
    if np.any(np.abs(den) < 1e-14):
        raise PoleOnUnitCircle("denominator vanishes on the evaluation grid")
    resp = num * z_inv**tf.input_delay / den
    return resp if omega.ndim else complex(resp)


def simulate_transient(tf, input_record, noise=NO_NOISE, rng=None):
    """Run the difference equation from zero initial conditions."""
    u = input_record.samples
    y = _kernels.difference_equation(
        tf.numerator_coeffs, tf.denominator_coeffs, u, tf.input_delay
    )
    if not np.all(np.isfinite(y)):
        raise NonFiniteOutput("simulation diverged (unstable plant?)")
    if noise.enabled and noise.variance > 0:
        if rng is None:
            raise ValueError("noise enabled but no rng supplied")
        y = y + rng.normal(0.0, np.sqrt(noise.variance), size=y.shape)
    return SignalRecord(y, input_record.sample_time)


def simulate_circular(tf, input_record):
    """Periodic steady-state response: exact Y = G U on the DFT grid."""
    u = input_record.samples
    n = u.shape[0]
    if n < 2:
        raise ValueError("input length must be >= 2")
    omega = 2.0 * np.pi * np.arange(n) / n
    z = np.exp(1j * omega)
    den = np.polynomial.polynomial.polyval(np.conj(z), tf.denominator_coeffs)
    if np.any(np.abs(den) < 1e-12):
        raise PoleOnGrid("pole within 1e-12 of a DFT grid point")
    g = freq_response(tf, omega)
    y = np.fft.ifft(g * np.fft.fft(u))
    resid = np.max(np.abs(y.imag))
    if resid > 1e-9 * max(1.0, np.max(np.abs(y.real))):
        raise NonFiniteOutput("circular simulation produced complex output")
    return SignalRecord(y.real, input_record.sample_time)


def discretize_first_order_lag(gain, time_constant, sample_time):
    """ZOH discretization of gain / (T s + 1): pole exp(-Ts/T), DC gain kept."""
    if time_constant <= 0:
        raise NonPositiveTimeConstant("time constant must be positive")
    if sample_time <= 0:
        raise ValueError("sample_time must be positive")
    p = np.exp(-sample_time / time_constant)
    return DiscreteTransferFunction(
        numerator_coeffs=np.array([gain * (1.0 - p)]),
        denominator_coeffs=np.array([1.0, -p]),
        input_delay=0,
        sample_time=sample_time,
    )


def series(tf1, tf2):
    """Cascade: numerators and denominators multiply, delays add."""
    num = np.convolve(tf1.numerator_coeffs, tf2.numerator_coeffs)
    den = np.convolve(tf1.denominator_coeffs, tf2.denominator_coeffs)
    return DiscreteTransferFunction(
        numerator_coeffs=num,
        denominator_coeffs=den,
        input_delay=tf1.input_delay + tf2.input_delay,
        sample_time=tf1.sample_time,
    )


def impulse_response(tf, length):
    """First `length` Markov parameters g_0 ... g_{length-1}."""
    if length < 1:
        raise ValueError("length must be >= 1")
    imp = np.zeros(length)
    imp[0] = 1.0
    return simulate_transient(tf, SignalRecord(imp, tf.sample_time)).samples


def static_gain(gain, sample_time=1.0):
    return DiscreteTransferFunction(
        np.array([float(gain)]), np.array([1.0]), 0, sample_time
    )


def pure_delay(samples, sample_time=1.0):
    return DiscreteTransferFunction(
        np.array([1.0]), np.array([1.0]), int(samples), sample_time
    )
