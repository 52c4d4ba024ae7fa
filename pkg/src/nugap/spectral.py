"""DFT/IDFT on the unit-circle grid w_k = 2*pi*k/N, any N.

Forward transform is unnormalized, the inverse carries 1/N. Backed by
numpy's mixed-radix/Bluestein FFT, which handles arbitrary lengths.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NonNegligibleImaginaryPart
from .lti import SignalRecord


@dataclass(frozen=True)
class Spectrum:
    """Complex DFT-grid vector."""

    bins: np.ndarray
    sample_time: float = 1.0

    def __post_init__(self):
        b = np.asarray(self.bins, dtype=complex)
        if b.ndim != 1:
            raise ValueError("bins must be one-dimensional")
        if not np.all(np.isfinite(b)):
            raise ValueError("bins must be finite")
        object.__setattr__(self, "bins", b)

    def __len__(self):
        return self.bins.shape[0]

    def grid(self):
        n = len(self)
        return 2.0 * np.pi * np.arange(n) / n


def dft(signal):
    """Forward DFT of a real time-domain record."""
    if len(signal) < 2:
        raise ValueError("need at least two samples")
    return Spectrum(np.fft.fft(signal.samples), signal.sample_time)


def idft(spec):
    """Inverse DFT; requires a (numerically) conjugate-symmetric spectrum."""
    if len(spec) < 2:
        raise ValueError("need at least two bins")
    x = np.fft.ifft(spec.bins)
    bound = 1e-9 * max(1.0, np.max(np.abs(x.real)))
    if np.max(np.abs(x.imag)) > bound:
        raise NonNegligibleImaginaryPart(
            "spectrum is not conjugate symmetric (imag residue above bound)"
        )
    return SignalRecord(x.real, spec.sample_time)
