import numpy as np
import pytest

from nugap.errors import NonNegligibleImaginaryPart
from nugap.lti import SignalRecord
from nugap.spectral import Spectrum, dft, idft


def test_impulse_and_constant():
    imp = SignalRecord(np.eye(1, 8)[0], 1.0)
    assert np.allclose(dft(imp).bins, np.ones(8), atol=1e-12)
    ones = SignalRecord(np.ones(8), 1.0)
    expect = np.zeros(8)
    expect[0] = 8.0
    assert np.allclose(dft(ones).bins, expect, atol=1e-12)


def test_cosine_bins_and_roundtrip():
    n = 16
    t = np.arange(n)
    x = SignalRecord(np.cos(2 * np.pi * 3 * t / n), 1.0)
    bins = dft(x).bins
    assert bins[3] == pytest.approx(8.0, abs=1e-10)
    assert bins[13] == pytest.approx(8.0, abs=1e-10)
    others = np.delete(np.abs(bins), [3, 13])
    assert np.max(others) <= 1e-10
    back = idft(dft(x))
    assert np.allclose(back.samples, x.samples, atol=1e-10)


def test_roundtrip_arbitrary_length():
    rng = np.random.default_rng(5)
    x = SignalRecord(rng.standard_normal(9000), 0.05)
    back = idft(dft(x)).samples
    assert np.max(np.abs(back - x.samples)) <= 1e-10 * np.max(np.abs(x.samples))


def test_allones_spectrum_is_impulse():
    spec = Spectrum(np.ones(10, dtype=complex), 1.0)
    out = idft(spec).samples
    assert np.allclose(out, np.eye(1, 10)[0], atol=1e-12)


def test_nonsymmetric_spectrum_rejected():
    bad = np.zeros(8, dtype=complex)
    bad[1] = 1.0  # no conjugate partner in bin 7
    with pytest.raises(NonNegligibleImaginaryPart):
        idft(Spectrum(bad, 1.0))


@pytest.mark.parametrize("n", [7, 256, 1000, 9000])
def test_parseval(n):
    rng = np.random.default_rng(n)
    x = rng.standard_normal(n)
    bins = dft(SignalRecord(x, 1.0)).bins
    lhs = np.sum(np.abs(bins) ** 2)
    rhs = n * np.sum(x**2)
    assert lhs == pytest.approx(rhs, rel=1e-10)


def test_conjugate_symmetry_real_input():
    rng = np.random.default_rng(9)
    n = 100
    bins = dft(SignalRecord(rng.standard_normal(n), 1.0)).bins
    for k in range(1, n):
        assert bins[n - k] == pytest.approx(np.conj(bins[k]), abs=1e-10)


def test_linearity():
    rng = np.random.default_rng(10)
    x = rng.standard_normal(64)
    y = rng.standard_normal(64)
    a, b = 2.5, -0.3
    lhs = dft(SignalRecord(a * x + b * y, 1.0)).bins
    rhs = a * dft(SignalRecord(x, 1.0)).bins + b * dft(SignalRecord(y, 1.0)).bins
    assert np.allclose(lhs, rhs, atol=1e-10)
