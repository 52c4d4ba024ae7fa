import numpy as np
import pytest

from nugap.errors import NonPositiveTimeConstant, PoleOnUnitCircle
from nugap.lti import (
    DiscreteTransferFunction,
    NoiseSpec,
    SignalRecord,
    discretize_first_order_lag,
    freq_response,
    impulse_response,
    pure_delay,
    series,
    simulate_circular,
    simulate_transient,
    static_gain,
)
from nugap.plants import random_stable_plant, textbook_pair


def test_invariants_enforced():
    with pytest.raises(ValueError):
        DiscreteTransferFunction(np.array([1.0]), np.array([0.0, 1.0]))
    with pytest.raises(ValueError):
        DiscreteTransferFunction(np.array([np.nan]), np.array([1.0]))
    with pytest.raises(ValueError):
        SignalRecord(np.array([1.0, np.inf]))
    with pytest.raises(ValueError):
        NoiseSpec(-0.1)


def test_freq_response_textbook_values():
    g1, g2 = textbook_pair()
    assert abs(freq_response(g1, 0.0)) < 1e-15
    assert freq_response(g1, np.pi) == pytest.approx(2.0 / 1.8, abs=1e-12)
    assert freq_response(g2, np.pi) == pytest.approx(-2.0, abs=1e-12)


def test_freq_response_pole_on_circle():
    integrator = DiscreteTransferFunction(np.array([1.0]), np.array([1.0, -1.0]))
    with pytest.raises(PoleOnUnitCircle):
        freq_response(integrator, 0.0)


def test_transient_impulse_recursion():
    g1, _ = textbook_pair()
    imp = SignalRecord(np.eye(1, 8)[0], 1.0)
    y = simulate_transient(g1, imp).samples
    assert np.allclose(y[:3], [1.0, -0.2, -0.16], atol=1e-12)


def test_transient_zero_plant_and_delay():
    zero = static_gain(0.0)
    u = SignalRecord(np.arange(6.0), 1.0)
    assert np.all(simulate_transient(zero, u).samples == 0.0)
    d = pure_delay(1)
    imp = SignalRecord(np.eye(1, 5)[0], 1.0)
    assert np.allclose(simulate_transient(d, imp).samples, [0, 1, 0, 0, 0])


def test_circular_identity_and_eigenfunction():
    ident = static_gain(1.0)
    rng = np.random.default_rng(1)
    x = SignalRecord(rng.standard_normal(16), 1.0)
    assert np.allclose(simulate_circular(ident, x).samples, x.samples, atol=1e-12)

    g1, _ = textbook_pair()
    n, k = 64, 5
    omega = 2 * np.pi * k / n
    t = np.arange(n)
    u = SignalRecord(np.cos(omega * t), 1.0)
    resp = freq_response(g1, omega)
    expect = np.real(resp * np.exp(1j * omega * t))
    assert np.allclose(simulate_circular(g1, u).samples, expect, atol=1e-10)


def test_circular_matches_transient_tail():
    g1, _ = textbook_pair()
    rng = np.random.default_rng(7)
    u = SignalRecord(rng.standard_normal(1000), 1.0)
    yt = simulate_transient(g1, u).samples
    yc = simulate_circular(g1, u).samples
    tail = slice(500, None)
    rms = np.sqrt(np.mean(yt[tail] ** 2))
    diff = np.sqrt(np.mean((yt[tail] - yc[tail]) ** 2))
    assert diff <= 0.01 * rms


def test_first_order_lag_discretization():
    lag = discretize_first_order_lag(1.0, 1.0, 1.0)
    assert lag.denominator_coeffs[1] == pytest.approx(-np.exp(-1.0), abs=1e-15)
    assert lag.numerator_coeffs[0] == pytest.approx(1.0 - np.exp(-1.0), abs=1e-15)

    near_static = discretize_first_order_lag(1.0, 1.0, 100.0)
    assert abs(near_static.denominator_coeffs[1]) < 1e-40

    for gain, tc, ts in [(2.0, 0.3, 0.05), (-1.5, 4.0, 1.0), (0.7, 10.0, 0.1)]:
        lag = discretize_first_order_lag(gain, tc, ts)
        assert freq_response(lag, 0.0) == pytest.approx(gain, abs=1e-12)

    with pytest.raises(NonPositiveTimeConstant):
        discretize_first_order_lag(1.0, 0.0, 1.0)


def test_series_composition():
    g1, _ = textbook_pair()
    ident = static_gain(1.0, 1.0)
    cascade = series(g1, ident)
    assert np.allclose(cascade.numerator_coeffs, g1.numerator_coeffs)
    assert np.allclose(cascade.denominator_coeffs, g1.denominator_coeffs)

    assert series(pure_delay(1), pure_delay(1)).input_delay == 2

    lag_a = discretize_first_order_lag(1.0, 1.0, 0.1)
    lag_b = discretize_first_order_lag(2.0, 0.5, 0.1)
    combo = series(lag_a, lag_b)
    assert np.allclose(
        combo.denominator_coeffs,
        np.convolve(lag_a.denominator_coeffs, lag_b.denominator_coeffs),
    )
    rng = np.random.default_rng(3)
    for omega in rng.uniform(0, np.pi, 16):
        assert freq_response(combo, omega) == pytest.approx(
            freq_response(lag_a, omega) * freq_response(lag_b, omega), abs=1e-12
        )


def test_impulse_response_matches_simulation():
    g1, g2 = textbook_pair()
    for tf in (g1, g2):
        imp = np.eye(1, 32)[0]
        ref = simulate_transient(tf, SignalRecord(imp, 1.0)).samples
        assert np.array_equal(impulse_response(tf, 32), ref)


def test_conjugate_symmetry_property():
    rng = np.random.default_rng(11)
    for _ in range(4):
        tf = random_stable_plant(rng, 4)
        for omega in rng.uniform(0, np.pi, 16):
            assert freq_response(tf, -omega) == pytest.approx(
                np.conj(freq_response(tf, omega)), abs=1e-12
            )


def test_simulation_linearity():
    rng = np.random.default_rng(12)
    tf = random_stable_plant(rng, 3)
    u = rng.standard_normal(256)
    v = rng.standard_normal(256)
    alpha, beta = 1.7, -0.4
    ya = simulate_transient(tf, SignalRecord(alpha * u + beta * v, 1.0)).samples
    yb = (
        alpha * simulate_transient(tf, SignalRecord(u, 1.0)).samples
        + beta * simulate_transient(tf, SignalRecord(v, 1.0)).samples
    )
    assert np.allclose(ya, yb, atol=1e-10)


def test_delay_consistency_exact():
    rng = np.random.default_rng(13)
    base = random_stable_plant(rng, 3)
    d = 4
    delayed = DiscreteTransferFunction(
        base.numerator_coeffs, base.denominator_coeffs, d, base.sample_time
    )
    u = rng.standard_normal(128)
    shifted = np.concatenate([np.zeros(d), u[:-d]])
    y1 = simulate_transient(delayed, SignalRecord(u, 1.0)).samples
    y2 = simulate_transient(base, SignalRecord(shifted, 1.0)).samples
    assert np.array_equal(y1, y2)


def test_stable_plants_impulse_tail_decays():
    rng = np.random.default_rng(14)
    for _ in range(5):
        tf = random_stable_plant(rng, 3)
        assert tf.is_stable()
        poles = tf.poles()
        rho = np.max(np.abs(poles)) if poles.size else 0.0
        n = max(int(50.0 / (1.0 - rho)), 16)
        g = impulse_response(tf, n)
        tail = np.max(np.abs(g[n // 2:]))
        assert tail < 1e-6 * np.max(np.abs(g))
