"""Model zoo: Rowen-style gas-turbine GCV-to-power builder, the textbook
pair, a random stable-plant generator, and plant config loading.
"""

from dataclasses import dataclass

import numpy as np
import yaml

from .errors import InvalidParameters
from .lti import (
    DiscreteTransferFunction,
    discretize_first_order_lag,
    freq_response,
    pure_delay,
    series,
    static_gain,
)


@dataclass(frozen=True)
class RowenParameters:
    """Incremental GCV-to-power parameters: two first-order lags, a
    combustion delay and the torque-block gain."""

    t_fuel: float          # fuel-system time constant [s]
    k_fuel_feedback: float
    t_combustion_delay: float  # [s]
    t_compressor: float    # compressor-discharge time constant [s]
    a_torque: float = 0.0  # affine torque terms; drop out of the
    b_torque: float = 1.0  # linearized plant except for b_torque
    c_torque: float = 0.0
    sample_time: float = 0.05

    def __post_init__(self):
        if self.t_fuel <= 0 or self.t_compressor <= 0 or self.sample_time <= 0:
            raise InvalidParameters("time constants and sample_time must be > 0")
        if self.t_combustion_delay < 0:
            raise InvalidParameters("combustion delay must be >= 0")


def rowen_gcv_to_power(p):
    """Discretize B e^{-s Tcr} / ((Tf s + 1 + Kf)(Tcd s + 1)).

    The fuel lag is rewritten in unity-denominator form (gain B/(1+Kf),
    time constant Tf/(1+Kf)), each lag is discretized exactly by ZOH, and
    the dead time is rounded to whole samples.
    """
    scale = 1.0 + p.k_fuel_feedback
    if scale <= 0:
        raise InvalidParameters("1 + fuel feedback gain must be positive")
    if p.b_torque == 0.0:
        return DiscreteTransferFunction(
            np.array([0.0]), np.array([1.0]), 0, p.sample_time
        )
    fuel = discretize_first_order_lag(
        p.b_torque / scale, p.t_fuel / scale, p.sample_time
    )
    compressor = discretize_first_order_lag(1.0, p.t_compressor, p.sample_time)
    delay = pure_delay(
        int(round(p.t_combustion_delay / p.sample_time)), p.sample_time
    )
    return series(delay, series(fuel, compressor))


def textbook_pair():
    """G1 = (1 - z^-1)/(1 - 0.8 z^-1) and G2 = 1.8 z^-1 G1, Ts = 1 s."""
    g1 = DiscreteTransferFunction(
        np.array([1.0, -1.0]), np.array([1.0, -0.8]), 0, 1.0
    )
    g2 = series(series(static_gain(1.8, 1.0), pure_delay(1, 1.0)), g1)
    return g1, g2


def _poly_from_roots(roots):
    c = np.array([1.0 + 0j])
    for r in roots:
        c = np.convolve(c, np.array([1.0, -r]))
    return c.real


def random_stable_plant(rng, max_order=3, sample_time=1.0):
    """Random stable plant: poles in the 0.95 disk (conjugate pairs),
    zeros in the 1.2 disk, sup gain scaled into [0.5, 2].
    """
    if not 1 <= max_order <= 6:
        raise ValueError("max_order must be in [1, 6]")
    order = int(rng.integers(1, max_order + 1))

    def draw(radius, count):
        roots = []
        while len(roots) < count:
            if count - len(roots) >= 2 and rng.random() < 0.5:
                r = radius * np.sqrt(rng.random())
                th = np.pi * rng.random()
                z = r * np.exp(1j * th)
                roots.extend([z, np.conj(z)])
            else:
                roots.append(complex(radius * (2 * rng.random() - 1)))
        return roots

    den = _poly_from_roots(draw(0.95, order))
    num = _poly_from_roots(draw(1.2, int(rng.integers(0, order + 1))))
    tf = DiscreteTransferFunction(num, den, 0, sample_time)
    from .oracle import _sup_on_circle

    peak, _ = _sup_on_circle(lambda w: np.abs(freq_response(tf, w)), 4096)
    target = 0.5 + 1.5 * rng.random()
    return DiscreteTransferFunction(
        num * (target / peak), den, 0, sample_time
    )


# Built-in plant slots. HDGT parameter values live in external references
# and are not shipped; the *_placeholder sets below are editable stand-ins
# with plausible magnitudes so the pipeline runs end to end.
ROWEN_PLACEHOLDERS = {
    "nominal_true": RowenParameters(0.4, 0.0, 0.1, 0.2, b_torque=1.3),
    "nominal_model": RowenParameters(0.45, 0.05, 0.1, 0.25, b_torque=1.2),
    "frame9f": RowenParameters(0.4, 0.0, 0.1, 0.15, b_torque=1.15),
    "frame6f": RowenParameters(0.35, 0.0, 0.1, 0.3, b_torque=1.3),
}


def builtin_plants():
    g1, g2 = textbook_pair()
    plants = {"textbook_g1": g1, "textbook_g2": g2}
    for name, params in ROWEN_PLACEHOLDERS.items():
        plants[f"rowen_{name}"] = rowen_gcv_to_power(params)
    return plants


def load_plant(spec):
    """Resolve a plant spec: a built-in name or a YAML config path with
    keys numerator, denominator, delay_samples, sample_time and
    optionally stable_expected or Rowen parameters.
    """
    builtins = builtin_plants()
    if spec in builtins:
        return builtins[spec]
    with open(spec) as fh:
        data = yaml.safe_load(fh)
    if "t_fuel" in data:
        return rowen_gcv_to_power(RowenParameters(**data))
    tf = DiscreteTransferFunction(
        np.asarray(data["numerator"], dtype=float),
        np.asarray(data["denominator"], dtype=float),
        int(data.get("delay_samples", 0)),
        float(data.get("sample_time", 1.0)),
    )
    if data.get("stable_expected", False) and not tf.is_stable():
        raise InvalidParameters(f"plant {spec} expected stable but is not")
    return tf
