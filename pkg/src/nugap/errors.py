"""Exception hierarchy shared across the package."""


class NugapError(Exception):
    """Base class for all package-specific errors."""


class PoleOnUnitCircle(NugapError):
    """Frequency response requested at (or too close to) a denominator root."""


class PoleOnGrid(NugapError):
    """Circular simulation requested with a pole on a DFT grid point."""


class NonFiniteOutput(NugapError):
    """Simulation produced inf/nan samples (unstable plant or overflow)."""


class NonPositiveTimeConstant(NugapError):
    """ZOH discretization requires a strictly positive time constant."""


class NonNegligibleImaginaryPart(NugapError):
    """IDFT of a supposedly conjugate-symmetric spectrum was not real."""


class PathThroughOrigin(NugapError):
    """Winding number undefined: the sampled curve hits the origin."""


class CoarseGrid(NugapError):
    """Phase steps too large for a reliable winding count."""


class LengthMismatch(NugapError):
    """Vectors of incompatible lengths passed to an accumulator."""


class DegenerateUpdate(NugapError):
    """Power-iteration update collapsed to zero despite distinct plants."""


class DeadPeakBin(NugapError):
    """Peak diagnostics requested where the input spectrum is negligible."""


class InvalidParameters(NugapError):
    """Plant builder given out-of-range parameters."""
