"""Offline figure scripts consuming the estimator CLI's CSV outputs."""

__version__ = "0.1.0"
