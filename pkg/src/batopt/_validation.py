"""Input validation helpers shared by the config, estimator, and CLI layers."""

from __future__ import annotations

import math

import numpy as np


def check_scalar(name, value, *, ge=None, gt=None, le=None, lt=None):
    """Validate a real scalar against open/closed interval constraints.

    Returns the value as a float. Raises ValueError naming the offending
    argument, so callers can surface messages like ``alpha must be <= 1``.
    """
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ValueError(f"{name} must be a real number, got {value!r}") from None
    if math.isnan(value):
        raise ValueError(f"{name} must not be NaN")
    if ge is not None and not value >= ge:
        raise ValueError(f"{name} must be >= {ge}, got {value}")
    if gt is not None and not value > gt:
        raise ValueError(f"{name} must be > {gt}, got {value}")
    if le is not None and not value <= le:
        raise ValueError(f"{name} must be <= {le}, got {value}")
    if lt is not None and not value < lt:
        raise ValueError(f"{name} must be < {lt}, got {value}")
    return value


def check_int(name, value, *, ge=None, gt=None, le=None):
    """Validate an integer-valued argument and return it as int."""
    if isinstance(value, bool) or (not isinstance(value, (int, np.integer))):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if ge is not None and value < ge:
        raise ValueError(f"{name} must be >= {ge}, got {value}")
    if gt is not None and value <= gt:
        raise ValueError(f"{name} must be > {gt}, got {value}")
    if le is not None and value > le:
        raise ValueError(f"{name} must be <= {le}, got {value}")
    return value


def check_vector(name, x, *, length=None):
    """Coerce to a 1-D float64 array, optionally checking its length."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be a 1-D vector, got shape {arr.shape}")
    if length is not None and arr.shape[0] != length:
        raise ValueError(f"{name} must have length {length}, got {arr.shape[0]}")
    return arr


def check_same_length(pairs):
    """Check that all named vectors share one length; returns that length.

    ``pairs`` is an iterable of (name, array) tuples.
    """
    pairs = list(pairs)
    lengths = {name: len(arr) for name, arr in pairs}
    if len(set(lengths.values())) > 1:
        detail = ", ".join(f"{n}={l}" for n, l in lengths.items())
        raise ValueError(f"dimension mismatch: {detail}")
    return next(iter(lengths.values()))


def check_box(lower, upper):
    """Validate box bounds: 1-D, equal length, lower < upper componentwise."""
    lower = check_vector("lower_bounds", lower)
    upper = check_vector("upper_bounds", upper, length=len(lower))
    if not np.all(lower < upper):
        raise ValueError("lower_bounds must be strictly below upper_bounds componentwise")
    return lower, upper


def check_choice(name, value, options):
    """Validate membership in a fixed set of string options."""
    if value not in options:
        raise ValueError(f"{name} must be one of {sorted(options)}, got {value!r}")
    return value
