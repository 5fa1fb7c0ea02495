"""Overflow-free hyperbolic ratios.

Every ratio is rewritten so that only exp of non-positive arguments is
evaluated; the results stay finite for arguments up to the float range of
exp(+x) itself.
"""

import math

import numpy as np

from .model import DomainError


def cosh_ratio(a, b):
    """cosh(a) / cosh(b)."""
    a = np.abs(a)
    b = np.abs(b)
    return np.exp(a - b) * (1.0 + np.exp(-2.0 * a)) / (1.0 + np.exp(-2.0 * b))


def sinh_cosh_ratio(a, b):
    """sinh(a) / cosh(b)."""
    sa = np.sign(a)
    a = np.abs(a)
    b = np.abs(b)
    return sa * np.exp(a - b) * (-np.expm1(-2.0 * a)) / (1.0 + np.exp(-2.0 * b))


def one_minus_tanh(h: float) -> float:
    """1 - tanh(h) for h >= 0 without cancellation."""
    e = math.exp(-2.0 * h)
    return 2.0 * e / (1.0 + e)


def inv_sinh(t: float) -> float:
    """1 / sinh(t) for t > 0; underflows to 0 gracefully."""
    return 2.0 * math.exp(-t) / (-math.expm1(-2.0 * t))


def atanh_from_parts(one_plus: float, one_minus: float) -> float:
    """atanh(y) given ``1 + y`` and ``1 - y`` computed separately.

    Passing ``1 - y`` in cancellation-free form keeps full precision when
    y is close to 1. The domain |y| < 1 is checked, never clamped.
    """
    if not (one_plus > 0.0 and one_minus > 0.0):
        raise DomainError(f"atanh argument outside (-1, 1): 1+y={one_plus!r}, 1-y={one_minus!r}")
    return 0.5 * (math.log(one_plus) - math.log(one_minus))
