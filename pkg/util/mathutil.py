import logging
log = logging.getLogger('mathutil')

from enforce_typing import enforce_types
from fractions import Fraction
import math
import numpy
import typing

Number = typing.Union[int, float, Fraction]

def isNumber(x) -> bool:
    return (isinstance(x, (int, float, Fraction)) and not isinstance(x, bool))

def isProb(x) -> bool:
    return isNumber(x) and math.isfinite(float(x)) and 0.0 <= x <= 1.0

@enforce_types
def ratio(num: Number, den: Number) -> Number:
    """num/den, exactly (as a Fraction) when both are integer counts or
    Fractions, else as a float. Caller guarantees den != 0."""
    assert den != 0, "caller must check for an empty conditioning event"
    if isinstance(num, (int, Fraction)) and isinstance(den, (int, Fraction)):
        return Fraction(num) / Fraction(den)
    return float(num) / float(den)

@enforce_types
def clampProb(x: float) -> typing.Tuple[float, bool]:
    """Clamp to [0,1]. Returns (clamped value, whether clamping happened)"""
    if x < 0.0:
        return 0.0, True
    if x > 1.0:
        return 1.0, True
    return x, False

@enforce_types
def gridWithEndpoints(lo: float, hi: float, step: float) -> numpy.ndarray:
    """Points lo, lo+step, ... plus hi itself, even when (hi-lo) is not
    divisible by step"""
    assert step > 0.0
    assert hi >= lo
    n = int(math.floor((hi - lo) / step + 1e-9))
    pts = lo + step * numpy.arange(n + 1)
    pts = pts[pts < hi - 1e-12]
    return numpy.append(pts, hi)
