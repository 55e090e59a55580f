"""Distortion-factor landscapes under a fixed attribute-error budget.

An error budget U = P(a_hat != a, y=1) = s*g1 + r*g2 pins (g1, g2) to a
line segment; these helpers evaluate gamma along it and locate its
maximizers."""
import logging
log = logging.getLogger('gamma')

from enforce_typing import enforce_types
import numpy
import pandas as pd
import typing

from core import estimators
from core.errors import InfeasibleBudget, ZeroDenominator
from util.constants import DEFAULT_GRID_STEP
from util.mathutil import gridWithEndpoints
from util.strutil import StrMixin

#grid points within this of the max count as maximizers
ARGMAX_TOL = 1e-12

@enforce_types
class ErrorBudget(StrMixin):
    """
    @description
      Total attribute-error mass U on y=1, with base rates r and s
      (s defaults to r, the equal-rates case).

    @attributes
      U -- s*g1 + r*g2
      r, s -- P(y=1, a=1), P(y=1, a=0)
    """

    def __init__(self, U: float, r: float, s: typing.Optional[float] = None):
        if s is None:
            s = r
        if not (r > 0.0 and s > 0.0):
            raise InfeasibleBudget("need r > 0 and s > 0, got %g, %g" % (r, s))
        if U < 0.0 or U > r + s:
            raise InfeasibleBudget("U=%g outside [0, r+s=%g]" % (U, r + s))
        self.U = U
        self.r = r
        self.s = s

    def equalRates(self) -> bool:
        return self.r == self.s

    def feasibleInterval(self) -> typing.Tuple[float, float]:
        """Range of g1 for which g2 = (U - s*g1)/r lies in [0,1]"""
        lo = max(0.0, (self.U - self.r) / self.s)
        hi = min(1.0, self.U / self.s)
        return lo, hi

    def g2Of(self, g1):
        """Works on floats and arrays. Clipped to [0,1] against roundoff."""
        return numpy.clip((self.U - self.s * g1) / self.r, 0.0, 1.0)

@enforce_types
class GammaScan(StrMixin):
    """gamma along the budget line, one row per grid point of g1.
    Points where gamma is 0/0 get gamma=0 and are marked degenerate."""

    __STR_GIVES_NEWLINE__ = True

    def __init__(self, budget: ErrorBudget, step: float, g1: numpy.ndarray,
                 g2: numpy.ndarray, gamma: numpy.ndarray,
                 degenerate: numpy.ndarray):
        assert len(g1) == len(g2) == len(gamma) == len(degenerate) > 0
        assert ((gamma >= 0.0) & (gamma <= 1.0)).all()
        self.budget = budget
        self.step = step
        self.g1 = g1
        self.g2 = g2
        self.gamma = gamma
        self.degenerate = degenerate

    def __len__(self) -> int:
        return len(self.g1)

    def maxGamma(self) -> float:
        return float(self.gamma.max())

    def argmax(self) -> typing.List[typing.Tuple[float, float]]:
        """All grid points attaining the max gamma, in g1 order"""
        idx = numpy.flatnonzero(self.gamma >= self.gamma.max() - ARGMAX_TOL)
        return [(float(self.g1[i]), float(self.g2[i])) for i in idx]

    def endpoints(self) -> typing.List[typing.Tuple[float, float]]:
        return [(float(self.g1[0]), float(self.g2[0])),
                (float(self.g1[-1]), float(self.g2[-1]))]

    def toDataFrame(self) -> pd.DataFrame:
        return pd.DataFrame({'g1': self.g1, 'g2': self.g2,
                             'gamma': self.gamma})

    def toCsv(self, path: str) -> None:
        self.toDataFrame().to_csv(path, index=False, float_format='%.12g')
        log.info("Wrote %d-point gamma curve to %s", len(self), path)

    def toDict(self) -> dict:
        return {'r': self.budget.r, 's': self.budget.s, 'U': self.budget.U,
                'step': self.step, 'n_points': len(self),
                'feasible_interval': list(self.budget.feasibleInterval()),
                'max_gamma': self.maxGamma(),
                'argmax': [list(p) for p in self.argmax()],
                'n_degenerate': int(self.degenerate.sum())}

@enforce_types
def gammaScan(r: float, s: float, U: float,
              step: float = DEFAULT_GRID_STEP,
              chunk_size: typing.Optional[int] = None) -> GammaScan:
    """
    @description
      Evaluate gamma along s*g1 + r*g2 = U, on a grid over the feasible
      g1 interval with both endpoints always included.

    @arguments
      r, s, U -- base rates and error budget
      step -- grid width in g1
      chunk_size -- evaluate the grid in pieces of this many points; the
        result does not depend on it

    @return
      GammaScan

    @raises
      InfeasibleBudget -- no (g1, g2) in the unit square meets the budget
    """
    if step <= 0.0:
        raise ValueError("step must be positive, got %g" % step)
    budget = ErrorBudget(U, r, s)
    lo, hi = budget.feasibleInterval()
    if lo > hi:
        raise InfeasibleBudget("empty feasible interval [%g, %g]" % (lo, hi))

    g1 = gridWithEndpoints(lo, hi, step)
    g2 = budget.g2Of(g1)
    if chunk_size is None:
        chunks = [slice(0, len(g1))]
    else:
        assert chunk_size >= 1
        chunks = [slice(i, i + chunk_size)
                  for i in range(0, len(g1), chunk_size)]
    gamma = numpy.concatenate(
        [estimators.distortionFactors(g1[c], g2[c], r, s) for c in chunks])

    degenerate = numpy.isnan(gamma)
    gamma = numpy.where(degenerate, 0.0, gamma)
    if degenerate.any():
        log.debug("gamma is 0/0 at %d grid points", int(degenerate.sum()))
    log.debug("scanned %d points, r=%g s=%g U=%g", len(g1), r, s, U)
    return GammaScan(budget, step, g1, g2, gamma, degenerate)

@enforce_types
def gammaEqualRates(g1: float, g2: float) -> float:
    """gamma when r = s: |1-g1-g2| / (1 - (g1-g2)^2)"""
    den = 1.0 - (g1 - g2) ** 2
    if den == 0.0:
        raise ZeroDenominator("1 - (g1-g2)^2")
    return min(abs(1.0 - g1 - g2) / den, 1.0)

@enforce_types
def optimalErrorSplit(U: float, r: float) -> typing.List[typing.Tuple[float, float]]:
    """
    Global maximizers of gamma over s*g1 + r*g2 = U when r = s.

    U <= r: (0, U/r) and (U/r, 0). U >= r: (U/r-1, 1) and (1, U/r-1).
    At U = r both branches give {(0, 1), (1, 0)} and gamma is 0 along the
    whole line. Returned sorted with duplicates removed.
    """
    budget = ErrorBudget(U, r)
    u = U / r
    points = set()
    if U <= r:
        points |= {(0.0, u), (u, 0.0)}
    if U >= r:
        points |= {(u - 1.0, 1.0), (1.0, u - 1.0)}
    if U == r:
        log.info("U = r: gamma vanishes on the whole budget line")
    log.debug("optimal split for %s: %s", budget, sorted(points))
    return sorted(points)
