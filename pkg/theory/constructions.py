"""Exact distributions showing where proxy-based bias estimates break:
a Bayes-optimal attribute classifier that manufactures bias out of none,
and two distributions with different true bias that look the same
through any attribute classifier."""
import logging
log = logging.getLogger('constructions')

from enforce_typing import enforce_types
import numpy
import pandas as pd
import typing

from core.errors import BayesOptimalInput, InvalidParams
from core.JointTable import JointTable, tableFromCellMasses
from util.strutil import StrMixin

#====================================================================
#Bayes-optimal attribute classifier counterexample

#one row per equal-mass atom; y_hat = x2, a_hat is the Bayes-optimal
# attribute prediction given (x1, x2)
_COUNTEREXAMPLE_ROWS = [
    #x1, x2, a, y, a_hat
    (1, 0, 1, 1, 0),
    (1, 1, 1, 1, 1),
    (1, 1, 0, 1, 1),
    (1, 0, 0, 1, 0),
    (1, 1, 1, 0, 1),
    (1, 0, 0, 0, 0),
]

@enforce_types
def bayesCounterexampleRows() -> pd.DataFrame:
    """Six atoms of mass 1/6 each, columns x1, x2, a, y, y_hat, a_hat"""
    df = pd.DataFrame(_COUNTEREXAMPLE_ROWS,
                      columns=['x1', 'x2', 'a', 'y', 'a_hat'])
    df['y_hat'] = df['x2']
    return df[['x1', 'x2', 'a', 'y', 'y_hat', 'a_hat']]

@enforce_types
def bayesOptimalAttribute(rows: pd.DataFrame) -> numpy.ndarray:
    """argmax_a P(a | x1, x2) per row, from equal-mass rows.
    Ties (P(a=1|x) = 1/2) come back as -1."""
    p_a1 = rows.groupby(['x1', 'x2'])['a'].transform('mean').to_numpy()
    pred = numpy.where(p_a1 > 0.5, 1, 0)
    return numpy.where(p_a1 == 0.5, -1, pred)

@enforce_types
def bayesCounterexample() -> JointTable:
    """
    Exact integer-count table of the counterexample: f = x2 has zero
    true bias, yet the Bayes-optimal attribute classifier yields a
    naive estimate of one.
    """
    rows = bayesCounterexampleRows()
    derived = bayesOptimalAttribute(rows)
    assert (derived == rows['a_hat'].to_numpy()).all(), \
        "a_hat column is not Bayes optimal"
    masses: dict = {}
    for row in rows.itertuples(index=False):
        key = (row.y, row.a, row.y_hat, row.a_hat)
        masses[key] = masses.get(key, 0) + 1
    return tableFromCellMasses(masses)

#====================================================================
#indistinguishable pair

BALANCED, FAIR = 'balanced', 'fair'

@enforce_types
class XJoint(StrMixin):
    """
    @description
      Exact distribution over (x, y, a) for a finite feature space, plus a
      label classifier f and optionally an attribute classifier h.

    @attributes
      masses -- {(x, y, a): probability}
      f -- {x: 0/1}
      h -- {x: 0/1} or None
    """

    def __init__(self, masses: dict, f: dict, h: typing.Optional[dict] = None):
        assert all(m >= 0.0 for m in masses.values())
        self.masses = masses
        self.f = f
        self.h = h

    def marginalXY(self) -> dict:
        return _marginal(self.masses, lambda x, y, a: (x, y))

    def marginalXA(self) -> dict:
        return _marginal(self.masses, lambda x, y, a: (x, a))

    def toJointTable(self) -> JointTable:
        """(y, a, y_hat=f(x), a_hat=h(x)); a_hat is collapsed without h"""
        cells = numpy.zeros((2, 2, 2, 2))
        for (x, y, a), m in self.masses.items():
            a_hat = 0 if self.h is None else self.h[x]
            cells[y, a, self.f[x], a_hat] += m
        return JointTable.fromProbs(cells, has_a_hat=self.h is not None)

def _marginal(masses: dict, keyfunc) -> dict:
    out: dict = {}
    for (x, y, a), m in masses.items():
        k = keyfunc(x, y, a)
        out[k] = out.get(k, 0.0) + m
    return out

@enforce_types
class IndistinguishablePair(StrMixin):
    """Q1 (zero true bias) and Q2 (true bias one), sharing the (x, y)
    marginal. `marginals_match` says whether (x, a) marginals agree too."""

    def __init__(self, q1: XJoint, q2: XJoint, mode: str,
                 marginals_match: bool):
        self.q1 = q1
        self.q2 = q2
        self.mode = mode
        self.marginals_match = marginals_match

@enforce_types
def indistinguishablePair(base: dict, f: dict,
                          h: typing.Optional[dict] = None,
                          mode: str = BALANCED) -> IndistinguishablePair:
    """
    @description
      Build Q1, Q2 over (x, y, a) from a base joint over (x, y).
      On y=1, Q1 draws a by a fair coin while Q2 sets a = f(x), so f has
      true bias 0 under Q1 and 1 under Q2.

      On y=0, mode 'fair' uses a fair coin in both. Mode 'balanced' picks
      per-x probabilities q1(x), q2(x) of a=1 on y=0 so that the (x, a)
      marginals of Q1 and Q2 agree too; with m1, m0 the masses of (x, y=1)
      and (x, y=0) this needs m0 >= m1/2 for every x. Where it is
      infeasible the fair coin is used and marginals_match is False.

      Since y, f(x) and h(x) depend only on (x, y), any attribute
      classifier h gives the same naive estimate on Q1 and Q2.

    @arguments
      base -- {(x, y): mass} with y in {0, 1}
      f -- {x: 0/1} label classifier
      h -- optional {x: 0/1} attribute classifier
      mode -- 'balanced' or 'fair'

    @return
      IndistinguishablePair

    @raises
      BayesOptimalInput -- {f=1, y=1} or {f=0, y=1} has no mass
    """
    if mode not in (BALANCED, FAIR):
        raise InvalidParams("unknown mode '%s'" % mode)
    xs = sorted({x for (x, _) in base})
    for x in xs:
        if x not in f:
            raise InvalidParams("f undefined at x=%s" % (x,))
        if h is not None and x not in h:
            raise InvalidParams("h undefined at x=%s" % (x,))

    mass_A = sum(m for (x, y), m in base.items() if y == 1 and f[x] == 1)
    mass_B = sum(m for (x, y), m in base.items() if y == 1 and f[x] == 0)
    if mass_A <= 0.0 or mass_B <= 0.0:
        raise BayesOptimalInput(
            "need mass on both {f=1,y=1} (%g) and {f=0,y=1} (%g)"
            % (mass_A, mass_B))

    q1: dict = {}
    q2: dict = {}
    marginals_match = True
    for x in xs:
        m1 = base.get((x, 1), 0.0)
        m0 = base.get((x, 0), 0.0)
        _split(q1, x, 1, m1, 0.5)
        _split(q2, x, 1, m1, float(f[x]))

        p1 = p2 = 0.5
        if mode == BALANCED and m1 > 0.0:
            if m0 * 2.0 >= m1:
                d = 0.5 * m1 / m0
                sign = 1.0 if f[x] == 1 else -1.0
                p1, p2 = 0.5 + sign * d / 2.0, 0.5 - sign * d / 2.0
            else:
                marginals_match = False
                log.warning("x=%s: y=0 mass %g < half of y=1 mass %g; "
                            "(x,a) marginals will differ", x, m0, m1)
        elif mode == FAIR and m1 > 0.0:
            marginals_match = False
        _split(q1, x, 0, m0, p1)
        _split(q2, x, 0, m0, p2)

    return IndistinguishablePair(XJoint(q1, f, h), XJoint(q2, f, h),
                                 mode, marginals_match)

def _split(masses: dict, x, y: int, m: float, p_a1: float) -> None:
    """Spread mass m of (x, y) over a=1 (prob p_a1) and a=0"""
    masses[(x, y, 1)] = m * p_a1
    masses[(x, y, 0)] = m * (1.0 - p_a1)

@enforce_types
def randomBase(n_points: int, seed: int) -> typing.Tuple[dict, dict, dict]:
    """
    Seeded random (base, f, h) for indistinguishablePair: every x has
    positive y=1 mass and enough y=0 mass for the balanced mode; f and h
    each take both values.
    """
    if n_points < 2:
        raise InvalidParams("need at least 2 points, got %d" % n_points)
    rng = numpy.random.default_rng(seed)
    m1 = rng.uniform(0.1, 1.0, n_points)
    m0 = m1 * rng.uniform(0.5, 2.0, n_points)
    total = m1.sum() + m0.sum()
    base = {}
    for x in range(n_points):
        base[(x, 1)] = float(m1[x] / total)
        base[(x, 0)] = float(m0[x] / total)

    f_bits = rng.permutation(numpy.arange(n_points) % 2)
    h_bits = rng.permutation(numpy.arange(n_points) % 2)
    f = {x: int(f_bits[x]) for x in range(n_points)}
    h = {x: int(h_bits[x]) for x in range(n_points)}
    return base, f, h
