"""Seeded synthetic populations: exact tables and finite samples"""
import logging
log = logging.getLogger('generator')

from enforce_typing import enforce_types
import itertools
import numpy
import typing

from core import estimators
from core.errors import InvalidParams
from core.JointTable import JointTable, tableFromColumns
from core.PredictionRecord import PredictionRecord
from core.Rates import Rates
from simulate.SimParams import SimParams

@enforce_types
def cellErrorRates(params: SimParams, y: int, a: int) -> typing.Tuple[float, float]:
    """(u, v) = P(label error | y, a), P(attribute error | y, a)"""
    neg = params.neg_rates
    if y == 1:
        if a == 1:
            return 1.0 - params.alpha, params.g2
        return 1.0 - params.beta, params.g1
    if a == 1:
        return neg.alpha, neg.g2
    return neg.beta, neg.g1

@enforce_types
def coupledErrorJoint(u: float, v: float, coupling: float) -> numpy.ndarray:
    """
    2x2 joint of (label error U, attribute error V) with marginals u, v:
    the product measure plus coupling * ext * [[1, -1], [-1, 1]], where
    ext is the largest shift that keeps the decreased cells nonnegative.
    """
    p_v = numpy.array([1.0 - v, v])
    p_u = numpy.array([1.0 - u, u])
    joint = numpy.outer(p_u, p_v)
    if coupling > 0.0:
        ext = min(joint[0, 1], joint[1, 0])
    else:
        ext = min(joint[0, 0], joint[1, 1])
    joint += coupling * ext * numpy.array([[1.0, -1.0], [-1.0, 1.0]])
    return numpy.clip(joint, 0.0, 1.0)

@enforce_types
def cellMasses(params: SimParams) -> typing.Dict[typing.Tuple[int, int], float]:
    """P(y, a) for the four (y, a) cells"""
    neg_mass = 1.0 - params.r - params.s
    p_a1 = params.neg_rates.p_a1
    return {(1, 1): params.r, (1, 0): params.s,
            (0, 1): neg_mass * p_a1, (0, 0): neg_mass * (1.0 - p_a1)}

@enforce_types
def exactTable(params: SimParams) -> JointTable:
    """
    @description
      The infinite-sample table of `params`. With coupling 0, y_hat and
      a_hat are independent given (y, a), so ciViolation is 0 and the naive
      bias is what forwardNoisyEstimates predicts.

    @return
      probability JointTable summing to 1
    """
    cells = numpy.zeros((2, 2, 2, 2))
    for (y, a), mass in cellMasses(params).items():
        u, v = cellErrorRates(params, y, a)
        joint = coupledErrorJoint(u, v, params.coupling)
        for label_err, attr_err in itertools.product((0, 1), repeat=2):
            y_hat = y ^ label_err
            a_hat = a ^ attr_err
            cells[y, a, y_hat, a_hat] += mass * joint[label_err, attr_err]
    return JointTable.fromProbs(cells)

@enforce_types
def expectedNaive(params: SimParams) -> float:
    """Naive bias alpha_hat - beta_hat predicted by the forward map.
    Matches exactTable only when coupling is 0."""
    alpha_hat, beta_hat = estimators.forwardNoisyEstimates(
        params.alpha, params.beta, Rates(params.r, params.s),
        params.g1, params.g2)
    return alpha_hat - beta_hat

@enforce_types
def sampleColumns(params: SimParams, n: int) -> typing.Dict[str, numpy.ndarray]:
    """
    @description
      n i.i.d. draws from exactTable(params), seeded by params.seed, as
      columns y, a, y_hat, a_hat (int8) and score (float).

      The attribute score sits on the a_hat side of 0.5. Its distance from
      0.5 is 0.5 - |z| on correct attribute draws and |z| on wrong ones
      (z ~ N(0, score_noise), |z| capped at 0.5), so attribute errors crowd
      near 0.5.
    """
    if n < 1:
        raise InvalidParams("n must be >= 1, got %d" % n)
    rng = numpy.random.default_rng(params.seed)
    probs = exactTable(params).cells.ravel()
    probs = probs / probs.sum()

    flat = rng.choice(16, size=n, p=probs)
    y, a, y_hat, a_hat = numpy.unravel_index(flat, (2, 2, 2, 2))

    z = numpy.minimum(numpy.abs(rng.normal(0.0, 1.0, n)) * params.score_noise,
                      0.5)
    dist = numpy.where(a_hat != a, z, 0.5 - z)
    score = numpy.clip(numpy.where(a_hat == 1, 0.5 + dist, 0.5 - dist),
                       0.0, 1.0)
    log.debug("sampled %d rows (seed=%d)", n, params.seed)
    return {'y': y.astype(numpy.int8), 'a': a.astype(numpy.int8),
            'y_hat': y_hat.astype(numpy.int8),
            'a_hat': a_hat.astype(numpy.int8), 'score': score}

@enforce_types
def sampleRecords(params: SimParams, n: int) -> typing.List[PredictionRecord]:
    """sampleColumns as records with ids r0000000, r0000001, ..."""
    cols = sampleColumns(params, n)
    y, a, y_hat, a_hat, score = (cols[k] for k in
                                 ('y', 'a', 'y_hat', 'a_hat', 'score'))
    return [PredictionRecord("r%07d" % i, bool(y[i]), bool(y_hat[i]),
                             a_hat=bool(a_hat[i]), a=bool(a[i]),
                             score=float(score[i]))
            for i in range(n)]

@enforce_types
def sampleTable(params: SimParams, n: int) -> JointTable:
    """Count table of sampleRecords(params, n), without building records"""
    cols = sampleColumns(params, n)
    return tableFromColumns(cols['y'], cols['a'], cols['y_hat'],
                            cols['a_hat'])
