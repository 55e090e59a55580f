"""Closed-form bias estimators and corrections over a JointTable.

All estimators return signed values (alpha - beta style); callers take
abs() for the equal-opportunity bias. Count tables are evaluated with exact
Fractions internally and converted to float on the way out."""
import logging
log = logging.getLogger('estimators')

from enforce_typing import enforce_types
import itertools
import numpy
import typing

from core.errors import DegenerateDeltas, EmptyPredictedGroup, \
    MissingConditioningEvent, MissingGroup, UninvertibleDistortion, \
    ZeroDenominator
from core.ErrorProfile import ErrorProfile
from core.JointTable import JointTable
from core.Rates import Rates
from util.constants import DEGENERATE_THRESHOLD
from util.mathutil import Number, clampProb, ratio

ArrayOrFloat = typing.Union[float, numpy.ndarray]

#====================================================================
#group rates and components

@enforce_types
def rates(table: JointTable) -> Rates:
    """r = P(y=1, a=1), s = P(y=1, a=0). A zero rate is flagged on the
    result, not raised; a table without any y=1 mass raises MissingGroup."""
    total = table.total()
    if table.mass(y=1) == 0:
        raise MissingGroup("no mass on y=1")
    r = float(ratio(table.mass(y=1, a=1), total))
    s = float(ratio(table.mass(y=1, a=0), total))
    result = Rates(r, s)
    if result.missing_group:
        log.warning("rates: one group is empty (r=%g, s=%g)", r, s)
    return result

@enforce_types
def trueComponents(table: JointTable) -> typing.Tuple[float, float]:
    """(alpha, beta) = P(y_hat=1 | y=1, a=1), P(y_hat=1 | y=1, a=0)"""
    alpha, beta = _trueComponentsExact(table)
    return float(alpha), float(beta)

@enforce_types
def trueBias(table: JointTable) -> float:
    """alpha - beta, with true attributes"""
    alpha, beta = _trueComponentsExact(table)
    return float(alpha - beta)

def _trueComponentsExact(table: JointTable):
    alpha = _cond(table, {'y_hat': 1}, {'y': 1, 'a': 1}, MissingGroup)
    beta = _cond(table, {'y_hat': 1}, {'y': 1, 'a': 0}, MissingGroup)
    return alpha, beta

@enforce_types
def naiveComponents(table: JointTable) -> typing.Tuple[float, float]:
    """(alpha_hat, beta_hat) = P(y_hat=1 | y=1, a_hat=1),
    P(y_hat=1 | y=1, a_hat=0)"""
    alpha_hat, beta_hat = _naiveComponentsExact(table)
    return float(alpha_hat), float(beta_hat)

@enforce_types
def naiveBias(table: JointTable) -> float:
    """alpha_hat - beta_hat, with predicted attributes"""
    alpha_hat, beta_hat = _naiveComponentsExact(table)
    return float(alpha_hat - beta_hat)

def _naiveComponentsExact(table: JointTable):
    alpha_hat = _cond(table, {'y_hat': 1}, {'y': 1, 'a_hat': 1},
                      EmptyPredictedGroup)
    beta_hat = _cond(table, {'y_hat': 1}, {'y': 1, 'a_hat': 0},
                     EmptyPredictedGroup)
    return alpha_hat, beta_hat

def _cond(table: JointTable, event: dict, given: dict, err_class) -> Number:
    try:
        return table.conditional(event, given)
    except MissingConditioningEvent as e:
        raise err_class(str(e))

#====================================================================
#attribute classifier error profile

@enforce_types
def conditionalErrors(table: JointTable, smoothing: float = 0.0) \
        -> typing.Tuple[float, float]:
    """(g1, g2) = P(a_hat != a | a=0, y=1), P(a_hat != a | a=1, y=1).
    `smoothing` is an additive pseudo-count (default none)."""
    g1 = _smoothedRate(table, {'a_hat': 1}, {'y': 1, 'a': 0}, smoothing,
                       MissingGroup)
    g2 = _smoothedRate(table, {'a_hat': 0}, {'y': 1, 'a': 1}, smoothing,
                       MissingGroup)
    return float(g1), float(g2)

@enforce_types
def deltas(table: JointTable, smoothing: float = 0.0) \
        -> typing.Tuple[float, float]:
    """(delta1, delta2) = P(a_hat=1 | y_hat=1, a=0, y=1),
    P(a_hat=0 | y_hat=1, a=1, y=1). Raises MissingConditioningEvent naming
    the empty event."""
    d1 = _smoothedRate(table, {'a_hat': 1}, {'y': 1, 'a': 0, 'y_hat': 1},
                       smoothing, None)
    d2 = _smoothedRate(table, {'a_hat': 0}, {'y': 1, 'a': 1, 'y_hat': 1},
                       smoothing, None)
    return float(d1), float(d2)

def _smoothedRate(table: JointTable, event: dict, given: dict,
                  smoothing: float, err_class) -> Number:
    assert smoothing >= 0.0
    if smoothing == 0.0:
        if err_class is None:
            return table.conditional(event, given)
        return _cond(table, event, given, err_class)
    both = dict(given)
    both.update(event)
    num = float(table.mass(**both)) + smoothing
    den = float(table.mass(**given)) + 2.0 * smoothing
    return num / den

@enforce_types
def errorProfile(table: JointTable, smoothing: float = 0.0) -> ErrorProfile:
    """g1, g2 (required) plus delta1, delta2 (None if their event is empty)"""
    g1, g2 = conditionalErrors(table, smoothing)
    try:
        d1, d2 = deltas(table, smoothing)
    except MissingConditioningEvent as e:
        log.warning("deltas undefined: %s", e)
        d1, d2 = None, None
    return ErrorProfile(g1, g2, d1, d2)

#====================================================================
#correction under conditional independence

@enforce_types
def distortionFactor(g1: float, g2: float, rates: Rates) -> float:
    """
    gamma = |1-g1-g2| / ((s/r (1-g1) + g2) * (r/s (1-g2) + g1)), in [0,1].

    Evaluated as |1-g1-g2| r s / (P Q) with P = s(1-g1) + r g2 and
    Q = r(1-g2) + s g1, which is exactly 1 for a perfect classifier.
    """
    rates.requireBoth()
    r, s = rates.r, rates.s
    P = s * (1.0 - g1) + r * g2
    Q = r * (1.0 - g2) + s * g1
    if P == 0.0:
        raise ZeroDenominator("s/r (1-g1) + g2")
    if Q == 0.0:
        raise ZeroDenominator("r/s (1-g2) + g1")
    gamma = abs(1.0 - g1 - g2) * r * s / (P * Q)
    return min(gamma, 1.0) #roundoff only; gamma <= 1 analytically

@enforce_types
def forwardNoisyEstimates(alpha: float, beta: float, rates: Rates,
                          g1: float, g2: float) -> typing.Tuple[float, float]:
    """What (alpha_hat, beta_hat) become when true (alpha, beta) are seen
    through an attribute classifier with errors (g1, g2), assuming y_hat and
    a_hat are independent given (y, a)."""
    r, s = rates.r, rates.s
    den_hat1 = r * (1.0 - g2) + s * g1
    den_hat0 = r * g2 + s * (1.0 - g1)
    if den_hat1 == 0.0:
        raise ZeroDenominator("P(y=1, a_hat=1)")
    if den_hat0 == 0.0:
        raise ZeroDenominator("P(y=1, a_hat=0)")
    alpha_hat = (alpha * r * (1.0 - g2) + beta * s * g1) / den_hat1
    beta_hat = (alpha * r * g2 + beta * s * (1.0 - g1)) / den_hat0
    return alpha_hat, beta_hat

@enforce_types
def distortionFactors(g1: numpy.ndarray, g2: numpy.ndarray,
                      r: ArrayOrFloat, s: ArrayOrFloat) -> numpy.ndarray:
    """Elementwise distortionFactor for grids and Monte Carlo draws.
    Points where a denominator factor vanishes come back as nan."""
    r, s = numpy.asarray(r, dtype=float), numpy.asarray(s, dtype=float)
    P = s * (1.0 - g1) + r * g2
    Q = r * (1.0 - g2) + s * g1
    with numpy.errstate(divide='ignore', invalid='ignore'):
        gamma = numpy.abs(1.0 - g1 - g2) * r * s / (P * Q)
    gamma = numpy.where((P == 0.0) | (Q == 0.0), numpy.nan, gamma)
    return numpy.minimum(gamma, 1.0)

@enforce_types
def forwardNoisyEstimatesArray(alpha: numpy.ndarray, beta: numpy.ndarray,
                               r: ArrayOrFloat, s: ArrayOrFloat,
                               g1: numpy.ndarray, g2: numpy.ndarray) \
        -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
    """Elementwise forwardNoisyEstimates; nan where a denominator is 0"""
    r, s = numpy.asarray(r, dtype=float), numpy.asarray(s, dtype=float)
    den_hat1 = r * (1.0 - g2) + s * g1
    den_hat0 = r * g2 + s * (1.0 - g1)
    with numpy.errstate(divide='ignore', invalid='ignore'):
        alpha_hat = (alpha * r * (1.0 - g2) + beta * s * g1) / den_hat1
        beta_hat = (alpha * r * g2 + beta * s * (1.0 - g1)) / den_hat0
    return alpha_hat, beta_hat

@enforce_types
def correctedBias(naive_abs: float, gamma: float,
                  threshold: float = DEGENERATE_THRESHOLD) \
        -> typing.Tuple[float, bool]:
    """|alpha-beta| estimate = naive_abs / gamma, clamped to [0,1].
    Returns (estimate, clamped)."""
    assert naive_abs >= 0.0
    if gamma <= threshold:
        raise UninvertibleDistortion("gamma=%g <= %g" % (gamma, threshold))
    est, clamped = clampProb(naive_abs / gamma)
    if clamped:
        log.warning("corrected estimate %g clamped to %g",
                    naive_abs / gamma, est)
    return est, clamped

#====================================================================
#assumption-free inversion

@enforce_types
def generalCorrectedBias(alpha_hat: float, beta_hat: float,
                         profile: ErrorProfile, rates: Rates,
                         threshold: float = DEGENERATE_THRESHOLD) -> float:
    """
    Signed alpha-beta recovered from (alpha_hat, beta_hat), the error
    profile (g1, g2, delta1, delta2) and the rates (r, s):

      [alpha_hat (s/r g1 + 1 - g2)(1 - d1 + r/s d2)
       - beta_hat (1 - g1 + r/s g2)(1 + s/r d1 - d2)] / (1 - d1 - d2)

    An identity on any joint distribution; no independence needed.
    """
    rates.requireBoth()
    if not profile.hasDeltas():
        raise MissingConditioningEvent("y_hat=1,y=1 within a group")
    g1, g2 = profile.g1, profile.g2
    d1, d2 = profile.delta1, profile.delta2
    den = 1.0 - d1 - d2
    if abs(den) <= threshold:
        raise DegenerateDeltas("|1-delta1-delta2|=%g <= %g"
                               % (abs(den), threshold))
    s_r = rates.s / rates.r
    r_s = rates.r / rates.s
    term_a = alpha_hat * (s_r * g1 + 1.0 - g2) * (1.0 - d1 + r_s * d2)
    term_b = beta_hat * (1.0 - g1 + r_s * g2) * (1.0 + s_r * d1 - d2)
    return (term_a - term_b) / den

#====================================================================
#diagnostics

@enforce_types
def ciViolation(table: JointTable) -> float:
    """max over populated (y,a) cells and over (y_hat, a_hat) of
    |P(y_hat, a_hat | y, a) - P(y_hat | y, a) P(a_hat | y, a)|.
    Zero iff y_hat and a_hat are independent given (y, a)."""
    worst: Number = 0
    for y, a in itertools.product((0, 1), repeat=2):
        given = {'y': y, 'a': a}
        if table.mass(**given) == 0:
            continue
        for yh, ah in itertools.product((0, 1), repeat=2):
            joint = table.conditional({'y_hat': yh, 'a_hat': ah}, given)
            prod = table.conditional({'y_hat': yh}, given) * \
                table.conditional({'a_hat': ah}, given)
            worst = max(worst, abs(joint - prod))
    return float(worst)
