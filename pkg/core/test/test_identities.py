"""Algebraic identities of the estimators, checked on large seeded draws
and with hypothesis."""
from enforce_typing import enforce_types
from hypothesis import assume, given, settings, strategies as st
import numpy
import pytest

from core import estimators
from core.ErrorProfile import ErrorProfile
from core.JointTable import JointTable
from core.Rates import Rates
from core.test.conftest import randomProbCells

N_DRAWS = 100000

def _drawRates(rng, n: int):
    """n (r, s) pairs in (0,1) with r + s <= 1"""
    r = rng.uniform(0.0, 1.0, n)
    s = rng.uniform(0.0, 1.0, n) * (1.0 - r)
    keep = (r > 0.0) & (s > 0.0)
    return r[keep], s[keep]

#==================================================================
#gamma range and the forward correction identity
@enforce_types
def testGammaRange():
    rng = numpy.random.default_rng(2024)
    r, s = _drawRates(rng, N_DRAWS)
    g1, g2 = rng.random(len(r)), rng.random(len(r))
    gamma = estimators.distortionFactors(g1, g2, r, s)
    assert len(gamma) > 0.99 * N_DRAWS
    assert not numpy.isnan(gamma).any()
    assert (gamma >= 0.0).all() and (gamma <= 1.0).all()

@enforce_types
def testForwardIdentityAndUnderestimation():
    rng = numpy.random.default_rng(99)
    r, s = _drawRates(rng, N_DRAWS)
    n = len(r)
    alpha, beta = rng.random(n), rng.random(n)
    g1, g2 = rng.random(n), rng.random(n)

    alpha_hat, beta_hat = estimators.forwardNoisyEstimatesArray(
        alpha, beta, r, s, g1, g2)
    gamma = estimators.distortionFactors(g1, g2, r, s)

    naive_gap = numpy.abs(alpha_hat - beta_hat)
    true_gap = numpy.abs(alpha - beta)
    assert numpy.max(numpy.abs(naive_gap - gamma * true_gap)) <= 1e-12
    assert (naive_gap <= true_gap + 1e-12).all()

#==================================================================
#assumption-free inversion
def _nondegenerate(table: JointTable) -> bool:
    events = [{'y': 1, 'a': 0}, {'y': 1, 'a': 1},
              {'y': 1, 'a_hat': 0}, {'y': 1, 'a_hat': 1},
              {'y': 1, 'a': 0, 'y_hat': 1}, {'y': 1, 'a': 1, 'y_hat': 1}]
    if min(table.mass(**e) for e in events) < 0.01:
        return False
    d1, d2 = estimators.deltas(table)
    return abs(1.0 - d1 - d2) >= 0.05

def _bruteForceTrueBias(cells: numpy.ndarray) -> float:
    #cells[y, a, y_hat, a_hat]
    alpha = cells[1, 1, 1, :].sum() / cells[1, 1, :, :].sum()
    beta = cells[1, 0, 1, :].sum() / cells[1, 0, :, :].sum()
    return float(alpha - beta)

def _generalFromTable(table: JointTable) -> float:
    alpha_hat, beta_hat = estimators.naiveComponents(table)
    return estimators.generalCorrectedBias(
        alpha_hat, beta_hat, estimators.errorProfile(table),
        estimators.rates(table))

@enforce_types
def testGeneralInversionIsAnIdentity():
    rng = numpy.random.default_rng(31)
    n_checked = 0
    while n_checked < 1000:
        cells = randomProbCells(rng, 1)[0]
        table = JointTable.fromProbs(cells)
        if not _nondegenerate(table):
            continue
        true = _bruteForceTrueBias(cells)
        assert estimators.trueBias(table) == pytest.approx(true, abs=1e-12)
        assert _generalFromTable(table) == pytest.approx(true, abs=1e-9)
        n_checked += 1

#==================================================================
#hypothesis properties
probs = st.floats(min_value=0.0, max_value=1.0)
open_probs = st.floats(min_value=0.01, max_value=0.99)

@settings(max_examples=300, deadline=None)
@given(g1=probs, g2=probs, r=open_probs, s=open_probs)
def testGammaInUnitInterval(g1, g2, r, s):
    assume(r + s <= 1.0)
    assume(s * (1.0 - g1) + r * g2 > 1e-9)
    assume(r * (1.0 - g2) + s * g1 > 1e-9)
    gamma = estimators.distortionFactor(g1, g2, Rates(r, s))
    assert 0.0 <= gamma <= 1.0

@settings(max_examples=300, deadline=None)
@given(alpha=probs, beta=probs, g1=st.floats(0.0, 0.95),
       g2=st.floats(0.0, 0.95), r=open_probs, s=open_probs)
def testNaiveGapNeverExceedsTrueGap(alpha, beta, g1, g2, r, s):
    assume(r + s <= 1.0)
    alpha_hat, beta_hat = estimators.forwardNoisyEstimates(
        alpha, beta, Rates(r, s), g1, g2)
    assert abs(alpha_hat - beta_hat) <= abs(alpha - beta) + 1e-12

@settings(max_examples=300, deadline=None)
@given(alpha=probs, beta=probs, g1=st.floats(0.0, 0.45),
       g2=st.floats(0.0, 0.45), r=open_probs, s=open_probs)
def testCorrectionInvertsForwardMap(alpha, beta, g1, g2, r, s):
    assume(r + s <= 1.0)
    rts = Rates(r, s)
    alpha_hat, beta_hat = estimators.forwardNoisyEstimates(
        alpha, beta, rts, g1, g2)
    gamma = estimators.distortionFactor(g1, g2, rts)
    corrected, clamped = estimators.correctedBias(abs(alpha_hat - beta_hat),
                                                  gamma)
    assert corrected == pytest.approx(abs(alpha - beta), abs=1e-9)

@settings(max_examples=200, deadline=None)
@given(weights=st.lists(st.floats(min_value=0.05, max_value=1.0),
                        min_size=16, max_size=16))
def testGeneralInversionOnArbitraryTables(weights):
    cells = numpy.array(weights).reshape(2, 2, 2, 2)
    table = JointTable.fromProbs(cells / cells.sum())
    d1, d2 = estimators.deltas(table)
    assume(abs(1.0 - d1 - d2) >= 0.05)
    assert _generalFromTable(table) == \
        pytest.approx(estimators.trueBias(table), abs=1e-9)

@settings(max_examples=200, deadline=None)
@given(alpha_hat=probs, beta_hat=probs, r=st.floats(0.05, 0.5),
       s=st.floats(0.05, 0.5))
def testGeneralInversionReducesToNaiveAtZeroErrors(alpha_hat, beta_hat, r, s):
    profile = ErrorProfile(0.0, 0.0, 0.0, 0.0)
    est = estimators.generalCorrectedBias(alpha_hat, beta_hat, profile,
                                          Rates(r, s))
    assert est == pytest.approx(alpha_hat - beta_hat, abs=1e-12)
