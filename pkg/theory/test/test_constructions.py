from enforce_typing import enforce_types
from fractions import Fraction
import pandas as pd
import pytest

from core import estimators
from core.errors import BayesOptimalInput, DegenerateDeltas, InvalidParams
from theory.constructions import FAIR, bayesCounterexample, \
    bayesCounterexampleRows, bayesOptimalAttribute, indistinguishablePair, \
    randomBase

#==================================================================
#Bayes-optimal counterexample
@enforce_types
def testCounterexampleRows():
    rows = bayesCounterexampleRows()
    assert len(rows) == 6
    assert list(rows.columns) == ['x1', 'x2', 'a', 'y', 'y_hat', 'a_hat']
    assert (rows['y_hat'] == rows['x2']).all()

@enforce_types
def testBayesOptimalAttributeMatchesRows():
    rows = bayesCounterexampleRows()
    assert list(bayesOptimalAttribute(rows)) == list(rows['a_hat'])

    #P(a=1 | x) = 1/2 is ambiguous
    tied = pd.DataFrame({'x1': [0, 0, 1], 'x2': [0, 0, 1], 'a': [1, 0, 1]})
    assert list(bayesOptimalAttribute(tied)) == [-1, -1, 1]

@enforce_types
def testCounterexampleIsExact():
    table = bayesCounterexample()
    assert table.isCounts()
    assert table.total() == 6
    assert table.conditional({'y_hat': 1}, {'y': 1, 'a': 1}) == Fraction(1, 2)
    assert table.conditional({'y_hat': 1}, {'y': 1, 'a': 0}) == Fraction(1, 2)
    assert table.conditional({'y_hat': 1}, {'y': 1, 'a_hat': 1}) == 1
    assert table.conditional({'y_hat': 1}, {'y': 1, 'a_hat': 0}) == 0
    assert estimators.trueBias(table) == 0.0
    assert estimators.naiveBias(table) == 1.0

@enforce_types
def testCounterexampleDiagnostics():
    table = bayesCounterexample()
    assert estimators.conditionalErrors(table) == (0.5, 0.5)
    assert estimators.deltas(table) == (1.0, 0.0)
    assert estimators.ciViolation(table) == 0.25
    rts = estimators.rates(table)
    assert (rts.r, rts.s) == (pytest.approx(1.0 / 3.0),
                              pytest.approx(1.0 / 3.0))
    alpha_hat, beta_hat = estimators.naiveComponents(table)
    with pytest.raises(DegenerateDeltas):
        estimators.generalCorrectedBias(alpha_hat, beta_hat,
                                        estimators.errorProfile(table), rts)

#==================================================================
#indistinguishable pair
def _biases(pair) -> tuple:
    return (estimators.trueBias(pair.q1.toJointTable()),
            estimators.trueBias(pair.q2.toJointTable()))

def _maxDiff(d1: dict, d2: dict) -> float:
    keys = set(d1) | set(d2)
    return max(abs(d1.get(k, 0.0) - d2.get(k, 0.0)) for k in keys)

@enforce_types
def testPairOnFourPoints():
    base = {(0, 1): 0.25, (1, 1): 0.25, (2, 0): 0.25, (3, 0): 0.25}
    f = {0: 1, 1: 0, 2: 0, 3: 0} #wrong only at x=1
    pair = indistinguishablePair(base, f)
    assert _biases(pair) == (0.0, 1.0)
    assert _maxDiff(pair.q1.marginalXY(), pair.q2.marginalXY()) <= 1e-12
    #x=0 and x=1 carry no y=0 mass to rebalance with
    assert not pair.marginals_match

@enforce_types
def testPairRejectsBayesOptimal():
    base = {(0, 1): 0.5, (1, 0): 0.5}
    with pytest.raises(BayesOptimalInput):
        indistinguishablePair(base, {0: 1, 1: 0})
    with pytest.raises(BayesOptimalInput):
        indistinguishablePair(base, {0: 0, 1: 0})

@enforce_types
def testPairBadInputs():
    base = {(0, 1): 0.5, (1, 1): 0.5}
    with pytest.raises(InvalidParams):
        indistinguishablePair(base, {0: 1})
    with pytest.raises(InvalidParams):
        indistinguishablePair(base, {0: 1, 1: 0}, mode='foo')
    with pytest.raises(InvalidParams):
        randomBase(1, 0)

@enforce_types
def testPairsOnRandomBases():
    for seed in range(50):
        base, f, h = randomBase(3 + seed % 6, seed)
        pair = indistinguishablePair(base, f, h)
        assert pair.marginals_match
        assert _biases(pair) == (0.0, 1.0)
        assert _maxDiff(pair.q1.marginalXY(), pair.q2.marginalXY()) <= 1e-12
        assert _maxDiff(pair.q1.marginalXA(), pair.q2.marginalXA()) <= 1e-12
        assert sum(pair.q1.masses.values()) == pytest.approx(1.0)

@enforce_types
def testPairLooksTheSameThroughAnyAttributeClassifier():
    for seed in range(10):
        base, f, h = randomBase(6, 100 + seed)
        pair = indistinguishablePair(base, f, h)
        t1, t2 = pair.q1.toJointTable(), pair.q2.toJointTable()
        assert estimators.naiveBias(t1) == \
            pytest.approx(estimators.naiveBias(t2), abs=1e-12)

@enforce_types
def testPairFairMode():
    base, f, h = randomBase(5, 7)
    pair = indistinguishablePair(base, f, h, mode=FAIR)
    assert _biases(pair) == (0.0, 1.0)
    assert not pair.marginals_match
    assert _maxDiff(pair.q1.marginalXY(), pair.q2.marginalXY()) <= 1e-12

@enforce_types
def testPairWithoutAttributeClassifier():
    base, f, _ = randomBase(4, 1)
    table = indistinguishablePair(base, f).q1.toJointTable()
    assert not table.has_a_hat
    assert estimators.trueBias(table) == 0.0

@enforce_types
def testRandomBaseDeterministic():
    assert randomBase(5, 42) == randomBase(5, 42)
    assert randomBase(5, 42) != randomBase(5, 43)
