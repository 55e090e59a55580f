from enforce_typing import enforce_types
import pytest

from core.errors import InvalidParams
from simulate.SimParams import NegRates, SimParams

@enforce_types
def testDefaults():
    params = SimParams()
    assert (params.alpha, params.beta) == (0.7, 0.5)
    assert (params.r, params.s, params.g1, params.g2) == (0.25, 0.25, 0.2, 0.3)
    assert params.coupling == 0.0
    assert params.trueBias() == pytest.approx(0.2)

    neg = params.neg_rates
    assert params.neg_rates_default
    assert (neg.alpha, neg.beta) == (pytest.approx(0.3), 0.5)
    assert (neg.g1, neg.g2, neg.p_a1) == (0.2, 0.3, 0.5)

@enforce_types
def testValidation():
    with pytest.raises(InvalidParams):
        SimParams(alpha=1.5)
    with pytest.raises(InvalidParams):
        SimParams(g2=-0.1)
    with pytest.raises(InvalidParams):
        SimParams(r=0.6, s=0.5)
    with pytest.raises(InvalidParams):
        SimParams(coupling=1.01)
    with pytest.raises(InvalidParams):
        SimParams(score_noise=-1.0)
    with pytest.raises(InvalidParams):
        NegRates(0.1, 0.1, 0.1, 0.1, 2.0)
    with pytest.raises(TypeError):
        SimParams(alpha=1) #ints are not floats

@enforce_types
def testZeroPositives():
    params = SimParams(r=0.0, s=0.0)
    assert params.neg_rates.p_a1 == 0.5

@enforce_types
def testWithSeed():
    params = SimParams(coupling=0.5, seed=1)
    other = params.withSeed(7)
    assert other.seed == 7 and params.seed == 1
    assert other.coupling == 0.5
    assert other.neg_rates_default

    custom = SimParams(neg_rates=NegRates(0.1, 0.2, 0.0, 0.0, 0.3))
    assert custom.withSeed(3).neg_rates.p_a1 == 0.3

@enforce_types
def testDictRoundTrip():
    params = SimParams(alpha=0.9, coupling=-0.4, seed=12,
                       neg_rates=NegRates(0.1, 0.2, 0.05, 0.0, 0.3))
    again = SimParams.fromDict(params.toDict())
    assert again.toDict() == params.toDict()

    #json-style ints are accepted
    assert SimParams.fromDict({'alpha': 1, 'seed': 4}).alpha == 1.0

    #default y=0 slice follows the new positive-class rates
    d = SimParams().toDict()
    d['alpha'] = 0.9
    assert SimParams.fromDict(d).neg_rates.alpha == pytest.approx(0.1)

@enforce_types
def testFromDictRejectsUnknownKeys():
    with pytest.raises(InvalidParams):
        SimParams.fromDict({'alhpa': 0.5})
