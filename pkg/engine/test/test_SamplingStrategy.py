from enforce_typing import enforce_types
import pytest

from core.errors import InvalidParams
from engine.SamplingStrategy import SamplingStrategy, SamplingTarget
from util.constants import DEFAULT_BATCH_SIZE, DEFAULT_EPSILON, \
    DEFAULT_LABELS_PER_ITER, DEFAULT_MAX_ITERS

@enforce_types
def testDefaults():
    ss = SamplingStrategy()
    assert ss.b == DEFAULT_BATCH_SIZE
    assert ss.w == DEFAULT_LABELS_PER_ITER
    assert ss.epsilon == DEFAULT_EPSILON
    assert ss.max_iters == DEFAULT_MAX_ITERS
    assert ss.budget is None
    assert ss.seed == 0
    assert ss.stop_on_convergence
    assert ss.target is None
    assert "SamplingStrategy" in str(ss)

@enforce_types
def testSetters():
    ss = SamplingStrategy()
    ss.setBatchSize(400)
    ss.setLabelsPerIter(50)
    ss.setEpsilon(0.001)
    ss.setMaxIters(0)
    ss.setBudget(1000)
    ss.setSeed(7)
    ss.setStopOnConvergence(False)
    assert (ss.b, ss.w, ss.epsilon, ss.max_iters) == (400, 50, 0.001, 0)
    assert (ss.budget, ss.seed, ss.stop_on_convergence) == (1000, 7, False)
    ss.setBudget(None)
    assert ss.budget is None

@enforce_types
def testBadValues():
    with pytest.raises(InvalidParams):
        SamplingStrategy(b=0)
    with pytest.raises(InvalidParams):
        SamplingStrategy(w=0)
    with pytest.raises(InvalidParams):
        SamplingStrategy(epsilon=0.0)
    with pytest.raises(InvalidParams):
        SamplingStrategy(max_iters=-1)
    with pytest.raises(InvalidParams):
        SamplingStrategy(budget=-5)
    with pytest.raises(TypeError):
        SamplingStrategy(epsilon=1)

@enforce_types
def testRequireActive():
    SamplingStrategy(b=100, w=100).requireActive()
    SamplingStrategy(b=400, w=100).requireActive()
    with pytest.raises(InvalidParams):
        SamplingStrategy(b=50, w=100).requireActive()

@enforce_types
def testTarget():
    target = SamplingTarget(0.2, 0.02)
    assert target.field == 'plug_in'
    assert target.isReached({'plug_in': 0.21})
    assert target.isReached({'plug_in': 0.185})
    assert not target.isReached({'plug_in': 0.23})
    assert not target.isReached({'plug_in': -0.2})
    assert not target.isReached({'plug_in': float('nan')})
    assert not target.isReached({'plug_in': None})

    on_estimate = SamplingTarget(-0.1, 0.05, 'estimate')
    assert on_estimate.isReached({'estimate': -0.12, 'plug_in': 0.9})

    ss = SamplingStrategy()
    ss.setTarget(target)
    assert ss.target is target

@enforce_types
def testBadTarget():
    with pytest.raises(InvalidParams):
        SamplingTarget(0.2, 0.0)
    with pytest.raises(InvalidParams):
        SamplingTarget(0.2, 0.1, 'g1')
