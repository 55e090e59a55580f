from util.constants import *

def testSafety():
    assert isinstance(SAFETY, bool)

def testEstimationSettings():
    assert 0.0 < CONSISTENCY_TOL < DEGENERATE_THRESHOLD < 1.0

def testSamplingSettings():
    assert DEFAULT_BATCH_SIZE >= DEFAULT_LABELS_PER_ITER > 0
    assert 0.0 < DEFAULT_EPSILON < 1.0
    assert DEFAULT_MAX_ITERS > 0
    assert 0.0 < POLL_INTERVAL < POLL_TIMEOUT

def testGridStep():
    assert 0.0 < DEFAULT_GRID_STEP < 1.0

def testAxes():
    assert AXES == ('y', 'a', 'y_hat', 'a_hat')

def testAttributeSources():
    assert len(set(ATTRIBUTE_SOURCES)) == 3
    assert TRUE_A in ATTRIBUTE_SOURCES
    assert PREDICTED_A in ATTRIBUTE_SOURCES
    assert BOTH in ATTRIBUTE_SOURCES
