#conftest.py for sampling/test

from enforce_typing import enforce_types
import pytest

from core.PredictionRecord import PredictionRecord
from simulate.generator import sampleRecords
from simulate.SimParams import SimParams

@pytest.fixture
def sim_pool() -> list:
    return sampleRecords(SimParams(seed=11), 3000)

@pytest.fixture
def perfect_pool() -> list:
    """a_hat is always right"""
    return sampleRecords(SimParams(g1=0.0, g2=0.0, seed=12), 3000)

@pytest.fixture
def positives_pool(sim_pool) -> list:
    return [rec for rec in sim_pool if rec.y]

@enforce_types
def degenerateDeltaPool() -> list:
    """All y=1. Every y_hat=1 record has a_hat=1, so delta1=1, delta2=0."""
    recs = []
    for i, (a, y_hat, a_hat) in enumerate([(1, 1, 1), (0, 1, 1),
                                           (1, 0, 0), (0, 0, 0)] * 10):
        recs.append(PredictionRecord("d%03d" % i, True, bool(y_hat),
                                     a_hat=bool(a_hat), a=bool(a),
                                     score=0.9 if a_hat else 0.1))
    return recs

@enforce_types
def _positiveRecords(prefix: str, cells: list) -> list:
    """y=1 records from (a, y_hat, a_hat) cells, ten of each"""
    return [PredictionRecord("%s%03d" % (prefix, i), True, bool(y_hat),
                             a_hat=bool(a_hat), a=bool(a),
                             score=0.8 if a_hat else 0.2)
            for i, (a, y_hat, a_hat) in enumerate(cells * 10)]

@enforce_types
def noFlaggedNegativesPool() -> list:
    """All y=1, and no record has a=0 with y_hat=1, so delta1 has an
    empty conditioning event. g1 = g2 = 0.5, delta2 = 0."""
    return _positiveRecords("u", [(1, 1, 1), (1, 0, 0), (0, 0, 0),
                                  (0, 0, 1)])

@enforce_types
def singleGroupPool() -> list:
    """All y=1 and a=1, with both a_hat values present"""
    return _positiveRecords("m", [(1, 1, 1), (1, 0, 0), (1, 1, 0),
                                  (1, 0, 1)])
