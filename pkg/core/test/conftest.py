#conftest.py for core/test

from enforce_typing import enforce_types
import numpy
import pytest

from core.PredictionRecord import PredictionRecord

#(y, a, y_hat, a_hat) of the six equal-mass rows where the Bayes-optimal
# attribute classifier turns a zero-bias f into a naive estimate of one
COUNTEREXAMPLE_CELLS = [
    (1, 1, 0, 0),
    (1, 1, 1, 1),
    (1, 0, 1, 1),
    (1, 0, 0, 0),
    (0, 1, 1, 1),
    (0, 0, 0, 0),
]

@pytest.fixture
def counterexample_records() -> list:
    return cellRecords(COUNTEREXAMPLE_CELLS)

@pytest.fixture
def perfect_proxy_records() -> list:
    return randomRecords(n=2000, seed=3, attribute_noise=0.0)

@enforce_types
def cellRecords(cells: list) -> list:
    return [PredictionRecord("c%d" % i, bool(y), bool(yh),
                             a_hat=bool(ah), a=bool(a))
            for i, (y, a, yh, ah) in enumerate(cells)]

@enforce_types
def randomRecords(n: int, seed: int, attribute_noise: float = 0.2) -> list:
    """Loosely structured random records; a_hat flips a with probability
    attribute_noise, y_hat leans toward y"""
    rng = numpy.random.default_rng(seed)
    y = rng.random(n) < 0.6
    a = rng.random(n) < 0.4
    y_hat = numpy.where(rng.random(n) < 0.75, y, ~y)
    y_hat = numpy.where(a & (rng.random(n) < 0.2), ~y_hat, y_hat)
    a_hat = numpy.where(rng.random(n) < attribute_noise, ~a, a)
    score = numpy.where(a_hat, 0.5 + rng.random(n) / 2.0,
                        0.5 - rng.random(n) / 2.0)
    return [PredictionRecord("r%05d" % i, bool(y[i]), bool(y_hat[i]),
                             a_hat=bool(a_hat[i]), a=bool(a[i]),
                             score=float(score[i]))
            for i in range(n)]

@enforce_types
def randomProbCells(rng, n_tables: int) -> list:
    """Random 2x2x2x2 probability arrays"""
    return [rng.dirichlet(numpy.ones(16)).reshape(2, 2, 2, 2)
            for _ in range(n_tables)]
