"""Bias estimates that use revealed true attributes directly: the direct
estimate on a labeled sample, the plug-in estimate on a partly revealed
pool, and percentile bootstrap intervals for either."""
import logging
log = logging.getLogger('estimates')

from enforce_typing import enforce_types
import numpy
from tqdm import tqdm
import typing

from core import estimators
from core.errors import EmptyInput, EmptyPredictedGroup, InvalidParams, \
    MissingField, ProxyBiasError
from core.JointTable import buildJointTable
from core.PredictionRecord import RecordColumns
from util.constants import TRUE_A

@enforce_types
def directEstimation(labeled: list) -> float:
    """|alpha - beta| from labeled records alone. Raises MissingGroup
    unless both (y=1, a=1) and (y=1, a=0) are present."""
    table = buildJointTable(labeled, TRUE_A)
    return abs(estimators.trueBias(table))

@enforce_types
def plugInBias(pool: list, revealed) -> float:
    """
    @description
      Signed alpha - beta over the pool, using the true attribute for
      revealed ids and the predicted one for the rest.

    @arguments
      pool -- list of PredictionRecord; revealed ones must carry a
      revealed -- set (or list) of ids whose true attribute is known

    @return
      signed estimate; raises EmptyPredictedGroup if either group of
      y=1 records is empty
    """
    if not pool:
        raise EmptyInput("empty pool")
    revealed = set(revealed)
    cols = RecordColumns(pool)
    known = numpy.fromiter((id_ in revealed for id_ in cols.ids),
                           dtype=bool, count=len(cols))
    _requireWhere(cols, known & (cols.a < 0), 'a')
    _requireWhere(cols, ~known & (cols.a_hat < 0), 'a_hat')
    a_eff = numpy.where(known, cols.a, cols.a_hat)
    return plugInFromColumns(cols.y, cols.y_hat, a_eff)

def _requireWhere(cols: RecordColumns, bad: numpy.ndarray, field: str) -> None:
    if bad.any():
        raise MissingField(cols.ids[int(numpy.flatnonzero(bad)[0])], field)

@enforce_types
def plugInFromColumns(y: numpy.ndarray, y_hat: numpy.ndarray,
                      a_eff: numpy.ndarray) -> float:
    """alpha - beta with a_eff standing in for the attribute"""
    pos = y == 1
    in1, in0 = pos & (a_eff == 1), pos & (a_eff == 0)
    if not in1.any() or not in0.any():
        raise EmptyPredictedGroup("a y=1 group is empty under the "
                                  "plug-in attributes")
    return float(y_hat[in1].mean() - y_hat[in0].mean())

@enforce_types
def bootstrapInterval(records: list, estimator, n_boot: int = 1000,
                      level: float = 0.95, seed: int = 0,
                      progress: bool = False) -> typing.Tuple[float, float]:
    """
    @description
      Percentile bootstrap interval of `estimator(records)`.
      Replicates where the estimator raises a ProxyBiasError (an empty
      group, say) are dropped.

    @arguments
      records -- list of PredictionRecord
      estimator -- callable taking a record list, returning a float
      n_boot -- number of resamples
      level -- coverage in (0, 1)

    @return
      (lo, hi)
    """
    if n_boot < 1:
        raise InvalidParams("n_boot must be >= 1, got %d" % n_boot)
    if not 0.0 < level < 1.0:
        raise InvalidParams("level must be in (0,1), got %g" % level)
    if not records:
        raise EmptyInput("no records to resample")
    rng = numpy.random.default_rng(seed)
    n = len(records)
    values = []
    for _ in tqdm(range(n_boot), disable=not progress):
        idx = rng.integers(0, n, size=n)
        try:
            values.append(estimator([records[i] for i in idx]))
        except ProxyBiasError:
            continue
    if not values:
        raise EmptyInput("no bootstrap replicate could be estimated")
    if len(values) < n_boot:
        log.warning("bootstrap: %d of %d replicates failed",
                    n_boot - len(values), n_boot)
    tail = 100.0 * (1.0 - level) / 2.0
    lo, hi = numpy.percentile(values, [tail, 100.0 - tail])
    return float(lo), float(hi)
