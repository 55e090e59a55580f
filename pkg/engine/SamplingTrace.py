import logging
log = logging.getLogger('trace')

from enforce_typing import enforce_types
import math
import pandas as pd
import typing

from util.constants import SAFETY

#terminal reasons
CONVERGED = 'converged'
BUDGET_EXHAUSTED = 'budget exhausted'
POOL_EXHAUSTED = 'pool exhausted'
MAX_ITERS = 'max iters'
TARGET_REACHED = 'target reached'
REASONS = (CONVERGED, BUDGET_EXHAUSTED, POOL_EXHAUSTED, MAX_ITERS,
           TARGET_REACHED)

#one row per iteration
COLUMNS = ['iteration', 'labels_used', 'g1', 'g2', 'delta1', 'delta2',
           'r', 's', 'estimate', 'estimator', 'plug_in', 'direct']

@enforce_types
class SamplingTrace:
    """
    @description
      Per-iteration snapshots of a sampling run, plus why it ended.
      Row 0 is the initial batch.

    @attributes
      strategy_name -- 'active', 'uniform', 'positive' or 'direct'
      reason -- one of REASONS once the run is over, else None
    """

    def __init__(self, strategy_name: str):
        self.strategy_name = strategy_name
        self.reason: typing.Optional[str] = None
        self._rows: typing.List[dict] = []

    def takeStep(self, state) -> None:
        """Append the state's current snapshot"""
        row = state.snapshot()
        assert set(row) == set(COLUMNS), set(row) ^ set(COLUMNS)
        if SAFETY and self._rows:
            assert row['labels_used'] > self._rows[-1]['labels_used'], \
                "labels used must strictly increase"
        self._rows.append(row)
        log.debug("iter %d: labels=%d estimate=%s plug_in=%s",
                  row['iteration'], row['labels_used'], row['estimate'],
                  row['plug_in'])

    def setReason(self, reason: str) -> None:
        assert reason in REASONS, reason
        self.reason = reason

    def numRows(self) -> int:
        return len(self._rows)

    def rows(self) -> typing.List[dict]:
        return [dict(row) for row in self._rows]

    def last(self) -> dict:
        assert self._rows, "empty trace"
        return dict(self._rows[-1])

    def labelsUsed(self) -> typing.List[int]:
        return [row['labels_used'] for row in self._rows]

    def column(self, name: str) -> list:
        assert name in COLUMNS, name
        return [row[name] for row in self._rows]

    def toDataFrame(self) -> pd.DataFrame:
        return pd.DataFrame(self._rows, columns=COLUMNS)

    def toCsv(self, path: str) -> None:
        self.toDataFrame().to_csv(path, index=False, float_format='%.12g')

    def toDict(self) -> dict:
        """JSON-ready; nan becomes None"""
        rows = [{k: _jsonValue(v) for k, v in row.items()}
                for row in self._rows]
        return {'strategy': self.strategy_name, 'reason': self.reason,
                'iterations': len(rows), 'rows': rows}

def _jsonValue(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x

@enforce_types
def labelsToReach(trace: SamplingTrace, reference: float, tolerance: float,
                  field: str = 'plug_in') -> typing.Optional[int]:
    """Labels used at the first row whose `field` is within `tolerance`
    of `reference`, or None if no row is"""
    for row in trace.rows():
        value = row[field]
        if value == value and abs(value - reference) < tolerance:
            return row['labels_used']
    return None
