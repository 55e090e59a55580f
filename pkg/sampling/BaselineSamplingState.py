import logging
log = logging.getLogger('baselinestate')

from enforce_typing import enforce_types
import numpy

from core.JointTable import JointTable
from engine.SamplingStrategy import SamplingStrategy
from engine.SamplingTrace import SamplingTrace
from sampling.oracles import OracleBase
from sampling.PoolSamplingState import GENERAL, PoolSamplingState

#sampling frames
ALL_RECORDS, POSITIVES = 'all', 'positives'

@enforce_types
class BaselineSamplingState(PoolSamplingState):
    """Reveal every record of each uniform batch of b, drawn from all
    records or from the y=1 records only. r, s are re-estimated on the
    labeled set after every batch."""

    def __init__(self, pool: list, oracle: OracleBase,
                 ss: SamplingStrategy, trace: SamplingTrace,
                 sampling_frame: str = POSITIVES,
                 estimator: str = GENERAL):
        assert sampling_frame in (ALL_RECORDS, POSITIVES), sampling_frame
        super().__init__(pool, oracle, ss, trace, estimator)
        if sampling_frame == POSITIVES:
            self._frame = numpy.flatnonzero(self.cols.y == 1)
        else:
            self._frame = numpy.arange(len(self.cols))
        self.sampling_frame = sampling_frame

    def frame(self) -> numpy.ndarray:
        return self._frame

    def afterReveal(self, table: JointTable, changes: dict) -> None:
        rates = self.ratesFrom(table)
        if rates is not None:
            self.r, self.s = rates.r, rates.s
