import logging
log = logging.getLogger('activestate')

from enforce_typing import enforce_types
import numpy

from core.errors import MissingField
from core.JointTable import JointTable
from engine.SamplingStrategy import SamplingStrategy
from engine.SamplingTrace import CONVERGED, SamplingTrace
from sampling.oracles import OracleBase
from sampling.PoolSamplingState import GENERAL, PoolSamplingState

@enforce_types
class ActiveSamplingState(PoolSamplingState):
    """
    @description
      Uncertainty-driven active sampling over the y=1 records.

      Tick 0 reveals b positives drawn uniformly; they fix r, s for the
      whole run and nothing else. g1, g2, delta1, delta2 start at 0 and
      are first measured at tick 1, on everything labeled so far, so the
      first convergence test compares against 0. Each later tick draws b
      unlabeled positives uniformly, sorts them by |score - 0.5|
      ascending (ties by id), and reveals the first w. The run converges
      once all four quantities are defined and moved by at most epsilon.
    """

    def __init__(self, pool: list, oracle: OracleBase,
                 ss: SamplingStrategy, trace: SamplingTrace):
        ss.requireActive()
        super().__init__(pool, oracle, ss, trace, GENERAL)
        self._positives = numpy.flatnonzero(self.cols.y == 1)
        no_score = self._positives[numpy.isnan(self.cols.score[self._positives])]
        if no_score.size > 0:
            raise MissingField(self.cols.ids[int(no_score[0])], 'score')
        self._uncertainty = numpy.abs(self.cols.score - 0.5)

    def frame(self) -> numpy.ndarray:
        return self._positives

    def measuresQuantities(self) -> bool:
        return self.tick > 0

    def choose(self, batch: numpy.ndarray) -> numpy.ndarray:
        if self.tick == 0:
            return batch
        order = sorted(batch, key=lambda i: (self._uncertainty[i],
                                             self.cols.ids[i]))
        return numpy.array(order[:self.ss.w], dtype=batch.dtype)

    def afterReveal(self, table: JointTable, changes: dict) -> None:
        if self.tick == 0:
            rates = self.ratesFrom(table)
            assert rates is not None #the initial batch is all y=1
            self.r, self.s = rates.r, rates.s
            if rates.missing_group:
                log.warning("initial batch holds one group only "
                            "(r=%g, s=%g)", self.r, self.s)
            return

        if not self.ss.stop_on_convergence:
            return
        if all(c is not None and c <= self.ss.epsilon
               for c in changes.values()):
            self.stop(CONVERGED)
