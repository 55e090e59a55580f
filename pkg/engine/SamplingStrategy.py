"""Strategies hold 'magic numbers' related to running the sampling engine"""
import logging
log = logging.getLogger('samplingstrategy')

from enforce_typing import enforce_types
import typing

from core.errors import InvalidParams
from util.constants import DEFAULT_BATCH_SIZE, DEFAULT_EPSILON, \
    DEFAULT_LABELS_PER_ITER, DEFAULT_MAX_ITERS
from util.strutil import StrMixin

ESTIMATE_FIELDS = ('estimate', 'plug_in', 'direct')

@enforce_types
class SamplingTarget(StrMixin):
    """Extra stop criterion: stop once |row[field] - reference| < tolerance.
    `reference` is a signed bias."""

    def __init__(self, reference: float, tolerance: float,
                 field: str = 'plug_in'):
        if tolerance <= 0.0:
            raise InvalidParams("tolerance must be > 0, got %g" % tolerance)
        if field not in ESTIMATE_FIELDS:
            raise InvalidParams("unknown trace field '%s'" % field)
        self.reference = reference
        self.tolerance = tolerance
        self.field = field

    def isReached(self, row: dict) -> bool:
        value = row.get(self.field)
        if value is None or value != value: #nan
            return False
        return abs(value - self.reference) < self.tolerance

@enforce_types
class SamplingStrategy(StrMixin):

    def __init__(self, b: int = DEFAULT_BATCH_SIZE,
                 w: int = DEFAULT_LABELS_PER_ITER,
                 epsilon: float = DEFAULT_EPSILON,
                 max_iters: int = DEFAULT_MAX_ITERS,
                 budget: typing.Optional[int] = None,
                 seed: int = 0):
        #examples drawn per batch
        self.b = 0
        self.setBatchSize(b)

        #true attributes revealed per active-sampling iteration
        self.w = 0
        self.setLabelsPerIter(w)

        #convergence tolerance on g1, g2, delta1, delta2
        self.epsilon = 0.0
        self.setEpsilon(epsilon)

        #max sampling iterations after the initial batch
        self.max_iters = 0
        self.setMaxIters(max_iters)

        #cap on revealed attributes; None is unlimited
        self.budget: typing.Optional[int] = None
        self.setBudget(budget)

        self.seed = seed

        #does epsilon-convergence end the run? Sweeps turn this off to
        # follow a run until its target is reached.
        self.stop_on_convergence = True

        self.target: typing.Optional[SamplingTarget] = None

    def setBatchSize(self, b: int):
        if b < 1:
            raise InvalidParams("b must be >= 1, got %d" % b)
        self.b = b

    def setLabelsPerIter(self, w: int):
        if w < 1:
            raise InvalidParams("w must be >= 1, got %d" % w)
        self.w = w

    def setEpsilon(self, epsilon: float):
        if not epsilon > 0.0:
            raise InvalidParams("epsilon must be > 0, got %g" % epsilon)
        self.epsilon = epsilon

    def setMaxIters(self, max_iters: int):
        if max_iters < 0:
            raise InvalidParams("max_iters must be >= 0, got %d" % max_iters)
        self.max_iters = max_iters

    def setBudget(self, budget: typing.Optional[int]):
        if budget is not None and budget < 0:
            raise InvalidParams("budget must be >= 0, got %d" % budget)
        self.budget = budget

    def setSeed(self, seed: int):
        self.seed = seed

    def setStopOnConvergence(self, stop: bool):
        self.stop_on_convergence = stop

    def setTarget(self, target: typing.Optional[SamplingTarget]):
        self.target = target

    def requireActive(self) -> None:
        """Active sampling reveals w of every b drawn"""
        if self.w > self.b:
            raise InvalidParams("need b >= w, got b=%d w=%d"
                                % (self.b, self.w))
